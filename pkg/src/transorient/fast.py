"""Compiled engine: the same pipeline as ``orientation.transitive_orientation``
run through the numba kernels in ``_kernels``.

Results (order, source, per-phase counters) are identical to the Python
engine; the first call in a fresh environment pays the compilation cost,
later calls load it from numba's on-disk cache.
"""

from __future__ import annotations

from itertools import chain

import numpy as np

from . import _kernels as K
from .graph import Graph, GraphError, orientation_from_order
from .orientation import PHASES, LinearExtensionResult, NotPrimeError, source_vertex
from .slices import SliceError


def to_csr(g: Graph) -> tuple[np.ndarray, np.ndarray]:
    deg = np.fromiter((len(a) for a in g.adjacency), dtype=np.int64, count=g.n)
    indptr = np.zeros(g.n + 1, dtype=np.int64)
    np.cumsum(deg, out=indptr[1:])
    indices = np.fromiter(chain.from_iterable(g.adjacency), dtype=np.int64, count=int(indptr[-1]))
    return indptr, indices


def orient_arrays(indptr: np.ndarray, indices: np.ndarray, *, source: int | None = None,
                  source_start: int = 0) -> tuple[np.ndarray, dict[str, int], int]:
    """Run the compiled pipeline on a CSR graph.

    Returns (order, counters, source).  Input must be a simple, symmetric,
    connected graph with at least two vertices.
    """
    n = len(indptr) - 1
    m = len(indices) // 2
    if not K.is_connected(indptr, indices, n):
        raise GraphError("input graph is disconnected")
    src = -1 if source is None else int(source)
    if not -1 <= src < n or not 0 <= source_start < n:
        raise GraphError("source vertex not in graph")
    order, counters, x, err = K.pipeline(indptr, indices, n, m, source_start, src)
    if err == K.ERR_NOT_PRIME:
        raise NotPrimeError("input not prime: the source search ended with a non-trivial module")
    if err == K.ERR_SLICE_COVER:
        raise SliceError("slice labels are inconsistent with the graph")
    if err == K.ERR_COCOMP:
        raise SliceError("first subslice of some slice is not the neighbourhood of its initial vertex")
    return order, dict(zip(PHASES, counters.tolist())), int(x)


def transitive_orientation_fast(g: Graph, *, source: int | None = None,
                                source_start: int = 0) -> LinearExtensionResult:
    """Drop-in replacement for ``transitive_orientation`` without debug/trace."""
    if g.n == 0:
        raise GraphError("empty graph")
    if g.n == 1:
        from .orientation import transitive_orientation

        return transitive_orientation(g, source=source, source_start=source_start)
    indptr, indices = to_csr(g)
    try:
        order, counters, x = orient_arrays(indptr, indices, source=source, source_start=source_start)
    except NotPrimeError:
        # rerun the reference for its message naming the module
        source_vertex(g, source_start)
        raise
    ordl = order.tolist()
    return LinearExtensionResult(ordl, orientation_from_order(g, ordl), counters, source=x)
