"""Source vertex, linear extension and the full transitive-orientation pipeline."""

from __future__ import annotations

import heapq
from collections import deque
from dataclasses import dataclass, field
from typing import Sequence

from .graph import Graph, GraphError, Orientation, orientation_from_order
from .lbfs import LbfsResult, lbfs_from
from .partition import OrderedPartition
from .slices import SliceAnnotations, SliceTree, analyze, iter_segments


class OrientationError(ValueError):
    """The input violated a precondition the algorithm relies on
    (prime, comparability); raised by the debug checks."""


class NotPrimeError(OrientationError):
    pass


PHASES = (
    "source",
    "lbfs",
    "slice_tree",
    "active_edges",
    "order_connected",
    "cocomponents",
    "linear_extension",
)


@dataclass
class PipelineTrace:
    """Partition after every outer iteration, plus what each pivot did."""

    snapshots: list[list[list[int]]] = field(default_factory=list)
    pivots: list[list[dict]] = field(default_factory=list)


@dataclass
class LinearExtensionResult:
    order: list[int]
    orientation: Orientation
    counters: dict[str, int] = field(default_factory=dict)
    source: int | None = None
    trace: PipelineTrace | None = None

    @property
    def total_ops(self) -> int:
        return sum(self.counters.values())


def source_vertex(g: Graph, start: int = 0, counters: dict[str, int] | None = None) -> int:
    """Pivot every vertex outside the last class until it is a single vertex.

    For a prime comparability graph that vertex is a source (or sink) of
    some transitive orientation.  A last class that cannot be reduced to one
    vertex is a non-trivial module.
    """
    n = g.n
    if n == 0:
        raise GraphError("empty graph has no source vertex")
    if not 0 <= start < n:
        raise GraphError(f"start vertex {start} not in graph with n={n}")
    if n == 1:
        return start
    p = OrderedPartition([[start], [v for v in range(n) if v != start]])
    queue = deque([start])
    extra = 1
    while queue and p.last.size > 1:  # type: ignore[union-attr]
        z = queue.popleft()
        last = p.last
        p.pivot(z, g)
        if p.last is not last:
            # the neighbours of z went to a new last class; the rest of the
            # old one is now outside it and has never been a pivot
            leavers = p.members(last)  # type: ignore[arg-type]
            queue.extend(leavers)
            extra += len(leavers)
        extra += 1
    if counters is not None:
        counters["source"] = counters.get("source", 0) + p.ops + extra
    last = p.last
    if last.size > 1:  # type: ignore[union-attr]
        raise NotPrimeError(
            f"input not prime: {sorted(p.members(last))} is a non-trivial module"  # type: ignore[arg-type]
        )
    return last.head  # type: ignore[union-attr]


class _InitialVertexRound:
    """First round of refinement for one slice: separate the initial vertex
    ``y`` from its active neighbours, pulling co-components and pushing
    active neighbourhoods against the class of ``y``.

    Connected vertices wait outside ``P_y`` in a heap keyed by LBFS position;
    those still inside are kept in ``inside`` (block members excluded, since
    they travel with ``y``).
    """

    def __init__(self, p: OrderedPartition, ann: SliceAnnotations, i: int, y: int,
                 position: Sequence[int], log: list[dict] | None) -> None:
        self.p = p
        self.ann = ann
        self.i = i
        self.y = y
        self.position = position
        self.al: dict[int, list[int]] = ann.alpha[i]  # type: ignore[assignment]
        self.log = log
        self.ops = 0

    def run(self) -> None:
        p, y, al, pos = self.p, self.y, self.al, self.position
        ay = al.get(y, ())
        ay_set = set(ay)
        py = p.class_of(y)
        inside: dict[int, None] = {}
        heap: list[tuple[int, int]] = []
        for v in al:
            if v == y:
                continue
            if p.class_of(v) is py:
                inside[v] = None
            else:
                heap.append((pos[v], v))
        heapq.heapify(heap)
        queued = {v for _, v in heap}
        self.ops += len(al) + len(ay)
        blocked = False
        comp_of: dict[int, int] | None = None
        comps = None
        pulled: set[int] = set()

        def enqueue(v: int) -> None:
            if v not in queued:
                queued.add(v)
                heapq.heappush(heap, (pos[v], v))

        def settle(moved: list[int], before) -> None:
            nonlocal inside
            cy = p.class_of(y)
            self.ops += len(moved)
            if cy is not before:
                # y changed class: whatever stayed behind left P_y
                stay: dict[int, None] = {}
                for v in inside:
                    if p.class_of(v) is cy:
                        stay[v] = None
                    else:
                        enqueue(v)
                self.ops += len(inside)
                inside = stay
            else:
                for v in moved:
                    if v in inside:
                        del inside[v]
                        enqueue(v)
                    elif v in ay_set:
                        enqueue(v)

        while heap:
            _, z = heapq.heappop(heap)
            az = al[z]
            event = {"pivot": z}
            if z in ay_set:
                if not blocked:
                    # alpha(y) inside P_y rides along with y from now on
                    cy = p.class_of(y)
                    members = [v for v in ay if p.class_of(v) is cy]
                    p.attach_block(y, members)
                    for v in members:
                        inside.pop(v, None)
                    blocked = True
                if comp_of is None:
                    comps = self.ann.cocomponent_segments(self.i + 1)
                    comp_of = {}
                    for ci, comp in enumerate(comps):
                        for v in iter_segments(comp):
                            comp_of[v] = ci
                    self.ops += len(comp_of)
                ci = comp_of[z]
                if ci not in pulled:
                    pulled.add(ci)
                    comp = list(iter_segments(comps[ci]))  # type: ignore[index]
                    event["pull"] = comp
                    before = p.class_of(y)
                    settle(p.pivot_pull(z, before, comp), before)
            event["push"] = list(az)
            before = p.class_of(y)
            settle(p.pivot_push(z, before, az), before)
            if self.log is not None:
                event["partition"] = p.as_lists()
                self.log.append(event)
        if blocked:
            p.detach_block(y)


def _check_invariant(p: OrderedPartition, ann: SliceAnnotations, i: int,
                     adjsets: list[frozenset[int]]) -> None:
    al = ann.alpha[i] if i >= 0 else None
    if al:
        for u, nbrs in al.items():
            cu_members = None
            for v in nbrs:
                cu, cv = p.class_of(u), p.class_of(v)
                if cu is cv:
                    raise OrientationError(
                        f"input not prime/not comparability: active edge {u}-{v} of "
                        f"slice {i} not separated"
                    )
                if not adjsets[u].issuperset(p.members(cv)):
                    raise OrientationError(
                        f"input not prime/not comparability: {u} not universal to the "
                        f"class of {v} after slice {i}"
                    )
                if cu_members is None:
                    cu_members = p.members(cu)
                if not adjsets[v].issuperset(cu_members):
                    raise OrientationError(
                        f"input not prime/not comparability: {v} not universal to the "
                        f"class of {u} after slice {i}"
                    )
    nxt = ann.alpha[i + 1] if i + 1 < len(ann.alpha) else None
    if nxt:
        # no seed edge for the next slice means nothing will ever split it
        if not any(p.class_of(u) is not p.class_of(v) for u, nbrs in nxt.items() for v in nbrs):
            raise OrientationError(
                f"input not prime/not comparability: no active edge of slice {i + 1} "
                "is separated"
            )


def linear_extension(g: Graph, t: SliceTree, ann: SliceAnnotations, *,
                     debug: bool = False, trace: PipelineTrace | None = None) -> LinearExtensionResult:
    """Refine ``{x}, V - {x}`` slice by slice into a total order.

    ``t`` must come from an LBFS that starts at a source vertex ``x``.  With
    ``debug`` the consistency invariant is checked after every slice and a
    violation raises OrientationError.
    """
    n = g.n
    sigma, pos = t.sigma, t.position
    if n == 0:
        raise GraphError("empty graph")
    x = sigma[0]
    if n == 1:
        return LinearExtensionResult([x], frozenset(), {"linear_extension": 1})
    p = OrderedPartition([[x], [v for v in range(n) if v != x]])
    adjsets = g.adjacency_sets() if debug else []
    if debug:
        _check_invariant(p, ann, -1, adjsets)
    extra = 0
    for i in range(n):
        y = sigma[i]
        al = ann.alpha[i]
        log: list[dict] | None = [] if trace is not None else None
        if al:
            rnd = _InitialVertexRound(p, ann, i, y, pos, log)
            rnd.run()
            extra += rnd.ops
        p.split_out_singleton(y)
        if al:
            for z, az in al.items():
                moved = p.generalized_pivot(z, az)
                if log is not None and moved:
                    log.append({"pivot": z, "generalized": list(az), "partition": p.as_lists()})
        extra += 1
        if debug:
            _check_invariant(p, ann, i, adjsets)
        if trace is not None:
            trace.snapshots.append(p.as_lists())
            trace.pivots.append(log)  # type: ignore[arg-type]
    order = p.to_ordering()
    return LinearExtensionResult(
        order,
        orientation_from_order(g, order),
        {"linear_extension": p.ops + extra},
        source=x,
        trace=trace,
    )


def find_twins(g: Graph) -> tuple[int, int] | None:
    """Two vertices with the same open or closed neighbourhood, if any.

    Such a pair is a module of size two, so for n >= 3 it proves the graph
    is not prime.  Hashing the neighbourhoods keeps this linear.
    """
    if g.n < 3:
        return None
    seen: dict[tuple[bool, frozenset[int]], int] = {}
    for v, nb in enumerate(g.adjacency_sets()):
        for key in ((False, nb), (True, nb | {v})):
            if key in seen:
                return seen[key], v
            seen[key] = v
    return None


def transitive_orientation(g: Graph, *, debug: bool = False, trace: bool = False,
                           source: int | None = None, source_start: int = 0) -> LinearExtensionResult:
    """Source vertex, LBFS from it, slice analysis, then the linear extension.

    ``source`` skips the source search and starts the LBFS there instead;
    the caller vouches that it is a source (or sink) of some transitive
    orientation.  ``source_start`` is the vertex the search starts from.
    """
    if g.n == 0:
        raise GraphError("empty graph")
    if not g.is_connected():
        raise GraphError("input graph is disconnected")
    if debug:
        twins = find_twins(g)
        if twins is not None:
            raise NotPrimeError(f"input not prime: {sorted(twins)} is a non-trivial module")
    counters: dict[str, int] = {k: 0 for k in PHASES}
    if source is None:
        x = source_vertex(g, source_start, counters)
    elif 0 <= source < g.n:
        x = source
    else:
        raise GraphError(f"source {source} not in graph with n={g.n}")
    r: LbfsResult = lbfs_from(g, x)
    counters["lbfs"] = r.ops
    t, ann = analyze(g, r)
    for k, v in ann.ops.items():
        counters[k] = v
    res = linear_extension(g, t, ann, debug=debug, trace=PipelineTrace() if trace else None)
    counters["linear_extension"] = res.counters["linear_extension"]
    res.counters = counters
    res.source = x
    return res
