"""Slice tree, per-slice active edges and per-slice co-components of an LBFS.

Slices are numbered by the LBFS iteration that defines them: slice ``i``
(0-based) has initial vertex ``sigma[i]``.  The leaf of vertex ``v`` hangs
under slice ``position[v]``.

Member lists are never built for every slice separately.  A slice reuses the
list of its last maximal subslice when that subslice has no incident active
edges and appends copies of the other subslices, so every slice's members are
a prefix ``lst[:length]`` of some shared list.  Co-components are stored the
same way, as lists of ``(lst, start, end)`` segments.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import islice
from typing import Iterator

from .graph import Graph
from .lbfs import LbfsResult


class SliceError(ValueError):
    pass


Segment = tuple[list, int, int]


@dataclass
class SliceTree:
    sigma: tuple[int, ...]
    position: tuple[int, ...]
    labels: tuple[tuple[int, ...], ...]
    parent: list[int]
    children: list[list[int]]
    ops: int = 0

    @property
    def n(self) -> int:
        return len(self.sigma)

    def initial(self, i: int) -> int:
        return self.sigma[i]

    def label(self, i: int) -> tuple[int, ...]:
        return self.labels[self.sigma[i]]

    def subslices(self, i: int) -> list[int]:
        """Maximal subslices of slice ``i`` in order, initial vertex excluded."""
        return self.children[i]

    def members(self, i: int) -> list[int]:
        """Vertices of slice ``i`` in LBFS order (walks the subtree)."""
        out = []
        stack = [i]
        while stack:
            j = stack.pop()
            out.append(self.sigma[j])
            stack.extend(reversed(self.children[j]))
        return sorted(out, key=self.position.__getitem__)

    def ancestors(self, i: int) -> Iterator[int]:
        j = self.parent[i]
        while j >= 0:
            yield j
            j = self.parent[j]


def build_slice_tree(r: LbfsResult) -> SliceTree:
    """Attach each new slice under the deepest slice on the previous slice's
    root path whose label is a prefix of the new label.

    The root path is kept as a stack holding only the deepest slice of each
    label.  Every label on it is a prefix of the previous vertex's label, so
    the wanted slice is the top once all labels longer than the common
    prefix of the two vertices' labels are popped.
    """
    sigma, labels = r.sigma, r.labels
    n = len(sigma)
    parent = [-1] * n
    children: list[list[int]] = [[] for _ in range(n)]
    ops = n
    if n == 0:
        return SliceTree(sigma, r.position, labels, parent, children, ops)
    stack = [0]
    depth = [len(labels[sigma[0]])]
    for k in range(1, n):
        ly, lz = labels[sigma[k]], labels[sigma[k - 1]]
        rho = 0
        lim = min(len(ly), len(lz))
        while rho < lim and ly[rho] == lz[rho]:
            rho += 1
        ops += rho + 1
        while depth[-1] > rho:
            stack.pop()
            depth.pop()
            ops += 1
            if not stack:
                raise SliceError(f"no ancestor with a label of length {rho} for slice {k}")
        top = stack[-1]
        parent[k] = top
        children[top].append(k)
        if len(ly) == depth[-1]:
            stack[-1] = k
        else:
            stack.append(k)
            depth.append(len(ly))
    return SliceTree(sigma, r.position, labels, parent, children, ops)


@dataclass
class SliceAnnotations:
    """Per-slice data computed from the slice tree.

    ``alpha[i]`` maps each connected vertex of slice ``i`` to its active
    neighbours there (``None`` when the slice has no active edges);
    ``connected[i]`` lists those vertices in LBFS order once
    ``order_connected_vertices`` has run.  ``slice_label[j]`` holds the
    vertices that are universal to slice ``j`` but to none of its ancestors.
    """

    alpha: list[dict[int, list[int]] | None]
    slice_label: list[list[int] | None]
    member_list: list[list[int]]
    member_len: list[int]
    connected: list[list[int]] = field(default_factory=list)
    cocomps: list[list[list[Segment]] | None] = field(default_factory=list)
    ops: dict[str, int] = field(default_factory=dict)

    def alpha_of(self, i: int, v: int) -> list[int]:
        a = self.alpha[i]
        return a.get(v, []) if a else []

    def active_edges(self, i: int) -> list[tuple[int, int]]:
        a = self.alpha[i]
        if not a:
            return []
        return sorted((u, v) for u, nbrs in a.items() for v in nbrs if u < v)

    def members(self, i: int) -> list[int]:
        return self.member_list[i][: self.member_len[i]]

    def cocomponent_segments(self, i: int) -> list[list[Segment]]:
        c = self.cocomps[i]
        if c is None:
            return [[(self.member_list[i], 0, self.member_len[i])]]
        return c

    def cocomponents(self, i: int) -> list[list[int]]:
        return [list(iter_segments(comp)) for comp in self.cocomponent_segments(i)]


def iter_segments(comp: list[Segment]) -> Iterator[int]:
    for lst, a, b in comp:
        yield from islice(lst, a, b)


def _copy_into(dst: list[int], src: list[int], length: int) -> None:
    dst.extend(islice(src, length))


def compute_active_edges(g: Graph, t: SliceTree) -> SliceAnnotations:
    n = g.n
    sigma, pos, parent, children = t.sigma, t.position, t.parent, t.children
    adj = g.adjacency
    nchild = [1 + len(c) for c in children]
    count = [0] * n
    slice_label: list[list[int] | None] = [None] * n
    ops = 0

    # Slice labels: for each y, the maximal slices after y inside N(y),
    # found by marking y's later neighbours and closing upward over nodes
    # whose children are all marked.
    for i in range(n):
        y = sigma[i]
        touched: list[int] = []
        full: list[int] = []
        later = [w for w in adj[y] if pos[w] > i]
        ops += len(adj[y])
        for w in later:
            s = pos[w]
            while s >= 0:
                if count[s] == 0:
                    touched.append(s)
                count[s] += 1
                ops += 1
                if count[s] < nchild[s]:
                    break
                full.append(s)
                s = parent[s]
        for s in full:
            p = parent[s]
            if p < 0 or count[p] < nchild[p]:
                lab = slice_label[s]
                if lab is None:
                    slice_label[s] = [y]
                else:
                    lab.append(y)
        for w in later:
            if count[pos[w]] < nchild[pos[w]]:
                raise SliceError(f"neighbour {w} of {y} is not covered by a full slice")
        for s in touched:
            count[s] = 0
        ops += len(touched) + len(full)

    # Member lists bottom-up, and the active-edge graph of each slice from
    # its labelled maximal subslices.
    member_list: list[list[int]] = [[]] * n
    member_len = [0] * n
    alpha: list[dict[int, list[int]] | None] = [None] * n
    for i in range(n - 1, -1, -1):
        kids = children[i]
        x = sigma[i]
        if kids and slice_label[kids[-1]] is None:
            lst = member_list[kids[-1]]
            if len(lst) != member_len[kids[-1]]:
                raise SliceError(f"member list of slice {kids[-1]} was extended twice")
            middle = kids[1:-1]
            first = kids[0] if len(kids) > 1 else None
        else:
            lst = []
            middle = kids[1:]
            first = kids[0] if kids else None
        for c in reversed(middle):
            _copy_into(lst, member_list[c], member_len[c])
            ops += member_len[c]
        lst.append(x)
        if first is not None:
            _copy_into(lst, member_list[first], member_len[first])
            ops += member_len[first]
        member_list[i] = lst
        member_len[i] = len(lst)

        a: dict[int, list[int]] | None = None
        for c in kids:
            lab = slice_label[c]
            if lab is None:
                continue
            if a is None:
                a = {}
            src = member_list[c]
            for v in islice(src, member_len[c]):
                av = a.get(v)
                if av is None:
                    a[v] = av = []
                av.extend(lab)
                for w in lab:
                    aw = a.get(w)
                    if aw is None:
                        a[w] = [v]
                    else:
                        aw.append(v)
                ops += len(lab)
        alpha[i] = a
    return SliceAnnotations(alpha, slice_label, member_list, member_len, ops={"active_edges": ops})


def order_connected_vertices(a: SliceAnnotations, r: LbfsResult) -> None:
    """Fill ``a.connected`` (LBFS order) and reorder each ``alpha`` dict to match."""
    n = len(r.sigma)
    slices_of: list[list[int]] = [[] for _ in range(n)]
    ops = 0
    for i, al in enumerate(a.alpha):
        if al:
            for v in al:
                slices_of[v].append(i)
            ops += len(al)
    connected: list[list[int]] = [[] for _ in range(n)]
    for v in r.sigma:
        for i in slices_of[v]:
            connected[i].append(v)
        ops += 1 + len(slices_of[v])
    for i, al in enumerate(a.alpha):
        if al:
            a.alpha[i] = {v: al[v] for v in connected[i]}
            ops += len(al)
    a.connected = connected
    a.ops["order_connected"] = ops


def compute_cocomponents(g: Graph, t: SliceTree, a: SliceAnnotations) -> None:
    """Co-components of every slice, bottom-up.

    If the initial vertex ``x`` has no neighbour in the slice, the slice is
    one co-component.  Otherwise its first maximal subslice is ``N(x)`` inside
    the slice; each co-component of that subslice either sees everything in
    ``{x}`` plus the later subslices (then it stays a co-component) or is
    merged into the one containing ``x``.  Only active edges are consulted.
    """
    n = g.n
    sigma, children = t.sigma, t.children
    cocomps: list[list[list[Segment]] | None] = [None] * n
    a.cocomps = cocomps
    ops = 0
    for i in range(n - 1, -1, -1):
        al = a.alpha[i]
        if not al:
            continue
        ax = al.get(sigma[i])
        if not ax:
            continue
        s1 = children[i][0]
        if s1 != i + 1 or a.member_len[s1] != len(ax):
            raise SliceError(f"first subslice of slice {i} is not N(x) inside it")
        base = a.member_len[i] - a.member_len[s1]
        big: list[Segment] = [(a.member_list[i], 0, base)]
        universal: list[list[Segment]] = []
        for comp in a.cocomponent_segments(s1):
            ok = True
            for v in iter_segments(comp):
                ops += 1
                if len(al[v]) != base:
                    ok = False
                    break
            if ok:
                universal.append(comp)
            else:
                big.extend(comp)
            ops += len(comp)
        cocomps[i] = [big] + universal
    a.ops["cocomponents"] = ops + n


def analyze(g: Graph, r: LbfsResult) -> tuple[SliceTree, SliceAnnotations]:
    """Slice tree plus every annotation, in dependency order."""
    t = build_slice_tree(r)
    ann = compute_active_edges(g, t)
    order_connected_vertices(ann, r)
    compute_cocomponents(g, t, ann)
    ann.ops["slice_tree"] = t.ops
    return t, ann
