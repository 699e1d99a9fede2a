"""Ordered partition refinement.

Classes form a doubly-linked list; the elements of each class form a
doubly-linked list as well.  Every class carries its range ``[start, end)``:
the number of elements in earlier classes and that number plus its own size.
Splits only subdivide a range, so the relative order of two classes is a
comparison of their ``start`` values.

A class may also hold *blocks*: an anchor element with a group of member
elements hanging under it.  Members are not in the class's element list; they
travel with their anchor whenever the anchor is moved, and can be pulled out
individually when a refinement set names them without their anchor.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .graph import Graph


class PartitionError(ValueError):
    pass


class ClassRef:
    """Handle to one partition class; stays valid for the life of the class."""

    __slots__ = ("prev", "next", "head", "tail", "start", "end", "alive")

    def __init__(self, start: int) -> None:
        self.prev: ClassRef | None = None
        self.next: ClassRef | None = None
        self.head = -1
        self.tail = -1
        self.start = start
        self.end = start
        self.alive = True

    @property
    def size(self) -> int:
        return self.end - self.start

    def __repr__(self) -> str:
        return f"ClassRef[{self.start}:{self.end}]"


class OrderedPartition:
    """Ordered partition of a set of non-negative integers.

    ``ops`` counts elementary operations (elements scanned or moved, classes
    created) and is what the linear-time tests measure.
    """

    def __init__(self, classes: Iterable[Iterable[int]]) -> None:
        groups = [list(c) for c in classes]
        universe = max((max(c) for c in groups if c), default=-1) + 1
        self._cls: list[ClassRef | None] = [None] * universe
        self._next = [-1] * universe
        self._prev = [-1] * universe
        self._anchor = [-1] * universe
        self._blocks: dict[int, dict[int, None]] = {}
        self._first: ClassRef | None = None
        self._last: ClassRef | None = None
        self.ops = 0
        offset = 0
        for group in groups:
            if not group:
                raise PartitionError("empty class")
            c = ClassRef(offset)
            self._link_after(c, self._last)
            for e in group:
                if e < 0:
                    raise PartitionError(f"negative element {e}")
                if self._cls[e] is not None:
                    raise PartitionError(f"element {e} appears in two classes")
                self._append(c, e)
            c.end = offset = offset + len(group)
        self.ops += offset

    # -- element / class list plumbing ------------------------------------

    def _link_after(self, c: ClassRef, before: ClassRef | None) -> None:
        if before is None:
            c.next = self._first
            if self._first is not None:
                self._first.prev = c
            self._first = c
            if self._last is None:
                self._last = c
        else:
            c.prev, c.next = before, before.next
            if before.next is not None:
                before.next.prev = c
            else:
                self._last = c
            before.next = c

    def _unlink_class(self, c: ClassRef) -> None:
        if c.prev is not None:
            c.prev.next = c.next
        else:
            self._first = c.next
        if c.next is not None:
            c.next.prev = c.prev
        else:
            self._last = c.prev
        c.alive = False

    def _append(self, c: ClassRef, e: int) -> None:
        self._cls[e] = c
        self._next[e] = -1
        self._prev[e] = c.tail
        if c.tail >= 0:
            self._next[c.tail] = e
        else:
            c.head = e
        c.tail = e

    def _unlink(self, c: ClassRef, e: int) -> None:
        p, n = self._prev[e], self._next[e]
        if p >= 0:
            self._next[p] = n
        else:
            c.head = n
        if n >= 0:
            self._prev[n] = p
        else:
            c.tail = p

    def _new_class(self, c: ClassRef, before: bool) -> ClassRef:
        if before:
            new = ClassRef(c.start)
            self._link_after(new, c.prev)
        else:
            new = ClassRef(c.end)
            self._link_after(new, c)
        self.ops += 1
        return new

    # -- queries ------------------------------------------------------------

    def __contains__(self, e: int) -> bool:
        return 0 <= e < len(self._cls) and self._cls[e] is not None

    def class_of(self, e: int) -> ClassRef:
        if not (0 <= e < len(self._cls)) or self._cls[e] is None:
            raise PartitionError(f"element {e} is not in the partition")
        a = self._anchor[e]
        return self._cls[a] if a >= 0 else self._cls[e]  # type: ignore[return-value]

    def classes(self) -> list[ClassRef]:
        out = []
        c = self._first
        while c is not None:
            out.append(c)
            c = c.next
        return out

    def __len__(self) -> int:
        return len(self.classes())

    @property
    def first(self) -> ClassRef | None:
        return self._first

    @property
    def last(self) -> ClassRef | None:
        return self._last

    def members(self, c: ClassRef) -> list[int]:
        """Elements of ``c`` in list order, block members right after their anchor."""
        out = []
        e = c.head
        while e >= 0:
            out.append(e)
            block = self._blocks.get(e)
            if block:
                out.extend(block)
            e = self._next[e]
        return out

    def as_lists(self) -> list[list[int]]:
        return [self.members(c) for c in self.classes()]

    def as_sets(self) -> list[frozenset[int]]:
        return [frozenset(self.members(c)) for c in self.classes()]

    def block(self, anchor: int) -> list[int]:
        return list(self._blocks.get(anchor, ()))

    def precedes(self, a: ClassRef, b: ClassRef) -> bool:
        return a.start < b.start

    def to_ordering(self) -> list[int]:
        out = []
        for c in self.classes():
            if c.size != 1:
                raise PartitionError("to_ordering needs every class to be a singleton")
            out.append(c.head)
        return out

    def dump(self, names: Sequence[str] | None = None) -> str:
        """``[x][z][q w]...``; a block shows as ``anchor{m1 m2}``."""
        name = (lambda v: names[v]) if names is not None else str
        parts = []
        for c in self.classes():
            items = []
            e = c.head
            while e >= 0:
                block = self._blocks.get(e)
                if block:
                    items.append(f"{name(e)}{{{' '.join(name(b) for b in block)}}}")
                else:
                    items.append(name(e))
                e = self._next[e]
            parts.append("[" + " ".join(items) + "]")
        return "".join(parts)

    def __repr__(self) -> str:
        return f"OrderedPartition({self.dump()})"

    def check(self) -> None:
        """Full scan of every structural invariant; raises PartitionError."""
        seen: set[int] = set()
        expected_start = None
        prev = None
        c = self._first
        while c is not None:
            if c.prev is not prev or not c.alive:
                raise PartitionError("broken class list")
            if expected_start is not None and c.start != expected_start:
                raise PartitionError(f"range of {c} does not follow its predecessor")
            expected_start = c.end
            elems = self.members(c)
            if not elems:
                raise PartitionError("empty class")
            if len(elems) != c.size:
                raise PartitionError(f"range of {c} disagrees with its {len(elems)} elements")
            e = c.head
            while e >= 0:
                if self._cls[e] is not c or self._anchor[e] != -1:
                    raise PartitionError(f"bad back-reference for {e}")
                for b in self._blocks.get(e, ()):
                    if self._anchor[b] != e:
                        raise PartitionError(f"block member {b} lost its anchor {e}")
                e = self._next[e]
            if seen.intersection(elems):
                raise PartitionError("classes overlap")
            seen.update(elems)
            prev, c = c, c.next
        if prev is not self._last:
            raise PartitionError("broken class list tail")
        in_use = {e for e, c in enumerate(self._cls) if c is not None}
        if in_use != seen:
            raise PartitionError("element table disagrees with class lists")

    # -- refinement ---------------------------------------------------------

    def _group(self, s: Iterable[int]) -> dict[ClassRef, list]:
        """Group ``s`` by class; each group is ``[elements to move, weight]``.

        A block member whose anchor is also in ``s`` is dropped (it moves with
        the anchor); an anchor weighs one plus its block.
        """
        if not isinstance(s, (list, tuple, set, frozenset)):
            s = list(s)
        cls, anchor, blocks = self._cls, self._anchor, self._blocks
        groups: dict[ClassRef, list] = {}
        sset = None
        for e in s:
            c = cls[e] if 0 <= e < len(cls) else None
            if c is None:
                continue
            w = 1
            if blocks:
                a = anchor[e]
                if a >= 0:
                    if sset is None:
                        sset = set(s)
                    if a in sset:
                        continue
                    c = cls[a]
                elif e in blocks:
                    w += len(blocks[e])
            g = groups.get(c)
            if g is None:
                groups[c] = [[e], w]
            else:
                g[0].append(e)
                g[1] += w
        self.ops += len(s)
        return groups

    def _split(self, c: ClassRef, movers: list[int], before: bool) -> ClassRef:
        new = self._new_class(c, before)
        anchor, blocks = self._anchor, self._blocks
        for e in movers:
            a = anchor[e]
            if a >= 0:
                del blocks[a][e]
                if not blocks[a]:
                    del blocks[a]
                anchor[e] = -1
                w = 1
            else:
                self._unlink(c, e)
                w = 1 + len(blocks[e]) if e in blocks else 1
            self._append(new, e)
            if before:
                new.end += w
                c.start += w
            else:
                c.end -= w
                new.start -= w
        self.ops += len(movers)
        return new

    def generalized_pivot(
        self, v: int, s: Iterable[int], graph: Graph | None = None
    ) -> list[int]:
        """Split every class other than ``v``'s by ``s``, pushing the part in
        ``s`` away from ``v``'s class.  Returns the elements moved.

        Pass ``graph`` to have ``s`` checked against the neighbourhood of ``v``.
        """
        pc = self.class_of(v)
        if graph is not None:
            s = list(s)
            nbrs = set(graph.adjacency[v])
            if not nbrs.issuperset(s):
                raise PartitionError(f"refinement set is not inside N({v})")
        moved: list[int] = []
        for c, (movers, weight) in self._group(s).items():
            if c is pc or weight == c.size:
                continue
            self._split(c, movers, before=c.start < pc.start)
            moved.extend(movers)
        return moved

    def pivot(self, v: int, g: Graph) -> list[int]:
        """Refine by the whole neighbourhood of ``v``."""
        return self.generalized_pivot(v, g.adjacency[v])

    def _targeted(self, v: int, target: ClassRef, s: Iterable[int], push: bool) -> list[int]:
        pc = self.class_of(v)
        if not target.alive:
            raise PartitionError("target class no longer exists")
        if target is pc:
            raise PartitionError("target class contains the pivot")
        g = self._group(s).get(target)
        if g is None or g[1] == target.size:
            return []
        # push: s-part on the far side of the target; pull: on the near side.
        target_first = target.start < pc.start
        self._split(target, g[0], before=target_first if push else not target_first)
        return g[0]

    def pivot_push(self, v: int, target: ClassRef, s: Iterable[int]) -> list[int]:
        return self._targeted(v, target, s, push=True)

    def pivot_pull(self, v: int, target: ClassRef, s: Iterable[int]) -> list[int]:
        return self._targeted(v, target, s, push=False)

    def split_out_singleton(self, v: int) -> None:
        """Replace the class of ``v`` by ``{v}`` followed by the rest."""
        c = self.class_of(v)
        if self._anchor[v] >= 0 or v in self._blocks:
            raise PartitionError("cannot split out an element involved in a block")
        if c.size > 1:
            self._split(c, [v], before=True)

    def attach_block(self, anchor: int, members: Iterable[int]) -> None:
        c = self.class_of(anchor)
        if self._anchor[anchor] >= 0:
            raise PartitionError(f"{anchor} is itself a block member")
        block = self._blocks.setdefault(anchor, {})
        for e in members:
            if e == anchor:
                raise PartitionError("anchor cannot be its own block member")
            if self.class_of(e) is not c:
                raise PartitionError(f"block member {e} is not in the anchor's class")
            if self._anchor[e] >= 0 or e in self._blocks:
                raise PartitionError(f"{e} already belongs to a block")
            self._unlink(c, e)
            self._anchor[e] = anchor
            block[e] = None
        self.ops += len(block)
        if not block:
            del self._blocks[anchor]

    def detach_block(self, anchor: int) -> list[int]:
        """Put the block members back into the anchor's class; returns them."""
        block = self._blocks.pop(anchor, None)
        if not block:
            return []
        c = self._cls[anchor]
        nxt, prv = self._next, self._prev
        after = anchor
        for e in block:
            self._anchor[e] = -1
            self._cls[e] = c
            n = nxt[after]
            prv[e], nxt[e] = after, n
            nxt[after] = e
            if n >= 0:
                prv[n] = e
            else:
                c.tail = e  # type: ignore[union-attr]
            after = e
        self.ops += len(block)
        return list(block)

    # -- LBFS support -------------------------------------------------------

    def pop_front(self) -> int:
        """Remove and return the first element of the first class."""
        c = self._first
        if c is None:
            raise PartitionError("partition is empty")
        e = c.head
        if e in self._blocks:
            raise PartitionError("cannot pop a block anchor")
        self._unlink(c, e)
        self._cls[e] = None
        c.start += 1
        if c.head < 0:
            self._unlink_class(c)
        self.ops += 1
        return e

    def refine_front(self, s: Sequence[int]) -> None:
        """Split every class by ``s``, the part in ``s`` going first.

        Elements keep their relative order inside both halves, so a class
        stays sorted when ``s`` is sorted.  Assumes no blocks.
        """
        cls = self._cls
        counts: dict[ClassRef, int] = {}
        for e in s:
            c = cls[e]
            if c is not None:
                counts[c] = counts.get(c, 0) + 1
        if not counts:
            self.ops += len(s)
            return
        split_to: dict[ClassRef, ClassRef] = {}
        for c, k in counts.items():
            if k != c.size:
                split_to[c] = self._new_class(c, before=True)
        moved = 0
        for e in s:
            c = cls[e]
            if c is None:
                continue
            new = split_to.get(c)
            if new is None:
                continue
            self._unlink(c, e)
            self._append(new, e)
            new.end += 1
            c.start += 1
            moved += 1
        self.ops += len(s) + moved

