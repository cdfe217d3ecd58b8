"""Oriented graphs on at most 64 vertices, stored as per-vertex bitsets.

A vertex set is a plain ``int`` whose bit ``v`` is set iff vertex ``v`` is a
member.  ``OrientedGraph`` keeps both the out- and in-adjacency bitsets so
that every neighbourhood query is a single lookup.
"""

from __future__ import annotations

from itertools import permutations
from typing import Iterable, Iterator, Sequence

MAX_ORDER = 64
CANONICAL_MAX_ORDER = 12

VertexSet = int


class GraphError(ValueError):
    """Base class for invalid graph operations."""


class GraphSizeError(GraphError):
    pass


class LoopError(GraphError):
    pass


class AntisymmetryError(GraphError):
    pass


class ArcListFormatError(GraphError):
    """Raised by :func:`parse_arc_list`; ``lineno`` is 1-based."""

    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


def vertex_set(vertices: Iterable[int]) -> VertexSet:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def members(mask: VertexSet) -> list[int]:
    """Ascending list of the vertices in ``mask``."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def full_set(order: int) -> VertexSet:
    return (1 << order) - 1


class OrientedGraph:
    """Loop-free digraph with at most one arc between any two vertices.

    Instances are immutable; ``add_arc`` returns a new graph.  Use
    :meth:`from_arcs` to build a graph from many arcs at once.
    """

    __slots__ = ("order", "out_adj", "in_adj", "_hash")

    def __init__(self, order: int, out_adj: Sequence[int] | None = None):
        if not 1 <= order <= MAX_ORDER:
            raise GraphSizeError(f"order must be in 1..{MAX_ORDER}, got {order}")
        if out_adj is None:
            out_adj = (0,) * order
        if len(out_adj) != order:
            raise GraphSizeError("out_adj length does not match order")
        universe = full_set(order)
        in_adj = [0] * order
        for v, succ in enumerate(out_adj):
            if succ & ~universe:
                raise GraphSizeError(f"vertex {v} has a successor outside 0..{order - 1}")
            if succ >> v & 1:
                raise LoopError(f"loop at vertex {v}")
            for w in members(succ):
                in_adj[w] |= 1 << v
        for v in range(order):
            both = out_adj[v] & in_adj[v]
            if both:
                w = members(both)[0]
                raise AntisymmetryError(f"arcs {v}->{w} and {w}->{v} both present")
        self.order = order
        self.out_adj: tuple[int, ...] = tuple(out_adj)
        self.in_adj: tuple[int, ...] = tuple(in_adj)
        self._hash = None

    @classmethod
    def from_arcs(cls, order: int, arcs: Iterable[tuple[int, int]]) -> OrientedGraph:
        """Build a graph from ``(u, v)`` pairs; repeated arcs are accepted once."""
        if not 1 <= order <= MAX_ORDER:
            raise GraphSizeError(f"order must be in 1..{MAX_ORDER}, got {order}")
        out_adj = [0] * order
        for u, v in arcs:
            _check_vertex(order, u)
            _check_vertex(order, v)
            if u == v:
                raise LoopError(f"loop at vertex {u}")
            if out_adj[v] >> u & 1:
                raise AntisymmetryError(f"arc {u}->{v} would reverse existing arc {v}->{u}")
            out_adj[u] |= 1 << v
        return cls(order, out_adj)

    def add_arc(self, u: int, v: int) -> OrientedGraph:
        """Return a copy with the arc ``u -> v``.  Adding an existing arc is a no-op."""
        _check_vertex(self.order, u)
        _check_vertex(self.order, v)
        if u == v:
            raise LoopError(f"loop at vertex {u}")
        if self.out_adj[v] >> u & 1:
            raise AntisymmetryError(f"arc {v}->{u} already present")
        if self.out_adj[u] >> v & 1:
            return self
        out_adj = list(self.out_adj)
        out_adj[u] |= 1 << v
        return OrientedGraph(self.order, out_adj)

    def has_arc(self, u: int, v: int) -> bool:
        return bool(self.out_adj[u] >> v & 1)

    def arcs(self) -> Iterator[tuple[int, int]]:
        """Arcs in ascending ``(u, v)`` order."""
        for u in range(self.order):
            for v in members(self.out_adj[u]):
                yield u, v

    @property
    def universe(self) -> VertexSet:
        return full_set(self.order)

    def adjacent(self, v: int) -> VertexSet:
        return self.out_adj[v] | self.in_adj[v]

    def non_adjacent(self, v: int) -> VertexSet:
        return self.universe & ~(self.adjacent(v) | 1 << v)

    def out_degree(self, v: int) -> int:
        return self.out_adj[v].bit_count()

    def in_degree(self, v: int) -> int:
        return self.in_adj[v].bit_count()

    def relabel(self, perm: Sequence[int]) -> OrientedGraph:
        """Graph whose vertex ``perm[v]`` plays the role of old vertex ``v``."""
        if sorted(perm) != list(range(self.order)):
            raise GraphError("relabeling must be a permutation of the vertices")
        out_adj = [0] * self.order
        for u, v in self.arcs():
            out_adj[perm[u]] |= 1 << perm[v]
        return OrientedGraph(self.order, out_adj)

    def reverse(self) -> OrientedGraph:
        return OrientedGraph(self.order, self.in_adj)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, OrientedGraph):
            return NotImplemented
        return self.order == other.order and self.out_adj == other.out_adj

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.order, self.out_adj))
        return self._hash

    def __repr__(self) -> str:
        return f"OrientedGraph(order={self.order}, arcs={arc_count(self)})"


def _check_vertex(order: int, v: int) -> None:
    if not 0 <= v < order:
        raise GraphError(f"vertex {v} out of range for order {order}")


def new_graph(order: int) -> OrientedGraph:
    return OrientedGraph(order)


def add_arc(g: OrientedGraph, u: int, v: int) -> OrientedGraph:
    return g.add_arc(u, v)


def arc_count(g: OrientedGraph) -> int:
    return sum(s.bit_count() for s in g.out_adj)


def neighborhoods(g: OrientedGraph, v: int) -> tuple[VertexSet, VertexSet, VertexSet]:
    """Return ``(n_out, n_in, indep)`` for vertex ``v``.

    ``n_out`` holds the heads of arcs leaving ``v``, ``n_in`` the tails of arcs
    entering it and ``indep`` every other vertex except ``v`` itself.
    """
    _check_vertex(g.order, v)
    return g.out_adj[v], g.in_adj[v], g.non_adjacent(v)


def induced_subgraph(g: OrientedGraph, s: VertexSet) -> OrientedGraph:
    """Subgraph on ``s`` relabelled ``0..|s|-1`` in ascending original order."""
    if s <= 0:
        raise GraphError("induced subgraph needs a nonempty vertex set")
    if s & ~g.universe:
        raise GraphError("vertex set exceeds the graph's universe")
    keep = members(s)
    index = {v: i for i, v in enumerate(keep)}
    out_adj = [0] * len(keep)
    for i, v in enumerate(keep):
        for w in members(g.out_adj[v] & s):
            out_adj[i] |= 1 << index[w]
    return OrientedGraph(len(keep), out_adj)


# -- canonical form ---------------------------------------------------------


def _refined_colours(g: OrientedGraph) -> list[int]:
    """Isomorphism-invariant vertex colours, refined from the degree pairs."""
    n = g.order
    colours = [(g.out_degree(v), g.in_degree(v)) for v in range(n)]
    ranks = _rank(colours)
    while True:
        sigs = [
            (
                ranks[v],
                tuple(sorted(ranks[w] for w in members(g.out_adj[v]))),
                tuple(sorted(ranks[w] for w in members(g.in_adj[v]))),
            )
            for v in range(n)
        ]
        new = _rank(sigs)
        if len(set(new)) == len(set(ranks)):
            return new
        ranks = new


def _rank(keys: list) -> list[int]:
    order = {k: i for i, k in enumerate(sorted(set(keys)))}
    return [order[k] for k in keys]


def canonical_labeling(g: OrientedGraph) -> tuple[bytes, list[int]]:
    """Return ``(code, perm)`` where ``g.relabel(perm)`` is the canonical graph.

    The code lists, for positions ``p = 1..n-1`` and ``q < p``, the relation
    between the vertices placed at ``p`` and ``q`` (0 none, 1 arc q->p,
    2 arc p->q).  It is minimised over all placements that respect the
    refined colour order; since that set of placements is itself invariant,
    equal codes mean isomorphic graphs.
    """
    n = g.order
    if n > CANONICAL_MAX_ORDER:
        raise GraphSizeError(f"canonical form limited to order {CANONICAL_MAX_ORDER}, got {n}")
    colours = _refined_colours(g)
    slots = sorted(colours)
    out_adj = g.out_adj
    in_adj = g.in_adj

    best: list[int] | None = None
    best_place: list[int] = []
    placed: list[int] = []
    code: list[int] = []
    used = [False] * n

    def extend(p: int, tight: bool) -> None:
        nonlocal best, best_place
        if p == n:
            if best is None or not tight:
                best = code.copy()
                best_place = placed.copy()
            return
        seg_start = p * (p - 1) // 2
        for v in range(n):
            if used[v] or colours[v] != slots[p]:
                continue
            seg = []
            for u in placed:
                if out_adj[u] >> v & 1:
                    seg.append(1)
                elif in_adj[u] >> v & 1:
                    seg.append(2)
                else:
                    seg.append(0)
            still_tight = tight
            if best is not None and tight:
                ref = best[seg_start:seg_start + p]
                if seg > ref:
                    continue
                still_tight = seg == ref
            used[v] = True
            placed.append(v)
            code.extend(seg)
            extend(p + 1, still_tight)
            del code[len(code) - p:]
            placed.pop()
            used[v] = False

    extend(0, True)
    assert best is not None
    perm = [0] * n
    for pos, v in enumerate(best_place):
        perm[v] = pos
    return bytes([n]) + bytes(best), perm


def canonical_code(g: OrientedGraph) -> bytes:
    return canonical_labeling(g)[0]


def canonical_form(g: OrientedGraph) -> OrientedGraph:
    return g.relabel(canonical_labeling(g)[1])


def is_automorphism(g: OrientedGraph, perm: Sequence[int]) -> bool:
    return g.relabel(perm) == g


def automorphism_count(g: OrientedGraph) -> int:
    """Count automorphisms by scanning all permutations; intended for tiny graphs."""
    if g.order > 8:
        raise GraphSizeError("automorphism scan limited to order 8")
    return sum(1 for p in permutations(range(g.order)) if is_automorphism(g, p))


# -- text arc-list format ---------------------------------------------------


def format_arc_list(g: OrientedGraph) -> str:
    lines = [f"n {g.order}"]
    lines.extend(f"{u} {v}" for u, v in g.arcs())
    return "\n".join(lines) + "\n"


def parse_arc_list(text: str) -> OrientedGraph:
    """Parse the ``n <order>`` / ``<u> <v>`` format written by :func:`format_arc_list`.

    The reader is strict: arcs must be sorted and unique, and loops, reversed
    pairs, CR line endings and trailing whitespace are rejected.
    """
    if "\r" in text:
        raise ArcListFormatError(text[: text.index("\r")].count("\n") + 1, "CR line ending")
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines:
        raise ArcListFormatError(1, "empty input, expected 'n <order>'")
    header = lines[0]
    parts = header.split(" ")
    if len(parts) != 2 or parts[0] != "n" or not _is_decimal(parts[1]):
        raise ArcListFormatError(1, f"expected 'n <order>', got {header!r}")
    order = int(parts[1])
    if not 1 <= order <= MAX_ORDER:
        raise ArcListFormatError(1, f"order {order} outside 1..{MAX_ORDER}")

    out_adj = [0] * order
    prev: tuple[int, int] | None = None
    for lineno, line in enumerate(lines[1:], start=2):
        parts = line.split(" ")
        if len(parts) != 2 or not all(_is_decimal(p) for p in parts):
            raise ArcListFormatError(lineno, f"expected '<u> <v>', got {line!r}")
        u, v = int(parts[0]), int(parts[1])
        if u >= order or v >= order:
            raise ArcListFormatError(lineno, f"vertex out of range in arc {u} {v}")
        if u == v:
            raise ArcListFormatError(lineno, f"loop at vertex {u}")
        if out_adj[v] >> u & 1:
            raise ArcListFormatError(lineno, f"arc {u}->{v} reverses earlier arc {v}->{u}")
        if prev is not None and (u, v) <= prev:
            what = "duplicate" if (u, v) == prev else "unsorted"
            raise ArcListFormatError(lineno, f"{what} arc {u} {v}")
        prev = (u, v)
        out_adj[u] |= 1 << v
    return OrientedGraph(order, out_adj)


def _is_decimal(s: str) -> bool:
    return s.isascii() and s.isdigit() and (s == "0" or not s.startswith("0"))


def read_arc_list(path) -> OrientedGraph:
    with open(path, encoding="ascii", newline="") as fh:
        return parse_arc_list(fh.read())


def write_arc_list(g: OrientedGraph, path) -> None:
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        fh.write(format_arc_list(g))
