"""Exact detection of independent sets and transitive tournaments.

All searches run on bitsets and accept an optional ``within`` mask so that
neighbourhood checks need not materialise induced subgraphs.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .digraph import OrientedGraph, VertexSet, canonical_code, members

INDEPENDENT_SET = "independent-set"
TRANSITIVE_TOURNAMENT = "transitive-tournament"


@dataclass(frozen=True)
class Certificate:
    """A found pattern.

    Transitive tournaments are listed in dominance order: every vertex has an
    arc to every later one.
    """

    kind: str
    vertices: tuple[int, ...]

    def is_valid(self, g: OrientedGraph) -> bool:
        vs = self.vertices
        if len(set(vs)) != len(vs) or any(not 0 <= v < g.order for v in vs):
            return False
        if self.kind == INDEPENDENT_SET:
            return all(not g.adjacent(a) >> b & 1 for a, b in combinations(vs, 2))
        if self.kind == TRANSITIVE_TOURNAMENT:
            return all(g.has_arc(a, b) for a, b in combinations(vs, 2))
        return False

    def to_dict(self) -> dict:
        return {"kind": self.kind, "vertices": list(self.vertices)}


@dataclass
class Verdict:
    free: bool
    certificate: Certificate | None = None

    def __bool__(self) -> bool:
        return self.free


@dataclass
class CheckReport:
    """Outcome of a structural check.  ``violations`` is empty iff ``passed``."""

    name: str
    applicable: bool
    violations: list[str] = field(default_factory=list)
    info: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.applicable and not self.violations


def _check_size(k: int) -> None:
    if k < 1:
        raise ValueError(f"pattern size must be at least 1, got {k}")


def _scope(g: OrientedGraph, within: VertexSet | None) -> VertexSet:
    return g.universe if within is None else within & g.universe


# -- independent sets -------------------------------------------------------


def _independent_search(g: OrientedGraph, m: int, cand: VertexSet) -> list[int] | None:
    adj = [g.adjacent(v) for v in range(g.order)]

    def search(cand: int, need: int) -> list[int] | None:
        if need == 0:
            return []
        if cand.bit_count() < need:
            return None
        # pivot: the candidate with the most neighbours inside the pool
        pivot = max(members(cand), key=lambda v: (adj[v] & cand).bit_count())
        if (adj[pivot] & cand) == 0:
            # pool is already independent
            return members(cand)[:need]
        found = search(cand & ~adj[pivot] & ~(1 << pivot), need - 1)
        if found is not None:
            return [pivot] + found
        return search(cand & ~(1 << pivot), need)

    found = search(cand, m)
    return None if found is None else sorted(found)


def find_independent_set(
    g: OrientedGraph, m: int, within: VertexSet | None = None
) -> Certificate | None:
    """An independent set of exactly ``m`` vertices, or ``None`` if there is none."""
    _check_size(m)
    found = _independent_search(g, m, _scope(g, within))
    return None if found is None else Certificate(INDEPENDENT_SET, tuple(found))


def independence_number(g: OrientedGraph, within: VertexSet | None = None) -> int:
    cand = _scope(g, within)
    alpha = 0
    while alpha < cand.bit_count() and _independent_search(g, alpha + 1, cand) is not None:
        alpha += 1
    return alpha


# -- transitive tournaments -------------------------------------------------


def _tournament_search(out_adj, n: int, cand: int) -> list[int] | None:
    """Dominance-ordered chain of ``n`` vertices from ``cand``.

    Each chosen vertex shrinks the pool to its out-neighbours, so any chain
    found is transitive by construction.
    """
    if n == 0:
        return []
    if cand.bit_count() < n:
        return None
    if n == 1:
        return [(cand & -cand).bit_length() - 1]
    order = sorted(members(cand), key=lambda v: -(out_adj[v] & cand).bit_count())
    for v in order:
        nxt = out_adj[v] & cand
        if nxt.bit_count() < n - 1:
            continue
        rest = _tournament_search(out_adj, n - 1, nxt)
        if rest is not None:
            return [v] + rest
    return None


def find_transitive_tournament(
    g: OrientedGraph, n: int, within: VertexSet | None = None
) -> Certificate | None:
    _check_size(n)
    found = _tournament_search(g.out_adj, n, _scope(g, within))
    return None if found is None else Certificate(TRANSITIVE_TOURNAMENT, tuple(found))


def tournament_through(out_adj, n: int, v_out: int, v_in: int, cand: int) -> bool:
    """Whether a transitive tournament on ``n`` vertices of ``cand`` plus one extra vertex uses it.

    The extra vertex is described only by its out-set ``v_out`` and in-set
    ``v_in``; it must not itself be in ``cand``.  ``out_adj`` is consulted for
    members of ``cand`` only, restricted to ``cand``.
    """
    if n <= 1:
        return True

    def search(common: int, need: int) -> bool:
        # every vertex chosen so far precedes the extra vertex
        if _tournament_search(out_adj, need - 1, common & v_out) is not None:
            return True
        if need < 2:
            return False
        for u in members(common & v_in):
            if search(common & out_adj[u], need - 1):
                return True
        return False

    return search(cand, n)


def count_transitive_triangles(g: OrientedGraph) -> int:
    """Sum of ``|out(a) & out(b)|`` over arcs ``a -> b``.

    A transitive triangle has exactly one arc from its source to its middle
    vertex, so each triangle is counted once.
    """
    return sum((g.out_adj[a] & g.out_adj[b]).bit_count() for a, b in g.arcs())


# -- freeness ---------------------------------------------------------------


def is_free(g: OrientedGraph, m: int, n: int, within: VertexSet | None = None) -> Verdict:
    """Whether ``g`` has no independent ``m``-set and no transitive ``n``-tournament.

    The independent set is looked for first, so a graph containing both
    patterns always reports an independent-set certificate.
    """
    cert = find_independent_set(g, m, within)
    if cert is None:
        cert = find_transitive_tournament(g, n, within)
    return Verdict(cert is None, cert)


def _free_on(g: OrientedGraph, m: int, n: int, mask: VertexSet) -> bool:
    # sizes may drop to zero inside the neighbourhood checks; the empty
    # pattern is present in every vertex set, including the empty one
    if m <= 0 or n <= 0:
        return False
    return (
        _independent_search(g, m, mask) is None
        and _tournament_search(g.out_adj, n, mask) is None
    )


def check_neighborhood_lemma(g: OrientedGraph, m: int, n: int) -> CheckReport:
    """For an (I_m, L_n)-free graph, check every vertex's three neighbourhoods.

    Both oriented neighbourhoods must be (I_m, L_{n-1})-free and the
    non-neighbourhood (I_{m-1}, L_n)-free.
    """
    report = CheckReport("neighborhood-lemma", applicable=bool(is_free(g, m, n)))
    if not report.applicable:
        return report
    for v in range(g.order):
        for label, mask, mm, nn in (
            ("out", g.out_adj[v], m, n - 1),
            ("in", g.in_adj[v], m, n - 1),
            ("indep", g.non_adjacent(v), m - 1, n),
        ):
            if not _free_on(g, mm, nn, mask):
                report.violations.append(
                    f"vertex {v}: {label}-neighbourhood {members(mask)} is not (I_{mm}, L_{nn})-free"
                )
    report.info["vertices_checked"] = g.order
    return report


def check_l3_degree_bound(g: OrientedGraph, m: int) -> CheckReport:
    """In an (I_m, L_3)-free graph both neighbourhoods are independent, of size <= m-1."""
    report = CheckReport("l3-degree-bound", applicable=bool(is_free(g, m, 3)))
    if not report.applicable:
        return report
    for v in range(g.order):
        for label, mask in (("out", g.out_adj[v]), ("in", g.in_adj[v])):
            size = mask.bit_count()
            if size > m - 1:
                report.violations.append(f"vertex {v}: {label}-degree {size} exceeds {m - 1}")
            if _independent_search(g, size, mask) is None and size > 0:
                report.violations.append(f"vertex {v}: {label}-neighbourhood is not independent")
    report.info["out_degrees"] = [g.out_degree(v) for v in range(g.order)]
    report.info["in_degrees"] = [g.in_degree(v) for v in range(g.order)]
    return report


def _has_undirected_triangle(g: OrientedGraph, mask: int) -> bool:
    for v in members(mask):
        nb = g.adjacent(v) & mask & ~((1 << (v + 1)) - 1)
        for w in members(nb):
            if g.adjacent(w) & nb & ~((1 << (w + 1)) - 1):
                return True
    return False


def _is_undirected_c5(g: OrientedGraph, mask: int) -> bool:
    vs = members(mask)
    if len(vs) != 5:
        return False
    # a connected 2-regular graph on five vertices is exactly C_5
    if any((g.adjacent(v) & mask).bit_count() != 2 for v in vs):
        return False
    seen, frontier = 1 << vs[0], 1 << vs[0]
    while frontier:
        nxt = 0
        for v in members(frontier):
            nxt |= g.adjacent(v) & mask
        frontier = nxt & ~seen
        seen |= nxt
    return seen == mask


def _masks_of_size(order: int, k: int):
    for combo in combinations(range(order), k):
        yield sum(1 << v for v in combo)


def check_eight_vertex_properties(g: OrientedGraph) -> CheckReport:
    """The six structural properties of an 8-vertex (I_3, L_3)-free graph.

    Triangles and cycles are judged on the underlying undirected graph.
    """
    from .constructions import witness

    applicable = g.order == 8 and bool(is_free(g, 3, 3))
    report = CheckReport("eight-vertex-properties", applicable=applicable)
    if not applicable:
        return report
    parts: dict[str, bool] = {}

    degrees = [g.adjacent(v).bit_count() for v in range(8)]
    parts["4-regular"] = all(d == 4 for d in degrees)

    parts["every-triple-has-edge"] = all(
        any(g.adjacent(v) & mask for v in members(mask)) for mask in _masks_of_size(8, 3)
    )

    parts["non-neighbourhood-is-triangle"] = all(
        g.non_adjacent(v).bit_count() == 3 and _has_undirected_triangle(g, g.non_adjacent(v))
        for v in range(8)
    )

    parts["5-sets-triangle-or-c5"] = all(
        _has_undirected_triangle(g, mask) or _is_undirected_c5(g, mask)
        for mask in _masks_of_size(8, 5)
    )

    parts["6-sets-contain-triangle"] = all(
        _has_undirected_triangle(g, mask) for mask in _masks_of_size(8, 6)
    )

    parts["isomorphic-to-w8"] = canonical_code(g) == canonical_code(witness("W8"))

    report.info["parts"] = parts
    report.violations.extend(name for name, ok in parts.items() if not ok)
    return report
