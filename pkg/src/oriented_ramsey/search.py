"""Exhaustive, isomorph-free generation of (I_m, L_n)-free oriented graphs.

Level ``k + 1`` is produced from the level-``k`` representatives by adding one
vertex in every possible way (no arc, new -> old, old -> new for each old
vertex), discarding children that contain a forbidden pattern, and keeping one
child per canonical code.  Every free graph on ``k + 1`` vertices minus its
last vertex is free, so this is complete.
"""

from __future__ import annotations

import json
import logging
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .bounds import best_bounds, formula_upper
from .constructions import WITNESSES, build_circulant, enumerate_cayley
from .detectors import _independent_search, is_free, tournament_through
from .digraph import OrientedGraph, canonical_labeling, format_arc_list

log = logging.getLogger(__name__)

MAX_SEARCH_ORDER = 10
DEFAULT_CLASS_CAP = 10 ** 7
MODES = ("count-classes", "find-any", "prove-empty")
PRUNE_REASONS = ("independence", "tournament", "degree-cap", "canonical")


@dataclass
class SearchConfig:
    m: int
    n: int
    max_order: int
    mode: str = "count-classes"
    worker_count: int = 1
    degree_cap_enabled: bool = True
    class_cap: int = DEFAULT_CLASS_CAP

    def __post_init__(self):
        if self.m < 1 or self.n < 1:
            raise ValueError("m and n must be at least 1")
        if not 1 <= self.max_order <= MAX_SEARCH_ORDER:
            raise ValueError(f"max_order must be in 1..{MAX_SEARCH_ORDER}, got {self.max_order}")
        if self.mode not in MODES:
            raise ValueError(f"mode must be one of {MODES}, got {self.mode!r}")
        if self.worker_count < 1:
            raise ValueError("worker_count must be at least 1")

    @property
    def uses_degree_cap(self) -> bool:
        return self.degree_cap_enabled and self.n == 3


@dataclass
class LevelCount:
    order: int
    classes: int
    complete: bool = True


@dataclass
class SearchReport:
    m: int
    n: int
    max_order: int
    per_order: list[LevelCount] = field(default_factory=list)
    extremal_order: int = 0
    representatives: list[str] = field(default_factory=list)
    stats: dict = field(default_factory=dict)
    # canonical representatives per order; kept in memory only
    levels: dict[int, list[OrientedGraph]] = field(default_factory=dict, repr=False)

    @property
    def complete(self) -> bool:
        return all(level.complete for level in self.per_order)

    @property
    def ramsey_number(self) -> int | None:
        """r(I_m, L_n) when a fully searched level came out empty, else ``None``."""
        for level in self.per_order:
            if not level.complete:
                return None
            if level.classes == 0:
                return level.order
        return None

    def classes_at(self, order: int) -> int:
        for level in self.per_order:
            if level.order == order:
                return level.classes
        raise KeyError(order)

    def to_dict(self) -> dict:
        return {
            "m": self.m,
            "n": self.n,
            "max_order": self.max_order,
            "per_order": [
                {"order": lv.order, "classes": lv.classes, "complete": lv.complete}
                for lv in self.per_order
            ],
            "extremal_order": self.extremal_order,
            "ramsey_number": self.ramsey_number,
            "representatives": self.representatives,
            "stats": self.stats,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"


class SearchAborted(RuntimeError):
    """A level outgrew the class cap; ``report`` holds the completed levels."""

    def __init__(self, message: str, report: SearchReport):
        super().__init__(message)
        self.report = report


def _extend(parent: OrientedGraph, cfg: SearchConfig, stop_at_first: bool = False):
    """Return ``(results, stats)``; results pair each new canonical code with its child.

    Extensions are enumerated old-vertex-ascending with choices in the order
    none, new -> old, old -> new, and pruned as soon as the arcs decided so
    far already force a forbidden pattern through the new vertex.
    """
    k = parent.order
    m, n = cfg.m, cfg.n
    cap = cfg.m - 1 if cfg.uses_degree_cap else None
    p_out, p_in = parent.out_adj, parent.in_adj
    non_adj = [parent.non_adjacent(v) for v in range(k)]
    stats: Counter = Counter()
    seen: set[bytes] = set()
    results: list[tuple[bytes, OrientedGraph]] = []

    def independent_through(z: int, j: int) -> bool:
        # a new independent m-set would be {new, j} plus m-2 vertices of z
        if m <= 2:
            return True
        return _independent_search(parent, m - 2, z & non_adj[j]) is not None

    def step(j: int, out: int, inn: int, z: int) -> bool:
        stats["nodes"] += 1
        if j == k:
            child_out = [p_out[u] | ((inn >> u & 1) << k) for u in range(k)]
            child_out.append(out)
            child = OrientedGraph(k + 1, child_out)
            code, perm = canonical_labeling(child)
            if code in seen:
                stats["canonical"] += 1
                return False
            seen.add(code)
            results.append((code, child.relabel(perm)))
            return stop_at_first
        bit = 1 << j
        decided = bit - 1
        # no arc between new vertex and j
        if independent_through(z, j):
            stats["independence"] += 1
        elif step(j + 1, out, inn, z | bit):
            return True
        # arc new -> j
        if cap is not None and (out.bit_count() >= cap or p_in[j].bit_count() >= cap):
            stats["degree-cap"] += 1
        elif tournament_through(p_out, n, out | bit, inn, decided | bit):
            stats["tournament"] += 1
        elif step(j + 1, out | bit, inn, z):
            return True
        # arc j -> new
        if cap is not None and (inn.bit_count() >= cap or p_out[j].bit_count() >= cap):
            stats["degree-cap"] += 1
        elif tournament_through(p_out, n, out, inn | bit, decided | bit):
            stats["tournament"] += 1
        elif step(j + 1, out, inn | bit, z):
            return True
        return False

    # the new vertex alone must not already be a pattern
    if m > 1 and n > 1:
        step(0, 0, 0, 0)
    return results, stats


def _extend_chunk(args):
    parents, cfg, stop_at_first = args
    merged: dict[bytes, tuple[int, ...]] = {}
    stats: Counter = Counter()
    for out_adj in parents:
        parent = OrientedGraph(len(out_adj), out_adj)
        found, st = _extend(parent, cfg, stop_at_first)
        stats.update(st)
        for code, child in found:
            if code in merged:
                stats["canonical"] += 1
            else:
                merged[code] = child.out_adj
        if stop_at_first and merged:
            break
    return merged, stats


def _chunks(items: list, count: int) -> list[list]:
    size = max(1, -(-len(items) // count))
    return [items[i:i + size] for i in range(0, len(items), size)]


def extremal_search(cfg: SearchConfig, progress=None) -> SearchReport:
    """Enumerate all (I_m, L_n)-free classes level by level up to ``cfg.max_order``.

    ``progress(order, classes)`` is called after every finished level.  The
    result does not depend on ``worker_count``: each level is the sorted union
    of the canonical codes found by all workers.
    """
    report = SearchReport(cfg.m, cfg.n, cfg.max_order)
    stats: Counter = Counter({key: 0 for key in ("nodes",) + PRUNE_REASONS})
    single = OrientedGraph(1)
    level: dict[bytes, tuple[int, ...]] = {}
    if is_free(single, cfg.m, cfg.n):
        level[canonical_labeling(single)[0]] = single.out_adj
    _record(report, 1, level, True, progress)

    pool = ProcessPoolExecutor(cfg.worker_count) if cfg.worker_count > 1 else None
    try:
        for order in range(2, cfg.max_order + 1):
            if not level:
                _record(report, order, {}, True, progress)
                continue
            stop_at_first = cfg.mode == "find-any" and order == cfg.max_order
            parents = [level[code] for code in sorted(level)]
            jobs = [(chunk, cfg, stop_at_first) for chunk in _chunks(parents, cfg.worker_count * 4)]
            results = pool.map(_extend_chunk, jobs) if pool else map(_extend_chunk, jobs)
            nxt: dict[bytes, tuple[int, ...]] = {}
            for merged, st in results:
                stats.update(st)
                for code, out_adj in merged.items():
                    if code in nxt:
                        stats["canonical"] += 1
                    else:
                        nxt[code] = out_adj
                if len(nxt) > cfg.class_cap:
                    _finish(report, stats)
                    raise SearchAborted(
                        f"order {order} exceeded the class cap of {cfg.class_cap}", report
                    )
                if stop_at_first and nxt:
                    break
            if stop_at_first and nxt:
                first = min(nxt)
                nxt = {first: nxt[first]}
            level = nxt
            _record(report, order, level, not stop_at_first or not level, progress)
    finally:
        if pool is not None:
            pool.shutdown()

    _finish(report, stats)
    return report


def _finish(report: SearchReport, stats: Counter) -> None:
    report.stats = dict(stats)
    nonempty = [lv.order for lv in report.per_order if lv.classes > 0]
    report.extremal_order = max(nonempty, default=0)
    if report.extremal_order:
        report.representatives = [
            format_arc_list(g) for g in report.levels[report.extremal_order]
        ]


def _record(report: SearchReport, order: int, level: dict, complete: bool, progress) -> None:
    graphs = [OrientedGraph(order, level[code]) for code in sorted(level)]
    report.levels[order] = graphs
    report.per_order.append(LevelCount(order, len(graphs), complete))
    log.info("order %d: %d classes", order, len(graphs))
    if progress is not None:
        progress(order, len(graphs))


# -- Cayley scan ------------------------------------------------------------


@dataclass
class CayleyScanReport:
    group: str
    order: int
    m: int
    n: int
    scanned: int = 0
    free: int = 0
    free_connection_sets: list[list[str]] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "group": self.group,
            "order": self.order,
            "m": self.m,
            "n": self.n,
            "scanned": self.scanned,
            "free": self.free,
            "free_connection_sets": self.free_connection_sets,
        }


def cayley_scan(group: str, order: int, m: int, n: int) -> CayleyScanReport:
    report = CayleyScanReport(group, order, m, n)
    for cay in enumerate_cayley(group, order):
        report.scanned += 1
        if is_free(cay.graph, m, n):
            report.free += 1
            report.free_connection_sets.append(list(cay.connection))
    return report


# -- Ramsey value verification ----------------------------------------------


@dataclass
class RamseyVerdict:
    m: int
    n: int
    claimed: int
    status: str
    lower_side: str | None = None
    upper_side: str | None = None

    @property
    def exact(self) -> bool:
        return self.status == "exact"

    def to_dict(self) -> dict:
        return {
            "m": self.m,
            "n": self.n,
            "claimed": self.claimed,
            "status": self.status,
            "lower_side": self.lower_side,
            "upper_side": self.upper_side,
        }


def verify_ramsey_value(
    m: int, n: int, claimed: int, search: SearchReport | None = None
) -> RamseyVerdict:
    """Certify ``r(I_m, L_n) = claimed`` from a free witness on ``claimed - 1`` vertices and an upper bound.

    The lower side comes from a named witness or a search representative.
    The upper side comes from a completed search that found no free graph on
    ``claimed`` vertices, or else from the closed-form bounds; tabulated
    values are never used, since that would be circular.
    """
    verdict = RamseyVerdict(m, n, claimed, "lower-side-unknown")

    for w in WITNESSES.values():
        if (w.m, w.n) == (m, n) and w.spec.modulus == claimed - 1:
            if is_free(build_circulant(w.spec), m, n):
                verdict.lower_side = f"witness {w.name} is (I_{m}, L_{n})-free on {claimed - 1} vertices"
            break
    searched = search is not None and (search.m, search.n) == (m, n)
    if verdict.lower_side is None and searched and claimed - 1 in search.levels:
        for g in search.levels[claimed - 1]:
            if is_free(g, m, n):
                verdict.lower_side = f"search representative is (I_{m}, L_{n})-free on {claimed - 1} vertices"
                break

    if searched and search.ramsey_number == claimed:
        verdict.upper_side = f"complete search: no (I_{m}, L_{n})-free graph on {claimed} vertices"
        upper = claimed
    else:
        upper, src = formula_upper(m, n)
        verdict.upper_side = f"formula {src} gives upper bound {upper}"

    if verdict.lower_side is None:
        return verdict
    if upper < claimed:
        verdict.status = "refuted"
    elif upper == claimed:
        verdict.status = "exact"
    else:
        verdict.status = "upper-side-open"
    # the combined table must agree with a certified value
    if verdict.exact and best_bounds(m, n).upper < claimed:
        verdict.status = "refuted"
    return verdict
