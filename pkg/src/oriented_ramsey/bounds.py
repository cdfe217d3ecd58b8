"""Upper and lower bounds for r(I_m, L_n) and the table that combines them.

``ld`` in the formulas below is the base-2 logarithm.  Closed forms that are
irrational are rounded up to an integer, because Ramsey numbers are integers;
ceilings are computed exactly when ``m`` is a power of two and with
high-precision arithmetic otherwise.
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import asdict, dataclass
from fractions import Fraction
from functools import lru_cache

import mpmath

# Exact values of r(I_m, L_n), keyed by (m, n).
KNOWN_VALUES: dict[tuple[int, int], int] = {
    (2, 3): 4,
    (2, 4): 8,
    (2, 5): 14,
    (2, 6): 28,
    (3, 3): 9,
    (4, 3): 15,
    (5, 3): 23,
}

# Classical r(I_m, K_3) for m = 2..9 and the two K_4 values that are used.
CLASSICAL_K3 = {2: 3, 3: 6, 4: 9, 5: 14, 6: 18, 7: 23, 8: 28, 9: 36}
CLASSICAL_EXTRA = {(4, 4): 18, (5, 4): 25}

# Witness orders, kept here so the table does not depend on constructing graphs.
WITNESS_ORDERS: dict[tuple[int, int], int] = {(3, 3): 8, (4, 3): 14, (5, 3): 22}

PROVENANCE_TAGS = (
    "known-value",
    "witness",
    "recurrence",
    "quadratic",
    "exponential",
    "appendix-formula",
    "asymptotic-L3",
    "asymptotic-general",
    "classical-sandwich",
)


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise ValueError(message)


def binomial(a: int, b: int) -> int:
    """``C(a, b)``, taken as 0 whenever ``b < 0``, ``b > a`` or ``a < 0``."""
    if a < 0 or b < 0 or b > a:
        return 0
    return math.comb(a, b)


def classical_ramsey(m: int, n: int) -> int | None:
    """Tabulated r(I_m, K_n), or ``None`` when the value is not in the table.

    Besides the cited constants this uses the symmetry r(m, n) = r(n, m) and
    the trivial values r(m, 2) = m, r(m, 1) = 1.
    """
    if m < 1 or n < 1:
        return None
    if min(m, n) == 1:
        return 1
    if n == 2:
        return m
    if m == 2:
        return n
    if n == 3:
        return CLASSICAL_K3.get(m)
    if m == 3:
        return CLASSICAL_K3.get(n)
    return CLASSICAL_EXTRA.get((m, n), CLASSICAL_EXTRA.get((n, m)))


# -- closed forms -----------------------------------------------------------


def quadratic_upper(m: int) -> int:
    _require(m >= 3, f"quadratic bound needs m >= 3, got {m}")
    return m * m - m + 3


def exponential_upper(n: int) -> int:
    _require(n >= 1, f"exponential bound needs n >= 1, got {n}")
    _require(n <= 62, "exponential bound limited to n <= 62")
    return 1 << (n - 1)


def appendix_v(m: int, n: int) -> int:
    _require(m >= 2 and n >= 3, f"appendix formula needs m >= 2 and n >= 3, got ({m}, {n})")
    total = sum(binomial(i + m - 1, i + 1) << i for i in range(n - 1))
    return total - (binomial(m + n - 6, m - 4) << (n - 3)) + 1


def edge_minimum(m: int) -> int:
    """Arc count forced in an (I_m, L_3)-free graph on m^2 - m + 2 vertices."""
    _require(m >= 3, f"edge minimum needs m >= 3, got {m}")
    num = (m * m - m + 2) * (2 * m - 3)
    if num % 2:
        raise ArithmeticError(f"edge minimum numerator {num} is odd")
    return num // 2


def alon_lower_independence(v: float, d: float, r: float) -> float:
    """``v ld d / (160 d ld(r + 1))``; a float diagnostic, not used in the table."""
    _require(d >= 1, "degree must be at least 1")
    _require(v >= 1 and r >= 1, "vertex count and colour count must be at least 1")
    return v * math.log2(d) / (160 * d * math.log2(r + 1))


def alon_average_lower_independence(v: float, d: float, r: float) -> float:
    """Average-degree variant: ``v ld(2d) / (640 d ld(r + 1))``."""
    _require(d >= 1, "average degree must be at least 1")
    _require(v >= 1 and r >= 1, "vertex count and colour count must be at least 1")
    return v * math.log2(2 * d) / (640 * d * math.log2(r + 1))


def sparse_triangle_lower_independence(v: float, d: float, eps: float) -> float:
    """``2^-16 eps (v / d) ld d`` for graphs with few transitive triangles."""
    _require(d >= 1 and eps > 0, "need d >= 1 and eps > 0")
    return 2.0 ** -16 * eps * v / d * math.log2(d)


def _ceil_over_log_power(numerator: int, m: int, power: int) -> int:
    """``ceil(numerator / (ld m)^power)`` for ``m >= 2``."""
    if power == 0:
        return numerator
    if m & (m - 1) == 0:
        return math.ceil(Fraction(numerator, (m.bit_length() - 1) ** power))
    with mpmath.workprec(numerator.bit_length() + 64 * (power + 2)):
        return int(mpmath.ceil(mpmath.mpf(numerator) / mpmath.log(m, 2) ** power))


def asymptotic_upper_l3(m: int) -> int:
    _require(m >= 2, f"needs m >= 2, got {m}")
    return _ceil_over_log_power(2 ** 9 * m * m, m, 1)


def asymptotic_upper_general(m: int, n: int) -> int:
    _require(m >= 2 and n >= 2, f"needs m, n >= 2, got ({m}, {n})")
    return _ceil_over_log_power(2 ** (19 * n) * m ** (n - 1), m, n - 2)


@dataclass(frozen=True)
class Sandwich:
    """Classical bounds r(m, n) <= r(I_m, L_n) <= r(m, 2^(n-1)); ``None`` if untabulated."""

    lower: int | None
    upper: int | None


def classical_lower(m: int, n: int) -> int:
    """Largest tabulated r(m', n') with m' <= m, n' <= n; classical numbers are monotone."""
    return max(
        value
        for a in range(1, m + 1)
        for b in range(1, n + 1)
        if (value := classical_ramsey(a, b)) is not None
    )


def classical_sandwich(m: int, n: int) -> Sandwich:
    upper = classical_ramsey(m, 2 ** (n - 1)) if n <= 63 else None
    return Sandwich(classical_ramsey(m, n), upper)


# -- combined table ---------------------------------------------------------


@dataclass(frozen=True)
class BoundEntry:
    m: int
    n: int
    lower: int
    upper: int
    exact: bool
    lower_src: str
    upper_src: str

    def __post_init__(self):
        if self.lower > self.upper:
            raise ValueError(f"inconsistent bounds at ({self.m}, {self.n}): {self.lower} > {self.upper}")


def recurrence_upper(m: int, n: int, sub_upper=None) -> int:
    """``2 U(m, n-1) + U(m-1, n) - 1``.

    ``sub_upper(m, n)`` supplies the upper bounds of the two smaller cells and
    defaults to the best entry of the combined table.  Both smaller cells must
    have m, n >= 2, so this needs m, n >= 3.
    """
    _require(m >= 3 and n >= 3, f"recurrence needs m, n >= 3, got ({m}, {n})")
    if sub_upper is None:
        sub_upper = lambda a, b: best_bounds(a, b).upper  # noqa: E731
    return 2 * sub_upper(m, n - 1) + sub_upper(m - 1, n) - 1


def _pick(candidates: list[tuple[str, int]], best) -> tuple[int, str]:
    value = best(v for _, v in candidates)
    tags = [t for t, v in candidates if v == value]
    return value, "+".join(dict.fromkeys(tags))


def _formula_candidates(m: int, n: int) -> list[tuple[str, int]]:
    ups: list[tuple[str, int]] = []
    sandwich_upper = classical_sandwich(m, n).upper
    if sandwich_upper is not None:
        ups.append(("classical-sandwich", sandwich_upper))
    if m >= 3 and n >= 3:
        ups.append(("recurrence", recurrence_upper(m, n)))
    if n == 3 and m >= 3:
        ups.append(("quadratic", quadratic_upper(m)))
    if m == 2 and n <= 62:
        ups.append(("exponential", exponential_upper(n)))
    if n >= 3:
        ups.append(("appendix-formula", appendix_v(m, n)))
    if n == 3:
        ups.append(("asymptotic-L3", asymptotic_upper_l3(m)))
    ups.append(("asymptotic-general", asymptotic_upper_general(m, n)))
    return ups


def formula_upper(m: int, n: int) -> tuple[int, str]:
    """Best upper bound from closed forms alone, ignoring the cell's tabulated value.

    Smaller cells feeding the recurrence may still use tabulated values.
    """
    _require(m >= 2 and n >= 2, f"table covers m, n >= 2, got ({m}, {n})")
    return _pick(_formula_candidates(m, n), min)


@lru_cache(maxsize=None)
def best_bounds(m: int, n: int) -> BoundEntry:
    """Best lower and upper bound for r(I_m, L_n) from every available source.

    Tied sources are all named in the provenance, joined by ``+``.
    """
    _require(m >= 2 and n >= 2, f"table covers m, n >= 2, got ({m}, {n})")
    lows: list[tuple[str, int]] = []
    ups: list[tuple[str, int]] = []

    if n == 2:
        # any m-vertex graph either has an arc or is independent
        lows.append(("known-value", m))
        ups.append(("known-value", m))
    if (m, n) in KNOWN_VALUES:
        lows.append(("known-value", KNOWN_VALUES[m, n]))
        ups.append(("known-value", KNOWN_VALUES[m, n]))
    if (m, n) in WITNESS_ORDERS:
        lows.append(("witness", WITNESS_ORDERS[m, n] + 1))
    lows.append(("classical-sandwich", classical_lower(m, n)))
    ups.extend(_formula_candidates(m, n))

    lower, lower_src = _pick(lows, max)
    upper, upper_src = _pick(ups, min)
    return BoundEntry(m, n, lower, upper, lower == upper, lower_src, upper_src)


def bounds_grid(m_max: int, n_max: int) -> list[BoundEntry]:
    """Rows for 2 <= m <= m_max, 2 <= n <= n_max, m-major."""
    return [best_bounds(m, n) for m in range(2, m_max + 1) for n in range(2, n_max + 1)]


CSV_FIELDS = ("m", "n", "lower", "upper", "exact", "lower_src", "upper_src")


def bounds_to_csv(rows: list[BoundEntry]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=CSV_FIELDS, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        d = asdict(row)
        d["exact"] = "true" if row.exact else "false"
        writer.writerow(d)
    return buf.getvalue()


def bounds_to_json(rows: list[BoundEntry]) -> str:
    return json.dumps([{k: asdict(r)[k] for k in CSV_FIELDS} for r in rows], indent=2) + "\n"
