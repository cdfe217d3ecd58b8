"""Circulant and parity-circulant oriented graphs, named witnesses, Cayley digraphs."""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import product
from typing import Iterator, NamedTuple

from .digraph import OrientedGraph


class ConstructionError(ValueError):
    pass


@dataclass(frozen=True)
class CirculantSpec:
    """Arc rules on Z_k.

    ``global_residues`` give arcs ``x -> x + r`` for every ``x``; the parity
    sets apply only to even or odd ``x``.  Residues are normalised into
    ``1..k-1`` on construction, so ``-2`` mod 8 is stored as ``6``.
    """

    modulus: int
    global_residues: tuple[int, ...] = ()
    even_residues: tuple[int, ...] = ()
    odd_residues: tuple[int, ...] = ()

    def __post_init__(self):
        k = self.modulus
        if k < 2:
            raise ValueError(f"modulus must be at least 2, got {k}")
        for name in ("global_residues", "even_residues", "odd_residues"):
            raw = getattr(self, name)
            norm = tuple(sorted({r % k for r in raw}))
            if 0 in norm:
                raise ValueError(f"{name} contains a residue divisible by {k}")
            object.__setattr__(self, name, norm)

    def rules(self) -> Iterator[tuple[int, int]]:
        """Every ``(x, r)`` pair the spec generates, ``x`` ascending."""
        for x in range(self.modulus):
            rs = set(self.global_residues)
            rs.update(self.even_residues if x % 2 == 0 else self.odd_residues)
            for r in sorted(rs):
                yield x, r

    def to_text(self) -> str:
        k = self.modulus

        def fmt(rs):
            return ",".join(_signed(r, k) for r in rs)

        return f"k={k}; all={fmt(self.global_residues)}; even={fmt(self.even_residues)}; odd={fmt(self.odd_residues)}"


def _signed(r: int, k: int) -> str:
    return f"+{r}" if r <= k // 2 else f"-{k - r}"


_FIELD = re.compile(r"^\s*(k|all|even|odd)\s*=\s*(.*?)\s*$")


def parse_circulant_spec(text: str) -> CirculantSpec:
    """Parse ``k=14; all=+1,-2; even=+4; odd=-6``.  Omitted residue fields are empty."""
    fields: dict[str, str] = {}
    for chunk in text.split(";"):
        if not chunk.strip():
            continue
        m = _FIELD.match(chunk)
        if m is None:
            raise ValueError(f"cannot parse circulant field {chunk.strip()!r}")
        key, value = m.groups()
        if key in fields:
            raise ValueError(f"field {key!r} given twice")
        fields[key] = value
    if "k" not in fields:
        raise ValueError("circulant spec needs k=<modulus>")

    def residues(key):
        raw = fields.get(key, "")
        if not raw:
            return ()
        try:
            return tuple(int(tok) for tok in raw.split(","))
        except ValueError:
            raise ValueError(f"bad residue list for {key}: {raw!r}") from None

    return CirculantSpec(int(fields["k"]), residues("all"), residues("even"), residues("odd"))


def build_circulant(spec: CirculantSpec) -> OrientedGraph:
    """Graph on ``Z_k`` with arc ``x -> x + r`` for every applicable rule."""
    k = spec.modulus
    if k > 64:
        raise ConstructionError(f"modulus {k} exceeds the 64-vertex limit")
    source: dict[tuple[int, int], tuple[int, int]] = {}
    out_adj = [0] * k
    for x, r in spec.rules():
        y = (x + r) % k
        if (y, x) in source:
            raise ConstructionError(
                f"rule (x={x}, r={_signed(r, k)}) reverses arc {y}->{x} from rule "
                f"(x={source[(y, x)][0]}, r={_signed(source[(y, x)][1], k)})"
            )
        source.setdefault((x, y), (x, r))
        out_adj[x] |= 1 << y
    return OrientedGraph(k, out_adj)


@dataclass(frozen=True)
class NamedWitness:
    name: str
    spec: CirculantSpec
    m: int
    n: int


WITNESSES: dict[str, NamedWitness] = {
    "W8": NamedWitness("W8", CirculantSpec(8, (1, -2)), 3, 3),
    "W14": NamedWitness("W14", CirculantSpec(14, (1, -2), (4,), (-6,)), 4, 3),
    "W22": NamedWitness("W22", CirculantSpec(22, (1, 4, -5, 10)), 5, 3),
}


def witness_info(name: str) -> NamedWitness:
    try:
        return WITNESSES[name.upper()]
    except KeyError:
        raise KeyError(f"unknown witness {name!r}; expected one of {sorted(WITNESSES)}") from None


def witness(name: str) -> OrientedGraph:
    return build_circulant(witness_info(name).spec)


# -- Cayley digraphs --------------------------------------------------------


class CayleyDigraph(NamedTuple):
    connection: tuple[str, ...]
    graph: OrientedGraph


MAX_CAYLEY_ORDER = 24


class _Group:
    """Finite group on ``0..order-1`` with labels for reporting."""

    def __init__(self, kind: str, order: int):
        if kind not in ("cyclic", "dihedral"):
            raise ValueError(f"unsupported group {kind!r}")
        if not 1 <= order <= MAX_CAYLEY_ORDER:
            raise ValueError(f"group order must be in 1..{MAX_CAYLEY_ORDER}, got {order}")
        if kind == "dihedral" and (order % 2 or order < 2):
            raise ValueError("dihedral group order must be even")
        self.kind = kind
        self.order = order
        self.rot = order if kind == "cyclic" else order // 2

    # dihedral elements: i < rot is r^i, rot + i is s r^i; (s^a r^i)(s^b r^j) = s^(a+b) r^((-1)^b i + j)
    def mul(self, g: int, h: int) -> int:
        if self.kind == "cyclic":
            return (g + h) % self.order
        a, i = divmod(g, self.rot)
        b, j = divmod(h, self.rot)
        return ((a + b) % 2) * self.rot + (((-i if b else i) + j) % self.rot)

    def inverse(self, g: int) -> int:
        if self.kind == "cyclic":
            return (-g) % self.order
        a, i = divmod(g, self.rot)
        return g if a else (-i) % self.rot

    def label(self, g: int) -> str:
        if self.kind == "cyclic":
            return str(g)
        a, i = divmod(g, self.rot)
        return f"s r^{i}" if a else f"r^{i}"

    def inverse_pairs(self) -> list[tuple[int, int]]:
        pairs = []
        for g in range(1, self.order):
            h = self.inverse(g)
            if g < h:
                pairs.append((g, h))
        return pairs


def enumerate_cayley(group: str, order: int) -> Iterator[CayleyDigraph]:
    """Every oriented Cayley digraph of the group, choice vectors in lexicographic order.

    For each inverse pair ``{g, g^-1}`` the connection set holds neither, ``g``
    or ``g^-1``; the identity and involutions never appear.
    """
    grp = _Group(group, order)
    pairs = grp.inverse_pairs()
    for choice in product(range(3), repeat=len(pairs)):
        conn = [pair[c - 1] for pair, c in zip(pairs, choice) if c]
        out_adj = [0] * order
        for x in range(order):
            for s in conn:
                out_adj[x] |= 1 << grp.mul(x, s)
        yield CayleyDigraph(tuple(grp.label(s) for s in conn), OrientedGraph(order, out_adj))


def cayley_count(group: str, order: int) -> int:
    return 3 ** len(_Group(group, order).inverse_pairs())
