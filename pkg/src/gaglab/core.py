"""Cayley-table bundles and their defining laws.

A structure is a finite carrier {0, .., n-1} together with one n-by-n
multiplication table per gamma operation, so ``tables[g][a][b]`` is the
product of a and b under the g-th operation.  Elements and gamma operations
are 0-based indices everywhere in this package; display labels live on the
structure and matter only for parsing and reports.  Subsets of the carrier
are plain int bitmasks (bit i set <=> element i present).
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Literal, Optional

MAX_ORDER = 64  # one bit per element in a subset mask


class LimitExceededError(ValueError):
    """An exhaustive scan was refused because the input is too large."""


class Law(Enum):
    LEFT_INVERTIVE = "left-invertive"  # (a g b) d c == (c g b) d a
    AG_STAR_STAR = "ag-star-star"      # a g (b d c) == b g (a d c)
    MEDIAL = "medial"                  # (x a y) b (l g m) == (x a l) b (y g m)
    PARAMEDIAL = "paramedial"          # (x a y) b (l g m) == (m a l) b (y g x)
    ASSOCIATIVE = "associative"        # (a g b) d c == a g (b d c)
    COMMUTATIVE = "commutative"        # a g b == b g a


@dataclass(frozen=True)
class LawVerdict:
    """Result of an exhaustive law check.

    ``witness`` is None when the law holds, otherwise the first violating
    instance in scan order, as a tuple alternating elements and gamma
    indices: (a, g, b) for the commutative law, (a, g, b, d, c) for the
    three-variable laws, (x, a, y, b, l, g, m) for medial/paramedial.
    """
    holds: bool
    witness: Optional[tuple] = None


@dataclass(frozen=True)
class RegularityWitness:
    x: int
    beta: int
    gamma: int


def _no_ws(token: str) -> bool:
    return bool(token) and "#" not in token and token == "".join(token.split())


@dataclass(frozen=True)
class GammaGroupoid:
    """Immutable bundle of Cayley tables over a common carrier."""

    tables: tuple[tuple[tuple[int, ...], ...], ...]
    labels: tuple[str, ...]
    gamma_names: tuple[str, ...]

    def __post_init__(self):
        n = len(self.labels)
        m = len(self.gamma_names)
        if n < 1 or m < 1:
            raise ValueError("carrier and gamma set must be non-empty")
        if n > MAX_ORDER:
            raise ValueError(f"carrier size {n} exceeds supported maximum {MAX_ORDER}")
        if len(self.tables) != m:
            raise ValueError("need exactly one table per gamma operation")
        for t in self.tables:
            if len(t) != n or any(len(row) != n for row in t):
                raise ValueError("every table must be n-by-n")
            for row in t:
                for v in row:
                    if not 0 <= v < n:
                        raise ValueError(f"table entry {v} outside carrier [0, {n})")
        if len(set(self.labels)) != n:
            raise ValueError("element labels must be unique")
        if len(set(self.gamma_names)) != m:
            raise ValueError("gamma names must be unique")
        for tok in (*self.labels, *self.gamma_names):
            if not _no_ws(tok):
                raise ValueError(f"bad display token {tok!r}: whitespace and '#' are reserved")

    @classmethod
    def from_tables(cls, tables, labels=None, gamma_names=None) -> "GammaGroupoid":
        """Build from nested sequences, defaulting labels to 1..n and gamma names to g1..gm."""
        tt = tuple(tuple(tuple(int(v) for v in row) for row in t) for t in tables)
        n = len(tt[0]) if tt else 0
        if labels is None:
            labels = default_labels(n)
        if gamma_names is None:
            gamma_names = default_gamma_names(len(tt))
        return cls(tt, tuple(labels), tuple(gamma_names))

    @property
    def order(self) -> int:
        return len(self.labels)

    @property
    def gamma_count(self) -> int:
        return len(self.gamma_names)

    @property
    def carrier(self) -> int:
        """Bitmask of the whole carrier."""
        return (1 << self.order) - 1

    def apply(self, a: int, g: int, b: int) -> int:
        if not 0 <= a < self.order or not 0 <= b < self.order:
            raise IndexError(f"element index out of range: ({a}, {b}) for order {self.order}")
        if not 0 <= g < self.gamma_count:
            raise IndexError(f"gamma index {g} out of range for {self.gamma_count} operations")
        return self.tables[g][a][b]

    def element_index(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise KeyError(f"unknown element label {label!r}") from None

    def gamma_index(self, name: str) -> int:
        try:
            return self.gamma_names.index(name)
        except ValueError:
            raise KeyError(f"unknown gamma name {name!r}") from None

    def subset_of_labels(self, labels: Iterable[str]) -> int:
        return subset_of(self.element_index(t) for t in labels)

    def labels_of_subset(self, mask: int) -> tuple[str, ...]:
        return tuple(self.labels[i] for i in members(mask))

    def __repr__(self):
        return f"GammaGroupoid(order={self.order}, gammas={self.gamma_count})"


def default_labels(n: int) -> tuple[str, ...]:
    return tuple(str(i + 1) for i in range(n))


def default_gamma_names(m: int) -> tuple[str, ...]:
    return tuple(f"g{i + 1}" for i in range(m))


# ---------------------------------------------------------------------------
# subsets as bitmasks

def subset_of(indices: Iterable[int]) -> int:
    mask = 0
    for i in indices:
        mask |= 1 << i
    return mask


def members(mask: int) -> tuple[int, ...]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def _check_width(G: GammaGroupoid, mask: int, what: str = "subset"):
    if mask < 0 or mask >> G.order:
        raise ValueError(f"{what} {mask:#x} does not fit carrier of size {G.order}")


def subset_product(G: GammaGroupoid, A: int, B: int) -> int:
    """All products a g b with a in A, g ranging over every gamma, b in B."""
    _check_width(G, A, "left operand")
    _check_width(G, B, "right operand")
    result = 0
    bs = members(B)
    for a in members(A):
        for table in G.tables:
            row = table[a]
            for b in bs:
                result |= 1 << row[b]
    return result


# ---------------------------------------------------------------------------
# law checking

def check_law(G: GammaGroupoid, law: Law) -> LawVerdict:
    """Exhaustively check one law; report the first violation in scan order.

    Scan order is element variables outer, gamma variables inner, each in
    ascending index order, so the reported witness is reproducible.
    """
    n, m = G.order, G.gamma_count
    T = G.tables
    rng, grng = range(n), range(m)
    if law in (Law.LEFT_INVERTIVE, Law.AG_STAR_STAR, Law.ASSOCIATIVE):
        for a in rng:
            for b in rng:
                for c in rng:
                    for g in grng:
                        for d in grng:
                            if law is Law.LEFT_INVERTIVE:
                                l, r = T[d][T[g][a][b]][c], T[d][T[g][c][b]][a]
                            elif law is Law.AG_STAR_STAR:
                                l, r = T[g][a][T[d][b][c]], T[g][b][T[d][a][c]]
                            else:
                                l, r = T[d][T[g][a][b]][c], T[g][a][T[d][b][c]]
                            if l != r:
                                return LawVerdict(False, (a, g, b, d, c))
    elif law in (Law.MEDIAL, Law.PARAMEDIAL):
        for x in rng:
            for y in rng:
                for l_ in rng:
                    for m_ in rng:
                        for ga in grng:
                            for gb in grng:
                                for gg in grng:
                                    lhs = T[gb][T[ga][x][y]][T[gg][l_][m_]]
                                    if law is Law.MEDIAL:
                                        rhs = T[gb][T[ga][x][l_]][T[gg][y][m_]]
                                    else:
                                        rhs = T[gb][T[ga][m_][l_]][T[gg][y][x]]
                                    if lhs != rhs:
                                        return LawVerdict(False, (x, ga, y, gb, l_, gg, m_))
    elif law is Law.COMMUTATIVE:
        for a in rng:
            for b in rng:
                for g in grng:
                    if T[g][a][b] != T[g][b][a]:
                        return LawVerdict(False, (a, g, b))
    else:
        raise ValueError(f"unknown law {law!r}")
    return LawVerdict(True)


def law_sides(G: GammaGroupoid, law: Law, witness: tuple) -> tuple[int, int]:
    """Evaluate both sides of ``law`` at a witness-shaped tuple."""
    T = G.tables
    if law in (Law.LEFT_INVERTIVE, Law.AG_STAR_STAR, Law.ASSOCIATIVE):
        a, g, b, d, c = witness
        if law is Law.LEFT_INVERTIVE:
            return T[d][T[g][a][b]][c], T[d][T[g][c][b]][a]
        if law is Law.AG_STAR_STAR:
            return T[g][a][T[d][b][c]], T[g][b][T[d][a][c]]
        return T[d][T[g][a][b]][c], T[g][a][T[d][b][c]]
    if law in (Law.MEDIAL, Law.PARAMEDIAL):
        x, ga, y, gb, l_, gg, m_ = witness
        lhs = T[gb][T[ga][x][y]][T[gg][l_][m_]]
        if law is Law.MEDIAL:
            return lhs, T[gb][T[ga][x][l_]][T[gg][y][m_]]
        return lhs, T[gb][T[ga][m_][l_]][T[gg][y][x]]
    a, g, b = witness
    return T[g][a][b], T[g][b][a]


def identities(G: GammaGroupoid, side: Literal["left", "right"]) -> set[int]:
    """Elements e with e g a == a for all a, g (side="left"), or a g e == a (side="right")."""
    if side not in ("left", "right"):
        raise ValueError(f"side must be 'left' or 'right', got {side!r}")
    n = G.order
    out = set()
    for e in range(n):
        if side == "left":
            ok = all(t[e][a] == a for t in G.tables for a in range(n))
        else:
            ok = all(t[a][e] == a for t in G.tables for a in range(n))
        if ok:
            out.add(e)
    return out


def regular_witness(G: GammaGroupoid, a: int) -> Optional[RegularityWitness]:
    """First (x, beta, gamma) in lexicographic order with (a beta x) gamma a == a."""
    if not 0 <= a < G.order:
        raise IndexError(f"element index {a} out of range")
    T = G.tables
    m = G.gamma_count
    for x in range(G.order):
        for b in range(m):
            t = T[b][a][x]
            for g in range(m):
                if T[g][t][a] == a:
                    return RegularityWitness(x, b, g)
    return None


def is_regular(G: GammaGroupoid) -> bool:
    return all(regular_witness(G, a) is not None for a in range(G.order))
