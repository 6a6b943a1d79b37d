"""Rational scrolls P(O(d_1) + ... + O(d_m)) over P^1 and the case analyses
they support: hyperelliptic (rank 3) and trigonal (rank 4) Fano threefolds.

Top intersections use M^m = sum(d_i), M^(m-1).F = 1, and F.F = 0.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Optional, Sequence

from fano3.exactcore import Basis, DivisorClass, cls2


class ArityError(ValueError):
    """Wrong number of classes for a top intersection."""


@dataclass(frozen=True)
class ScrollData:
    """Splitting type (d_1 >= d_2 >= ... >= d_m >= 0)."""

    splitting: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.splitting) < 2:
            raise ValueError("scrolls here have rank >= 2")
        if any(d < 0 for d in self.splitting):
            raise ValueError("splitting degrees must be >= 0")
        object.__setattr__(self, "splitting", tuple(sorted(self.splitting, reverse=True)))

    @property
    def rank(self) -> int:
        return len(self.splitting)

    @property
    def degree(self) -> int:
        return sum(self.splitting)


def scroll_h0(s: ScrollData) -> int:
    """h^0 of the tautological class: sum (d_i + 1)."""
    return sum(d + 1 for d in s.splitting)


def scroll_intersection(s: ScrollData, classes: Sequence[DivisorClass]) -> Fraction:
    """Top intersection of rank(s) classes written in the (M, F) basis."""
    m = s.rank
    if len(classes) != m:
        raise ArityError(f"need exactly {m} classes, got {len(classes)}")
    for d in classes:
        if d.basis is not Basis.MF or d.rank != 2:
            raise ArityError("classes must be rank-2 in the (M, F) basis")
    a = [d.coords[0] for d in classes]
    b = [d.coords[1] for d in classes]
    all_m = Fraction(1)
    for ai in a:
        all_m *= ai
    one_f = Fraction(0)
    for j in range(m):
        term = b[j]
        for i in range(m):
            if i != j:
                term *= a[i]
        one_f += term
    return all_m * s.degree + one_f


def scroll_canonical(s: ScrollData) -> DivisorClass:
    """K = -m M + (sum d_i - 2) F."""
    return cls2(Basis.MF, -s.rank, s.degree - 2)


class DegreeBound(enum.Enum):
    BELOW_BOUND = "BelowBound"
    MINIMAL = "Minimal"
    ABOVE = "Above"


def minimal_degree_check(deg: int, ambient_dim: int, var_dim: int) -> DegreeBound:
    """Compare deg with codim + 1.  Presumes a nondegenerate variety: the
    bound deg >= codim + 1 only holds when X lies in no hyperplane, which
    this arithmetic check cannot verify."""
    if deg < 1 or var_dim < 1 or ambient_dim <= var_dim:
        raise ValueError("need deg >= 1 and ambient_dim > var_dim >= 1")
    bound = (ambient_dim - var_dim) + 1
    if deg < bound:
        return DegreeBound.BELOW_BOUND
    if deg == bound:
        return DegreeBound.MINIMAL
    return DegreeBound.ABOVE


def _splittings(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """Descending positive splittings of `total` into `parts` parts."""

    def rec(budget: int, slots: int, cap: int) -> Iterator[tuple[int, ...]]:
        if slots == 1:
            if 1 <= budget <= cap:
                yield (budget,)
            return
        for first in range(min(cap, budget - (slots - 1)), 0, -1):
            for rest in rec(budget - first, slots - 1, first):
                yield (first, *rest)

    yield from rec(total, parts, total)


@dataclass(frozen=True)
class HyperellipticCandidate:
    scroll: ScrollData
    branch_class: DivisorClass
    realized_as: Optional[str] = None

    @property
    def status(self) -> str:
        return "realized" if self.realized_as else "numeric-only"


def hyperelliptic_candidates(g: int) -> list[HyperellipticCandidate]:
    """All rank-3 splittings with d_i > 0, sum d_i = g - 1, each with the
    branch class 4M + 2(2 - sum d_i) F = (4, 2(3-g))."""
    if g < 2:
        raise ValueError("genus must be >= 2")
    branch = cls2(Basis.MF, 4, 2 * (3 - g))
    return [
        HyperellipticCandidate(ScrollData(sp), branch)
        for sp in _splittings(g - 1, 3)
    ]


@dataclass(frozen=True)
class TrigonalCandidate:
    scroll: ScrollData
    member_class: DivisorClass
    excluded: bool
    witness: Optional[Fraction] = None
    witness_k: Optional[int] = None
    realized_as: Optional[str] = None

    @property
    def status(self) -> str:
        if self.excluded:
            return "excluded"
        return "realized" if self.realized_as else "numeric-only"


def trigonal_candidates(g: int) -> list[TrigonalCandidate]:
    """All rank-4 splittings with d_i > 0, sum d_i = g - 2, with the member
    class X = 3M + (2 - sum d_i) F and, for each k with max d_i >= k (so that
    G' in |M - kF| exists), the sign test X.G'.G^2 >= 0 with G = M - F.
    The first negative witness excludes the splitting."""
    if g < 5:
        raise ValueError("genus must be >= 5")
    out: list[TrigonalCandidate] = []
    total = g - 2
    member = cls2(Basis.MF, 3, 2 - total)
    g_cls = cls2(Basis.MF, 1, -1)
    for sp in _splittings(total, 4):
        scroll = ScrollData(sp)
        excluded = False
        witness: Optional[Fraction] = None
        witness_k: Optional[int] = None
        for k in range(1, scroll.splitting[0] + 1):
            gp = cls2(Basis.MF, 1, -k)
            val = scroll_intersection(scroll, [member, gp, g_cls, g_cls])
            if val < 0:
                excluded, witness, witness_k = True, val, k
                break
        out.append(TrigonalCandidate(scroll, member, excluded, witness, witness_k))
    return out


def mark_realized(
    candidates: Sequence[HyperellipticCandidate | TrigonalCandidate],
    realized: dict[tuple[int, ...], str],
) -> list[HyperellipticCandidate | TrigonalCandidate]:
    """Annotate candidates whose splitting appears in the realized map
    (splitting -> catalog entry id); everything else keeps its status."""
    out = []
    for cand in candidates:
        entry = realized.get(cand.scroll.splitting)
        if entry is None:
            out.append(cand)
        else:
            out.append(
                type(cand)(**{**cand.__dict__, "realized_as": entry})  # type: ignore[arg-type]
            )
    return out
