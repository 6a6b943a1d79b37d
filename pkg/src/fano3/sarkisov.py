"""Enumeration of the second extremal contraction of a two-ray link.

Starting from the blowup of a line, conic, or point on an index-1 Fano
threefold of genus g with Picard group Z, the midpoint carries the exact
values ((-K)^3, (-K)^2.E, (-K).E^2) and the unknown Ebar^3 on the far side.
Every contraction type imposes two flop-invariant equations plus one that
solves Ebar^3; candidates surviving all integrality and positivity
constraints are then vetted against the catalog fact store.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Iterable, Literal, Optional, Sequence

from fano3.blowup import CurveCenter, PointCenter, blowup_curve, blowup_point
from fano3.exactcore import Basis, TrilinearForm, form2

Center = Literal["line", "conic", "point"]

CENTER_DATA: dict[str, CurveCenter | PointCenter] = {
    "line": CurveCenter(1, 0),
    "conic": CurveCenter(2, 0),
    "point": PointCenter(),
}

# length mu, discrepancy alpha (birational only) and the pairing constant k
# of the point-blowdown types.
MU = {"C1": 1, "C2": 2, "D1": 1, "D2": 2, "D3": 3, "B1": 1, "B2": 2, "B3/B4": 1, "B5": 1}
ALPHA = {"B1": Fraction(1), "B2": Fraction(2), "B3/B4": Fraction(1), "B5": Fraction(1, 2)}
TAG_BY_K = {4: "B2", 2: "B3/B4", 1: "B5"}
POINT_SINGULARITY = {
    "B2": "nonsingular point",
    "B3/B4": "ordinary double point or cDV point x1*x2 + x3^2 + x4^3",
    "B5": "quotient point C^3/{+-1}, non-Gorenstein of multiplicity 4",
}

# genus from which |-K_tilde - E| is guaranteed non-empty resp. of positive
# dimension, from the h^0 lower bounds g-5 / g-7 / g-8 on the three blowups.
EFFECTIVITY_NONEMPTY = {"line": 6, "conic": 8, "point": 9}
EFFECTIVITY_STRICT = {"line": 7, "conic": 9, "point": 10}


class InconsistentCandidate(ValueError):
    """A candidate with negative defect reached the defect computation."""


@dataclass(frozen=True)
class TargetInvariants:
    """What the second contraction lands on."""

    kind: Literal[
        "del-pezzo-fibration", "conic-bundle", "fano-curve-blowdown", "fano-point-blowdown"
    ]
    fiber_degree: Optional[int] = None
    discriminant_degree: Optional[int] = None
    iota_y: Optional[int] = None
    degree_y: Optional[int] = None
    antik_cube_y: Optional[int] = None
    genus_y: Optional[int] = None
    deg_z: Optional[int] = None
    genus_z: Optional[int] = None
    k: Optional[int] = None
    singularity: Optional[str] = None

    def subject_id(self) -> Optional[str]:
        """Catalog subject the target corresponds to, when identifiable."""
        if self.kind in ("fano-curve-blowdown", "fano-point-blowdown"):
            if self.iota_y == 4:
                return "p3"
            if self.iota_y == 3:
                return "quadric"
            if self.iota_y == 2 and self.degree_y is not None:
                return f"v{self.degree_y}"
            if self.iota_y == 1 and self.genus_y is not None:
                return f"fano-g{self.genus_y}"
        return None


@dataclass(frozen=True)
class LinkCandidate:
    """One numerically consistent second contraction."""

    center: Center
    g: int
    ctype: str
    mu: int
    a: int  # coefficients of Mbar (fiber types) resp. Fbar (birational types)
    b: int
    mbar: tuple[int, int]
    fbar: tuple[int, int]
    target: TargetInvariants
    ebar_cube: Fraction
    defect: Fraction
    e3_tilde: Fraction
    status: str = "candidate"
    m_cap: Optional[int] = None

    @property
    def birational(self) -> bool:
        return self.ctype.startswith("B")

    @property
    def confirmed(self) -> bool:
        return self.status == "confirmed"

    def midpoint(self) -> TrilinearForm:
        """The far-side form on (-K, Ebar), with the solved Ebar^3."""
        k3, ke, kee, _ = _midpoint_values(self.center, self.g)
        return form2(Basis.KE, k3, ke, kee, self.ebar_cube)


def _midpoint_values(center: Center, g: int) -> tuple[Fraction, Fraction, Fraction, Fraction]:
    data = CENTER_DATA[center]
    c = Fraction(2 * g - 2)
    form = blowup_point(c) if isinstance(data, PointCenter) else blowup_curve(c, data)
    return form.values  # type: ignore[return-value]


def midpoint_form(center: Center, g: int) -> TrilinearForm:
    """Midpoint form on (-K, E) for a named center on an index-1 source of
    genus g.  The first three values are flop-invariant; the E^3 slot holds
    the blowup-side value (Ebar^3 is fixed per candidate).  Higher-index
    sources go through fano3.blowup with explicit (antik_cube, center)."""
    return form2(Basis.KE, *_midpoint_values(center, g))


def _effectivity_ok(center: Center, g: int, a: int, b: int, birational: bool) -> bool:
    # b >= m*a (m = 1) whenever |-K - m*Ebar| is non-empty, strictly for
    # birational contractions once that system moves.
    if birational and g >= EFFECTIVITY_STRICT[center]:
        return b > a
    if g >= EFFECTIVITY_NONEMPTY[center]:
        return b >= a
    return True


def _m_cap(center: Center, g: int, a: int, b: int, birational: bool) -> Optional[int]:
    if g < EFFECTIVITY_NONEMPTY[center]:
        return None
    cap = (b - 1) // a if (birational and g >= EFFECTIVITY_STRICT[center]) else b // a
    return cap if cap >= 1 else None


def _fiber_candidates(
    center: Center, g: int, vals: tuple[Fraction, ...], bound: int
) -> Iterable[LinkCandidate]:
    k3, ke, kee, e3 = vals
    for kind, mus, q2_target in (("D", (1, 2, 3), 0), ("C", (1, 2), 2)):
        for mu in mus:
            b = mu
            for a in range(1, bound + 1):
                if k3 * a * a - 2 * a * b * ke + b * b * kee != q2_target:
                    continue
                lin = k3 * a - ke * b
                if kind == "D":
                    if lin.denominator != 1:
                        continue
                    dprime = int(lin)
                    if mu == 1 and not 1 <= dprime <= 6:
                        continue
                    if mu == 2 and dprime != 8:
                        continue
                    if mu == 3 and dprime != 9:
                        continue
                    tag = f"D{mu}"
                    target = TargetInvariants("del-pezzo-fibration", fiber_degree=dprime)
                else:
                    ddelta = 12 - lin
                    if ddelta.denominator != 1 or not 0 <= int(ddelta) <= 11:
                        continue
                    ddelta = int(ddelta)
                    if mu == 1 and ddelta < 3:
                        continue
                    if mu == 2 and ddelta != 0:
                        continue
                    tag = "C1" if ddelta > 0 else "C2"
                    target = TargetInvariants("conic-bundle", discriminant_degree=ddelta)
                if not _effectivity_ok(center, g, a, b, birational=False):
                    continue
                ebar = (k3 * a**3 - 3 * a * a * b * ke + 3 * a * b * b * kee) / Fraction(b**3)
                if ebar.denominator != 1:
                    continue
                defect = e3 - ebar
                if defect < 0:
                    continue
                yield LinkCandidate(
                    center, g, tag, mu, a, b, (a, b), (a, b), target, ebar, defect, e3,
                    m_cap=_m_cap(center, g, a, b, birational=False),
                )


def _b1_candidates(
    center: Center, g: int, vals: tuple[Fraction, ...], bound: int
) -> Iterable[LinkCandidate]:
    k3, ke, kee, e3 = vals
    for iota in (1, 2, 3, 4):
        for a_m in range(1, bound + 1):
            a_f = iota * a_m - 1
            if a_f < 1:
                continue
            b_f = iota
            iota_d = k3 * a_m * a_m - 2 * a_m * ke + kee  # Mbar^2.(-K) = iota*d(Y)
            if iota_d <= 0 or iota_d.denominator != 1 or int(iota_d) % iota:
                continue
            d = int(iota_d) // iota
            if iota == 4 and d != 1:
                continue
            if iota == 3 and d != 2:
                continue
            if iota == 2 and not 1 <= d <= 5:
                continue
            if iota == 1 and (d < 2 or d % 2):
                continue
            deg_z = a_m * a_f * k3 - (a_m * b_f + a_f) * ke + b_f * kee
            if deg_z.denominator != 1 or deg_z < 1:
                continue
            two_gz = a_f * a_f * k3 - 2 * a_f * b_f * ke + b_f * b_f * kee
            gz = (two_gz + 2) / 2
            if gz.denominator != 1 or gz < 0:
                continue
            if not _effectivity_ok(center, g, a_f, b_f, birational=True):
                continue
            ebar = k3 * a_m**3 - 3 * a_m * a_m * ke + 3 * a_m * kee - d  # Mbar^3 = d(Y)
            defect = e3 - ebar
            if defect < 0:
                continue
            target = TargetInvariants(
                "fano-curve-blowdown",
                iota_y=iota,
                degree_y=d,
                genus_y=d // 2 + 1 if iota == 1 else None,
                deg_z=int(deg_z),
                genus_z=int(gz),
            )
            yield LinkCandidate(
                center, g, "B1", 1, a_f, b_f, (a_m, 1), (a_f, b_f), target, ebar, defect, e3,
                m_cap=_m_cap(center, g, a_f, b_f, birational=True),
            )


def _integer_roots(aa: Fraction, bb: Fraction, cc: Fraction) -> list[int]:
    """Positive integer roots of aa*x^2 + bb*x + cc = 0 (aa != 0)."""
    disc = bb * bb - 4 * aa * cc
    if disc < 0:
        return []
    num = disc.numerator * disc.denominator
    root = math.isqrt(num)
    if root * root != num:
        return []
    sq = Fraction(root, disc.denominator)
    out = []
    for sign in (1, -1):
        x = (-bb + sign * sq) / (2 * aa)
        if x.denominator == 1 and x > 0:
            out.append(int(x))
    return sorted(set(out))


def _point_blowdown_candidates(
    center: Center, g: int, vals: tuple[Fraction, ...], bound: int
) -> Iterable[LinkCandidate]:
    k3, ke, kee, e3 = vals
    for a_f in range(1, bound + 1):
        # Fbar^2.(-K) = -2 solved for b_f
        for b_f in _integer_roots(kee, Fraction(-2 * a_f) * ke, k3 * a_f * a_f + 2):
            if b_f > bound:
                continue
            kk = k3 * a_f - ke * b_f
            if kk.denominator != 1 or int(kk) not in TAG_BY_K:
                continue
            kk = int(kk)
            tag = TAG_BY_K[kk]
            alpha, mu = ALPHA[tag], MU[tag]
            iota = Fraction(b_f) * alpha / mu
            if iota.denominator != 1 or not 1 <= iota <= 4:
                continue
            iota = int(iota)
            a_m = (alpha * a_f + 1) / iota
            if a_m.denominator != 1 or a_m < 1:
                continue
            a_m = int(a_m)
            if not _effectivity_ok(center, g, a_f, b_f, birational=True):
                continue
            ebar = (
                k3 * a_f**3
                - 3 * a_f * a_f * b_f * ke
                + 3 * a_f * b_f * b_f * kee
                - Fraction(4, kk)
            ) / Fraction(b_f**3)
            if ebar.denominator != 1:
                continue
            defect = e3 - ebar
            if defect < 0:
                continue
            anti_y = (
                k3
                + 3 * alpha * kk
                + 3 * alpha * alpha * (-2)
                + alpha**3 * Fraction(4, kk)
            )
            if anti_y <= 0 or anti_y.denominator != 1:
                continue
            anti_y = int(anti_y)
            target = TargetInvariants(
                "fano-point-blowdown",
                k=kk,
                iota_y=iota,
                antik_cube_y=anti_y,
                genus_y=anti_y // 2 + 1 if iota == 1 and anti_y % 2 == 0 else None,
                singularity=POINT_SINGULARITY[tag],
            )
            yield LinkCandidate(
                center, g, tag, mu, a_f, b_f, (a_m, mu), (a_f, b_f), target, ebar, defect, e3,
                m_cap=_m_cap(center, g, a_f, b_f, birational=True),
            )


def _enumerate_cell(center: Center, g: int, bound: int) -> list[LinkCandidate]:
    vals = _midpoint_values(center, g)
    if vals[0] <= 0:
        return []
    cands = [
        *_fiber_candidates(center, g, vals, bound),
        *_b1_candidates(center, g, vals, bound),
        *_point_blowdown_candidates(center, g, vals, bound),
    ]
    cands.sort(key=lambda c: (c.g, c.ctype, c.a, c.b))
    return cands


def enumerate_links(
    center: Center,
    g_range: Iterable[int],
    *,
    search_bound: int = 20,
    facts: Optional["LinkFactStore"] = None,
    workers: int = 1,
) -> list[LinkCandidate]:
    """All numerically consistent second contractions for the given center and
    genera, each confirmed or excluded by a named rule.  Deterministic order
    (g, type, a, b) independent of the worker count."""
    genera = sorted(set(int(g) for g in g_range))
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            cells = list(pool.map(lambda g: _enumerate_cell(center, g, search_bound), genera))
    else:
        cells = [_enumerate_cell(center, g, search_bound) for g in genera]
    candidates = [cand for cell in cells for cand in cell]
    return filter_links(candidates, facts)


def defect(candidate: LinkCandidate) -> Fraction:
    """E^3 - Ebar^3; nonnegative for every consistent link."""
    if candidate.defect < 0:
        raise InconsistentCandidate(
            f"negative defect {candidate.defect} signals an enumeration bug"
        )
    return candidate.defect


def euler_propagate(
    chi_y: int,
    center_on_y: CurveCenter | PointCenter,
    center_on_x: CurveCenter | PointCenter,
) -> int:
    """chi(X) from chi(Y) across a link: chi(X) = chi(Y) + e(Z) - e(C), where
    a genus-h curve contributes 2 - 2h and a point contributes 2."""

    def contribution(c: CurveCenter | PointCenter) -> int:
        return 2 if isinstance(c, PointCenter) else 2 - 2 * c.genus

    return chi_y + contribution(center_on_y) - contribution(center_on_x)


@dataclass(frozen=True)
class GeometricRule:
    center: str
    fbar: tuple[int, int]
    rule: str


@dataclass(frozen=True)
class LinkFactStore:
    """Catalog-backed inputs for filter_links."""

    known_genera: frozenset[int]
    chi_by_subject: dict[str, int]
    rational_subjects: frozenset[str]
    irrational_subjects: frozenset[str]
    geometric_rules: tuple[GeometricRule, ...] = field(default_factory=tuple)

    def chi(self, subject: Optional[str]) -> Optional[int]:
        if subject is None:
            return None
        return self.chi_by_subject.get(subject)


def _default_facts() -> LinkFactStore:
    from fano3 import catalog

    return catalog.link_facts()


def filter_links(
    candidates: Sequence[LinkCandidate], facts: Optional[LinkFactStore] = None
) -> list[LinkCandidate]:
    """Assign confirmed / excluded:<rule> to every candidate; nothing is
    dropped.  Rules fire in the order genus-bound, rationality, geometric,
    euler; rationality needs the source known rational and the target known
    irrational."""
    if facts is None:
        facts = _default_facts()
    out = []
    for cand in candidates:
        out.append(replace(cand, status=_status(cand, facts)))
    return out


def _status(cand: LinkCandidate, facts: LinkFactStore) -> str:
    if cand.g not in facts.known_genera:
        return "excluded:genus-bound"
    source = f"fano-g{cand.g}"
    target = cand.target.subject_id()
    if source in facts.rational_subjects and target in facts.irrational_subjects:
        return "excluded:rationality"
    for rule in facts.geometric_rules:
        if cand.birational and rule.center == cand.center and rule.fbar == cand.fbar:
            return f"excluded:geometric:{rule.rule}"
    if cand.ctype in ("B1", "B2"):
        chi_x = facts.chi(source)
        chi_y = facts.chi(target)
        if chi_x is not None and chi_y is not None:
            if cand.ctype == "B1":
                z: CurveCenter | PointCenter = CurveCenter(
                    max(cand.target.deg_z or 1, 1), cand.target.genus_z or 0
                )
            else:
                z = PointCenter()
            c_x = CENTER_DATA[cand.center]
            if euler_propagate(chi_y, z, c_x) != chi_x:
                return "excluded:euler"
    return "confirmed"


# --- Picard-number-2 primitive enumeration -------------------------------

RAY2_ORDER = {"D1": 0, "D2": 1, "D3": 2, "C1": 3, "C2": 4, "B2": 5, "B3/B4": 6, "B5": 7}


@dataclass(frozen=True)
class Rho2Solution:
    """One primitive rho=2 solution: conic bundle with discriminant degree d
    plus a second ray of the stated type."""

    ray1: str
    ray2: str
    d: int
    d_prime: Optional[int]
    k: Optional[int]
    g: int
    a: Fraction
    b: Fraction
    antik_cube: int


def _rho2_grid(c2_side: bool, bound: int) -> list[Fraction]:
    step = Fraction(1, 2) if c2_side else Fraction(1)
    n = int(bound / step)
    return [step * i for i in range(1, n + 1)]


def _is_primitive(a: Fraction, b: Fraction, c2_side: bool) -> bool:
    step = Fraction(1, 2) if c2_side else Fraction(1)
    for t in range(2, 2 * int(max(a, b) / step) + 1):
        if (a / t) % step == 0 and (b / t) % step == 0:
            return False
    return True


def rho2_primitive_enumerate(bound: int = 8) -> list[Rho2Solution]:
    """All solutions of the three second-ray systems on a primitive rho=2
    Fano threefold carrying a conic bundle with discriminant degree d.
    Half-integral (a, b) are admitted exactly on the C2 side (d = 0)."""
    sols: list[Rho2Solution] = []
    for d in range(0, 12):
        if d in (1, 2):
            continue  # a non-empty discriminant curve has degree >= 3
        c2_side = d == 0
        grid = _rho2_grid(c2_side, bound)
        coef = 12 - d
        for a in grid:
            for b in grid:
                # D = a(-K) - bM; (-K).D^2 equals 0, 2, -2 per second-ray kind
                for system, rhs in (("D", 0), ("C", 2), ("B", -2)):
                    k3 = (rhs + 2 * coef * a * b - 2 * b * b) / (a * a)
                    if k3 < 2 or k3.denominator != 1 or int(k3) % 2:
                        continue
                    sol = _rho2_solve(system, d, int(k3), a, b, c2_side)
                    if sol is not None:
                        sols.append(sol)
    sols.sort(key=lambda s: (s.antik_cube, RAY2_ORDER[s.ray2], s.d))
    return sols


def _rho2_solve(
    system: str, d: int, k3: int, a: Fraction, b: Fraction, c2_side: bool
) -> Optional[Rho2Solution]:
    coef = 12 - d
    ray1 = "C2" if c2_side else "C1"
    g = k3 // 2 + 1
    if system == "D":
        if k3 * a * a - 3 * coef * a * b + 6 * b * b != 0:  # D^3 = 0
            return None
        if not _is_primitive(a, b, c2_side):
            return None
        dprime = k3 * a - coef * b
        if dprime.denominator != 1:
            return None
        dprime = int(dprime)
        if 1 <= dprime <= 6:
            ray2 = "D1"
        elif dprime == 8:
            ray2 = "D2"
        elif dprime == 9:
            ray2 = "D3"
        else:
            return None
        return Rho2Solution(ray1, ray2, d, dprime, None, g, a, b, k3)
    if system == "C":
        if k3 * a * a - 3 * coef * a * b + 6 * b * b != 0:  # D^3 = 0
            return None
        dprime = 12 - (k3 * a - coef * b)
        if dprime.denominator != 1:
            return None
        dprime = int(dprime)
        if not (dprime == 0 or 3 <= dprime <= 11):
            return None
        if d < dprime:
            return None  # symmetric pair already listed from the other side
        ray2 = "C1" if dprime > 0 else "C2"
        return Rho2Solution(ray1, ray2, d, dprime, None, g, a, b, k3)
    # B: blowup of a point, D the exceptional divisor
    kk = k3 * a - coef * b
    if kk.denominator != 1 or int(kk) not in TAG_BY_K:
        return None
    kk = int(kk)
    if k3 * a**3 - 3 * coef * a * a * b + 6 * a * b * b != Fraction(4, kk):  # D^3 = 4/k
        return None
    return Rho2Solution(ray1, TAG_BY_K[kk], d, None, kk, g, a, b, k3)
