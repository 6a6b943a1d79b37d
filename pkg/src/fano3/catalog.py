"""Machine-readable classification tables plus a cross-identity verifier.

The data ships as a single JSON file; every entry is checked against the
closed-form identities (genus/degree, chi_top, section counts, Noether on
hyperplane sections, degree bounds, blowdown consistency).  The same file
backs the fact store consumed by the link filter.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from importlib import resources
from typing import Any, Optional

from fano3.blowup import CurveCenter, blowup_curve
from fano3.riemannroch import FanoNumerics, hilbert_polynomial
from fano3.sarkisov import GeometricRule, LinkFactStore

IOTA_BY_TARGET = {"p3": 4, "quadric": 3, "v1": 2, "v2": 2, "v3": 2, "v4": 2, "v5": 2}


@dataclass(frozen=True)
class CatalogEntry:
    id: str
    rho: int
    index: int
    antik_cube: int
    genus: Optional[int]
    h12: int
    chi_top: int
    kc2: int
    description: str
    flags: tuple[str, ...] = ()
    family: Optional[str] = None
    rays: Optional[tuple[str, str]] = None
    construction: Optional[dict] = None
    hyperplane_section: Optional[dict] = None
    h0_tangent: Optional[int] = None
    moduli_dim: Optional[int] = None


@dataclass(frozen=True)
class FactRecord:
    subject: str
    predicate: str
    value: Any


@dataclass(frozen=True)
class Catalog:
    schema_version: int
    entries: tuple[CatalogEntry, ...]
    facts: tuple[FactRecord, ...]
    geometric_exclusions: tuple[dict, ...]
    mukai_models: tuple[dict, ...]
    scroll_models: dict
    counts: dict

    def by_id(self, entry_id: str) -> CatalogEntry:
        for e in self.entries:
            if e.id == entry_id:
                return e
        raise KeyError(entry_id)

    def list(
        self,
        *,
        rho: Optional[int] = None,
        index: Optional[int] = None,
        genus: Optional[int] = None,
        flag: Optional[str] = None,
    ) -> list[CatalogEntry]:
        out = []
        for e in self.entries:
            if rho is not None and e.rho != rho:
                continue
            if index is not None and e.index != index:
                continue
            if genus is not None and e.genus != genus:
                continue
            if flag is not None and flag not in e.flags:
                continue
            out.append(e)
        return out

    def facts_for(self, subject: str) -> list[FactRecord]:
        out = [f for f in self.facts if f.subject == subject]
        for e in self.entries:
            if e.id == subject:
                out.append(FactRecord(subject, "EulerNumber", e.chi_top))
                break
        return out


@lru_cache(maxsize=1)
def load() -> Catalog:
    raw = json.loads(resources.files("fano3.data").joinpath("classification.json").read_text())
    entries = tuple(
        CatalogEntry(
            id=e["id"],
            rho=e["rho"],
            index=e["index"],
            antik_cube=e["antik_cube"],
            genus=e.get("genus"),
            h12=e["h12"],
            chi_top=e["chi_top"],
            kc2=e["kc2"],
            description=e["description"],
            flags=tuple(e.get("flags", ())),
            family=e.get("family"),
            rays=tuple(e["rays"]) if "rays" in e else None,
            construction=e.get("construction"),
            hyperplane_section=e.get("hyperplane_section"),
            h0_tangent=e.get("h0_tangent"),
            moduli_dim=e.get("moduli_dim"),
        )
        for e in raw["entries"]
    )
    facts = tuple(FactRecord(f["subject"], f["predicate"], f["value"]) for f in raw["facts"])
    return Catalog(
        schema_version=raw["schema_version"],
        entries=entries,
        facts=facts,
        geometric_exclusions=tuple(raw["geometric_exclusions"]),
        mukai_models=tuple(raw["mukai_models"]),
        scroll_models=raw["scroll_models"],
        counts=raw["counts"],
    )


@dataclass(frozen=True)
class CheckResult:
    entry_id: str
    check: str
    passed: bool
    lhs: Any
    rhs: Any


def _fano_genus(entry: CatalogEntry) -> int:
    # (-K)^3 / 2 + 1, meaningful for any Fano threefold in these identities
    return entry.antik_cube // 2 + 1


def verify(entry: CatalogEntry, cat: Optional[Catalog] = None) -> list[CheckResult]:
    """Run every applicable identity on one entry; failures are data."""
    checks: list[CheckResult] = []

    def add(name: str, lhs: Any, rhs: Any) -> None:
        checks.append(CheckResult(entry.id, name, lhs == rhs, lhs, rhs))

    iota = entry.index
    add("index-range", 1 <= iota <= 4, True)
    if iota == 1:
        add("genus-degree", entry.antik_cube, 2 * (entry.genus or 0) - 2)
    else:
        d, rem = divmod(entry.antik_cube, iota**3)
        add("genus-degree", (rem, d >= 1), (0, True))
        if iota == 4:
            add("degree-top-index", d, 1)
        if iota == 3:
            add("degree-top-index", d, 2)
        if iota == 2:
            add("dp-degree-range", 1 <= d <= 8, True)
    add("chi-top", entry.chi_top, 2 + 2 * entry.rho - 2 * entry.h12)
    add("kc2", entry.kc2, 24)
    if entry.rho == 1:
        add("degree-bound-rho1", entry.antik_cube <= 72, True)
    # h^0(-K) = g + 2 via the Hilbert polynomial at t = iota
    fund = Fraction(entry.antik_cube, iota**3)
    h0 = hilbert_polynomial(FanoNumerics(3, iota, fund))(iota)
    add("h0-anticanonical", h0, entry.antik_cube // 2 + 3)
    if entry.hyperplane_section is not None:
        hs = entry.hyperplane_section
        add("noether-hyperplane-section", hs["k2"] + hs["rho"], 10)
    if entry.h0_tangent is not None:
        h1 = entry.h0_tangent - (_fano_genus(entry) + entry.rho - entry.h12 - 19)
        add("tangent-deformation-nonneg", h1 >= 0, True)
        if entry.moduli_dim is not None:
            add("tangent-deformation", h1, entry.moduli_dim)
    if entry.construction and "blowups" in entry.construction and cat is not None:
        for i, bl in enumerate(entry.construction["blowups"]):
            target = cat.by_id(bl["of"])
            iy = IOTA_BY_TARGET[bl["of"]]
            center = CurveCenter(iy * bl["deg"], bl["genus"])
            predicted = blowup_curve(target.antik_cube, center).values[0]
            add(f"blowdown-consistency-{i}", predicted, Fraction(entry.antik_cube))
    return checks


def verify_all(cat: Optional[Catalog] = None) -> list[CheckResult]:
    cat = cat or load()
    out: list[CheckResult] = []
    for entry in cat.entries:
        out.extend(verify(entry, cat))
    return out


def link_facts(cat: Optional[Catalog] = None) -> LinkFactStore:
    """Fact store for the link filter, built from the shipped tables."""
    cat = cat or load()
    known = frozenset(e.genus for e in cat.entries if e.rho == 1 and e.index == 1 and e.genus)
    chi: dict[str, int] = {}
    for e in cat.entries:
        chi[e.id] = e.chi_top
        if e.rho == 1 and e.index == 1 and e.genus is not None:
            chi[f"fano-g{e.genus}"] = e.chi_top
    rational = frozenset(f.subject for f in cat.facts if f.predicate == "Rational" and f.value)
    irrational = frozenset(f.subject for f in cat.facts if f.predicate == "Irrational" and f.value)
    rules = tuple(
        GeometricRule(r["center"], tuple(r["fbar"]), r["rule"])
        for r in cat.geometric_exclusions
    )
    return LinkFactStore(known, chi, rational, irrational, rules)


def realized_scrolls(kind: str, genus: int, cat: Optional[Catalog] = None) -> dict[tuple[int, ...], str]:
    """splitting -> entry id for the realized models of the given kind/genus."""
    cat = cat or load()
    out = {}
    for row in cat.scroll_models[kind]:
        if row["genus"] == genus and row["entry"]:
            out[tuple(row["splitting"])] = row["entry"]
    return out
