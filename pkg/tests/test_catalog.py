import math

import pytest

from fano3 import catalog
from fano3.blowup import CurveCenter, blowup_curve


@pytest.fixture(scope="module")
def cat():
    return catalog.load()


def test_verify_all_passes(cat):
    failures = [r for r in catalog.verify_all(cat) if not r.passed]
    assert failures == []


def test_h3_zero_query_returns_exactly_four(cat):
    hits = [e.id for e in cat.entries if e.rho == 1 and e.h12 == 0]
    assert sorted(hits) == ["fano-g12", "p3", "quadric", "v5"]


def test_del_pezzo_rows(cat):
    rows = cat.list(index=2, rho=1)
    assert len(rows) == 5
    assert sorted(e.antik_cube for e in rows) == [8, 16, 24, 32, 40]
    # all eight index-2 entries, matching the table of del Pezzo threefolds
    all_dp = cat.list(index=2)
    degrees = sorted(e.antik_cube // 8 for e in all_dp)
    assert degrees == [1, 2, 3, 4, 5, 6, 6, 7]


def test_main_series_rows(cat):
    rows = cat.list(index=1, rho=1)
    assert len(rows) == 12
    assert sorted(e.genus for e in rows) == [2, 3, 3, 4, 5, 6, 6, 7, 8, 9, 10, 12]
    assert sorted({e.family for e in rows}) == [
        "g10", "g12", "g2", "g3", "g4", "g5", "g6", "g7", "g8", "g9",
    ]
    h12 = {g: set() for g in range(2, 13)}
    for e in rows:
        h12[e.genus].add(e.h12)
    assert h12[2] == {52} and h12[3] == {30} and h12[12] == {0}


def test_rho1_family_count(cat):
    families = {e.family for e in cat.entries if e.rho == 1}
    assert len(families) == cat.counts["rho1_families"] == 17
    assert cat.counts["rho_gt1_families"] == 88


def test_degree_bounds(cat):
    for e in cat.entries:
        if e.rho == 1:
            assert e.antik_cube <= 72
    assert max(e.antik_cube for e in cat.entries) == 64


def test_rho2_primitive_count(cat):
    prim = cat.list(rho=2, flag="Primitive")
    assert len(prim) == 9
    assert sorted(e.antik_cube for e in prim) == [6, 12, 14, 24, 30, 48, 54, 56, 62]


def test_rho2_entry_counts(cat):
    imp = cat.list(rho=2, flag="Imprimitive")
    assert len(imp) == 27  # 6 double-B1 rows + 5 elliptic blowups + 16 others
    assert len(cat.list(rho=2)) == 36


def test_empty_filter_returns_everything(cat):
    assert cat.list() == list(cat.entries)
    assert len(cat.entries) == 59


def test_facts_for(cat):
    cubic = {f.predicate for f in cat.facts_for("v3")}
    assert "Irrational" in cubic
    g7 = {f.predicate: f.value for f in cat.facts_for("fano-g7")}
    assert g7["Rational"] is True
    assert g7["EulerNumber"] == -10
    assert cat.facts_for("unknown-subject") == []


def test_chi_identity_everywhere(cat):
    for e in cat.entries:
        assert e.chi_top == 2 + 2 * e.rho - 2 * e.h12


def test_quartic_deformation_dimension_oracle(cat):
    # independent count: quartic monomials in 5 variables minus dim PGL_5
    # minus the scaling of the equation
    quartic_monomials = math.comb(4 + 4, 4)
    pgl5 = 5 * 5 - 1
    expected = quartic_monomials - pgl5 - 1
    assert expected == 45
    entry = cat.by_id("fano-g3-quartic")
    assert entry.moduli_dim == expected
    h1 = entry.h0_tangent - ((entry.antik_cube // 2 + 1) + entry.rho - entry.h12 - 19)
    assert h1 == expected


def test_blowdown_consistency_of_imprimitive_tables(cat):
    iota = catalog.IOTA_BY_TARGET
    seen = 0
    for e in cat.entries:
        if not e.construction or "blowups" not in e.construction:
            continue
        for bl in e.construction["blowups"]:
            base = cat.by_id(bl["of"])
            form = blowup_curve(
                base.antik_cube, CurveCenter(iota[bl["of"]] * bl["deg"], bl["genus"])
            )
            assert form.values[0] == e.antik_cube
            seen += 1
    assert seen >= 27


def test_imprimitive_h12_matches_blowup_bookkeeping(cat):
    # h12 of a curve blowup is h12 of the base plus the genus of the center
    for e in cat.entries:
        if not e.construction or "blowups" not in e.construction:
            continue
        for bl in e.construction["blowups"]:
            base = cat.by_id(bl["of"])
            assert e.h12 == base.h12 + bl["genus"]


def test_scroll_realizations_resolve(cat):
    for kind in ("hyperelliptic", "trigonal"):
        for row in cat.scroll_models[kind]:
            if row["entry"] is not None:
                entry = cat.by_id(row["entry"])
                assert entry.antik_cube == 2 * row["genus"] - 2


def test_mukai_table(cat):
    models = {m["genus"]: m for m in cat.mukai_models}
    assert set(models) == {6, 7, 8, 9, 10}
    assert models[7]["ambient_dim"] == 10
    assert models[10]["group"] == "G2"


def test_base_point_and_hyperelliptic_flags(cat):
    bs = [e.id for e in cat.entries if "BasePointModel" in e.flags]
    assert sorted(bs) == ["dp1-times-p1", "rho2-impb-v1"]
    hyp = [e.id for e in cat.entries if "HyperellipticModel" in e.flags]
    assert "v1" in hyp and "fano-g2" in hyp and "fano-g3-double-quadric" in hyp


def test_link_facts_shape(cat):
    facts = catalog.link_facts(cat)
    assert facts.known_genera == frozenset({2, 3, 4, 5, 6, 7, 8, 9, 10, 12})
    assert facts.chi("fano-g12") == 4
    assert facts.chi("p3") == 4
    assert "v3" in facts.irrational_subjects
    assert "fano-g7" in facts.rational_subjects
    assert facts.geometric_rules[0].center == "point"
