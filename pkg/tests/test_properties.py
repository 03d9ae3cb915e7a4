"""Polynomial annihilation properties: the pruned engine against the brute
oracle, frozen refutation witnesses, fast-path agreement, and the audit."""

import itertools

import pytest
from hypothesis import given, strategies as st

from amalgam.constructions import direct_product, matrix_ring, poly_quotient, upper_triangular, zmod
from amalgam.errors import SearchBudgetError
from amalgam.poly import Polynomial, poly_mul
from amalgam.properties import (
    POLY_KINDS,
    PolyWitness,
    PropertyKind,
    Verdict,
    annihilating_pairs,
    check_armendariz,
    check_nil_armendariz,
    check_reduced,
    check_semicommutative,
    check_weak_armendariz,
    clear_caches,
    get_report,
    naive_annihilating_pairs,
    naive_poly_check,
    property_profile,
)
from amalgam.rings import nilradical


ORACLE_RINGS_SMALL = [zmod(2), zmod(3), zmod(4), zmod(5), zmod(6), poly_quotient(zmod(2), 2), direct_product(zmod(2), zmod(2))]
ORACLE_RINGS_MEDIUM = [upper_triangular(zmod(2), 2), poly_quotient(zmod(2), 3), zmod(8), zmod(9)]


def test_engine_matches_oracle_small_rings_all_degrees():
    """Verdict AND witness equality against brute enumeration, degrees 0-2."""
    for R in ORACLE_RINGS_SMALL:
        for kind in POLY_KINDS:
            for d in (0, 1, 2):
                want_verdict, want_witness, _ = naive_poly_check(R, kind, d)
                report = get_report(R, kind, d)
                assert report.verdict is want_verdict, (R.provenance, kind, d)
                assert report.witness == want_witness, (R.provenance, kind, d)


def test_engine_matches_oracle_medium_rings_degree_one():
    for R in ORACLE_RINGS_MEDIUM:
        for kind in POLY_KINDS:
            want_verdict, want_witness, _ = naive_poly_check(R, kind, 1)
            report = get_report(R, kind, 1)
            assert report.verdict is want_verdict, (R.provenance, kind)
            assert report.witness == want_witness, (R.provenance, kind)


def test_matrix_ring_armendariz_witness_frozen(m2):
    report = check_armendariz(m2, 1)
    assert report.verdict is Verdict.REFUTED
    assert report.witness == PolyWitness((1, 2), (4, 1), 0, 1, 1)
    # the witness really multiplies to zero as polynomials
    f = Polynomial(m2, report.witness.f_coeffs)
    g = Polynomial(m2, report.witness.g_coeffs)
    assert all(c == m2.zero for c in poly_mul(f, g).coeffs)
    # and the flagged coefficient product is nonzero
    assert m2.mul[1][1] == 1 != m2.zero


def test_triangular_ring_armendariz_witness_frozen(t2):
    report = check_armendariz(t2, 1)
    assert report.verdict is Verdict.REFUTED
    assert report.witness == PolyWitness((2, 4), (2, 1), 0, 1, 2)


def test_triangular_ring_weak_and_nil_hold(t2):
    assert check_weak_armendariz(t2, 1).holds
    assert check_nil_armendariz(t2, 1).holds
    assert check_weak_armendariz(t2, 2).holds


def test_matrix_ring_weak_refuted_with_non_nilpotent_product(m2):
    weak = check_weak_armendariz(m2, 1)
    assert weak.verdict is Verdict.REFUTED
    nil = set(nilradical(m2).members)
    assert weak.witness.product not in nil
    # the same pair also refutes the nil-style property
    nil_report = check_nil_armendariz(m2, 1)
    assert nil_report.verdict is Verdict.REFUTED


def test_zmod_rings_hold_everything():
    for n in (2, 3, 4, 8, 9):
        R = zmod(n)
        assert check_armendariz(R, 2).holds
        assert check_nil_armendariz(R, 2).holds
        assert check_weak_armendariz(R, 2).holds


def test_witness_is_lex_minimal(t2):
    """First refuting pair in (f, g) lexicographic order, by construction."""
    report = check_armendariz(t2, 1)
    wit = report.witness
    for f, g in naive_annihilating_pairs(t2, 1, {t2.zero}):
        bad = None
        for i, a in enumerate(f.coeffs):
            for j, b in enumerate(g.coeffs):
                if t2.mul[a][b] != t2.zero:
                    bad = (i, j, t2.mul[a][b])
                    break
            if bad:
                break
        if bad:
            assert f.coeffs == wit.f_coeffs and g.coeffs == wit.g_coeffs
            assert (wit.i, wit.j, wit.product) == bad
            return
    pytest.fail("oracle found no refutation where the engine did")


def test_partition_invariance(t2, m2):
    for R in (t2, m2):
        base = check_armendariz(R, 1, partitions=1)
        for parts in (2, 3, 8):
            again = check_armendariz(R, 1, partitions=parts)
            assert again.verdict is base.verdict
            assert again.witness == base.witness


def test_stream_counts_match_naive(t2):
    fast = sum(1 for _ in annihilating_pairs(t2, 1, {t2.zero}))
    slow = sum(1 for _ in naive_annihilating_pairs(t2, 1, {t2.zero}))
    assert fast == slow
    nil = frozenset(nilradical(t2).members)
    assert sum(1 for _ in annihilating_pairs(t2, 1, nil)) == sum(
        1 for _ in naive_annihilating_pairs(t2, 1, nil)
    )


def test_stream_yields_lex_order_and_includes_zero(z4):
    pairs = list(annihilating_pairs(z4, 1, {z4.zero}))
    keys = [(f.coeffs, g.coeffs) for f, g in pairs]
    assert keys == sorted(keys)
    assert ((0, 0), (0, 0)) in keys


def test_node_budget_raises(m2):
    clear_caches()
    with pytest.raises(SearchBudgetError):
        check_armendariz(m2, 2, node_budget=5)
    clear_caches()


def test_quotient_fast_path_agrees_with_naive():
    """Rings whose nilpotents form an ideal go through the projected check."""
    for R in (zmod(4), zmod(8), poly_quotient(zmod(2), 3), upper_triangular(zmod(2), 2)):
        for d in (1, 2):
            want, _, _ = naive_poly_check(R, PropertyKind.NIL_ARMENDARIZ, d)
            assert get_report(R, PropertyKind.NIL_ARMENDARIZ, d).verdict is want


def test_factor_fast_path_agrees_with_naive():
    """Decomposable rings go through the idempotent splitting."""
    for R in (zmod(6), direct_product(zmod(2), zmod(2)), direct_product(zmod(2), zmod(3))):
        for kind in POLY_KINDS:
            want, _, _ = naive_poly_check(R, kind, 2)
            assert get_report(R, kind, 2).verdict is want


def test_refutation_monotone_in_degree(t2, m2):
    for R in (t2, m2):
        assert check_armendariz(R, 1).verdict is Verdict.REFUTED
        assert check_armendariz(R, 2).verdict is Verdict.REFUTED


def test_degree_zero_never_refutes():
    """Constant polynomials cannot violate: the pair product is the constraint."""
    for R in ORACLE_RINGS_SMALL + ORACLE_RINGS_MEDIUM:
        for kind in POLY_KINDS:
            assert get_report(R, kind, 0).holds


def test_reduced_and_semicommutative_reports(z4, m2):
    r = check_reduced(z4)
    assert r.verdict is Verdict.REFUTED and r.witness.element == 2
    assert check_reduced(zmod(6)).verdict is Verdict.HOLDS_EXACT
    s = check_semicommutative(m2)
    assert s.verdict is Verdict.REFUTED
    a, mid, b = s.witness.a, s.witness.r, s.witness.b
    assert m2.mul[a][b] == m2.zero and m2.mul[m2.mul[a][mid]][b] != m2.zero


def test_property_profile_audit_clean(t2, m2, z4):
    for R in (t2, m2, z4, zmod(6), poly_quotient(zmod(2), 2)):
        profile = property_profile(R, 2)
        findings = profile.audit()
        fatal = [f for f in findings if f.fatal]
        assert not fatal, (R.provenance, fatal)


def test_report_cache_returns_identical_object(z4):
    a = get_report(z4, PropertyKind.ARMENDARIZ, 2)
    b = get_report(z4, PropertyKind.ARMENDARIZ, 2)
    assert a is b


def test_pairs_examined_counts_effort(t2):
    report = check_armendariz(t2, 1)
    assert report.pairs_examined > 0


@given(st.sampled_from(ORACLE_RINGS_SMALL), st.sampled_from(sorted(POLY_KINDS, key=lambda k: k.value)))
def test_any_refutation_witness_revalidates(R, kind):
    report = get_report(R, kind, 2)
    if report.verdict is not Verdict.REFUTED:
        return
    w = report.witness
    f = Polynomial(R, w.f_coeffs)
    g = Polynomial(R, w.g_coeffs)
    sc_nil = set(nilradical(R).members)
    prod = poly_mul(f, g).coeffs
    if kind is PropertyKind.ARMENDARIZ:
        assert all(c == R.zero for c in prod)
        assert w.product != R.zero
    elif kind is PropertyKind.NIL_ARMENDARIZ:
        assert all(c in sc_nil for c in prod)
        assert w.product not in sc_nil
    else:
        assert all(c == R.zero for c in prod)
        assert w.product not in sc_nil
    assert R.mul[w.f_coeffs[w.i]][w.g_coeffs[w.j]] == w.product


@given(st.sampled_from([2, 3, 5, 7]))
def test_fields_hold_exactly(p):
    """A field has no zero divisors, so every kind holds at any bound."""
    R = zmod(p)
    for kind in POLY_KINDS:
        assert get_report(R, kind, 2).holds
