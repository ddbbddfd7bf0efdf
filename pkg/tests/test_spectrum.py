from collections import Counter
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from johnson_spectra import build_graph
from johnson_spectra.exactmath import binom
from johnson_spectra.spectrum import (
    DegenerateGraphError,
    GraphParams,
    canonicalize,
    degree,
    eigenvalue_formula_a,
    eigenvalue_formula_b,
    full_spectrum,
    lemma6_coefficient,
    lemma6_domain,
    lemma6_residual,
    scan_bounds,
    verify_bound,
)

from conftest import any_params, canonical_params


def charpoly_spectrum(params):
    """Eigenvalues with multiplicity from the factored characteristic polynomial."""
    a = sympy.Matrix(build_graph(params).dense(int).tolist())
    return Counter({int(k): v for k, v in a.eigenvals().items()})


# -- params -------------------------------------------------------------------

@pytest.mark.parametrize("triple", [(3, 3, 3), (3, 4, 1), (3, 2, -1), (0, 1, 0), (5, 0, 0)])
def test_invalid_params(triple):
    with pytest.raises(ValueError):
        GraphParams(*triple)


def test_params_reject_non_int():
    with pytest.raises(TypeError):
        GraphParams(8.0, 4, 2)


@pytest.mark.parametrize("given_, expected", [
    ((8, 5, 3), (8, 3, 1)),
    ((8, 4, 2), (8, 4, 2)),
    ((10, 7, 5), (10, 3, 1)),
])
def test_canonicalize(given_, expected):
    assert canonicalize(given_) == GraphParams(*expected)


def test_canonicalize_degenerate_is_identity():
    p = canonicalize((4, 3, 1))
    assert p == GraphParams(4, 3, 1) and p.degenerate
    assert degree(p) == 0


@pytest.mark.parametrize("triple, d", [((5, 2, 0), 3), ((8, 4, 2), 36), ((4, 2, 1), 4)])
def test_degree(triple, d):
    assert degree(triple) == d


# -- eigenvalue formulas ---------------------------------------------------------

@pytest.mark.parametrize("triple, i, value", [
    ((8, 4, 2), 0, 36),
    ((8, 4, 2), 2, -6),
    ((4, 2, 1), 2, -2),
])
def test_formula_a_examples(triple, i, value):
    assert eigenvalue_formula_a(triple, i) == value


@pytest.mark.parametrize("triple, i, value", [
    ((8, 4, 2), 1, 0),
    ((8, 4, 2), 4, 6),
    ((5, 2, 0), 1, -2),
])
def test_formula_b_examples(triple, i, value):
    assert eigenvalue_formula_b(triple, i) == value
    assert eigenvalue_formula_a(triple, i) == value


def test_formula_index_checks():
    with pytest.raises(ValueError):
        eigenvalue_formula_b((8, 4, 2), 5)
    with pytest.raises(ValueError):
        eigenvalue_formula_a((8, 4, 2), -1)
    with pytest.raises(ValueError, match="canonical"):
        eigenvalue_formula_b((8, 5, 3), 1)


@pytest.mark.parametrize("triple", [(4, 2, 1), (5, 2, 0), (6, 3, 1), (7, 3, 2), (6, 2, 1)])
def test_spectrum_matches_characteristic_polynomial(triple):
    merged = Counter(dict(full_spectrum(triple).merged()))
    assert merged == charpoly_spectrum(triple)


# -- full spectrum -------------------------------------------------------------

def test_full_spectrum_octahedron():
    sp = full_spectrum((4, 2, 1))
    assert sp.values == [4, 0, -2]
    assert sp.multiplicities == [1, 3, 2]
    assert sp.lam == 2 and sp.degree == 4


def test_full_spectrum_842():
    sp = full_spectrum((8, 4, 2))
    assert sp.values == [36, 0, -6, 0, 6]
    assert sp.multiplicities == [1, 7, 20, 28, 14]
    assert sp.lam == 6 and sp.argmax == 2
    assert sp.merged() == [(36, 1), (6, 14), (0, 35), (-6, 20)]


def test_full_spectrum_petersen():
    # i = 1 carries -2 (multiplicity 4), i = 2 carries 1 (multiplicity 5):
    # the familiar Petersen spectrum 3^1 1^5 (-2)^4.
    sp = full_spectrum((5, 2, 0))
    assert sp.values == [3, -2, 1]
    assert sp.multiplicities == [1, 4, 5]
    assert sp.lam == 2 and sp.argmax == 1
    assert Counter(dict(sp.merged())) == Counter({3: 1, 1: 5, -2: 4})


def test_full_spectrum_degenerate():
    with pytest.raises(DegenerateGraphError, match="no edges"):
        full_spectrum((4, 3, 1))


def test_full_spectrum_canonicalizes():
    assert full_spectrum((8, 5, 3)).params == GraphParams(8, 3, 1)


def test_argmax_ties_go_to_smallest_index():
    # G(4,2,0) is a perfect matching: eigenvalues 1, -1, 1 at i = 0, 1, 2
    sp = full_spectrum((4, 2, 0))
    assert sp.values == [1, -1, 1]
    assert sp.argmax == 1


@settings(max_examples=300)
@given(canonical_params(max_n=200), st.data())
def test_formula_agreement(p, data):
    i = data.draw(st.integers(0, p.r))
    assert eigenvalue_formula_a(p, i) == eigenvalue_formula_b(p, i)


@settings(max_examples=200)
@given(canonical_params(max_n=120))
def test_spectrum_invariants(p):
    sp = full_spectrum(p)
    N = binom(p.n, p.r)
    assert sp.entries[0].value == degree(p) == sp.degree
    assert sp.entries[0].multiplicity == 1
    assert all(e.multiplicity >= 0 for e in sp.entries)
    assert sum(sp.multiplicities) == N
    assert sp.moment(1) == 0
    assert sp.moment(2) == sp.degree * N
    assert 0 < sp.lam <= sp.degree
    assert sp.lam == max(abs(v) for v in sp.values[1:])


@settings(max_examples=200)
@given(any_params(max_n=60))
def test_canonicalization_preserves_spectrum(p):
    if p.degenerate:
        return
    c = canonicalize(p)
    assert c.is_canonical
    assert binom(c.n, c.r) == binom(p.n, p.r)
    assert degree(c) == degree(p)
    assert full_spectrum(p).merged() == full_spectrum(c).merged()


@settings(max_examples=200)
@given(canonical_params(max_n=120))
def test_brouwer_regime(p):
    n, r, s = p.n, p.r, p.s
    sp = full_spectrum(p)
    if (r - s) * (n - 1) >= r * (n - r):
        assert sp.lam == abs(sp.entries[1].value)
        assert sp.argmax == 1


# -- Lemma-type recurrence ---------------------------------------------------------

@pytest.mark.parametrize("triple, i, j", [((8, 4, 2), 1, 0), ((8, 4, 2), 2, 1), ((12, 5, 2), 3, 2)])
def test_lemma6_examples(triple, i, j):
    assert lemma6_residual(triple, i, j) == 0


def test_lemma6_domain_errors():
    with pytest.raises(ValueError):
        lemma6_residual((8, 4, 2), 0, 0)
    with pytest.raises(ValueError):
        lemma6_residual((8, 4, 2), 2, 3)
    with pytest.raises(ValueError):
        lemma6_residual((5, 4, 1), 2, 0)  # n - r - i + 1 = 0


def test_lemma6_terms_sum_to_eigenvalue():
    p = GraphParams(14, 6, 2)
    for i in range(p.r + 1):
        alt = sum((-1) ** j * lemma6_coefficient(p, i, j) for j in range(i + 1))
        assert alt == eigenvalue_formula_b(p, i)


@settings(max_examples=60)
@given(any_params(max_n=40))
def test_lemma6_whole_domain(p):
    for i, j in lemma6_domain(p):
        assert lemma6_residual(p, i, j) == 0


# -- bound reports ---------------------------------------------------------------

def test_verify_lovasz_petersen():
    rep = verify_bound((5, 2, 0), "lovasz")
    assert rep.applicable and rep.predicted == 2 and rep.actual == 2 and rep.ratio == 1
    assert rep.claim_holds


def test_verify_brouwer_petersen():
    rep = verify_bound((5, 2, 0), "brouwer")
    assert rep.applicable
    assert rep.predicted == Fraction(abs(0 - 4), 2 * 3) * 3 == 2
    assert rep.ratio == 1 and rep.claim_holds and rep.identity_holds


def test_verify_main_842():
    rep = verify_bound((8, 4, 2), "main", Fraction(1, 2))
    assert rep.applicable and rep.predicted is None
    assert rep.ratio == Fraction(6 * 8, 36) == Fraction(4, 3)


def test_verify_inapplicable():
    for theorem, triple in [("lovasz", (8, 4, 2)), ("brouwer", (8, 4, 2)), ("t4", (9, 4, 2)),
                            ("t5.1", (8, 3, 0))]:
        rep = verify_bound(triple, theorem)
        assert not rep.applicable
        assert rep.predicted is None and rep.ratio is None


def test_verify_argument_errors():
    with pytest.raises(ValueError):
        verify_bound((8, 4, 2), "nope")
    with pytest.raises(ValueError):
        verify_bound((8, 4, 2), "main")
    with pytest.raises(TypeError):
        verify_bound((8, 4, 2), "main", 0.5)
    with pytest.raises(ValueError):
        verify_bound((8, 4, 2), "main", Fraction(3, 2))


@pytest.mark.parametrize("n, alpha", [(30, Fraction(2, 3)), (40, Fraction(3, 4)), (24, Fraction(5, 8))])
def test_main_ratio_invariant_under_complement(n, alpha):
    # (r, s, alpha) -> (n - r, n - 2r + s, 1 - alpha) leaves the ratio unchanged
    r = int(alpha * n) + 1
    s = int(alpha * alpha * n)
    direct = verify_bound((n, r, s), "main", alpha)
    comp = verify_bound((n, n - r, n - 2 * r + s), "main", 1 - alpha)
    assert direct.ratio == comp.ratio


def test_t4_report_identity():
    rep = verify_bound((12, 6, 3), "t4")
    assert rep.predicted == Fraction(10, 9) * binom(4, 2) ** 2 == 40
    assert rep.identity_holds and rep.claim_holds


# -- scans ---------------------------------------------------------------------

def test_scan_t4():
    res = scan_bounds([(4 * t, 2 * t, t) for t in range(2, 11)], "t4")
    assert len(res.reports) == 9
    for rep in res.reports:
        t = rep.params.s
        assert rep.identity_holds
        assert rep.predicted == Fraction(4 * t - 2, t * t) * binom(2 * t - 2, t - 1) ** 2
    assert res.threshold == GraphParams(8, 4, 2)


def test_scan_t5_trend():
    res = scan_bounds([(n, 3, 1) for n in range(10, 41)], "t5.1")
    ratios = [rep.ratio for rep in res.reports]
    # lambda / ((s/r) d) climbs toward 1 once E(1) takes over
    tail = ratios[3:]
    assert all(a < b for a, b in zip(tail, tail[1:]))
    assert tail[-1] < 1
    assert res.threshold == GraphParams(13, 3, 1)


def test_scan_main_bounded():
    res = scan_bounds([(4 * t, 2 * t, t) for t in range(2, 21)], "main", Fraction(1, 2))
    assert res.max_ratio == Fraction(4, 3)


def test_scan_collects_errors():
    items = [(8, 4, 2), (4, 5, 1), (4, 3, 1), (12, 6, 3)]
    res = scan_bounds(items, "t4")
    assert len(res.rows) == 4
    assert [e.position for e in res.errors] == [1, 2]
    assert res.reports[-1].claim_holds


def test_scan_per_item_alpha():
    res = scan_bounds([((8, 4, 2), Fraction(1, 2)), ((9, 3, 1), Fraction(1, 3))], "main")
    assert [r.alpha for r in res.reports] == [Fraction(1, 2), Fraction(1, 3)]
