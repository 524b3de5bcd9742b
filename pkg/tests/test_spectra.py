import math
import random
from fractions import Fraction

import pytest
import sympy

from flagspec.designs import DesignParams
from flagspec.errors import NonIntegralClaim
from flagspec.graphs import Graph, complete_graph, cycle_graph
from flagspec.polynomials import IntPolynomial
from flagspec.spectra import (
    AlgebraicEigenvalue,
    SpectrumClaim,
    char_poly,
    claim_from_json,
    claim_to_json,
    claim_to_polynomial,
    claim_to_text,
    cospectral,
    formula_spectrum_gamma1,
    formula_spectrum_incidence,
    numeric_spectrum,
    verify_spectrum,
)

from oracles import berkowitz_charpoly


def ev(a, b=0, d=0):
    return AlgebraicEigenvalue(Fraction(a), Fraction(b), d)


def random_graph(n, p, seed):
    rng = random.Random(seed)
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)
                     if rng.random() < p])


# ---------------------------------------------------------------------------
# algebraic eigenvalues and claims
# ---------------------------------------------------------------------------

def test_eigenvalue_normalization():
    assert ev(0, 1, 8) == ev(0, 2, 2)        # sqrt(8) = 2 sqrt(2)
    assert ev(3, 1, 9) == ev(6)              # sqrt(9) folds into the rational
    assert ev(1, 0, 5) == ev(1)              # b = 0 clears d
    assert ev(2, 1, 1) == ev(3)
    e = ev(Fraction(9, 2), Fraction(1, 2), 73)
    assert (e.a, e.b, e.d) == (Fraction(9, 2), Fraction(1, 2), 73)
    with pytest.raises(ValueError):
        AlgebraicEigenvalue(Fraction(0), Fraction(1), -2)


def test_eigenvalue_helpers():
    e = ev(2, -1, 2)
    assert not e.is_rational
    assert e.conjugate() == ev(2, 1, 2)
    assert abs(e.approx() - (2 - math.sqrt(2))) < 1e-12
    assert ev(5).is_rational
    assert ev(Fraction(9, 2), Fraction(1, 2), 73).render() == "9/2+1/2√73"
    assert ev(0, -1, 6).render() == "-√6"


def test_claim_merging_and_order():
    c = SpectrumClaim([(ev(1), 2), (ev(1), 3), (ev(4), 1), (ev(0), 0)])
    assert c.entries == ((ev(4), 1), (ev(1), 5))
    assert c.total_multiplicity == 6


def test_claim_requires_conjugate_pairs():
    with pytest.raises(ValueError):
        SpectrumClaim([(ev(0, 1, 2), 3)])
    with pytest.raises(ValueError):
        SpectrumClaim([(ev(0, 1, 2), 3), (ev(0, -1, 2), 2)])
    SpectrumClaim([(ev(0, 1, 2), 3), (ev(0, -1, 2), 3)])


def test_claim_to_polynomial():
    c = SpectrumClaim([(ev(1, 1, 2), 1), (ev(1, -1, 2), 1)])
    assert claim_to_polynomial(c) == IntPolynomial([-1, -2, 1])
    with pytest.raises(NonIntegralClaim):
        claim_to_polynomial(SpectrumClaim([(ev(Fraction(1, 2)), 1)]))


def test_claim_text_and_json_round_trip():
    c = SpectrumClaim([
        (ev(10), 1), (ev(6), 15), (ev(2), 15), (ev(-2), 65),
    ])
    assert claim_to_text(c) == "10, 6^15, 2^15, (-2)^65"
    assert claim_from_json(claim_to_json(c)) == c
    c = SpectrumClaim([(ev(2, 1, 2), 6), (ev(2, -1, 2), 6)])
    assert claim_to_text(c) == "(2+√2)^6, (2-√2)^6"
    assert claim_from_json(claim_to_json(c)) == c


# ---------------------------------------------------------------------------
# characteristic polynomial: modular route vs division-free oracle
# ---------------------------------------------------------------------------

def test_char_poly_known_small():
    assert char_poly(complete_graph(2)).coeffs == (-1, 0, 1)
    assert char_poly(cycle_graph(4)).coeffs == (0, 0, -4, 0, 1)
    assert char_poly(Graph(3, [])).coeffs == (0, 0, 0, 1)


@pytest.mark.parametrize("seed", range(8))
def test_char_poly_matches_berkowitz_random(seed):
    n = 4 + seed
    g = random_graph(n, 0.45, seed)
    assert list(char_poly(g).coeffs) == berkowitz_charpoly(g)


def test_char_poly_matches_berkowitz_catalog(gamma1_graphs):
    g = gamma1_graphs["fano-7-3-1"].graph
    assert list(char_poly(g).coeffs) == berkowitz_charpoly(g)


def test_char_poly_matches_sympy_once():
    g = random_graph(7, 0.5, 99)
    rows = [[0] * 7 for _ in range(7)]
    for u, v in g.edges:
        rows[u][v] = rows[v][u] = 1
    x = sympy.Symbol("x")
    theirs = sympy.Matrix(rows).charpoly(x).all_coeffs()
    assert list(char_poly(g).coeffs) == list(reversed(theirs))


def test_char_poly_empty_and_single():
    assert char_poly(Graph(1, [])).coeffs == (0, 1)


# ---------------------------------------------------------------------------
# spectrum verification and formulas
# ---------------------------------------------------------------------------

def test_verify_spectrum_decides():
    c4_true = SpectrumClaim([(ev(2), 1), (ev(0), 2), (ev(-2), 1)])
    c4_false = SpectrumClaim([(ev(2), 2), (ev(-2), 2)])
    assert verify_spectrum(cycle_graph(4), c4_true)
    assert not verify_spectrum(cycle_graph(4), c4_false)


def test_cospectral_smallest_pair():
    # the classical pair: C4 plus an isolated vertex, and the 4-star
    a = Graph(5, [(0, 1), (1, 2), (2, 3), (3, 0)])
    b = Graph(5, [(0, 1), (0, 2), (0, 3), (0, 4)])
    assert cospectral(a, b)
    assert not cospectral(a, cycle_graph(5))


def test_incidence_formula_fano():
    p = DesignParams(7, 7, 3, 3, 1)
    claim = formula_spectrum_incidence(p)
    assert claim_to_text(claim) == "3, (√2)^6, (-√2)^6, -3"
    assert claim.total_multiplicity == 14


def test_gamma1_formula_collapses_for_symmetric_designs():
    p = DesignParams(16, 16, 6, 6, 2)
    claim = formula_spectrum_gamma1(p)
    assert claim_to_text(claim) == "10, 6^15, 2^15, (-2)^65"


def test_formulas_agree_with_char_poly(catalog_designs, gamma1_graphs):
    from flagspec.designs import incidence_graph, validate_design

    for did in ("fano-7-3-1", "biplane-7-4-2", "complete-6-20-10-3-4"):
        d = catalog_designs[did]
        p = validate_design(d)
        assert verify_spectrum(incidence_graph(d), formula_spectrum_incidence(p))
        assert verify_spectrum(gamma1_graphs[did].graph, formula_spectrum_gamma1(p))


# ---------------------------------------------------------------------------
# numeric clustering
# ---------------------------------------------------------------------------

def test_numeric_spectrum_known():
    out = numeric_spectrum(complete_graph(4), 1e-9)
    assert len(out) == 2
    (v1, m1), (v2, m2) = out
    assert m1 == 1 and abs(v1 - 3) < 1e-9
    assert m2 == 3 and abs(v2 + 1) < 1e-9


def test_numeric_spectrum_separates_close_values(gamma1_graphs):
    g = gamma1_graphs["biplane-7-4-2"].graph
    out = numeric_spectrum(g, 1e-9)
    expected = [
        (6.0, 1),
        (2 + math.sqrt(2), 6),
        (2 - math.sqrt(2), 6),
        (-2.0, 15),
    ]
    assert [m for _, m in out] == [m for _, m in expected]
    assert all(abs(a - b) < 1e-9 for (a, _), (b, _) in zip(out, expected))


def test_numeric_spectrum_rejects_bad_tolerance():
    with pytest.raises(ValueError):
        numeric_spectrum(cycle_graph(4), 0.0)
