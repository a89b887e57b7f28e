import math
import random
from fractions import Fraction

import numpy as np
import pytest

from cubicspec import (
    BudgetExceededError,
    CharPoly,
    Graph,
    are_cospectral,
    bipartite_double,
    catalog,
    char_poly,
    disjoint_union,
    eigenvalues,
    rayleigh,
    rayleigh_formula_c1,
    rayleigh_formula_c2,
    triangle_count,
    truncate_full,
    truncated_shape_check,
    truncation_char_poly,
    truncation_spectrum_map,
)
from cubicspec.spectral import eigen_system

from oracles import brute_char_poly_coeffs, poly_multiply, random_graph


# ---------------------------------------------------------------------------
# exact characteristic polynomials
# ---------------------------------------------------------------------------

def test_char_poly_k4():
    assert char_poly(catalog("K4")).coefficients == (1, 0, -6, -8, -3)


def test_char_poly_empty_graph():
    assert char_poly(Graph(3)).coefficients == (1, 0, 0, 0)
    assert char_poly(Graph(0)).coefficients == (1,)


def test_char_poly_petersen_factored():
    # (x - 3)(x - 1)^5 (x + 2)^4 expanded independently
    expected = (1, -3)
    for _ in range(5):
        expected = poly_multiply(expected, (1, -1))
    for _ in range(4):
        expected = poly_multiply(expected, (1, 2))
    assert char_poly(catalog("petersen")).coefficients == expected


def test_char_poly_gadget_f():
    # quotient-matrix factorization: x (x + 1) (x^3 - x^2 - 6x + 2)
    expected = poly_multiply(poly_multiply((1, 0), (1, 1)), (1, -1, -6, 2))
    assert char_poly(catalog("F")).coefficients == expected


def test_char_poly_matches_determinant_interpolation():
    rng = random.Random(31)
    for _ in range(25):
        g = random_graph(rng.randrange(1, 9), rng.uniform(0.2, 0.8), rng)
        assert char_poly(g).coefficients == brute_char_poly_coeffs(g)


def test_char_poly_int64_and_bigint_paths_agree():
    import cubicspec.spectral as sp
    from oracles import random_max_degree3
    rng = random.Random(32)
    for _ in range(10):
        g = random_max_degree3(rng.randrange(6, 18), rng)
        fast = char_poly(g)
        old = sp._CHARPOLY_INT64_ORDER
        try:
            sp._CHARPOLY_INT64_ORDER = 0
            slow = char_poly(g)
        finally:
            sp._CHARPOLY_INT64_ORDER = old
        assert fast == slow


def test_char_poly_coefficient_identities(small_corpora):
    for n in (4, 6, 8, 10):
        for g in small_corpora[n]:
            coeffs = char_poly(g).coefficients
            assert coeffs[1] == 0
            assert coeffs[2] == -g.m
            assert coeffs[3] == -2 * triangle_count(g)


def test_char_poly_budget():
    import cubicspec.spectral as sp
    with pytest.raises(BudgetExceededError):
        char_poly(Graph(sp.CHARPOLY_ORDER_BUDGET + 1))


def test_charpoly_text_roundtrip():
    p = char_poly(catalog("petersen"))
    assert CharPoly.from_text(p.to_text()) == p


def test_root_multiplicity_and_division():
    p = char_poly(catalog("petersen"))
    assert p.root_multiplicity(3) == 1
    assert p.root_multiplicity(1) == 5
    assert p.root_multiplicity(-2) == 4
    assert p.root_multiplicity(0) == 0
    quot, rem = p.divide_linear(3)
    assert rem == 0 and quot.degree == 9
    assert p.evaluate(3) == 0
    assert p.evaluate(4) != 0


def test_are_cospectral():
    rng = random.Random(33)
    for _ in range(20):
        g = random_graph(rng.randrange(1, 12), 0.4, rng)
        perm = list(range(g.n))
        rng.shuffle(perm)
        assert are_cospectral(g, g.relabel(perm))
    assert not are_cospectral(catalog("K33"), catalog("prism"))
    assert not are_cospectral(catalog("K4"), Graph(4))


# ---------------------------------------------------------------------------
# floating spectra
# ---------------------------------------------------------------------------

def test_eigenvalues_known_spectra():
    assert eigenvalues(catalog("K4")).groups() == ((3.0, 1), (-1.0, 3))
    cube_groups = eigenvalues(catalog("cube")).groups()
    assert [(round(v), m) for v, m in cube_groups] == [
        (3, 1), (1, 3), (-1, 3), (-3, 1)]


def test_threshold_eigenvalues_match_published_decimals():
    assert abs(eigenvalues(catalog("F")).values[0] - 2.85577) < 1e-4
    assert abs(eigenvalues(catalog("Fprime")).values[0] - 2.94272) < 1e-4


def test_spectrum_invariants_random():
    rng = random.Random(34)
    for _ in range(50):
        g = random_graph(rng.randrange(1, 16), rng.uniform(0.1, 0.9), rng)
        spec = eigenvalues(g)
        assert spec.order == g.n
        assert abs(sum(spec.values)) <= max(g.n, 1) * 1e-9
        assert abs(sum(v * v for v in spec.values) - 2 * g.m) <= g.n * 1e-8
        if g.n:
            assert spec.values[0] <= max(g.degrees()) + 1e-9


def test_eigenvalues_match_lapack():
    rng = random.Random(35)
    for _ in range(30):
        g = random_graph(rng.randrange(1, 20), 0.4, rng)
        ref = np.linalg.eigvalsh(g.adjacency_matrix().astype(float))[::-1]
        got = eigenvalues(g).values
        assert max((abs(a - b) for a, b in zip(got, ref)), default=0) < 1e-9


def test_eigenpair_residuals():
    for name in ("petersen", "Fdoubleprime"):
        g = catalog(name)
        spec, vecs = eigen_system(g)
        a = g.adjacency_matrix().astype(float)
        for i in range(g.n):
            residual = np.linalg.norm(a @ vecs[:, i] - spec.values[i] * vecs[:, i])
            assert residual <= 1e-9 * g.n


def test_relabelling_stability():
    rng = random.Random(36)
    g = catalog("petersen")
    perm = list(range(g.n))
    rng.shuffle(perm)
    a = eigenvalues(g).values
    b = eigenvalues(g.relabel(perm)).values
    assert max(abs(x - y) for x, y in zip(a, b)) < 1e-10


def test_interlacing():
    rng = random.Random(37)
    for _ in range(100):
        n = rng.randrange(2, 14)
        g = random_graph(n, rng.uniform(0.2, 0.8), rng)
        w = rng.randrange(n)
        outer = eigenvalues(g).values
        inner = eigenvalues(g.delete_vertex(w)).values
        for i, mu in enumerate(inner):
            assert outer[i] >= mu - 1e-8
            assert mu >= outer[i + 1] - 1e-8


def test_spectrum_grouping_and_json():
    spec = eigenvalues(catalog("cube"))
    js = spec.to_json()
    assert [entry["multiplicity"] for entry in js] == [1, 3, 3, 1]
    assert js[0]["value"] == 3.0


# ---------------------------------------------------------------------------
# Rayleigh machinery
# ---------------------------------------------------------------------------

def test_rayleigh_regular_all_ones():
    assert rayleigh(catalog("K4"), [1, 1, 1, 1]) == 3


def test_rayleigh_gadget_value():
    # entry 2 on the unique degree-2 vertex, 3 elsewhere: 3 - 6/94
    fp = catalog("Fprime")
    vec = [3] * 11
    vec[10] = 2
    value = rayleigh(fp, vec)
    assert value == Fraction(276, 94) == 3 - Fraction(6, 94)
    assert value == rayleigh_formula_c2(11)


def test_rayleigh_errors():
    with pytest.raises(ValueError):
        rayleigh(catalog("K4"), [1, 1, 1])
    with pytest.raises(ValueError):
        rayleigh(catalog("K4"), [0, 0, 0, 0])


def test_rayleigh_bounded_by_largest_eigenvalue():
    rng = random.Random(38)
    for _ in range(200):
        n = rng.randrange(1, 12)
        g = random_graph(n, 0.5, rng)
        vec = [rng.randrange(-3, 4) for _ in range(n)]
        if not any(vec):
            vec[0] = 1
        assert float(rayleigh(g, vec)) <= eigenvalues(g).values[0] + 1e-9


def test_rayleigh_formula_values():
    c2 = rayleigh_formula_c2(13)
    assert c2 == Fraction(330, 112)
    assert float(c2) > 2.9464
    assert rayleigh_formula_c1(26, True) == Fraction(662, 224)
    assert rayleigh_formula_c1(26, False) == Fraction(660, 224)
    for bad in (9, 12):
        with pytest.raises(ValueError):
            rayleigh_formula_c2(bad)
    with pytest.raises(ValueError):
        rayleigh_formula_c1(25, True)


def test_rayleigh_formula_matches_construction():
    from cubicspec.verify import _near_cubic_double, _near_cubic_single
    rng = random.Random(39)
    for _ in range(20):
        n2 = rng.choice((11, 13, 15))
        g = _near_cubic_single(n2, rng)
        vec = [2 if g.degree(v) == 2 else 3 for v in range(g.n)]
        assert rayleigh(g, vec) == rayleigh_formula_c2(n2)
    for adjacent in (True, False):
        g = _near_cubic_double(26, rng, adjacent)
        vec = [2 if g.degree(v) == 2 else 3 for v in range(g.n)]
        assert rayleigh(g, vec) == rayleigh_formula_c1(26, adjacent)


# ---------------------------------------------------------------------------
# truncation spectrum map and shape check
# ---------------------------------------------------------------------------

def test_spectrum_map_k4():
    mapped = truncation_spectrum_map(eigenvalues(catalog("K4")), 4)
    assert [(round(v), m) for v, m in mapped.groups()] == [
        (3, 1), (2, 3), (0, 2), (-1, 3), (-2, 3)]


def test_spectrum_map_matches_direct_eigensolve(petersen):
    mapped = truncation_spectrum_map(eigenvalues(petersen), 10)
    direct = eigenvalues(truncate_full(petersen))
    assert max(abs(a - b) for a, b in zip(mapped.values, direct.values)) < 1e-8


def test_spectrum_map_single_three_for_connected(small_corpora):
    for g in small_corpora[8]:
        mapped = truncation_spectrum_map(eigenvalues(g), 8)
        assert sum(1 for v in mapped.values if abs(v - 3) < 1e-6) == 1


def test_spectrum_map_rejects_bad_input(petersen):
    spec = eigenvalues(petersen)
    with pytest.raises(ValueError):
        truncation_spectrum_map(spec, 12)
    with pytest.raises(ValueError):
        truncation_spectrum_map(eigenvalues(catalog("F")), 5)


def test_truncation_char_poly_identity(small_corpora):
    for n in (4, 6, 8):
        for g in small_corpora[n]:
            assert truncation_char_poly(char_poly(g)) == char_poly(truncate_full(g))


def test_shape_check():
    k4 = catalog("K4")
    assert truncated_shape_check(truncate_full(k4))
    assert not truncated_shape_check(k4)
    assert not truncated_shape_check(catalog("K33"))
    assert truncated_shape_check(
        disjoint_union(truncate_full(k4), truncate_full(k4)))


def test_shape_check_forces_regularity():
    # order divisible by 3 and the right walk counts cannot happen for a
    # non-regular graph; fuzz a few near-misses
    rng = random.Random(40)
    for _ in range(200):
        g = random_graph(rng.choice((6, 9, 12)), rng.uniform(0.2, 0.7), rng)
        if truncated_shape_check(g):
            assert g.is_cubic()


def test_double_cover_of_truncation_is_cospectral_with_shape():
    tk4 = truncate_full(catalog("K4"))
    double = bipartite_double(tk4)
    assert double.is_cubic()
    assert not truncated_shape_check(double)  # bipartite: no triangles
