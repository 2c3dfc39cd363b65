import math

import pytest
import sympy as sp

from apolarity import (GF, Poly, affine_annihilator, annihilator_piece,
                       catalecticant, decompose_check, diff_space, gamma_scheme,
                       hilbert_function, is_apolar, parse_poly, point_ideal_piece,
                       remark2_check)
from apolarity.apolar import split_power
from apolarity.parse import parse_list
from apolarity.ring import apply_op, dehomogenize, homogenize_element, random_form, random_linear_form
from apolarity.verify import quoted_quadrics, reducible_cubic

from oracles import annihilator_dim_upto, diff_dim, hilbert, to_sympy, xs

P = parse_poly


def affine(text, nvars):
    """An affine polynomial in x1..x_nvars, written with those names."""
    shifted = P(text, nvars=nvars + 1)
    return Poly({e[1:]: c for e, c in shifted.items()}, nvars, affine=True)


def test_hilbert_examples():
    assert hilbert_function(P("x0^3 + x1^3 + x2^3")) == (1, 3, 3, 1)
    assert hilbert_function(P("x0^4", nvars=3)) == (1, 1, 1, 1, 1)
    assert hilbert_function(P("x0*x1*x2")) == (1, 3, 3, 1)
    assert hilbert_function(P("x0^2*x1")) == (1, 2, 2, 1)


@pytest.mark.parametrize("seed", range(8))
def test_hilbert_matches_sympy(seed):
    n, d = 1 + seed % 3, 2 + seed % 3
    F = random_form(n, d, seed, box=20)
    assert hilbert_function(F) == hilbert(F)


def test_catalecticant_shape_and_entries():
    M = catalecticant(P("x0^2*x1"), 1)
    assert (M.nrows, M.ncols) == (3, 2)
    # y0 -> 2 x0 x1, y1 -> x0^2 ; rows x0^2, x0 x1, x1^2
    assert M.rows == [[0, 1], [2, 0], [0, 0]]
    with pytest.raises(ValueError):
        catalecticant(P("x0^2*x1"), 4)


def test_annihilator_piece_reducible_cubic_n2():
    F = reducible_cubic(2)
    A = annihilator_piece(F, 2)
    assert A.dim == 3
    assert all(apply_op(g, F).is_zero() for g in A.basis)
    assert all(g in A for g in quoted_quadrics(2, scale=3))
    assert annihilator_piece(F, 4).dim == 15


def test_annihilator_piece_degree_bounds():
    F = P("x0^2 + x1^2")
    assert annihilator_piece(F, 3).dim == 4
    with pytest.raises(ValueError):
        annihilator_piece(F, 4)


def test_annihilator_and_hilbert_complementary():
    F = random_form(2, 4, 3)
    h = hilbert_function(F)
    for k in range(5):
        assert annihilator_piece(F, k).dim + h[k] == math.comb(k + 2, 2)


def test_diff_space_examples():
    assert diff_space(affine("1 + x1^3", 1)).dim == 4
    assert diff_space(affine("1 + x1^2 + x2^2", 2)).dim == 4
    assert diff_space(affine("x1*x2", 2)).dim == 4
    D = diff_space(affine("x1^2 + x2", 2))
    assert affine("x1", 2) in D and affine("x2", 2) not in D


@pytest.mark.parametrize("seed", range(6))
def test_diff_space_matches_sympy(seed):
    F = random_form(2, 3, seed, box=9)
    f, _ = dehomogenize(F, P("x0", nvars=3))
    X = sp.symbols("X1 X2")
    expr = to_sympy(Poly(f.terms, 2)).subs({xs(2)[0]: X[0], xs(2)[1]: X[1]})
    assert diff_space(f).dim == diff_dim(expr, X, f.degree)


def test_affine_annihilator_examples():
    X1, X2 = sp.symbols("X1 X2")
    f = affine("1 + x1^2", 1)
    assert affine_annihilator(f, 2) == [] == [None] * annihilator_dim_upto(1 + X1 ** 2, (X1,), 2, 2)
    assert len(affine_annihilator(f, 3)) == annihilator_dim_upto(1 + X1 ** 2, (X1,), 3, 2) == 1
    g = affine("1 + x1^2 + x2^2", 2)
    assert len(affine_annihilator(g, 2)) == annihilator_dim_upto(1 + X1 ** 2 + X2 ** 2, (X1, X2), 2, 2)
    for op in affine_annihilator(g, 2):
        assert apply_op(op, g).is_zero()


def test_gamma_scheme_reducible_cubic():
    for n in range(2, 5):
        S = gamma_scheme(reducible_cubic(n), P("x0", nvars=n + 1))
        assert S.length == n + 2 and S.verified
        assert S.point == tuple([1] + [0] * n)


def test_gamma_scheme_needs_divided_powers():
    # with plain dehomogenization some homogenized annihilator misses F
    F = P("x0^2*x1 + x2^3")
    l = P("x0", nvars=3)
    f, M = dehomogenize(F, l)
    plain = [homogenize_element(g, g.degree, M) for g in affine_annihilator(f, f.degree + 1)]
    assert not is_apolar(plain, F)
    S = gamma_scheme(F, l)
    assert is_apolar(S.generators, F)
    assert S.length == diff_space(S.f).dim


@pytest.mark.parametrize("seed", range(10))
def test_gamma_generators_kill_form_general_l(seed):
    F = random_form(3, 3, seed, box=9)
    l = random_linear_form(3, seed, box=4)
    S = gamma_scheme(F, l)
    assert is_apolar(S.generators, F)
    # any scheme apolar to F has length at least the largest Hilbert value
    assert S.length >= max(hilbert_function(F))


def test_gamma_scheme_prime_field():
    F = random_form(3, 3, 1, GF())
    S = gamma_scheme(F, P("x0", GF(), nvars=4))
    assert S.length == 8 and is_apolar(S.generators, F)


def test_point_ideal_piece():
    pts = parse_list("x0, x1, x0 + x1 + x2", nvars=3)
    I2 = point_ideal_piece(pts, 2)
    assert I2.dim == 6 - 3
    with pytest.raises(ValueError):
        point_ideal_piece(parse_list("x0 + x1, 2*x0 + 2*x1"), 1)


def test_decompose_check_roundtrip():
    pts = parse_list("x0 + x1, x0 - x1, x2", nvars=3)
    F = pts[0] ** 3 + pts[1] ** 3 + pts[2] ** 3
    res = decompose_check(F, pts)
    assert res.success and all(res.containment) and res.coefficients == (1, 1, 1)
    bad = decompose_check(F + P("x0*x1*x2"), pts)
    assert not bad.success and not all(bad.containment)


def test_split_power():
    F = P("x0^2*x1 + x0*x1^2")
    assert split_power(F, P("x0", nvars=2), 1) == P("x0*x1 + x1^2")
    with pytest.raises(ValueError):
        split_power(F, P("x0", nvars=2), 2)


def test_remark2_reducible_cubic():
    for n in range(2, 5):
        rep = remark2_check(reducible_cubic(n), P("x0", nvars=n + 1), 1)
        assert rep.kills_power and rep.contained
        assert rep.agreement_degree is not None


def test_remark2_cofactor_example():
    rep = remark2_check(P("x0^2*x1"), P("x0", nvars=2), 2)
    assert rep.cofactor == P("x1", nvars=2)
    assert rep.doubled_form == P("x0*x1")
    assert rep.kills_power and rep.contained
    with pytest.raises(ValueError):
        remark2_check(P("x0^2*x1"), P("x0", nvars=2), 1)


def test_apolarity_errors():
    with pytest.raises(ValueError):
        hilbert_function(P("x0^2 + x1"))
    with pytest.raises(ValueError):
        diff_space(Poly.zero(2, affine=True))


@pytest.mark.parametrize("seed", range(5))
def test_affine_annihilator_codimension_stabilizes(seed):
    F = random_form(2, 3, seed, box=9)
    f, _ = dehomogenize(F, random_linear_form(2, seed, box=3), divided_powers=True)
    D = diff_space(f).dim
    codims = []
    for k in range(0, f.degree + 3):
        total = math.comb(k + f.nvars, k)
        codims.append(total - len(affine_annihilator(f, k)))
    assert codims == sorted(codims)
    assert all(c == D for c in codims[f.degree:])


@pytest.mark.parametrize("seed", range(5))
def test_every_homogenized_annihilator_kills_form(seed):
    F = random_form(3, 4, seed, box=9)
    l = random_linear_form(3, seed + 1, box=3)
    f, M = dehomogenize(F, l, divided_powers=True)
    for g in affine_annihilator(f, f.degree + 1):
        assert apply_op(homogenize_element(g, g.degree, M), F).is_zero()
