import math
import random

import pytest
import sympy as sp

from apolarity import (GF, cactus_upper_bound, diff_length, generic_rank, nd_bound, parse_poly,
                       rank_report, secant_dimension)
from apolarity.rank import AH_EXCEPTIONS, default_candidates, expected_secant_dimension
from apolarity.ring import random_form
from apolarity.verify import reducible_cubic

from oracles import span_dim, xs

P = parse_poly


def closed_form_nd(n, d):
    """Degreewise count: the degree-i layer of Diff(f) is bounded both by the
    degree-i monomials in n variables and by the order-(d-i) operators."""
    return sum(min(math.comb(n + i - 1, i), math.comb(n + d - i - 1, d - i)) for i in range(d + 1))


@pytest.mark.parametrize("n", range(1, 9))
@pytest.mark.parametrize("d", range(1, 8))
def test_nd_bound_matches_degreewise_count(n, d):
    assert nd_bound(n, d) == closed_form_nd(n, d)


def test_nd_bound_values():
    assert nd_bound(8, 3) == 18
    assert [nd_bound(n, 3) for n in range(2, 8)] == [6, 8, 10, 12, 14, 16]
    with pytest.raises(ValueError):
        nd_bound(2, 0)


def test_generic_rank():
    assert generic_rank(8, 3).value == 19
    assert generic_rank(2, 3).value == 4
    assert generic_rank(2, 4).value == 6 and generic_rank(2, 4).exceptional
    assert generic_rank(4, 3).value == 8
    assert generic_rank(3, 2).value == 4 and generic_rank(3, 2).convention
    assert not generic_rank(3, 3).exceptional


def sympy_secant_dim(n, d, r, seed):
    rng = random.Random(seed)
    v = xs(n + 1)
    vecs = []
    for _ in range(r):
        l = sum(rng.randint(-50, 50) * vi for vi in v)
        vecs.extend(sp.expand(l ** (d - 1) * vi) for vi in v)
    return span_dim(vecs, v) - 1


@pytest.mark.parametrize("n,d,r", [(2, 4, 5), (2, 3, 4), (3, 2, 1), (2, 3, 2)])
def test_secant_dimension_matches_sympy(n, d, r):
    assert secant_dimension(n, d, r) == sympy_secant_dim(n, d, r, 1)


@pytest.mark.parametrize("n,d", sorted(AH_EXCEPTIONS))
def test_exceptions_are_defective(n, d):
    r = generic_rank(n, d).value - 1
    assert secant_dimension(n, d, r) == expected_secant_dimension(n, d, r) - 1
    assert secant_dimension(n, d, r + 1) == math.comb(n + d, d) - 1


def test_diff_length():
    assert diff_length(P("x0^3 + x1^3 + x2^3")) == 3
    assert diff_length(random_form(3, 4, 0)) == 10


def test_cactus_upper_bound_reducible_cubic():
    F = reducible_cubic(3)
    cb = cactus_upper_bound(F, [P("x0", nvars=4)])
    assert cb.bound == 5 and cb.witness == P("x0", nvars=4)
    cb = cactus_upper_bound(F)
    assert cb.bound <= 5 and len(cb.lengths) == 4 + 8


def test_cactus_upper_bound_rejects_empty():
    with pytest.raises(ValueError):
        cactus_upper_bound(P("x0^3"), [])


def test_default_candidates_deterministic():
    F = random_form(2, 3, 0)
    assert default_candidates(F, 3, 5) == default_candidates(F, 3, 5)
    assert default_candidates(F, 3, 5)[:3] == [P("x0", nvars=3), P("x1", nvars=3), P("x2", nvars=3)]


@pytest.mark.parametrize("seed", range(4))
def test_rank_report_bracket(seed):
    F = random_form(3, 3, seed, GF())
    rep = rank_report(F, extra=2, seed=seed)
    assert rep.ldiff <= rep.upper_bound <= rep.nd
    assert rep.bracket() == (4, 8)
    d = rep.to_dict()
    assert d["bracket"] == [4, 8] and d["field"] == GF().tag and isinstance(d["witness"], str)
