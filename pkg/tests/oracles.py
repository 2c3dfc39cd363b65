"""Independent reference computations built on sympy.

Nothing here touches the elimination or action code under test: derivatives
come from sympy.diff, ranks and null spaces from sympy.Matrix.
"""

from itertools import combinations_with_replacement

import sympy as sp


def xs(n1):
    return sp.symbols(f"x0:{n1}")


def monomials(vars_, k):
    return [sp.Mul(*c) for c in combinations_with_replacement(vars_, k)] if k else [sp.Integer(1)]


def to_sympy(P):
    """Convert an x-side Poly into a sympy expression in x0..xn."""
    v = xs(P.nvars)
    return sp.Add(*[sp.Rational(str(c)) * sp.Mul(*[v[i] ** k for i, k in enumerate(e)])
                    for e, c in P.items()])


def partials(expr, vars_, k):
    """All k-th order partial derivatives of expr."""
    out = []
    for combo in combinations_with_replacement(vars_, k):
        out.append(sp.diff(expr, *combo) if combo else expr)
    return out


def span_dim(exprs, vars_):
    exprs = [sp.expand(e) for e in exprs if sp.expand(e) != 0]
    if not exprs:
        return 0
    polys = [sp.Poly(e, *vars_) for e in exprs]
    monos = sorted({m for p in polys for m in p.monoms()})
    M = sp.Matrix([[p.coeff_monomial(m) for m in monos] for p in polys])
    return M.rank()


def hilbert(P):
    expr = to_sympy(P)
    v = xs(P.nvars)
    d = P.degree
    return tuple(span_dim(partials(expr, v, k), v) for k in range(d + 1))


def diff_dim(expr, vars_, d):
    return span_dim([q for k in range(d + 1) for q in partials(expr, vars_, k)], vars_)


def annihilator_dim_upto(expr, vars_, k, d):
    """Brute force: dim of {g : deg g <= k, g(f) = 0} by solving a generic
    linear system over symbolic coefficients."""
    ops = [m for j in range(k + 1) for m in combinations_with_replacement(vars_, j)]
    cs = sp.symbols(f"c0:{len(ops)}")
    total = sp.Integer(0)
    for c, combo in zip(cs, ops):
        total += c * (sp.diff(expr, *combo) if combo else expr)
    total = sp.expand(total)
    if total == 0:
        return len(ops)
    eqs = sp.Poly(total, *vars_).coeffs()
    A, _ = sp.linear_eq_to_matrix(eqs, cs)
    return len(ops) - A.rank()


def matrix_rank(rows, p=None):
    M = sp.Matrix(rows)
    if p is None:
        return M.rank()
    from sympy.polys.matrices import DomainMatrix
    from sympy import GF
    return DomainMatrix.from_list_sympy(M.rows, M.cols, M.tolist()).convert_to(GF(p)).rank()
