"""Catalecticants, annihilators, Diff spaces and the local apolar scheme of F."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from .graded import (Echelon, ExactMatrix, GradedPiece, MonomialIndex, ideal_piece,
                     kernel_from_columns, piece_contained, solve)
from .ring import (LinearSubstitution, Poly, apply_op, completion_basis, dehomogenize,
                   exponents_of_degree, exponents_up_to, homogenize_element, substitute)


class ApolarityError(RuntimeError):
    """An internal consistency check failed; this indicates a bug."""


def _require_form(F: Poly):
    if F.side != "x":
        raise ValueError("expected an x-side form")
    if F.is_zero():
        raise ValueError("F must be nonzero")
    if not F.is_homogeneous:
        raise ValueError("F must be homogeneous")


def catalecticant(F: Poly, k: int, action: str = "differentiation") -> ExactMatrix:
    """Matrix of T_k -> S_(d-k), g -> g(F).

    Columns are indexed by the degree-k operator monomials, rows by the
    degree-(d-k) monomials of S, both in decreasing graded-lex order.
    """
    _require_form(F)
    d = F.degree
    if not 0 <= k <= d:
        raise ValueError(f"k = {k} outside 0..{d}")
    cols = exponents_of_degree(F.nvars, k)
    rows = MonomialIndex.get(F.nvars, d - k)
    M = [[0] * len(cols) for _ in range(len(rows))]
    for j, a in enumerate(cols):
        img = apply_op(Poly.monomial(a, 1, F.field, "y"), F, action)
        for e, c in img.items():
            M[rows.index[e]][j] = c
    return ExactMatrix(M, F.field, len(cols))


def hilbert_function(F: Poly, action: str = "differentiation") -> tuple[int, ...]:
    """Hilbert function (h_0, ..., h_d) of T/F^perp: the catalecticant ranks."""
    _require_form(F)
    return tuple(catalecticant(F, k, action).rank() for k in range(F.degree + 1))


def annihilator_piece(F: Poly, k: int, action: str = "differentiation") -> GradedPiece:
    """Degree-k piece of the annihilator F^perp (all of T_k when k > deg F)."""
    _require_form(F)
    d = F.degree
    if k < 0 or k > d + 1:
        raise ValueError(f"k = {k} outside 0..{d + 1}")
    if k == d + 1:
        return GradedPiece.full(k, F.nvars, F.field)
    M = catalecticant(F, k, action)
    monos = exponents_of_degree(F.nvars, k)
    vecs = kernel_from_columns([M.column(j) for j in range(M.ncols)], F.field)
    polys = [Poly({monos[j]: c for j, c in v.items()}, F.nvars, F.field, "y") for v in vecs]
    return GradedPiece.span(polys, k, F.nvars, F.field)


# ---------------------------------------------------------------------------
# Diff spaces and affine annihilators


@dataclass(frozen=True)
class DiffSpace:
    """Span of all partial derivatives (orders 0..deg f) of f, as a reduced
    echelon basis over the monomials of degree <= deg f."""

    f: Poly
    basis: tuple[Poly, ...]

    @property
    def dim(self) -> int:
        return len(self.basis)

    def __contains__(self, p: Poly) -> bool:
        if p.is_zero():
            return True
        if p.degree > self.f.degree:
            return False
        idx = _upto_index(self.f.nvars, self.f.degree)
        ech = Echelon(self.f.field)
        for b in self.basis:
            ech.insert({idx[e]: c for e, c in b.items()})
        return ech.contains({idx[e]: c for e, c in p.items()})


_upto_cache: dict[tuple[int, int], dict] = {}


def _upto_index(nvars: int, k: int) -> dict:
    key = (nvars, k)
    if key not in _upto_cache:
        _upto_cache[key] = {e: i for i, e in enumerate(exponents_up_to(nvars, k))}
    return _upto_cache[key]


def diff_space(f: Poly) -> DiffSpace:
    """Close {f} under first partial derivatives.

    Breadth-first worklist: derive in variable order, keep a derivative only
    if it is independent of what has been collected.
    """
    if f.is_zero():
        raise ValueError("f must be nonzero")
    if f.side != "x":
        raise ValueError("expected an x-side polynomial")
    idx = _upto_index(f.nvars, f.degree)
    monos = exponents_up_to(f.nvars, f.degree)
    ech = Echelon(f.field)
    ech.insert({idx[e]: c for e, c in f.items()})
    queue = [f]
    while queue:
        nxt = []
        for p in queue:
            for i in range(p.nvars):
                q = p.derivative(i)
                if q.is_zero():
                    continue
                new, _ = ech.insert({idx[e]: c for e, c in q.items()})
                if new:
                    nxt.append(q)
        queue = nxt
    basis = tuple(Poly({monos[j]: c for j, c in row.items()}, f.nvars, f.field, "x", f.affine)
                  for row in ech.rref())
    return DiffSpace(f, basis)


def affine_annihilator(f: Poly, k: int) -> list[Poly]:
    """Echelon basis of {g : deg g <= k, g(f) = 0}.

    Operators of mixed degree are allowed; y-monomials differentiate every
    graded part of f and constants act as scalars.
    """
    if f.is_zero():
        raise ValueError("f must be nonzero")
    ops = exponents_up_to(f.nvars, k)
    target = _upto_index(f.nvars, max(f.degree, 0))
    cols = []
    for a in ops:
        img = apply_op(Poly.monomial(a, 1, f.field, "y", f.affine), f)
        cols.append({target[e]: c for e, c in img.items()})
    vecs = kernel_from_columns(cols, f.field)
    return [Poly({ops[j]: c for j, c in v.items()}, f.nvars, f.field, "y", f.affine) for v in vecs]


# ---------------------------------------------------------------------------
# the apolar scheme Gamma(F_l)


@dataclass(frozen=True)
class ApolarScheme:
    """The local Gorenstein scheme cut out by the annihilator of F_l.

    ``f`` is the dehomogenization used (l treated as a divided power, see
    :func:`dehomogenize`); ``annihilator`` is a basis of its annihilator in
    degrees <= deg f + 1 and ``generators`` the homogenized elements in the
    original y coordinates, each checked to kill F.
    """

    form: Poly
    l: Poly
    substitution: LinearSubstitution
    f: Poly
    length: int
    annihilator: tuple[Poly, ...]
    generators: tuple[Poly, ...]
    verified: bool

    @property
    def point(self) -> tuple:
        """Coordinates of the support [l]."""
        return tuple(self.l.linear_coefficients())

    def ideal_piece(self, t: int) -> GradedPiece:
        """Degree-t piece of the homogeneous ideal of the scheme."""
        gens = [g for g in self.generators if g.degree <= t]
        return ideal_piece(gens, t, self.form.nvars, self.form.field)


def gamma_scheme(F: Poly, l: Poly, verify: bool = True) -> ApolarScheme:
    _require_form(F)
    f, M = dehomogenize(F, l, divided_powers=True)
    length = diff_space(f).dim
    annih = affine_annihilator(f, f.degree + 1)
    gens = tuple(homogenize_element(g, g.degree, M) for g in annih)
    if verify:
        for G in gens:
            if not apply_op(G, F).is_zero():
                raise ApolarityError(f"homogenized annihilator {G} does not kill {F}")
    return ApolarScheme(F, l, M, f, length, tuple(annih), gens, verify)


def is_apolar(generators: Iterable[Poly], F: Poly, action: str = "differentiation") -> bool:
    """True iff every generator annihilates F (so the ideal they generate lies in F^perp)."""
    return all(apply_op(g, F, action).is_zero() for g in generators)


# ---------------------------------------------------------------------------
# saturation check without dehomogenizing


@dataclass(frozen=True)
class Remark2Report:
    """Degreewise comparison of the ideal J generated by (l^(d-e) F')^perp_(d-e)
    with the homogenized annihilator H of F_l.

    ``rows`` holds (t, dim J_t, dim H_t, J_t inside H_t).  ``agreement_degree``
    is the least t from which J_t = H_t holds through the end of the range,
    or None.
    """

    cofactor: Poly
    doubled_form: Poly
    generators: GradedPiece
    kills_power: bool
    rows: tuple[tuple[int, int, int, bool], ...]
    agreement_degree: int | None

    @property
    def contained(self) -> bool:
        return all(r[3] for r in self.rows)


def split_power(F: Poly, l: Poly, e: int) -> Poly:
    """Return F' with F = l^e * F' and l not dividing F'."""
    M = completion_basis(l)
    G = substitute(F, M)
    if any(x[0] < e for x in G.terms):
        raise ValueError(f"l^{e} does not divide F")
    if not any(x[0] == e for x in G.terms):
        raise ValueError(f"l^{e + 1} divides F; the cofactor must not be divisible by l")
    shifted = Poly({(x[0] - e,) + x[1:]: c for x, c in G.items()}, G.nvars, G.field)
    return substitute(shifted, M.inverted())


def remark2_check(F: Poly, l: Poly, e: int, t_range: Sequence[int] | None = None) -> Remark2Report:
    _require_form(F)
    d = F.degree
    if d - e < 1:
        raise ValueError("need d - e >= 1 (F is not a pure power of l)")
    cofactor = split_power(F, l, e)
    h = d - e
    doubled = l ** h * cofactor
    gens = annihilator_piece(doubled, h)
    kills = all(apply_op(g, l ** h).is_zero() for g in gens.basis)
    scheme = gamma_scheme(F, l)
    if t_range is None:
        t_range = range(h, h + d + 3)
    rows = []
    for t in t_range:
        if t < h:
            continue
        J = ideal_piece([gens], t, F.nvars, F.field)
        H = scheme.ideal_piece(t)
        rows.append((t, J.dim, H.dim, piece_contained(J, H)))
    # eventual agreement: equal from some degree on, through the end of the range
    agree = None
    for t, dj, dh, inside in reversed(rows):
        if not (inside and dj == dh):
            break
        agree = t
    return Remark2Report(cofactor, doubled, gens, kills, tuple(rows), agree)


# ---------------------------------------------------------------------------
# point sets and the apolarity lemma


def _check_points(points: Sequence[Poly]):
    if not points:
        raise ValueError("need at least one point")
    for p in points:
        if p.side != "x" or p.is_zero() or not p.is_linear_form():
            raise ValueError(f"{p} is not a nonzero linear form")
    vecs = [p.linear_coefficients() for p in points]
    field = points[0].field
    for i in range(len(vecs)):
        for j in range(i + 1, len(vecs)):
            if ExactMatrix([vecs[i], vecs[j]], field).rank() < 2:
                raise ValueError(f"points {points[i]} and {points[j]} are proportional")


def point_ideal_piece(points: Sequence[Poly], k: int) -> GradedPiece:
    """I_(Gamma,k) for the reduced set of points [l_i] in P(S_1)."""
    _check_points(points)
    nvars = points[0].nvars
    field = points[0].field
    monos = exponents_of_degree(nvars, k)
    vals = [p.linear_coefficients() for p in points]
    red = field.reduce
    cols = []
    for a in monos:
        col = {}
        for i, c in enumerate(vals):
            v = 1
            for ci, ai in zip(c, a):
                if ai:
                    v = v * ci ** ai
            v = red(v)
            if v != 0:
                col[i] = v
        cols.append(col)
    vecs = kernel_from_columns(cols, field)
    polys = [Poly({monos[j]: c for j, c in v.items()}, nvars, field, "y") for v in vecs]
    return GradedPiece.span(polys, k, nvars, field)


@dataclass(frozen=True)
class DecompositionCheck:
    """Result of :func:`decompose_check`.  ``containment[k]`` records whether
    I_(Gamma,k) lies in F^perp_k."""

    success: bool
    coefficients: tuple | None
    containment: tuple[bool, ...]


def decompose_check(F: Poly, points: Sequence[Poly]) -> DecompositionCheck:
    """Solve F = sum c_i l_i^d exactly and cross-check with the apolarity lemma."""
    _require_form(F)
    _check_points(points)
    d = F.degree
    mi = MonomialIndex.get(F.nvars, d)
    powers = [p ** d for p in points]
    A = ExactMatrix([[0] * len(points) for _ in range(len(mi))], F.field, len(points))
    for j, pw in enumerate(powers):
        for e, c in pw.items():
            A.rows[mi.index[e]][j] = c
    b = [0] * len(mi)
    for e, c in F.items():
        b[mi.index[e]] = c
    sol = solve(A, b)
    containment = tuple(piece_contained(point_ideal_piece(points, k), annihilator_piece(F, k))
                        for k in range(d + 1))
    if (sol is not None) != all(containment):
        raise ApolarityError(f"apolarity lemma violated: solution={sol}, containment={containment}")
    return DecompositionCheck(sol is not None, None if sol is None else tuple(sol), containment)
