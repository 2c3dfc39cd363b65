"""Exact linear algebra on graded pieces of the operator ring.

Vectors are sparse dicts ``{column: value}``.  Column 0 is the most
significant one, so for vectors indexed by a monomial basis in decreasing
graded-lex order the pivot of a row is its leading monomial.

Over Q elimination is fraction-free: rows are kept as primitive integer
vectors and only turned into fractions when a reduced echelon form is read
out.  Over F_p rows are normalized to pivot 1.
"""

from __future__ import annotations

import bisect
import math
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from functools import reduce
from typing import Iterable, Sequence

from .ring import QQ, Poly, exponents_of_degree


def monomial_basis(n: int, k: int) -> list[tuple[int, ...]]:
    """Degree-k monomials in n+1 variables, decreasing graded-lex order."""
    if n < 0 or k < 0:
        raise ValueError("n and k must be non-negative")
    return exponents_of_degree(n + 1, k)


def _primitive(vec: dict, tag: dict | None):
    # scale a rational vector (and its tag) to a primitive integer vector
    dens = [v.denominator for v in vec.values()]
    if tag:
        dens.extend(v.denominator for v in tag.values())
    den = math.lcm(*dens) if dens else 1
    if den != 1:
        vec = {k: int(v * den) for k, v in vec.items()}
        if tag is not None:
            tag = {k: int(v * den) for k, v in tag.items()}
    else:
        vec = {k: int(v) for k, v in vec.items()}
        if tag is not None:
            tag = {k: int(v) for k, v in tag.items()}
    g = reduce(math.gcd, vec.values(), 0)
    if tag:
        g = reduce(math.gcd, tag.values(), g)
    if g > 1:
        vec = {k: v // g for k, v in vec.items()}
        if tag is not None:
            tag = {k: v // g for k, v in tag.items()}
    return vec, tag


class Echelon:
    """Incrementally maintained row echelon form.

    Rows can carry a *tag*, a second sparse vector that undergoes the same
    row operations; this records which combination of inserted vectors a row
    (or a vanishing remainder) came from.
    """

    def __init__(self, field=QQ):
        self.field = field
        self._exact = field.characteristic == 0
        self._rows: dict[int, dict] = {}
        self._tags: dict[int, dict | None] = {}
        self._pivots: list[int] = []

    @property
    def rank(self) -> int:
        return len(self._pivots)

    @property
    def pivots(self) -> list[int]:
        return list(self._pivots)

    def _combine_int(self, a, v, b, row):
        # a*v - b*row, dropping zeros
        out = {k: a * x for k, x in v.items()} if a != 1 else dict(v)
        for k, x in row.items():
            y = out.get(k, 0) - b * x
            if y:
                out[k] = y
            else:
                out.pop(k, None)
        return out

    def _combine_mod(self, v, b, row):
        p = self.field.characteristic
        out = dict(v)
        for k, x in row.items():
            y = (out.get(k, 0) - b * x) % p
            if y:
                out[k] = y
            else:
                out.pop(k, None)
        return out

    def reduce(self, vec: dict, tag: dict | None = None):
        """Reduce against the current rows.

        Over Q the remainder is only determined up to a nonzero scalar.
        Returns ``(remainder, tag)``.
        """
        if self._exact:
            v, t = _primitive({k: x for k, x in vec.items() if x != 0},
                              None if tag is None else dict(tag))
        else:
            p = self.field.characteristic
            v = {k: x % p for k, x in vec.items() if x % p}
            t = None if tag is None else {k: x % p for k, x in tag.items() if x % p}
        if not v:
            return v, t
        for piv in self._pivots:
            if piv not in v:
                continue
            row = self._rows[piv]
            rtag = self._tags[piv]
            if self._exact:
                a, b = row[piv], v[piv]
                g = math.gcd(a, b)
                a, b = a // g, b // g
                v = self._combine_int(a, v, b, row)
                if t is not None:
                    t = self._combine_int(a, t, b, rtag)
            else:
                b = v[piv]
                v = self._combine_mod(v, b, row)
                if t is not None:
                    t = self._combine_mod(t, b, rtag)
            if not v:
                break
        if self._exact and (v or t):
            v, t = _primitive(v, t)
        return v, t

    def insert(self, vec: dict, tag: dict | None = None):
        """Insert a vector.

        Returns ``(True, None)`` if it was independent, else ``(False, tag)``
        with the reduced tag, which describes a dependency.
        """
        v, t = self.reduce(vec, tag)
        if not v:
            return False, t
        piv = min(v)
        if self._exact:
            if v[piv] < 0:
                v = {k: -x for k, x in v.items()}
                if t is not None:
                    t = {k: -x for k, x in t.items()}
        else:
            p = self.field.characteristic
            inv = pow(v[piv], -1, p)
            if inv != 1:
                v = {k: x * inv % p for k, x in v.items()}
                if t is not None:
                    t = {k: x * inv % p for k, x in t.items()}
        self._rows[piv] = v
        self._tags[piv] = t
        bisect.insort(self._pivots, piv)
        return True, None

    def contains(self, vec: dict) -> bool:
        return not self.reduce(vec)[0]

    def rref(self) -> list[dict]:
        """Reduced echelon rows (pivot 1, zero above and below), sorted by pivot."""
        done: dict[int, dict] = {}
        for piv in reversed(self._pivots):
            row = self._rows[piv]
            for q in self._pivots:
                if q <= piv or q not in row:
                    continue
                other = done[q]
                if self._exact:
                    a, b = other[q], row[q]
                    g = math.gcd(a, b)
                    row = self._combine_int(a // g, row, b // g, other)
                else:
                    row = self._combine_mod(row, row[q], other)
            if self._exact:
                row, _ = _primitive(row, None)
                if row[piv] < 0:
                    row = {k: -x for k, x in row.items()}
            done[piv] = row
        out = []
        for piv in self._pivots:
            row = done[piv]
            if self._exact:
                lead = row[piv]
                row = {k: QQ.reduce(Fraction(x, lead)) for k, x in row.items()}
            out.append(row)
        return out


class ExactMatrix:
    """Dense matrix with exact entries."""

    def __init__(self, rows: Sequence[Sequence], field=QQ, ncols: int | None = None):
        self.field = field
        self.rows = [[field(v) for v in r] for r in rows]
        self.nrows = len(self.rows)
        self.ncols = len(self.rows[0]) if self.rows else (ncols or 0)
        if any(len(r) != self.ncols for r in self.rows):
            raise ValueError("ragged matrix")

    @classmethod
    def zeros(cls, nrows, ncols, field=QQ):
        return cls([[0] * ncols for _ in range(nrows)], field, ncols)

    @classmethod
    def identity(cls, n, field=QQ):
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)], field, n)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def column(self, j) -> dict:
        return {i: r[j] for i, r in enumerate(self.rows) if r[j] != 0}

    def row_echelon(self) -> Echelon:
        ech = Echelon(self.field)
        for r in self.rows:
            ech.insert({j: v for j, v in enumerate(r) if v != 0})
        return ech

    def rank(self) -> int:
        return self.row_echelon().rank

    def rref(self) -> list[list]:
        out = []
        for row in self.row_echelon().rref():
            out.append([row.get(j, 0) for j in range(self.ncols)])
        return out

    def apply(self, vec: Sequence) -> list:
        red = self.field.reduce
        return [red(sum(a * b for a, b in zip(r, vec))) for r in self.rows]

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix([list(c) for c in zip(*self.rows)], self.field, self.nrows)

    def __repr__(self):
        return f"ExactMatrix({self.nrows}x{self.ncols}, field={self.field!r})"


def kernel_from_columns(columns: Sequence[dict], field=QQ) -> list[dict]:
    """Right null space of the matrix with the given sparse columns.

    The basis is in reduced echelon form: each vector has a 1 at its leading
    (smallest) index and no other vector is nonzero there.
    """
    ech = Echelon(field)
    out = []
    for j in range(len(columns) - 1, -1, -1):
        independent, tag = ech.insert(columns[j], {j: 1})
        if not independent:
            lead = tag[j]
            if field.characteristic == 0:
                vec = {k: QQ.reduce(Fraction(v, lead)) for k, v in tag.items()}
            else:
                inv = field.inv(lead)
                vec = {k: v * inv % field.characteristic for k, v in tag.items()}
            out.append(vec)
    out.reverse()
    return out


def kernel(M: ExactMatrix) -> list[list]:
    """Echelon basis of {v : M v = 0}, as dense vectors."""
    cols = [M.column(j) for j in range(M.ncols)]
    return [[v.get(j, 0) for j in range(M.ncols)] for v in kernel_from_columns(cols, M.field)]


def solve(M: ExactMatrix, b: Sequence) -> list | None:
    """One solution of M v = b, or None if the system is inconsistent."""
    cols = [dict((i, v) for i, v in enumerate(b) if v != 0)]
    cols += [M.column(j) for j in range(M.ncols)]
    for vec in kernel_from_columns(cols, M.field):
        if min(vec) == 0:
            red = M.field.reduce
            return [red(-vec.get(j + 1, 0)) for j in range(M.ncols)]
        break
    return None


# ---------------------------------------------------------------------------
# graded pieces


class MonomialIndex:
    """Position of each degree-k monomial in decreasing graded-lex order."""

    _cache: dict[tuple[int, int], "MonomialIndex"] = {}

    def __init__(self, nvars: int, k: int):
        self.nvars = nvars
        self.degree = k
        self.monomials = exponents_of_degree(nvars, k)
        self.index = {m: i for i, m in enumerate(self.monomials)}

    @classmethod
    def get(cls, nvars: int, k: int) -> "MonomialIndex":
        key = (nvars, k)
        if key not in cls._cache:
            cls._cache[key] = cls(nvars, k)
        return cls._cache[key]

    def __len__(self):
        return len(self.monomials)


def _poly_vector(p: Poly, idx: dict) -> dict:
    try:
        return {idx[e]: c for e, c in p.items()}
    except KeyError as exc:
        raise ValueError(f"term {exc.args[0]} of {p} has the wrong degree") from None


@dataclass(frozen=True)
class GradedPiece:
    """A subspace of the degree-k part of a polynomial ring, stored as a
    reduced echelon basis (distinct leading monomials, leading coefficient 1)."""

    degree: int
    nvars: int
    basis: tuple[Poly, ...]
    field: object = QQ
    side: str = "y"
    _ech: list = dc_field(default_factory=list, repr=False, compare=False)

    @classmethod
    def span(cls, polys: Iterable[Poly], degree: int, nvars: int, field=QQ, side: str = "y") -> "GradedPiece":
        mi = MonomialIndex.get(nvars, degree)
        ech = Echelon(field)
        for p in polys:
            if p.nvars != nvars or p.field != field:
                raise ValueError("polynomial does not belong to this ring")
            ech.insert(_poly_vector(p, mi.index))
        return cls._from_echelon(ech, degree, nvars, field, side)

    @classmethod
    def _from_echelon(cls, ech: Echelon, degree, nvars, field, side) -> "GradedPiece":
        mi = MonomialIndex.get(nvars, degree)
        basis = tuple(Poly({mi.monomials[j]: c for j, c in row.items()}, nvars, field, side)
                      for row in ech.rref())
        piece = cls(degree, nvars, basis, field, side)
        piece._ech.append(ech)
        return piece

    @classmethod
    def full(cls, degree, nvars, field=QQ, side="y") -> "GradedPiece":
        return cls.span((Poly.monomial(m, 1, field, side) for m in exponents_of_degree(nvars, degree)),
                        degree, nvars, field, side)

    @classmethod
    def zero(cls, degree, nvars, field=QQ, side="y") -> "GradedPiece":
        return cls.span((), degree, nvars, field, side)

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def ambient_dim(self) -> int:
        return math.comb(self.nvars + self.degree - 1, self.degree)

    def echelon(self) -> Echelon:
        if not self._ech:
            mi = MonomialIndex.get(self.nvars, self.degree)
            ech = Echelon(self.field)
            for p in self.basis:
                ech.insert(_poly_vector(p, mi.index))
            self._ech.append(ech)
        return self._ech[0]

    def __contains__(self, p: Poly) -> bool:
        if p.is_zero():
            return True
        if p.nvars != self.nvars or not p.is_homogeneous or p.degree != self.degree:
            return False
        return self.echelon().contains(_poly_vector(p, MonomialIndex.get(self.nvars, self.degree).index))

    def __len__(self):
        return self.dim

    def __iter__(self):
        return iter(self.basis)

    def __str__(self):
        return "<" + ", ".join(str(p) for p in self.basis) + ">"


def ideal_piece(generators: Iterable, t: int, nvars: int | None = None, field=None,
                side: str = "y") -> GradedPiece:
    """Degree-t piece of the ideal generated by ``generators``.

    ``generators`` may mix GradedPieces and homogeneous Polys; the result is
    the span of m*g over generators g of degree k and monomials m of degree t-k.
    """
    gens: list[Poly] = []
    for g in generators:
        if isinstance(g, GradedPiece):
            gens.extend(g.basis)
        elif not g.is_zero():
            if not g.is_homogeneous:
                raise ValueError(f"generator {g} is not homogeneous")
            gens.append(g)
    if gens:
        nvars = gens[0].nvars if nvars is None else nvars
        field = gens[0].field if field is None else field
        side = gens[0].side
    elif nvars is None:
        raise ValueError("nvars required when there are no generators")
    field = QQ if field is None else field
    top = max((g.degree for g in gens), default=0)
    if t < top:
        raise ValueError(f"degree {t} is below the generator degree {top}")
    mi = MonomialIndex.get(nvars, t)
    ech = Echelon(field)
    for g in gens:
        gv = list(g.items())
        for m in exponents_of_degree(nvars, t - g.degree):
            vec = {mi.index[tuple(a + b for a, b in zip(e, m))]: c for e, c in gv}
            ech.insert(vec)
            if ech.rank == len(mi):
                break
        if ech.rank == len(mi):
            break
    return GradedPiece._from_echelon(ech, t, nvars, field, side)


def piece_contained(A: GradedPiece, B: GradedPiece) -> bool:
    """True iff every basis element of A reduces to zero against B."""
    if A.degree != B.degree or A.nvars != B.nvars:
        raise ValueError("pieces live in different degrees or rings")
    return all(p in B for p in A.basis)


@dataclass(frozen=True)
class EmptinessResult:
    """Outcome of :func:`empty_projective`.

    ``quotient_dims`` lists (t, dim T_t - dim I_t).  ``certified`` means the
    quotient vanished at ``degree``, so the generators have no common
    projective zero over the algebraic closure.
    """

    certified: bool
    degree: int | None
    quotient_dims: tuple[tuple[int, int], ...]


def empty_projective(generators: Sequence, t_max: int | None = None, nvars: int | None = None,
                     field=None) -> EmptinessResult:
    gens = []
    for g in generators:
        gens.extend(g.basis if isinstance(g, GradedPiece) else [g])
    gens = [g for g in gens if not g.is_zero()]
    top = max((g.degree for g in gens), default=0)
    if nvars is None:
        if not gens:
            raise ValueError("nvars required when there are no generators")
        nvars = gens[0].nvars
    if t_max is None:
        t_max = 2 * top + 4
    dims = []
    for t in range(top, t_max + 1):
        piece = ideal_piece(gens, t, nvars, field)
        q = piece.ambient_dim - piece.dim
        dims.append((t, q))
        if q == 0:
            return EmptinessResult(True, t, tuple(dims))
    return EmptinessResult(False, None, tuple(dims))
