"""Exact scalars and sparse multivariate polynomials.

Polynomials live on one of two sides: the ``x`` side (forms F in
S = k[x0..xn]) or the ``y`` side (operators in the dual ring T).  An operator
acts on a form by differentiation, ``y_j(x_i) = delta_ij``; the factorial-free
contraction pairing is available as an alternative.

Affine polynomials (dehomogenizations, local operators) carry ``affine=True``
and are printed with variables numbered from 1.
"""

from __future__ import annotations

import math
import random
from fractions import Fraction
from types import MappingProxyType
from typing import Iterable, Mapping, Sequence

DEFAULT_PRIME = 2147483647

ACTIONS = ("differentiation", "contraction")


def is_probable_prime(p: int) -> bool:
    """Deterministic Miller-Rabin for p < 3.3e24, probabilistic beyond."""
    if p < 2:
        return False
    small = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
    for q in small:
        if p % q == 0:
            return p == q
    d, s = p - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in small:
        x = pow(a, d, p)
        if x in (1, p - 1):
            continue
        for _ in range(s - 1):
            x = x * x % p
            if x == p - 1:
                break
        else:
            return False
    return True


class RationalField:
    """The rationals, with ints and Fractions as elements."""

    characteristic = 0
    tag = "q"

    def __call__(self, x):
        if isinstance(x, bool):
            raise TypeError("booleans are not field elements")
        if isinstance(x, int):
            return x
        if isinstance(x, Fraction):
            return x.numerator if x.denominator == 1 else x
        if isinstance(x, str):
            return self(Fraction(x))
        raise TypeError(f"cannot convert {x!r} to an exact rational")

    @staticmethod
    def reduce(x):
        if type(x) is Fraction and x.denominator == 1:
            return x.numerator
        return x

    def inv(self, x):
        if x == 0:
            raise ZeroDivisionError("division by zero in Q")
        return self.reduce(Fraction(1) / x)

    def div(self, a, b):
        return self.reduce(Fraction(a) * self.inv(b))

    def random_element(self, rng: random.Random, box: int = 1000):
        return rng.randint(-box, box)

    def __repr__(self):
        return "QQ"

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")


class PrimeField:
    """The prime field F_p; elements are ints in [0, p)."""

    def __init__(self, p: int):
        if not is_probable_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.characteristic = p
        self.tag = f"p:{p}"

    def __call__(self, x):
        if isinstance(x, bool):
            raise TypeError("booleans are not field elements")
        if isinstance(x, int):
            return x % self.p
        if isinstance(x, str):
            x = Fraction(x)
        if isinstance(x, Fraction):
            if x.denominator % self.p == 0:
                raise ZeroDivisionError(f"denominator {x.denominator} vanishes mod {self.p}")
            return x.numerator * pow(x.denominator, -1, self.p) % self.p
        raise TypeError(f"cannot convert {x!r} to an element of F_{self.p}")

    def reduce(self, x):
        return x % self.p

    def inv(self, x):
        x %= self.p
        if x == 0:
            raise ZeroDivisionError(f"division by zero in F_{self.p}")
        return pow(x, -1, self.p)

    def div(self, a, b):
        return a * self.inv(b) % self.p

    def random_element(self, rng: random.Random, box: int | None = None):
        return rng.randrange(self.p)

    def __repr__(self):
        return f"GF({self.p})"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))


QQ = RationalField()
_prime_fields: dict[int, PrimeField] = {}


def GF(p: int = DEFAULT_PRIME) -> PrimeField:
    if p not in _prime_fields:
        _prime_fields[p] = PrimeField(p)
    return _prime_fields[p]


def field_from_tag(tag: str):
    """Parse ``q`` or ``p:<prime>``."""
    if tag in ("q", "Q", "QQ"):
        return QQ
    if tag.startswith("p:"):
        return GF(int(tag[2:]))
    raise ValueError(f"unknown field {tag!r}; use 'q' or 'p:<prime>'")


def grlex_key(exps: tuple[int, ...]):
    """Sort key for graded lex with variable 0 greatest (larger key = larger monomial)."""
    return (sum(exps), exps)


def exponents_of_degree(nvars: int, k: int) -> list[tuple[int, ...]]:
    """All exponent vectors of total degree k, in decreasing graded-lex order."""
    if nvars == 0:
        return [()] if k == 0 else []
    if nvars == 1:
        return [(k,)]
    out = []
    for first in range(k, -1, -1):
        for rest in exponents_of_degree(nvars - 1, k - first):
            out.append((first,) + rest)
    return out


def exponents_up_to(nvars: int, k: int) -> list[tuple[int, ...]]:
    """All exponent vectors of degree <= k, largest first."""
    out = []
    for j in range(k, -1, -1):
        out.extend(exponents_of_degree(nvars, j))
    return out


class Poly:
    """Immutable sparse polynomial over an exact field.

    ``terms`` maps exponent tuples to nonzero coefficients.
    """

    __slots__ = ("_terms", "nvars", "field", "side", "affine", "_hash")

    def __init__(self, terms: Mapping | Iterable = (), nvars: int = 1, field=QQ,
                 side: str = "x", affine: bool = False):
        if side not in ("x", "y"):
            raise ValueError("side must be 'x' or 'y'")
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean: dict[tuple[int, ...], object] = {}
        for exps, c in items:
            exps = tuple(int(e) for e in exps)
            if len(exps) != nvars or any(e < 0 for e in exps):
                raise ValueError(f"bad exponent vector {exps} for {nvars} variables")
            c = field(c)
            if exps in clean:
                c = field.reduce(clean[exps] + c)
            clean[exps] = c
        self._terms = {e: c for e, c in clean.items() if c != 0}
        self.nvars = nvars
        self.field = field
        self.side = side
        self.affine = affine
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict, like: "Poly", nvars: int | None = None, side: str | None = None,
             affine: bool | None = None) -> "Poly":
        # terms must already be reduced field elements with zeros removed
        obj = cls.__new__(cls)
        obj._terms = terms
        obj.nvars = like.nvars if nvars is None else nvars
        obj.field = like.field
        obj.side = like.side if side is None else side
        obj.affine = like.affine if affine is None else affine
        obj._hash = None
        return obj

    # -- constructors ---------------------------------------------------
    @classmethod
    def zero(cls, nvars, field=QQ, side="x", affine=False):
        return cls({}, nvars, field, side, affine)

    @classmethod
    def constant(cls, c, nvars, field=QQ, side="x", affine=False):
        return cls({(0,) * nvars: c}, nvars, field, side, affine)

    @classmethod
    def var(cls, i, nvars, field=QQ, side="x", affine=False):
        exps = [0] * nvars
        exps[i] = 1
        return cls({tuple(exps): 1}, nvars, field, side, affine)

    @classmethod
    def monomial(cls, exps, coeff=1, field=QQ, side="x", affine=False):
        return cls({tuple(exps): coeff}, len(exps), field, side, affine)

    @classmethod
    def linear(cls, coeffs: Sequence, field=QQ, side="x", affine=False):
        n = len(coeffs)
        terms = {}
        for i, c in enumerate(coeffs):
            e = [0] * n
            e[i] = 1
            terms[tuple(e)] = c
        return cls(terms, n, field, side, affine)

    # -- inspection -----------------------------------------------------
    @property
    def terms(self) -> Mapping:
        return MappingProxyType(self._terms)

    def items(self):
        return self._terms.items()

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    @property
    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self._terms), default=-1)

    @property
    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self._terms}) <= 1

    def coefficient(self, exps) -> object:
        return self._terms.get(tuple(exps), 0)

    def sorted_terms(self) -> list[tuple[tuple[int, ...], object]]:
        """Terms in decreasing graded-lex order."""
        return sorted(self._terms.items(), key=lambda t: grlex_key(t[0]), reverse=True)

    def leading_monomial(self):
        return max(self._terms, key=grlex_key) if self._terms else None

    def homogeneous_part(self, k: int) -> "Poly":
        return Poly._raw({e: c for e, c in self._terms.items() if sum(e) == k}, self)

    def graded_parts(self) -> list["Poly"]:
        return [self.homogeneous_part(k) for k in range(self.degree + 1)]

    def is_linear_form(self) -> bool:
        return bool(self._terms) and all(sum(e) == 1 for e in self._terms)

    def linear_coefficients(self) -> list:
        if not all(sum(e) == 1 for e in self._terms):
            raise ValueError("not a linear form")
        out = [0] * self.nvars
        for e, c in self._terms.items():
            out[e.index(1)] = c
        return out

    # -- arithmetic -----------------------------------------------------
    def _check(self, other: "Poly"):
        if other.nvars != self.nvars:
            raise ValueError(f"variable-count mismatch: {self.nvars} vs {other.nvars}")
        if other.field != self.field:
            raise ValueError(f"field mismatch: {self.field} vs {other.field}")
        if other.side != self.side:
            raise ValueError("cannot combine x-side and y-side polynomials")

    def _coerce(self, other) -> "Poly | None":
        if isinstance(other, Poly):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return Poly.constant(other, self.nvars, self.field, self.side, self.affine)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        red = self.field.reduce
        out = dict(self._terms)
        for e, c in other._terms.items():
            v = red(out.get(e, 0) + c)
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return Poly._raw(out, self)

    __radd__ = __add__

    def __neg__(self):
        red = self.field.reduce
        return Poly._raw({e: red(-c) for e, c in self._terms.items()}, self)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def scale(self, c) -> "Poly":
        c = self.field(c)
        if c == 0:
            return Poly._raw({}, self)
        red = self.field.reduce
        return Poly._raw({e: red(v * c) for e, v in self._terms.items()}, self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.scale(other)
        if not isinstance(other, Poly):
            return NotImplemented
        self._check(other)
        red = self.field.reduce
        out: dict = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        out = {e: red(c) for e, c in out.items()}
        return Poly._raw({e: c for e, c in out.items() if c != 0}, self)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result = Poly.constant(1, self.nvars, self.field, self.side, self.affine)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift_monomial(self, exps) -> "Poly":
        """Multiply by the monomial with exponent vector ``exps``."""
        return Poly._raw({tuple(a + b for a, b in zip(e, exps)): c for e, c in self._terms.items()},
                         self)

    def derivative(self, i: int) -> "Poly":
        """Ordinary partial derivative with respect to variable i."""
        red = self.field.reduce
        out = {}
        for e, c in self._terms.items():
            if e[i]:
                v = red(c * e[i])
                if v:
                    out[e[:i] + (e[i] - 1,) + e[i + 1:]] = v
        return Poly._raw(out, self)

    def evaluate(self, point: Sequence):
        if len(point) != self.nvars:
            raise ValueError("point has wrong length")
        pt = [self.field(v) for v in point]
        total = 0
        for e, c in self._terms.items():
            t = c
            for v, k in zip(pt, e):
                if k:
                    t = t * v ** k
            total += t
        return self.field.reduce(total)

    def with_side(self, side: str) -> "Poly":
        return Poly._raw(dict(self._terms), self, side=side)

    def embed(self, nvars: int, offset: int = 0, affine: bool | None = None) -> "Poly":
        """Re-index into a ring with ``nvars`` variables, variable i -> i + offset."""
        if offset + self.nvars > nvars:
            raise ValueError("target ring too small")
        out = {}
        for e, c in self._terms.items():
            full = [0] * nvars
            full[offset:offset + self.nvars] = e
            out[tuple(full)] = c
        return Poly._raw(out, self, nvars=nvars, affine=self.affine if affine is None else affine)

    # -- comparison / display -------------------------------------------
    def __eq__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            other = self._coerce(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return (self.nvars == other.nvars and self.field == other.field
                and self.side == other.side and self._terms == other._terms)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, self.field, self.side, frozenset(self._terms.items())))
        return self._hash

    def var_name(self, i: int) -> str:
        return f"{self.side}{i + 1 if self.affine else i}"

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"Poly({format_poly(self)!r}, nvars={self.nvars}, field={self.field!r}, side={self.side!r})"


def format_poly(p: Poly) -> str:
    """Canonical text: graded-lex order, explicit '*' and '^'."""
    if p.is_zero():
        return "0"
    pieces = []
    for exps, c in p.sorted_terms():
        if p.field.characteristic == 0:
            neg = c < 0
            mag = -c if neg else c
        else:
            neg, mag = False, c
        factors = []
        for i, k in enumerate(exps):
            if k == 1:
                factors.append(p.var_name(i))
            elif k > 1:
                factors.append(f"{p.var_name(i)}^{k}")
        if not factors:
            body = str(mag)
        elif mag == 1:
            body = "*".join(factors)
        else:
            body = f"{mag}*" + "*".join(factors)
        if not pieces:
            pieces.append(f"-{body}" if neg else body)
        else:
            pieces.append(f" - {body}" if neg else f" + {body}")
    return "".join(pieces)


# ---------------------------------------------------------------------------
# the apolarity pairing


def _check_action(action: str):
    if action not in ACTIONS:
        raise ValueError(f"unknown action {action!r}; expected one of {ACTIONS}")


def apply_op(g: Poly, F: Poly, action: str = "differentiation") -> Poly:
    """Let the operator g act on F.

    With the default differentiation action, y^a sends x^b to
    prod b_i!/(b_i - a_i)! x^(b-a); contraction drops the factorials.
    """
    _check_action(action)
    if g.side != "y" or F.side != "x":
        raise ValueError("apply_op expects a y-side operator and an x-side polynomial")
    if g.nvars != F.nvars:
        raise ValueError(f"variable-count mismatch: {g.nvars} vs {F.nvars}")
    if g.field != F.field:
        raise ValueError("field mismatch")
    field = F.field
    dF = F.degree
    if action == "differentiation" and field.characteristic and field.characteristic <= max(dF, 0):
        raise ValueError(f"characteristic {field.characteristic} too small for degree {dF}")
    out: dict = {}
    diff = action == "differentiation"
    Fitems = list(F.items())
    perm = math.perm
    for a, ca in g.items():
        if sum(a) > dF:
            continue
        nz = [(i, ai) for i, ai in enumerate(a) if ai]
        for b, cb in Fitems:
            coef = ca * cb
            for i, ai in nz:
                bi = b[i]
                if ai > bi:
                    break
                if diff:
                    coef *= perm(bi, ai)
            else:
                if nz:
                    new = list(b)
                    for i, ai in nz:
                        new[i] -= ai
                    key = tuple(new)
                else:
                    key = b
                out[key] = out.get(key, 0) + coef
    red = field.reduce
    out = {e: red(c) for e, c in out.items()}
    return Poly._raw({e: c for e, c in out.items() if c != 0}, F)


# ---------------------------------------------------------------------------
# linear coordinate changes


def invert_matrix(rows: Sequence[Sequence], field) -> list[list]:
    """Gauss-Jordan inverse; raises ValueError if singular."""
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ValueError("matrix must be square")
    a = [[field(v) for v in r] + [1 if i == j else 0 for j in range(n)] for i, r in enumerate(rows)]
    red = field.reduce
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            raise ValueError("singular matrix")
        a[col], a[piv] = a[piv], a[col]
        inv = field.inv(a[col][col])
        a[col] = [red(v * inv) for v in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [red(x - f * y) for x, y in zip(a[r], a[col])]
    return [row[n:] for row in a]


class LinearSubstitution:
    """A basis (l, l1, ..., ln) of S_1 given by the rows of ``matrix``.

    Row i holds the x-coordinates of the i-th new coordinate form; row 0 is l.
    The dual basis (l', l1', ...) of T_1 transforms contragrediently.
    """

    def __init__(self, matrix: Sequence[Sequence], field=QQ, pivot: int = 0):
        self.field = field
        self.matrix = tuple(tuple(field(v) for v in row) for row in matrix)
        self.inverse = tuple(tuple(r) for r in invert_matrix(self.matrix, field))
        self.pivot = pivot
        self.size = len(self.matrix)
        self._inverted = None
        self._images: dict[str, list] = {}

    @classmethod
    def identity(cls, size: int, field=QQ):
        return cls([[1 if i == j else 0 for j in range(size)] for i in range(size)], field)

    def inverted(self) -> "LinearSubstitution":
        if self._inverted is None:
            self._inverted = LinearSubstitution(self.inverse, self.field, self.pivot)
            self._inverted._inverted = self
        return self._inverted

    def images(self, side: str) -> list[Poly]:
        """Linear polynomials that replace each old variable under substitution."""
        if side not in self._images:
            n = self.size
            if side == "x":
                # x_j = sum_i inverse[j][i] * z_i
                imgs = [Poly.linear(self.inverse[j], self.field, side="x") for j in range(n)]
            else:
                # y_j = sum_i matrix[i][j] * w_i
                imgs = [Poly.linear([self.matrix[i][j] for i in range(n)], self.field, side="y")
                        for j in range(n)]
            self._images[side] = imgs
        return self._images[side]

    def form(self, i: int) -> Poly:
        """The i-th new coordinate form, as a linear form in the x variables."""
        return Poly.linear(self.matrix[i], self.field)

    def dual_form(self, i: int) -> Poly:
        """The i-th dual basis element (l' for i = 0) in the y variables."""
        return Poly.linear([self.inverse[j][i] for j in range(self.size)], self.field, side="y")

    def apply(self, F: Poly) -> Poly:
        return substitute(F, self)

    def to_original_operator(self, G: Poly) -> Poly:
        """Rewrite an operator given in the dual coordinates in terms of y0..yn."""
        if G.side != "y":
            raise ValueError("expected a y-side operator")
        return substitute(G, self.inverted())

    def __eq__(self, other):
        return (isinstance(other, LinearSubstitution) and self.field == other.field
                and self.matrix == other.matrix)

    def __hash__(self):
        return hash((self.field, self.matrix))

    def __repr__(self):
        return f"LinearSubstitution({[list(r) for r in self.matrix]}, field={self.field!r})"


def _substitute_linear(F: Poly, images: Sequence[Poly]) -> Poly:
    # replace variable i of F by the linear polynomial images[i]
    field = F.field
    if all(len(img) == 1 for img in images):
        # monomial substitution (e.g. a coordinate permutation): no expansion needed
        targets = [next(iter(img.items())) for img in images]
        out: dict = {}
        red = field.reduce
        for e, c in F.items():
            new = [0] * F.nvars
            for (te, tc), k in zip(targets, e):
                if k:
                    c = c * tc ** k
                    for j, v in enumerate(te):
                        new[j] += v * k
            out[tuple(new)] = out.get(tuple(new), 0) + c
        out = {e: red(c) for e, c in out.items()}
        return Poly._raw({e: c for e, c in out.items() if c != 0}, F)
    powers: dict[tuple[int, int], Poly] = {}

    def power(i, k):
        if (i, k) not in powers:
            powers[(i, k)] = images[i] ** k
        return powers[(i, k)]

    red = field.reduce
    out: dict = {}
    one = Poly.constant(1, F.nvars, field, F.side, F.affine)
    for e, c in F.items():
        prod = one
        for i, k in enumerate(e):
            if k:
                prod = prod * power(i, k)
        for me, mc in prod.items():
            out[me] = out.get(me, 0) + c * mc
    out = {e: red(c) for e, c in out.items()}
    return Poly._raw({e: c for e, c in out.items() if c != 0}, F)


def substitute(F: Poly, M: LinearSubstitution) -> Poly:
    """Rewrite F in the coordinates defined by M.

    For an x-side F the result is a polynomial in the new coordinate forms
    (printed as x0..xn); for a y-side operator the result is in the dual
    coordinates.  The pairing is preserved:
    apply_op(substitute(g, M), substitute(F, M)) == substitute(apply_op(g, F), M).
    """
    if F.nvars != M.size:
        raise ValueError(f"substitution of size {M.size} applied to {F.nvars} variables")
    if F.field != M.field:
        raise ValueError("field mismatch")
    return _substitute_linear(F, M.images(F.side))


def completion_basis(l: Poly) -> LinearSubstitution:
    """Extend a nonzero linear form l to a basis: pivot at its first nonzero
    coefficient, the other coordinate forms in order."""
    if l.side != "x" or l.is_zero() or not l.is_linear_form():
        raise ValueError("l must be a nonzero linear form in the x variables")
    coeffs = l.linear_coefficients()
    pivot = next(i for i, c in enumerate(coeffs) if c != 0)
    n1 = l.nvars
    rows = [list(coeffs)]
    for j in range(n1):
        if j != pivot:
            rows.append([1 if i == j else 0 for i in range(n1)])
    return LinearSubstitution(rows, l.field, pivot)


def dehomogenize(F: Poly, l: Poly, divided_powers: bool = False) -> tuple[Poly, LinearSubstitution]:
    """Return (F_l, M): F in the basis (l, l1, ..., ln) with l set to 1.

    With ``divided_powers=True`` the part of F carrying l^(d-i) is scaled by
    (d-i)!, i.e. l is treated as a divided power.  That is the normalization
    under which homogenized annihilators of F_l kill F for the
    differentiation action.
    """
    if not F.is_homogeneous:
        raise ValueError("F must be homogeneous")
    if F.side != "x":
        raise ValueError("F must be an x-side form")
    M = completion_basis(l)
    if F.nvars != l.nvars:
        raise ValueError("F and l live in different rings")
    G = substitute(F, M)
    red = F.field.reduce
    out: dict = {}
    for e, c in G.items():
        key = e[1:]
        v = c * math.factorial(e[0]) if divided_powers else c
        out[key] = out.get(key, 0) + v
    out = {e: red(c) for e, c in out.items()}
    f = Poly._raw({e: c for e, c in out.items() if c != 0}, F, nvars=F.nvars - 1, affine=True)
    return f, M


def homogenize_element(g: Poly, r: int, subst: LinearSubstitution | None = None) -> Poly:
    """Homogenize an affine operator: sum_i (l')^(r-i) g_i.

    The result is in the dual coordinates (l', l1', ...); pass ``subst`` to
    get it back in y0..yn.
    """
    if g.side != "y":
        raise ValueError("expected a y-side operator")
    if r < g.degree:
        raise ValueError(f"homogenizing degree {r} below deg g = {g.degree}")
    G = Poly._raw({(r - sum(e),) + e: c for e, c in g.items()}, g, nvars=g.nvars + 1, affine=False)
    if subst is not None:
        G = subst.to_original_operator(G)
    return G


def rehomogenize(f: Poly, d: int, M: LinearSubstitution, divided_powers: bool = False) -> Poly:
    """Inverse of :func:`dehomogenize`: multiply f_i by l^(d-i) and return to x coordinates."""
    red = f.field.reduce
    out = {}
    for e, c in f.items():
        k = d - sum(e)
        if k < 0:
            raise ValueError("degree of f exceeds d")
        if divided_powers:
            c = f.field.div(c, math.factorial(k))
        out[(k,) + e] = red(c)
    G = Poly._raw(out, f, nvars=f.nvars + 1, affine=False)
    return substitute(G, M.inverted())


# ---------------------------------------------------------------------------
# random inputs


def random_form(n: int, d: int, seed: int, field=QQ, box: int = 1000) -> Poly:
    """Homogeneous degree-d form in x0..xn with seeded random coefficients.

    Over Q the coefficients are integers in [-box, box]; over F_p they are uniform.
    """
    if d < 1:
        raise ValueError("degree must be at least 1")
    rng = random.Random(seed)
    terms = {e: field.random_element(rng, box) for e in exponents_of_degree(n + 1, d)}
    F = Poly(terms, n + 1, field)
    while F.is_zero():
        terms = {e: field.random_element(rng, box) for e in exponents_of_degree(n + 1, d)}
        F = Poly(terms, n + 1, field)
    return F


def random_linear_form(n: int, seed: int, field=QQ, box: int = 1000) -> Poly:
    rng = random.Random(seed)
    while True:
        coeffs = [field.random_element(rng, box) for _ in range(n + 1)]
        if any(c != 0 for c in coeffs):
            return Poly.linear(coeffs, field)
