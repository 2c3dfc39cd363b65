"""Rank bounds for forms: the N_d bound, the Diff-based cactus bound, the
differential length, and generic ranks of forms."""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, asdict
from typing import Sequence

from .apolar import gamma_scheme, hilbert_function
from .graded import Echelon, MonomialIndex
from .ring import DEFAULT_PRIME, GF, Poly, format_poly, random_linear_form

# (n, d) pairs where the general form has one more than the expected rank
AH_EXCEPTIONS = frozenset({(2, 4), (3, 4), (4, 3), (4, 4)})


def nd_bound(n: int, d: int) -> int:
    """Maximal dim Diff(F_l) for a degree-d form in n+1 variables."""
    if n < 0 or d < 1:
        raise ValueError("need n >= 0 and d >= 1")
    k, odd = divmod(d - 1, 2)
    if not odd:
        return 2 * math.comb(n + k, k)
    return math.comb(n + k, k) + math.comb(n + k + 1, k + 1)


@dataclass(frozen=True)
class GenericRank:
    value: int
    exceptional: bool = False
    convention: bool = False


def generic_rank(n: int, d: int) -> GenericRank:
    """Waring rank of a general degree-d form in n+1 variables.

    Quadrics (d = 2) get n + 1, the rank of a full-rank quadric.  The four
    defective pairs get the ceiling value plus one and are flagged.
    """
    if n < 1 or d < 2:
        raise ValueError("need n >= 1 and d >= 2")
    if d == 2:
        return GenericRank(n + 1, convention=True)
    value = -(-math.comb(n + d, d) // (n + 1))
    if (n, d) in AH_EXCEPTIONS:
        return GenericRank(value + 1, exceptional=True)
    return GenericRank(value)


def expected_secant_dimension(n: int, d: int, r: int) -> int:
    return min(r * (n + 1), math.comb(n + d, d)) - 1


def secant_dimension(n: int, d: int, r: int, seed: int = 0, prime: int = DEFAULT_PRIME) -> int:
    """Projective dimension of the span of tangent spaces to the d-th Veronese
    of P^n at r random points (Terracini), computed over F_p."""
    if r < 1:
        raise ValueError("r must be positive")
    field = GF(prime)
    mi = MonomialIndex.get(n + 1, d)
    rng = random.Random(seed)
    ech = Echelon(field)
    for _ in range(r):
        l = random_linear_form(n, rng.randrange(2 ** 62), field)
        base = l ** (d - 1)
        for i in range(n + 1):
            vec = {mi.index[e]: c for e, c in base.shift_monomial(_unit(n + 1, i)).items()}
            ech.insert(vec)
    return ech.rank - 1


def _unit(nvars, i):
    e = [0] * nvars
    e[i] = 1
    return tuple(e)


def diff_length(F: Poly) -> int:
    """Largest dimension of a space of k-th order partials of F."""
    return max(hilbert_function(F))


@dataclass(frozen=True)
class CactusBound:
    bound: int
    witness: Poly
    lengths: tuple[tuple[Poly, int], ...]


def default_candidates(F: Poly, extra: int = 8, seed: int = 0) -> list[Poly]:
    """The coordinate forms x0..xn followed by ``extra`` seeded random linear forms."""
    n1 = F.nvars
    cands = [Poly.var(i, n1, F.field) for i in range(n1)]
    rng = random.Random(seed)
    box = 10 if F.field.characteristic == 0 else None
    for _ in range(extra):
        cands.append(random_linear_form(n1 - 1, rng.randrange(2 ** 62), F.field, box=box))
    return cands


def cactus_upper_bound(F: Poly, candidates: Sequence[Poly] | None = None, extra: int = 8,
                       seed: int = 0) -> CactusBound:
    """min over candidate l of length Gamma(F_l); the first minimizer wins ties."""
    if candidates is None:
        candidates = default_candidates(F, extra, seed)
    if not candidates:
        raise ValueError("no candidate linear forms")
    lengths = tuple((l, gamma_scheme(F, l).length) for l in candidates)
    best = min(range(len(lengths)), key=lambda i: (lengths[i][1], i))
    return CactusBound(lengths[best][1], lengths[best][0], lengths)


@dataclass(frozen=True)
class RankReport:
    """Bracketing of the cactus rank: ldiff <= cr(F) <= upper_bound <= N_d.

    The smoothable and border ranks are not computed; they lie between the
    cactus rank and the rank.  For a general form the rank is ``generic_rank``.
    """

    n: int
    d: int
    hilbert: tuple[int, ...]
    ldiff: int
    upper_bound: int
    witness: Poly
    nd: int
    generic_rank: int | None
    generic_rank_exceptional: bool
    candidates: str
    field: str
    seed: int

    def bracket(self) -> tuple[int, int]:
        return (self.ldiff, self.upper_bound)

    def to_dict(self) -> dict:
        out = asdict(self)
        out["witness"] = format_poly(self.witness)
        out["hilbert"] = list(self.hilbert)
        out["bracket"] = list(self.bracket())
        return out


def rank_report(F: Poly, candidates: Sequence[Poly] | None = None, extra: int = 8,
                seed: int = 0) -> RankReport:
    n, d = F.nvars - 1, F.degree
    h = hilbert_function(F)
    if candidates is None:
        candidates = default_candidates(F, extra, seed)
        desc = f"coordinate forms + {extra} random (seed {seed})"
    else:
        desc = f"{len(candidates)} given"
    cb = cactus_upper_bound(F, candidates)
    gr = generic_rank(n, d) if n >= 1 and d >= 2 else None
    report = RankReport(
        n=n, d=d, hilbert=h, ldiff=max(h), upper_bound=cb.bound, witness=cb.witness,
        nd=nd_bound(n, d), generic_rank=None if gr is None else gr.value,
        generic_rank_exceptional=bool(gr and gr.exceptional), candidates=desc,
        field=F.field.tag, seed=seed,
    )
    if not report.ldiff <= report.upper_bound <= report.nd:
        raise RuntimeError(f"bound chain violated: {report}")
    return report
