"""Reproduction suite for the concrete computations behind the cactus-rank
bounds.  Each check returns a :class:`Check`; :func:`verify_paper` runs them
all and prints one line per check."""

from __future__ import annotations

import math
import random
import time
from dataclasses import dataclass
from typing import Callable

from .apolar import (ApolarityError, annihilator_piece, decompose_check, diff_space,
                     gamma_scheme, hilbert_function, remark2_check)
from .graded import GradedPiece, empty_projective
from .ring import (GF, QQ, Poly, dehomogenize, exponents_of_degree, random_form,
                   random_linear_form)
from .rank import (cactus_upper_bound, expected_secant_dimension, generic_rank, nd_bound,
                   secant_dimension, AH_EXCEPTIONS)


@dataclass
class Check:
    name: str
    expected: str
    computed: str
    passed: bool
    seconds: float = 0.0

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status}  {self.name}: expected {self.expected}; computed {self.computed}"


def _x(i, nvars, field=QQ):
    return Poly.var(i, nvars, field)


def _y(i, nvars, field=QQ):
    return Poly.var(i, nvars, field, side="y")


def reducible_cubic(n: int, field=QQ) -> Poly:
    """x0 * (x0^2 + x1^2 + ... + xn^2)."""
    n1 = n + 1
    return _x(0, n1, field) * sum((_x(i, n1, field) ** 2 for i in range(1, n1)), _x(0, n1, field) ** 2)


def quoted_quadrics(n: int, scale: int = 1, field=QQ) -> list[Poly]:
    """y_i y_j (1 <= i < j <= n) and y0^2 - scale * y_i^2 (1 <= i <= n)."""
    n1 = n + 1
    y = [_y(i, n1, field) for i in range(n1)]
    out = [y[i] * y[j] for i in range(1, n1) for j in range(i + 1, n1)]
    out += [y[0] ** 2 - y[i] ** 2 * scale for i in range(1, n1)]
    return out


def construction_form(m: int, seed: int, field=QQ) -> tuple[Poly, Poly]:
    """G + x0 x1 x_(m+1) + ... + x0 xm x_2m + x0^2 x_(2m+1), with G a seeded
    random cubic in x1..xm whose Hilbert function is (1, m, m, 1)."""
    nvars = 2 * m + 2
    s = seed
    while True:
        G0 = random_form(m - 1, 3, s, field)
        if hilbert_function(G0) == (1, m, m, 1):
            break
        s += 1
    G = G0.embed(nvars, offset=1)
    F = G
    x = [_x(i, nvars, field) for i in range(nvars)]
    for i in range(1, m + 1):
        F = F + x[0] * x[i] * x[m + i]
    F = F + x[0] ** 2 * x[2 * m + 1]
    return G0, F


# ---------------------------------------------------------------------------


def check_crossover() -> Check:
    rows = [(n, nd_bound(n, 3), generic_rank(n, 3).value) for n in range(2, 9)]
    first = next((n for n, b, r in rows if b < r), None)
    ok = (nd_bound(8, 3) == 18 and generic_rank(8, 3).value == 19
          and all(b >= r for n, b, r in rows if n <= 7) and first == 8)
    return Check("N_d crossover (n=8, d=3)", "bound 18 < generic rank 19, first at n=8",
                 f"bound {nd_bound(8, 3)} < generic rank {generic_rank(8, 3).value}, first at n={first}",
                 ok)


def check_diff_bound(seed: int = 0, trials: int = 20, n: int = 8) -> Check:
    field = GF()
    hits = 0
    values = []
    for t in range(trials):
        F = random_form(n, 3, seed + t, field)
        coords = [_x(i, n + 1, field) for i in range(n + 1)]
        b = cactus_upper_bound(F, coords).bound
        values.append(b)
        hits += b == 2 * n + 2
    need = math.ceil(0.95 * trials)
    return Check(f"Diff bound for random cubics, n={n}", f">= {need}/{trials} equal {2 * n + 2}",
                 f"{hits}/{trials} (values {sorted(set(values))})", hits >= need)


def homogenization_instances(seed: int = 0, pairs: int = 100, n_max: int = 4, d_max: int = 4):
    rng = random.Random(seed)
    for i in range(pairs):
        n = rng.randint(1, n_max)
        d = rng.randint(1, d_max)
        F = random_form(n, d, rng.randrange(2 ** 62), QQ)
        if i % 2 == 0:
            l = _x(rng.randrange(n + 1), n + 1)
        else:
            l = random_linear_form(n, rng.randrange(2 ** 62), QQ, box=5)
        yield F, l


def check_homogenization_sweep(seed: int = 0, pairs: int = 100, n_max: int = 4) -> Check:
    failures = 0
    checked = 0
    for F, l in homogenization_instances(seed, pairs, n_max):
        try:
            scheme = gamma_scheme(F, l)
            checked += len(scheme.generators)
        except ApolarityError:
            failures += 1
    return Check(f"homogenized annihilators kill F ({pairs} pairs, n<={n_max}, d<=4, Q)",
                 "0 failures", f"{failures} failures over {checked} homogenized elements",
                 failures == 0)


def check_reducible_cubic(n: int, t_max: int = 8) -> Check:
    F = reducible_cubic(n)
    target = math.comb(n + 1, 2)
    A = annihilator_piece(F, 2)
    quoted = GradedPiece.span(quoted_quadrics(n), 2, n + 1)
    A_con = annihilator_piece(F, 2, action="contraction")
    rescaled = GradedPiece.span(quoted_quadrics(n, scale=3), 2, n + 1)
    same_contraction = A_con.basis == quoted.basis
    same_differentiation = A.basis == rescaled.basis
    empty = empty_projective([A], t_max)
    length = gamma_scheme(F, _x(0, n + 1)).length
    ok = (A.dim == target and quoted.dim == target and same_contraction and same_differentiation
          and empty.certified and length == n + 2)
    return Check(
        f"reducible cubic n={n}",
        f"dim F^perp_2 = {target}, quoted basis, empty, length {n + 2}",
        f"dim {A.dim}, quoted span {'=' if same_contraction else '!='} F^perp_2 (contraction), "
        f"y0^2-3y_i^2 form {'=' if same_differentiation else '!='} F^perp_2 (differentiation), "
        f"empty {'at t=%d' % empty.degree if empty.certified else 'undetermined'}, length {length}",
        ok)


def check_construction(seed: int = 0, m: int = 6) -> Check:
    G, F = construction_form(m, seed)
    f, _ = dehomogenize(F, _x(0, F.nvars))
    dim = diff_space(f).dim
    length = gamma_scheme(F, _x(0, F.nvars)).length
    return Check(f"construction with m={m}", f"dim Diff(F_x0) = {2 * m + 2}",
                 f"dim Diff(F_x0) = {dim}, scheme length {length}, h(G) = {hilbert_function(G)}",
                 dim == 2 * m + 2 and length == 2 * m + 2)


def apolarity_instances(seed: int = 0, count: int = 50):
    rng = random.Random(seed)
    for _ in range(count):
        n = rng.randint(2, 4)
        r = rng.randint(1, 5)
        pts = []
        while len(pts) < r:
            p = random_linear_form(n, rng.randrange(2 ** 62), QQ, box=9)
            if all(_independent(p, q) for q in pts):
                pts.append(p)
        coeffs = [rng.randint(1, 9) for _ in range(r)]
        F = sum((c * p ** 3 for c, p in zip(coeffs[1:], pts[1:])), coeffs[0] * pts[0] ** 3)
        mono = rng.choice(exponents_of_degree(n + 1, 3))
        bump = Poly.monomial(mono, rng.randint(1, 9))
        yield F, pts, F + bump


def _independent(p: Poly, q: Poly) -> bool:
    a, b = p.linear_coefficients(), q.linear_coefficients()
    return any(a[i] * b[j] != a[j] * b[i] for i in range(len(a)) for j in range(i + 1, len(a)))


def check_apolarity_roundtrip(seed: int = 0, count: int = 50) -> Check:
    good = bad = 0
    for F, pts, G in apolarity_instances(seed, count):
        res = decompose_check(F, pts)
        good += res.success and all(res.containment)
        res2 = decompose_check(G, pts)
        bad += (not res2.success) and not all(res2.containment)
    return Check(f"apolarity lemma round trip ({count} instances)",
                 f"{count} decompositions recovered, {count} perturbations rejected",
                 f"{good} recovered, {bad} rejected", good == count and bad == count)


def check_remark2(n: int) -> Check:
    F = reducible_cubic(n)
    rep = remark2_check(F, _x(0, n + 1), 1)
    ok = rep.kills_power and rep.contained and rep.agreement_degree is not None
    return Check(f"saturation without dehomogenizing, n={n}",
                 "(a) all generators kill l^2; (b) finite agreement degree",
                 f"(a) {rep.kills_power}; (b) agreement at t={rep.agreement_degree}", ok)


def symmetry_instances(seed: int = 0, count: int = 200):
    rng = random.Random(seed)
    for i in range(count):
        field = QQ if i % 2 == 0 else GF()
        n = rng.randint(1, 5)
        d = rng.randint(1, 6)
        yield random_form(n, d, rng.randrange(2 ** 62), field)


def check_gorenstein_symmetry(seed: int = 0, count: int = 200) -> Check:
    bad = 0
    for F in symmetry_instances(seed, count):
        h = hilbert_function(F)
        bad += h != h[::-1]
    return Check(f"Gorenstein symmetry ({count} forms, n<=5, d<=6)", "0 asymmetric",
                 f"{bad} asymmetric", bad == 0)


def nondefective_triples(seed: int = 0, count: int = 10):
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        n, d = rng.randint(1, 4), rng.randint(3, 4)
        if (n, d) in AH_EXCEPTIONS:
            continue
        r = rng.randint(1, math.comb(n + d, d) // (n + 1) + 1)
        if (n, d, r) not in out:
            out.append((n, d, r))
    return out


def check_ah_oracle(seed: int = 0) -> Check:
    defects = {}
    for n, d, r in [(2, 4, 5), (3, 4, 9), (4, 4, 14), (4, 3, 7)]:
        defects[(n, d, r)] = expected_secant_dimension(n, d, r) - secant_dimension(n, d, r, seed)
    others = {t: expected_secant_dimension(*t) - secant_dimension(*t, seed)
              for t in nondefective_triples(seed)}
    ok = all(v == 1 for v in defects.values()) and all(v == 0 for v in others.values())
    return Check("secant defects of the exceptional cases", "defect 1 (x4), defect 0 (x10)",
                 f"{list(defects.values())}, {list(others.values())}", ok)


NOT_REPRODUCED = (
    "exact cactus rank of generic cubics for n >= 7 (only bracketed by ldiff and dim Diff(F_l)); "
    "smoothability of apolar schemes; smoothable and border ranks"
)


def all_checks(seed: int = 0, n_max: int = 4) -> list[tuple[str, Callable[[], Check]]]:
    checks = [
        ("1", check_crossover),
        ("2", lambda: check_diff_bound(seed)),
        ("3", lambda: check_homogenization_sweep(seed, n_max=n_max)),
    ]
    checks += [(f"4.{n}", (lambda n=n: check_reducible_cubic(n))) for n in range(2, 7)]
    checks += [
        ("5", lambda: check_construction(seed)),
        ("6", lambda: check_apolarity_roundtrip(seed)),
    ]
    checks += [(f"7.{n}", (lambda n=n: check_remark2(n))) for n in range(2, 5)]
    checks += [
        ("8", lambda: check_gorenstein_symmetry(seed)),
        ("9", lambda: check_ah_oracle(seed)),
    ]
    return checks


def verify_paper(seed: int = 0, n_max: int = 4, out: Callable[[str], None] | None = print) -> list[Check]:
    results = []
    for label, fn in all_checks(seed, n_max):
        t0 = time.perf_counter()
        res = fn()
        res.seconds = time.perf_counter() - t0
        results.append(res)
        if out:
            out(f"[{label}] {res.line()}")
    if out:
        out(f"[10] NOTE  not reproduced at desk scale: {NOT_REPRODUCED}")
        failed = sum(not r.passed for r in results)
        out(f"{len(results) - failed}/{len(results)} checks passed")
    return results
