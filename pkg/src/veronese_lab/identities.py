"""Instance checks of the interlacing theorem, its criteria and the q-identities.

Each ``verify_*`` returns a :class:`VerificationReport`.  ``pass`` means
exact equality or a Sturm-certified interlacing, ``fail`` means the
conclusion was refuted (a bug: these are theorems), and
``hypothesis_not_met`` means the instance lies outside the claim.
"""
from __future__ import annotations

import json
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable, Iterator

from .permstat import (
    colored_refined,
    colored_refined_q,
    eulerian_poly,
    eulerian_q,
    eulerian_refined,
)
from .polycore import (
    Poly,
    QPoly,
    Series,
    geometric_kernel,
    q_bracket,
    q_pochhammer_reciprocal,
    qseries_from_qpoly,
    series_of_rational,
)
from .realroot import (
    has_only_negative_roots,
    is_interlacing_sequence,
    is_real_rooted,
)
from .veronese import sections, veronese_all, veronese_oracle, veronese

PASS = "pass"
FAIL = "fail"
HYPOTHESIS_NOT_MET = "hypothesis_not_met"


@dataclass(frozen=True)
class VerificationReport:
    claim: str
    params: dict[str, Any]
    verdict: str
    detail: str = ""

    @property
    def passed(self) -> bool:
        return self.verdict == PASS

    def to_json(self) -> dict[str, Any]:
        return {
            "claim": self.claim,
            "params": {k: _jsonable(v) for k, v in sorted(self.params.items())},
            "verdict": self.verdict,
            "detail": self.detail,
        }


def _jsonable(v):
    if isinstance(v, Poly):
        return [str(c) for c in v.coeffs]
    if isinstance(v, Fraction):
        return str(v)
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    return v


def dumps(reports: list[VerificationReport]) -> str:
    return json.dumps([r.to_json() for r in reports], indent=2, sort_keys=True)


def _report(claim, params, ok: bool, detail: str = "") -> VerificationReport:
    return VerificationReport(claim, params, PASS if ok else FAIL, "" if ok else detail)


def _not_met(claim, params, detail) -> VerificationReport:
    return VerificationReport(claim, params, HYPOTHESIS_NOT_MET, detail)


def _poly_mismatch(lhs: Poly, rhs: Poly) -> str:
    top = max(len(lhs), len(rhs))
    for i in range(top):
        if lhs[i] != rhs[i]:
            return f"coefficient of x^{i}: {lhs[i]} != {rhs[i]}"
    return ""


def _series_mismatch(lhs: Series, rhs: Series) -> str:
    diff = lhs.first_difference(rhs)
    if diff is None:
        return ""
    i, a, b = diff
    if isinstance(a, Poly) and isinstance(b, Poly):
        j = next(j for j in range(max(len(a), len(b))) if a[j] != b[j])
        return f"coefficient of x^{i} q^{j}: {a[j]} != {b[j]}"
    return f"coefficient of x^{i}: {a} != {b}"


# -- interlacing theorem and its criteria ---------------------------------


def u_sequence(h: Poly, n: int, r: int) -> list[Poly]:
    """(U^n_{r,r-1} h, ..., U^n_{r,0} h)."""
    return list(reversed(veronese_all(h, n, r)))


def section_sequence(h: Poly, r: int) -> list[Poly]:
    """(h^<r,r-1>, ..., h^<r,0>)."""
    return list(reversed(sections(h, r).parts))


def _negative_coefficient(h: Poly) -> int | None:
    return next((i for i, c in enumerate(h.coeffs) if c < 0), None)


def _conclusion(claim, params, h, n, r) -> VerificationReport:
    v = is_interlacing_sequence(u_sequence(h, n, r))
    return _report(claim, params, v.holds, v.witness)


def verify_main_theorem(h: Poly, n: int, r: int) -> VerificationReport:
    claim = "main-theorem"
    params = {"h": h, "n": n, "r": r}
    i = _negative_coefficient(h)
    if i is not None:
        return _not_met(claim, params, f"negative coefficient h_{i}")
    hyp = is_interlacing_sequence(section_sequence(h, r))
    if not hyp:
        return _not_met(claim, params, f"sections not interlacing: {hyp.witness}")
    return _conclusion(claim, params, h, n, r)


def verify_unit_blocks(n: int, r: int) -> VerificationReport:
    """(U^n_{r,r-1} 1, ..., U^n_{r,0} 1) is interlacing."""
    return _conclusion("unit-blocks", {"n": n, "r": r}, Poly([1]), n, r)


def verify_cor_deg_le_r(h: Poly, n: int, r: int) -> VerificationReport:
    claim = "cor-degree-at-most-r"
    params = {"h": h, "n": n, "r": r}
    if h and h.degree > r:
        return _not_met(claim, params, f"deg h = {h.degree} > r = {r}")
    i = _negative_coefficient(h)
    if i is not None:
        return _not_met(claim, params, f"negative coefficient h_{i}")
    return _conclusion(claim, params, h, n, r)


def coefficient_inequality_violation(h: Poly, r: int) -> tuple[int, int] | None:
    """First (i, j), 0 <= i < j <= r-1, with h_i h_{r+j} > h_j h_{r+i}."""
    for i in range(r):
        for j in range(i + 1, r):
            if h[i] * h[r + j] > h[j] * h[r + i]:
                return i, j
    return None


def verify_cor_coeff_ineq(h: Poly, n: int, r: int) -> VerificationReport:
    claim = "cor-coefficient-inequalities"
    params = {"h": h, "n": n, "r": r}
    if h and h.degree >= 2 * r:
        return _not_met(claim, params, f"deg h = {h.degree} >= 2r = {2 * r}")
    i = _negative_coefficient(h)
    if i is not None:
        return _not_met(claim, params, f"negative coefficient h_{i}")
    bad = coefficient_inequality_violation(h, r)
    if bad is not None:
        i, j = bad
        return _not_met(
            claim, params, f"h_{i}*h_{r + j} = {h[i] * h[r + j]} > h_{j}*h_{r + i} = {h[j] * h[r + i]}"
        )
    return _conclusion(claim, params, h, n, r)


def log_concavity_violation(coeffs) -> str | None:
    a = list(coeffs)
    support = [i for i, c in enumerate(a) if c != 0]
    for k in range(support[0], support[-1] + 1) if support else ():
        if a[k] == 0:
            return f"internal zero at i={k}"
    for i in range(1, len(a) - 1):
        if a[i] * a[i] < a[i - 1] * a[i + 1]:
            return f"not log-concave at i={i}: {a[i]}^2 < {a[i - 1]}*{a[i + 1]}"
    return None


def verify_cor_log_concave(h: Poly, n: int, r: int) -> VerificationReport:
    claim = "cor-log-concave"
    params = {"h": h, "n": n, "r": r}
    if h and h.degree >= 2 * r:
        return _not_met(claim, params, f"deg h = {h.degree} >= 2r = {2 * r}")
    i = _negative_coefficient(h)
    if i is not None:
        return _not_met(claim, params, f"negative coefficient h_{i}")
    why = log_concavity_violation(h.coeffs)
    if why:
        return _not_met(claim, params, why)
    return _conclusion(claim, params, h, n, r)


def verify_cor_real_rooted(h: Poly, n: int, r: int) -> VerificationReport:
    claim = "cor-negative-real-roots"
    params = {"h": h, "n": n, "r": r}
    i = _negative_coefficient(h)
    if i is not None:
        return _not_met(claim, params, f"negative coefficient h_{i}")
    if not has_only_negative_roots(h):
        return _not_met(claim, params, "h does not have only negative real zeros")
    secs = is_interlacing_sequence(section_sequence(h, r))
    if not secs:
        return _report(claim, params, False, f"sections of h not interlacing: {secs.witness}")
    return _conclusion(claim, params, h, n, r)


def verify_external_real_rootedness(h: Poly, n: int, r: int, k: int) -> VerificationReport:
    """Instance check: deg h <= r + k, h >= 0 => U^n_{r,k} h real-rooted.

    Not derived here, only sampled.  Counterexamples turn up as soon as
    deg h > r, e.g. h = 8 + x + 7x^2 + 9x^3, n = 2, r = 2, k = 1 gives
    17 + 24x + 9x^2, so this suite is kept out of ``all``.
    """
    claim = "external-real-rootedness"
    params = {"h": h, "n": n, "r": r, "k": k}
    if h and h.degree > r + k:
        return _not_met(claim, params, f"deg h = {h.degree} > r + k = {r + k}")
    i = _negative_coefficient(h)
    if i is not None:
        return _not_met(claim, params, f"negative coefficient h_{i}")
    u = veronese(h, n, r, k).numerator
    return _report(claim, params, is_real_rooted(u), f"U^n_(r,k) h = {u} is not real-rooted")


# -- colored Eulerian polynomials -----------------------------------------


def verify_colored_interlacing(n: int, r: int) -> VerificationReport:
    """G^{-,c} and G^{ell,c} interlacing over c; G and G^{ell,-} real-rooted."""
    claim = "colored-interlacing"
    params = {"n": n, "r": r}
    seq = [colored_refined(n, r, None, c) for c in range(r)]
    v = is_interlacing_sequence(seq)
    if not v:
        return _report(claim, params, False, f"(G^(-,c))_c: {v.witness}")
    if not is_real_rooted(colored_refined(n, r)):
        return _report(claim, params, False, "G_(n,r) not real-rooted")
    for ell in range(1, n + 1):
        seq = [colored_refined(n, r, ell, c) for c in range(r)]
        v = is_interlacing_sequence(seq)
        if not v:
            return _report(claim, params, False, f"(G^({ell},c))_c: {v.witness}")
        if not is_real_rooted(colored_refined(n, r, ell, None)):
            return _report(claim, params, False, f"G^({ell},-) not real-rooted")
    return _report(claim, params, True)


def _colored_decomposition(claim, params, lhs: Poly, parts: list[Poly], r: int) -> VerificationReport:
    """lhs = parts[0](x^r) + sum_{c>=1} x^(r-c) * parts[c](x^r) / x^r."""
    for c in range(1, r):
        if parts[c][0] != 0:
            return _report(claim, params, False, f"constant term of color-{c} polynomial is {parts[c][0]}, not 0")
    secs = sections(lhs, r)
    if secs[0] != parts[0]:
        return _report(claim, params, False, f"section 0: {_poly_mismatch(secs[0], parts[0])}")
    for k in range(1, r):
        expected = parts[r - k].exact_div(Poly.x())
        if secs[k] != expected:
            return _report(claim, params, False, f"section {k}: {_poly_mismatch(secs[k], expected)}")
    return _report(claim, params, True)


def verify_thm_c(n: int, r: int, parts: list[Poly] | None = None) -> VerificationReport:
    """(1+...+x^(r-1))^n A_n(x) = G^{-,0}(x^r) + sum_c x^(r-c) G^{-,c}(x^r) / x^r."""
    lhs = geometric_kernel(r, n) * eulerian_poly(n)
    if parts is None:
        parts = [colored_refined(n, r, None, c) for c in range(r)]
    return _colored_decomposition("colored-decomposition", {"n": n, "r": r}, lhs, parts, r)


def verify_thm_lc(n: int, r: int, ell: int, parts: list[Poly] | None = None) -> VerificationReport:
    lhs = geometric_kernel(r, n) * eulerian_refined(n, ell)
    if parts is None:
        parts = [colored_refined(n, r, ell, c) for c in range(r)]
    return _colored_decomposition(
        "refined-colored-decomposition", {"n": n, "r": r, "ell": ell}, lhs, parts, r
    )


# -- power-series identities ----------------------------------------------


def verify_euler_identity(n: int, M: int, numerator: Poly | None = None) -> VerificationReport:
    """sum (i+1)^n x^i = A_n(x) / (1-x)^(n+1)."""
    num = eulerian_poly(n) if numerator is None else numerator
    lhs = Series([Fraction((i + 1) ** n) for i in range(M + 1)], M)
    rhs = series_of_rational(num, n + 1, M)
    return _report("euler", {"n": n, "M": M}, lhs == rhs, _series_mismatch(lhs, rhs))


def carlitz_lhs(n: int, r: int, M: int) -> Series:
    """sum_i [ri+1]_q^n x^i."""
    return Series([q_bracket(r * i + 1) ** n for i in range(M + 1)], M)


def verify_carlitz(n: int, M: int, numerator: QPoly | None = None) -> VerificationReport:
    """sum [i+1]_q^n x^i = (sum x^des q^maj) / (x;q)_{n+1}."""
    num = eulerian_q(n) if numerator is None else numerator
    lhs = carlitz_lhs(n, 1, M)
    rhs = qseries_from_qpoly(num, M) * q_pochhammer_reciprocal(0, 1, n + 1, M)
    return _report("carlitz", {"n": n, "M": M}, lhs == rhs, _series_mismatch(lhs, rhs))


def verify_chow_mansour(n: int, r: int, M: int, numerator: QPoly | None = None) -> VerificationReport:
    """sum [ri+1]_q^n x^i = (sum x^des q^fmaj over Z_r wr S_n) / (x;q^r)_{n+1}."""
    num = colored_refined_q(n, r) if numerator is None else numerator
    lhs = carlitz_lhs(n, r, M)
    rhs = qseries_from_qpoly(num, M) * q_pochhammer_reciprocal(0, r, n + 1, M)
    return _report("chow-mansour", {"n": n, "r": r, "M": M}, lhs == rhs, _series_mismatch(lhs, rhs))


def refined_carlitz_rhs(n: int, r: int, ell: int, c: int, M: int) -> Series:
    """delta_{ell,1} delta_{c,0} + sum_{i>=1} [ri-c]^(ell-1) [ri-c+1]^(n-ell) q^(ri-c) x^i."""
    coeffs = [Poly([1]) if (ell == 1 and c == 0) else Poly()]
    for i in range(1, M + 1):
        e = r * i - c
        coeffs.append(q_bracket(e) ** (ell - 1) * q_bracket(e + 1) ** (n - ell) * Poly.monomial(e))
    return Series(coeffs, M)


def verify_refined_carlitz(
    n: int, r: int, ell: int, c: int, M: int, numerator: QPoly | None = None
) -> VerificationReport:
    """G^{ell,c}(x,q) / (xq^r; q^r)_n against the bracket-power series."""
    num = colored_refined_q(n, r, ell, c) if numerator is None else numerator
    lhs = qseries_from_qpoly(num, M) * q_pochhammer_reciprocal(r, r, n, M)
    rhs = refined_carlitz_rhs(n, r, ell, c, M)
    params = {"n": n, "r": r, "ell": ell, "c": c, "M": M}
    return _report("refined-carlitz", params, lhs == rhs, _series_mismatch(lhs, rhs))


def verify_lc_key(n: int, r: int, ell: int, c: int, M: int, numerator: Poly | None = None) -> VerificationReport:
    """G^{ell,c}(x) / (1-x)^n = delta + sum_{i>=1} (ri-c)^(ell-1) (ri-c+1)^(n-ell) x^i."""
    num = colored_refined(n, r, ell, c) if numerator is None else numerator
    lhs = series_of_rational(num, n, M)
    coeffs = [Fraction(1 if (ell == 1 and c == 0) else 0)]
    coeffs += [Fraction((r * i - c) ** (ell - 1) * (r * i - c + 1) ** (n - ell)) for i in range(1, M + 1)]
    rhs = Series(coeffs, M)
    params = {"n": n, "r": r, "ell": ell, "c": c, "M": M}
    if lhs != rhs:
        return _report("refined-carlitz-at-q-1", params, False, _series_mismatch(lhs, rhs))
    q_side = refined_carlitz_rhs(n, r, ell, c, M).at_q_equal_1()
    return _report("refined-carlitz-at-q-1", params, q_side == rhs, "q = 1 specialization disagrees")


# -- operator oracle ------------------------------------------------------


def verify_operator(h: Poly, n: int, r: int, k: int) -> VerificationReport:
    params = {"h": h, "n": n, "r": r, "k": k}
    direct = veronese(h, n, r, k).numerator
    oracle = veronese_oracle(h, n, r, k)
    return _report("operator-oracle", params, direct == oracle, _poly_mismatch(direct, oracle))


# -- suites ---------------------------------------------------------------


@dataclass
class Grid:
    """Parameter ranges for the suites."""

    nmax: int = 4
    rmax: int = 3
    plain_nmax: int = 6
    M: int | None = None
    n: int | None = None
    r: int | None = None
    seed: int = 0
    samples: int = 50

    def ns(self, default_max: int) -> range:
        return range(self.n, self.n + 1) if self.n else range(1, default_max + 1)

    def rs(self, default_max: int) -> range:
        return range(self.r, self.r + 1) if self.r else range(1, default_max + 1)


def random_poly(rng: random.Random, max_degree: int, lo: int = 0, hi: int = 9) -> Poly:
    return Poly(rng.randint(lo, hi) for _ in range(rng.randint(0, max_degree) + 1))


def random_negative_rooted(rng: random.Random, max_factors: int, amax: int = 5) -> Poly:
    """Product of 1 to max_factors linear factors (x + a), a in 1..amax."""
    h = Poly([1])
    for _ in range(rng.randint(1, max_factors)):
        h = h * Poly([rng.randint(1, amax), 1])
    return h


def suite_operator(g: Grid) -> Iterator[VerificationReport]:
    rng = random.Random(g.seed)
    for _ in range(g.samples):
        h = random_poly(rng, 6)
        for n in range(0, 5):
            for r in range(1, 5):
                for k in range(r):
                    yield verify_operator(h, n, r, k)


def suite_unit_blocks(g: Grid) -> Iterator[VerificationReport]:
    for n in g.ns(5):
        for r in g.rs(5):
            yield verify_unit_blocks(n, r)


def suite_main_theorem(g: Grid) -> Iterator[VerificationReport]:
    rng = random.Random(g.seed)
    for _ in range(g.samples):
        h = random_negative_rooted(rng, 4)
        for n in g.ns(3):
            for r in g.rs(4):
                yield verify_main_theorem(h, n, r)


def suite_degree_le_r(g: Grid) -> Iterator[VerificationReport]:
    rng = random.Random(g.seed)
    for _ in range(g.samples):
        r = rng.randint(1, 4)
        h = random_poly(rng, r)
        if h.is_zero():
            h = Poly([1])
        yield verify_cor_deg_le_r(h, rng.randint(1, 3), r)


def _random_inequality_poly(rng: random.Random, r: int) -> Poly:
    # h_j / h_{r+j} nondecreasing in j makes every pair satisfy the inequality
    ratios = sorted(Fraction(rng.randint(1, 12), rng.randint(1, 4)) for _ in range(r))
    high = [rng.randint(1, 6) for _ in range(r)]
    low = [ratio * b for ratio, b in zip(ratios, high)]
    return Poly(low + high)


def suite_coeff_ineq(g: Grid) -> Iterator[VerificationReport]:
    rng = random.Random(g.seed)
    for _ in range(g.samples):
        r = rng.randint(1, 4)
        yield verify_cor_coeff_ineq(_random_inequality_poly(rng, r), rng.randint(1, 3), r)


def _random_log_concave(rng: random.Random, length: int) -> Poly:
    # a product of positive linear factors is log-concave with no internal zeros
    h = Poly([1])
    for _ in range(length - 1):
        h = h * Poly([rng.randint(1, 5), rng.randint(1, 5)])
    return h


def suite_log_concave(g: Grid) -> Iterator[VerificationReport]:
    rng = random.Random(g.seed)
    for _ in range(g.samples):
        r = rng.randint(1, 4)
        h = _random_log_concave(rng, rng.randint(1, 2 * r))
        yield verify_cor_log_concave(h, rng.randint(1, 3), r)


def suite_real_rooted(g: Grid) -> Iterator[VerificationReport]:
    rng = random.Random(g.seed)
    for _ in range(g.samples):
        yield verify_cor_real_rooted(random_negative_rooted(rng, 5), rng.randint(1, 3), rng.randint(1, 4))


def suite_colored_interlacing(g: Grid) -> Iterator[VerificationReport]:
    for n in g.ns(g.nmax):
        for r in g.rs(g.rmax):
            yield verify_colored_interlacing(n, r)


def suite_thm_c(g: Grid) -> Iterator[VerificationReport]:
    for n in g.ns(g.nmax):
        for r in g.rs(g.rmax):
            yield verify_thm_c(n, r)


def suite_thm_lc(g: Grid) -> Iterator[VerificationReport]:
    for n in g.ns(g.nmax):
        for r in g.rs(g.rmax):
            for ell in range(1, n + 1):
                yield verify_thm_lc(n, r, ell)


def suite_euler(g: Grid) -> Iterator[VerificationReport]:
    for n in g.ns(g.plain_nmax):
        yield verify_euler_identity(n, g.M or 12)


def suite_carlitz(g: Grid) -> Iterator[VerificationReport]:
    for n in g.ns(4):
        yield verify_carlitz(n, g.M or 8)


def suite_chow_mansour(g: Grid) -> Iterator[VerificationReport]:
    for n in g.ns(3):
        for r in g.rs(3):
            yield verify_chow_mansour(n, r, g.M or 6)


def suite_refined_carlitz(g: Grid) -> Iterator[VerificationReport]:
    for n in g.ns(3):
        for r in g.rs(3):
            for ell in range(1, n + 1):
                for c in range(r):
                    yield verify_refined_carlitz(n, r, ell, c, g.M or 6)


def suite_lc_key(g: Grid) -> Iterator[VerificationReport]:
    for n in g.ns(3):
        for r in g.rs(3):
            for ell in range(1, n + 1):
                for c in range(r):
                    yield verify_lc_key(n, r, ell, c, g.M or 6)


def suite_external(g: Grid) -> Iterator[VerificationReport]:
    rng = random.Random(g.seed)
    for _ in range(g.samples):
        r = rng.randint(1, 4)
        k = rng.randint(0, r - 1)
        h = random_poly(rng, r + k)
        yield verify_external_real_rootedness(h, rng.randint(1, 3), r, k)


SUITES: dict[str, Callable[[Grid], Iterator[VerificationReport]]] = {
    "operator": suite_operator,
    "unit-blocks": suite_unit_blocks,
    "main-theorem": suite_main_theorem,
    "degree-le-r": suite_degree_le_r,
    "coeff-ineq": suite_coeff_ineq,
    "log-concave": suite_log_concave,
    "real-rooted": suite_real_rooted,
    "colored-interlacing": suite_colored_interlacing,
    "thm-c": suite_thm_c,
    "thm-lc": suite_thm_lc,
    "euler": suite_euler,
    "carlitz": suite_carlitz,
    "chow-mansour": suite_chow_mansour,
    "refined-carlitz": suite_refined_carlitz,
    "lc-key": suite_lc_key,
}

# instance-checked only; not run by "all"
OPTIONAL_SUITES = {"external-real-rootedness": suite_external}


def run_suite(name: str, grid: Grid | None = None) -> list[VerificationReport]:
    grid = grid or Grid()
    if name == "all":
        return [rep for suite in SUITES.values() for rep in suite(grid)]
    table = {**SUITES, **OPTIONAL_SUITES}
    if name not in table:
        raise KeyError(name)
    return list(table[name](grid))


def summary_table(reports: list[VerificationReport]) -> str:
    rows: dict[str, list[int]] = {}
    for rep in reports:
        counts = rows.setdefault(rep.claim, [0, 0, 0])
        counts[(PASS, FAIL, HYPOTHESIS_NOT_MET).index(rep.verdict)] += 1
    width = max((len(k) for k in rows), default=5)
    lines = [f"{'claim':<{width}}  {'pass':>6} {'fail':>6} {'n/a':>6}"]
    for claim, (p, f, h) in rows.items():
        lines.append(f"{claim:<{width}}  {p:>6} {f:>6} {h:>6}")
    return "\n".join(lines)
