"""Acceptance criteria, one test each, all checked exactly.

Run ``pytest tests/test_acceptance.py -v``; the terminal summary lists a
PASS/FAIL line per criterion.
"""
import random
import time
from fractions import Fraction

import pytest

from oracles import from_roots, interlaces_by_roots
from veronese_lab.identities import (
    FAIL,
    HYPOTHESIS_NOT_MET,
    PASS,
    coefficient_inequality_violation,
    verify_carlitz,
    verify_chow_mansour,
    verify_colored_interlacing,
    verify_cor_coeff_ineq,
    verify_cor_deg_le_r,
    verify_cor_log_concave,
    verify_cor_real_rooted,
    verify_euler_identity,
    verify_lc_key,
    verify_main_theorem,
    verify_refined_carlitz,
    verify_thm_c,
    verify_thm_lc,
    verify_unit_blocks,
)
from veronese_lab.permstat import colored_refined, colored_refined_q, eulerian_poly, eulerian_q
from veronese_lab.polycore import Poly, QPoly
from veronese_lab.realroot import count_real_roots, interlaces
from veronese_lab.veronese import veronese, veronese_oracle


class Timer:
    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.elapsed = time.perf_counter() - self.start


def report(name, ok, note=""):
    print(f"{'PASS' if ok else 'FAIL'}  {name}  {note}")
    assert ok, f"{name}: {note}"


@pytest.mark.criterion("oracle equivalence: 200 random h, n <= 4, r <= 4, k < r, < 10 s")
def test_oracle_equivalence():
    rng = random.Random(2001)
    corpus = [Poly(rng.randint(0, 9) for _ in range(rng.randint(1, 7))) for _ in range(200)]
    mismatches = checks = 0
    with Timer() as t:
        for h in corpus:
            for n in range(5):
                for r in range(1, 5):
                    for k in range(r):
                        checks += 1
                        if veronese(h, n, r, k).numerator != veronese_oracle(h, n, r, k):
                            mismatches += 1
    report("oracle equivalence", mismatches == 0 and t.elapsed < 10,
           f"{checks} checks, {mismatches} mismatches, {t.elapsed:.2f}s")


@pytest.mark.criterion("unit blocks interlace for 1 <= n, r <= 5, < 5 s")
def test_unit_blocks():
    with Timer() as t:
        verdicts = [verify_unit_blocks(n, r).verdict for n in range(1, 6) for r in range(1, 6)]
    report("unit blocks", verdicts == [PASS] * 25 and t.elapsed < 5, f"{t.elapsed:.2f}s")


@pytest.mark.criterion("main theorem on 100 products of (x+a), n <= 3, r <= 4, < 30 s")
def test_main_theorem_products():
    rng = random.Random(1004)
    corpus = [from_roots([-rng.randint(1, 5) for _ in range(rng.randint(1, 6))]) for _ in range(100)]
    with Timer() as t:
        verdicts = [verify_main_theorem(h, n, r).verdict for h in corpus for n in range(1, 4) for r in range(1, 5)]
    bad = sum(v != PASS for v in verdicts)
    report("main theorem", bad == 0 and t.elapsed < 30, f"{len(verdicts)} instances, {bad} not pass, {t.elapsed:.2f}s")


def _inequality_corpus(rng, r):
    # h_i / h_{r+i} nondecreasing in i: every pair i < j satisfies the inequality
    high = [rng.randint(1, 6) for _ in range(r)]
    ratios = sorted((Fraction(rng.randint(1, 12), rng.randint(1, 4)) for _ in range(r)))
    h = Poly([a * b for a, b in zip(ratios, high)] + high)
    assert coefficient_inequality_violation(h, r) is None
    return h


def _log_concave_corpus(rng, r):
    # products of log-concave positive factors, some without real roots
    h = Poly([1])
    while h.degree < rng.randint(1, 2 * r - 1):
        factor = rng.choice([Poly([rng.randint(1, 4), rng.randint(1, 4)]), Poly([1, 1, 1]), Poly([2, 3, 2])])
        if h.degree + factor.degree < 2 * r:
            h = h * factor
        elif h.degree == 2 * r - 2:
            break
    return h


@pytest.mark.criterion("corollaries: 50 instances each hold, violators are hypothesis_not_met")
def test_corollaries():
    rng = random.Random(3034)
    counts = {}
    checks = {
        "degree <= r": (verify_cor_deg_le_r, lambda r: Poly(rng.randint(0, 9) for _ in range(rng.randint(1, r + 1)))),
        "inequalities": (verify_cor_coeff_ineq, lambda r: _inequality_corpus(rng, r)),
        "log-concave": (verify_cor_log_concave, lambda r: _log_concave_corpus(rng, r)),
        "negative roots": (verify_cor_real_rooted, lambda r: from_roots([-rng.randint(1, 9) for _ in range(rng.randint(1, 7))])),
    }
    for name, (verify, make) in checks.items():
        verdicts = []
        for _ in range(60):
            r = rng.randint(1, 4)
            verdicts.append(verify(make(r), rng.randint(1, 3), r).verdict)
        counts[name] = verdicts.count(PASS)
        assert set(verdicts) == {PASS}, (name, verdicts)

    violators = [
        (verify_cor_deg_le_r, Poly([1, 0, 0, 1]), 2),
        (verify_cor_deg_le_r, Poly([1, -1]), 2),
        (verify_cor_coeff_ineq, Poly([1, 0, 0, 1]), 2),
        (verify_cor_coeff_ineq, Poly([1, 1, 1, 1, 1]), 2),
        (verify_cor_coeff_ineq, Poly([1, 0, 0, 0, 0, 1]), 3),
        (verify_cor_log_concave, Poly([1, 1, 2]), 2),
        (verify_cor_log_concave, Poly([1, 0, 1]), 2),
        (verify_cor_log_concave, Poly([1, 2, 1, 1, 1, 1, 1]), 3),
        (verify_cor_real_rooted, Poly([1, 1, 1]), 2),
        (verify_cor_real_rooted, Poly([0, 1, 1]), 2),
        (verify_cor_real_rooted, Poly([-1, 0, 1]), 2),
    ]
    for _ in range(40):
        r = rng.randint(2, 4)
        h = Poly([1] + [0] * (2 * r - 2) + [rng.randint(1, 9)])
        violators.append((rng.choice([verify_cor_coeff_ineq, verify_cor_log_concave, verify_cor_deg_le_r]), h, r))
    misclassified = [(v.__name__, h) for v, h, r in violators if v(h, 2, r).verdict != HYPOTHESIS_NOT_MET]
    report("corollaries", all(c >= 50 for c in counts.values()) and not misclassified,
           f"{counts}, {len(violators)} violators, misclassified {misclassified}")


@pytest.mark.criterion("colored interlacing and real-rootedness for n <= 4, r <= 3, < 60 s")
def test_colored_interlacing():
    with Timer() as t:
        verdicts = [verify_colored_interlacing(n, r).verdict for n in range(1, 5) for r in range(1, 4)]
    report("colored interlacing", verdicts == [PASS] * 12 and t.elapsed < 60, f"{t.elapsed:.2f}s")


@pytest.mark.criterion("colored decomposition identities for n <= 4, r <= 3, l <= n, with divisibility")
def test_colored_decomposition():
    verdicts = []
    for n in range(1, 5):
        for r in range(1, 4):
            for c in range(1, r):
                assert colored_refined(n, r, None, c)[0] == 0
            verdicts.append(verify_thm_c(n, r).verdict)
            verdicts.extend(verify_thm_lc(n, r, ell).verdict for ell in range(1, n + 1))
    # a nonzero constant term must be caught before any division
    parts = [colored_refined(3, 3, None, c) for c in range(3)]
    parts[2] = parts[2] + 1
    guard = verify_thm_c(3, 3, parts=parts)
    report("colored decomposition", set(verdicts) == {PASS} and guard.verdict == FAIL,
           f"{len(verdicts)} identities, guard: {guard.detail}")


@pytest.mark.criterion("series identities in x and q at the stated truncation orders")
def test_series_identities():
    verdicts = [verify_euler_identity(n, 12).verdict for n in range(1, 7)]
    verdicts += [verify_carlitz(n, 8).verdict for n in range(1, 5)]
    verdicts += [verify_chow_mansour(n, r, 6).verdict for n in range(1, 4) for r in range(1, 4)]
    for n in range(1, 4):
        for r in range(1, 4):
            for ell in range(1, n + 1):
                for c in range(r):
                    verdicts.append(verify_refined_carlitz(n, r, ell, c, 6).verdict)
                    verdicts.append(verify_lc_key(n, r, ell, c, 6).verdict)
    report("series identities", set(verdicts) == {PASS}, f"{len(verdicts)} identities")


def _mutate_poly(p, rng):
    return p + Poly.monomial(rng.randrange(max(len(p), 1)), rng.choice([-1, 1]))


def _mutate_qpoly(p, rng):
    key = rng.choice(sorted(p.terms))
    return p + QPoly({key: rng.choice([-1, 1])})


@pytest.mark.criterion("soundness: 20+ mutated identities flip to fail")
def test_soundness_probes():
    rng = random.Random(777)
    probes = []
    for n in range(1, 5):
        probes.append(verify_euler_identity(n, 12, _mutate_poly(eulerian_poly(n), rng)))
        probes.append(verify_carlitz(n, 8, _mutate_qpoly(eulerian_q(n), rng)))
    for n in range(1, 4):
        for r in range(2, 4):
            probes.append(verify_chow_mansour(n, r, 6, _mutate_qpoly(colored_refined_q(n, r), rng)))
            ell, c = rng.randint(1, n), rng.randrange(r)
            probes.append(verify_refined_carlitz(n, r, ell, c, 6, _mutate_qpoly(colored_refined_q(n, r, ell, c), rng)))
            probes.append(verify_lc_key(n, r, ell, c, 6, _mutate_poly(colored_refined(n, r, ell, c), rng)))
            parts = [colored_refined(n, r, None, c) for c in range(r)]
            parts[0] = _mutate_poly(parts[0], rng)
            probes.append(verify_thm_c(n, r, parts=parts))
    flipped = sum(p.verdict == FAIL for p in probes)
    report("soundness probes", flipped == len(probes) >= 20, f"{flipped}/{len(probes)} flipped")


@pytest.mark.criterion("real roots: Sturm counts on 100 root multisets, interlacing vs oracle on 100 pairs")
def test_realroot_suite():
    rng = random.Random(99)
    count_errors = 0
    for _ in range(100):
        distinct = rng.sample(range(-10, 11), rng.randint(1, 5))
        roots = [a for a in distinct for _ in range(rng.randint(1, 3))]
        p = from_roots(roots, lead=rng.choice([1, 2, -3]))
        lo, hi = sorted(rng.sample(range(-12, 13), 2))
        if count_real_roots(p) != len(distinct):
            count_errors += 1
        if count_real_roots(p, lo, hi) != sum(lo < a <= hi for a in distinct):
            count_errors += 1
    pair_errors = holds = 0
    for _ in range(150):
        m = rng.randint(1, 4)
        g_roots = sorted(Fraction(rng.randint(-20, 20), rng.randint(1, 4)) for _ in range(m))
        if rng.random() < 0.5:
            # nudge each root of g into the gap above it to favour interlacing pairs
            f_roots = [a - Fraction(rng.randint(0, 3), 5) for a in g_roots] + [Fraction(rng.randint(10, 20))] * rng.randint(0, 1)
        else:
            f_roots = [Fraction(rng.randint(-20, 20), rng.randint(1, 4)) for _ in range(m + rng.randint(0, 1))]
        expected = interlaces_by_roots(g_roots, f_roots)
        holds += expected
        if interlaces(from_roots(g_roots), from_roots(f_roots)).holds != expected:
            pair_errors += 1
    report("real roots", count_errors == pair_errors == 0 and 0 < holds < 150,
           f"count errors {count_errors}, pair errors {pair_errors}, {holds}/150 pairs interlace")
