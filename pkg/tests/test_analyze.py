"""Tests for the capability engines, classifier, census, and sampling."""

import itertools
import random

import pytest

from rsinsdel import analyze
from rsinsdel.errors import GuardExceeded, InvariantViolation
from rsinsdel.gf import field_new
from rsinsdel.rscode import EvaluationVector, RsCode

F7 = field_new(7)


def canonical_orderings(fld):
    rest = [x for x in range(fld.q) if x not in (0, 1)]
    for perm in itertools.permutations(rest):
        yield EvaluationVector(fld, (0, 1) + perm)


# -- exact engines -----------------------------------------------------------


def test_bruteforce_known_codes():
    r = analyze.lcs_code_bruteforce(RsCode(EvaluationVector(F7, (0, 1, 2, 5)), 2))
    assert (r.lcs_of_code, r.max_correctable, r.optimal) == (2, 1, True)
    r = analyze.lcs_code_bruteforce(RsCode(EvaluationVector(F7, tuple(range(7))), 2))
    assert (r.lcs_of_code, r.max_correctable) == (6, 0)
    r = analyze.lcs_code_bruteforce(RsCode(EvaluationVector(F7, (0, 1, 2)), 1))
    assert (r.lcs_of_code, r.max_correctable, r.optimal) == (0, 2, True)


def test_bruteforce_witness_checks_out():
    r = analyze.lcs_code_bruteforce(RsCode(EvaluationVector(F7, (0, 1, 2, 5)), 2))
    w = r.witness
    assert len(w["I"]) == len(w["J"]) == r.lcs_of_code


def test_bruteforce_guard():
    with pytest.raises(GuardExceeded):
        analyze.lcs_code_bruteforce(RsCode(EvaluationVector(field_new(251), (0, 1, 2, 5)), 3))


def test_bruteforce_normalization_matches_unreduced_scan():
    # the normalized-f reduction must agree with the raw all-pairs maximum
    rng = random.Random(79)
    for fld in (field_new(5), field_new(2, 3)):
        for _ in range(6):
            n = rng.randrange(3, min(6, fld.q) + 1)
            k = rng.randrange(2, min(3, n - 1) + 1)
            pts = tuple(rng.sample(range(fld.q), n))
            code = RsCode(EvaluationVector(fld, pts), k)
            report = analyze.lcs_code_bruteforce(code)
            from rsinsdel.insdel import lcs
            from rsinsdel.rscode import codewords

            words = [w for _, w in codewords(code)]
            raw = max(
                lcs(a, b) for a, b in itertools.combinations(words, 2)
            )
            assert report.lcs_of_code == raw


def test_affine_known_codes():
    assert analyze.lcs_code_affine(EvaluationVector(F7, tuple(range(7)))).lcs_of_code == 6
    assert analyze.lcs_code_affine(EvaluationVector(F7, (0, 1, 3, 2, 6, 4, 5))).lcs_of_code == 6
    good = analyze.lcs_code_affine(EvaluationVector(F7, (0, 1, 2, 5, 3, 6, 4)))
    assert good.lcs_of_code <= 5


def test_affine_requires_full_length():
    with pytest.raises(ValueError):
        analyze.lcs_code_affine(EvaluationVector(F7, (0, 1, 2, 5)))


def test_affine_agrees_with_bruteforce_exhaustively_small_q():
    for fld in (field_new(2, 2), field_new(5), F7):
        for ev in canonical_orderings(fld):
            fast = analyze.lcs_code_affine(ev, want_witness=False)
            slow = analyze.lcs_code_bruteforce(RsCode(ev, 2), want_witness=False)
            assert fast.lcs_of_code == slow.lcs_of_code, ev


def test_affine_agrees_with_bruteforce_q8_exhaustive_q9_sampled():
    f8 = field_new(2, 3)
    for ev in canonical_orderings(f8):
        fast = analyze.lcs_code_affine(ev, want_witness=False)
        slow = analyze.lcs_code_bruteforce(RsCode(ev, 2), want_witness=False)
        assert fast.lcs_of_code == slow.lcs_of_code, ev
    f9 = field_new(3, 2)
    rng = random.Random(83)
    rest = [x for x in range(9) if x not in (0, 1)]
    for _ in range(200):
        perm = tuple(rng.sample(rest, len(rest)))
        ev = EvaluationVector(f9, (0, 1) + perm)
        fast = analyze.lcs_code_affine(ev, want_witness=False)
        slow = analyze.lcs_code_bruteforce(RsCode(ev, 2), want_witness=False)
        assert fast.lcs_of_code == slow.lcs_of_code, ev


def test_corrects():
    code = RsCode(EvaluationVector(F7, (0, 1, 2, 5)), 2)
    assert analyze.corrects(code, 0)
    assert analyze.corrects(code, 1)
    assert not analyze.corrects(code, 2)


def test_half_singleton_floor_is_enforced():
    with pytest.raises(InvariantViolation):
        analyze._check_lcs_floor(1, 4, 2)
    with pytest.raises(InvariantViolation):
        analyze._check_lcs_floor(4, 4, 2)
    analyze._check_lcs_floor(2, 4, 2)


# -- optimality checker ------------------------------------------------------


def test_is_optimal_examples():
    assert analyze.is_optimal_half_rate(EvaluationVector(F7, (0, 1, 2, 5)), 2).optimal
    res = analyze.is_optimal_half_rate(EvaluationVector(F7, (0, 1, 2, 4)), 2)
    assert not res.optimal and res.witness is not None
    for tup in itertools.permutations(range(5), 4):
        assert not analyze.is_optimal_half_rate(EvaluationVector(field_new(5), tup), 2).optimal


def test_is_optimal_witness_is_a_real_collision():
    from rsinsdel import poly

    res = analyze.is_optimal_half_rate(EvaluationVector(F7, (0, 1, 2, 4)), 2)
    w = res.witness
    pts = (0, 1, 2, 4)
    f_vals = [poly.eval_poly(F7, tuple(w["f"]), pts[i - 1]) for i in w["I"]]
    g_vals = [poly.eval_poly(F7, tuple(w["g"]), pts[j - 1]) for j in w["J"]]
    assert f_vals == g_vals
    assert tuple(w["f"]) != tuple(w["g"])


def test_is_optimal_agrees_with_bruteforce_k2():
    for q in (7, 8, 9, 11, 13):
        fld = field_new(*__import__("rsinsdel.gf", fromlist=["prime_power"]).prime_power(q))
        for a1 in range(2, fld.q):
            if a1 in (0, 1):
                continue
            for a2 in range(fld.q):
                if a2 in (0, 1, a1):
                    continue
                ev = EvaluationVector(fld, (0, 1, a1, a2))
                enum = analyze.is_optimal_half_rate(ev, 2).optimal
                brute = analyze.lcs_code_bruteforce(RsCode(ev, 2), want_witness=False)
                assert enum == brute.optimal, ev


def test_is_optimal_agrees_with_bruteforce_k3_random():
    rng = random.Random(89)
    for q in (11, 13):
        fld = field_new(q)
        for _ in range(8):
            pts = tuple(rng.sample(range(q), 6))
            ev = EvaluationVector(fld, pts)
            enum = analyze.is_optimal_half_rate(ev, 3).optimal
            brute = analyze.lcs_code_bruteforce(RsCode(ev, 3), want_witness=False)
            assert enum == brute.optimal, ev


def test_is_optimal_guard():
    with pytest.raises(GuardExceeded):
        analyze.is_optimal_half_rate(
            EvaluationVector(field_new(1367), tuple(range(8))), 4, max_ops=1000
        )


def test_optimal_4_2_pair_examples():
    assert analyze.optimal_4_2_pair(F7, 2, 5)
    assert not analyze.optimal_4_2_pair(F7, 2, 4)
    assert not analyze.optimal_4_2_pair(F7, 3, 6)
    with pytest.raises(ValueError):
        analyze.optimal_4_2_pair(F7, 1, 5)
    with pytest.raises(ValueError):
        analyze.optimal_4_2_pair(F7, 2, 2)


# -- classifier and census ---------------------------------------------------


def test_classify_examples():
    v = analyze.classify_bad_ordering(EvaluationVector(F7, tuple(range(7))))
    assert v.bad and v.reason == analyze.REASON_ARITHMETIC
    v = analyze.classify_bad_ordering(EvaluationVector(F7, (0, 1, 3, 2, 6, 4, 5)))
    assert v.bad and v.reason == analyze.REASON_GEOMETRIC and v.witness["theta"] == 3
    v = analyze.classify_bad_ordering(EvaluationVector(F7, (0, 1, 2, 5, 3, 6, 4)))
    assert not v.bad and v.reason == analyze.REASON_NOT_BAD


def test_classify_requires_full_length():
    with pytest.raises(ValueError):
        analyze.classify_bad_ordering(EvaluationVector(F7, (0, 1, 2, 5)))


def test_classifier_matches_exact_engine_everywhere_small_q():
    # the executable both-directions check of the complete characterization
    for fld in (field_new(2, 2), field_new(5), F7, field_new(2, 3)):
        for ev in canonical_orderings(fld):
            bad = analyze.classify_bad_ordering(ev).bad
            exact = analyze.lcs_code_affine(ev, want_witness=False)
            assert bad == (exact.lcs_of_code == fld.q - 1), ev


def test_census_small_fields():
    c = analyze.census_2dim(field_new(2, 2))
    assert (c.classes_total, c.classes_correcting_one) == (2, 0)
    c = analyze.census_2dim(field_new(5))
    assert (c.classes_total, c.classes_correcting_one) == (6, 1)
    assert c.reason_counts == {
        analyze.REASON_ARITHMETIC: 1,
        analyze.REASON_GEOMETRIC: 2,
        analyze.REASON_REVERSED: 2,
    }
    c = analyze.census_2dim(F7)
    assert (c.classes_total, c.classes_correcting_one) == (120, 115)


def test_census_q5_q7_against_raw_all_pairs_scan():
    # third route: no normalization, no equivalence, no classifier - just the
    # maximum LCS over every one of the q^2-choose-2 codeword pairs
    from rsinsdel.insdel import lcs
    from rsinsdel.rscode import codewords

    for q, expected_good in [(5, 1), (7, 115)]:
        fld = field_new(q)
        good = 0
        for ev in canonical_orderings(fld):
            words = [w for _, w in codewords(RsCode(ev, 2))]
            best = 0
            for a, b in itertools.combinations(words, 2):
                val = lcs(a, b)
                if val > best:
                    best = val
                    if best == q - 1:
                        break
            if best == q - 1:
                continue
            good += 1
        assert good == expected_good, q
        census = analyze.census_2dim(fld)
        assert census.classes_correcting_one == good


def test_census_guard():
    with pytest.raises(GuardExceeded):
        analyze.census_2dim(field_new(11))


def test_census_thread_invariance():
    a = analyze.census_2dim(field_new(5), threads=1)
    b = analyze.census_2dim(field_new(5), threads=4)
    assert a.to_dict() == b.to_dict()


# -- sampling ----------------------------------------------------------------


def test_splitmix_determinism_and_permutation_validity():
    rng = analyze.SplitMix64(42)
    first = [rng.next_u64() for _ in range(4)]
    rng2 = analyze.SplitMix64(42)
    assert [rng2.next_u64() for _ in range(4)] == first
    ordering = analyze.random_ordering(16, analyze.SplitMix64(7))
    assert sorted(ordering) == list(range(16))
    assert analyze.random_ordering(16, analyze.SplitMix64(7)) == ordering


def test_sample_trivial_cases():
    f16 = field_new(2, 4)
    empty = analyze.sample_orderings(f16, "0.5", 0, seed=1)
    assert empty.lcs_values == () and empty.fraction_correcting == 0.0
    vac = analyze.sample_orderings(f16, "1", 5, seed=1)
    assert vac.fraction_correcting == 1.0  # threshold q-1 always holds


def test_sample_reproducible_across_threads():
    f16 = field_new(2, 4)
    a = analyze.sample_orderings(f16, "0.5", 12, seed=9, threads=1)
    b = analyze.sample_orderings(f16, "0.5", 12, seed=9, threads=4)
    assert a.to_dict() == b.to_dict()


def test_sample_guard():
    with pytest.raises(GuardExceeded):
        analyze.sample_orderings(field_new(251), "0.5", 1, seed=0)
