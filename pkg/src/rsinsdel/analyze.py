"""Insdel-capability measurement for RS codes.

Capability is governed by the largest LCS between distinct codewords: a
length-n code corrects t insdel errors exactly when that maximum is at most
n - t - 1.  Two exact engines are provided (a guarded brute force for any
parameters, and a fast path for full-length 2-dimensional codes that
exploits the affine edit-distance isometries), plus the complete
classification of full-length 2-dimensional orderings that fail to correct
even one error, an optimality checker for length-2k dimension-k codes, a
census over equivalence classes of orderings, and seeded random sampling.

No exact report may ever show a code LCS below 2k-2 (any k-dimensional
linear code has two distinct codewords agreeing on a subsequence that long);
that floor is asserted unconditionally.

census_2dim and sample_orderings split their work into fixed-size chunks
mapped over an optional thread pool; the reduction is in chunk order, so
results are identical for any thread count.
"""

from __future__ import annotations

import itertools
import math
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import insdel, poly
from .errors import GuardExceeded, InvariantViolation
from .gf import Field
from .insdel import lcs_from_masks, match_masks
from .rscode import EvaluationVector, RsCode, canonical_form, equivalent

DEFAULT_MAX_CODEWORDS = 20_000
DEFAULT_MAX_CLASSES = 5_040
DEFAULT_MAX_OPS = 100_000_000
SAMPLE_MAX_Q = 128
CENSUS_CHUNK = 512


# -- reports ----------------------------------------------------------------


@dataclass(frozen=True)
class AnalysisReport:
    """Result of one capability measurement.

    lcs_of_code and max_correctable are exact for the brute-force and affine
    methods.  max_correctable = n - 1 - lcs_of_code; optimal means the code
    corrects n - 2k + 1 insdel errors, the most any linear code can.
    """

    n: int
    k: int
    q: int
    method: str
    lcs_of_code: int
    max_correctable: int
    optimal: bool
    witness: dict | None = None
    elapsed_s: float = 0.0

    def to_dict(self, include_timing: bool = False) -> dict:
        out = {
            "n": self.n,
            "k": self.k,
            "q": self.q,
            "method": self.method,
            "lcs_of_code": self.lcs_of_code,
            "max_correctable": self.max_correctable,
            "optimal": self.optimal,
            "witness": self.witness,
        }
        if include_timing:
            out["wall_time_s"] = self.elapsed_s
        return out


def _check_lcs_floor(lcs_value: int, n: int, k: int) -> None:
    # For n >= 2k-1, any k-dimensional linear code has two distinct codewords
    # sharing a common subsequence of length 2k-2, so an exact maximum below
    # that signals a broken engine, never a real code.  (Above rate 1/2 the
    # floor would exceed the trivial ceiling n-1 and does not apply.)
    floor = 2 * k - 2 if n >= 2 * k - 1 else 0
    if not floor <= lcs_value <= n - 1:
        raise InvariantViolation(
            f"exact code LCS {lcs_value} outside [{floor}, {n-1}] for n={n}, k={k}"
        )


def _report(code: RsCode, method: str, lcs_value: int, witness: dict | None, t0: float) -> AnalysisReport:
    _check_lcs_floor(lcs_value, code.n, code.k)
    max_corr = code.n - 1 - lcs_value
    return AnalysisReport(
        n=code.n,
        k=code.k,
        q=code.q,
        method=method,
        lcs_of_code=lcs_value,
        max_correctable=max_corr,
        optimal=max_corr >= code.n - 2 * code.k + 1,
        witness=witness,
        elapsed_s=time.perf_counter() - t0,
    )


def _normalized_polys(fld: Field, k: int):
    """The 2*q^(k-2) reduced message polynomials: zero constant term, leading
    coefficient 0 or 1, middle coefficients free.

    Every pair of distinct codewords can be shifted and scaled (edit
    distance is invariant under both) so that one of them uses a polynomial
    from this family, which is what lets the quadratic factor q^2 be dropped
    from the pair enumeration.
    """
    if k == 1:
        yield ()
        return
    for lead in (0, 1):
        for mids in itertools.product(range(fld.q), repeat=k - 2):
            yield poly.trim((0, *mids, lead))


def lcs_code_bruteforce(
    code: RsCode,
    max_codewords: int = DEFAULT_MAX_CODEWORDS,
    want_witness: bool = True,
) -> AnalysisReport:
    """Exact code LCS by scanning normalized-vs-all codeword pairs."""
    t0 = time.perf_counter()
    fld, k, n = code.field, code.k, code.n
    if fld.q**k > max_codewords:
        raise GuardExceeded(f"q^k = {fld.q**k} exceeds max_codewords={max_codewords}")
    points = code.ev.points
    best = -1
    best_pair = None
    for f in _normalized_polys(fld, k):
        cf = poly.eval_on(fld, f, points)
        masks = match_masks(cf)
        for g_raw in itertools.product(range(fld.q), repeat=k):
            g = poly.trim(g_raw)
            if g == f:
                continue
            cg = poly.eval_on(fld, g, points)
            val = lcs_from_masks(masks, n, cg)
            if val > best:
                best, best_pair = val, (f, cf, g, cg)
                if best == n - 1:
                    break
        if best == n - 1:
            break
    witness = _pair_witness(best_pair) if want_witness else None
    return _report(code, "brute_force", best, witness, t0)


def _pair_witness(pair) -> dict:
    f, cf, g, cg = pair
    _, i_seq, j_seq = insdel.lcs_with_witness(cf, cg)
    return {
        "f": list(f),
        "g": list(g),
        "I": list(i_seq),
        "J": list(j_seq),
    }


def lcs_code_affine(ev: EvaluationVector, want_witness: bool = True) -> AnalysisReport:
    """Exact code LCS for a full-length 2-dimensional code.

    Scaling and shifting both codewords leaves edit distance unchanged, so
    every pair of distinct non-constant codewords reduces to (alpha, A*alpha + B)
    with (A, B) != (1, 0), A != 0; pairs involving constants contribute at
    most 1.  The pair (A, B) and its inverse map give equal LCS, so only the
    lexicographically smaller of the two is evaluated.
    """
    t0 = time.perf_counter()
    if not ev.is_full_length():
        raise ValueError("affine fast path requires a full-length ordering")
    fld = ev.field
    q = fld.q
    code = RsCode(ev, 2)
    points = ev.points
    masks = match_masks(points)
    arr = np.array(points, dtype=np.int64)
    best = -1
    best_ab = None
    done = False
    for a in range(1, q):
        a_inv = fld.inv(a)
        scaled = fld.v_mul(arr, np.int64(a))
        for b in range(q):
            if a == 1 and b == 0:
                continue
            partner = (a_inv, fld.neg(fld.mul(a_inv, b)))
            if (a, b) > partner:
                continue
            seq = fld.v_add(scaled, np.int64(b)).tolist()
            val = lcs_from_masks(masks, q, seq)
            if val > best:
                best, best_ab = val, (a, b)
                if best == q - 1:
                    done = True
                    break
        if done:
            break
    witness = None
    if want_witness:
        a, b = best_ab
        other = tuple(fld.v_add(fld.v_mul(arr, np.int64(a)), np.int64(b)).tolist())
        _, i_seq, j_seq = insdel.lcs_with_witness(points, other)
        witness = {"f": [0, 1], "g": [b, a], "I": list(i_seq), "J": list(j_seq)}
    return _report(code, "affine", best, witness, t0)


def lcs_code_exact(code: RsCode, max_codewords: int = DEFAULT_MAX_CODEWORDS) -> AnalysisReport:
    """Dispatch to the cheapest exact engine for these parameters."""
    if code.k == 2 and code.ev.is_full_length():
        return lcs_code_affine(code.ev, want_witness=False)
    return lcs_code_bruteforce(code, max_codewords=max_codewords, want_witness=False)


def corrects(code: RsCode, t: int, max_codewords: int = DEFAULT_MAX_CODEWORDS) -> bool:
    """True iff the code corrects t insdel errors (exact LCS test)."""
    if t < 0:
        raise ValueError("t must be >= 0")
    report = lcs_code_exact(code, max_codewords=max_codewords)
    return report.lcs_of_code <= code.n - t - 1


# -- optimality of length-2k dimension-k codes -------------------------------


@dataclass(frozen=True)
class OptimalityResult:
    optimal: bool
    witness: dict | None = None

    def to_dict(self) -> dict:
        return {"optimal": self.optimal, "witness": self.witness}


def is_optimal_half_rate(ev: EvaluationVector, k: int, max_ops: int = DEFAULT_MAX_OPS) -> OptimalityResult:
    """Decide whether the length-2k code corrects one insdel error.

    The code fails exactly when some reduced f (see _normalized_polys) and
    some g of degree < k with g != f agree along a pair of increasing index
    sequences I != J of length 2k-1.  For each candidate (f, I, J) the unique
    g of degree < k through the first k constraints is interpolated and the
    remaining k-1 constraints are verified.  I = J is skipped: agreement on
    2k-1 >= k distinct points would force f = g.  The first witness in
    (f, I, J) scan order is returned, so the outcome is deterministic.
    """
    fld = ev.field
    n = ev.n
    if n != 2 * k:
        raise ValueError("optimality checker requires n = 2k")
    est_ops = 2 * fld.q ** max(0, k - 2) * (2 * k) * (2 * k - 1) * k * k
    if est_ops > max_ops:
        raise GuardExceeded(f"estimated work {est_ops} exceeds max_ops={max_ops}")
    points = ev.points
    seqs = list(insdel.enumerate_increasing(n, n - 1))
    for f in _normalized_polys(fld, k):
        f_vals = poly.eval_on(fld, f, points)
        for i_seq in seqs:
            head_vals = [f_vals[i - 1] for i in i_seq[:k]]
            tail_vals = [f_vals[i - 1] for i in i_seq[k:]]
            for j_seq in seqs:
                if i_seq == j_seq:
                    continue
                pts = [(points[j - 1], y) for j, y in zip(j_seq[:k], head_vals)]
                g = poly.interpolate(fld, pts, k)
                if g == f:
                    continue
                ok = True
                for j, y in zip(j_seq[k:], tail_vals):
                    if poly.eval_poly(fld, g, points[j - 1]) != y:
                        ok = False
                        break
                if ok:
                    witness = {
                        "f": list(f),
                        "g": list(g),
                        "I": list(i_seq),
                        "J": list(j_seq),
                    }
                    return OptimalityResult(False, witness)
    return OptimalityResult(True, None)


def optimal_4_2_pair(fld: Field, a1: int, a2: int) -> bool:
    """Closed-form test: does (0, 1, a1, a2) give a length-4 dimension-2 code
    correcting one insdel error?

    Requires a1 not in {0, 1} and a2 not in {0, 1, a1}.  The forbidden values
    are a1^2, a1^2 - a1 + 1, and (when a1 != 2) -1/(a1 - 2); integer literals
    are taken in the field, so characteristic 2 and 3 are handled correctly.
    """
    fld.check(a1)
    fld.check(a2)
    one = 1
    two = fld.int_embed(2)
    if a1 in (0, one):
        raise ValueError("a1 must avoid 0 and 1")
    if a2 in (0, one, a1):
        raise ValueError("a2 must avoid 0, 1, and a1")
    sq = fld.mul(a1, a1)
    if a2 == sq:
        return False
    if a2 == fld.add(fld.sub(sq, a1), one):
        return False
    if a1 != two and a2 == fld.neg(fld.inv(fld.sub(a1, two))):
        return False
    return True


# -- bad-ordering classification and census ---------------------------------

REASON_GEOMETRIC = "geometric"
REASON_REVERSED = "reversed_geometric"
REASON_ARITHMETIC = "arithmetic_progression"
REASON_NOT_BAD = "not_bad"


@dataclass(frozen=True)
class BadOrderingVerdict:
    bad: bool
    reason: str
    witness: dict | None = None

    def to_dict(self) -> dict:
        return {"bad": self.bad, "reason": self.reason, "witness": self.witness}


def _geometric_vector(fld: Field, theta: int) -> tuple[int, ...]:
    out = [0, 1]
    cur = 1
    for _ in range(fld.q - 2):
        cur = fld.mul(cur, theta)
        out.append(cur)
    return tuple(out)


def bad_ordering_family(fld: Field) -> list[tuple[str, int | None, tuple[int, ...]]]:
    """The explicit full-length orderings whose 2-dimensional code fails to
    correct a single insdel: (0,1,theta,..,theta^(q-2)) and its reverse for
    every primitive theta, plus (0,1,..,q-1) when q is prime."""
    fam: list[tuple[str, int | None, tuple[int, ...]]] = []
    for theta in fld.primitive_elements():
        geo = _geometric_vector(fld, theta)
        fam.append((REASON_GEOMETRIC, theta, geo))
        fam.append((REASON_REVERSED, theta, tuple(reversed(geo))))
    if fld.m == 1:
        fam.append((REASON_ARITHMETIC, None, tuple(range(fld.q))))
    return fam


def classify_bad_ordering(ev: EvaluationVector) -> BadOrderingVerdict:
    """Match a full-length ordering against the complete bad family.

    A full-length 2-dimensional code fails to correct a single insdel error
    exactly when its ordering is affinely equivalent to a member of
    bad_ordering_family.  The witness maps the family member onto ev:
    lam * member + mu = ev.
    """
    if not ev.is_full_length():
        raise ValueError("classification requires a full-length ordering")
    fld = ev.field
    for reason, theta, vec in bad_ordering_family(fld):
        w = equivalent(EvaluationVector(fld, vec), ev)
        if w is not None:
            witness = {"lam": w[0], "mu": w[1], "theta": theta}
            return BadOrderingVerdict(True, reason, witness)
    return BadOrderingVerdict(False, REASON_NOT_BAD, None)


@dataclass(frozen=True)
class CensusResult:
    q: int
    classes_total: int
    classes_correcting_one: int
    proportion: float
    bad_classes: tuple[dict, ...]
    reason_counts: dict
    verified: int

    def to_dict(self) -> dict:
        return {
            "q": self.q,
            "classes_total": self.classes_total,
            "classes_correcting_one": self.classes_correcting_one,
            "proportion": self.proportion,
            "bad_classes": list(self.bad_classes),
            "reason_counts": dict(sorted(self.reason_counts.items())),
            "verified": self.verified,
        }


def _census_chunk(fld: Field, perms: list, verify_idx: set[int], base: int):
    bad_entries = []
    mismatches = []
    for off, perm in enumerate(perms):
        ev = EvaluationVector(fld, (0, 1) + perm)
        verdict = classify_bad_ordering(ev)
        if verdict.bad:
            bad_entries.append(
                {
                    "alpha": ev.serialize(),
                    "reason": verdict.reason,
                    "witness": verdict.witness,
                }
            )
        if base + off in verify_idx:
            exact = lcs_code_affine(ev, want_witness=False)
            if verdict.bad != (exact.lcs_of_code == fld.q - 1):
                mismatches.append(ev.serialize())
    return bad_entries, mismatches


def census_2dim(
    fld: Field,
    max_classes: int = DEFAULT_MAX_CLASSES,
    verify: str = "auto",
    spot_checks: int = 200,
    threads: int = 1,
    time_guard_s: float | None = None,
) -> CensusResult:
    """Classify every equivalence class of full-length orderings (k = 2).

    Each class has a unique representative starting (0, 1); all (q-2)! of
    them are enumerated and classified.  verify: "all" re-measures every
    class with the exact affine engine, "spot" re-measures an evenly spaced
    sample, "none" skips, "auto" picks "all" for q <= 8 and "spot" above.
    Any disagreement between the classifier and the exact engine is an
    invariant violation.
    """
    q = fld.q
    total = math.factorial(q - 2)
    if total > max_classes:
        raise GuardExceeded(f"(q-2)! = {total} exceeds max_classes={max_classes}")
    if verify == "auto":
        verify = "all" if q <= 8 else "spot"
    remaining = [x for x in range(q) if x not in (0, 1)]
    perms = list(itertools.permutations(remaining))
    if verify == "all":
        verify_idx = set(range(total))
    elif verify == "spot":
        stride = max(1, total // max(1, spot_checks))
        verify_idx = set(range(0, total, stride))
    elif verify == "none":
        verify_idx = set()
    else:
        raise ValueError(f"unknown verify mode {verify!r}")

    t0 = time.perf_counter()
    chunks = [(i, perms[i : i + CENSUS_CHUNK]) for i in range(0, total, CENSUS_CHUNK)]

    def run(chunk):
        base, block = chunk
        return _census_chunk(fld, block, verify_idx, base)

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(run, chunks))
    else:
        results = []
        for chunk in chunks:
            results.append(run(chunk))
            if time_guard_s is not None and time.perf_counter() - t0 > time_guard_s:
                raise GuardExceeded(f"census exceeded time guard of {time_guard_s}s")

    bad_entries: list[dict] = []
    mismatches: list[str] = []
    for entries, bad_pairs in results:
        bad_entries.extend(entries)
        mismatches.extend(bad_pairs)
    if mismatches:
        raise InvariantViolation(
            f"classifier disagrees with exact LCS on {len(mismatches)} orderings, "
            f"first: {mismatches[0]}"
        )
    reason_counts: dict[str, int] = {}
    for entry in bad_entries:
        reason_counts[entry["reason"]] = reason_counts.get(entry["reason"], 0) + 1
    good = total - len(bad_entries)
    return CensusResult(
        q=q,
        classes_total=total,
        classes_correcting_one=good,
        proportion=good / total,
        bad_classes=tuple(bad_entries),
        reason_counts=reason_counts,
        verified=len(verify_idx),
    )


# -- seeded random sampling of orderings -------------------------------------

_MASK64 = (1 << 64) - 1


class SplitMix64:
    """splitmix64 sequence; fixed algorithm so runs reproduce everywhere."""

    def __init__(self, seed: int):
        self.state = seed & _MASK64

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def below(self, n: int) -> int:
        """Uniform draw in [0, n) by rejection sampling."""
        limit = (1 << 64) - ((1 << 64) % n)
        while True:
            v = self.next_u64()
            if v < limit:
                return v % n


def random_ordering(q: int, rng: SplitMix64) -> tuple[int, ...]:
    """Fisher-Yates shuffle of the canonical element order 0..q-1."""
    items = list(range(q))
    for i in range(q - 1, 0, -1):
        j = rng.below(i + 1)
        items[i], items[j] = items[j], items[i]
    return tuple(items)


def _trial_rng(seed: int, index: int) -> SplitMix64:
    # Per-trial stream derived only from (seed, index): the trial outcome is
    # independent of scheduling, so any thread count gives identical output.
    return SplitMix64((seed ^ ((index + 1) * 0x9E3779B97F4A7C15)) & _MASK64)


@dataclass(frozen=True)
class SampleResult:
    q: int
    delta: str
    trials: int
    seed: int
    threshold: int
    lcs_values: tuple[int, ...]
    fraction_correcting: float
    fraction_correcting_one: float

    def to_dict(self) -> dict:
        return {
            "q": self.q,
            "delta": self.delta,
            "trials": self.trials,
            "seed": self.seed,
            "lcs_threshold": self.threshold,
            "lcs_values": list(self.lcs_values),
            "fraction_correcting": self.fraction_correcting,
            "fraction_correcting_one": self.fraction_correcting_one,
        }


def sample_orderings(
    fld: Field,
    delta,
    trials: int,
    seed: int,
    threads: int = 1,
) -> SampleResult:
    """Measure code LCS over seeded random full-length orderings (k = 2).

    A trial counts as correcting (1-delta)*q insdel errors when its code LCS
    is at most floor(delta*q) - 1 (delta*q is floored when fractional).
    fraction_correcting_one reports how many trials correct at least one
    error, i.e. have LCS below q - 1.
    """
    q = fld.q
    if q > SAMPLE_MAX_Q:
        raise GuardExceeded(f"sampling is budgeted for q <= {SAMPLE_MAX_Q}")
    if trials < 0:
        raise ValueError("trials must be >= 0")
    frac = Fraction(str(delta))
    if not 0 < frac <= 1:
        raise ValueError("delta must satisfy 0 < delta <= 1")
    threshold = math.floor(frac * q) - 1

    def run(idx: int) -> int:
        ordering = random_ordering(q, _trial_rng(seed, idx))
        report = lcs_code_affine(EvaluationVector(fld, ordering), want_witness=False)
        return report.lcs_of_code

    if trials and threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            values = list(pool.map(run, range(trials)))
    else:
        values = [run(i) for i in range(trials)]

    n_correct = sum(1 for v in values if v <= threshold)
    n_one = sum(1 for v in values if v < q - 1)
    return SampleResult(
        q=q,
        delta=str(frac),
        trials=trials,
        seed=seed,
        threshold=threshold,
        lcs_values=tuple(values),
        fraction_correcting=n_correct / trials if trials else 0.0,
        fraction_correcting_one=n_one / trials if trials else 0.0,
    )
