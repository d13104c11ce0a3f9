"""Closed-form evaluators for the counting bounds on bad orderings.

Everything that fits in integers is computed exactly with big-integer
arithmetic; the normalized tail comparison runs in 250-bit precision via
mpmath.  Pure functions throughout.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import mpmath

from . import analyze
from .gf import Field, euler_phi, is_prime
from .rscode import EvaluationVector, canonical_form

MP_PRECISION_BITS = 250


@dataclass(frozen=True)
class BoundReport:
    name: str
    parameters: dict
    values: dict
    verdict: bool | None = None

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "parameters": dict(sorted(self.parameters.items())),
            "values": dict(sorted(self.values.items())),
            "verdict": self.verdict,
        }


def half_singleton(n: int, k: int) -> int:
    """Maximum number of insdel errors any [n, k] linear code can correct."""
    if not 1 <= k < n:
        raise ValueError("need 1 <= k < n")
    return n - 2 * k + 1


def good_class_lower_bound(q: int) -> int:
    """Lower bound on the number of ordering classes (out of (q-2)!) whose
    2-dimensional full-length code corrects one insdel error.

    Subtracts one class per explicit bad ordering: two per primitive element
    plus, for prime q, the arithmetic progression.  Clamped at zero; the
    subtraction ignores coincidences between the explicit classes, so this
    can undershoot the true count (at q = 4 it does).
    """
    if q < 4:
        raise ValueError("meaningful only for q >= 4")
    total = math.factorial(q - 2)
    bound = total - 2 * euler_phi(q - 1) - (1 if is_prime(q) else 0)
    return max(0, bound)


@dataclass(frozen=True)
class BadClassTally:
    """Deduplicated census of the explicit bad-ordering family."""

    count: int
    classes: tuple[dict, ...]
    multiplicative_count: int  # classes hit by a geometric/reversed vector

    def to_dict(self) -> dict:
        return {
            "count": self.count,
            "classes": list(self.classes),
            "multiplicative_count": self.multiplicative_count,
        }


def bad_class_count(fld: Field) -> BadClassTally:
    """Materialize every explicit bad ordering, deduplicate by affine
    equivalence (equal canonical forms), and count the distinct classes.

    Each class entry records every family member that landed on it, so
    coincidences between the explicit vectors are visible.
    """
    by_form: dict[tuple[int, ...], list] = {}
    for reason, theta, vec in analyze.bad_ordering_family(fld):
        form = canonical_form(EvaluationVector(fld, vec)).points
        by_form.setdefault(form, []).append((reason, theta))
    classes = []
    mult = 0
    for form in sorted(by_form):
        reasons = by_form[form]
        if any(r in (analyze.REASON_GEOMETRIC, analyze.REASON_REVERSED) for r, _ in reasons):
            mult += 1
        classes.append(
            {
                "alpha": EvaluationVector(fld, form).serialize(),
                "members": [{"reason": r, "theta": t} for r, t in reasons],
            }
        )
    return BadClassTally(len(by_form), tuple(classes), mult)


def bad_ordering_count_bound(q: int, ell: int) -> int:
    """Exact value of the combinatorial upper bound on the number of
    orderings of GF(q) whose 2-dimensional code fails to correct q - ell
    insdel errors:

        sum_{s=ell+1}^{min(2*ell, q)} C(q,s) * C(s,ell)^2 * (q-s)! * (q-1) * q
                                       * prod_{i=0}^{s-ell-1} (q-i)

    The empty range (ell = q) gives 0.
    """
    if not 1 <= ell <= q:
        raise ValueError("need 1 <= ell <= q")
    total = 0
    for s in range(ell + 1, min(2 * ell, q) + 1):
        term = (
            math.comb(q, s)
            * math.comb(s, ell) ** 2
            * math.factorial(q - s)
            * (q - 1)
            * q
            * math.perm(q, s - ell)
        )
        total += term
    return total


def normalized_bad_fraction_bound(q: int, delta) -> BoundReport:
    """Compare the exact bad-ordering fraction with its closed-form bound.

    Computes, in 250-bit arithmetic, both the exact sum from
    bad_ordering_count_bound normalized by q! and the closed form
    q^2 * (4e^2 / (delta^2 q))^(delta*q), using ell = floor(delta*q).
    The verdict asserts exact <= closed form.  When floor(delta*q) < 1 the
    pair is out of regime and no verdict is given.
    """
    frac = Fraction(str(delta))
    if not 0 < frac < 1:
        raise ValueError("delta must satisfy 0 < delta < 1")
    ell = math.floor(frac * q)
    if ell < 1:
        return BoundReport(
            name="normalized_bad_fraction_bound",
            parameters={"q": q, "delta": str(frac)},
            values={"status": "out_of_regime", "ell": ell},
            verdict=None,
        )
    exact_sum = bad_ordering_count_bound(q, ell)
    with mpmath.workprec(MP_PRECISION_BITS):
        d_eff = mpmath.mpf(ell) / q
        normalized = mpmath.mpf(exact_sum) / mpmath.factorial(q)
        closed = q**2 * (4 * mpmath.e**2 / (d_eff**2 * q)) ** ell
        verdict = bool(normalized <= closed)
        values = {
            "ell": ell,
            "delta_effective": str(Fraction(ell, q)),
            "log10_normalized_sum": mpmath.nstr(mpmath.log10(normalized), 20)
            if exact_sum
            else None,
            "log10_closed_form": mpmath.nstr(mpmath.log10(closed), 20),
            "precision_bits": MP_PRECISION_BITS,
        }
    return BoundReport(
        name="normalized_bad_fraction_bound",
        parameters={"q": q, "delta": str(frac)},
        values=values,
        verdict=verdict,
    )
