"""Longest common subsequences, edit distance, increasing index sequences,
and rank certificates for insdel-correction capability.

Sequences are tuples/lists of field element indices (any hashable symbols
work for the LCS routines).  Index sequences are 1-based strictly increasing
tuples.  Everything is pure and thread-safe.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from . import poly
from .rscode import RsCode


def match_masks(s) -> dict:
    """Per-symbol position bitmasks of s, for reuse across many lcs calls."""
    masks: dict = {}
    bit = 1
    for c in s:
        masks[c] = masks.get(c, 0) | bit
        bit <<= 1
    return masks


def lcs_from_masks(masks: dict, m: int, t) -> int:
    """LCS length of a masked length-m sequence against t (bit-parallel)."""
    if m == 0:
        return 0
    full = (1 << m) - 1
    v = full
    get = masks.get
    for c in t:
        u = v & get(c, 0)
        v = ((v + u) | (v - u)) & full
    return m - v.bit_count()


def lcs(s, t) -> int:
    """Length of a longest common subsequence.

    Bit-parallel row updates, one word per row since lengths here stay small;
    agrees with the classic dynamic program (see lcs_with_witness).
    """
    if len(s) > len(t):
        s, t = t, s
    if not s:
        return 0
    return lcs_from_masks(match_masks(s), len(s), t)


def lcs_with_witness(s, t) -> tuple[int, tuple[int, ...], tuple[int, ...]]:
    """LCS length plus 1-based witness index sequences (I into s, J into t).

    Classic O(|s|*|t|) dynamic program with deterministic backtracking.
    """
    m, n = len(s), len(t)
    table = [[0] * (n + 1) for _ in range(m + 1)]
    for i in range(1, m + 1):
        row, prev = table[i], table[i - 1]
        si = s[i - 1]
        for j in range(1, n + 1):
            if si == t[j - 1]:
                row[j] = prev[j - 1] + 1
            else:
                row[j] = prev[j] if prev[j] >= row[j - 1] else row[j - 1]
    i_idx: list[int] = []
    j_idx: list[int] = []
    i, j = m, n
    while i > 0 and j > 0:
        if s[i - 1] == t[j - 1] and table[i][j] == table[i - 1][j - 1] + 1:
            i_idx.append(i)
            j_idx.append(j)
            i -= 1
            j -= 1
        elif table[i - 1][j] >= table[i][j - 1]:
            i -= 1
        else:
            j -= 1
    i_idx.reverse()
    j_idx.reverse()
    return table[m][n], tuple(i_idx), tuple(j_idx)


def edit_distance(s, t) -> int:
    """Minimum number of insertions plus deletions transforming s into t."""
    return len(s) + len(t) - 2 * lcs(s, t)


# -- increasing index sequences -------------------------------------------


def hamming_increasing(i_seq, j_seq) -> int:
    """Number of positions where two equal-length index sequences differ."""
    if len(i_seq) != len(j_seq):
        raise ValueError("index sequences must have equal length")
    return sum(1 for a, b in zip(i_seq, j_seq) if a != b)


def missing_index(seq, n: int) -> int:
    """The unique element of [1, n] absent from a length n-1 sequence."""
    if len(seq) != n - 1:
        raise ValueError("sequence must omit exactly one index")
    return n * (n + 1) // 2 - sum(seq)


def enumerate_increasing(n: int, ell: int):
    """All strictly increasing sequences in [1, n]^ell, lexicographically."""
    if not 0 <= ell <= n:
        raise ValueError("need 0 <= ell <= n")
    return itertools.combinations(range(1, n + 1), ell)


# -- the ell x (2k-1) coefficient matrix and its rank certificate -----------


def build_V(fld, points, k: int, i_seq, j_seq) -> list[list[int]]:
    """Row t is (1, a_{I_t}, .., a_{I_t}^{k-1}, a_{J_t}, .., a_{J_t}^{k-1})
    where a = points; shape len(I) x (2k-1)."""
    if len(i_seq) != len(j_seq):
        raise ValueError("index sequences must have equal length")
    n = len(points)
    rows = []
    for it, jt in zip(i_seq, j_seq):
        if not (1 <= it <= n and 1 <= jt <= n):
            raise ValueError("index out of range")
        ai, aj = points[it - 1], points[jt - 1]
        row = [1]
        power = 1
        for _ in range(k - 1):
            power = fld.mul(power, ai)
            row.append(power)
        power = 1
        for _ in range(k - 1):
            power = fld.mul(power, aj)
            row.append(power)
        rows.append(row)
    return rows


@dataclass(frozen=True)
class CertificateResult:
    """Outcome of the full-rank sweep.

    certified=True proves the code corrects t insdel errors.  certified=False
    only reports the first rank-deficient index pair; it is NOT a proof of
    failure (rank deficiency is necessary for failure, not sufficient).
    """

    certified: bool
    t: int
    witness: tuple[tuple[int, ...], tuple[int, ...]] | None
    pairs_checked: int


def rank_certificate(code: RsCode, t: int) -> CertificateResult:
    """Check rank(V) = 2k-1 for every index pair that could witness failure.

    Sweeps all pairs (I, J) of increasing sequences of length ell = n - t
    whose Hamming distance is at least ell - k + 1 (pairs below the threshold
    cannot witness failure and are skipped).  Full rank everywhere certifies
    that the code corrects t insdel errors.  Enumeration is lexicographic, so
    the reported witness is deterministic.
    """
    fld, n, k = code.field, code.n, code.k
    ell = n - t
    if not 2 * k - 1 <= ell <= n:
        raise ValueError(f"need 2k-1 <= n-t <= n, got ell={ell}, k={k}, n={n}")
    threshold = ell - k + 1
    target = 2 * k - 1
    combos = list(enumerate_increasing(n, ell))
    checked = 0
    for i_seq in combos:
        for j_seq in combos:
            if hamming_increasing(i_seq, j_seq) < threshold:
                continue
            checked += 1
            v = build_V(fld, code.ev.points, k, i_seq, j_seq)
            if poly.rank(fld, v) < target:
                return CertificateResult(False, t, (i_seq, j_seq), checked)
    return CertificateResult(True, t, None, checked)
