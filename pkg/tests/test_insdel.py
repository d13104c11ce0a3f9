"""Tests for LCS, edit distance, index sequences, and rank certificates."""

import random

import pytest

from rsinsdel import insdel, poly
from rsinsdel.gf import field_new
from rsinsdel.rscode import EvaluationVector, RsCode

F7 = field_new(7)


def lcs_oracle(a, b):
    """Textbook dynamic program, kept independent of the library code."""
    m, n = len(a), len(b)
    table = [[0] * (n + 1) for _ in range(m + 1)]
    for i in range(1, m + 1):
        for j in range(1, n + 1):
            if a[i - 1] == b[j - 1]:
                table[i][j] = table[i - 1][j - 1] + 1
            else:
                table[i][j] = max(table[i - 1][j], table[i][j - 1])
    return table[m][n]


def test_lcs_worked_example():
    s = (2, 4, 1, 3, 0, 2)
    t = (4, 3, 2, 1, 0)
    assert insdel.lcs(s, t) == 3
    assert insdel.edit_distance(s, t) == 6 + 5 - 2 * 3


def test_lcs_trivial_cases():
    s = (3, 1, 4, 1, 5)
    assert insdel.lcs(s, s) == len(s)
    assert insdel.lcs(s, ()) == 0
    assert insdel.edit_distance(s, s) == 0
    assert insdel.edit_distance(s, ()) == len(s)


def test_lcs_matches_oracle_random():
    rng = random.Random(101)
    for _ in range(500):
        m, n, sigma = rng.randrange(0, 14), rng.randrange(0, 14), rng.randrange(1, 9)
        a = tuple(rng.randrange(sigma) for _ in range(m))
        b = tuple(rng.randrange(sigma) for _ in range(n))
        assert insdel.lcs(a, b) == lcs_oracle(a, b)


def test_lcs_symmetry_and_deletion_monotonicity():
    rng = random.Random(53)
    for _ in range(200):
        a = tuple(rng.randrange(5) for _ in range(rng.randrange(1, 10)))
        b = tuple(rng.randrange(5) for _ in range(rng.randrange(1, 10)))
        v = insdel.lcs(a, b)
        assert insdel.lcs(b, a) == v
        pos = rng.randrange(len(a))
        shorter = a[:pos] + a[pos + 1 :]
        assert v - 1 <= insdel.lcs(shorter, b) <= v


def test_edit_distance_affine_isometry():
    rng = random.Random(59)
    for fld in (F7, field_new(3, 2)):
        for _ in range(100):
            n = rng.randrange(1, 9)
            c = [rng.randrange(fld.q) for _ in range(n)]
            d = [rng.randrange(fld.q) for _ in range(n)]
            lam = rng.randrange(1, fld.q)
            mu = rng.randrange(fld.q)
            c2 = [fld.add(fld.mul(lam, x), mu) for x in c]
            d2 = [fld.add(fld.mul(lam, x), mu) for x in d]
            assert insdel.edit_distance(c2, d2) == insdel.edit_distance(c, d)


def test_lcs_witness_is_valid():
    rng = random.Random(61)
    for _ in range(200):
        a = tuple(rng.randrange(6) for _ in range(rng.randrange(0, 10)))
        b = tuple(rng.randrange(6) for _ in range(rng.randrange(0, 10)))
        length, i_seq, j_seq = insdel.lcs_with_witness(a, b)
        assert length == lcs_oracle(a, b)
        assert len(i_seq) == len(j_seq) == length
        assert all(x < y for x, y in zip(i_seq, i_seq[1:]))
        assert all(x < y for x, y in zip(j_seq, j_seq[1:]))
        assert [a[i - 1] for i in i_seq] == [b[j - 1] for j in j_seq]


def test_hamming_increasing():
    assert insdel.hamming_increasing((1, 2, 3, 4), (2, 3, 4, 5)) == 4
    assert insdel.hamming_increasing((1, 2, 4), (1, 2, 4)) == 0
    assert insdel.hamming_increasing((1, 2, 4), (1, 3, 4)) == 1
    with pytest.raises(ValueError):
        insdel.hamming_increasing((1, 2), (1, 2, 3))


def test_missing_index_distance_identity():
    # for single-drop sequences the Hamming distance is the gap between
    # the dropped positions
    rng = random.Random(67)
    assert insdel.missing_index((1, 2, 3, 4), 5) == 5
    assert insdel.missing_index((2, 3, 4, 5), 5) == 1
    for _ in range(200):
        n = rng.randrange(2, 10)
        s_i, s_j = rng.sample(range(1, n + 1), 2)
        i_seq = tuple(t for t in range(1, n + 1) if t != s_i)
        j_seq = tuple(t for t in range(1, n + 1) if t != s_j)
        assert insdel.hamming_increasing(i_seq, j_seq) == abs(s_j - s_i)
        assert insdel.missing_index(i_seq, n) == s_i


def test_enumerate_increasing():
    assert list(insdel.enumerate_increasing(3, 2)) == [(1, 2), (1, 3), (2, 3)]
    assert list(insdel.enumerate_increasing(4, 4)) == [(1, 2, 3, 4)]
    assert len(list(insdel.enumerate_increasing(6, 3))) == 20
    with pytest.raises(ValueError):
        list(insdel.enumerate_increasing(3, 4))


def test_build_v_examples():
    v = insdel.build_V(F7, (0, 1, 2, 5), 2, (1, 2, 3), (2, 3, 4))
    assert v == [[1, 0, 1], [1, 1, 2], [1, 2, 5]]
    v = insdel.build_V(F7, (0, 1, 2, 5, 3), 3, (1, 2, 3, 4, 5), (1, 2, 3, 4, 5))
    assert len(v) == 5 and all(len(row) == 5 for row in v)
    v = insdel.build_V(F7, (0, 1, 2), 1, (1, 2), (2, 3))
    assert v == [[1], [1]]
    with pytest.raises(ValueError):
        insdel.build_V(F7, (0, 1, 2), 2, (1, 2), (2, 4))


def test_rank_certificate_examples():
    ev = EvaluationVector(F7, (0, 1, 2, 5))
    res = insdel.rank_certificate(RsCode(ev, 2), 1)
    assert res.certified and res.witness is None
    assert res.pairs_checked == 6

    ap = EvaluationVector(F7, (0, 1, 2, 3))
    res = insdel.rank_certificate(RsCode(ap, 2), 1)
    assert not res.certified
    assert res.witness is not None
    i_seq, j_seq = res.witness
    v = insdel.build_V(F7, ap.points, 2, i_seq, j_seq)
    assert poly.rank(F7, v) < 3

    with pytest.raises(ValueError):
        insdel.rank_certificate(RsCode(ev, 2), 2)  # ell would drop below 2k-1


def test_rank_certificate_skips_low_distance_pairs():
    ev = EvaluationVector(F7, (0, 1, 2, 5))
    res = insdel.rank_certificate(RsCode(ev, 2), 1)
    # pairs with d_H < ell-k+1 = 2 are never built: 6 of the 4*4 pairs qualify
    assert res.pairs_checked == 6
