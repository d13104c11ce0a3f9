"""Tests for finite field arithmetic."""

import random

import numpy as np
import pytest

from rsinsdel.gf import Field, euler_phi, factorize, field_from_order, field_new, is_prime, prime_power


def brute_irreducible_quadratics_f2():
    # A monic quadratic over F_2 is irreducible iff it has no roots.
    out = []
    for c0 in (0, 1):
        for c1 in (0, 1):
            if all((x * x + c1 * x + c0) % 2 != 0 for x in (0, 1)):
                out.append((c0, c1, 1))
    return out


def brute_orders(fld):
    orders = {}
    for x in range(1, fld.q):
        acc, n = x, 1
        while acc != 1:
            acc = fld.mul(acc, x)
            n += 1
        orders[x] = n
    return orders


def test_prime_field_basics():
    f7 = field_new(7)
    assert f7.q == 7 and f7.p == 7 and f7.m == 1
    assert f7.mul(3, 5) == 1
    assert f7.inv(3) == 5
    assert f7.add(6, 5) == 4
    assert f7.neg(3) == 4


def test_f4_modulus_is_unique_irreducible_quadratic():
    assert brute_irreducible_quadratics_f2() == [(1, 1, 1)]
    f4 = field_new(2, 2)
    assert f4.modulus == (1, 1, 1)
    # x * x reduces to x + 1
    assert f4.mul(2, 2) == 3


def test_nonprime_characteristic_rejected():
    with pytest.raises(ValueError):
        field_new(6, 1)
    with pytest.raises(ValueError):
        field_new(1, 1)


def test_order_ceiling():
    with pytest.raises(ValueError):
        field_new(2, 21)


def test_inv_zero():
    with pytest.raises(ZeroDivisionError):
        field_new(7).inv(0)


def test_primitive_elements_against_order_scan():
    for p, m in [(7, 1), (2, 2), (2, 1), (3, 2), (13, 1), (2, 4)]:
        fld = field_new(p, m)
        orders = brute_orders(fld)
        expected = sorted(x for x, o in orders.items() if o == fld.q - 1)
        assert fld.primitive_elements() == expected
        assert len(expected) == euler_phi(fld.q - 1)


def test_primitive_elements_known_values():
    assert field_new(7).primitive_elements() == [3, 5]
    assert field_new(2, 2).primitive_elements() == [2, 3]
    assert field_new(2).primitive_elements() == [1]


def test_euler_phi():
    assert euler_phi(6) == 2
    assert euler_phi(1) == 1
    assert euler_phi(12) == 4
    assert euler_phi(80) == 32
    with pytest.raises(ValueError):
        euler_phi(0)


def test_field_axioms_random():
    rng = random.Random(7)
    for p, m in [(7, 1), (251, 1), (2, 3), (3, 2), (3, 4), (5, 2)]:
        fld = field_new(p, m)
        for _ in range(200):
            a, b, c = (rng.randrange(fld.q) for _ in range(3))
            assert fld.add(a, b) == fld.add(b, a)
            assert fld.mul(a, b) == fld.mul(b, a)
            assert fld.add(fld.add(a, b), c) == fld.add(a, fld.add(b, c))
            assert fld.mul(fld.mul(a, b), c) == fld.mul(a, fld.mul(b, c))
            assert fld.mul(a, fld.add(b, c)) == fld.add(fld.mul(a, b), fld.mul(a, c))
            assert fld.sub(a, b) == fld.add(a, fld.neg(b))
            assert fld.pow(a, fld.q) == a
            if a:
                assert fld.mul(a, fld.inv(a)) == 1


def test_pow_matches_repeated_multiplication():
    rng = random.Random(3)
    for fld in (field_new(13), field_new(2, 4)):
        for _ in range(50):
            a = rng.randrange(1, fld.q)
            e = rng.randrange(0, 30)
            acc = 1
            for _ in range(e):
                acc = fld.mul(acc, a)
            assert fld.pow(a, e) == acc


def test_vectorized_ops_match_scalar():
    for p, m in [(7, 1), (3, 4), (2, 3), (1367, 1)]:
        fld = field_new(p, m)
        xs = np.arange(min(fld.q, 400), dtype=np.int64)
        for a in (0, 1, fld.q - 1, min(5, fld.q - 1)):
            assert fld.v_add(xs, np.int64(a)).tolist() == [fld.add(int(x), a) for x in xs]
            assert fld.v_mul(xs, np.int64(a)).tolist() == [fld.mul(int(x), a) for x in xs]


def test_no_table_extension_field_path():
    # q = 2^17 exceeds the table budget; polynomial arithmetic must still work
    fld = field_new(2, 17)
    assert fld._exp is None
    a, b = 12345, 54321
    assert fld.mul(a, b) == fld.mul(b, a)
    assert fld.mul(a, fld.inv(a)) == 1
    assert fld.pow(a, fld.q - 1) == 1


def test_int_embed_characteristic():
    f8 = field_new(2, 3)
    assert f8.int_embed(2) == 0
    f9 = field_new(3, 2)
    assert f9.int_embed(3) == 0
    assert f9.int_embed(4) == 1
    assert field_new(7).int_embed(9) == 2


def test_prime_power_detection():
    assert prime_power(8) == (2, 3)
    assert prime_power(7) == (7, 1)
    assert prime_power(12) is None
    assert prime_power(1) is None
    assert factorize(360) == {2: 3, 3: 2, 5: 1}
    assert is_prime(1367) and not is_prime(1365)


def test_field_from_order():
    assert field_from_order(81) == field_new(3, 4)
    with pytest.raises(ValueError):
        field_from_order(12)


def test_field_identity_and_hash():
    assert field_new(7) == field_new(7)
    assert field_new(2, 2) != field_new(2, 3)
    assert hash(field_new(3, 2)) == hash(field_new(3, 2))
    assert repr(field_new(3, 2)) == "GF(3^2)"
    assert field_new(7).name() == "GF(7)"


def test_check_range():
    f7 = field_new(7)
    with pytest.raises(ValueError):
        f7.check(7)
    with pytest.raises(ValueError):
        f7.check(-1)
    assert f7.check(6) == 6
