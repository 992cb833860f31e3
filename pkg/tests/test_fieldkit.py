"""
test_fieldkit.py
================

Tests for finite field tables and element arithmetic.
"""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from negacode.config import conf
from negacode.errors import (
    DivisionByZero,
    EvenCharacteristic,
    FieldMismatch,
    FieldTooLarge,
    InvalidDegree,
    NotCoprime,
    NotPrime,
    OutOfRange,
)
from negacode.fieldkit import (
    build_extension,
    build_field,
    field_of_order,
    find_primitive,
    in_base_field,
    invert,
    pow,
)


def _digits(index, p, length):
    out = []
    for _ in range(length):
        index, r = divmod(index, p)
        out.append(r)
    return np.array(out)


def test_prime_field():
    F = build_field(7, 1)
    assert F.q == 7
    assert F.alpha == 3
    assert F.exp_table.tolist() == [1, 3, 2, 6, 4, 5]
    assert F.mul(3, 5) == 1
    assert F.add(4, 5) == 2
    assert F.neg(3) == 4
    assert F.inv(3) == 5
    assert find_primitive(F).rep == 3


def test_extension_of_prime_field():
    F = build_field(3, 2)
    assert F.size == 9
    assert F.modulus == (1, 0, 1)
    assert F.alpha == 4
    # (1 + x) + (1 + x) = 2 + 2x
    assert F.add(4, 4) == 8
    # x * x = -1
    assert F.mul(3, 3) == 2
    assert field_of_order(9) is F


def test_addition_is_digitwise():
    for p, e in [(3, 3), (5, 2), (7, 2)]:
        F = build_field(p, e)
        a, b = np.meshgrid(np.arange(F.size), np.arange(F.size))
        total = F.vadd(a.ravel(), b.ravel())
        da = np.array([_digits(x, p, e) for x in a.ravel()])
        db = np.array([_digits(x, p, e) for x in b.ravel()])
        expected = ((da + db) % p).dot(p ** np.arange(e))
        assert np.array_equal(total, expected)


def test_field_axioms_vectorised():
    rng = np.random.default_rng(2024)
    for q in (9, 25, 27, 49, 125):
        F = field_of_order(q)
        a, b, c = rng.integers(0, q, size=(3, 10000))
        assert np.array_equal(F.vadd(a, b), F.vadd(b, a))
        assert np.array_equal(F.vmul(a, b), F.vmul(b, a))
        assert np.array_equal(F.vadd(F.vadd(a, b), c), F.vadd(a, F.vadd(b, c)))
        assert np.array_equal(F.vmul(F.vmul(a, b), c), F.vmul(a, F.vmul(b, c)))
        assert np.array_equal(F.vmul(a, F.vadd(b, c)), F.vadd(F.vmul(a, b), F.vmul(a, c)))
        assert not np.any(F.vadd(a, F.vneg(a)))
        assert np.array_equal(F.vsub(F.vadd(a, b), b), a)


def test_inverses():
    for q in (3, 9, 13, 27):
        F = field_of_order(q)
        for a in range(1, q):
            assert F.mul(a, F.inv(a)) == 1
            assert F.power(a, q - 1) == 1
        with pytest.raises(DivisionByZero):
            F.inv(0)


@settings(max_examples=1000)
@given(st.sampled_from([5, 9, 11, 25, 27]), st.data())
def test_zech_against_scalar_ops(q, data):
    F = field_of_order(q)
    a = data.draw(st.integers(0, q - 1))
    b = data.draw(st.integers(0, q - 1))
    assert F.add(a, b) == int(F.vadd(a, b))
    assert F.sub(F.add(a, b), b) == a
    if b:
        assert F.mul(F.div(a, b), b) == a


def test_field_elements():
    F = build_field(7, 1)
    a = F.element(3)
    assert (a * 5).rep == 1
    assert (a + 4).rep == 0
    assert (-a).rep == 4
    assert invert(a).rep == 5
    assert pow(a, 6) == F.one
    assert (a**2).rep == 2
    assert (a / a) == F.one
    assert not F.zero
    with pytest.raises(DivisionByZero):
        a / 0
    with pytest.raises(FieldMismatch):
        a + field_of_order(9).element(1)
    with pytest.raises(OutOfRange):
        F.element(7)
    with pytest.raises(OutOfRange):
        pow(a, -1)


def test_splitting_field():
    F = field_of_order(3)
    ext = build_extension(F, 7)
    assert ext.m == 6
    assert ext.size == 729
    assert ext.power(ext.beta, 7) == ext.neg(1)
    assert ext.power(ext.beta, 14) == 1
    assert ext.multiplicative_order(ext.beta) == 14
    assert in_base_field(ext.element(2))
    assert not in_base_field(ext.element(ext.beta))
    assert build_extension(F, 7) is ext

    # GF(q) sits inside GF(q^m) as the indices below q
    for a in range(3):
        for b in range(3):
            assert ext.add(a, b) == F.add(a, b)
            assert ext.mul(a, b) == F.mul(a, b)

    with pytest.raises(FieldMismatch):
        in_base_field(F.element(1))


def test_trivial_extension():
    F = field_of_order(13)
    ext = build_extension(F, 6)
    assert ext.m == 1
    assert ext.size == 13
    assert ext.power(ext.beta, 6) == ext.neg(1)


def test_field_errors():
    with pytest.raises(EvenCharacteristic):
        build_field(2, 3)
    with pytest.raises(NotPrime):
        build_field(9, 1)
    with pytest.raises(NotPrime):
        field_of_order(15)
    with pytest.raises(InvalidDegree):
        build_field(3, 0)
    with pytest.raises(NotCoprime):
        build_extension(field_of_order(3), 6)
    with pytest.raises(OutOfRange):
        build_extension(field_of_order(3), 0)
    with conf.set_temp("field_size_limit", 100):
        with pytest.raises(FieldTooLarge):
            build_field(11, 2)
        with pytest.raises(FieldTooLarge):
            build_extension(field_of_order(3), 13 * 7)


def test_field_equality():
    assert field_of_order(9) == build_field(3, 2)
    assert field_of_order(9) != field_of_order(27)
    assert len({field_of_order(5), build_field(5, 1)}) == 1
    assert field_of_order(3).to_dict() == {"p": 3, "e": 1, "q": 3, "modulus": [0, 1]}


if __name__ == "__main__":
    test_prime_field()
    test_extension_of_prime_field()
    test_addition_is_digitwise()
    test_field_axioms_vectorised()
    test_inverses()
    test_field_elements()
    test_splitting_field()
    test_trivial_extension()
    test_field_errors()
    test_field_equality()
