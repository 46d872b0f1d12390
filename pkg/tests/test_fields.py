from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from arrangio.errors import DivisionByZero, NonInvertibleDenominator, SpecMismatch
from arrangio.fields import (
    QQ,
    Cyclotomic,
    FieldElement,
    PrimeField,
    cos_pi,
    cyclotomic_poly,
    embed_rational,
    field_arith,
    from_payload,
    is_prime,
    poly_mul,
    sin_pi,
    totient,
    zeta_combination,
)

F = Fraction


def test_cyclotomic_small_cases():
    assert cyclotomic_poly(1) == (F(-1), F(1))
    assert cyclotomic_poly(4) == (F(1), F(0), F(1))
    assert cyclotomic_poly(12) == (F(1), F(0), F(-1), F(0), F(1))


@pytest.mark.parametrize("n", range(1, 41))
def test_cyclotomic_product_is_x_to_n_minus_one(n):
    prod = (F(1),)
    for d in range(1, n + 1):
        if n % d == 0:
            prod = poly_mul(prod, cyclotomic_poly(d))
    assert prod == (F(-1),) + (F(0),) * (n - 1) + (F(1),)
    assert len(cyclotomic_poly(n)) - 1 == totient(n)


def test_rational_arithmetic():
    assert QQ(F(1, 3)) + QQ(F(1, 6)) == QQ(F(1, 2))
    assert field_arith(QQ(1), QQ(3), "div") == QQ(F(1, 3))


def test_zeta4_squared():
    z = Cyclotomic(4).zeta()
    assert (z * z).to_text() == ["-1", "0"]


def test_prime_field_division():
    f5 = PrimeField(5)
    assert f5(3) / f5(4) == f5(2)
    assert (f5(3) / f5(4)).value == 2


def test_embeddings():
    assert embed_rational(F(2, 3), QQ) == QQ(F(2, 3))
    assert embed_rational(F(1, 2), PrimeField(7)).value == 4
    assert embed_rational(5, Cyclotomic(3)).to_text() == ["5", "0"]
    with pytest.raises(NonInvertibleDenominator):
        embed_rational(F(1, 7), PrimeField(7))


def test_errors():
    with pytest.raises(SpecMismatch):
        field_arith(QQ(1), PrimeField(3)(1), "add")
    with pytest.raises(DivisionByZero):
        QQ(1) / QQ(0)
    with pytest.raises(ZeroDivisionError):
        Cyclotomic(8).zero().inverse()
    with pytest.raises(ValueError):
        PrimeField(9)


def test_is_prime_matches_trial_division():
    for n in range(200):
        naive = n >= 2 and all(n % d for d in range(2, int(n ** 0.5) + 1))
        assert is_prime(n) == naive


def test_cyclotomic_one_behaves_like_rationals():
    c1 = Cyclotomic(1)
    a, b = c1(F(3, 4)), c1(F(-5, 7))
    assert (a * b).to_text() == [str(F(3, 4) * F(-5, 7))]
    assert (a / b).to_text() == [str(F(3, 4) / F(-5, 7))]


@pytest.mark.parametrize("m", range(3, 11))
def test_cos_sin_pythagoras(m):
    for k in range(2 * m):
        c, s = cos_pi(k, m), sin_pi(k, m)
        assert c * c + s * s == Cyclotomic(4 * m).one()
        assert c.is_real() and s.is_real()


def test_cos_values():
    assert cos_pi(1, 3) == Cyclotomic(12)(F(1, 2))
    assert cos_pi(0, 5) == Cyclotomic(20).one()
    assert sin_pi(2, 4) == Cyclotomic(16).one()  # sin(pi/2)


def test_zeta_is_not_real_and_conjugates_to_inverse():
    z = Cyclotomic(5).zeta()
    assert not z.is_real()
    assert z.conjugate() == z.inverse()
    assert zeta_combination(5, [(5, 1)]) == Cyclotomic(5).one()


def test_payload_round_trip():
    spec = Cyclotomic(12)
    x = cos_pi(1, 3) + sin_pi(1, 3) * spec.zeta()
    assert from_payload(spec, x.to_text()) == x
    assert from_payload(PrimeField(11), "7") == PrimeField(11)(7)
    with pytest.raises(ValueError):
        from_payload(spec, ["1", "2"])


rationals = st.builds(Fraction, st.integers(-50, 50), st.integers(1, 20))


def cyclo_elements(n):
    d = totient(n)
    return st.lists(rationals, min_size=d, max_size=d).map(lambda c: from_payload(Cyclotomic(n), [str(x) for x in c]))


@settings(max_examples=60, deadline=None)
@given(st.sampled_from([3, 5, 8, 12, 20]).flatmap(lambda n: st.tuples(cyclo_elements(n), cyclo_elements(n), cyclo_elements(n))))
def test_cyclotomic_field_axioms(triple):
    a, b, c = triple
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == a.spec.zero()
    if not b.is_zero():
        assert (a / b) * b == a
        assert b * b.inverse() == b.spec.one()


@settings(max_examples=200, deadline=None)
@given(st.sampled_from([2, 3, 5, 7, 101]), st.integers(), st.integers())
def test_prime_field_inverse(p, x, y):
    f = PrimeField(p)
    a, b = f(x), f(y)
    assert (a + b).value == (x + y) % p
    if not b.is_zero():
        assert (a / b) * b == a


def test_elements_are_immutable_and_hashable():
    a = QQ(F(1, 2))
    assert hash(a) == hash(QQ(F(2, 4)))
    with pytest.raises(AttributeError):
        a.value = 3
    assert isinstance(a, FieldElement)
