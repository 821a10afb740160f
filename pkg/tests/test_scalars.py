from fractions import Fraction

from hypothesis import given, strategies as st

from rightlcm.scalars import ONE, RationalComplex, ZERO

rats = st.fractions(
    min_value=-100, max_value=100, max_denominator=50
)
scalars = st.builds(RationalComplex, rats, rats)


@given(a=scalars, b=scalars, c=scalars)
def test_ring_laws(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a
    assert a * b == b * a
    assert a + ZERO == a
    assert a * ONE == a
    assert a + (-a) == ZERO


@given(a=scalars, b=scalars)
def test_conjugation(a, b):
    assert (a * b).conjugate() == a.conjugate() * b.conjugate()
    assert a.conjugate().conjugate() == a
    norm = a * a.conjugate()
    assert norm.im == 0 and norm.re >= 0


@given(a=scalars)
def test_json_round_trip(a):
    assert RationalComplex.from_json(a.to_json()) == a


def test_of_and_zero():
    assert RationalComplex.of(3) == RationalComplex(Fraction(3), Fraction(0))
    assert not ZERO
    assert ONE
    assert RationalComplex.of(0, 0).is_zero()
