import pytest
from hypothesis import given, strategies as st

from skewfusion.scalars import Rat, rat
from skewfusion.poly import (BiPoly, PoleError, Polynomial, RationalFunction,
                             ratfun_arith)

coeff = st.integers(-9, 9).map(Rat)
poly = st.lists(coeff, max_size=6).map(lambda c: Polynomial(c, "h"))
nonzero_poly = poly.filter(lambda p: not p.is_zero())


def lin(a, b, var="h"):
    return Polynomial.linear(rat(a), rat(b), var)


def test_polynomial_canonical_trailing_zeros():
    assert Polynomial([1, 2, 0, 0], "h").coeffs == (1, 2)
    assert Polynomial([0, 0], "h").is_zero()
    assert Polynomial([], "h").degree == -1


def test_polynomial_evaluation():
    p = Polynomial([1, -3, 2], "h")  # 1 - 3h + 2h^2
    assert p(rat(0)) == 1
    assert p(rat(1)) == 0
    assert p(rat(1, 2)) == 0


@given(poly, poly)
def test_add_mul_commute(p, q):
    assert p + q == q + p
    assert p * q == q * p


@given(poly, nonzero_poly)
def test_divmod_identity(p, d):
    q, r = p.divmod(d)
    assert q * d + r == p
    assert r.degree < d.degree


@given(poly, poly, poly)
def test_mul_distributes(p, q, r):
    assert p * (q + r) == p * q + p * r


def test_ratfun_arith_examples():
    one_over_h = RationalFunction(Polynomial([1], "h"), Polynomial([0, 1], "h"))
    h = RationalFunction(Polynomial([0, 1], "h"))
    assert ratfun_arith(one_over_h, h, "mul") == RationalFunction.const(1, "h")

    a = RationalFunction(Polynomial([1], "h"), lin(-1, 1))
    b = RationalFunction(Polynomial([1], "h"), lin(1, 1))
    s = ratfun_arith(a, b, "add")
    assert s.num == Polynomial([0, 2], "h")
    assert s.den == Polynomial([-1, 0, 1], "h")

    c = RationalFunction(Polynomial([0, 1], "x"), lin(-2, 1, "x"))
    assert ratfun_arith(c, c, "sub").is_zero()


def test_ratfun_canonical_form():
    f = RationalFunction(Polynomial([2, 2], "h"), Polynomial([4], "h"))
    g = RationalFunction(Polynomial([1, 1], "h"), Polynomial([2], "h"))
    assert f == g
    # multiplying num and den by a common factor reduces back
    common = Polynomial([3, 1, 2], "h")
    h2 = RationalFunction(f.num * common, f.den * common)
    assert h2.num == f.num and h2.den == f.den


def test_evaluate_at():
    f = RationalFunction(Polynomial([1], "h"), lin(1, 1))
    assert f.evaluate_at(rat(0)) == 1
    g = RationalFunction(Polynomial([-1, 0, 1], "h"), lin(-1, 1))
    assert g.evaluate_at(rat(1)) == 2  # removable singularity
    with pytest.raises(PoleError):
        RationalFunction(Polynomial([1], "h"),
                         Polynomial([0, 1], "h")).evaluate_at(rat(0))


@given(poly, nonzero_poly, poly, nonzero_poly, coeff)
def test_evaluate_multiplicative(pn, pd, qn, qd, point):
    f = RationalFunction(pn, pd)
    g = RationalFunction(qn, qd)
    if f.den(point) == 0 or g.den(point) == 0:
        return
    prod = f * g
    assert prod.den(point) != 0
    assert prod.evaluate_at(point) == f.evaluate_at(point) * g.evaluate_at(point)


def test_series_leading_terms():
    one = RationalFunction.const(1, "x")
    assert one.series_leading_terms(2) == [1, 0, 0]

    f = RationalFunction(Polynomial([1, 1], "x"), Polynomial([0, 1], "x"))
    assert f.series_leading_terms(2) == [1, 1, 0]

    g = RationalFunction(Polynomial([0, 0, 1], "x"),
                         Polynomial([-1, 0, 1], "x"))
    assert g.series_leading_terms(2) == [1, 0, 1]

    with pytest.raises(ValueError):
        RationalFunction(Polynomial([0, 0, 1], "x"),
                         Polynomial([0, 1], "x")).series_leading_terms(1)


def test_bipoly_ring_ops():
    x = BiPoly.var_x()
    y = BiPoly.var_y()
    assert (x + y) * (x - y) == x * x - y * y
    assert (x * y - y * x).is_zero()
    assert BiPoly.const(rat(0)).is_zero()
