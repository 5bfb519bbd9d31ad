"""Dense univariate (and tiny bivariate) polynomials and reduced rational
functions over exact rationals."""

from __future__ import annotations

from .scalars import Rat, ZERO, ONE


class PoleError(ArithmeticError):
    """Evaluation of a rational function at a zero of its reduced denominator."""


def _trim(coeffs):
    coeffs = [Rat(c) for c in coeffs]
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


class Polynomial:
    """Univariate polynomial, coefficients lowest degree first.

    The trailing coefficient is nonzero unless the polynomial is zero.
    Instances are immutable.
    """

    __slots__ = ("coeffs", "var")

    def __init__(self, coeffs=(), var="x"):
        self.coeffs = _trim(coeffs)
        self.var = var

    @classmethod
    def const(cls, c, var="x"):
        return cls([c], var)

    @classmethod
    def linear(cls, a, b, var="x"):
        """a + b*var."""
        return cls([a, b], var)

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def leading(self):
        return self.coeffs[-1] if self.coeffs else ZERO

    def __eq__(self, other):
        return (isinstance(other, Polynomial) and self.coeffs == other.coeffs
                and (self.var == other.var or self.degree < 1 or other.degree < 1))

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Polynomial(out, self.var)

    def __neg__(self):
        return Polynomial([-c for c in self.coeffs], self.var)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            return self.scale(other)
        if self.is_zero() or other.is_zero():
            return Polynomial((), self.var)
        out = [ZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Polynomial(out, self.var)

    __rmul__ = __mul__

    def scale(self, c):
        c = Rat(c)
        if c == 0:
            return Polynomial((), self.var)
        return Polynomial([a * c for a in self.coeffs], self.var)

    def __call__(self, point):
        point = Rat(point)
        acc = ZERO
        for c in reversed(self.coeffs):
            acc = acc * point + c
        return acc

    def subs_neg(self):
        """Substitute var -> -var."""
        return Polynomial(
            [(-c if i % 2 else c) for i, c in enumerate(self.coeffs)], self.var)

    def monic(self):
        if self.is_zero():
            return self
        lead = self.leading()
        return Polynomial([c / lead for c in self.coeffs], self.var)

    def divmod(self, other):
        """Exact field division with remainder; other must be nonzero."""
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return Polynomial((), self.var), self
        quo = [ZERO] * (dq + 1)
        lead = other.leading()
        for i in range(dq, -1, -1):
            f = rem[i + other.degree] / lead
            quo[i] = f
            if f != 0:
                for j, b in enumerate(other.coeffs):
                    rem[i + j] -= f * b
        return Polynomial(quo, self.var), Polynomial(rem, self.var)

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def __mod__(self, other):
        return self.divmod(other)[1]

    def gcd(self, other):
        """Monic greatest common divisor."""
        a, b = self, other
        while not b.is_zero():
            a, b = b, a % b
        return a.monic()

    def __repr__(self):
        if self.is_zero():
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                parts.append(str(c))
            elif i == 1:
                parts.append("%s*%s" % (c, self.var))
            else:
                parts.append("%s*%s^%d" % (c, self.var, i))
        return " + ".join(parts)


class RationalFunction:
    """Reduced rational function num/den with monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num: Polynomial, den: Polynomial = None):
        if den is None:
            den = Polynomial.const(1, num.var)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        g = num.gcd(den)
        if g.degree > 0:
            num = num // g
            den = den // g
        lead = den.leading()
        if lead != 1:
            num = num.scale(1 / lead)
            den = den.scale(1 / lead)
        self.num = num
        self.den = den

    @classmethod
    def const(cls, c, var="x"):
        return cls(Polynomial.const(c, var))

    @property
    def var(self):
        return self.num.var if self.num.degree > 0 else self.den.var

    def is_zero(self):
        return self.num.is_zero()

    def __eq__(self, other):
        return (isinstance(other, RationalFunction)
                and self.num == other.num and self.den == other.den)

    def __hash__(self):
        return hash((self.num, self.den))

    def __add__(self, other):
        return RationalFunction(self.num * other.den + other.num * self.den,
                                self.den * other.den)

    def __neg__(self):
        return RationalFunction(-self.num, self.den)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        return RationalFunction(self.num * other.num, self.den * other.den)

    def __truediv__(self, other):
        if other.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return RationalFunction(self.num * other.den, self.den * other.num)

    def subs_neg(self):
        return RationalFunction(self.num.subs_neg(), self.den.subs_neg())

    def evaluate_at(self, point):
        """Exact value at a rational point; PoleError at a true pole."""
        point = Rat(point)
        d = self.den(point)
        if d == 0:
            raise PoleError("pole at %s" % point)
        return self.num(point) / d

    def series_leading_terms(self, order: int):
        """Coefficients of x^0, x^-1, ..., x^-order of the expansion at infinity.

        Requires deg num <= deg den (the expansion starts at x^0).
        """
        dn, dd = self.num.degree, self.den.degree
        if dn > dd:
            raise ValueError("degree of numerator exceeds degree of denominator")
        # In u = 1/x:  num/den = A(u)/B(u) with A, B the degree-reversed
        # coefficient lists padded to a common length.
        a = [ZERO] * (dd - dn) + list(reversed(self.num.coeffs))
        b = list(reversed(self.den.coeffs))
        out = []
        rem = list(a) + [ZERO] * (order + 1)
        for k in range(order + 1):
            c = rem[k] / b[0]
            out.append(c)
            if c != 0:
                for j, bj in enumerate(b):
                    if k + j < len(rem):
                        rem[k + j] -= c * bj
        return out

    def __repr__(self):
        return "(%r) / (%r)" % (self.num, self.den)


def ratfun_arith(a: RationalFunction, b: RationalFunction, op: str) -> RationalFunction:
    """Dispatch arithmetic by name: add | sub | mul | div."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError("unknown op %r" % op)


class BiPoly:
    """Dense bivariate polynomial in (x, y), used only by the small-scale
    defining-relation checks."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {}
        if terms:
            for k, v in terms.items():
                v = Rat(v)
                if v != 0:
                    self.terms[k] = v

    @classmethod
    def var_x(cls):
        return cls({(1, 0): ONE})

    @classmethod
    def var_y(cls):
        return cls({(0, 1): ONE})

    @classmethod
    def const(cls, c):
        return cls({(0, 0): c})

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        return isinstance(other, BiPoly) and self.terms == other.terms

    def __add__(self, other):
        out = dict(self.terms)
        for k, v in other.terms.items():
            w = out.get(k, ZERO) + v
            if w == 0:
                out.pop(k, None)
            else:
                out[k] = w
        return BiPoly(out)

    def __neg__(self):
        return BiPoly({k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        out = {}
        for (a1, b1), v1 in self.terms.items():
            for (a2, b2), v2 in other.terms.items():
                k = (a1 + a2, b1 + b2)
                out[k] = out.get(k, ZERO) + v1 * v2
        return BiPoly(out)
