"""Reduced fractions of Laurent polynomials.

Canonical form: numerator and denominator share no non-unit factor, and the
denominator has componentwise-minimal exponent 0, coprime integer
coefficients and a positive lex-leading coefficient.  Any rational scale and
any monomial are carried by the numerator.  With this form equality and the
zero test are structural.
"""

from __future__ import annotations

from fractions import Fraction

from ..errors import DimensionError, DivisionByZeroError, PoleError
from .gcd import integer_content, poly_gcd
from .laurent import Coefficient, LaurentPolynomial


def _exact(a: LaurentPolynomial, b: LaurentPolynomial) -> LaurentPolynomial:
    q = a.exact_div(b)
    if q is None:
        raise ArithmeticError("internal error: gcd does not divide")
    return q


class RationalFunction:
    """Immutable element of the fraction field of the Laurent ring."""

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num: LaurentPolynomial, den: LaurentPolynomial | None = None):
        made = rf_make(num, den if den is not None else LaurentPolynomial.one(num.nvars))
        self.num = made.num
        self.den = made.den
        self._hash = None

    @classmethod
    def _canonical(cls, num: LaurentPolynomial, den: LaurentPolynomial) -> RationalFunction:
        """Scale an already reduced pair into canonical form (no gcd work)."""
        if den.is_zero():
            raise DivisionByZeroError("zero denominator")
        n = num.nvars
        if num.is_zero():
            return cls._raw(num, LaurentPolynomial.one(n))
        if den.is_monomial():
            (exps, c), = den.terms.items()
            return cls._raw(num.shift(tuple(-e for e in exps)) * (Fraction(1) / c if c != 1 else 1),
                            LaurentPolynomial.one(n))
        shift = den.min_exponents()
        if any(shift):
            neg = tuple(-e for e in shift)
            den = den.shift(neg)
            num = num.shift(neg)
        dl = den.coefficient_denominator_lcm()
        if dl != 1:
            den = den * dl
            num = num * dl
        c = integer_content(den)
        if den.leading_term()[1] < 0:
            c = -c
        if c != 1:
            inv = Fraction(1, c)
            den = den * inv
            num = num * inv
        return cls._raw(num, den)

    @classmethod
    def _raw(cls, num: LaurentPolynomial, den: LaurentPolynomial) -> RationalFunction:
        obj = cls.__new__(cls)
        obj.num = num
        obj.den = den
        obj._hash = None
        return obj

    @classmethod
    def from_poly(cls, p: LaurentPolynomial) -> RationalFunction:
        return cls._raw(p, LaurentPolynomial.one(p.nvars))

    @classmethod
    def zero(cls, nvars: int) -> RationalFunction:
        return cls._raw(LaurentPolynomial.zero(nvars), LaurentPolynomial.one(nvars))

    @classmethod
    def one(cls, nvars: int) -> RationalFunction:
        return cls._raw(LaurentPolynomial.one(nvars), LaurentPolynomial.one(nvars))

    @classmethod
    def constant(cls, c: Coefficient, nvars: int) -> RationalFunction:
        return cls._raw(LaurentPolynomial.constant(c, nvars), LaurentPolynomial.one(nvars))

    @property
    def nvars(self) -> int:
        return self.num.nvars

    # -- predicates ---------------------------------------------------------

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self) -> bool:
        return not self.num.is_zero()

    def is_one(self) -> bool:
        return self.num.is_one() and self.den.is_one()

    def is_polynomial(self) -> bool:
        """True iff the reduced denominator is 1, i.e. a Laurent polynomial over Q."""
        return self.den.is_one()

    def is_integral(self) -> bool:
        """True iff the value lies in the integral group ring Z[g^+-1]."""
        return self.den.is_one() and self.num.is_integral()

    def size(self) -> int:
        return len(self.num) + len(self.den)

    # -- arithmetic ---------------------------------------------------------

    def _coerce(self, other) -> RationalFunction:
        if isinstance(other, RationalFunction):
            if other.nvars != self.nvars:
                raise DimensionError(f"variable count mismatch: {self.nvars} vs {other.nvars}")
            return other
        if isinstance(other, LaurentPolynomial):
            if other.nvars != self.nvars:
                raise DimensionError(f"variable count mismatch: {self.nvars} vs {other.nvars}")
            return RationalFunction.from_poly(other)
        if isinstance(other, (int, Fraction)):
            return RationalFunction.constant(other, self.nvars)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if other.num.is_zero():
            return self
        if self.num.is_zero():
            return other
        if self.den.is_one() and other.den.is_one():
            return RationalFunction._raw(self.num + other.num, self.den)
        if self.den == other.den:
            return rf_make(self.num + other.num, self.den)
        g = poly_gcd(self.den, other.den)
        if g.is_one():
            return rf_make(self.num * other.den + other.num * self.den, self.den * other.den)
        d1, d2 = _exact(self.den, g), _exact(other.den, g)
        return rf_make(self.num * d2 + other.num * d1, d1 * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction._raw(-self.num, self.den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.num.is_zero() or other.num.is_zero():
            return RationalFunction.zero(self.nvars)
        if self.den.is_one() and other.den.is_one():
            return RationalFunction._raw(self.num * other.num, self.den)
        # cross-cancel: the product of two reduced fractions is reduced afterwards
        n1, d2 = self.num, other.den
        if not d2.is_one():
            g = poly_gcd(n1, d2)
            if not g.is_one():
                n1, d2 = _exact(n1, g), _exact(d2, g)
        n2, d1 = other.num, self.den
        if not d1.is_one():
            g = poly_gcd(n2, d1)
            if not g.is_one():
                n2, d1 = _exact(n2, g), _exact(d1, g)
        return RationalFunction._canonical(n1 * n2, d1 * d2)

    __rmul__ = __mul__

    def inverse(self) -> RationalFunction:
        if self.num.is_zero():
            raise DivisionByZeroError("zero has no inverse")
        return RationalFunction._canonical(self.den, self.num)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, n: int) -> RationalFunction:
        if n < 0:
            return self.inverse() ** (-n)
        result = RationalFunction.one(self.nvars)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def involution(self) -> RationalFunction:
        return RationalFunction._canonical(self.num.involution(), self.den.involution())

    def specialize(self, images: list[LaurentPolynomial]) -> RationalFunction:
        return specialize(self, images)

    # -- comparison / text --------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, RationalFunction):
            return self.num == other.num and self.den == other.den
        if isinstance(other, (LaurentPolynomial, int, Fraction)):
            return self.den.is_one() and self.num == other
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    def to_text(self) -> str:
        """Canonical serialisation ``num / den`` (just ``num`` when den is 1)."""
        if self.den.is_one():
            return self.num.to_text()
        return f"{self.num.to_text()} / {self.den.to_text()}"

    def pretty(self, symbol: str = "g") -> str:
        if self.den.is_one():
            return self.num.pretty(symbol)
        n = self.num.pretty(symbol)
        d = self.den.pretty(symbol)
        if len(self.num) > 1:
            n = f"({n})"
        if len(self.den) > 1:
            d = f"({d})"
        return f"{n}/{d}"

    def __str__(self) -> str:
        return self.pretty()

    def __repr__(self) -> str:
        return f"RationalFunction({self.pretty()!r}, nvars={self.nvars})"


def rf_make(n: LaurentPolynomial, d: LaurentPolynomial) -> RationalFunction:
    """Reduced, canonically scaled fraction n / d."""
    if n.nvars != d.nvars:
        raise DimensionError(f"variable count mismatch: {n.nvars} vs {d.nvars}")
    if d.is_zero():
        raise DivisionByZeroError("zero denominator")
    if n.is_zero() or d.is_monomial():
        return RationalFunction._canonical(n, d)
    g = poly_gcd(n, d)
    if not g.is_one():
        n, d = _exact(n, g), _exact(d, g)
    return RationalFunction._canonical(n, d)


def parse_rational_function(text: str, nvars: int) -> RationalFunction:
    """Inverse of :meth:`RationalFunction.to_text` (``num / den`` or a bare polynomial)."""
    from .laurent import parse_laurent
    if " / " in text:
        num, den = text.split(" / ", 1)
        return rf_make(parse_laurent(num, nvars), parse_laurent(den, nvars))
    return RationalFunction.from_poly(parse_laurent(text, nvars))


def specialize(f: RationalFunction | LaurentPolynomial, images: list[LaurentPolynomial]) -> RationalFunction:
    """Substitute monomial images for the variables, then re-reduce."""
    if isinstance(f, LaurentPolynomial):
        f = RationalFunction.from_poly(f)
    num = f.num.substitute(images)
    den = f.den.substitute(images)
    if den.is_zero():
        raise PoleError(f"denominator {f.den.pretty()} vanishes under the substitution")
    return rf_make(num, den)
