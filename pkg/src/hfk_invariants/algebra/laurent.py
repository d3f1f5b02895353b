"""Sparse multivariate Laurent polynomials with exact rational coefficients.

A polynomial in ``n`` variables ``g1 .. gn`` is a mapping from exponent
vectors (tuples of ``n`` signed integers) to nonzero coefficients.  The
coefficients are Python ``int`` or :class:`fractions.Fraction`; both compare
and hash consistently, so no coercion is done on the hot paths.

Monomial order is pure lex with ``g1 < g2 < ... < gn``, i.e. the exponent of
the highest-index variable is compared first.
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import lcm
from types import MappingProxyType
from typing import Iterable, Mapping, Union

from ..errors import DimensionError, DomainError

Coefficient = Union[int, Fraction]
ExponentVector = tuple[int, ...]


def lex_key(exps: ExponentVector) -> ExponentVector:
    """Sort key realising the lex order with g1 < g2 < ... < gn."""
    return exps[::-1]


def _clean(c: Coefficient) -> Coefficient:
    if type(c) is Fraction and c.denominator == 1:
        return c.numerator
    return c


def format_coefficient(c: Coefficient) -> str:
    c = _clean(c)
    if isinstance(c, Fraction):
        return f"{c.numerator}/{c.denominator}"
    return str(c)


class LaurentPolynomial:
    """Immutable sparse Laurent polynomial over the rationals."""

    __slots__ = ("_terms", "nvars", "_hash")

    def __init__(self, terms: Mapping[ExponentVector, Coefficient] | None = None, nvars: int = 1):
        if nvars < 0:
            raise DimensionError("variable count must be nonnegative")
        clean: dict[ExponentVector, Coefficient] = {}
        for exps, c in (terms or {}).items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != nvars:
                raise DimensionError(f"exponent vector {exps} does not have length {nvars}")
            if c:
                clean[exps] = _clean(c) if isinstance(c, Fraction) else int(c)
        self._terms = clean
        self.nvars = nvars
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict[ExponentVector, Coefficient], nvars: int) -> LaurentPolynomial:
        # trusted constructor: terms already validated and free of zeros
        obj = cls.__new__(cls)
        obj._terms = terms
        obj.nvars = nvars
        obj._hash = None
        return obj

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, nvars: int) -> LaurentPolynomial:
        return cls._raw({}, nvars)

    @classmethod
    def one(cls, nvars: int) -> LaurentPolynomial:
        return cls._raw({(0,) * nvars: 1}, nvars)

    @classmethod
    def constant(cls, c: Coefficient, nvars: int) -> LaurentPolynomial:
        return cls({(0,) * nvars: c}, nvars)

    @classmethod
    def monomial(cls, exps: Iterable[int], coeff: Coefficient = 1) -> LaurentPolynomial:
        exps = tuple(exps)
        return cls({exps: coeff}, len(exps))

    @classmethod
    def variable(cls, index: int, nvars: int) -> LaurentPolynomial:
        """The variable ``g<index>`` (1-based)."""
        if not 1 <= index <= nvars:
            raise DimensionError(f"variable g{index} out of range for {nvars} variables")
        exps = [0] * nvars
        exps[index - 1] = 1
        return cls._raw({tuple(exps): 1}, nvars)

    # -- inspection ---------------------------------------------------------

    @property
    def terms(self) -> Mapping[ExponentVector, Coefficient]:
        return MappingProxyType(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self):
        return iter(self._terms.items())

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        if not self._terms:
            return True
        return len(self._terms) == 1 and not any(next(iter(self._terms)))

    def is_one(self) -> bool:
        return len(self._terms) == 1 and self._terms.get((0,) * self.nvars) == 1

    def is_monomial(self) -> bool:
        """A single term with any nonzero coefficient."""
        return len(self._terms) == 1

    def is_unit(self) -> bool:
        """Units of the integral Laurent ring: a single term with coefficient +1 or -1."""
        if len(self._terms) != 1:
            return False
        c = next(iter(self._terms.values()))
        return c == 1 or c == -1

    def constant_value(self) -> Coefficient:
        if not self.is_constant():
            raise DomainError("polynomial is not constant")
        return self._terms.get((0,) * self.nvars, 0)

    def sorted_terms(self, reverse: bool = False) -> list[tuple[ExponentVector, Coefficient]]:
        return sorted(self._terms.items(), key=lambda kv: lex_key(kv[0]), reverse=reverse)

    def leading_term(self) -> tuple[ExponentVector, Coefficient]:
        """Lex-largest term."""
        if not self._terms:
            raise DomainError("zero polynomial has no leading term")
        exps = max(self._terms, key=lex_key)
        return exps, self._terms[exps]

    def trailing_term(self) -> tuple[ExponentVector, Coefficient]:
        """Lex-smallest term."""
        if not self._terms:
            raise DomainError("zero polynomial has no trailing term")
        exps = min(self._terms, key=lex_key)
        return exps, self._terms[exps]

    def min_exponents(self) -> ExponentVector:
        if not self._terms:
            return (0,) * self.nvars
        return tuple(min(col) for col in zip(*self._terms)) if self.nvars else ()

    def max_exponents(self) -> ExponentVector:
        if not self._terms:
            return (0,) * self.nvars
        return tuple(max(col) for col in zip(*self._terms)) if self.nvars else ()

    def coefficient_denominator_lcm(self) -> int:
        out = 1
        for c in self._terms.values():
            if isinstance(c, Fraction):
                out = lcm(out, c.denominator)
        return out

    def is_integral(self) -> bool:
        return all(not isinstance(c, Fraction) or c.denominator == 1 for c in self._terms.values())

    # -- arithmetic ---------------------------------------------------------

    def _coerce(self, other) -> LaurentPolynomial:
        if isinstance(other, LaurentPolynomial):
            if other.nvars != self.nvars:
                raise DimensionError(f"variable count mismatch: {self.nvars} vs {other.nvars}")
            return other
        if isinstance(other, (int, Fraction)):
            return LaurentPolynomial.constant(other, self.nvars)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if len(self._terms) < len(other._terms):
            big, small = other._terms, self._terms
        else:
            big, small = self._terms, other._terms
        out = dict(big)
        for k, c in small.items():
            v = out.get(k, 0) + c
            if v:
                out[k] = v
            else:
                out.pop(k, None)
        return LaurentPolynomial._raw(out, self.nvars)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPolynomial._raw({k: -c for k, c in self._terms.items()}, self.nvars)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for k, c in other._terms.items():
            v = out.get(k, 0) - c
            if v:
                out[k] = v
            else:
                out.pop(k, None)
        return LaurentPolynomial._raw(out, self.nvars)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return LaurentPolynomial.zero(self.nvars)
            return LaurentPolynomial._raw({k: c * other for k, c in self._terms.items()}, self.nvars)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self._terms, other._terms
        if not a or not b:
            return LaurentPolynomial.zero(self.nvars)
        if len(a) == 1:
            (ea, ca), = a.items()
            return LaurentPolynomial._raw(
                {tuple(x + y for x, y in zip(ea, eb)): ca * cb for eb, cb in b.items()}, self.nvars)
        if len(b) == 1:
            (eb, cb), = b.items()
            return LaurentPolynomial._raw(
                {tuple(x + y for x, y in zip(ea, eb)): ca * cb for ea, ca in a.items()}, self.nvars)
        out: dict[ExponentVector, Coefficient] = {}
        get = out.get
        for ea, ca in a.items():
            for eb, cb in b.items():
                k = tuple(x + y for x, y in zip(ea, eb))
                out[k] = get(k, 0) + ca * cb
        return LaurentPolynomial._raw({k: c for k, c in out.items() if c}, self.nvars)

    __rmul__ = __mul__

    def scale(self, c: Coefficient) -> LaurentPolynomial:
        return self * c

    def shift(self, exps: ExponentVector) -> LaurentPolynomial:
        """Multiply by the monomial g^exps."""
        if not any(exps):
            return self
        return LaurentPolynomial._raw(
            {tuple(x + y for x, y in zip(k, exps)): c for k, c in self._terms.items()}, self.nvars)

    def __pow__(self, n: int) -> LaurentPolynomial:
        if n < 0:
            if not self.is_monomial():
                raise DomainError("only monomials have Laurent inverses")
            (exps, c), = self._terms.items()
            return LaurentPolynomial._raw(
                {tuple(e * n for e in exps): _clean(Fraction(1) / Fraction(c) ** -n)}, self.nvars)
        result = LaurentPolynomial.one(self.nvars)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def monomial_inverse(self) -> LaurentPolynomial:
        return self ** -1

    def involution(self) -> LaurentPolynomial:
        """Ring involution induced by g -> g^-1 on every monomial."""
        return LaurentPolynomial._raw(
            {tuple(-e for e in k): c for k, c in self._terms.items()}, self.nvars)

    def exact_div(self, other: LaurentPolynomial) -> LaurentPolynomial | None:
        """Quotient ``self / other`` in the Laurent ring over Q, or None if inexact."""
        other = self._coerce(other)
        if not other._terms:
            raise DomainError("division by the zero polynomial")
        if not self._terms:
            return self
        if len(other._terms) == 1:
            (eb, cb), = other._terms.items()
            inv = Fraction(1) / cb if not (cb == 1) else 1
            return LaurentPolynomial._raw(
                {tuple(x - y for x, y in zip(k, eb)): _clean(c * inv) for k, c in self._terms.items()},
                self.nvars)
        ma = self.min_exponents()
        mb = other.min_exponents()
        q = _divide_polynomial(self.shift(tuple(-e for e in ma))._terms,
                               other.shift(tuple(-e for e in mb))._terms)
        if q is None:
            return None
        return LaurentPolynomial._raw(q, self.nvars).shift(tuple(x - y for x, y in zip(ma, mb)))

    # -- substitution -------------------------------------------------------

    def substitute(self, images: list[LaurentPolynomial]) -> LaurentPolynomial:
        """Ring homomorphism sending g_i to ``images[i]`` (each a monomial)."""
        if len(images) != self.nvars:
            raise DimensionError(f"need {self.nvars} images, got {len(images)}")
        if not images:
            return self
        target = images[0].nvars
        mons = []
        for img in images:
            if img.nvars != target:
                raise DimensionError("images must share a variable count")
            if not img.is_monomial():
                raise DomainError("substitution images must be nonzero monomials")
            mons.append(next(iter(img._terms.items())))
        out: dict[ExponentVector, Coefficient] = {}
        for exps, c in self._terms.items():
            new = [0] * target
            coeff = c
            for e, (mexps, mc) in zip(exps, mons):
                if e:
                    for j, me in enumerate(mexps):
                        new[j] += e * me
                    if mc != 1:
                        coeff = coeff * (Fraction(mc) ** e)
            k = tuple(new)
            out[k] = out.get(k, 0) + coeff
        return LaurentPolynomial._raw({k: _clean(c) for k, c in out.items() if c}, target)

    # -- comparison ---------------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, LaurentPolynomial):
            return self.nvars == other.nvars and self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            if not other:
                return not self._terms
            return self._terms == {(0,) * self.nvars: other}
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self._terms.items())))
        return self._hash

    # -- text ---------------------------------------------------------------

    def to_text(self) -> str:
        """Canonical serialisation: lex-sorted terms ``c * g1^e1 ... gn^en``."""
        if not self._terms:
            return "0"
        parts = []
        for exps, c in self.sorted_terms():
            mono = " ".join(f"g{i + 1}^{e}" for i, e in enumerate(exps))
            parts.append(f"{format_coefficient(c)} * {mono}" if mono else format_coefficient(c))
        return " + ".join(parts)

    def pretty(self, symbol: str = "g") -> str:
        """Compact human-readable form, e.g. ``1 + g2 - g2*g4``."""
        if not self._terms:
            return "0"
        out = []
        for exps, c in self.sorted_terms():
            factors = []
            for i, e in enumerate(exps):
                if e == 1:
                    factors.append(f"{symbol}{i + 1}")
                elif e:
                    factors.append(f"{symbol}{i + 1}^{e}")
            mono = "*".join(factors)
            c = _clean(c)
            neg = c < 0
            mag = format_coefficient(-c if neg else c)
            if mono:
                body = mono if mag == "1" else f"{mag}*{mono}"
            else:
                body = mag
            if not out:
                out.append(("-" if neg else "") + body)
            else:
                out.append((" - " if neg else " + ") + body)
        return "".join(out)

    def __str__(self) -> str:
        return self.pretty()

    def __repr__(self) -> str:
        return f"LaurentPolynomial({self.pretty()!r}, nvars={self.nvars})"


# -- exact division of ordinary polynomials ---------------------------------


def _divide_polynomial(a: dict, b: dict) -> dict | None:
    """Exact quotient a / b of polynomials (nonnegative exponents) over Q, or None."""
    if not b:
        raise DomainError("division by zero polynomial")
    lb = max(b, key=lex_key)
    cb = b[lb]
    rest = [(k, c) for k, c in b.items() if k != lb]
    r = dict(a)
    q: dict = {}
    while r:
        lr = max(r, key=lex_key)
        shift = tuple(x - y for x, y in zip(lr, lb))
        if any(s < 0 for s in shift):
            return None
        cr = r.pop(lr)
        if isinstance(cr, int) and isinstance(cb, int) and cr % cb == 0:
            f = cr // cb
        else:
            f = _clean(Fraction(cr) / cb)
        q[shift] = f
        for k, c in rest:
            kk = tuple(x + y for x, y in zip(k, shift))
            v = r.get(kk, 0) - f * c
            if v:
                r[kk] = v
            else:
                r.pop(kk, None)
    return q


# -- parsing ----------------------------------------------------------------

_FACTOR = re.compile(r"^(?:g|γ|gamma)(\d+)(?:\^\(?(-?\d+)\)?)?$")
_COEFF = re.compile(r"^\d+(?:/\d+)?$")


def parse_laurent(text: str, nvars: int) -> LaurentPolynomial:
    """Parse polynomial text in ``g1..gn``.

    Accepts the canonical form produced by :meth:`LaurentPolynomial.to_text`
    as well as the compact form (``-2*g1^3*g2^-1 + g4``).  Factors may be
    separated by ``*`` or whitespace.
    """
    s = text.strip()
    if not s:
        raise ValueError("empty polynomial text")
    # split into signed terms; a '-' right after '^' or '(' belongs to an exponent
    pieces = re.split(r"(?<![\^(])\s*([+-])\s*", s)
    signed: list[tuple[int, str]] = []
    sign = 1
    for i, piece in enumerate(pieces):
        if i % 2:
            sign = -sign if piece == "-" else sign
            continue
        if piece.strip():
            signed.append((sign, piece))
            sign = 1
        elif i == len(pieces) - 1:
            raise ValueError(f"dangling sign in {text!r}")
    out = LaurentPolynomial.zero(nvars)
    for sign, body in signed:
        body = body.strip()
        coeff: Coefficient = 1
        exps = [0] * nvars
        for factor in re.split(r"\s*\*\s*|\s+", body):
            if not factor:
                continue
            if _COEFF.match(factor):
                coeff = coeff * _clean(Fraction(factor))
                continue
            m = _FACTOR.match(factor)
            if not m:
                raise ValueError(f"bad factor {factor!r} in {text!r}")
            idx = int(m.group(1))
            if not 1 <= idx <= nvars:
                raise DimensionError(f"variable g{idx} out of range for {nvars} variables")
            exps[idx - 1] += int(m.group(2)) if m.group(2) is not None else 1
        term = LaurentPolynomial({tuple(exps): coeff}, nvars)
        out = out - term if sign < 0 else out + term
    return out
