"""Multivariate polynomial gcd by recursive primitive remainder sequences.

The internal routines work on integer polynomials with nonnegative exponents
(``LaurentPolynomial`` instances whose exponents happen to be >= 0).  A
polynomial is viewed as univariate in its highest-index variable, with
coefficients in the ring of the remaining variables; contents are computed
recursively and the primitive PRS is run on the primitive parts.

Most gcds met in practice are trivial, and the PRS pays for recursive
content computations even then.  Two cheap reductions run first: a variable
present in only one operand can only occur in the gcd through that operand's
content, and a constant gcd of univariate images (other variables evaluated
at integers that keep both leading coefficients alive) proves the gcd has
degree 0 in the main variable.

:func:`poly_gcd` lifts this to the Laurent ring over Q, where monomials and
nonzero rationals are units.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as igcd

from ..errors import DomainError
from .laurent import LaurentPolynomial, lex_key

Univariate = list[LaurentPolynomial]


def integer_content(p: LaurentPolynomial) -> int:
    """gcd of the (integer) coefficients; 0 for the zero polynomial."""
    out = 0
    for _, c in p:
        out = igcd(out, int(c))
        if out == 1:
            break
    return out


def rational_content(p: LaurentPolynomial) -> Fraction:
    """Positive rational c such that p / c has coprime integer coefficients."""
    den = p.coefficient_denominator_lcm()
    scaled = p * den if den != 1 else p
    return Fraction(integer_content(scaled), den)


def _positive_leading(p: LaurentPolynomial) -> LaurentPolynomial:
    if p.is_zero():
        return p
    _, c = p.leading_term()
    return -p if c < 0 else p


def _main_variable(a: LaurentPolynomial, b: LaurentPolynomial) -> int:
    top = [max(x, y) for x, y in zip(a.max_exponents(), b.max_exponents())]
    for k in range(len(top) - 1, -1, -1):
        if top[k] > 0:
            return k
    return -1


def _to_univariate(p: LaurentPolynomial, k: int) -> Univariate:
    n = p.nvars
    buckets: dict[int, dict] = {}
    for exps, c in p:
        d = exps[k]
        buckets.setdefault(d, {})[exps[:k] + (0,) + exps[k + 1:]] = c
    deg = max(buckets)
    return [LaurentPolynomial._raw(buckets.get(d, {}), n) for d in range(deg + 1)]


def _from_univariate(coeffs: Univariate, k: int, n: int) -> LaurentPolynomial:
    out: dict = {}
    for d, c in enumerate(coeffs):
        for exps, v in c:
            out[exps[:k] + (exps[k] + d,) + exps[k + 1:]] = v
    return LaurentPolynomial._raw(out, n)


_EVAL_POINTS = (2, 3, 5, 7, 11, 13, 17, 19)


def _evaluate_except(p: LaurentPolynomial, k: int, point: tuple[int, ...]) -> list[Fraction]:
    """Univariate image in variable k, other variables set to point (dense, low degree first)."""
    out: dict[int, Fraction] = {}
    for exps, c in p:
        v = Fraction(c)
        for i, e in enumerate(exps):
            if i != k and e:
                v *= Fraction(point[i]) ** e
        out[exps[k]] = out.get(exps[k], 0) + v
    deg = max(out)
    return [out.get(d, Fraction(0)) for d in range(deg + 1)]


def _univariate_gcd_degree(a: list[Fraction], b: list[Fraction]) -> int:
    while b:
        inv = 1 / b[-1]
        while len(a) >= len(b):
            f = a[-1] * inv
            shift = len(a) - len(b)
            for i, c in enumerate(b):
                a[i + shift] -= f * c
            a.pop()
            while a and a[-1] == 0:
                a.pop()
        a, b = b, a
    return len(a) - 1


def _coprime_in(a: LaurentPolynomial, b: LaurentPolynomial, k: int) -> bool:
    """True only if gcd(a, b) certainly has degree 0 in variable k."""
    da, db = a.max_exponents()[k], b.max_exponents()[k]
    n = a.nvars
    for attempt in range(3):
        point = tuple(_EVAL_POINTS[(i + attempt) % len(_EVAL_POINTS)] for i in range(n))
        ia, ib = _evaluate_except(a, k, point), _evaluate_except(b, k, point)
        if len(ia) - 1 != da or len(ib) - 1 != db or ia[-1] == 0 or ib[-1] == 0:
            continue
        return _univariate_gcd_degree(ia, ib) == 0
    return False


def _variable_content(p: LaurentPolynomial, k: int) -> LaurentPolynomial:
    return _content(_to_univariate(p, k))


def _exact(a: LaurentPolynomial, b: LaurentPolynomial) -> LaurentPolynomial:
    q = a.exact_div(b)
    if q is None:
        raise ArithmeticError("internal error: inexact division in gcd")
    return q


def _content(coeffs: Univariate) -> LaurentPolynomial:
    nonzero = sorted((c for c in coeffs if c), key=len)
    g = nonzero[0]
    for c in nonzero[1:]:
        if g.is_constant() and abs(g.constant_value()) == 1:
            break
        g = _gcd(g, c)
    return _positive_leading(g)


def _primitive(coeffs: Univariate) -> Univariate:
    c = _content(coeffs)
    if c.is_one():
        return coeffs
    return [_exact(x, c) if x else x for x in coeffs]


def _prem(a: Univariate, b: Univariate) -> Univariate:
    """Pseudo-remainder of a by b, up to a factor lc(b)^e (irrelevant after taking primitive parts)."""
    db = len(b) - 1
    lb = b[-1]
    r = list(a)
    while r and len(r) - 1 >= db:
        lr = r[-1]
        d = len(r) - 1 - db
        r = [c * lb for c in r]
        for i, bc in enumerate(b):
            if bc:
                r[i + d] = r[i + d] - lr * bc
        while r and r[-1].is_zero():
            r.pop()
    return r


def _gcd(a: LaurentPolynomial, b: LaurentPolynomial) -> LaurentPolynomial:
    """Full gcd in Z[g1..gn] (monomial factors included), positive lex-leading coefficient."""
    if a.is_zero():
        return _positive_leading(b)
    if b.is_zero():
        return _positive_leading(a)
    ma, mb = a.min_exponents(), b.min_exponents()
    common = tuple(min(x, y) for x, y in zip(ma, mb))
    if any(ma):
        a = a.shift(tuple(-e for e in ma))
    if any(mb):
        b = b.shift(tuple(-e for e in mb))
    return _gcd_monomial_free(a, b).shift(common)


def _gcd_monomial_free(a: LaurentPolynomial, b: LaurentPolynomial) -> LaurentPolynomial:
    n = a.nvars
    if a.is_constant() or b.is_constant():
        return LaurentPolynomial.constant(igcd(integer_content(a), integer_content(b)), n)
    if a == b:
        return _positive_leading(a)
    ea, eb = a.max_exponents(), b.max_exponents()
    for k in range(n - 1, -1, -1):
        if ea[k] and not eb[k]:
            return _gcd(_variable_content(a, k), b)
        if eb[k] and not ea[k]:
            return _gcd(a, _variable_content(b, k))
    k = _main_variable(a, b)
    if _coprime_in(a, b, k):
        return _positive_leading(_gcd(_variable_content(a, k), _variable_content(b, k)))
    ua, ub = _to_univariate(a, k), _to_univariate(b, k)
    ca, cb = _content(ua), _content(ub)
    c = _gcd(ca, cb)
    pa = ua if ca.is_one() else [_exact(x, ca) if x else x for x in ua]
    pb = ub if cb.is_one() else [_exact(x, cb) if x else x for x in ub]
    if len(pa) < len(pb):
        pa, pb = pb, pa
    while True:
        r = _prem(pa, pb)
        if not r:
            g = pb
            break
        if len(r) == 1:
            g = [LaurentPolynomial.one(n)]
            break
        pa, pb = pb, _primitive(r)
    g = _primitive(g)
    return _positive_leading(_from_univariate(g, k, n) * c)


def laurent_normalize(p: LaurentPolynomial) -> LaurentPolynomial:
    """Associate of p with minimal exponent 0, coprime integer coefficients, positive lex-leading coefficient."""
    if p.is_zero():
        return p
    p = p.shift(tuple(-e for e in p.min_exponents()))
    c = rational_content(p)
    if c != 1:
        p = p * (1 / c)
    return _positive_leading(p)


def poly_gcd(a: LaurentPolynomial, b: LaurentPolynomial) -> LaurentPolynomial:
    """gcd in the Laurent ring Q[g1^+-1 .. gn^+-1], normalized as by :func:`laurent_normalize`."""
    if a.nvars != b.nvars:
        from ..errors import DimensionError
        raise DimensionError(f"variable count mismatch: {a.nvars} vs {b.nvars}")
    if a.is_zero() and b.is_zero():
        raise DomainError("gcd(0, 0) is undefined")
    if a.is_zero():
        return laurent_normalize(b)
    if b.is_zero():
        return laurent_normalize(a)
    if a.is_monomial() or b.is_monomial():
        return LaurentPolynomial.one(a.nvars)
    a, b = laurent_normalize(a), laurent_normalize(b)
    if a == b:
        return a
    if len(b) > len(a):
        a, b = b, a
    if a.exact_div(b) is not None:
        return b
    return laurent_normalize(_gcd(a, b))
