"""Torsion, Magnus matrix, Alexander polynomial and the fibering obstructions.

Matrix orientation follows the Fox Jacobian convention used throughout: rows
are indexed by generators, columns by relations.  The torsion matrix is the
stack of the minus- and internal-generator blocks (A over B); the Magnus
matrix is ``-C (A; B)^-1 (I; 0)``.
"""

from __future__ import annotations

import enum
import functools
import logging
from dataclasses import dataclass, field
from fractions import Fraction

from .algebra import FieldMatrix, LaurentPolynomial, RationalFunction, mat_det, mat_solve, rf_make, specialize
from .algebra.laurent import lex_key
from .errors import NotHomologyCylinderError, SingularMatrixError
from .fox import AdmissiblePresentation, fox_derivative, validate
from .homology import HomologyAssignment, MonodromyMatrix, homological_monodromy, homology_classes

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class JacobianBlocks:
    A: FieldMatrix
    B: FieldMatrix
    C: FieldMatrix


@dataclass(frozen=True)
class NormalizedLaurent:
    """A Laurent polynomial split as ``unit * normal`` with unit = +-g^e."""

    unit: LaurentPolynomial
    normal: LaurentPolynomial

    def value(self) -> LaurentPolynomial:
        return self.unit * self.normal

    def is_trivial(self) -> bool:
        return self.normal.is_one()


@dataclass(frozen=True)
class AlexanderPolynomial:
    """Integer coefficients of t^0 .. t^d, constant term positive."""

    coefficients: tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def is_palindromic(self) -> bool:
        c = self.coefficients
        return c == c[::-1] or c == tuple(-x for x in c[::-1])

    def pretty(self, var: str = "t") -> str:
        parts = []
        for k, c in enumerate(self.coefficients):
            if not c:
                continue
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                mono = var if k == 1 else f"{var}^{k}"
                body = mono if mag == 1 else f"{mag}{mono}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        if not parts:
            return "0"
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __str__(self) -> str:
        return self.pretty()


class Verdict(str, enum.Enum):
    NOT_FIBERED = "NOT_FIBERED"
    CONSISTENT_WITH_FIBERED = "CONSISTENT_WITH_FIBERED"


@dataclass(frozen=True)
class FiberednessReport:
    torsion_trivial: bool
    magnus_integral: bool
    verdict: Verdict
    reasons: tuple[str, ...] = ()


@dataclass(frozen=True)
class InvariantReport:
    name: str | None
    genus: int
    internal_count: int
    homology: HomologyAssignment
    monodromy: MonodromyMatrix
    torsion_raw: LaurentPolynomial
    torsion: NormalizedLaurent
    magnus: FieldMatrix
    alexander: AlexanderPolynomial
    fiberedness: FiberednessReport
    warnings: tuple[str, ...] = field(default=())


# -- construction of the blocks ---------------------------------------------


def assemble_blocks(p: AdmissiblePresentation, h: HomologyAssignment) -> JacobianBlocks:
    """Entry (i, j) of each block is the Fox derivative of relation j by generator i."""
    n = 2 * p.genus

    def block(gens):
        return FieldMatrix(len(gens), len(p.relations),
                           [RationalFunction.from_poly(fox_derivative(rel, g, h))
                            for g in gens for rel in p.relations], n)

    return JacobianBlocks(block(p.minus_generators()), block(p.internal_generators()),
                          block(p.plus_generators()))


@functools.lru_cache(maxsize=64)
def _analysis(p: AdmissiblePresentation) -> tuple[HomologyAssignment, JacobianBlocks]:
    validate(p)
    h = homology_classes(p)
    return h, assemble_blocks(p, h)


def torsion_matrix(p: AdmissiblePresentation) -> FieldMatrix:
    """(A; B): rows minus then internal generators, columns relations."""
    _, blocks = _analysis(p)
    return blocks.A.vstack(blocks.B)


@functools.lru_cache(maxsize=64)
def _torsion_det(p: AdmissiblePresentation) -> LaurentPolynomial:
    d = mat_det(torsion_matrix(p))
    if d.is_zero():
        raise NotHomologyCylinderError(f"{p.name or 'presentation'}: torsion matrix is singular")
    if not d.is_polynomial():
        raise ArithmeticError("determinant of a Laurent matrix has a non-unit denominator")
    return d.num


def normalize_unit(f: LaurentPolynomial) -> NormalizedLaurent:
    """Split off the unit +-g^e so that the rest has minimal exponent 0 and
    a positive coefficient on its lex-smallest monomial."""
    if f.is_zero():
        raise ValueError("zero has no unit normalization")
    shift = f.min_exponents()
    normal = f.shift(tuple(-e for e in shift))
    _, c = normal.trailing_term()
    sign = 1 if c > 0 else -1
    if sign < 0:
        normal = -normal
    return NormalizedLaurent(LaurentPolynomial.monomial(shift, sign), normal)


def torsion_determinant(p: AdmissiblePresentation) -> NormalizedLaurent:
    return normalize_unit(_torsion_det(p))


@functools.lru_cache(maxsize=64)
def magnus_matrix(p: AdmissiblePresentation) -> FieldMatrix:
    """r = -C (A; B)^-1 (I_2g; 0)."""
    _, blocks = _analysis(p)
    tau = blocks.A.vstack(blocks.B)
    n = 2 * p.genus
    size = tau.rows
    one, zero = RationalFunction.one(n), RationalFunction.zero(n)
    selector = FieldMatrix(size, n, [one if i == j else zero for i in range(size) for j in range(n)], n)
    try:
        x = mat_solve(tau, selector)
    except SingularMatrixError as exc:
        raise NotHomologyCylinderError(f"{p.name or 'presentation'}: torsion matrix is singular") from exc
    return -(blocks.C @ x)


# -- abelian invariants -----------------------------------------------------


def _char_poly_matrix(sigma: MonodromyMatrix) -> FieldMatrix:
    n = sigma.size
    t = LaurentPolynomial.variable(1, 1)
    rows = [[(1 if i == j else 0) - t * sigma.sigma[i][j] for j in range(n)] for i in range(n)]
    return FieldMatrix.from_rows(rows, 1) if n else FieldMatrix(0, 0, [], 1)


def _det_one_minus_t_sigma(sigma: MonodromyMatrix) -> LaurentPolynomial:
    if sigma.size == 0:
        return LaurentPolynomial.one(1)
    return mat_det(_char_poly_matrix(sigma)).num


def alexander_polynomial(sigma: MonodromyMatrix) -> AlexanderPolynomial:
    """det(I - t sigma), divided by +-t^k so the constant term is positive."""
    d = _det_one_minus_t_sigma(sigma)
    lo = d.min_exponents()[0]
    hi = d.max_exponents()[0]
    coeffs = [int(d.terms.get((k,), 0)) for k in range(lo, hi + 1)]
    if coeffs[0] < 0:
        coeffs = [-c for c in coeffs]
    return AlexanderPolynomial(tuple(coeffs))


def abelian_exterior_torsion(sigma: MonodromyMatrix) -> RationalFunction:
    """det(I - t sigma) / (1 - t), reduced."""
    t = LaurentPolynomial.variable(1, 1)
    return rf_make(_det_one_minus_t_sigma(sigma), 1 - t)


# -- comparison and verdicts ------------------------------------------------


def equal_up_to_unit(f, g) -> bool:
    """True iff f = +-g^e * g for some exponent vector e."""
    f = _as_rf(f)
    g = _as_rf(g)
    if f.nvars != g.nvars:
        return False
    if f.is_zero() or g.is_zero():
        return f.is_zero() and g.is_zero()
    q = f / g
    return q.is_polynomial() and q.num.is_unit()


def _as_rf(x) -> RationalFunction:
    if isinstance(x, RationalFunction):
        return x
    if isinstance(x, NormalizedLaurent):
        return RationalFunction.from_poly(x.value())
    if isinstance(x, LaurentPolynomial):
        return RationalFunction.from_poly(x)
    raise TypeError(f"cannot compare {type(x).__name__}")


def magnus_is_integral(r: FieldMatrix) -> bool:
    return all(e.is_integral() for e in r.entries)


def fiberedness_report(p: AdmissiblePresentation) -> FiberednessReport:
    tau = torsion_determinant(p)
    r = magnus_matrix(p)
    torsion_trivial = tau.is_trivial()
    bad = [(i + 1, j + 1) for i in range(r.rows) for j in range(r.cols) if not r[i, j].is_integral()]
    magnus_integral = not bad
    reasons = []
    if not torsion_trivial:
        reasons.append(f"torsion is not a unit: normal part {tau.normal.pretty()}")
    if bad:
        i, j = bad[0]
        reasons.append(f"Magnus entry ({i},{j}) = {r[i - 1, j - 1].pretty()} is not in the group ring"
                       + (f" ({len(bad)} such entries)" if len(bad) > 1 else ""))
    verdict = Verdict.CONSISTENT_WITH_FIBERED if torsion_trivial and magnus_integral else Verdict.NOT_FIBERED
    return FiberednessReport(torsion_trivial, magnus_integral, verdict, tuple(reasons))


def augmentation(n: int) -> list[LaurentPolynomial]:
    """Images sending every variable to 1 (in a ring with one dummy variable)."""
    return [LaurentPolynomial.one(1)] * n


def integer_specialization(m: FieldMatrix) -> list[list[Fraction]]:
    """Entrywise value at g_j = 1 (raises PoleError if a denominator vanishes)."""
    images = augmentation(m.nvars)
    out = []
    for i in range(m.rows):
        row = []
        for j in range(m.cols):
            v = specialize(m[i, j], images)
            row.append(Fraction(v.num.constant_value()) / Fraction(v.den.constant_value()))
        out.append(row)
    return out


def compute_report(p: AdmissiblePresentation) -> InvariantReport:
    h, _ = _analysis(p)
    sigma = homological_monodromy(h)
    raw = _torsion_det(p)
    alex = alexander_polynomial(sigma)
    warnings = []
    if not alex.is_palindromic():
        warnings.append(f"Alexander polynomial {alex} is not palindromic")
        log.warning("%s: %s", p.name, warnings[-1])
    return InvariantReport(
        name=p.name,
        genus=p.genus,
        internal_count=p.internal_count,
        homology=h,
        monodromy=sigma,
        torsion_raw=raw,
        torsion=normalize_unit(raw),
        magnus=magnus_matrix(p),
        alexander=alex,
        fiberedness=fiberedness_report(p),
        warnings=tuple(warnings),
    )


__all__ = [
    "AlexanderPolynomial",
    "FiberednessReport",
    "InvariantReport",
    "JacobianBlocks",
    "NormalizedLaurent",
    "Verdict",
    "abelian_exterior_torsion",
    "alexander_polynomial",
    "assemble_blocks",
    "compute_report",
    "equal_up_to_unit",
    "fiberedness_report",
    "integer_specialization",
    "magnus_is_integral",
    "magnus_matrix",
    "normalize_unit",
    "torsion_determinant",
    "torsion_matrix",
]
