"""Acceptance suite: one group of tests per criterion.

Each test carries ``@pytest.mark.criterion(n)``; the conftest prints one
PASS/FAIL line per criterion at the end of the run.
"""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hfk_invariants import corpus
from hfk_invariants.algebra import FieldMatrix, LaurentPolynomial, RationalFunction, mat_det, parse_laurent, rf_make
from hfk_invariants.cylinders import compose, identity_cylinder, mapping_cylinder
from hfk_invariants.fox import Word, abelianize, fox_derivative
from hfk_invariants.homology import MonodromyMatrix, homological_monodromy, homology_classes, integer_det
from hfk_invariants.invariants import (
    Verdict,
    alexander_polynomial,
    equal_up_to_unit,
    fiberedness_report,
    integer_specialization,
    magnus_matrix,
    torsion_determinant,
    torsion_matrix,
)
from strategies import GENERATORS, automorphisms, classes, nonzero_rational, rational, sparse_matrices, words

PROPERTY = settings(max_examples=1000)

TABLE = {
    "0057": (1, -2, 3, -2, 1),
    "0210": (1, -1, -1, 3, -1, -1, 1),
    "0214": (1, -1, -1, 3, -1, -1, 1),
    "0258": (1, -4, 5, -4, 1),
    "0279": (1, -6, 11, -6, 1),
    "0382": (1, -5, 7, -5, 1),
    "0394": (1, -6, 11, -6, 1),
    "0464": (1, -4, 5, -4, 1),
    "0483": (1, -4, 5, -4, 1),
    "0535": (1, -7, 11, -7, 1),
    "0650": (1, -4, 7, -4, 1),
    "0801": (1, -5, 7, -5, 1),
    "0815": (1, -2, 1, -2, 1),
}


def sigma(name_or_p):
    p = corpus.load(name_or_p) if isinstance(name_or_p, str) else name_or_p
    return homological_monodromy(homology_classes(p))


def trefoil_magnus():
    return FieldMatrix.from_rows(
        [[rf_make(parse_laurent(a, 2), LaurentPolynomial.one(2)) for a in row] for row in
         (("1", "g2^-1"), ("-g1^-1*g2", "1 - g1^-1"))], 2)


# -- 1 ---------------------------------------------------------------------


@pytest.mark.criterion(1)
@pytest.mark.parametrize("name", corpus.KNOTS)
def test_torsion_golden(name):
    p = corpus.load(name)
    published = parse_laurent(corpus.GOLDEN[name].torsion, 2 * p.genus)
    assert equal_up_to_unit(torsion_determinant(p), published)


@pytest.mark.criterion(1)
def test_torsion_0057_exact_representative():
    tau = torsion_determinant(corpus.load("0057"))
    assert tau.value() == parse_laurent("g1^-2*g2^-5*g3*g4^-1", 4) * parse_laurent("1 + g2 - g2*g4", 4)


# -- 2 ---------------------------------------------------------------------


@pytest.mark.criterion(2)
def test_magnus_0057_entry():
    r = magnus_matrix(corpus.load("0057"))
    assert r[0, 2] == rf_make(parse_laurent("g4", 4), parse_laurent("1 + g2 - g2*g4", 4))


@pytest.mark.criterion(2)
@pytest.mark.parametrize("name", ["trefoil", "concordant_K"])
def test_magnus_trefoil_matrix(name):
    assert magnus_matrix(corpus.load(name)) == trefoil_magnus()


# -- 3 ---------------------------------------------------------------------


@pytest.mark.criterion(3)
@pytest.mark.parametrize("name", sorted(TABLE))
def test_alexander_table(name):
    assert alexander_polynomial(sigma(name)).coefficients == TABLE[name]


@pytest.mark.criterion(3)
def test_alexander_trefoil():
    assert alexander_polynomial(sigma("trefoil")).coefficients == (1, -1, 1)


# -- 4 ---------------------------------------------------------------------


@pytest.mark.criterion(4)
@pytest.mark.parametrize("name", corpus.KNOTS)
def test_knots_not_fibered(name):
    v = fiberedness_report(corpus.load(name))
    assert v.verdict is Verdict.NOT_FIBERED
    assert v.torsion_trivial is False


@pytest.mark.criterion(4)
def test_0057_both_obstructions():
    v = fiberedness_report(corpus.load("0057"))
    assert not v.torsion_trivial and not v.magnus_integral


@pytest.mark.criterion(4)
@pytest.mark.parametrize("name", ["trefoil", "identity2"])
def test_fibered_cylinders(name):
    assert fiberedness_report(corpus.load(name)).verdict is Verdict.CONSISTENT_WITH_FIBERED


# -- 5 ---------------------------------------------------------------------


@pytest.mark.criterion(5)
def test_concordance_instance():
    k, t = corpus.load("concordant_K"), corpus.load("trefoil")
    assert magnus_matrix(k) == magnus_matrix(t)
    tau_k, tau_t = torsion_determinant(k), torsion_determinant(t)
    assert not equal_up_to_unit(tau_k, tau_t)
    assert len(tau_k.normal) == 7
    assert tau_t.normal.is_one()


# -- 6 ---------------------------------------------------------------------


@pytest.mark.criterion(6)
@pytest.mark.parametrize("name", corpus.NAMES)
def test_homology_product(name):
    p = corpus.load(name)
    m = integer_specialization(torsion_matrix(p))
    assert integer_det([[int(x) for x in row] for row in m]) in (1, -1)
    assert sigma(p).det() in (1, -1)


@pytest.mark.criterion(6)
@pytest.mark.parametrize("name", sorted(TABLE))
def test_palindromic(name):
    alex = alexander_polynomial(sigma(name))
    assert alex.is_palindromic()


# -- 7 ---------------------------------------------------------------------


@pytest.mark.criterion(7)
@pytest.mark.parametrize("name", corpus.NAMES)
def test_magnus_at_one_is_monodromy(name):
    p = corpus.load(name)
    assert integer_specialization(magnus_matrix(p)) == [list(r) for r in sigma(p).sigma]


# -- 8 ---------------------------------------------------------------------


@pytest.mark.criterion(8)
@PROPERTY
@given(rational(), rational(), rational())
def test_field_associativity_distributivity(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@pytest.mark.criterion(8)
@PROPERTY
@given(nonzero_rational(), rational())
def test_field_inverses(a, b):
    one = RationalFunction.one(a.nvars)
    assert a * a.inverse() == one
    assert b + (-b) == RationalFunction.zero(a.nvars)
    assert (b / a) * a == b


@pytest.mark.criterion(8)
@PROPERTY
@given(rational())
def test_reduction_idempotence(f):
    assert rf_make(f.num, f.den) == f
    again = rf_make(f.num, f.den)
    assert again.num.terms == f.num.terms and again.den.terms == f.den.terms


def inv_ab(w, h):
    return LaurentPolynomial.monomial(tuple(-e for e in abelianize(w, h)))


@pytest.mark.criterion(8)
@PROPERTY
@given(words(), words(), classes(), st.sampled_from(GENERATORS))
def test_fox_product_rule(u, v, h, x):
    assert fox_derivative(u * v, x, h) == fox_derivative(u, x, h) + inv_ab(u, h) * fox_derivative(v, x, h)


@pytest.mark.criterion(8)
@PROPERTY
@given(words(max_size=12), classes())
def test_fox_fundamental_identity(w, h):
    total = LaurentPolynomial.zero(2)
    for x in GENERATORS:
        total = total + fox_derivative(w, x, h) * (inv_ab(Word.of(x), h) - 1)
    assert total == inv_ab(w, h) - 1


def _invariants(p):
    return torsion_determinant(p).normal, magnus_matrix(p), sigma(p)


@pytest.mark.criterion(8)
@PROPERTY
@given(st.integers(1, 2).flatmap(lambda g: automorphisms(genus=g)))
def test_monoid_unit_laws(phi):
    p = mapping_cylinder(phi)
    e = identity_cylinder(phi.genus)
    base = _invariants(p)
    assert _invariants(compose(e, p)) == base
    assert _invariants(compose(p, e)) == base


@pytest.mark.criterion(8)
@PROPERTY
@given(st.integers(1, 2).flatmap(lambda g: st.tuples(automorphisms(genus=g), automorphisms(genus=g))))
def test_monodromy_multiplicativity(pair):
    phi, psi = pair
    a, b = mapping_cylinder(phi), mapping_cylinder(psi)
    assert sigma(compose(a, b)) == sigma(a) @ sigma(b)


def cofactor_det(rows):
    """Laplace expansion along the first row, in plain ring arithmetic."""
    n = len(rows)
    if n == 0:
        return RationalFunction.one(2)
    if n == 1:
        return rows[0][0]
    total = RationalFunction.zero(2)
    for j in range(n):
        if rows[0][j].is_zero():
            continue
        minor = [r[:j] + r[j + 1:] for r in rows[1:]]
        term = rows[0][j] * cofactor_det(minor)
        total = total + term if j % 2 == 0 else total - term
    return total


@pytest.mark.criterion(8)
@PROPERTY
@given(sparse_matrices(max_size=4))
def test_det_matches_cofactor_oracle(m):
    d = mat_det(m)
    assert d == cofactor_det(m.to_rows())
    assert d.den.is_one()


@pytest.mark.criterion(8)
def test_integer_monodromy_product_oracle():
    a = MonodromyMatrix(((1, 1), (-1, 0)))
    assert (a @ a).sigma == ((0, 1), (-1, -1))
