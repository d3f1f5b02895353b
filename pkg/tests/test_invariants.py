import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hfk_invariants import corpus
from hfk_invariants.algebra import (
    FieldMatrix,
    LaurentPolynomial,
    RationalFunction,
    mat_det,
    mat_inverse,
    parse_laurent,
    parse_rational_function,
    rf_make,
)
from hfk_invariants.cylinders import identity_cylinder
from hfk_invariants.fox import Word
from hfk_invariants.homology import MonodromyMatrix, homological_monodromy, homology_classes, integer_det
from hfk_invariants.invariants import (
    AlexanderPolynomial,
    Verdict,
    abelian_exterior_torsion,
    alexander_polynomial,
    assemble_blocks,
    compute_report,
    equal_up_to_unit,
    fiberedness_report,
    integer_specialization,
    magnus_matrix,
    normalize_unit,
    torsion_determinant,
    torsion_matrix,
)

# x_i of the simplified 0057 presentation in the basis of plus generators
X_IMAGES = [parse_laurent(s, 4) for s in ("g2^-2*g3", "g1^-1*g2^-2*g3", "g1^-1*g2^-2*g3*g4^-1", "g2^-1*g4^-1")]


def in_x(text):
    """Read a polynomial written in x1..x4 and rewrite it in the gammas."""
    return parse_laurent(text.replace("x", "g"), 4).substitute(X_IMAGES)


def L(text, n=4):
    return parse_laurent(text, n)


T = LaurentPolynomial.variable(1, 1)


def sigma_of(name):
    return homological_monodromy(homology_classes(corpus.load(name)))


# -- blocks and torsion --------------------------------------------------------


@pytest.mark.parametrize("genus", [1, 2])
def test_identity_cylinder_blocks(genus):
    p = identity_cylinder(genus)
    n = 2 * genus
    blocks = assemble_blocks(p, homology_classes(p))
    assert torsion_matrix(p) == FieldMatrix.identity(n, n)
    assert blocks.C == -FieldMatrix.identity(n, n)
    assert magnus_matrix(p) == FieldMatrix.identity(n, n)
    assert torsion_determinant(p).normal.is_one()


G2_IN_X = [
    ["-1", "0", "-x2*x3^-1*x4", "0"],
    ["x1^-1*x2", "x2", "x2 + x1^-1*x2^2*x3^-1*x4 + x1^-1*x2^3*x3^-2*x4 - x1^-1*x2^3*x3^-2*x4^2", "-x3"],
    ["0", "-x2", "-x2 - x1^-1*x2^2*x3^-1*x4", "x3"],
    ["0", "x2*x3^-1*x4", "x2*x3^-1*x4 + x1^-1*x2^3*x3^-2*x4^2", "0"],
]


def test_0057_block_shape():
    p = corpus.load("0057")
    blocks = assemble_blocks(p, homology_classes(p))
    n = 4
    a = blocks.A
    assert a.submatrix(range(4), range(4)) == FieldMatrix.identity(4, n)
    assert a.submatrix(range(4), range(4, 8)) == FieldMatrix.zeros(4, 4, n)
    assert blocks.C.submatrix(range(4), range(4)) == FieldMatrix.zeros(4, 4, n)
    assert blocks.C.submatrix(range(4), range(4, 8)) == FieldMatrix.identity(4, n)


def test_0057_second_block_matches_printed_entries():
    p = corpus.load("0057")
    b = assemble_blocks(p, homology_classes(p)).B
    for i, row in enumerate(G2_IN_X):
        for j, text in enumerate(row):
            assert b[i, 4 + j] == RationalFunction.from_poly(in_x(text)), (i + 1, j + 5)


def test_0057_determinant_in_both_variable_sets():
    p = corpus.load("0057")
    det_x = in_x("-x2^3*x4^2*x1^-1*x3^-2") * in_x("x2 - x3 - x2*x4")
    det_gamma = L("g1^-2*g2^-5*g3*g4^-1") * L("1 + g2 - g2*g4")
    computed = mat_det(torsion_matrix(p))
    assert computed == RationalFunction.from_poly(det_x)
    assert equal_up_to_unit(det_x, det_gamma)
    assert torsion_determinant(p).unit == L("g1^-2*g2^-5*g3*g4^-1")
    assert torsion_determinant(p).normal == L("1 + g2 - g2*g4")


def test_trefoil_torsion_is_a_unit():
    tau = torsion_determinant(corpus.load("trefoil"))
    assert tau.value() == L("g2^-1", 2)
    assert tau.is_trivial()


def test_0815_torsion():
    tau = torsion_determinant(corpus.load("0815"))
    assert equal_up_to_unit(tau, L("-g1^3*g2^5*g4^-6 + g1^2*g2^4*g4^-5 + g1^3*g2^5*g4^-5"))


def test_normalize_unit():
    nl = normalize_unit(L("-g1^-1*g2 + 2*g1^-1*g2^2 - g1*g2"))
    assert nl.unit == L("-g1^-1*g2")
    assert nl.normal == L("1 - 2*g2 + g1^2")
    assert nl.value() == L("-g1^-1*g2 + 2*g1^-1*g2^2 - g1*g2")


@pytest.mark.parametrize("name", corpus.NAMES)
def test_torsion_matrix_specializes_to_unimodular(name):
    m = integer_specialization(torsion_matrix(corpus.load(name)))
    assert all(x.denominator == 1 for row in m for x in row)
    assert integer_det([[int(x) for x in row] for row in m]) in (1, -1)


@pytest.mark.parametrize("name", corpus.NAMES)
def test_torsion_inverse_multiplies_back(name):
    m = torsion_matrix(corpus.load(name))
    assert mat_inverse(m) @ m == FieldMatrix.identity(m.rows, m.nvars)


@pytest.mark.parametrize("name", corpus.NAMES)
def test_magnus_is_invertible(name):
    assert not mat_det(magnus_matrix(corpus.load(name))).is_zero()


def test_magnus_trefoil():
    expected = FieldMatrix.from_rows(
        [[parse_rational_function(s, 2) for s in row] for row in corpus.TREFOIL_MAGNUS], 2)
    assert magnus_matrix(corpus.load("trefoil")) == expected


def test_magnus_0057_entry():
    r = magnus_matrix(corpus.load("0057"))
    assert r[0, 2] == rf_make(L("g4"), L("1 + g2 - g2*g4"))


# -- covariance on corpus entries ----------------------------------------------


@settings(max_examples=15)
@given(st.sampled_from(["trefoil", "0057", "0382"]), st.randoms(use_true_random=False))
def test_relation_permutation(name, rnd):
    p = corpus.load(name)
    rels = list(p.relations)
    rnd.shuffle(rels)
    q = p.with_relations(rels)
    assert torsion_determinant(q).normal == torsion_determinant(p).normal
    assert magnus_matrix(q) == magnus_matrix(p)


@settings(max_examples=15)
@given(st.sampled_from(["trefoil", "0057", "0394"]), st.randoms(use_true_random=False), st.data())
def test_relation_conjugation(name, rnd, data):
    p = corpus.load(name)
    tokens = [g.token for g in p.generators()]
    w = Word.from_tokens(data.draw(st.lists(st.sampled_from(tokens + ["-" + t for t in tokens]), max_size=3)))
    rels = list(p.relations)
    k = rnd.randrange(len(rels))
    rels[k] = rels[k].conjugate(w)
    q = p.with_relations(rels)
    assert equal_up_to_unit(torsion_determinant(q), torsion_determinant(p))
    assert magnus_matrix(q) == magnus_matrix(p)


# -- abelian invariants --------------------------------------------------------


def test_alexander_of_identity():
    assert alexander_polynomial(MonodromyMatrix(((1, 0), (0, 1)))).coefficients == (1, -2, 1)


def test_alexander_of_empty_sigma():
    assert alexander_polynomial(MonodromyMatrix(())).coefficients == (1,)


def test_alexander_0057_and_0535():
    assert alexander_polynomial(sigma_of("0057")).coefficients == (1, -2, 3, -2, 1)
    assert alexander_polynomial(sigma_of("0535")).coefficients == (1, -7, 11, -7, 1)


def test_alexander_pretty():
    assert str(AlexanderPolynomial((1, -2, 3, -2, 1))) == "1 - 2t + 3t^2 - 2t^3 + t^4"
    assert AlexanderPolynomial((1, 0, -1)).pretty() == "1 - t^2"


def test_alexander_palindrome_check():
    assert AlexanderPolynomial((1, -3, 1)).is_palindromic()
    assert AlexanderPolynomial((1, 0, -1)).is_palindromic()
    assert not AlexanderPolynomial((1, 2, 3)).is_palindromic()


def test_exterior_torsion_identity():
    assert abelian_exterior_torsion(MonodromyMatrix(((1, 0), (0, 1)))) == RationalFunction.from_poly(1 - T)


def test_exterior_torsion_0057():
    expected = rf_make(parse_laurent("1 - 2*g1 + 3*g1^2 - 2*g1^3 + g1^4", 1), 1 - T)
    assert equal_up_to_unit(abelian_exterior_torsion(sigma_of("0057")), expected)


def test_exterior_torsion_empty():
    assert abelian_exterior_torsion(MonodromyMatrix(())) == rf_make(LaurentPolynomial.one(1), 1 - T)


# -- comparison and verdicts ---------------------------------------------------


def test_equal_up_to_unit_examples():
    f = L("1 + g2 - g2*g4")
    assert equal_up_to_unit(f, L("g1^-2*g2^-5*g3*g4^-1") * f)
    assert equal_up_to_unit(f, -f)
    assert not equal_up_to_unit(L("1 + g1"), L("1 + g2"))
    assert not equal_up_to_unit(f, f * 2)
    assert not equal_up_to_unit(L("1 + g2"), L("1 + g2", 2))


def test_equal_up_to_unit_rational():
    f = rf_make(L("g4"), L("1 + g2 - g2*g4"))
    assert equal_up_to_unit(f, rf_make(L("-g2"), L("g2^-1 + 1 - g4")))


def test_verdict_trefoil():
    v = fiberedness_report(corpus.load("trefoil"))
    assert (v.torsion_trivial, v.magnus_integral, v.verdict) == (True, True, Verdict.CONSISTENT_WITH_FIBERED)
    assert v.reasons == ()


def test_verdict_0057():
    v = fiberedness_report(corpus.load("0057"))
    assert (v.torsion_trivial, v.magnus_integral, v.verdict) == (False, False, Verdict.NOT_FIBERED)
    assert len(v.reasons) == 2


def test_report_identity_cylinder_has_no_warnings():
    r = compute_report(identity_cylinder(2))
    assert r.warnings == ()
    assert r.alexander.coefficients == (1, -4, 6, -4, 1)


def test_integer_specialization_pole():
    from hfk_invariants.errors import PoleError
    m = FieldMatrix.from_rows([[rf_make(LaurentPolynomial.one(1), 1 - T)]], 1)
    with pytest.raises(PoleError):
        integer_specialization(m)


def test_integer_specialization_values():
    m = FieldMatrix.from_rows([[rf_make(L("3 + g1", 2), L("1 + g2", 2))]], 2)
    assert integer_specialization(m) == [[Fraction(2)]]


def test_random_sigma_alexander_matches_char_poly():
    rng = random.Random(7)
    for _ in range(20):
        m = [[rng.randint(-3, 3) for _ in range(3)] for _ in range(3)]
        d = integer_det(m)
        if abs(d) != 1:
            continue
        # det(I - t s) = 1 - tr(s) t + c2 t^2 - det(s) t^3
        tr = sum(m[i][i] for i in range(3))
        c2 = sum(m[i][i] * m[j][j] - m[i][j] * m[j][i] for i in range(3) for j in range(i + 1, 3))
        coeffs = [1, -tr, c2, -d]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        got = alexander_polynomial(MonodromyMatrix(tuple(map(tuple, m)))).coefficients
        assert got == tuple(coeffs)
