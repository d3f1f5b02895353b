import pytest

from hfk_invariants import corpus
from hfk_invariants.cylinders import FreeEndomorphism, identity_cylinder, mapping_cylinder
from hfk_invariants.errors import NonIntegralHomologyError, NotHomologyCylinderError
from hfk_invariants.fox import AdmissiblePresentation, Word, internal, minus
from hfk_invariants.homology import (
    MonodromyMatrix,
    check_relations,
    exponent_sum_matrix,
    homological_monodromy,
    homology_classes,
    integer_det,
    rref,
)
from hfk_invariants.invariants import alexander_polynomial


@pytest.mark.parametrize("genus", [1, 2, 3])
def test_identity_cylinder_classes(genus):
    h = homology_classes(identity_cylinder(genus))
    for j in range(1, 2 * genus + 1):
        assert h[minus(j)] == tuple(int(k == j) for k in range(1, 2 * genus + 1))
    assert homological_monodromy(h).sigma == tuple(
        tuple(int(i == j) for j in range(2 * genus)) for i in range(2 * genus))


def test_0057_internal_classes():
    h = homology_classes(corpus.load("0057"))
    assert h[internal(1)] == (0, -2, 1, 0)
    assert h[internal(2)] == (-1, -2, 1, 0)
    assert h[internal(3)] == (-1, -2, 1, -1)
    assert h[internal(4)] == (0, -1, 0, -1)


def test_0057_monodromy_gives_table_polynomial():
    sigma = homological_monodromy(homology_classes(corpus.load("0057")))
    assert abs(sigma.det()) == 1
    assert alexander_polynomial(sigma).coefficients == (1, -2, 3, -2, 1)


def test_mapping_cylinder_classes_are_exponent_sums():
    phi = FreeEndomorphism.from_tokens(2, [["p1", "p2", "p2"], ["p2"], ["-p3", "p4", "p1"], ["p4", "-p2", "p2"]])
    h = homology_classes(mapping_cylinder(phi))
    ab = phi.abelianization()
    for j in range(4):
        assert h[minus(j + 1)] == tuple(ab[i][j] for i in range(4))


@pytest.mark.parametrize("name", corpus.NAMES)
def test_relations_abelianize_to_zero(name):
    p = corpus.load(name)
    assert check_relations(p, homology_classes(p)) == []


@pytest.mark.parametrize("name", corpus.NAMES)
def test_corpus_monodromy_unimodular(name):
    sigma = homological_monodromy(homology_classes(corpus.load(name)))
    assert sigma.det() in (1, -1)


def test_rref_pivots():
    m, piv = rref([[2, 4, 1], [1, 2, 0]])
    assert piv == [0, 2]
    assert m[0][:2] == [1, 2]


def test_exponent_sum_matrix_shape():
    p = corpus.load("trefoil")
    es = exponent_sum_matrix(p)
    assert len(es) == 5 and all(len(r) == 7 for r in es)
    assert es[0] == [0, 0, 1, 1, 1, 0, 0]


def test_non_integral_homology_rejected():
    # m1 z1^2 with z1 = p1: class of m1 would need a half in front of z1
    p = AdmissiblePresentation(1, 1, (Word.parse("z1 z1 -p1"), Word.parse("m1 -z1"), Word.parse("m2 -p2")))
    with pytest.raises(NonIntegralHomologyError):
        homology_classes(p)


def test_bad_pivot_shape_rejected():
    # m1 never appears with a nonzero exponent sum
    p = AdmissiblePresentation(1, 0, (Word.parse("m2 -p1"), Word.parse("m2 -p2")))
    with pytest.raises(NotHomologyCylinderError):
        homology_classes(p)


def test_non_unimodular_monodromy_rejected():
    phi = FreeEndomorphism.from_tokens(1, [["p1", "p1"], ["p2"]])
    with pytest.raises(NotHomologyCylinderError):
        mapping_cylinder(phi)


def test_integer_det():
    assert integer_det([[2, 1], [7, 4]]) == 1
    assert integer_det([[0, 1], [1, 0]]) == -1
    assert integer_det([[1, 2], [2, 4]]) == 0
    assert integer_det([]) == 1
    assert integer_det([[0, 2, 1], [3, 0, 0], [1, 1, 5]]) == -27


def test_monodromy_product():
    a = MonodromyMatrix(((1, 1), (0, 1)))
    b = MonodromyMatrix(((1, 0), (1, 1)))
    assert (a @ b).sigma == ((2, 1), (1, 1))
