import pytest
from hypothesis import given, settings

from hnlie.catalog import CATALOG, get_case
from hnlie.exact import Matrix4, Vector4
from hnlie.hnstruct import (
    Metric,
    associated_tensors,
    check_compatibility,
    check_quaternionic,
    is_abelian_structure,
    is_hypercomplex,
    nijenhuis,
    standard_structure,
)
from hnlie.liealg import LieAlgebra
from hnlie.oracle import nijenhuis_oracle
from strategies import lie_algebras

e = Vector4.basis
H = standard_structure()
J1, J2, J3 = H.J
HEIS_R = LieAlgebra.from_brackets({(1, 2): {3: 1}})


def test_standard_structure_values():
    assert J1 @ e(2) == -e(3)
    assert (J2 @ J3) @ e(0) == J1 @ e(0) == e(1)
    assert H.g(e(2), e(2)) == -1
    assert H.J_alpha(3) is J3


@pytest.mark.parametrize(
    "images",
    [
        (J1, [e(1), -e(0), -e(3), e(2)]),
        (J2, [e(2), e(3), -e(0), -e(1)]),
        (J3, [-e(3), e(2), -e(1), e(0)]),
    ],
)
def test_standard_matrices_match_their_images(images):
    J, cols = images
    assert [J.column(i) for i in range(4)] == cols


def test_quaternionic_checks():
    assert check_quaternionic(H.J).ok
    assert J1 @ J1 == -Matrix4.identity()
    swapped = check_quaternionic((J1, J3, J2))
    assert not swapped.ok
    assert "J1 != J2 J3" in swapped.failures


def test_compatibility():
    assert check_compatibility(H).ok
    riem = standard_structure(Metric.diagonal(1, 1, 1, 1))
    res = check_compatibility(riem)
    assert not res.ok
    assert any(f.startswith("alpha=2 at (e1,e1)") for f in res.failures)
    assert H.g(J1 @ e(0), J1 @ e(1)) == H.g(e(0), e(1)) == 0


def test_metric_signature_and_degeneracy():
    assert H.g.signature() == (2, 2)
    from hnlie.exact import DegenerateError

    with pytest.raises(DegenerateError):
        Metric.diagonal(1, 1, 0, -1)
    with pytest.raises(ValueError):
        Metric(Matrix4([[1, 1, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]]))


def test_associated_tensors():
    g1, g2, g3 = associated_tensors(H)
    assert g1.matrix[0][1] == 1
    assert g2.matrix[0][0] == 0
    assert g3.matrix[3][3] == 0
    assert g1.matrix.is_antisymmetric()
    for gt in (g2, g3):
        assert gt.matrix.is_symmetric()
        assert Metric(gt.matrix).signature() == (2, 2)
    # g_a(x, y) = -eps_a g(x, J_a y)
    for gt, J, eps in zip((g1, g2, g3), H.J, H.eps):
        for i in range(4):
            for j in range(4):
                assert gt.matrix[i][j] == -eps * H.g(e(i), J @ e(j))


def test_nijenhuis_examples():
    for J in H.J:
        assert nijenhuis(LieAlgebra.abelian(), J).is_zero()
        assert nijenhuis(get_case("hc2a").algebra, J).is_zero()
    # J1 preserves span(e1, e2), so J1 is integrable here; J2 is not.
    assert nijenhuis(HEIS_R, J1).is_zero()
    N2 = nijenhuis(HEIS_R, J2)
    assert N2.vector(0, 1) == -e(2)
    ref = nijenhuis_oracle(HEIS_R, J2)
    assert all(list(N2.vector(i, j)) == ref[i, j] for i in range(4) for j in range(4))


def test_is_hypercomplex():
    assert is_hypercomplex(get_case("hc3a").algebra, H)
    assert is_hypercomplex(LieAlgebra.abelian(), H)
    res = is_hypercomplex(HEIS_R, H)
    assert not res
    assert res.witness == (2, 1, 2, -e(2))


def test_is_abelian_structure():
    assert is_abelian_structure(LieAlgebra.abelian(), H)
    assert is_abelian_structure(get_case("hc3a").algebra, H)
    hc2a = get_case("hc2a").algebra
    assert hc2a.bracket(J1 @ e(1), J1 @ e(3)).is_zero()
    assert hc2a.bracket(e(1), e(3)) == e(2)
    assert not is_abelian_structure(hc2a, H)


def test_every_catalog_case_is_integrable():
    for case in CATALOG.values():
        assert is_hypercomplex(case.algebra, H), case.name


@settings(max_examples=60)
@given(lie_algebras())
def test_nijenhuis_antisymmetric_and_abelian_implies_integrable(alg):
    for J in H.J:
        N = nijenhuis(alg, J)
        for i in range(4):
            for j in range(4):
                assert N.vector(i, j) == -N.vector(j, i)
    if is_abelian_structure(alg, H):
        assert is_hypercomplex(alg, H)
