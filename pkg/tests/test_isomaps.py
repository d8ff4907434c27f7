import pytest

from gradiv.classify import invariant_vector
from gradiv.constructions import building_block, clifford_graded, trivially_graded
from gradiv.errors import NotMonomial
from gradiv.galgebra import tensor_product
from gradiv.isomaps import (
    GradedMap,
    builtin_equivalences,
    extend_multiplicatively,
    identity_map,
    search_monomial_iso,
    verify_graded_map,
)
from gradiv.scalars import Scalar

EQUIVALENCES = builtin_equivalences()


def test_builtin_list():
    assert len(EQUIVALENCES) >= 5
    assert len({e.name for e in EQUIVALENCES}) == len(EQUIVALENCES)


@pytest.mark.parametrize("eq", EQUIVALENCES, ids=lambda e: e.name)
def test_builtin_verifies(eq):
    rep = verify_graded_map(eq.source, eq.target, eq.map)
    assert rep, str(rep)
    assert eq.map.alpha.is_isomorphism()
    assert invariant_vector(eq.source) == invariant_vector(eq.target)


def test_m4_32_map_keeps_order_four_generator():
    eq = next(e for e in EQUIVALENCES if e.source.name.startswith("M4_32"))
    alpha = eq.map.alpha
    G, H = alpha.domain, alpha.codomain
    assert G.element_order(G.gens()[0]) == 4
    assert H.element_order(alpha(G.gens()[0])) == 4


def test_identity_map():
    M = building_block("M2_4")
    assert verify_graded_map(M, M, identity_map(M))


def test_corrupted_map_fails_with_witness():
    eq = EQUIVALENCES[0]
    images = list(eq.map.images)
    k, c = next(iter(images[1].items()))
    images[1] = {**images[1], k: -c}
    rep = verify_graded_map(eq.source, eq.target, GradedMap(eq.map.alpha, tuple(images)))
    assert not rep
    assert rep.witness is not None


def test_non_homogeneous_map_fails():
    M = building_block("M2_4")
    f = identity_map(M)
    images = list(f.images)
    images[1] = {1: M.scalar(1), 2: M.scalar(1)}
    rep = verify_graded_map(M, M, GradedMap(f.alpha, tuple(images)))
    assert not rep and rep.witness == (1,)


def test_extend_multiplicatively_swaps_generators():
    # C^gr(0,2): A, B both square to I and anticommute, so A <-> B extends
    M = building_block("M2_4")
    A_, B_ = 2, 1
    f = extend_multiplicatively(M, M, [({A_: M.scalar(1)}, {B_: M.scalar(1)}),
                                      ({B_: M.scalar(1)}, {A_: M.scalar(1)})])
    assert verify_graded_map(M, M, f)
    assert f.images[3] == {3: M.scalar(-1)}  # AB -> BA = -AB


def test_search_examples():
    M = building_block("M2_4")
    f = search_monomial_iso(M, M)
    assert f is not None and verify_graded_map(M, M, f)
    A, B = clifford_graded((1, 1)), clifford_graded((0, 2))
    f = search_monomial_iso(A, B)
    assert f is not None and verify_graded_map(A, B, f)
    assert search_monomial_iso(building_block("H4"), M) is None


def test_search_tensor_squares():
    H4, M = building_block("H4"), building_block("M2_4")
    A, B = tensor_product(H4, H4), tensor_product(M, M)
    f = search_monomial_iso(A, B)
    assert f is not None and verify_graded_map(A, B, f)


def test_search_is_deterministic_across_jobs():
    A, B = clifford_graded((2, 1)), tensor_product(building_block("M2_4"), building_block("C2"))
    f1 = search_monomial_iso(A, B)
    f2 = search_monomial_iso(A, B)
    f4 = search_monomial_iso(A, B, jobs=4)
    assert f1 is not None
    assert f1.alpha.images == f2.alpha.images == f4.alpha.images
    assert f1.images == f2.images == f4.images


def test_search_ignores_non_real_scalars():
    A, B = clifford_graded((1, 1)), clifford_graded((0, 2))
    only_i = [Scalar.i()]
    assert search_monomial_iso(A, B, only_i) is None
    assert search_monomial_iso(A, B, [Scalar(1), Scalar(-1)]) is not None


def test_search_needs_frames():
    M = trivially_graded(building_block("M2_4"))
    with pytest.raises(NotMonomial):
        search_monomial_iso(M, M)


def test_search_different_groups():
    # same dimension, groups Z4 x Z2 and Z2^3
    A, B = building_block("M2_8"), clifford_graded((2, 1))
    assert A.dim == B.dim and not A.group.is_isomorphic(B.group)
    assert search_monomial_iso(A, B) is None
