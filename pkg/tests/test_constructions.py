import itertools

import numpy as np
import pytest

from gradiv.abgroups import AbelianGroup, GroupHom
from gradiv.constructions import (
    DimensionFunction,
    Presentation,
    building_block,
    catalog,
    catalog_labels,
    clifford_graded,
    endo_algebra,
    expected_invariants,
    from_presentation,
    pauli_for_group,
    pauli_grading,
)
from gradiv.errors import BadInput, InconsistentPresentation, NotSquareGroup
from gradiv.galgebra import (
    center,
    check_division_grading,
    commutation_data,
    identity_component,
    is_simple,
    regrade,
    underlying_type,
    validate,
)
from gradiv.labels import BLOCKS, ClassLabel
from gradiv.scalars import Scalar
from helpers import pauli_matrices, table_matches


def test_presentation_m2_8():
    P = Presentation(AbelianGroup((4, 2)), [(1, 0), (0, 1)], [4, 2], [-1, -1], {(0, 1): -1})
    R = from_presentation(P)
    assert R.dim == 8 and validate(R)
    assert underlying_type(R) == (2, "C")


def test_presentation_trivial_generator():
    R = from_presentation(Presentation(AbelianGroup((1,)), [(0,)], [1], [1]))
    assert R.dim == 1 and validate(R)


def test_presentation_m4_32():
    G = AbelianGroup((4, 2, 2, 2))
    degs = [tuple(int(i == j) for j in range(4)) for i in range(4)]
    comm = {(a, b): -1 for a, b in itertools.combinations(range(4), 2)}
    R = from_presentation(Presentation(G, degs, [4, 2, 2, 2], [-1] * 4, comm))
    assert R.dim == 32 and validate(R)
    assert underlying_type(R) == (4, "C")


@pytest.mark.parametrize("comm", [{(0, 1): Scalar.i()}, {(0, 1): -1, (1, 0): Scalar.i()}])
def test_presentation_inconsistent(comm):
    with pytest.raises(InconsistentPresentation):
        from_presentation(Presentation(AbelianGroup((2, 2)), [(1, 0), (0, 1)], [2, 2], [1, 1], comm))


def test_presentation_degree_order():
    with pytest.raises(InconsistentPresentation):
        from_presentation(Presentation(AbelianGroup((4,)), [(1,)], [2], [1]))


def test_presentation_merges_colliding_degrees():
    # both generators of degree a: components merge into a Z2 coarsening of C^gr(0,2)
    R = from_presentation(Presentation(AbelianGroup((2,)), [(1,), (1,)], [2, 2], [1, 1], {(0, 1): -1}))
    assert validate(R) and sorted(len(ix) for ix in R.components.values()) == [2, 2]


def test_clifford_examples():
    H = clifford_graded((2, 0))
    assert underlying_type(H) == (1, "H") and H.group == AbelianGroup((2, 2))
    assert clifford_graded((0, 0)).dim == 1
    M = clifford_graded((1, 1))
    assert underlying_type(M) == (2, "R")
    assert all(len(ix) == 1 for ix in M.components.values())


def _mod8_rule(p, m):
    k = (p + m) // 2
    return (2 ** k, "R") if (p - m) % 8 in (0, 6) else (2 ** (k - 1), "H")


@pytest.mark.parametrize("p,m", [(p, t - p) for t in range(0, 7, 2) for p in range(t + 1)])
def test_clifford_even_type(p, m):
    assert underlying_type(clifford_graded((p, m))) == _mod8_rule(p, m)


@pytest.mark.parametrize("p,m", [(p, t - p) for t in (1, 3, 5) for p in range(t + 1) if (p - (t - p)) % 4 == 1])
def test_clifford_odd_complex_center(p, m):
    R = clifford_graded((p, m))
    assert center(R).dim == 2
    assert underlying_type(R)[1] == "C"


def test_clifford_generators_square_and_anticommute():
    R = clifford_graded((2, 1))
    one = R.scalar(1)
    gens = [{g: one} for g in R.meta["generators"]]
    unit = R.unit_sparse
    squares = [R.mul_sparse(x, x) for x in gens]
    assert squares == [{k: -c for k, c in unit.items()}] * 2 + [unit]
    for x, y in itertools.combinations(gens, 2):
        assert R.mul_sparse(x, y) == {k: -c for k, c in R.mul_sparse(y, x).items()}


def test_building_block_examples():
    C2 = building_block("C2")
    assert C2.dim == 2 and len(C2.components) == 2
    H4 = building_block("H4")
    assert H4.group == AbelianGroup((2, 2)) and all(len(ix) == 1 for ix in H4.components.values())
    M = building_block("M4_4")
    assert M.group.order == 4 and all(len(ix) == 4 for ix in M.components.values())
    with pytest.raises(BadInput):
        building_block("M3")


@pytest.mark.parametrize("name", BLOCKS)
def test_blocks_are_division(name):
    R = building_block(name)
    assert validate(R)
    assert check_division_grading(R).is_division
    # C2 (x) C2 style non-simple products are not blocks; every block is simple
    assert is_simple(R)


def test_pauli_examples():
    P = pauli_grading((2,))
    re = identity_component(P)
    assert P.dim == 8 and re.dim == 2
    assert re.contains(P.unit_sparse) and re.contains(P.meta["complex_unit"])
    C = pauli_grading((1,))
    assert C.dim == 2 and C.group.order == 1 and underlying_type(C) == (1, "C")
    P3 = pauli_grading((3,))
    assert P3.dim == 18 and P3.conductor == 24


@pytest.mark.parametrize("h", [(2,), (3,), (4,), (2, 2), (2, 3)])
def test_pauli_matches_clock_shift_matrices(h):
    R = pauli_grading(h)
    assert table_matches(R, pauli_matrices(R, h))
    cd = commutation_data(R)
    assert cd.nonsingular and cd.bimultiplicative and cd.roots_of_unity


def test_pauli_for_group():
    assert pauli_for_group(AbelianGroup((2, 2))).dim == 8
    assert pauli_for_group(AbelianGroup((6, 6))).dim == 72
    with pytest.raises(NotSquareGroup):
        pauli_for_group(AbelianGroup((2, 4)))


def test_catalog_examples():
    R = catalog(ClassLabel("i", 1))
    M = building_block("M2_4")
    assert R.table == M.table and R.degrees == M.degrees
    R0 = catalog("type=i k=0")
    assert R0.dim == 1 and R0.group.order == 1
    X = catalog("type=xi k=0")
    assert X.dim == 8 and identity_component(X).dim == 4


def test_catalog_carries_expected_invariants():
    for L in catalog_labels(2, ((2,),)):
        R = catalog(L)
        assert R.meta["expected"] == expected_invariants(L)
        assert R.meta["expected"]["dim"] == R.dim


def test_label_text_round_trip():
    for L in catalog_labels(3) + [ClassLabel(b) for b in BLOCKS]:
        assert ClassLabel.parse(str(L)) == L
    with pytest.raises(BadInput):
        ClassLabel("ii", 0)
    with pytest.raises(BadInput):
        ClassLabel.parse("type=vii")


def _in_group(R, orders):
    G = AbelianGroup(orders)
    if R.group.order == 1:
        images = tuple(G.identity for _ in R.group.orders)
    else:
        images = tuple(tuple(int(i == j) for j in range(G.rank)) for i in range(R.group.rank))
    return regrade(R, GroupHom(R.group, G, images))


def test_endo_elementary_grading():
    D = _in_group(building_block("R"), (2,))
    M = endo_algebra(DimensionFunction(D, {(0,): 1, (1,): 1}))
    assert M.dim == 4 and validate(M)
    # E_ab at index a * 2 + b: diagonal in degree e, off-diagonal in degree a
    assert M.degrees == ((0,), (1,), (1,), (0,))
    units = [np.outer(np.eye(2)[a], np.eye(2)[b]).astype(complex) for a in range(2) for b in range(2)]
    assert table_matches(M, units)


def test_endo_over_c2():
    D = building_block("C2")
    M = endo_algebra(DimensionFunction(D, {(0,): 2}))
    assert M.dim == 8
    assert len(M.components[(0,)]) == 4
    assert underlying_type(M) == (2, "C")
    mats = [np.kron(np.outer(np.eye(2)[a], np.eye(2)[b]), d)
            for a in range(2) for b in range(2) for d in (np.eye(1), 1j * np.eye(1))]
    assert table_matches(M, mats)


def test_endo_single_coset_is_d():
    D = building_block("H4")
    M = endo_algebra(DimensionFunction(D, {(1, 0): 1}))
    assert M.table == D.table and M.degrees == D.degrees


def test_endo_empty_kappa():
    with pytest.raises(BadInput):
        endo_algebra(DimensionFunction(building_block("C2"), {(0,): 0}))


@pytest.mark.parametrize("name,orders,kappa", [
    ("C2", (2, 3), {(0, 0): 1, (0, 1): 2}),
    ("H4", (2, 2, 2), {(0, 0, 0): 1, (0, 0, 1): 1}),
    ("M2_2", (2, 2, 4), {(0, 0, 1): 1, (0, 0, 2): 1, (0, 0, 3): 1}),
])
def test_endo_dimension_counts(name, orders, kappa):
    D = _in_group(building_block(name), orders)
    M = endo_algebra(DimensionFunction(D, kappa))
    s = sum(kappa.values())
    assert M.dim == s * s * D.dim
    assert len(M.components[M.group.identity]) == identity_component(D).dim * sum(c * c for c in kappa.values())
    assert validate(M) and is_simple(M)
