import warnings

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gradiv.abgroups import AbelianGroup, GroupHom, quotient_by
from gradiv.constructions import building_block, catalog, clifford_graded, pauli_grading, trivially_graded
from gradiv.errors import BadInput, NotDivisionCompatible, NotMonomial, NotSemisimple
from gradiv.galgebra import (
    center,
    centralizer,
    check_division_grading,
    coarsen,
    commutation_data,
    graded_subalgebra,
    identity_component,
    is_simple,
    make_algebra,
    multiply,
    recognize_division,
    support_group,
    tensor_product,
    trace_form_signature,
    underlying_type,
    universal_grading_group,
    validate,
)
from gradiv.scalars import Scalar
from helpers import OMEGA, QI, QJ, A, B, monomials, table_matches

# M2_4 basis: I, B, A, C; H4 basis: 1, j, i, k; M2_8 basis: x1^a x2^b at 2a + b
I_, B_, A_, C_ = 0, 1, 2, 3


def vec(R, **coeffs):
    return R.to_dense({int(k[1:]): R.scalar(c) for k, c in coeffs.items()})


def e(R, i):
    return R.basis_vector(i)


def nilpotent():
    """Dual numbers R[t]/(t^2), trivially graded: the degenerate-trace control."""
    G = AbelianGroup((1,))
    table = [[[(0, 1)], [(1, 1)]], [[(1, 1)], []]]
    return make_algebra(G, [(0,), (0,)], [1, 0], table, meta={"name": "dual numbers"})


def test_structure_constants_match_matrices():
    assert table_matches(building_block("M2_4"), monomials([A, B], [2, 2]))
    assert table_matches(building_block("H4"), monomials([QI, QJ], [2, 2]))
    assert table_matches(building_block("M2_8"), monomials([OMEGA * A, QJ], [4, 2]))


def test_multiply_examples():
    R = building_block("M2_4")
    assert multiply(R, e(R, A_), e(R, B_)) == e(R, C_)
    x = vec(R, b1=3, b2=-1, b3=Scalar(1) / 2)
    assert multiply(R, R.to_dense(R.unit_sparse), x) == x
    M = building_block("M2_8")
    sq = multiply(M, e(M, 2), e(M, 2))
    assert sq == e(M, 4)
    assert M.degrees[4] == (2, 0)
    # u_alpha^2 behaves like iI: central with square -I
    assert multiply(M, sq, sq) == [-c for c in M.to_dense(M.unit_sparse)]
    assert all(multiply(M, sq, e(M, j)) == multiply(M, e(M, j), sq) for j in range(M.dim))


def test_multiply_rejects_bad_lengths():
    R = building_block("M2_4")
    with pytest.raises(BadInput):
        multiply(R, [1, 0], e(R, 0))


def test_validate_examples():
    assert validate(clifford_graded((1, 1)))
    assert validate(building_block("M4_32"))


def test_validate_corrupted_constant():
    R = building_block("M2_4")
    table = [list(row) for row in R.table]
    (k, c), = table[0][1]
    table[0][1] = ((k, -c),)
    bad = make_algebra(R.group, R.degrees, R.unit, table)
    rep = validate(bad)
    assert not rep
    assert rep.witness is not None and len(rep.witness) >= 1


def test_validate_corrupted_associativity():
    R = building_block("M2_4")
    table = [list(row) for row in R.table]
    (k, c), = table[A_][B_]
    table[A_][B_] = ((k, -c),)  # AB = -C while BA = -C too
    bad = make_algebra(R.group, R.degrees, R.unit, table)
    rep = validate(bad)
    assert not rep
    assert len(rep.witness) == 3
    assert any("associativity" in f for f in rep.failures)


def test_validate_grading_violation():
    R = building_block("M2_4")
    degrees = list(R.degrees)
    degrees[C_] = (0, 0)
    rep = validate(make_algebra(R.group, degrees, R.unit, R.table))
    assert not rep and "grading" in rep.failures[0]


def test_identity_component_examples():
    assert identity_component(building_block("M2_4")).dim == 1
    re = identity_component(building_block("M2_2"))
    assert re.dim == 2
    assert re.contains({I_: Scalar(1)}) and re.contains({C_: Scalar(1)})
    assert identity_component(building_block("M4_4")).dim == 4


def test_identity_component_warns_on_unequal_dims():
    M = building_block("M2_4")
    # coarsening onto Z2 by alpha keeps only the alpha-exponent: components {I, B} and {A, C}
    hom = GroupHom(M.group, AbelianGroup((2,)), ((1,), (0,)))
    assert identity_component(coarsen(M, hom)).dim == 2
    lopsided = make_algebra(AbelianGroup((2,)), [(0,), (0,), (0,), (1,)], M.unit, M.table)
    with pytest.warns(NotDivisionCompatible):
        identity_component(lopsided)


def test_center_examples():
    Z = center(building_block("M2_4"))
    assert Z.dim == 1 and Z.contains({0: Scalar(1)})
    P = pauli_grading((2,))
    Z = center(P)
    assert Z.dim == 2
    assert all(P.degree_of(z) == P.group.identity for z in Z.basis)


def test_centralizer_of_identity_component():
    R = building_block("M4_4")
    S = centralizer(R, identity_component(R))
    assert S.dim == 4 and S.dim * 4 == R.dim
    rep = check_division_grading(S.to_algebra())
    assert rep.is_division and rep.re_dim == 1


def test_trace_form_examples():
    assert trace_form_signature(building_block("H")) == (-2, True)
    assert trace_form_signature(building_block("M2_4")) == (2, True)
    assert trace_form_signature(building_block("C")) == (0, True)


def test_trace_form_degenerate_for_nilpotent():
    sig, nondeg = trace_form_signature(nilpotent())
    assert not nondeg
    with pytest.raises(NotSemisimple):
        underlying_type(nilpotent())
    assert not is_simple(nilpotent())


def test_trace_form_gram_matches_numeric():
    # B(x, y) = sum_k c_k Tr(L_k) where xy = sum_k c_k b_k; diagonalised in floating point
    R = catalog("type=v k=1")
    n = R.dim
    traces = [sum(c.to_complex().real for j in range(n) for k, c in R.table[i][j] if k == j) for i in range(n)]
    gram = np.array([[sum(traces[k] * c.to_complex().real for k, c in R.table[x][y]) for y in range(n)]
                     for x in range(n)])
    ev = np.linalg.eigvalsh(gram)
    sig = int((ev > 1e-9).sum() - (ev < -1e-9).sum())
    assert trace_form_signature(R) == (sig, bool((abs(ev) > 1e-9).all()))


def test_recognize_division_examples():
    M = building_block("M2_4")
    assert recognize_division(identity_component(M)) == "R"
    assert recognize_division(graded_subalgebra(M, [e(M, C_)])) == "C"
    assert recognize_division(graded_subalgebra(M, [e(M, A_)])) == "none"
    assert recognize_division(building_block("H")) == "H"
    assert recognize_division(trivially_graded(M)) == "none"


def test_check_division_examples():
    rep = check_division_grading(building_block("M2_4"))
    assert (rep.is_division, rep.re_dim, rep.re_type) == (True, 1, "R")
    rep = check_division_grading(trivially_graded(building_block("M2_4")))
    assert (rep.is_division, rep.re_dim, rep.re_type) == (False, 4, "none")
    C2 = building_block("C2")
    rep = check_division_grading(tensor_product(C2, C2))
    assert (rep.is_division, rep.re_dim, rep.re_type) == (True, 1, "R")
    assert not is_simple(tensor_product(C2, C2))


def test_underlying_type_examples():
    assert underlying_type(clifford_graded((1, 1))) == (2, "R")
    assert underlying_type(clifford_graded((2, 0))) == (1, "H")
    assert underlying_type(clifford_graded((2, 1))) == (2, "C")


def test_tensor_examples():
    T = tensor_product(building_block("H4"), building_block("C2"))
    assert T.dim == 8 and T.group.is_isomorphic(AbelianGroup((2, 2, 2)))
    assert check_division_grading(T).is_division
    M = building_block("M2_4")
    T = tensor_product(M, building_block("R"))
    assert T.group == M.group and T.degrees == M.degrees and T.table == M.table


@pytest.mark.parametrize("a,b", [("H4", "C2"), ("C2", "C2"), ("H4", "H4"), ("M2_2", "H2"), ("C", "C"), ("H", "M2_4")])
def test_tensor_division_iff_identity_components_tensor_to_division(a, b):
    R1, R2 = building_block(a), building_block(b)
    re = tensor_product(identity_component(R1).to_algebra(), identity_component(R2).to_algebra())
    T = tensor_product(R1, R2)
    assert check_division_grading(T).is_division == (recognize_division(trivially_graded(re)) != "none")


def test_coarsen_examples():
    M = building_block("M2_8")
    Q, proj = quotient_by(M.group, [(0, 1)])
    R = coarsen(M, proj)
    re = identity_component(R)
    assert Q.is_isomorphic(AbelianGroup((4,))) and re.dim == 2
    assert recognize_division(re) == "C"
    same = coarsen(M, GroupHom.identity(M.group))
    assert same.degrees == M.degrees and same.table == M.table
    Q, proj = quotient_by(building_block("M4_32").group, [(0, 0, 1, 0)])
    R = coarsen(building_block("M4_32"), proj)
    assert R.group.is_isomorphic(AbelianGroup((4, 2, 2))) and check_division_grading(R).is_division


def test_coarsen_domain_mismatch():
    with pytest.raises(BadInput):
        coarsen(building_block("M2_4"), GroupHom.identity(AbelianGroup((4,))))


BLOCK_NAMES = ["C2", "H4", "M2_4", "M2_8", "M4_32"]


@settings(max_examples=25, deadline=None)
@given(st.sampled_from(BLOCK_NAMES), st.data())
def test_coarsen_properties(name, data):
    R = building_block(name)
    kill = data.draw(st.lists(st.sampled_from(list(R.group.elements())), max_size=2))
    _, proj = quotient_by(R.group, kill)
    Rc = coarsen(R, proj)
    assert validate(Rc)
    assert set(Rc.support) == {proj(g) for g in R.support}


def test_commutation_examples():
    cd = commutation_data(building_block("M2_4"))
    a, b, c = (1, 0), (0, 1), (1, 1)
    assert cd.sigma[(a, b)] == -1
    assert (cd.squares[a], cd.squares[b], cd.squares[c]) == (1, 1, -1)
    assert all(cd.sigma[(g, g)] == 1 for g in building_block("M2_4").support)
    cd = commutation_data(pauli_grading((3,)))
    s = cd.sigma[((1, 0), (0, 1))]
    assert s ** 3 == 1 and s != 1
    assert cd.nonsingular and cd.bimultiplicative and cd.centroid == "C"


@pytest.mark.parametrize("name", BLOCK_NAMES + ["R"])
def test_commutation_skew(name):
    cd = commutation_data(building_block(name))
    assert all(cd.sigma[(g, h)] * cd.sigma[(h, g)] == 1 for g, h in cd.sigma)
    assert cd.bimultiplicative and cd.roots_of_unity


def test_commutation_rejects_unframed():
    R = trivially_graded(building_block("M2_4"))
    R.meta.pop("frame", None)
    with pytest.raises(NotMonomial):
        commutation_data(R)


def test_universal_group_examples():
    assert universal_grading_group(building_block("M2_4")).is_isomorphic(AbelianGroup((2, 2)))
    assert universal_grading_group(building_block("M2_8")).is_isomorphic(AbelianGroup((4, 2)))
    assert universal_grading_group(building_block("R")).order == 1


def test_graded_subalgebra_examples():
    R = building_block("M4_32")
    # x1 at index 8, x2 at 4, x3 at 2, x4 at 1; x1^2 is central
    gens = [e(R, 4), e(R, 2), multiply(R, e(R, 16), e(R, 1))]
    S = graded_subalgebra(R, gens)
    assert S.dim == 8
    assert underlying_type(S.to_algebra()) == (2, "C")
    one = graded_subalgebra(R, [R.to_dense(R.unit_sparse)])
    assert one.dim == 1
    M = building_block("M2_8")
    S = graded_subalgebra(M, [e(M, 2)])
    assert S.dim == 4
    assert {g for g in S.degrees()} == {(k, 0) for k in range(4)}


def test_graded_subalgebra_rejects_inhomogeneous():
    M = building_block("M2_4")
    with pytest.raises(BadInput):
        graded_subalgebra(M, [vec(M, b1=1, b2=1)])


@pytest.mark.parametrize("name", ["C2", "H4", "H2", "M2_4", "M2_2", "M2_8", "M2C_Z4", "M4_32", "M4_4"])
def test_component_dimensions(name):
    R = building_block(name)
    with warnings.catch_warnings():
        warnings.simplefilter("error", NotDivisionCompatible)
        re = identity_component(R)
    assert all(len(ix) == re.dim for ix in R.components.values())
    assert R.dim == len(R.support) * re.dim
    assert support_group(R).order == len(R.support)
