import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gradiv.abgroups import AbelianGroup, GroupHom, enumerate_automorphisms, quotient_by
from gradiv.acceptance import random_pair_instance
from gradiv.classify import PairSpec, classify, invariant_vector, pairs_equivalent
from gradiv.constructions import building_block, catalog, catalog_labels, trivially_graded
from gradiv.errors import BadInput, NotDivision, NotSimple
from gradiv.galgebra import coarsen, regrade, tensor_product
from gradiv.labels import ClassLabel


def test_invariant_vector_examples():
    v = invariant_vector(building_block("M2_8"))
    assert (v.dim, v.n, v.D, v.re_dim, v.center_support_trivial, v.exponent) == (8, 2, "C", 1, False, 4)
    assert invariant_vector(catalog("type=xiii H=2")).center_support_trivial
    v = invariant_vector(catalog("type=i k=1"))
    assert (v.dim, v.n, v.D, v.re_dim, v.exponent) == (4, 2, "R", 1, 2)


def test_invariant_vector_dimension_identity():
    for L in catalog_labels(2, ((2,), (3,))):
        v = invariant_vector(catalog(L))
        assert v.dim == v.group_order * v.re_dim
        assert (v.D == "C") == (v.dim == 2 * v.n * v.n)


def test_classify_examples():
    assert classify(catalog("type=ix k=2")) == ClassLabel("ix", 2)
    assert classify(trivially_graded(building_block("R"))) == ClassLabel("i", 0)
    M = building_block("M2_8")
    _, proj = quotient_by(M.group, [(0, 1)])
    assert classify(coarsen(M, proj)) == ClassLabel("x", 1)


def test_classify_rejects_non_division():
    with pytest.raises(NotDivision):
        classify(trivially_graded(building_block("M2_4")))


def test_classify_rejects_non_simple():
    C2 = building_block("C2")
    with pytest.raises(NotSimple):
        classify(tensor_product(C2, C2))


@pytest.mark.parametrize("L", [L for L in catalog_labels(2, ((2,), (3,), (2, 2))) if catalog(L).group.order <= 16],
                         ids=str)
def test_classify_invariant_under_automorphisms(L):
    R = catalog(L)
    rng = random.Random(str(L))
    auts = list(itertools.islice(enumerate_automorphisms(R.group), 2000))
    for a in rng.sample(auts, min(4, len(auts))):
        assert classify(regrade(R, a)) == L


def test_pairs_shift_example():
    D = _trivial_in((2,))
    p = PairSpec(D, {(0,): 1, (1,): 2})
    q = PairSpec(D, {(0,): 2, (1,): 1})
    res = pairs_equivalent(p, q)
    assert res and res.shift == (1,)
    assert not pairs_equivalent(p, PairSpec(D, {(0,): 1, (1,): 1}))


def test_pairs_mismatched_groups():
    with pytest.raises(BadInput):
        pairs_equivalent(PairSpec(_trivial_in((2,)), {(0,): 1}), PairSpec(_trivial_in((3,)), {(0,): 1}))


def test_pairs_different_division_algebras():
    a = PairSpec(building_block("H4"), {(0, 0): 1})
    b = PairSpec(building_block("M2_4"), {(0, 0): 1})
    assert not pairs_equivalent(a, b)


def _trivial_in(orders):
    R = building_block("R")
    G = AbelianGroup(orders)
    return regrade(R, GroupHom(R.group, G, (G.identity,)))


@settings(max_examples=15, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_pairs_equivalence_relation(seed):
    rng = random.Random(seed)
    D, kappa = random_pair_instance(rng)
    G = D.group
    g = rng.choice(list(G.elements()))
    p = PairSpec(D, kappa)
    q = PairSpec(D, {G.add(r, g): c for r, c in kappa.items()})
    assert pairs_equivalent(p, p)
    assert pairs_equivalent(p, q) and pairs_equivalent(q, p)
    other = {r: rng.randint(0, 2) for r in kappa}
    if any(other.values()):
        o = PairSpec(D, other)
        assert bool(pairs_equivalent(p, o)) == bool(pairs_equivalent(o, p))
        assert bool(pairs_equivalent(p, o)) == bool(pairs_equivalent(q, o))
