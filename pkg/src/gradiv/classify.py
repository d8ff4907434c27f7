"""Separating invariants, the type decision tree, and equivalence of (D, kappa) pairs."""

from __future__ import annotations

import warnings
from dataclasses import asdict, dataclass

from .abgroups import AbelianGroup, group_profile
from .constructions import DimensionFunction, expected_invariants
from .errors import BadInput, NotDivision, NotDivisionCompatible, Unclassifiable
from .galgebra import (
    GradedAlgebra,
    center,
    check_division_grading,
    identity_component,
    recognize_division,
    support_group,
    underlying_type,
)
from .labels import MIN_K, ClassLabel

__all__ = ["InvariantVector", "PairSpec", "PairEquivalence", "invariant_vector", "classify", "pairs_equivalent"]


@dataclass(frozen=True)
class InvariantVector:
    dim: int
    n: int
    D: str
    re_dim: int
    re_type: str
    center_support_trivial: bool
    exponent: int
    elementary_2: bool
    group_order: int

    def as_dict(self) -> dict:
        return asdict(self)


def invariant_vector(R: GradedAlgebra) -> InvariantVector:
    report = check_division_grading(R)
    if not report.is_division:
        raise NotDivision(f"{R.name} is not a graded division algebra")
    n, D = underlying_type(R)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", NotDivisionCompatible)
        re = identity_component(R)
    re_type = recognize_division(re)
    e = R.group.identity
    Z = center(R)
    trivial = all(R.degree_of(z) == e for z in Z.basis)
    order, exponent, _, elem2 = group_profile(support_group(R))
    return InvariantVector(R.dim, n, D, re.dim, re_type, trivial, exponent, elem2, order)


def _log2(n: int) -> int:
    k = n.bit_length() - 1
    if n < 1 or 1 << k != n:
        raise Unclassifiable(f"matrix size {n} is not a power of 2")
    return k


def _pauli_h(G: AbelianGroup) -> tuple:
    factors = [d for d in G.invariant_factors() if d > 1]
    counts: dict = {}
    for d in factors:
        counts[d] = counts.get(d, 0) + 1
    if any(c % 2 for c in counts.values()):
        raise Unclassifiable(f"support {G} is not of the form H x H")
    h = []
    for d in sorted(counts):
        h += [d] * (counts[d] // 2)
    return tuple(h) or (1,)


def classify(R: GradedAlgebra) -> ClassLabel:
    """Type label of a simple graded division algebra, read off its invariants."""
    inv = invariant_vector(R)
    if inv.D == "R":
        kind = {1: "i", 2: "ii", 4: "iii"}.get(inv.re_dim)
    elif inv.D == "H":
        kind = {1: "iv", 2: "v", 4: "vi"}.get(inv.re_dim)
    elif inv.center_support_trivial:
        kind = "xiii"
    else:
        kind = {
            (1, 2): "vii", (1, 4): "ix", (2, 2): "viii",
            (2, 4): "x", (4, 2): "xi", (4, 4): "xii",
        }.get((inv.re_dim, inv.exponent))
    if kind is None:
        raise Unclassifiable(f"{R.name}: no type has invariants {inv}")
    if kind == "xiii":
        label = ClassLabel("xiii", pauli_orders=_pauli_h(support_group(R)))
    else:
        k = _log2(inv.n) - (1 if kind in ("xi", "xii") else 0)
        if k < MIN_K[kind]:
            raise Unclassifiable(f"{R.name}: type {kind} needs k >= {MIN_K[kind]}, invariants give {k}")
        label = ClassLabel(kind, k)
    if expected_invariants(label) != inv.as_dict():
        raise Unclassifiable(f"{R.name}: invariants {inv} disagree with the normal form of {label}")
    return label


# -- pairs (D, kappa) ------------------------------------------------------------

@dataclass
class PairSpec:
    D: GradedAlgebra
    kappa: dict  # coset representative -> multiplicity

    @property
    def dimension_function(self) -> DimensionFunction:
        return DimensionFunction(self.D, self.kappa)


@dataclass(frozen=True)
class PairEquivalence:
    equivalent: bool
    shift: tuple | None = None
    reason: str = ""

    def __bool__(self):
        return self.equivalent


def pairs_equivalent(p1: PairSpec, p2: PairSpec) -> PairEquivalence:
    """(D, kappa) ~ (D', kappa'): same type of D and kappa(A) = kappa'(A - g) for some shift g."""
    G = p1.D.group
    if p2.D.group != G:
        raise BadInput(f"ambient groups differ: {G} vs {p2.D.group}")
    if p1.D.dim != p2.D.dim or set(p1.D.support) != set(p2.D.support):
        return PairEquivalence(False, reason="division algebras have different dimension or support")
    if classify(p1.D) != classify(p2.D):
        return PairEquivalence(False, reason="division algebras have different types")
    df1, df2 = p1.dimension_function, p2.dimension_function
    k1, k2 = df1.normalized(), df2.normalized()
    if sorted(k1.values()) != sorted(k2.values()):
        return PairEquivalence(False, reason="multiplicity multisets differ")
    rep = {}
    for r, coset in df1.cosets().items():
        for g in coset:
            rep[g] = r
    reps = sorted(set(rep.values()))
    for g in sorted(G.elements()):
        if all(k1.get(a, 0) == k2.get(rep[G.sub(a, g)], 0) for a in reps):
            return PairEquivalence(True, g)
    return PairEquivalence(False, reason="no shift matches the multiplicities")
