"""Acceptance checks shared by the ``selftest`` command and the test suite.

Each check returns a :class:`CriterionResult`; ``run_all`` runs them in
order.  Time limits are part of the checks: a criterion that is correct
but slower than its limit fails.
"""

from __future__ import annotations

import itertools
import random
import time
import warnings
from dataclasses import dataclass
from functools import lru_cache

from .abgroups import AbelianGroup, GroupHom
from .classify import PairSpec, classify, invariant_vector, pairs_equivalent
from .constructions import (
    DimensionFunction,
    building_block,
    catalog,
    catalog_labels,
    clifford_graded,
    endo_algebra,
    pauli_for_group,
    trivially_graded,
)
from .errors import NotDivisionCompatible, NotSquareGroup
from .galgebra import (
    center,
    centralizer,
    check_division_grading,
    commutation_data,
    identity_component,
    is_simple,
    regrade,
    support_group,
    tensor_product,
    trace_form_signature,
    underlying_type,
    universal_grading_group,
    validate,
)
from .isomaps import builtin_equivalences, search_monomial_iso, verify_graded_map
from .labels import BLOCKS

PAULI_H = ((2,), (3,), (4,), (2, 2))

# Exact trace-form signatures; tests/fixtures/trace_signatures.json holds the
# floating-point oracle these were checked against.
EXPECTED_SIGNATURES = {"H": -2, "M2(R)": 2, "C": 0, "M2(C)": 0, "M2(H)": -4}


@dataclass
class CriterionResult:
    number: int
    name: str
    passed: bool
    detail: str
    seconds: float
    limit: float | None = None

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        limit = f" (limit {self.limit:.0f} s)" if self.limit else ""
        return f"[{status}] {self.number}. {self.name}: {self.detail} [{self.seconds:.1f} s{limit}]"


@lru_cache(maxsize=None)
def _catalog(label: str):
    return catalog(label)


def _labels(max_k: int = 3) -> list:
    return catalog_labels(max_k, PAULI_H)


def _timed(number: int, name: str, limit: float | None, body) -> CriterionResult:
    start = time.perf_counter()
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", NotDivisionCompatible)
        try:
            passed, detail = body()
        except Exception as exc:  # a crash is a failed criterion, with its reason
            passed, detail = False, f"raised {type(exc).__name__}: {exc}"
    seconds = time.perf_counter() - start
    if passed and limit is not None and seconds > limit:
        passed, detail = False, f"{detail}; exceeded time limit"
    return CriterionResult(number, name, passed, detail, seconds, limit)


def criterion_1() -> CriterionResult:
    def body():
        bad = []
        count = 0
        for label in [str(L) for L in _labels()] + [f"block={b}" for b in BLOCKS]:
            R = _catalog(label)
            count += 1
            if not validate(R):
                bad.append(f"{label}: validate")
            elif not check_division_grading(R).is_division:
                bad.append(f"{label}: not division")
            elif not is_simple(R):
                bad.append(f"{label}: not simple")
        return not bad, f"{count} algebras checked" + (f"; failures: {bad}" if bad else "")
    return _timed(1, "catalog integrity", 60, body)


def _clifford_prediction(p: int, m: int) -> tuple:
    k = (p + m) // 2
    r = (p - m) % 8
    if r in (0, 6):
        return 2 ** k, "R"
    return 2 ** (k - 1), "H"


def criterion_2() -> CriterionResult:
    def body():
        bad = []
        checked = 0
        for total in range(0, 7):
            for p in range(total + 1):
                m = total - p
                if total % 2 == 0:
                    got = underlying_type(clifford_graded((p, m)))
                    want = _clifford_prediction(p, m)
                    checked += 1
                    if got != want:
                        bad.append(f"Cgr({p},{m}): {got} != {want}")
                elif total <= 5 and (p - m) % 4 == 1:
                    checked += 1
                    zdim = center(clifford_graded((p, m))).dim
                    if zdim != 2:
                        bad.append(f"Cgr({p},{m}): center dim {zdim}")
        return not bad, f"{checked} signatures" + (f"; failures: {bad}" if bad else "")
    return _timed(2, "Clifford dichotomy", 10, body)


def signature_algebras() -> dict:
    return {
        "H": building_block("H"),
        "M2(R)": building_block("M2_4"),
        "C": building_block("C"),
        "M2(C)": _catalog("type=xiii H=2"),
        "M2(H)": _catalog("type=iv k=1"),
    }


def criterion_3() -> CriterionResult:
    def body():
        got = {name: trace_form_signature(R) for name, R in signature_algebras().items()}
        bad = [f"{n}: {got[n]}" for n, want in EXPECTED_SIGNATURES.items() if got[n] != (want, True)]
        shown = ", ".join(f"{n} {s}" for n, (s, _) in got.items())
        return not bad, shown + (f"; failures: {bad}" if bad else "")
    return _timed(3, "trace-form signatures", None, body)


@lru_cache(maxsize=None)
def _invariants(label: str):
    return invariant_vector(_catalog(label))


def criterion_4() -> CriterionResult:
    def body():
        bad = []
        labels = _labels()
        for L in labels:
            got = classify(_catalog(str(L)))
            if got != L:
                bad.append(f"{L} -> {got}")
        return not bad, f"{len(labels)} labels" + (f"; failures: {bad}" if bad else "")
    return _timed(4, "classification round trip", 60, body)


def criterion_5() -> CriterionResult:
    def body():
        groups: dict = {}
        for L in _labels():
            inv = _invariants(str(L))
            groups.setdefault((inv.n, inv.D), []).append((str(L), inv))
        clashes = []
        for members in groups.values():
            for (l1, v1), (l2, v2) in itertools.combinations(members, 2):
                if v1 == v2:
                    clashes.append(f"{l1} ~ {l2}")
        pairs = sum(len(m) * (len(m) - 1) // 2 for m in groups.values())
        return not clashes, f"{pairs} pairs in {len(groups)} (n, D) classes" + (f"; clashes: {clashes}" if clashes else "")
    return _timed(5, "separation", None, body)


def criterion_6() -> CriterionResult:
    def body():
        bad = []
        eqs = builtin_equivalences()
        for e in eqs:
            rep = verify_graded_map(e.source, e.target, e.map)
            if not rep:
                bad.append(f"{e.name}: {rep}")
        H4, M = building_block("H4"), building_block("M2_4")
        searches = [
            ("Cgr(1,1) -> Cgr(0,2)", clifford_graded((1, 1)), clifford_graded((0, 2))),
            ("H4 (x) H4 -> M2_4 (x) M2_4", tensor_product(H4, H4), tensor_product(M, M)),
        ]
        times = []
        for name, A, B in searches:
            t = time.perf_counter()
            f = search_monomial_iso(A, B)
            dt = time.perf_counter() - t
            times.append(f"{dt:.1f} s")
            if f is None:
                bad.append(f"{name}: not found")
            elif dt > 120:
                bad.append(f"{name}: took {dt:.0f} s")
        return not bad, f"{len(eqs)} builtin maps verified, searches {', '.join(times)}" + (f"; failures: {bad}" if bad else "")
    return _timed(6, "paper equivalences", None, body)


def criterion_7() -> CriterionResult:
    def body():
        bad = []
        C2 = building_block("C2")
        T = tensor_product(C2, C2)
        if not check_division_grading(T).is_division:
            bad.append("C2 (x) C2 should be division")
        if is_simple(T):
            bad.append("C2 (x) C2 should not be simple")
        trivial = trivially_graded(building_block("M2_4"))
        if check_division_grading(trivial).is_division:
            bad.append("trivial grading on M2(R) should not be division")
        try:
            pauli_for_group(AbelianGroup((2, 4)))
            bad.append("Z2 x Z4 accepted as H x H")
        except NotSquareGroup:
            pass
        return not bad, "3 controls" + (f"; failures: {bad}" if bad else "")
    return _timed(7, "negative controls", None, body)


def lemma_failures(label: str) -> list:
    """Lemma checks on one catalog entry; empty when all hold."""
    R = _catalog(label)
    bad = []
    U = universal_grading_group(R)
    S = support_group(R)
    if not U.is_isomorphic(S):
        bad.append(f"{label}: universal group {U} vs support {S}")
    re = identity_component(R)
    if re.dim == 1 and R.meta.get("centroid", "R") == "R":
        cd = commutation_data(R)
        if any(s not in (1, -1) for s in cd.sigma.values()):
            bad.append(f"{label}: frame elements neither commute nor anticommute")
        if center(R).dim == 1:
            if R.group.exponent > 2:
                bad.append(f"{label}: central but not elementary 2-group")
            if any(s not in (1, -1) for s in cd.squares.values()):
                bad.append(f"{label}: squares not +-1")
    if re.dim == 4:
        Z = centralizer(R, re)
        if Z.dim * 4 != R.dim:
            bad.append(f"{label}: centralizer dim {Z.dim} * 4 != {R.dim}")
        else:
            Zalg = Z.to_algebra()
            rep = check_division_grading(Zalg)
            if not rep.is_division or rep.re_dim != 1:
                bad.append(f"{label}: centralizer is not a graded division algebra with 1-dim identity component")
    return bad


def criterion_8() -> CriterionResult:
    def body():
        bad = []
        labels = [str(L) for L in _labels()] + [f"block={b}" for b in BLOCKS]
        for label in labels:
            bad += lemma_failures(label)
        return not bad, f"{len(labels)} entries" + (f"; failures: {bad}" if bad else "")
    return _timed(8, "lemma suite", None, body)


def random_pair_instance(rng: random.Random):
    """A small division algebra D regraded into a larger ambient group, with a random kappa."""
    name = rng.choice(["R", "C2", "H4", "M2_4", "M2_2", "H2"])
    D0 = building_block(name)
    extra = rng.choice([2, 3, 4])
    G = AbelianGroup(D0.group.orders + (extra,)) if D0.group.order > 1 else AbelianGroup((extra,))
    if D0.group.order > 1:
        images = tuple(tuple(int(i == j) for j in range(G.rank)) for i in range(D0.group.rank))
    else:
        images = ((0,),)
    D = regrade(D0, GroupHom(D0.group, G, images), f"{name} in {G}")
    df = DimensionFunction(D, {})
    reps = list(df.cosets())
    kappa = {}
    while not any(kappa.values()):
        kappa = {r: rng.randint(0, 2) for r in reps}
    return D, kappa


def criterion_9(instances: int = 20, seed: int = 20240607) -> CriterionResult:
    def body():
        rng = random.Random(seed)
        bad = []
        for n in range(instances):
            D, kappa = random_pair_instance(rng)
            df = DimensionFunction(D, kappa)
            M = endo_algebra(df)
            s = sum(kappa.values())
            de = identity_component(D).dim
            if M.dim != s * s * D.dim:
                bad.append(f"#{n}: dim {M.dim}")
            re = len(M.components.get(M.group.identity, []))
            if re != de * sum(c * c for c in kappa.values()):
                bad.append(f"#{n}: identity component dim {re}")
            if not validate(M):
                bad.append(f"#{n}: does not validate")
            G = D.group
            g = rng.choice(list(G.elements()))
            shifted = {G.add(r, g): c for r, c in kappa.items()}
            p, q = PairSpec(D, kappa), PairSpec(D, shifted)
            if not pairs_equivalent(p, p):
                bad.append(f"#{n}: not reflexive")
            if not pairs_equivalent(p, q) or not pairs_equivalent(q, p):
                bad.append(f"#{n}: shift {g} not recognised")
            other = {r: rng.randint(0, 2) for r in kappa}
            if any(other.values()):
                o = PairSpec(D, other)
                if bool(pairs_equivalent(p, o)) != bool(pairs_equivalent(o, p)):
                    bad.append(f"#{n}: not symmetric")
                if pairs_equivalent(q, o) and not pairs_equivalent(p, o):
                    bad.append(f"#{n}: not transitive")
        return not bad, f"{instances} random instances" + (f"; failures: {bad}" if bad else "")
    return _timed(9, "M(D, kappa) and pair equivalence", 30, body)


CRITERIA = (criterion_1, criterion_2, criterion_3, criterion_4, criterion_5,
            criterion_6, criterion_7, criterion_8, criterion_9)


def run_all(report=print) -> list:
    results = []
    for crit in CRITERIA:
        res = crit()
        results.append(res)
        if report:
            report(res.line())
    return results

