"""Graded maps: verification, multiplicative extension, the known
equivalences between tensor-product normal forms, and a brute-force search
for monomial weak isomorphisms.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from .abgroups import AbelianGroup, GroupHom, enumerate_isomorphisms
from .constructions import building_block, clifford_graded
from .errors import BadInput, NotMonomial
from .galgebra import GradedAlgebra, regrade, tensor_product
from .linalg import Echelon
from .scalars import Scalar

__all__ = [
    "GradedMap",
    "MapReport",
    "Equivalence",
    "verify_graded_map",
    "extend_multiplicatively",
    "builtin_equivalences",
    "search_monomial_iso",
    "identity_map",
]


@dataclass(frozen=True, eq=False)
class GradedMap:
    alpha: GroupHom
    images: tuple  # sparse vectors in the codomain, one per domain basis index

    def apply(self, x: dict) -> dict:
        out: dict = {}
        for i, a in x.items():
            for k, c in self.images[i].items():
                v = a * c
                out[k] = out[k] + v if k in out else v
        return {k: c for k, c in out.items() if c}


@dataclass
class MapReport:
    ok: bool
    failures: list = field(default_factory=list)
    witness: tuple | None = None

    def __bool__(self):
        return self.ok

    def __str__(self):
        return "ok" if self.ok else self.failures[0]


def verify_graded_map(A: GradedAlgebra, B: GradedAlgebra, f: GradedMap) -> MapReport:
    """Bijectivity, unit, multiplicativity on basis pairs, and degrees carried along alpha."""

    def fail(msg, witness=None):
        return MapReport(False, [msg], witness)

    if A.dim != B.dim:
        return fail(f"dimensions differ: {A.dim} vs {B.dim}")
    if len(f.images) != A.dim:
        return fail(f"map has {len(f.images)} images for dimension {A.dim}")
    alpha = f.alpha
    if alpha.domain != A.group or alpha.codomain != B.group:
        return fail("alpha does not go between the grading groups")
    mapped = {alpha(g) for g in A.support}
    if len(mapped) != len(A.support) or mapped != set(B.support):
        return fail("alpha does not carry the support bijectively onto the target support")
    for i, img in enumerate(f.images):
        want = alpha(A.degrees[i])
        if not img:
            return fail(f"basis vector {i} maps to zero", (i,))
        if any(B.degrees[k] != want for k in img):
            return fail(f"image of basis vector {i} is not homogeneous of degree {want}", (i,))
    ech = Echelon()
    for img in f.images:
        if not ech.add(img):
            return fail("images are linearly dependent", None)
    if f.apply(A.unit_sparse) != B.unit_sparse:
        return fail("unit is not preserved")
    for i in range(A.dim):
        for j in range(A.dim):
            lhs = f.apply(A.mul_sparse({i: A.scalar(1)}, {j: A.scalar(1)}))
            rhs = B.mul_sparse(f.images[i], f.images[j])
            if lhs != rhs:
                return fail(f"f(b_{i} b_{j}) != f(b_{i}) f(b_{j})", (i, j))
    return MapReport(True)


def identity_map(R: GradedAlgebra) -> GradedMap:
    one = R.scalar(1)
    return GradedMap(GroupHom.identity(R.group), tuple({i: one} for i in range(R.dim)))


def extend_multiplicatively(A: GradedAlgebra, B: GradedAlgebra, pairs, alpha: GroupHom | None = None) -> GradedMap:
    """Extend x_t -> y_t to a linear map on all of A by closing words in the x_t.

    ``pairs`` lists (element of A, element of B); the x_t must generate A.
    When alpha is not given it is read off the degrees of the images, which
    needs A's support to be its whole grading group.
    """
    pairs = [(A.to_sparse(x), B.to_sparse(y)) for x, y in pairs]
    n = A.dim
    words = [(A.unit_sparse, B.unit_sparse)]
    seen = Echelon()
    seen.add(A.unit_sparse)
    frontier = list(words)
    while frontier and len(seen) < n:
        nxt = []
        for x, y in frontier:
            for gx, gy in pairs:
                px = A.mul_sparse(x, gx)
                if seen.add(px):
                    w = (px, B.mul_sparse(y, gy))
                    words.append(w)
                    nxt.append(w)
        frontier = nxt
    if len(seen) < n:
        raise BadInput(f"given elements generate only a {len(seen)}-dimensional subalgebra of {A.name}")
    # reduce [x | y] rows: A-part becomes the identity matrix
    joint = Echelon()
    for x, y in words:
        row = dict(x)
        row.update({n + k: c for k, c in y.items()})
        joint.add(row)
    images = []
    for p in range(n):
        row = joint.rows[p]
        images.append({k - n: c for k, c in row.items() if k >= n})
    if alpha is None:
        alpha = _infer_alpha(A, B, images)
    return GradedMap(alpha, tuple(images))


def _infer_alpha(A: GradedAlgebra, B: GradedAlgebra, images) -> GroupHom:
    deg_map = {}
    for i, img in enumerate(images):
        d = B.degree_of(img)
        if d is None:
            raise BadInput(f"image of basis vector {i} is not homogeneous")
        if deg_map.setdefault(A.degrees[i], d) != d:
            raise BadInput(f"degree {A.degrees[i]} is sent to two different degrees")
    gens = A.group.gens()
    if any(g not in deg_map for g in gens):
        raise BadInput("support is not the whole grading group; pass alpha explicitly")
    return GroupHom(A.group, B.group, tuple(deg_map[g] for g in gens))


# -- builtin equivalences ----------------------------------------------------------

def _kron(R1: GradedAlgebra, R2: GradedAlgebra, x: dict, y: dict) -> dict:
    n2 = R2.dim
    return {i * n2 + j: a * b for i, a in x.items() for j, b in y.items()}


def _b(R: GradedAlgebra, i: int) -> dict:
    return {i: R.scalar(1)}


def _word(R: GradedAlgebra, *vecs) -> dict:
    out = R.unit_sparse
    for v in vecs:
        out = R.mul_sparse(out, v)
    return out


@dataclass
class Equivalence:
    name: str
    source: GradedAlgebra
    target: GradedAlgebra
    map: GradedMap

    @property
    def source_label(self) -> str:
        return self.source.name

    @property
    def target_label(self) -> str:
        return self.target.name


# basis indices inside the blocks: M2_4 has I, B, A, C = AB; H4 has 1, j, i, k = ij;
# C2 has 1, i; M2_8 has v^a u^b at index 2a + b.
_M_I, _M_B, _M_A, _M_C = 0, 1, 2, 3
_H_1, _H_J, _H_I, _H_K = 0, 1, 2, 3


def _tensor_named(R1, R2, name):
    T = tensor_product(R1, R2)
    T.meta["name"] = name
    return T


def _equiv_phi() -> Equivalence:
    H4, M, C2 = building_block("H4"), building_block("M2_4"), building_block("C2")
    R = _tensor_named(H4, C2, "H4 (x) C2")
    S = _tensor_named(M, C2, "M2_4 (x) C2")
    one_c, i_c = _b(C2, 0), _b(C2, 1)
    pairs = [
        (_kron(H4, C2, _b(H4, _H_I), one_c), _kron(M, C2, _b(M, _M_B), i_c)),
        (_kron(H4, C2, _b(H4, _H_J), one_c), _kron(M, C2, _b(M, _M_C), one_c)),
        (_kron(H4, C2, _b(H4, _H_1), i_c), _kron(M, C2, _b(M, _M_I), i_c)),
    ]
    return Equivalence("phi: H4 (x) C2 -> M2_4 (x) C2", R, S, extend_multiplicatively(R, S, pairs))


def _equiv_psi() -> Equivalence:
    H4, M = building_block("H4"), building_block("M2_4")
    R = _tensor_named(H4, H4, "H4 (x) H4")
    S = _tensor_named(M, M, "M2_4 (x) M2_4")
    one, I = _b(H4, _H_1), _b(M, _M_I)
    pairs = [
        (_kron(H4, H4, _b(H4, _H_I), one), _kron(M, M, _b(M, _M_C), I)),
        (_kron(H4, H4, _b(H4, _H_J), one), _kron(M, M, _b(M, _M_A), _b(M, _M_C))),
        (_kron(H4, H4, one, _b(H4, _H_I)), _kron(M, M, I, _b(M, _M_C))),
        (_kron(H4, H4, one, _b(H4, _H_J)), _kron(M, M, _b(M, _M_C), _b(M, _M_A))),
    ]
    return Equivalence("psi: H4 (x) H4 -> M2_4 (x) M2_4", R, S, extend_multiplicatively(R, S, pairs))


def _equiv_m22_h4() -> Equivalence:
    """M2_2 (x) H4 -> H2 (x) M2_4 by x1 -> x1, x2 -> x1 x2 y1, x1 x2 y1 -> x2, x1 x2 y2 -> x1 x2 y2.

    In both algebras deg x1 = e, deg x2 = alpha, deg y1 = beta, deg y2 = gamma;
    the target is regraded so that its y1 = C and y2 = A sit at beta and gamma.
    """
    M22, H4, H2, M = building_block("M2_2"), building_block("H4"), building_block("H2"), building_block("M2_4")
    R = _tensor_named(M22, H4, "M2_2 (x) H4")
    S0 = tensor_product(H2, M)
    # S0 degrees: (j-degree, A-degree, B-degree); send A -> gamma, B -> beta + gamma
    G = S0.group
    S = regrade(S0, GroupHom(G, G, ((1, 0, 0), (0, 0, 1), (0, 1, 1))), "H2 (x) M2_4")
    e1, e4 = _b(M22, 0), _b(H4, _H_1)
    ax1, ax2 = _kron(M22, H4, _b(M22, _M_C), e4), _kron(M22, H4, _b(M22, _M_A), e4)
    ay1, ay2 = _kron(M22, H4, e1, _b(H4, _H_I)), _kron(M22, H4, e1, _b(H4, _H_J))
    h1, m1 = _b(H2, 0), _b(M, _M_I)
    bx1, bx2 = _kron(H2, M, _b(H2, _H_I), m1), _kron(H2, M, _b(H2, _H_J), m1)
    by1, by2 = _kron(H2, M, h1, _b(M, _M_C)), _kron(H2, M, h1, _b(M, _M_A))
    pairs = [
        (ax1, bx1),
        (ax2, _word(S, bx1, bx2, by1)),
        (_word(R, ax1, ax2, ay1), bx2),
        (_word(R, ax1, ax2, ay2), _word(S, bx1, bx2, by2)),
    ]
    return Equivalence("M2_2 (x) H4 -> H2 (x) M2_4", R, S, extend_multiplicatively(R, S, pairs))


def _equiv_m432() -> Equivalence:
    """M4_32 -> M2_8 (x) M2_4 by x1 -> v, x2 -> u w, x3 -> u z, x4 -> v^2 u w z."""
    R = building_block("M4_32")
    M8, M = building_block("M2_8"), building_block("M2_4")
    S = _tensor_named(M8, M, "M2_8 (x) M2_4")
    one8, oneM = _b(M8, 0), _b(M, _M_I)
    v = _kron(M8, M, _b(M8, 2), oneM)
    u = _kron(M8, M, _b(M8, 1), oneM)
    w = _kron(M8, M, one8, _b(M, _M_A))
    z = _kron(M8, M, one8, _b(M, _M_B))
    gens = R.meta["generators"]
    pairs = [
        (_b(R, gens[0]), v),
        (_b(R, gens[1]), _word(S, u, w)),
        (_b(R, gens[2]), _word(S, u, z)),
        (_b(R, gens[3]), _word(S, v, v, u, w, z)),
    ]
    return Equivalence("M4_32 -> M2_8 (x) M2_4", R, S, extend_multiplicatively(R, S, pairs))


def _equiv_m2cz4() -> Equivalence:
    """M2C_Z4 (x) H4 -> M2C_Z4 (x) M2_4 by x_i -> x_i and y_i -> z_i x1^2."""
    MC, H4, M = building_block("M2C_Z4"), building_block("H4"), building_block("M2_4")
    R = _tensor_named(MC, H4, "M2C_Z4 (x) H4")
    S = _tensor_named(MC, M, "M2C_Z4 (x) M2_4")
    oneH, oneM, oneC = _b(H4, _H_1), _b(M, _M_I), _b(MC, 0)
    rx1, rx2 = _kron(MC, H4, _b(MC, 2), oneH), _kron(MC, H4, _b(MC, 1), oneH)
    sx1, sx2 = _kron(MC, M, _b(MC, 2), oneM), _kron(MC, M, _b(MC, 1), oneM)
    z1, z2 = _kron(MC, M, oneC, _b(M, _M_A)), _kron(MC, M, oneC, _b(M, _M_B))
    pairs = [
        (rx1, sx1),
        (rx2, sx2),
        (_kron(MC, H4, oneC, _b(H4, _H_I)), _word(S, z1, sx1, sx1)),
        (_kron(MC, H4, oneC, _b(H4, _H_J)), _word(S, z2, sx1, sx1)),
    ]
    return Equivalence("M2C_Z4 (x) H4 -> M2C_Z4 (x) M2_4", R, S, extend_multiplicatively(R, S, pairs))


def _equiv_cgr21() -> Equivalence:
    """M2_4 (x) C2 -> Cgr(2,1) by A -> y2 y3, B -> y1 y3, i -> y1 y2 y3."""
    M, C2 = building_block("M2_4"), building_block("C2")
    R = _tensor_named(M, C2, "M2_4 (x) C2")
    S = clifford_graded((2, 1))
    y1, y2, y3 = (_b(S, g) for g in S.meta["generators"])
    pairs = [
        (_kron(M, C2, _b(M, _M_A), _b(C2, 0)), _word(S, y2, y3)),
        (_kron(M, C2, _b(M, _M_B), _b(C2, 0)), _word(S, y1, y3)),
        (_kron(M, C2, _b(M, _M_I), _b(C2, 1)), _word(S, y1, y2, y3)),
    ]
    return Equivalence("M2_4 (x) C2 -> Cgr(2,1)", R, S, extend_multiplicatively(R, S, pairs))


def builtin_equivalences() -> list:
    """Explicit weak isomorphisms between different normal forms of the same type."""
    return [
        _equiv_phi(),
        _equiv_psi(),
        _equiv_m22_h4(),
        _equiv_m432(),
        _equiv_m2cz4(),
        _equiv_cgr21(),
    ]


# -- monomial search -----------------------------------------------------------------

def _monomial_frame(R: GradedAlgebra) -> dict:
    if R.meta.get("centroid", "R") != "R" or any(len(ix) != 1 for ix in R.components.values()):
        raise NotMonomial(f"{R.name}: components are not one-dimensional")
    if len(R.support) != R.group.order:
        raise NotMonomial(f"{R.name}: support is not the whole grading group")
    one = R.scalar(1)
    return {g: {ix[0]: one} for g, ix in R.components.items()}


def _power_ratio(R: GradedAlgebra, v: dict, k: int) -> Scalar | None:
    """s with v^k = s * I, or None if v^k is not central-scalar."""
    p = R.unit_sparse
    for _ in range(k):
        p = R.mul_sparse(p, v)
    u = R.unit_sparse
    i0 = min(u)
    s = p.get(i0)
    if s is None:
        return None
    s = s / u[i0]
    return s if p == {i: s * c for i, c in u.items()} else None


def _commutes_like(R, x, y) -> Scalar:
    xy, yx = R.mul_sparse(x, y), R.mul_sparse(y, x)
    k = min(xy)
    return xy[k] / yx[k]


def search_monomial_iso(A: GradedAlgebra, B: GradedAlgebra, scalar_set=None, jobs: int = 1, bound: int = 64):
    """A verified monomial weak isomorphism A -> B, or None when none exists with these scalars.

    Generators of A's group are sent to lambda * (frame vector of B) for
    lambda in ``scalar_set`` (default: the real eighth roots of unity, that
    is +1 and -1).  Non-real scalars cannot appear in a map of real algebras
    and are dropped.  Group isomorphisms are tried in enumeration order, so
    the result is the same for every ``jobs``.
    """
    fa, fb = _monomial_frame(A), _monomial_frame(B)
    if A.dim != B.dim or A.group.invariant_factors() != B.group.invariant_factors():
        return None
    if A.group.order > bound:
        raise BadInput(f"support of order {A.group.order} exceeds the search bound {bound}")
    N = max(A.conductor, B.conductor, 8)
    if scalar_set is None:
        scalar_set = [Scalar.root_of_unity(8, k, N) for k in range(8)]
    scalars = []
    for s in scalar_set:
        s = s if isinstance(s, Scalar) else Scalar(s, N)
        if s.is_real() and s not in scalars:
            scalars.append(s)
    G = A.group
    gens = G.gens()
    a_gen = [fa[g] for g in gens]
    orders = [G.element_order(g) for g in gens]
    a_pow = [_power_ratio(A, x, o) for x, o in zip(a_gen, orders)]
    a_comm = {(s, t): _commutes_like(A, a_gen[s], a_gen[t]) for s in range(len(gens)) for t in range(s)}
    b_pow_cache: dict = {}
    b_comm_cache: dict = {}

    def attempt(alpha: GroupHom):
        imgs = [fb[alpha(g)] for g in gens]
        for (s, t), c in a_comm.items():
            key = (alpha(gens[s]), alpha(gens[t]))
            if key not in b_comm_cache:
                b_comm_cache[key] = _commutes_like(B, imgs[s], imgs[t])
            if b_comm_cache[key] != c:
                return None
        choice = []
        for t, (img, o) in enumerate(zip(imgs, orders)):
            key = (alpha(gens[t]), o)
            if key not in b_pow_cache:
                b_pow_cache[key] = _power_ratio(B, img, o)
            pb = b_pow_cache[key]
            lam = next((s for s in scalars if pb is not None and s ** o * pb == a_pow[t]), None)
            if lam is None:
                return None
            choice.append(lam)
        pairs = [(x, {k: lam * c for k, c in y.items()}) for x, y, lam in zip(a_gen, imgs, choice)]
        try:
            f = extend_multiplicatively(A, B, pairs, alpha)
        except BadInput:
            return None
        return f if verify_graded_map(A, B, f) else None

    candidates = list(enumerate_isomorphisms(G, B.group, bound=max(bound, G.order)))
    if jobs <= 1:
        for alpha in candidates:
            f = attempt(alpha)
            if f is not None:
                return f
        return None
    # workers scan interleaved slices; the hit with the smallest index wins
    def scan(start):
        for n in range(start, len(candidates), jobs):
            f = attempt(candidates[n])
            if f is not None:
                return n, f
        return None

    with ThreadPoolExecutor(max_workers=jobs) as pool:
        hits = [h for h in pool.map(scan, range(jobs)) if h is not None]
    return min(hits, key=lambda h: h[0])[1] if hits else None
