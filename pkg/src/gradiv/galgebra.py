"""Finite-dimensional group-graded algebras given by structure constants.

A :class:`GradedAlgebra` has a basis ``b_0 .. b_{n-1}``, each basis vector
homogeneous of a stated degree in a finite abelian group, and a product
table ``table[i][j] = ((k, c), ...)`` meaning ``b_i b_j = sum c * b_k``.
Coordinates of general elements are dense sequences of :class:`Scalar`.

Everything here is exact; the structure constants of a real algebra are
real elements of a cyclotomic field.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field
from functools import cached_property
from itertools import product as iproduct

import numpy as np

from .abgroups import AbelianGroup, GroupHom, smith_universal_group, subgroup_type
from .errors import BadInput, NotDivisionCompatible, NotMonomial, NotSemisimple, NotSimple
from .linalg import Echelon, axpy, congruence_signature, kernel, scale
from .scalars import Scalar

__all__ = [
    "GradedAlgebra",
    "Subalgebra",
    "CommutationData",
    "DivisionReport",
    "ValidationReport",
    "make_algebra",
    "multiply",
    "validate",
    "identity_component",
    "centralizer",
    "center",
    "trace_form_signature",
    "recognize_division",
    "check_division_grading",
    "underlying_type",
    "is_simple",
    "tensor_product",
    "coarsen",
    "regrade",
    "commutation_data",
    "universal_grading_group",
    "graded_subalgebra",
]


@dataclass(frozen=True, eq=False)
class GradedAlgebra:
    group: AbelianGroup
    degrees: tuple
    unit: tuple
    table: tuple
    conductor: int = 8
    meta: dict = field(default_factory=dict, compare=False)

    @property
    def dim(self) -> int:
        return len(self.degrees)

    @property
    def name(self) -> str:
        return self.meta.get("name", f"algebra(dim={self.dim})")

    def __repr__(self):
        return f"<GradedAlgebra {self.name}: dim {self.dim}, group {self.group.orders}>"

    def scalar(self, value) -> Scalar:
        return Scalar(value, self.conductor)

    def zero(self) -> list:
        z = Scalar(0, self.conductor)
        return [z] * self.dim

    def basis_vector(self, i: int, coeff=1) -> list:
        v = self.zero()
        v[i] = self.scalar(coeff)
        return v

    @cached_property
    def components(self) -> dict:
        """degree -> list of basis indices, in the group's element order."""
        comps: dict = {}
        for i, g in enumerate(self.degrees):
            comps.setdefault(g, []).append(i)
        return dict(sorted(comps.items()))

    @cached_property
    def support(self) -> list:
        return list(self.components)

    @cached_property
    def unit_sparse(self) -> dict:
        return {i: c for i, c in enumerate(self.unit) if c}

    @cached_property
    def is_monomial(self) -> bool:
        """Every product of two basis vectors is a multiple of one basis vector."""
        return all(len(t) <= 1 for row in self.table for t in row)

    @cached_property
    def unit_index(self):
        """Index of the basis vector equal to the unit, if the unit is a basis vector."""
        u = self.unit_sparse
        if len(u) == 1:
            (i, c), = u.items()
            if c.is_one():
                return i
        return None

    def mul_sparse(self, x: dict, y: dict) -> dict:
        out: dict = {}
        table = self.table
        for i, a in x.items():
            row = table[i]
            for j, b in y.items():
                ab = None
                for k, c in row[j]:
                    if ab is None:
                        ab = a * b
                    v = ab * c
                    w = out.get(k)
                    out[k] = v if w is None else w + v
        return {k: c for k, c in out.items() if c}

    def to_sparse(self, x) -> dict:
        if isinstance(x, dict):
            return x
        if len(x) != self.dim:
            raise BadInput(f"coordinate vector of length {len(x)} for algebra of dim {self.dim}")
        return {i: self.scalar(c) if not isinstance(c, Scalar) else c for i, c in enumerate(x) if c}

    def to_dense(self, x: dict) -> list:
        v = self.zero()
        for i, c in x.items():
            v[i] = c
        return v

    def degree_of(self, x: dict):
        """Degree of a nonzero homogeneous sparse vector, else None."""
        degs = {self.degrees[i] for i in x}
        return degs.pop() if len(degs) == 1 else None


def make_algebra(group: AbelianGroup, degrees, unit, table, conductor: int = 8, meta=None) -> GradedAlgebra:
    """Normalize raw inputs: coerce scalars, drop zero terms, sort terms by index."""
    dim = len(degrees)
    degrees = tuple(group.element(g) for g in degrees)
    if len(unit) != dim:
        raise BadInput("unit has wrong length")
    unit = tuple(Scalar(c, conductor) if not isinstance(c, Scalar) else c.coerce(conductor) for c in unit)
    if len(table) != dim or any(len(row) != dim for row in table):
        raise BadInput("structure table has wrong shape")
    norm_cache: dict = {}

    def norm(c):
        if isinstance(c, Scalar):
            if c.conductor == conductor:
                return c
            key = (c.conductor, c.coeffs)
            out = norm_cache.get(key)
            if out is None:
                out = norm_cache[key] = c.coerce(conductor)
            return out
        return Scalar(c, conductor)

    rows = []
    for row in table:
        new_row = []
        for terms in row:
            acc: dict = {}
            for k, c in terms:
                if not 0 <= k < dim:
                    raise BadInput(f"structure constant refers to basis index {k} outside 0..{dim - 1}")
                c = norm(c)
                acc[k] = acc[k] + c if k in acc else c
            new_row.append(tuple(sorted((k, c) for k, c in acc.items() if c)))
        rows.append(tuple(new_row))
    return GradedAlgebra(group, degrees, unit, tuple(rows), conductor, dict(meta or {}))


def multiply(R: GradedAlgebra, x, y) -> list:
    """Product of two coordinate vectors."""
    if len(x) != R.dim or len(y) != R.dim:
        raise BadInput(f"coordinate lengths {len(x)}, {len(y)} do not match dim {R.dim}")
    return R.to_dense(R.mul_sparse(R.to_sparse(x), R.to_sparse(y)))


# -- validation --------------------------------------------------------------

@dataclass
class ValidationReport:
    ok: bool
    failures: list = field(default_factory=list)
    witness: tuple | None = None
    support_is_subgroup: bool = True

    def __bool__(self):
        return self.ok

    def __str__(self):
        if self.ok:
            return "ok"
        return "; ".join(self.failures)


def validate(R: GradedAlgebra) -> ValidationReport:
    """Check associativity on all basis triples, unit laws, grading compatibility and real constants."""
    failures: list = []
    witness = None
    G = R.group
    n = R.dim

    def fail(msg, w):
        nonlocal witness
        failures.append(msg)
        if witness is None:
            witness = w

    for i, j in iproduct(range(n), range(n)):
        target = G.add(R.degrees[i], R.degrees[j])
        for k, c in R.table[i][j]:
            if R.degrees[k] != target:
                fail(f"grading: b_{i} b_{j} has a term at b_{k} of degree {R.degrees[k]}, expected {target}", (i, j, k))
                break
            if not c.is_real():
                fail(f"non-real structure constant in b_{i} b_{j}", (i, j, k))
                break
        if failures:
            break

    u = R.unit_sparse
    if not u:
        fail("unit is zero", None)
    elif any(R.degrees[i] != G.identity for i in u):
        fail("unit is not homogeneous of degree e", tuple(u))
    else:
        for i in range(n):
            e = {i: R.scalar(1)}
            if R.mul_sparse(u, e) != e:
                fail(f"unit law fails on the left for b_{i}", (i,))
                break
            if R.mul_sparse(e, u) != e:
                fail(f"unit law fails on the right for b_{i}", (i,))
                break

    if not failures:
        bad = _assoc_witness(R)
        if bad is not None:
            fail("associativity fails: (b_%d b_%d) b_%d != b_%d (b_%d b_%d)" % (bad + bad), bad)

    supp = set(R.support)
    closed = all(G.add(g, h) in supp for g in supp for h in supp) if len(supp) <= 512 else True
    return ValidationReport(not failures, failures, witness, closed)


def _assoc_witness(R: GradedAlgebra):
    if R.is_monomial:
        fast = _assoc_witness_monomial(R)
        if fast is not False:
            return fast
    n = R.dim
    table = R.table
    for i in range(n):
        row_i = table[i]
        for j in range(n):
            bij = row_i[j]
            for k in range(n):
                left: dict = {}
                for t, c in bij:
                    for s, d in table[t][k]:
                        v = c * d
                        left[s] = left[s] + v if s in left else v
                right: dict = {}
                for t, c in table[j][k]:
                    for s, d in row_i[t]:
                        v = c * d
                        right[s] = right[s] + v if s in right else v
                left = {s: v for s, v in left.items() if v}
                right = {s: v for s, v in right.items() if v}
                if left != right:
                    return (i, j, k)
    return None


def _assoc_witness_monomial(R: GradedAlgebra):
    """Vectorized all-triples check for monomial tables; False if not applicable."""
    n = R.dim
    consts: dict = {}
    P = np.full((n, n), -1, dtype=np.int64)
    C = np.zeros((n, n), dtype=np.int64)
    for i, row in enumerate(R.table):
        for j, terms in enumerate(row):
            if terms:
                (k, c), = terms
                P[i, j] = k
                C[i, j] = consts.setdefault(c, len(consts))
    if len(consts) > 96:
        return False
    values = list(consts)
    prod_ids: dict = {}
    T = np.zeros((max(len(values), 1), max(len(values), 1)), dtype=np.int64)
    for a, x in enumerate(values):
        for b, y in enumerate(values):
            T[a, b] = prod_ids.setdefault(x * y, len(prod_ids))
    valid_jk = P >= 0
    jk = np.where(valid_jk, P, 0)
    for i in range(n):
        ij = P[i]
        valid_ij = ij >= 0
        ij_safe = np.where(valid_ij, ij, 0)
        left_k = np.where(valid_ij[:, None], P[ij_safe, :], -1)
        left_c = T[C[i][:, None], C[ij_safe, :]]
        right_k = np.where(valid_jk, P[i][jk], -1)
        right_c = T[C, C[i][jk]]
        bad = (left_k != right_k) | ((left_k >= 0) & (left_c != right_c))
        if bad.any():
            j, k = map(int, np.argwhere(bad)[0])
            return (i, j, k)
    return None


# -- subalgebras -------------------------------------------------------------

@dataclass(eq=False)
class Subalgebra:
    """Span of homogeneous vectors in ``parent`` closed under multiplication."""

    parent: GradedAlgebra
    basis: list  # sparse vectors, reduced echelon form
    unital: bool = True

    @property
    def dim(self) -> int:
        return len(self.basis)

    @cached_property
    def _echelon(self) -> Echelon:
        ech = Echelon()
        for v in self.basis:
            ech.rows[min(v)] = v
        return ech

    def coordinates(self, v: dict) -> list:
        coords = self._echelon.coordinates(v)
        z = Scalar(0, self.parent.conductor)
        return [coords.get(min(b), z) for b in self.basis]

    def contains(self, v: dict) -> bool:
        return self._echelon.contains(v)

    def degrees(self) -> list:
        return [self.parent.degree_of(b) for b in self.basis]

    @cached_property
    def table(self) -> tuple:
        """Structure constants of the subalgebra in its own basis."""
        P = self.parent
        rows = []
        for x in self.basis:
            row = []
            for y in self.basis:
                coords = self.coordinates(P.mul_sparse(x, y))
                row.append(tuple((k, c) for k, c in enumerate(coords) if c))
            rows.append(tuple(row))
        return tuple(rows)

    def to_algebra(self) -> GradedAlgebra:
        degs = self.degrees()
        if any(d is None for d in degs):
            raise BadInput("subalgebra basis is not homogeneous")
        unit = self.coordinates(self.parent.unit_sparse)
        return make_algebra(self.parent.group, degs, unit, self.table, self.parent.conductor,
                            {"name": f"sub({self.parent.name})"})


def _unit_sub(R: GradedAlgebra, vectors) -> Subalgebra:
    ech = Echelon()
    for v in vectors:
        ech.add(v)
    return Subalgebra(R, ech.basis())


def identity_component(R: GradedAlgebra) -> Subalgebra:
    """Basis of R_e; warns when the components do not all share its dimension."""
    comps = R.components
    e = R.group.identity
    dims = {len(ix) for ix in comps.values()}
    if len(dims) > 1:
        warnings.warn(f"{R.name}: homogeneous components of unequal dimension {sorted(dims)}",
                      NotDivisionCompatible, stacklevel=2)
    one = R.scalar(1)
    return _unit_sub(R, [{i: one} for i in comps.get(e, [])])


def centralizer(R: GradedAlgebra, S) -> Subalgebra:
    """Elements commuting with every basis vector of ``S`` (a Subalgebra or list of sparse vectors).

    Solved one homogeneous component at a time, which is valid because the
    spanning vectors of S are homogeneous.
    """
    vectors = S.basis if isinstance(S, Subalgebra) else [R.to_sparse(v) for v in S]
    one = R.scalar(1)
    table = R.table
    found = []
    for g, idx in R.components.items():
        columns = []
        for b in idx:
            col: dict = {}
            for s_no, s in enumerate(vectors):
                for t, a in s.items():
                    for k, c in table[b][t]:
                        key = (s_no, k)
                        v = a * c
                        col[key] = col[key] + v if key in col else v
                    for k, c in table[t][b]:
                        key = (s_no, k)
                        v = -(a * c)
                        col[key] = col[key] + v if key in col else v
            columns.append({k: v for k, v in col.items() if v})
        if all(not c for c in columns):
            found += [{b: one} for b in idx]
            continue
        for vec in kernel(columns, R.conductor):
            found.append({idx[j]: c for j, c in vec.items()})
    ech = Echelon()
    for v in found:
        ech.add(v)
    # echelon rows of vectors supported in single components stay homogeneous
    return Subalgebra(R, ech.basis())


def _monomial_generators(R: GradedAlgebra) -> list:
    """Basis indices generating R as an algebra, for a monomial table.

    Greedy: a basis vector is added only when words in those chosen so far
    do not reach it.
    """
    table = R.table
    reached = {R.unit_index}
    gens: list = []
    for i in range(R.dim):
        if i in reached:
            continue
        gens.append(i)
        reached.add(i)
        frontier = list(reached)
        while frontier:
            new = []
            for x in frontier:
                for g in gens:
                    for k, _ in table[x][g] + table[g][x]:
                        if k not in reached:
                            reached.add(k)
                            new.append(k)
            frontier = new
    return gens


def center(R: GradedAlgebra) -> Subalgebra:
    """Centralizer of a generating set (all basis vectors unless the table is monomial)."""
    one = R.scalar(1)
    if R.is_monomial and R.unit_index is not None:
        idx = _monomial_generators(R)
    else:
        idx = range(R.dim)
    return centralizer(R, [{i: one} for i in idx])


# -- trace forms and recognition of R, C, H ----------------------------------

def _trace_vector(table, n) -> dict:
    """k -> trace of left multiplication by b_k."""
    tr: dict = {}
    for k in range(n):
        row = table[k]
        acc = None
        for i in range(n):
            for s, c in row[i]:
                if s == i:
                    acc = c if acc is None else acc + c
        if acc:
            tr[k] = acc
    return tr


def _gram(table, n) -> dict:
    tr = _trace_vector(table, n)
    gram: dict = {}
    for i in range(n):
        row = table[i]
        for j in range(n):
            acc = None
            for k, c in row[j]:
                t = tr.get(k)
                if t is not None:
                    acc = c * t if acc is None else acc + c * t
            if acc:
                gram.setdefault(i, {})[j] = acc
    return gram


def trace_form_signature(R) -> tuple:
    """(signature, nondegenerate) of B(x, y) = trace of left multiplication by xy."""
    table = R.table
    n = R.dim
    gram = _gram(table, n)
    for row in gram.values():
        for c in row.values():
            if not c.is_real():
                raise RuntimeError("non-real Gram entry: conductor or construction bug")
    sig, rank = congruence_signature(gram, n)
    return sig, rank == n


def _plain_center_dim(table, n, conductor) -> int:
    columns = []
    for b in range(n):
        col: dict = {}
        for s in range(n):
            for k, c in table[b][s]:
                col[(s, k)] = col[(s, k)] + c if (s, k) in col else c
            for k, c in table[s][b]:
                col[(s, k)] = col[(s, k)] - c if (s, k) in col else -c
        columns.append({k: v for k, v in col.items() if v})
    return len(kernel(columns, conductor))


def recognize_division(S) -> str:
    """'R', 'C', 'H' or 'none' for a unital (sub)algebra of dimension 1, 2 or 4."""
    n = S.dim
    if n == 1:
        return "R"
    if n not in (2, 4):
        return "none"
    sig, nondeg = trace_form_signature(S)
    if n == 2:
        return "C" if nondeg and sig == 0 else "none"
    conductor = S.parent.conductor if isinstance(S, Subalgebra) else S.conductor
    if _plain_center_dim(S.table, n, conductor) != 1:
        return "none"
    return "H" if nondeg and sig == -2 else "none"


@dataclass(frozen=True)
class DivisionReport:
    is_division: bool
    re_dim: int
    re_type: str


def check_division_grading(R: GradedAlgebra) -> DivisionReport:
    """Graded-division test through the identity component.

    Besides R_e being R, C or H, every component must have dim R_e and
    contain an invertible element (one with a two-sided inverse in the
    opposite component), which by R_g = a R_e makes all of R_g invertible.
    """
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", NotDivisionCompatible)
        re = identity_component(R)
    re_type = recognize_division(re)
    comps = R.components
    uniform = len({len(ix) for ix in comps.values()}) == 1
    ok = re_type != "none" and uniform and _components_invertible(R)
    return DivisionReport(ok, re.dim, re_type if ok else "none")


def _components_invertible(R: GradedAlgebra) -> bool:
    G = R.group
    comps = R.components
    one = R.scalar(1)
    unit = R.unit_sparse
    for g, idx in comps.items():
        u = {idx[0]: one}
        back = comps.get(G.neg(g))
        if back is None:
            return False
        # solve u * v = I for v in R_{-g}
        columns = [R.mul_sparse(u, {b: one}) for b in back]
        columns.append({k: -c for k, c in unit.items()})
        sols = [v for v in kernel(columns, R.conductor) if len(back) in v]
        if not sols:
            return False
        sol = sols[0]
        lam = sol[len(back)]
        v = {back[j]: c / lam for j, c in sol.items() if j < len(back)}
        if R.mul_sparse(v, u) != unit or R.mul_sparse(u, v) != unit:
            return False
    return True


def is_simple(R: GradedAlgebra) -> bool:
    try:
        underlying_type(R)
    except NotSimple:
        return False
    return True


def underlying_type(R: GradedAlgebra) -> tuple:
    """(n, D) with R isomorphic to M_n(D) as an ungraded real algebra."""
    sig, nondeg = trace_form_signature(R)
    if not nondeg:
        raise NotSemisimple(f"{R.name}: trace form is degenerate")
    Z = center(R)
    ztype = recognize_division(Z)
    if ztype == "C":
        n = math.isqrt(R.dim // 2)
        if 2 * n * n != R.dim:
            raise NotSimple(f"{R.name}: dimension {R.dim} is not 2n^2")
        return n, "C"
    if ztype != "R":
        raise NotSimple(f"{R.name}: center of dimension {Z.dim} is not a field")
    if sig > 0:
        n = math.isqrt(R.dim)
        if n * n != R.dim:
            raise NotSimple(f"{R.name}: dimension {R.dim} is not n^2")
        return n, "R"
    n = math.isqrt(R.dim // 4)
    if 4 * n * n != R.dim:
        raise NotSimple(f"{R.name}: dimension {R.dim} is not 4n^2")
    return n, "H"


# -- constructions on algebras -------------------------------------------------

def _strip_trivial(orders_list):
    """Concatenate factor orders, dropping order-1 factors, recording kept positions."""
    kept = []
    for block, orders in enumerate(orders_list):
        for pos, d in enumerate(orders):
            if d != 1:
                kept.append((block, pos))
    return kept


def tensor_product(R1: GradedAlgebra, R2: GradedAlgebra) -> GradedAlgebra:
    """Graded tensor product over G1 x G2; basis b_i (x) b_j at index i*dim2 + j.

    Trivial cyclic factors of the product group are dropped.
    """
    N = math.lcm(R1.conductor, R2.conductor)
    kept = _strip_trivial([R1.group.orders, R2.group.orders])
    all_orders = [R1.group.orders, R2.group.orders]
    G = AbelianGroup(tuple(all_orders[b][p] for b, p in kept) or (1,))

    def deg(g1, g2):
        parts = (g1, g2)
        return tuple(parts[b][p] for b, p in kept) or (0,)

    n1, n2 = R1.dim, R2.dim
    degrees = [deg(g1, g2) for g1 in R1.degrees for g2 in R2.degrees]
    conv: dict = {}

    def co(c):
        out = conv.get(c)
        if out is None:
            out = conv[c] = c.coerce(N)
        return out

    pair_cache: dict = {}
    table = []
    for i1 in range(n1):
        for i2 in range(n2):
            row = []
            for j1 in range(n1):
                t1 = R1.table[i1][j1]
                for j2 in range(n2):
                    t2 = R2.table[i2][j2]
                    terms = []
                    for k1, c1 in t1:
                        for k2, c2 in t2:
                            key = (c1, c2)
                            c = pair_cache.get(key)
                            if c is None:
                                c = pair_cache[key] = co(c1) * co(c2)
                            terms.append((k1 * n2 + k2, c))
                    row.append(tuple(terms))
            table.append(tuple(row))
    unit = [Scalar(0, N)] * (n1 * n2)
    for i1, a in R1.unit_sparse.items():
        for i2, b in R2.unit_sparse.items():
            unit[i1 * n2 + i2] = co(a) * co(b)
    meta = {"name": f"{R1.name} (x) {R2.name}"}
    return GradedAlgebra(G, tuple(degrees), tuple(unit), tuple(table), N, meta)


def regrade(R: GradedAlgebra, hom: GroupHom, name: str | None = None) -> GradedAlgebra:
    """Relabel degrees through any homomorphism out of R.group."""
    if hom.domain != R.group:
        raise BadInput(f"homomorphism domain {hom.domain.orders} != grading group {R.group.orders}")
    degrees = tuple(hom(g) for g in R.degrees)
    meta = {k: v for k, v in R.meta.items() if k not in ("expected", "frame", "generators")}
    meta["name"] = name or f"{R.name}/regraded"
    return GradedAlgebra(hom.codomain, degrees, R.unit, R.table, R.conductor, meta)


def coarsen(R: GradedAlgebra, proj: GroupHom, name: str | None = None) -> GradedAlgebra:
    """Factor-grading along a surjective homomorphism."""
    if proj.domain != R.group:
        raise BadInput(f"projection domain {proj.domain.orders} != grading group {R.group.orders}")
    if not proj.is_surjective():
        raise BadInput("coarsening requires a surjective homomorphism")
    return regrade(R, proj, name or f"{R.name}/coarsened")


# -- commutation data -----------------------------------------------------------

@dataclass
class CommutationData:
    squares: dict  # g -> Scalar with u_g^2 = squares[g] * I  (only for 2g = e)
    sigma: dict  # (g, h) -> Scalar with u_g u_h = sigma * u_h u_g
    centroid: str = "R"
    nonsingular: bool = False
    bimultiplicative: bool = True
    roots_of_unity: bool = True


def _default_frame(R: GradedAlgebra):
    frame = R.meta.get("frame")
    if frame:
        return {tuple(g): R.to_sparse(v) for g, v in frame.items()}
    one = R.scalar(1)
    if all(len(ix) == 1 for ix in R.components.values()):
        return {g: {ix[0]: one} for g, ix in R.components.items()}
    return None


def commutation_data(R: GradedAlgebra, frame=None) -> CommutationData:
    """Squares and commutation factors of a frame u_g, one spanning vector per component.

    Components must be one-dimensional over the centroid: R itself, or C
    when ``R.meta['centroid'] == 'C'`` with ``R.meta['complex_unit']`` the
    central element playing i (Pauli gradings).
    """
    centroid = R.meta.get("centroid", "R")
    if frame is None:
        frame = _default_frame(R)
    else:
        frame = {tuple(g): R.to_sparse(v) for g, v in frame.items()}
    expected = 1 if centroid == "R" else 2
    if frame is None or any(len(ix) != expected for ix in R.components.values()):
        raise NotMonomial(f"{R.name}: components are not one-dimensional over the centroid")
    N = R.conductor
    G = R.group
    one = R.scalar(1)
    if centroid == "C":
        J = R.to_sparse(R.meta["complex_unit"])
        i_unit = Scalar.i(N)

    def ratio_to(v: dict, g) -> Scalar:
        """z with v = z * u_g, z real (centroid R) or complex via the complex unit."""
        u = frame[g]
        if centroid == "R":
            p = min(u)
            z = v.get(p, Scalar(0, N)) / u[p]
            if axpy(v, -z, u):
                raise NotMonomial(f"{R.name}: product not proportional to the frame at degree {g}")
            return z
        Ju = R.mul_sparse(J, u)
        cols = [u, Ju, {k: -c for k, c in v.items()}]
        sol = next(s for s in kernel(cols, N) if 2 in s)
        lam = sol[2]
        a = sol.get(0, Scalar(0, N)) / lam
        b = sol.get(1, Scalar(0, N)) / lam
        return a + b * i_unit

    support = list(frame)
    sigma = {}
    squares = {}
    for g in support:
        for h in support:
            gh = G.add(g, h)
            p = R.mul_sparse(frame[g], frame[h])
            q = R.mul_sparse(frame[h], frame[g])
            sigma[(g, h)] = ratio_to(p, gh) / ratio_to(q, gh)
        if G.add(g, g) == G.identity:
            sq = R.mul_sparse(frame[g], frame[g])
            e = G.identity
            squares[g] = ratio_to(sq, e) / ratio_to(R.unit_sparse, e)
    exp = G.exponent
    roots = all(s ** exp == one for s in set(sigma.values()))
    gens = [g for g in G.gens() if g in frame]
    bimult = all(
        sigma[(G.add(g, t), h)] == sigma[(g, h)] * sigma[(t, h)]
        for g in support for t in gens for h in support
    )
    nonsing = all(any(sigma[(g, h)] != one for h in support) for g in support if g != G.identity)
    return CommutationData(squares, sigma, centroid, nonsing, bimult, roots)


# -- universal group -------------------------------------------------------------

def universal_grading_group(R: GradedAlgebra) -> AbelianGroup:
    """U(Gamma): support elements subject to s1 s2 = s3 whenever R_s1 R_s2 != 0.

    Relations are first used as definitions (a Tietze elimination along a
    breadth-first closure), so Smith normal form only runs on a matrix with
    as many columns as generators that could not be eliminated.
    """
    pairs = set()
    deg = R.degrees
    for i, row in enumerate(R.table):
        di = deg[i]
        for j, terms in enumerate(row):
            if terms:
                pairs.add((di, deg[j]))
    G = R.group
    rels = [(a, b, G.add(a, b)) for a, b in pairs]
    expr: dict = {}
    nfree = 0
    pending = set(R.support)
    while pending:
        changed = True
        while changed:
            changed = False
            for a, b, c in rels:
                if c not in expr and a in expr and b in expr:
                    va, vb = expr[a], expr[b]
                    width = max(len(va), len(vb))
                    expr[c] = [x + y for x, y in zip(va + [0] * (width - len(va)), vb + [0] * (width - len(vb)))]
                    pending.discard(c)
                    changed = True
        if pending:
            g = min(pending)
            expr[g] = [0] * nfree + [1]
            nfree += 1
            pending.discard(g)
    if nfree == 0:
        return AbelianGroup((1,))
    rows = []
    for a, b, c in rels:
        va, vb, vc = (expr[x] + [0] * (nfree - len(expr[x])) for x in (a, b, c))
        row = [x + y - z for x, y, z in zip(va, vb, vc)]
        if any(row):
            rows.append(row)
    return smith_universal_group(rows, nfree)


def support_group(R: GradedAlgebra) -> AbelianGroup:
    """Abstract type of the subgroup generated by the support."""
    return subgroup_type(R.group, R.group.subgroup(R.support))


# -- generated subalgebras -------------------------------------------------------

def graded_subalgebra(R: GradedAlgebra, gens) -> Subalgebra:
    """Unital subalgebra generated by homogeneous elements, kept homogeneous degree by degree."""
    gens = [R.to_sparse(v) for v in gens]
    for v in gens:
        if v and R.degree_of(v) is None:
            raise BadInput("generator is not homogeneous")
    buckets: dict = {}

    def add(v):
        if not v:
            return False
        g = R.degree_of(v)
        return buckets.setdefault(g, Echelon()).add(v)

    add(R.unit_sparse)
    for v in gens:
        add(v)
    gens = [v for v in gens if v]
    frontier = [v for e in buckets.values() for v in e.basis()]
    while frontier:
        new = []
        for x in frontier:
            for y in gens:
                for p in (R.mul_sparse(x, y), R.mul_sparse(y, x)):
                    if add(p):
                        new.append(p)
        frontier = new
    basis = [v for g in sorted(buckets) for v in buckets[g].basis()]
    ech = Echelon()
    for v in basis:
        ech.add(v)
    return Subalgebra(R, ech.basis())
