"""Builders for twisted group algebras, Clifford gradings, the named blocks,
Pauli gradings, the thirteen catalog types and block-matrix algebras End_D(U).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product as iproduct

from .abgroups import AbelianGroup, GroupHom, invariant_factors, quotient_by
from .errors import BadInput, InconsistentPresentation, NotSquareGroup
from .galgebra import GradedAlgebra, coarsen, make_algebra, tensor_product
from .labels import BLOCKS, EXPONENT_4, MIN_K, RE_DIM, TYPES, ClassLabel
from .scalars import Scalar

__all__ = [
    "Presentation",
    "CliffordSignature",
    "DimensionFunction",
    "from_presentation",
    "clifford_graded",
    "building_block",
    "pauli_grading",
    "pauli_for_group",
    "catalog",
    "catalog_labels",
    "expected_invariants",
    "endo_algebra",
    "trivially_graded",
]


@dataclass
class Presentation:
    """Generators x_i of degree ``degrees[i]`` with x_i^m_i = s_i and x_i x_j = c_ij x_j x_i.

    ``comm`` maps (i, j) to c_ij; missing pairs commute, and c_ji defaults
    to the inverse of a given c_ij.
    """

    group: AbelianGroup
    degrees: list
    powers: list
    power_scalars: list
    comm: dict = field(default_factory=dict)
    name: str = ""

    @property
    def rank(self) -> int:
        return len(self.powers)

    def conductor(self) -> int:
        n = 8
        for s in list(self.power_scalars) + list(self.comm.values()):
            if isinstance(s, Scalar):
                n = math.lcm(n, s.conductor)
        return n

    def commutator(self, i: int, j: int, N: int) -> Scalar:
        if (i, j) in self.comm:
            return Scalar(self.comm[(i, j)], N)
        if (j, i) in self.comm:
            return Scalar(self.comm[(j, i)], N).inv()
        return Scalar(1, N)


def from_presentation(P: Presentation) -> GradedAlgebra:
    """Twisted group algebra with basis of normal-ordered monomials x_1^e_1 ... x_r^e_r."""
    G = P.group
    r = P.rank
    if not (len(P.degrees) == len(P.power_scalars) == r):
        raise InconsistentPresentation("degrees, powers and power_scalars must have equal length")
    if any(m < 1 for m in P.powers):
        raise InconsistentPresentation("power exponents must be positive")
    N = P.conductor()
    degs = [G.element(g) for g in P.degrees]
    s = [Scalar(x, N) for x in P.power_scalars]
    for i in range(r):
        if G.mul(P.powers[i], degs[i]) != G.identity:
            raise InconsistentPresentation(f"x_{i + 1}^{P.powers[i]} has nonzero degree")
        if not s[i]:
            raise InconsistentPresentation(f"power scalar of x_{i + 1} is zero")
    for (i, j), c in P.comm.items():
        if (j, i) in P.comm and Scalar(c, N) * Scalar(P.comm[(j, i)], N) != 1:
            raise InconsistentPresentation(f"c_{i + 1}{j + 1} c_{j + 1}{i + 1} != 1")
    c = [[P.commutator(i, j, N) for j in range(r)] for i in range(r)]
    for i in range(r):
        for j in range(r):
            if i != j and c[i][j] ** P.powers[i] != 1:
                raise InconsistentPresentation(f"c_{i + 1}{j + 1}^{P.powers[i]} != 1: x_{i + 1}^{P.powers[i]} is not central")

    monos = list(iproduct(*(range(m) for m in P.powers)))
    index = {e: n for n, e in enumerate(monos)}
    degrees = []
    for e in monos:
        g = G.identity
        for a, d in zip(e, degs):
            g = G.add(g, G.mul(a, d))
        degrees.append(g)

    one = Scalar(1, N)
    table = []
    for a in monos:
        row = []
        for b in monos:
            coeff = one
            # move x_i^b_i left past x_j^a_j for j > i
            for i in range(r):
                if b[i]:
                    for j in range(i + 1, r):
                        if a[j]:
                            coeff = coeff * c[j][i] ** (a[j] * b[i])
            e = []
            for i in range(r):
                t = a[i] + b[i]
                if t >= P.powers[i]:
                    t -= P.powers[i]
                    coeff = coeff * s[i]
                e.append(t)
            row.append(((index[tuple(e)], coeff),))
        table.append(row)
    unit = [one if n == index[(0,) * r] else Scalar(0, N) for n in range(len(monos))]
    generators = []
    for i in range(r):
        e = [0] * r
        if P.powers[i] > 1:
            e[i] = 1
            generators.append(index[tuple(e)])
    meta = {"name": P.name or f"presentation({r} generators)", "generators": generators}
    return make_algebra(G, degrees, unit, table, N, meta)


@dataclass(frozen=True)
class CliffordSignature:
    p: int
    m: int

    def __post_init__(self):
        if self.p < 0 or self.m < 0:
            raise BadInput("inertia indices must be non-negative")


def clifford_graded(sig: CliffordSignature | tuple) -> GradedAlgebra:
    """C^gr(p, m): p anticommuting generators squaring to -1, then m squaring to +1."""
    if not isinstance(sig, CliffordSignature):
        sig = CliffordSignature(*sig)
    r = sig.p + sig.m
    G = AbelianGroup((2,) * r) if r else AbelianGroup((1,))
    degrees = [tuple(int(i == j) for j in range(r)) for i in range(r)]
    comm = {(i, j): -1 for i in range(r) for j in range(i + 1, r)}
    P = Presentation(G, degrees, [2] * r, [-1] * sig.p + [1] * sig.m, comm, f"Cgr({sig.p},{sig.m})")
    return from_presentation(P)


def trivially_graded(R: GradedAlgebra, name: str | None = None) -> GradedAlgebra:
    """Coarsening onto the trivial group."""
    T = AbelianGroup((1,))
    hom = GroupHom(R.group, T, tuple((0,) for _ in R.group.orders))
    return coarsen(R, hom, name or f"{R.name}/trivial")


def _kill(R: GradedAlgebra, g, name: str) -> GradedAlgebra:
    _, proj = quotient_by(R.group, [g])
    return coarsen(R, proj, name)


def _named(R: GradedAlgebra, name: str) -> GradedAlgebra:
    R.meta["name"] = name
    return R


@lru_cache(maxsize=None)
def _block(name: str) -> GradedAlgebra:
    if name == "R":
        return from_presentation(Presentation(AbelianGroup((1,)), [], [], [], {}, "R"))
    if name == "C2":
        return from_presentation(Presentation(AbelianGroup((2,)), [(1,)], [2], [-1], {}, "C2"))
    if name == "C":
        return trivially_graded(_block("C2"), "C")
    if name == "H4":
        return _named(clifford_graded((2, 0)), "H4")
    if name == "H2":
        return _kill(_block("H4"), (1, 0), "H2")
    if name == "H":
        return trivially_graded(_block("H4"), "H")
    if name == "M2_4":
        # generators A, B with A^2 = B^2 = I, AB = -BA; C = AB has C^2 = -I
        return _named(clifford_graded((0, 2)), "M2_4")
    if name == "M2_2":
        return _kill(_block("M2_4"), (1, 1), "M2_2")
    if name == "M2_8":
        G = AbelianGroup((4, 2))
        P = Presentation(G, [(1, 0), (0, 1)], [4, 2], [-1, -1], {(0, 1): -1}, "M2_8")
        return from_presentation(P)
    if name == "M2C_Z4":
        return _kill(_block("M2_8"), (0, 1), "M2C_Z4")
    if name == "M4_32":
        G = AbelianGroup((4, 2, 2, 2))
        degs = [(1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)]
        comm = {(a, b): -1 for a in range(4) for b in range(a + 1, 4)}
        return from_presentation(Presentation(G, degs, [4, 2, 2, 2], [-1, -1, -1, -1], comm, "M4_32"))
    if name == "M4C_Z4Z2Z2":
        return _kill(_block("M4_32"), (0, 0, 1, 0), "M4C_Z4Z2Z2")
    if name == "M4_4":
        return _named(tensor_product(_block("H4"), _block("H")), "M4_4")
    raise BadInput(f"unknown building block {name!r}; expected one of {', '.join(BLOCKS)}")


def building_block(name: str) -> GradedAlgebra:
    """One of the named graded division algebras (see ``labels.BLOCKS``)."""
    if name not in BLOCKS:
        raise BadInput(f"unknown building block {name!r}; expected one of {', '.join(BLOCKS)}")
    return _block(name)


# -- Pauli gradings ---------------------------------------------------------------

def pauli_grading(h_orders) -> GradedAlgebra:
    """Real form of the clock/shift grading of M_n(C) by H x H, n = |H|.

    The complex basis is X_g = prod over factors of clock^k shift^l, with
    shift * clock = eps * clock * shift for eps = zeta_N^(N/d); as a real
    algebra each X_g contributes the pair (X_g, i X_g).  Degrees are listed
    as (clock exponents, shift exponents).
    """
    h_orders = tuple(int(d) for d in h_orders) or (1,)
    if any(d < 1 for d in h_orders):
        raise BadInput(f"bad factor orders {h_orders}")
    h_orders = tuple(d for d in h_orders if d > 1) or (1,)
    trivial = h_orders == (1,)
    N = math.lcm(8, *h_orders)
    G = AbelianGroup((1,)) if trivial else AbelianGroup(h_orders + h_orders)
    r = 0 if trivial else len(h_orders)
    eps = [Scalar.root_of_unity(d, 1, N) for d in h_orders]
    elems = list(G.elements())
    gindex = {g: n for n, g in enumerate(elems)}
    i_unit = Scalar.i(N)
    i_pows = [Scalar(1, N), i_unit, Scalar(-1, N), -i_unit]

    def cplx(g, h):
        c = Scalar(1, N)
        for f in range(r):
            ex = g[r + f] * h[f]
            if ex:
                c = c * eps[f] ** ex
        return c

    dim = 2 * len(elems)
    table = [[None] * dim for _ in range(dim)]
    for g in elems:
        for h in elems:
            gh = gindex[G.add(g, h)]
            c = cplx(g, h)
            for s in (0, 1):
                for t in (0, 1):
                    z = i_pows[s + t] * c
                    re, im = z.real_part(), z.imag_part()
                    terms = []
                    if re:
                        terms.append((2 * gh, re))
                    if im:
                        terms.append((2 * gh + 1, im))
                    table[2 * gindex[g] + s][2 * gindex[h] + t] = tuple(terms)
    degrees = [g for g in elems for _ in (0, 1)]
    unit = [Scalar(int(n == 2 * gindex[G.identity]), N) for n in range(dim)]
    one = Scalar(1, N)
    frame = {g: {2 * gindex[g]: one} for g in elems}
    meta = {
        "name": f"Pauli({','.join(map(str, h_orders))})",
        "centroid": "C",
        "complex_unit": {2 * gindex[G.identity] + 1: one},
        "frame": frame,
        "pauli_orders": h_orders,
    }
    return make_algebra(G, degrees, unit, table, N, meta)


def pauli_for_group(G: AbelianGroup) -> GradedAlgebra:
    """Pauli grading by G, which must be of the form H x H."""
    factors = [d for d in G.invariant_factors() if d > 1]
    counts: dict = {}
    for d in factors:
        counts[d] = counts.get(d, 0) + 1
    if any(c % 2 for c in counts.values()):
        raise NotSquareGroup(f"group {G} is not of the form H x H")
    h = []
    for d in sorted(counts):
        h += [d] * (counts[d] // 2)
    return pauli_grading(tuple(h) or (1,))


# -- the catalog --------------------------------------------------------------------

def _tensor_all(parts) -> GradedAlgebra:
    out = parts[0]
    for p in parts[1:]:
        out = tensor_product(out, p)
    return out


def _normal_form(kind: str, k: int) -> list:
    m = [_block("M2_4")]
    forms = {
        "i": lambda: m * k,
        "ii": lambda: [_block("M2_2")] + m * (k - 1),
        "iii": lambda: [_block("M4_4")] + m * (k - 2),
        "iv": lambda: [_block("H4")] + m * k,
        "v": lambda: [_block("H2")] + m * k,
        "vi": lambda: [_block("H")] + m * k,
        "vii": lambda: [_block("C2")] + m * k,
        "viii": lambda: [_block("C2"), _block("M2_2")] + m * (k - 1),
        "ix": lambda: [_block("M2_8")] + m * (k - 1),
        "x": lambda: [_block("M2C_Z4")] + m * (k - 1),
        "xi": lambda: m * k + [_block("C2"), _block("H")],
        "xii": lambda: [_block("M2_8")] + m * (k - 1) + [_block("H")],
    }
    return forms[kind]() or [_block("R")]


def catalog(label: ClassLabel | str) -> GradedAlgebra:
    """The tensor-product normal form of a type, or a building block."""
    if isinstance(label, str):
        label = ClassLabel.parse(label)
    if label.is_block:
        R = building_block(label.kind)
    elif label.kind == "xiii":
        R = pauli_grading(label.pauli_orders)
    else:
        R = _tensor_all(_normal_form(label.kind, label.k))
    meta = dict(R.meta)
    meta["name"] = str(label)
    meta["expected"] = expected_invariants(label)
    return GradedAlgebra(R.group, R.degrees, R.unit, R.table, R.conductor, meta)


def catalog_labels(max_k: int = 3, pauli=((2,), (3,), (4,), (2, 2))) -> list:
    out = []
    for kind in TYPES[:-1]:
        out += [ClassLabel(kind, k) for k in range(MIN_K[kind], max_k + 1)]
    out += [ClassLabel("xiii", pauli_orders=tuple(h)) for h in pauli]
    return out


def expected_invariants(label: ClassLabel) -> dict | None:
    """Predicted invariant fields of a catalog type (None for building blocks)."""
    if label.is_block:
        return None
    kind = label.kind
    re_dim = RE_DIM[kind]
    if kind == "xiii":
        H = AbelianGroup(label.pauli_orders)
        n = H.order
        group_order = n * n
        exponent = H.exponent
        D = "C"
    else:
        k = label.k
        D = {"i": "R", "ii": "R", "iii": "R", "iv": "H", "v": "H", "vi": "H"}.get(kind, "C")
        if kind in ("xi", "xii"):
            n = 2 ** (k + 1)
        else:
            n = 2 ** k
        dim = {"R": n * n, "H": 4 * n * n, "C": 2 * n * n}[D]
        group_order = dim // re_dim
        exponent = 4 if kind in EXPONENT_4 else (2 if group_order > 1 else 1)
    dim = {"R": n * n, "H": 4 * n * n, "C": 2 * n * n}[D]
    re_type = {1: "R", 2: "C", 4: "H"}[re_dim]
    return {
        "dim": dim,
        "n": n,
        "D": D,
        "re_dim": re_dim,
        "re_type": re_type,
        "center_support_trivial": D != "C" or kind == "xiii",
        "exponent": exponent,
        "elementary_2": exponent <= 2,
        "group_order": group_order,
    }


# -- End_D(U) -------------------------------------------------------------------------

@dataclass
class DimensionFunction:
    """kappa on cosets of the support of D, keyed by coset representatives."""

    D: GradedAlgebra
    kappa: dict

    def support_subgroup(self) -> set:
        return self.D.group.subgroup(self.D.support)

    def cosets(self) -> dict:
        """Least representative -> sorted coset, for every coset of the support."""
        G = self.D.group
        H = self.support_subgroup()
        out = {}
        seen = set()
        for g in sorted(G.elements()):
            if g in seen:
                continue
            coset = sorted(G.add(g, h) for h in H)
            seen.update(coset)
            out[coset[0]] = coset
        return out

    def normalized(self) -> dict:
        """kappa keyed by least coset representatives, zero entries dropped."""
        G = self.D.group
        reps = {}
        for rep, coset in self.cosets().items():
            for g in coset:
                reps[g] = rep
        out: dict = {}
        for g, count in self.kappa.items():
            g = G.element(g)
            if count < 0:
                raise BadInput(f"negative multiplicity at {g}")
            rep = reps[g]
            if rep in out and out[rep] != count:
                raise BadInput(f"two multiplicities given for the coset of {rep}")
            if count:
                out[rep] = count
        return dict(sorted(out.items()))

    @property
    def size(self) -> int:
        return sum(self.normalized().values())


def endo_algebra(df: DimensionFunction) -> GradedAlgebra:
    """Block matrix algebra M_s(D), s = sum of kappa, with the elementary grading by coset shifts.

    Basis E_ab (x) d at index (a * s + b) * dim D + d, of degree g_a + deg d - g_b.
    """
    kappa = df.normalized()
    s = sum(kappa.values())
    if s < 1:
        raise BadInput("kappa must have positive total multiplicity")
    D = df.D
    G = D.group
    shifts = [g for g, count in kappa.items() for _ in range(count)]
    nd = D.dim

    def idx(a, b, d):
        return (a * s + b) * nd + d

    degrees = []
    for a in range(s):
        for b in range(s):
            for d in range(nd):
                degrees.append(G.sub(G.add(shifts[a], D.degrees[d]), shifts[b]))
    dim = s * s * nd
    table = [[()] * dim for _ in range(dim)]
    for a in range(s):
        for b in range(s):
            for c in range(s):
                for d1 in range(nd):
                    row = table[idx(a, b, d1)]
                    for d2 in range(nd):
                        row[idx(b, c, d2)] = tuple((idx(a, c, k), v) for k, v in D.table[d1][d2])
    z = Scalar(0, D.conductor)
    unit = [z] * dim
    for a in range(s):
        for d, v in D.unit_sparse.items():
            unit[idx(a, a, d)] = v
    spec = ";".join(",".join(map(str, g)) + f":{c}" for g, c in kappa.items())
    meta = {"name": f"M({D.name}; {spec})"}
    return GradedAlgebra(G, tuple(degrees), tuple(unit), tuple(tuple(r) for r in table), D.conductor, meta)
