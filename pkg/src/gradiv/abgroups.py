"""Finite abelian groups as products of cyclic factors.

Elements are plain tuples of residues in additive notation; the group
object knows the moduli.  Smith normal form drives quotients and the
universal group of a grading.
"""

from __future__ import annotations

import itertools
import math
import os
from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import BadInput, TooLarge

Element = tuple


def max_group_size() -> int:
    return int(os.environ.get("GDA_MAX_GROUP", "256"))


@dataclass(frozen=True)
class AbelianGroup:
    """Z_{d1} x ... x Z_{dr}.  An order of 0 stands for an infinite cyclic factor."""

    orders: tuple

    def __post_init__(self):
        orders = tuple(int(d) for d in self.orders)
        if not orders:
            orders = (1,)
        if any(d < 0 for d in orders):
            raise BadInput(f"negative factor order in {orders}")
        object.__setattr__(self, "orders", orders)

    @classmethod
    def parse(cls, text: str) -> "AbelianGroup":
        try:
            return cls(tuple(int(t) for t in text.split(",") if t.strip()))
        except ValueError as exc:
            raise BadInput(f"bad group literal {text!r}") from exc

    def __str__(self):
        return ",".join(map(str, self.orders))

    @property
    def rank(self) -> int:
        return len(self.orders)

    def is_finite(self) -> bool:
        return 0 not in self.orders

    @property
    def order(self) -> int:
        if not self.is_finite():
            return 0
        return math.prod(self.orders)

    @property
    def identity(self) -> Element:
        return (0,) * self.rank

    def gens(self) -> list:
        return [tuple(int(i == t and d != 1) for i in range(self.rank)) for t, d in enumerate(self.orders)]

    def elements(self) -> Iterator[Element]:
        if not self.is_finite():
            raise TooLarge("cannot enumerate an infinite group")
        return itertools.product(*(range(d) for d in self.orders))

    def element(self, residues: Sequence[int]) -> Element:
        if len(residues) != self.rank:
            raise BadInput(f"element {tuple(residues)} has wrong length for group {self.orders}")
        return tuple(r % d if d else r for r, d in zip(residues, self.orders))

    def parse_element(self, text: str) -> Element:
        try:
            return self.element([int(t) for t in text.split(",")])
        except ValueError as exc:
            raise BadInput(f"bad element literal {text!r}") from exc

    def contains(self, x) -> bool:
        return len(x) == self.rank and all(0 <= r < d for r, d in zip(x, self.orders) if d)

    def add(self, x: Element, y: Element) -> Element:
        return tuple((a + b) % d if d else a + b for a, b, d in zip(x, y, self.orders))

    def neg(self, x: Element) -> Element:
        return tuple((-a) % d if d else -a for a, d in zip(x, self.orders))

    def sub(self, x: Element, y: Element) -> Element:
        return self.add(x, self.neg(y))

    def mul(self, k: int, x: Element) -> Element:
        return tuple((k * a) % d if d else k * a for a, d in zip(x, self.orders))

    def element_order(self, x: Element) -> int:
        o = 1
        for a, d in zip(x, self.orders):
            if d == 0:
                if a:
                    return 0
                continue
            o = math.lcm(o, d // math.gcd(a, d))
        return o

    @property
    def exponent(self) -> int:
        return math.lcm(*self.orders) if self.is_finite() else 0

    def invariant_factors(self) -> tuple:
        """Canonical invariant factors d1 | d2 | ... (order-1 factors dropped)."""
        return invariant_factors(self.orders)

    def canonical(self) -> "AbelianGroup":
        return AbelianGroup(self.invariant_factors())

    def is_isomorphic(self, other: "AbelianGroup") -> bool:
        return self.invariant_factors() == other.invariant_factors()

    def product(self, other: "AbelianGroup") -> "AbelianGroup":
        return AbelianGroup(self.orders + other.orders)

    def subgroup(self, gens) -> set:
        """Elements of the subgroup generated by ``gens`` (finite groups)."""
        seen = {self.identity}
        frontier = [self.identity]
        gens = [tuple(g) for g in gens]
        while frontier:
            nxt = []
            for x in frontier:
                for g in gens:
                    y = self.add(x, g)
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
            frontier = nxt
        return seen


@dataclass(frozen=True)
class GroupHom:
    """Homomorphism given by the images of the domain's standard generators."""

    domain: AbelianGroup
    codomain: AbelianGroup
    images: tuple

    def __post_init__(self):
        images = tuple(self.codomain.element(im) for im in self.images)
        object.__setattr__(self, "images", images)
        if len(images) != self.domain.rank:
            raise BadInput("need one image per domain generator")
        for d, im in zip(self.domain.orders, images):
            o = self.codomain.element_order(im)
            if d and (o == 0 or d % o):
                raise BadInput(f"image {im} has order {o} not dividing {d}")

    @classmethod
    def identity(cls, G: AbelianGroup) -> "GroupHom":
        return cls(G, G, tuple(G.gens()))

    def __call__(self, x: Element) -> Element:
        out = self.codomain.identity
        for a, im in zip(x, self.images):
            if a:
                out = self.codomain.add(out, self.codomain.mul(a, im))
        return out

    def compose(self, other: "GroupHom") -> "GroupHom":
        """self after other."""
        return GroupHom(other.domain, self.codomain, tuple(self(im) for im in other.images))

    def image(self) -> set:
        return self.codomain.subgroup(self.images)

    def is_surjective(self) -> bool:
        return len(self.image()) == self.codomain.order

    def is_injective(self) -> bool:
        return len(self.image()) == self.domain.order

    def is_isomorphism(self) -> bool:
        return self.domain.order == self.codomain.order and self.is_surjective()

    def inverse(self) -> "GroupHom":
        if not self.is_isomorphism():
            raise BadInput("homomorphism is not invertible")
        back = {self(x): x for x in self.domain.elements()}
        return GroupHom(self.codomain, self.domain, tuple(back[g] for g in self.codomain.gens()))


def group_profile(G: AbelianGroup):
    """(order, exponent, 2-rank, is_elementary_2)."""
    rank2 = sum(1 for d in G.orders if d % 2 == 0 and d)
    return G.order, G.exponent, rank2, G.exponent <= 2 and G.is_finite()


# -- Smith normal form -----------------------------------------------------

def _identity(n):
    return [[int(i == j) for j in range(n)] for i in range(n)]


def smith_normal_form(matrix):
    """Return (D, U, V) with U * A * V = D diagonal, d1 | d2 | ..., U and V unimodular."""
    A = [list(map(int, row)) for row in matrix]
    m = len(A)
    n = len(A[0]) if m else 0
    U, V = _identity(m), _identity(n)

    def swap_rows(i, j):
        A[i], A[j] = A[j], A[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in A:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]

    def add_row(dst, src, k):  # row dst += k * row src
        A[dst] = [a + k * b for a, b in zip(A[dst], A[src])]
        U[dst] = [a + k * b for a, b in zip(U[dst], U[src])]

    def add_col(dst, src, k):
        for row in A:
            row[dst] += k * row[src]
        for row in V:
            row[dst] += k * row[src]

    for t in range(min(m, n)):
        while True:
            entries = [(abs(A[i][j]), i, j) for i in range(t, m) for j in range(t, n) if A[i][j]]
            if not entries:
                break
            _, i, j = min(entries)
            swap_rows(t, i)
            swap_cols(t, j)
            done = True
            for i in range(t + 1, m):
                if A[i][t]:
                    add_row(i, t, -(A[i][t] // A[t][t]))
                    if A[i][t]:
                        done = False
            for j in range(t + 1, n):
                if A[t][j]:
                    add_col(j, t, -(A[t][j] // A[t][t]))
                    if A[t][j]:
                        done = False
            if not done:
                continue
            p = A[t][t]
            bad = next(((i, j) for i in range(t + 1, m) for j in range(t + 1, n) if A[i][j] % p), None)
            if bad is None:
                break
            add_row(t, bad[0], 1)
        if t < m and t < n and A[t][t] < 0:
            A[t] = [-a for a in A[t]]
            U[t] = [-a for a in U[t]]
    return A, U, V


def invariant_factors(orders) -> tuple:
    orders = list(orders)
    D, _, _ = smith_normal_form([[d if i == j else 0 for j in range(len(orders))] for i, d in enumerate(orders)])
    out = tuple(D[i][i] for i in range(len(orders)) if D[i][i] != 1)
    return out or (1,)


def _echelon_rows(rows, ncols):
    """Integer row-echelon basis of the lattice spanned by ``rows``."""
    basis: dict = {}
    for row in rows:
        row = list(map(int, row))
        for c in range(ncols):
            if not row[c]:
                continue
            piv = basis.get(c)
            if piv is None:
                if row[c] < 0:
                    row = [-a for a in row]
                basis[c] = row
                break
            # extended gcd combination of the two rows on column c
            a, b = piv[c], row[c]
            g, x, y = _xgcd(a, b)
            new_piv = [x * p + y * r for p, r in zip(piv, row)]
            row = [(a // g) * r - (b // g) * p for p, r in zip(piv, row)]
            basis[c] = new_piv
    return [basis[c] for c in sorted(basis)]


def _xgcd(a, b):
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


def smith_universal_group(relations, ngens: int | None = None) -> AbelianGroup:
    """Abelian group on ``ngens`` generators subject to integer relation rows.

    Infinite cyclic factors are reported with order 0.
    """
    relations = [list(map(int, r)) for r in relations]
    if ngens is None:
        if not relations:
            raise BadInput("need ngens when there are no relations")
        ngens = len(relations[0])
    rows = _echelon_rows(relations, ngens)
    if not rows:
        return AbelianGroup((0,) * ngens)
    D, _, _ = smith_normal_form(rows)
    diag = [D[i][i] if i < len(D) else 0 for i in range(ngens)]
    out = [d for d in diag if d != 1]
    nonzero = sorted(d for d in out if d)
    return AbelianGroup(tuple(nonzero + [0] * (len(out) - len(nonzero))) or (1,))


def quotient_by(G: AbelianGroup, kill) -> tuple:
    """Quotient of G by the subgroup generated by ``kill``, with its projection."""
    kill = [G.element(k) for k in kill]
    if all(k == G.identity for k in kill):
        return G, GroupHom.identity(G)
    r = G.rank
    rows = [[d if i == j else 0 for j in range(r)] for i, d in enumerate(G.orders)]
    rows += [list(G.element(k)) for k in kill]
    D, _, V = smith_normal_form(rows)
    diag = [D[i][i] for i in range(r)]
    keep = [i for i, d in enumerate(diag) if d != 1]
    if not keep:
        Q = AbelianGroup((1,))
    else:
        Q = AbelianGroup(tuple(diag[i] for i in keep))

    def project(x):
        coords = [sum(x[s] * V[s][i] for s in range(r)) for i in range(r)]
        if not keep:
            return (0,)
        return Q.element([coords[i] for i in keep])

    proj = GroupHom(G, Q, tuple(project(g) for g in G.gens()))
    return Q, proj


def subgroup_type(G: AbelianGroup, elements) -> AbelianGroup:
    """Invariant-factor form of a finite subgroup given by its element set.

    Uses the counts |H[p^k]| of elements killed by p^k, which determine a
    finite abelian group up to isomorphism.
    """
    elements = list(elements)
    size = len(elements)
    primes = [p for p in range(2, size + 1) if size % p == 0 and all(p % q for q in range(2, int(p ** 0.5) + 1))]
    parts = []  # per prime: exponents of cyclic p-factors
    for p in primes:
        counts = [1]
        k = 1
        while True:
            n_k = sum(1 for x in elements if G.mul(p ** k, x) == G.identity)
            counts.append(n_k)
            if n_k == counts[-2]:
                break
            k += 1
        # number of factors with exponent >= j is log_p(counts[j]/counts[j-1])
        ge = []
        for j in range(1, len(counts)):
            ratio, t = counts[j] // counts[j - 1], 0
            while ratio > 1:
                ratio //= p
                t += 1
            ge.append(t)
        exps = []
        for j, t in enumerate(ge, start=1):
            nxt = ge[j] if j < len(ge) else 0
            exps += [j] * (t - nxt)
        parts.append((p, sorted(exps)))
    orders = []
    for p, exps in parts:
        orders += [p ** e for e in exps]
    return AbelianGroup(invariant_factors(orders) if orders else (1,))


# -- isomorphism enumeration ----------------------------------------------

def enumerate_isomorphisms(G1: AbelianGroup, G2: AbelianGroup, bound: int | None = None) -> Iterator[GroupHom]:
    """Every isomorphism G1 -> G2, by backtracking over generator images.

    Candidate images must have the same order as the generator; partial
    assignments whose generated subgroup is too small to extend are pruned.
    """
    bound = max_group_size() if bound is None else bound
    if not (G1.is_finite() and G2.is_finite()):
        raise TooLarge("isomorphism search needs finite groups")
    if max(G1.order, G2.order) > bound:
        raise TooLarge(f"group of order {max(G1.order, G2.order)} exceeds bound {bound}")
    if G1.invariant_factors() != G2.invariant_factors():
        return
    by_order: dict = {}
    for x in G2.elements():
        by_order.setdefault(G2.element_order(x), []).append(x)
    gen_orders = [G1.element_order(g) for g in G1.gens()]
    r = G1.rank
    target = G2.order

    def extend(images, subgroup):
        t = len(images)
        if t == r:
            if len(subgroup) == target:
                yield GroupHom(G1, G2, tuple(images))
            return
        # remaining generators can multiply |subgroup| by at most prod(orders)
        if len(subgroup) * math.prod(gen_orders[t:]) < target:
            return
        for cand in by_order.get(gen_orders[t], ()):
            grown = _grow(G2, subgroup, cand)
            yield from extend(images + [cand], grown)

    yield from extend([], {G2.identity})


def _grow(G, subgroup, g):
    if g in subgroup:
        return subgroup
    out = set(subgroup)
    cur = g
    while cur not in subgroup:
        out |= {G.add(s, cur) for s in subgroup}
        cur = G.add(cur, g)
    return out


def enumerate_automorphisms(G: AbelianGroup, bound: int | None = None) -> Iterator[GroupHom]:
    return enumerate_isomorphisms(G, G, bound)
