"""Exact linear algebra over cyclotomic scalars.

Vectors are sparse ``{index: Scalar}`` dicts unless stated otherwise; zero
entries are never stored.
"""

from __future__ import annotations

from .scalars import Scalar, real_sign


def sparse(vec) -> dict:
    """Dense sequence -> sparse dict (zeros dropped)."""
    return {i: c for i, c in enumerate(vec) if c}


def dense(vec: dict, n: int, conductor: int = 8) -> list:
    zero = Scalar(0, conductor)
    return [vec.get(i, zero) for i in range(n)]


def axpy(y: dict, a, x: dict) -> dict:
    """Return y + a*x as a new sparse vector."""
    out = dict(y)
    for k, c in x.items():
        v = out.get(k)
        v = a * c if v is None else v + a * c
        if v:
            out[k] = v
        else:
            out.pop(k, None)
    return out


def scale(a, x: dict) -> dict:
    if not a:
        return {}
    return {k: a * c for k, c in x.items()}


class Echelon:
    """Incrementally maintained reduced row-echelon basis of a span.

    ``add`` reduces a vector against the basis and keeps it when it is
    independent; rows stay fully reduced with leading coefficient 1, so
    coordinates of a member are read off at the pivot positions.
    """

    def __init__(self):
        self.rows: dict = {}  # pivot index -> row

    def __len__(self):
        return len(self.rows)

    def reduce(self, v: dict) -> dict:
        v = dict(v)
        for p, row in self.rows.items():
            c = v.get(p)
            if c:
                v = axpy(v, -c, row)
        return v

    def add(self, v: dict) -> bool:
        v = self.reduce(v)
        if not v:
            return False
        p = min(v)
        inv = v[p].inv()
        v = {k: c * inv for k, c in v.items()}
        for q, row in list(self.rows.items()):
            c = row.get(p)
            if c:
                self.rows[q] = axpy(row, -c, v)
        self.rows[p] = v
        return True

    def contains(self, v: dict) -> bool:
        return not self.reduce(v)

    def coordinates(self, v: dict) -> dict:
        """Coordinates of ``v`` w.r.t. the basis rows (keyed by pivot); v must lie in the span."""
        coords = {p: v[p] for p in self.rows if p in v}
        rest = dict(v)
        for p, c in coords.items():
            rest = axpy(rest, -c, self.rows[p])
        if rest:
            raise ValueError("vector is not in the span")
        return coords

    def basis(self) -> list:
        return [self.rows[p] for p in sorted(self.rows)]

    def pivots(self) -> list:
        return sorted(self.rows)


def kernel(columns: list, conductor: int = 8) -> list:
    """Null space of the matrix whose j-th column is the sparse dict ``columns[j]``.

    Returns a basis of coefficient vectors (sparse dicts over column indices).
    """
    ncols = len(columns)
    rows: dict = {}
    for j, col in enumerate(columns):
        for key, c in col.items():
            rows.setdefault(key, {})[j] = c
    ech = Echelon()
    for row in rows.values():
        ech.add(row)
        if len(ech) == ncols:
            return []
    pivots = set(ech.pivots())
    one = Scalar(1, conductor)
    out = []
    for free in range(ncols):
        if free in pivots:
            continue
        vec = {free: one}
        for p, row in ech.rows.items():
            c = row.get(free)
            if c:
                vec[p] = -c
        out.append(vec)
    return out


def congruence_signature(gram: dict, n: int):
    """(signature, rank) of a real symmetric matrix given as ``{i: {j: Scalar}}``.

    Symmetric Gaussian elimination; when no diagonal pivot is left, a
    hyperbolic pair (i, j) is rotated into a diagonal pivot by e_i += e_j.
    Rows with fewest entries are eliminated first to limit fill-in.
    """
    B = {i: dict(row) for i, row in gram.items() if row}
    active = set(B)
    pos = neg = 0
    while True:
        active = {i for i in active if B.get(i)}
        if not active:
            break
        diag = [i for i in active if B[i].get(i)]
        if diag:
            p = min(diag, key=lambda i: (len(B[i]), i))
        else:
            i = min(active, key=lambda i: (len(B[i]), i))
            j = min(B[i])
            # congruence e_i <- e_i + e_j: row/col i become row/col i + row/col j
            r = axpy(B[i], 1, B[j])
            r[i] = r.get(i, 0) + r.get(j, 0)
            r = {k: c for k, c in r.items() if c}
            for k in set(B[i]) | set(r):
                if k == i:
                    continue
                if k in r:
                    B.setdefault(k, {})[i] = r[k]
                elif k in B:
                    B[k].pop(i, None)
            B[i] = r
            p = i
        d = B[p][p]
        s = real_sign(d)
        if s > 0:
            pos += 1
        elif s < 0:
            neg += 1
        row = B.pop(p)
        dinv = d.inv()
        others = [k for k in row if k != p]
        for k in others:
            B[k].pop(p, None)
        for a in others:
            fa = row[a] * dinv
            ra = B[a]
            for b in others:
                v = ra.get(b)
                v = -fa * row[b] if v is None else v - fa * row[b]
                if v:
                    ra[b] = v
                else:
                    ra.pop(b, None)
        active.discard(p)
    return pos - neg, pos + neg
