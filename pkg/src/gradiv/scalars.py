"""Exact arithmetic in cyclotomic fields Q(zeta_N).

A :class:`Scalar` stores rational coordinates with respect to the power
basis ``1, z, z^2, ..., z^(phi(N)-1)`` of ``Q(z)``, ``z = exp(2*pi*i/N)``,
reduced modulo the N-th cyclotomic polynomial.  Conductors are always
multiples of 8 so that ``i``, ``omega`` (a square root of ``i``) and
``sqrt(2)`` are available.

>>> w = Scalar.omega()
>>> w * w == Scalar.i()
True
>>> Scalar.sqrt2() ** 2
Scalar(2)
"""

from __future__ import annotations

import cmath
import math
from fractions import Fraction
from functools import lru_cache
from threading import Lock

from mpmath import iv

from .errors import DivisionByZero, NotReal

__all__ = [
    "Scalar",
    "cyclotomic_poly",
    "euler_phi",
    "real_sign",
    "scalar_arith",
    "parse_rational",
    "format_rational",
]


def _norm(x):
    if isinstance(x, Fraction) and x.denominator == 1:
        return int(x.numerator)
    return x


def euler_phi(n: int) -> int:
    result, m, p = n, n, 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


def _poly_divexact(num, den):
    # integer polynomials, lowest degree first; den monic
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for shift in range(len(out) - 1, -1, -1):
        c = num[shift + len(den) - 1]
        out[shift] = c
        if c:
            for t, d in enumerate(den):
                num[shift + t] -= c * d
    assert not any(num[: len(den) - 1]), "inexact cyclotomic division"
    return out


@lru_cache(maxsize=None)
def cyclotomic_poly(n: int) -> tuple:
    """Coefficients of Phi_n (lowest degree first), via x^n - 1 = prod Phi_d."""
    poly = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            poly = _poly_divexact(poly, cyclotomic_poly(d))
    return tuple(poly)


class _Field:
    """Per-conductor tables: x^k mod Phi_N for 0 <= k < N."""

    def __init__(self, n: int):
        self.n = n
        phi_poly = cyclotomic_poly(n)
        self.deg = len(phi_poly) - 1
        deg = self.deg
        table = []
        cur = [0] * deg
        cur[0] = 1
        for _ in range(n):
            table.append(tuple(cur))
            # multiply by x, reduce the overflow with the monic Phi_N
            top = cur[-1]
            cur = [0] + cur[:-1]
            if top:
                for t in range(deg):
                    cur[t] -= top * phi_poly[t]
        self.powers = tuple(table)

    def reduce(self, poly):
        deg, n = self.deg, self.n
        out = [0] * deg
        for k, c in enumerate(poly):
            if not c:
                continue
            if k < deg:
                out[k] += c
            else:
                for t, r in enumerate(self.powers[k % n]):
                    if r:
                        out[t] += c * r
        return tuple(_norm(c) for c in out)


@lru_cache(maxsize=None)
def _field(n: int) -> _Field:
    if n <= 0 or n % 8:
        raise ValueError(f"conductor must be a positive multiple of 8, got {n}")
    return _Field(n)


@lru_cache(maxsize=None)
def _embed_table(n: int, m: int):
    """Images of z_n^k (k < phi(n)) inside Q(z_m), m a multiple of n."""
    big = _field(m)
    step = m // n
    return tuple(big.powers[(k * step) % m] for k in range(_field(n).deg))


_IV_LOCK = Lock()
_MUL_CACHE: dict = {}
_MUL_CACHE_LIMIT = 200_000


class Scalar:
    """Element of the cyclotomic field Q(zeta_N); immutable and hashable.

    Values with different conductors compare equal when they agree after
    coercion to the common field; hashes are only consistent for a fixed
    conductor, which is all the algebra code ever mixes in one table.
    """

    __slots__ = ("conductor", "coeffs", "_hash")

    def __init__(self, value=0, conductor: int = 8):
        f = _field(conductor)
        if isinstance(value, Scalar):
            value = value.coerce(conductor).coeffs
            coeffs = value
        elif isinstance(value, (int, Fraction)):
            coeffs = (_norm(Fraction(value)),) + (0,) * (f.deg - 1)
        else:
            coeffs = f.reduce([Fraction(c) if not isinstance(c, int) else c for c in value])
        object.__setattr__(self, "conductor", conductor)
        object.__setattr__(self, "coeffs", tuple(coeffs))
        object.__setattr__(self, "_hash", None)

    @classmethod
    def _raw(cls, n, coeffs):
        obj = object.__new__(cls)
        object.__setattr__(obj, "conductor", n)
        object.__setattr__(obj, "coeffs", coeffs)
        object.__setattr__(obj, "_hash", None)
        return obj

    def __setattr__(self, key, value):
        raise AttributeError("Scalar is immutable")

    # constants ---------------------------------------------------------
    @classmethod
    def zeta(cls, n: int = 8, power: int = 1) -> "Scalar":
        f = _field(n)
        return cls._raw(n, f.powers[power % n])

    @classmethod
    def root_of_unity(cls, order: int, power: int = 1, conductor: int | None = None) -> "Scalar":
        """The canonical primitive ``order``-th root of unity raised to ``power``."""
        n = conductor or math.lcm(8, order)
        if n % order:
            raise ValueError(f"conductor {n} does not contain {order}-th roots")
        return cls.zeta(n, (n // order) * power)

    @classmethod
    def i(cls, conductor: int = 8) -> "Scalar":
        return cls.zeta(conductor, conductor // 4)

    @classmethod
    def omega(cls, conductor: int = 8) -> "Scalar":
        return cls.zeta(conductor, conductor // 8)

    @classmethod
    def sqrt2(cls, conductor: int = 8) -> "Scalar":
        w = cls.omega(conductor)
        return w + w.conj()

    # structure ---------------------------------------------------------
    def coerce(self, conductor: int) -> "Scalar":
        n = self.conductor
        if conductor == n:
            return self
        if conductor % n:
            raise ValueError(f"cannot embed Q(zeta_{n}) into Q(zeta_{conductor})")
        if self.is_rational():
            deg = _field(conductor).deg
            return Scalar._raw(conductor, (self.coeffs[0],) + (0,) * (deg - 1))
        table = _embed_table(n, conductor)
        deg = _field(conductor).deg
        out = [0] * deg
        for c, img in zip(self.coeffs, table):
            if c:
                for t, r in enumerate(img):
                    if r:
                        out[t] += c * r
        return Scalar._raw(conductor, tuple(_norm(c) for c in out))

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def is_one(self) -> bool:
        return self.coeffs[0] == 1 and self.is_rational()

    def rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError("scalar is not rational")
        return Fraction(self.coeffs[0])

    def conj(self) -> "Scalar":
        """Complex conjugation, the automorphism z -> z^-1."""
        if self.is_rational():
            return self
        n = self.conductor
        poly = [0] * n
        for k, c in enumerate(self.coeffs):
            if c:
                poly[(-k) % n] += c
        return Scalar._raw(n, _field(n).reduce(poly))

    def is_real(self) -> bool:
        return self.is_rational() or self.conj() == self

    def real_part(self) -> "Scalar":
        return (self + self.conj()) * Fraction(1, 2)

    def imag_part(self) -> "Scalar":
        """Imaginary part as a (real) field element: (a - conj a) / 2i."""
        i = Scalar.i(self.conductor)
        return (self - self.conj()) * (-i) * Fraction(1, 2)

    def to_complex(self) -> complex:
        n = self.conductor
        return sum(float(c) * cmath.exp(2j * math.pi * k / n) for k, c in enumerate(self.coeffs) if c)

    def sign(self) -> int:
        return real_sign(self)

    # arithmetic --------------------------------------------------------
    def _align(self, other):
        if isinstance(other, Scalar):
            if other.conductor == self.conductor:
                return self, other
            n = math.lcm(self.conductor, other.conductor)
            return self.coerce(n), other.coerce(n)
        if isinstance(other, (int, Fraction)):
            return self, Scalar(other, self.conductor)
        return None, None

    def __add__(self, other):
        a, b = self._align(other)
        if a is None:
            return NotImplemented
        return Scalar._raw(a.conductor, tuple(_norm(x + y) for x, y in zip(a.coeffs, b.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return Scalar._raw(self.conductor, tuple(-x for x in self.coeffs))

    def __pos__(self):
        return self

    def __sub__(self, other):
        a, b = self._align(other)
        if a is None:
            return NotImplemented
        return Scalar._raw(a.conductor, tuple(_norm(x - y) for x, y in zip(a.coeffs, b.coeffs)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 1:
                return self
            return Scalar._raw(self.conductor, tuple(_norm(x * other) for x in self.coeffs))
        a, b = self._align(other)
        if a is None:
            return NotImplemented
        if b.is_rational():
            c = b.coeffs[0]
            return a if c == 1 else Scalar._raw(a.conductor, tuple(_norm(x * c) for x in a.coeffs))
        if a.is_rational():
            c = a.coeffs[0]
            return b if c == 1 else Scalar._raw(a.conductor, tuple(_norm(x * c) for x in b.coeffs))
        key = (a.conductor, a.coeffs, b.coeffs)
        hit = _MUL_CACHE.get(key)
        if hit is not None:
            return hit
        deg = len(a.coeffs)
        prod = [0] * (2 * deg - 1)
        for s, x in enumerate(a.coeffs):
            if x:
                for t, y in enumerate(b.coeffs):
                    if y:
                        prod[s + t] += x * y
        out = Scalar._raw(a.conductor, _field(a.conductor).reduce(prod))
        if len(_MUL_CACHE) < _MUL_CACHE_LIMIT:
            _MUL_CACHE[key] = out
        return out

    __rmul__ = __mul__

    def inv(self) -> "Scalar":
        if self.is_zero():
            raise DivisionByZero("inverse of zero scalar")
        if self.is_rational():
            return Scalar._raw(self.conductor, (_norm(1 / Fraction(self.coeffs[0])),) + self.coeffs[1:])
        # solve (multiplication-by-self matrix) v = e_0 over Q
        n, deg = self.conductor, len(self.coeffs)
        basis = [Scalar._raw(n, _field(n).powers[j]) for j in range(deg)]
        cols = [(self * e).coeffs for e in basis]
        rows = [[Fraction(cols[j][r]) for j in range(deg)] + [Fraction(int(r == 0))] for r in range(deg)]
        for c in range(deg):
            piv = next(r for r in range(c, deg) if rows[r][c] != 0)
            rows[c], rows[piv] = rows[piv], rows[c]
            pv = rows[c][c]
            rows[c] = [x / pv for x in rows[c]]
            for r in range(deg):
                if r != c and rows[r][c] != 0:
                    f = rows[r][c]
                    rows[r] = [x - f * y for x, y in zip(rows[r], rows[c])]
        return Scalar._raw(n, tuple(_norm(rows[r][deg]) for r in range(deg)))

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise DivisionByZero("division by zero")
            return self * (Fraction(1) / Fraction(other))
        if isinstance(other, Scalar):
            return self * other.inv()
        return NotImplemented

    def __rtruediv__(self, other):
        return Scalar(other, self.conductor) * self.inv()

    def __pow__(self, e: int):
        if e < 0:
            return self.inv() ** (-e)
        result = Scalar(1, self.conductor)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, Scalar):
            if other.conductor == self.conductor:
                return self.coeffs == other.coeffs
            a, b = self._align(other)
            return a.coeffs == b.coeffs
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.coeffs[0] == other
        return NotImplemented

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash(self.coeffs[0]) if self.is_rational() else hash((self.conductor, self.coeffs))
            object.__setattr__(self, "_hash", h)
        return h

    def __bool__(self):
        return not self.is_zero()

    def __repr__(self):
        if self.is_rational():
            return f"Scalar({self.coeffs[0]})"
        return f"Scalar({list(map(str, self.coeffs))}, conductor={self.conductor})"

    def __str__(self):
        if self.is_rational():
            return str(self.coeffs[0])
        terms = []
        for k, c in enumerate(self.coeffs):
            if c:
                mono = "" if k == 0 else ("z" if k == 1 else f"z^{k}")
                if k and c == 1:
                    terms.append(mono)
                elif k and c == -1:
                    terms.append("-" + mono)
                else:
                    terms.append(f"{c}{'*' if mono else ''}{mono}")
        return " + ".join(terms).replace("+ -", "- ") + f"  [z=zeta_{self.conductor}]"


def real_sign(a: Scalar) -> int:
    """Sign of a real field element under z -> exp(2*pi*i/N).

    Exact zero is decided on the reduced form; otherwise the embedding is
    evaluated in interval arithmetic with doubling precision until the
    enclosure excludes zero.
    """
    if a.is_rational():
        c = a.coeffs[0]
        return (c > 0) - (c < 0)
    if a.conj() != a:
        raise NotReal(f"{a!r} is not fixed by complex conjugation")
    n = a.conductor
    prec = 64
    terms = [(Fraction(c), k) for k, c in enumerate(a.coeffs) if c]
    with _IV_LOCK:
        saved = iv.prec
        try:
            while True:
                iv.prec = prec
                two_pi = 2 * iv.pi
                total = iv.mpf(0)
                for c, k in terms:
                    total += iv.mpf(c.numerator) / c.denominator * iv.cos(two_pi * k / n)
                if total.a > 0:
                    return 1
                if total.b < 0:
                    return -1
                prec *= 2
        finally:
            iv.prec = saved


def scalar_arith(op: str, a: Scalar, b: Scalar | None = None) -> Scalar:
    """Functional front end: ``op`` in {add, mul, neg, inv, conj}."""
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    if op == "neg":
        return -a
    if op == "inv":
        return a.inv()
    if op == "conj":
        return a.conj()
    raise ValueError(f"unknown scalar op {op!r}")


def parse_rational(text) -> Fraction:
    if isinstance(text, int):
        return Fraction(text)
    if not isinstance(text, str):
        raise ValueError(f"rational must be a string 'p/q', got {text!r}")
    return Fraction(text.strip())


def format_rational(x) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"
