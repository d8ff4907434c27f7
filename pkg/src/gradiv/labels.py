"""Labels for the thirteen division-grading types and the named building blocks."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import BadInput

TYPES = ("i", "ii", "iii", "iv", "v", "vi", "vii", "viii", "ix", "x", "xi", "xii", "xiii")

BLOCKS = ("R", "C", "C2", "H", "H2", "H4", "M2_2", "M2_4", "M2_8", "M2C_Z4", "M4_4", "M4_32", "M4C_Z4Z2Z2")

# smallest admissible k for types i..xii
MIN_K = {
    "i": 0, "ii": 1, "iii": 2, "iv": 0, "v": 0, "vi": 0,
    "vii": 0, "viii": 1, "ix": 1, "x": 1, "xi": 0, "xii": 1,
}

# D of M_n(D) for each type
DIVISION_RING = {
    "i": "R", "ii": "R", "iii": "R",
    "iv": "H", "v": "H", "vi": "H",
    "vii": "C", "viii": "C", "ix": "C", "x": "C", "xi": "C", "xii": "C", "xiii": "C",
}

# dimension of the identity component
RE_DIM = {
    "i": 1, "ii": 2, "iii": 4, "iv": 1, "v": 2, "vi": 4,
    "vii": 1, "viii": 2, "ix": 1, "x": 2, "xi": 4, "xii": 4, "xiii": 2,
}

# types whose normal form contains an order-4 factor
EXPONENT_4 = {"ix", "x", "xii"}


@dataclass(frozen=True, order=True)
class ClassLabel:
    kind: str
    k: int | None = None
    pauli_orders: tuple | None = None

    def __post_init__(self):
        if self.kind in BLOCKS:
            if self.k is not None or self.pauli_orders is not None:
                raise BadInput(f"building block {self.kind} takes no parameters")
            return
        if self.kind not in TYPES:
            raise BadInput(f"unknown type {self.kind!r}")
        if self.kind == "xiii":
            if self.pauli_orders is None or self.k is not None:
                raise BadInput("type xiii takes the orders of H and no k")
            orders = tuple(int(d) for d in self.pauli_orders)
            if not orders or any(d < 1 for d in orders):
                raise BadInput(f"bad factor orders {orders}")
            object.__setattr__(self, "pauli_orders", orders)
            return
        if self.k is None or self.pauli_orders is not None:
            raise BadInput(f"type {self.kind} takes k and no H")
        if self.k < MIN_K[self.kind]:
            raise BadInput(f"type {self.kind} requires k >= {MIN_K[self.kind]}, got {self.k}")

    @property
    def is_block(self) -> bool:
        return self.kind in BLOCKS

    @property
    def D(self) -> str | None:
        return DIVISION_RING.get(self.kind)

    def __str__(self):
        if self.is_block:
            return f"block={self.kind}"
        if self.kind == "xiii":
            return f"type=xiii H={','.join(map(str, self.pauli_orders))}"
        return f"type={self.kind} k={self.k}"

    @classmethod
    def parse(cls, text: str) -> "ClassLabel":
        fields = {}
        for part in text.split():
            key, sep, value = part.partition("=")
            if not sep:
                raise BadInput(f"malformed label field {part!r}")
            fields[key] = value
        try:
            if "block" in fields:
                return cls(fields["block"])
            kind = fields["type"]
            if kind == "xiii":
                return cls(kind, pauli_orders=tuple(int(x) for x in fields["H"].split(",")))
            return cls(kind, int(fields["k"]))
        except (KeyError, ValueError) as exc:
            raise BadInput(f"malformed label {text!r}") from exc
