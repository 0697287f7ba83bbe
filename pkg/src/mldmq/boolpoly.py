"""Multilinear Boolean polynomials and quadratic system instances.

Polynomials live in the idempotent quotient GF(2)[x]/(x^2 - x) and are kept
in algebraic normal form: a monomial is an integer bitmask over variable
indices (mask 0 is the constant 1) and a polynomial is a frozenset of masks.
Addition is symmetric difference of the mask sets, multiplication unions
variable sets term by term, so equality of polynomials is set equality.

Variable indices are 0-based internally; the file formats print them
1-based.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb

from .gf2 import BitVector

__all__ = [
    "VariableRegistry",
    "BoolPoly",
    "MqInstance",
    "mq_size",
    "satisfies_mq",
    "mask_vars",
    "mask_of_vars",
]

#: Recognised variable provenance tags.
ORIGINS = (
    "original",
    "quadratize-aux",
    "copy-aux",
    "chain-aux",
    "rename-aux",
    "counter",
    "comparator",
    "padding",
    "coefficient",
)


def mask_vars(mask: int) -> tuple[int, ...]:
    """Variable indices of a monomial mask, ascending."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


def mask_of_vars(indices) -> int:
    mask = 0
    for i in indices:
        mask |= 1 << i
    return mask


class VariableRegistry:
    """Ordered list of variables with symbolic names and origin tags."""

    __slots__ = ("_names", "_origins")

    def __init__(self) -> None:
        self._names: list[str] = []
        self._origins: list[str] = []

    @classmethod
    def originals(cls, n: int, prefix: str = "x") -> "VariableRegistry":
        reg = cls()
        for i in range(n):
            reg.fresh(f"{prefix}{i + 1}", "original")
        return reg

    def fresh(self, name: str, origin: str) -> int:
        if origin not in ORIGINS:
            raise ValueError(f"unknown origin tag {origin!r}")
        self._names.append(name)
        self._origins.append(origin)
        return len(self._names) - 1

    def clone(self) -> "VariableRegistry":
        reg = VariableRegistry()
        reg._names = list(self._names)
        reg._origins = list(self._origins)
        return reg

    def name(self, vid: int) -> str:
        return self._names[vid]

    def origin(self, vid: int) -> str:
        return self._origins[vid]

    def __len__(self) -> int:
        return len(self._names)


@dataclass(frozen=True)
class BoolPoly:
    """Multilinear polynomial as a frozenset of monomial masks."""

    terms: frozenset[int] = field(default_factory=frozenset)

    @classmethod
    def zero(cls) -> "BoolPoly":
        return cls(frozenset())

    @classmethod
    def one(cls) -> "BoolPoly":
        return cls(frozenset((0,)))

    @classmethod
    def var(cls, index: int) -> "BoolPoly":
        return cls(frozenset((1 << index,)))

    @classmethod
    def from_masks(cls, masks) -> "BoolPoly":
        acc: dict[int, int] = {}
        for m in masks:
            acc[m] = acc.get(m, 0) ^ 1
        return cls(frozenset(m for m, c in acc.items() if c))

    def is_zero(self) -> bool:
        return not self.terms

    def is_one(self) -> bool:
        return self.terms == frozenset((0,))

    def degree(self) -> int:
        return max((m.bit_count() for m in self.terms), default=0)

    def variables_mask(self) -> int:
        mask = 0
        for m in self.terms:
            mask |= m
        return mask

    def variables(self) -> tuple[int, ...]:
        return mask_vars(self.variables_mask())

    def canonical_terms(self) -> list[int]:
        """Monomials sorted degree first, then lexicographically by index."""
        return sorted(self.terms, key=lambda m: (m.bit_count(), mask_vars(m)))

    def __add__(self, other: "BoolPoly") -> "BoolPoly":
        return BoolPoly(self.terms ^ other.terms)

    def __mul__(self, other: "BoolPoly") -> "BoolPoly":
        acc: dict[int, int] = {}
        for a in self.terms:
            for b in other.terms:
                m = a | b
                acc[m] = acc.get(m, 0) ^ 1
        return BoolPoly(frozenset(m for m, c in acc.items() if c))

    def evaluate(self, bits: int) -> int:
        """Value at the 0/1 assignment packed into ``bits``."""
        acc = 0
        for m in self.terms:
            if bits & m == m:
                acc ^= 1
        return acc

    def substitute(self, var: int, value: int) -> "BoolPoly":
        """Fix one variable to a constant; it no longer occurs in the result."""
        if value not in (0, 1):
            raise ValueError(f"value must be a bit, got {value!r}")
        vmask = 1 << var
        acc: dict[int, int] = {}
        for m in self.terms:
            if m & vmask:
                if value == 0:
                    continue
                m ^= vmask
            acc[m] = acc.get(m, 0) ^ 1
        return BoolPoly(frozenset(m for m, c in acc.items() if c))


@dataclass(eq=False)
class MqInstance:
    """System of degree-<=2 Boolean polynomial equations f = 0."""

    nvars: int
    equations: tuple[BoolPoly, ...]
    registry: VariableRegistry | None = None

    def __post_init__(self) -> None:
        if self.nvars < 0:
            raise ValueError("negative variable count")
        limit = 1 << self.nvars
        for i, eq in enumerate(self.equations):
            if eq.degree() > 2:
                raise ValueError(f"equation {i} has degree {eq.degree()} > 2")
            if eq.variables_mask() >= limit:
                raise ValueError(f"equation {i} uses a variable index >= {self.nvars}")
        if self.registry is not None and len(self.registry) != self.nvars:
            raise ValueError("registry size does not match nvars")

    @property
    def m(self) -> int:
        return len(self.equations)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MqInstance):
            return NotImplemented
        return self.nvars == other.nvars and self.equations == other.equations


def mq_size(inst: MqInstance) -> int:
    """Instance bit size m * (C(n,2) + n + 1)."""
    n = inst.nvars
    return inst.m * (comb(n, 2) + n + 1)


def satisfies_mq(inst: MqInstance, assign: BitVector) -> bool:
    """True when every equation evaluates to zero at the assignment."""
    if assign.n != inst.nvars:
        raise ValueError(f"assignment length {assign.n}, expected {inst.nvars}")
    bits = assign.bits
    return all(eq.evaluate(bits) == 0 for eq in inst.equations)
