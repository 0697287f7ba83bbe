"""Reproducible random instance generation with optional planted witnesses.

Randomness comes from SplitMix64, chosen for its portable, documented state
update so any implementation can reproduce an instance from its seed:

    state <- (state + 0x9E3779B97F4A7C15) mod 2^64
    z <- state; z <- (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9 mod 2^64
    z <- (z ^ (z >> 27)) * 0x94D049BB133111EB mod 2^64
    output <- z ^ (z >> 31)

A random bit is the lowest output bit; a bounded draw is output mod bound.
Draw orders are fixed and documented on each generator.
"""

from __future__ import annotations

from dataclasses import dataclass

from .boolpoly import BoolPoly, MqInstance, VariableRegistry
from .gf2 import BitMatrix, BitVector, mat_vec_mul
from .mld_to_mq import MldInstance

__all__ = ["SplitMix64", "GenSpec", "gen_mld", "gen_mq"]

_MASK64 = (1 << 64) - 1


class SplitMix64:
    """SplitMix64 pseudo-random generator (see module docstring for the rule)."""

    __slots__ = ("state",)

    def __init__(self, seed: int) -> None:
        self.state = seed & _MASK64

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def bit(self) -> int:
        return self.next_u64() & 1

    def below(self, bound: int) -> int:
        if bound < 1:
            raise ValueError("bound must be positive")
        return self.next_u64() % bound


@dataclass(frozen=True)
class GenSpec:
    """Generation parameters; t applies to decoding instances only."""

    seed: int
    n: int
    m: int
    t: int | None = None
    planted: bool = False


def gen_mld(spec: GenSpec) -> tuple[MldInstance, BitVector | None]:
    """Random decoding instance, optionally planted.

    Draw order: H row-major one bit per entry; then, if planted, a support
    of exactly t positions via a partial Fisher-Yates shuffle (swap index
    drawn with ``below``), with s = H v^T; otherwise m syndrome bits.
    Returns the instance and the planted solution (None when not planted).
    """
    if spec.n < 1 or spec.m < 1:
        raise ValueError("need n >= 1 and m >= 1")
    if spec.t is None or not 0 <= spec.t <= spec.n:
        raise ValueError(f"weight bound {spec.t} out of range")
    rng = SplitMix64(spec.seed)
    rows = []
    for _ in range(spec.m):
        mask = 0
        for j in range(spec.n):
            mask |= rng.bit() << j
        rows.append(mask)
    h = BitMatrix(spec.m, spec.n, tuple(rows))
    if spec.planted:
        pool = list(range(spec.n))
        for i in range(spec.t):
            j = i + rng.below(spec.n - i)
            pool[i], pool[j] = pool[j], pool[i]
        v_bits = 0
        for j in pool[:spec.t]:
            v_bits |= 1 << j
        v = BitVector(spec.n, v_bits)
        return MldInstance(h, mat_vec_mul(h, v), spec.t), v
    s_bits = 0
    for i in range(spec.m):
        s_bits |= rng.bit() << i
    return MldInstance(h, BitVector(spec.m, s_bits), spec.t), None


def gen_mq(spec: GenSpec) -> tuple[MqInstance, BitVector | None]:
    """Random quadratic system, optionally planted.

    Draw order per equation: quadratic coefficients for pairs i < j in
    lexicographic order, then linear coefficients by index, then (only when
    not planted) the constant.  When planted, an assignment is drawn after
    all equations (one bit per variable) and each constant is set so the
    equation vanishes there.  Returns the instance and the planted
    assignment (None when not planted).
    """
    if spec.n < 1 or spec.m < 1:
        raise ValueError("need n >= 1 and m >= 1")
    rng = SplitMix64(spec.seed)
    n = spec.n
    drafts: list[list[int]] = []
    for _ in range(spec.m):
        masks = []
        for i in range(n):
            for j in range(i + 1, n):
                if rng.bit():
                    masks.append((1 << i) | (1 << j))
        for i in range(n):
            if rng.bit():
                masks.append(1 << i)
        if not spec.planted and rng.bit():
            masks.append(0)
        drafts.append(masks)
    plant = None
    if spec.planted:
        bits = 0
        for i in range(n):
            bits |= rng.bit() << i
        plant = BitVector(n, bits)
        for masks in drafts:
            if BoolPoly.from_masks(masks).evaluate(bits):
                masks.append(0)
    eqs = tuple(BoolPoly.from_masks(masks) for masks in drafts)
    registry = VariableRegistry.originals(n)
    return MqInstance(n, eqs, registry), plant
