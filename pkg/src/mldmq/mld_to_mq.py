"""Reduction from syndrome decoding to quadratic Boolean systems.

Three equation groups over one shared registry encode a decoding instance
(H, s, t): the parity-check rows become linear equations in the codeword
variables, a bitwise counter driven by a carry recursion accumulates the
Hamming weight into ell = floor(log2 n) + 1 counter bits per prefix, and a
comparator polynomial on the final counter enforces weight <= t.  Everything
above degree two goes through the product-definition rewriter, so the output
is a valid quadratic-system instance whose first n variables are exactly the
codeword coordinates.
"""

from __future__ import annotations

from dataclasses import dataclass

from .boolpoly import BoolPoly, MqInstance, VariableRegistry, satisfies_mq
from .gf2 import BitMatrix, BitVector, WeightBits, bit_length_for, mat_vec_mul, project
from .normalize import Definition, TransformLog, extend_witness, quadratize

__all__ = [
    "MldInstance",
    "mld_size",
    "satisfies_mld",
    "parity_check_equations",
    "counter_trace",
    "weight_counter_system",
    "CounterLayout",
    "ComparatorPolys",
    "comparator_system",
    "threshold_poly",
    "threshold_equations",
    "MldToMqReduction",
    "reduce_mld_to_mq",
    "project_witness",
    "lift_witness",
]


@dataclass(frozen=True)
class MldInstance:
    """Decoding instance: does some v with H v^T = s^T have weight <= t?"""

    h: BitMatrix
    s: BitVector
    t: int

    def __post_init__(self) -> None:
        if self.s.n != self.h.rows:
            raise ValueError(f"syndrome length {self.s.n} differs from row count {self.h.rows}")
        if not 0 <= self.t <= self.h.cols:
            raise ValueError(f"weight bound {self.t} out of range for length {self.h.cols}")

    @property
    def n(self) -> int:
        return self.h.cols

    @property
    def m(self) -> int:
        return self.h.rows

    @property
    def ell(self) -> int:
        return bit_length_for(self.n)


def mld_size(inst: MldInstance) -> int:
    """Instance bit size n*m + m + floor(log2 n) + 1."""
    return inst.n * inst.m + inst.m + bit_length_for(inst.n)


def satisfies_mld(inst: MldInstance, v: BitVector) -> bool:
    """True when v has the right length, matching syndrome, and weight <= t."""
    if v.n != inst.n:
        raise ValueError(f"vector length {v.n}, expected {inst.n}")
    return v.weight() <= inst.t and mat_vec_mul(inst.h, v) == inst.s


def parity_check_equations(h: BitMatrix, s: BitVector) -> list[BoolPoly]:
    """One linear equation sum_j H[i,j] v_j + s_i per parity-check row."""
    if s.n != h.rows:
        raise ValueError(f"syndrome length {s.n} differs from row count {h.rows}")
    out = []
    for i, row in enumerate(h.row_masks):
        masks = [1 << j for j in range(h.cols) if (row >> j) & 1]
        if (s.bits >> i) & 1:
            masks.append(0)
        out.append(BoolPoly.from_masks(masks))
    return out


def counter_trace(v: BitVector, ell: int) -> list[int]:
    """Counter words a^(1)..a^(n) from replaying the carry recursion on v.

    Each step computes a_j <- a_j + (prod_{h<j} a_h) * v_i coordinatewise
    from the previous word, which increments the counter exactly when the
    next coordinate of v is one.
    """
    words = []
    a = 0
    for i in range(v.n):
        vi = (v.bits >> i) & 1
        prod = 1
        new = 0
        for j in range(ell):
            bit = (a >> j) & 1
            new |= (bit ^ (prod & vi)) << j
            prod &= bit
        a = new
        words.append(a)
    return words


@dataclass(frozen=True)
class CounterLayout:
    """Where the counter variables live: a^(i)_j has index base + (i-1)*ell + (j-1)."""

    n: int
    ell: int
    base: int

    def counter_id(self, i: int, j: int) -> int:
        if not (1 <= i <= self.n and 1 <= j <= self.ell):
            raise IndexError(f"counter ({i},{j}) out of range")
        return self.base + (i - 1) * self.ell + (j - 1)


def weight_counter_system(n: int, registry: VariableRegistry):
    """Quadratic equations tying counter variables to the carry recursion.

    Expects the codeword variables 0..n-1 to be registered already;
    allocates the n*ell counter variables and then the rewriter auxiliaries.
    Returns (equations, log, layout).
    """
    if n < 1:
        raise ValueError("need at least one coordinate")
    ell = bit_length_for(n)
    base = len(registry)
    layout = CounterLayout(n, ell, base)
    for i in range(1, n + 1):
        for j in range(1, ell + 1):
            registry.fresh(f"a{i}_{j}", "counter")
    defs: list[Definition] = []
    equations: list[BoolPoly] = []
    for i in range(1, n + 1):
        for j in range(1, ell + 1):
            masks = [1 << layout.counter_id(i, j)]
            if i > 1:
                masks.append(1 << layout.counter_id(i - 1, j))
                mono = 1 << (i - 1)
                for h in range(1, j):
                    mono |= 1 << layout.counter_id(i - 1, h)
                masks.append(mono)
            elif j == 1:
                masks.append(1 << 0)  # a^(0) is the zero word, folded in
            raw = BoolPoly.from_masks(masks)
            eqs, log = quadratize(raw, registry)
            defs.extend(log.defs)
            equations.extend(eqs)
    return equations, TransformLog(base + n * ell, tuple(defs)), layout


@dataclass(frozen=True)
class ComparatorPolys:
    """Locator polynomials f_j and the order comparator F over fresh u, v."""

    l: int
    u_ids: tuple[int, ...]
    v_ids: tuple[int, ...]
    locators: tuple[BoolPoly, ...]
    comparator: BoolPoly


def comparator_system(l: int, registry: VariableRegistry) -> ComparatorPolys:
    """Build F(u, v) with F = 0 exactly when int(u) <= int(v).

    With g_h = u_h + v_h, the locator f_j = g_j * prod_{h>j}(g_h + 1) flags
    the most significant differing coordinate, and F = sum_j f_j * (v_j + 1)
    outputs the deciding u-bit.
    """
    if l < 1:
        raise ValueError("comparator needs at least one bit")
    u_ids = tuple(registry.fresh(f"u{h}", "comparator") for h in range(1, l + 1))
    v_ids = tuple(registry.fresh(f"t{h}", "comparator") for h in range(1, l + 1))
    gs = [BoolPoly.var(u_ids[h]) + BoolPoly.var(v_ids[h]) for h in range(l)]
    one = BoolPoly.one()
    locators: list[BoolPoly] = [BoolPoly.zero()] * l
    suffix = one
    comparator = BoolPoly.zero()
    for j in range(l - 1, -1, -1):
        f_j = gs[j] * suffix
        locators[j] = f_j
        comparator = comparator + f_j * (BoolPoly.var(v_ids[j]) + one)
        suffix = suffix * (gs[j] + one)
    return ComparatorPolys(l, u_ids, v_ids, tuple(locators), comparator)


def threshold_poly(counter_ids, t: int, ell: int) -> BoolPoly:
    """Comparator F with the threshold bits folded in as constants.

    The polynomial vanishes on a counter word a exactly when int(a) <= t.
    """
    tb = WeightBits.from_int(t, ell).vec
    one = BoolPoly.one()
    gs = []
    for h in range(ell):
        g = BoolPoly.var(counter_ids[h])
        if tb.get(h):
            g = g + one
        gs.append(g)
    out = BoolPoly.zero()
    suffix = one
    for j in range(ell - 1, -1, -1):
        if not tb.get(j):  # (t_j + 1) is the constant 1 only when t_j = 0
            out = out + gs[j] * suffix
        suffix = suffix * (gs[j] + one)
    return out


def threshold_equations(counter_ids, t: int, ell: int, registry: VariableRegistry):
    """Quadratic system for weight <= t over the final counter variables."""
    f = threshold_poly(counter_ids, t, ell)
    return quadratize(f, registry)


@dataclass(frozen=True)
class MldToMqReduction:
    """Reduction artifact: the produced system plus its variable layout."""

    source: MldInstance
    mq: MqInstance
    layout: CounterLayout
    log: TransformLog
    counts: tuple[int, int, int]  # parity-check, counter, threshold equation counts

    @property
    def n(self) -> int:
        return self.source.n

    def metadata(self) -> dict[str, object]:
        n, m, ell = self.source.n, self.source.m, self.source.ell
        pcce, hwce, wce = self.counts
        return {
            "kind": "alpha",
            "version": 1,
            "n": n,
            "m": m,
            "t": self.source.t,
            "ell": ell,
            "mq-vars": self.mq.nvars,
            "mq-equations": self.mq.m,
            "pcce-equations": pcce,
            "hwce-equations": hwce,
            "wce-equations": wce,
            "v-range": f"1 {n}",
            "counter-range": f"{n + 1} {n + n * ell}",
            "aux-range": f"{n + n * ell + 1} {self.mq.nvars}",
        }


def reduce_mld_to_mq(inst: MldInstance) -> MldToMqReduction:
    """Full reduction: parity-check, weight-counter, and threshold encodings."""
    n = inst.n
    registry = VariableRegistry.originals(n, prefix="v")
    pcce = parity_check_equations(inst.h, inst.s)
    hwce, hw_log, layout = weight_counter_system(n, registry)
    counter_ids = [layout.counter_id(n, j) for j in range(1, inst.ell + 1)]
    wce, wce_log = threshold_equations(counter_ids, inst.t, inst.ell, registry)
    defs = hw_log.defs + wce_log.defs
    log = TransformLog(n + n * inst.ell, defs)
    mq = MqInstance(len(registry), tuple(pcce + hwce + wce), registry)
    return MldToMqReduction(inst, mq, layout, log,
                            (len(pcce), len(hwce), len(wce)))


def project_witness(reduction: MldToMqReduction, assign: BitVector) -> BitVector:
    """First n coordinates of a satisfying assignment of the produced system."""
    if not satisfies_mq(reduction.mq, assign):
        raise ValueError("assignment does not satisfy the reduced system")
    n = reduction.n
    return BitVector(n, assign.bits & ((1 << n) - 1))


def lift_witness(reduction: MldToMqReduction, v: BitVector) -> BitVector:
    """Extend a decoding solution to a satisfying assignment of the system.

    Counter variables are filled by replaying the carry recursion on v and
    the rewriter auxiliaries by replaying the definition log.
    """
    inst = reduction.source
    if not satisfies_mld(inst, v):
        raise ValueError("vector does not solve the decoding instance")
    n, ell = inst.n, inst.ell
    bits = v.bits
    for i, word in enumerate(counter_trace(v, ell), start=1):
        bits |= word << reduction.layout.counter_id(i, 1)
    partial = BitVector(n + n * ell, bits)
    full = extend_witness(reduction.log, partial)
    if not satisfies_mq(reduction.mq, full):
        raise AssertionError("lifted assignment fails the reduced system")
    return full
