"""Reduction from quadratic Boolean systems to syndrome decoding.

A single disjoint equation x*y + z = 0 is carried by a fixed [10, 3] binary
code: the coset of a distinguished shift vector contains exactly four
weight-3 elements, whose first three coordinates enumerate the equation's
solution set, while every other coset element has weight at least 5.  A
system of q disjoint triples uses q diagonal copies of the gadget
parity-check with weight bound 3q; each linear equation contributes one
extra parity row that reads the triple coordinates through the blockwise
truncation map.  Witnesses transport both ways through the per-block
weight-3 coset elements.
"""

from __future__ import annotations

from dataclasses import dataclass

from .boolpoly import BoolPoly, MqInstance, VariableRegistry
from .gf2 import BitMatrix, BitVector, mat_vec_mul, systematic_parity_check, vec_mat_mul
from .mld_to_mq import MldInstance, satisfies_mld
from .normalize import (Definition, KIND_CONST, KIND_PRODUCT, LinearEquation,
                        StandardFormSystem, TransformLog, pull_back_witness,
                        to_standard_form)

__all__ = [
    "GadgetCode",
    "build_gadget",
    "block_parity_check",
    "truncation_matrix",
    "truncate_blocks",
    "nu",
    "MqToMldReduction",
    "reduce_standard_form",
    "reduce_mq_to_mld",
    "append_coefficient_rows",
    "lift_witness",
    "pull_back_mld_witness",
]

GADGET_GENERATOR_ROWS = ("1001100111", "0100011111", "0011111111")
GADGET_COSET_SHIFT = "0000000111"
GADGET_WEIGHT_BOUND = 3

#: Solution set of x*y + z = 0 as (x, y, z) bit triples packed into integers.
TRIPLE_SOLUTIONS = frozenset((0b000, 0b001, 0b010, 0b111))


@dataclass(frozen=True)
class GadgetCode:
    """The [10, 3] carrier code with its coset facts pre-verified."""

    generator: BitMatrix
    parity: BitMatrix
    coset_shift: BitVector
    syndrome: BitVector
    weight_bound: int
    lift_blocks: tuple[int, ...]  # index = packed triple value, -1 where unused

    def block_for(self, value: int) -> int:
        """Weight-3 coset element whose first three coordinates equal value."""
        block = self.lift_blocks[value]
        if block < 0:
            raise ValueError(f"triple value {value:03b} is not a solution of x*y + z = 0")
        return block


_GADGET: GadgetCode | None = None


def build_gadget() -> GadgetCode:
    """Construct the gadget and verify every coset fact by direct enumeration."""
    global _GADGET
    if _GADGET is not None:
        return _GADGET
    generator = BitMatrix.from_strings(GADGET_GENERATOR_ROWS)
    parity = systematic_parity_check(generator)
    shift = BitVector.from_string(GADGET_COSET_SHIFT)
    syndrome = mat_vec_mul(parity, shift)

    for i in range(generator.rows):
        if mat_vec_mul(parity, generator.row(i)).bits != 0:
            raise RuntimeError("parity-check does not annihilate the generator")
    lift = [-1] * 8
    weights = []
    for msg in range(8):
        v = vec_mat_mul(BitVector(3, msg), generator) ^ shift
        w = v.weight()
        weights.append(w)
        head = v.bits & 0b111
        if w == GADGET_WEIGHT_BOUND:
            if head not in TRIPLE_SOLUTIONS or lift[head] >= 0:
                raise RuntimeError("weight-3 coset elements do not enumerate the solutions")
            lift[head] = v.bits
        elif w < 5:
            raise RuntimeError("coset weight gap violated")
    if sorted(weights) != [3, 3, 3, 3, 5, 7, 7, 9]:
        raise RuntimeError(f"unexpected coset weights {sorted(weights)}")
    if sorted(h for h in range(8) if lift[h] >= 0) != sorted(TRIPLE_SOLUTIONS):
        raise RuntimeError("weight-3 truncations miss a solution")

    _GADGET = GadgetCode(generator, parity, shift, syndrome,
                         GADGET_WEIGHT_BOUND, tuple(lift))
    return _GADGET


def block_parity_check(q: int) -> BitMatrix:
    """q diagonal copies of the gadget parity-check (7q x 10q)."""
    if q < 1:
        raise ValueError("need at least one block")
    parity = build_gadget().parity
    rows = []
    for b in range(q):
        shift = 10 * b
        rows.extend(mask << shift for mask in parity.row_masks)
    return BitMatrix(7 * q, 10 * q, tuple(rows))


def truncation_matrix(q: int) -> BitMatrix:
    """Blockwise first-3-of-10 truncation as a 10q x 3q matrix."""
    if q < 1:
        raise ValueError("need at least one block")
    rows = []
    for r in range(10 * q):
        block, slot = divmod(r, 10)
        rows.append(1 << (3 * block + slot) if slot < 3 else 0)
    return BitMatrix(10 * q, 3 * q, tuple(rows))


def truncate_blocks(v: BitVector, q: int) -> BitVector:
    """First three coordinates of each 10-coordinate block."""
    if v.n != 10 * q:
        raise ValueError(f"length {v.n}, expected {10 * q}")
    bits = 0
    for b in range(q):
        bits |= ((v.bits >> (10 * b)) & 0b111) << (3 * b)
    return BitVector(3 * q, bits)


def nu(coords, q: int) -> BitVector:
    """Parity row reading the given truncated coordinates (0-based, < 3q)."""
    bits = 0
    for c in coords:
        if not 0 <= c < 3 * q:
            raise ValueError(f"coordinate {c} outside the 3q range")
        block, slot = divmod(c, 3)
        bits |= 1 << (10 * block + slot)
    return BitVector(10 * q, bits)


@dataclass(frozen=True)
class MqToMldReduction:
    """Reduction artifact: the decoding instance plus the block layout."""

    mld: MldInstance
    sf: StandardFormSystem
    var_coord: dict[int, int]  # standard-form variable -> truncated coordinate
    injective: bool
    source_params: tuple[int, int] | None  # (nvars, m) of the quadratic input

    @property
    def q(self) -> int:
        return self.sf.q

    def metadata(self) -> dict[str, object]:
        q, lam = self.sf.q, self.sf.lam
        bitsize = (7 * q + lam) * 10 * q
        meta: dict[str, object] = {
            "kind": "beta",
            "version": 1,
            "gadget": "[10,3]-coset-v1",
            "q": q,
            "lambda": lam,
            "padding": self.sf.padding_count,
            "injective": int(self.injective),
            "n": self.mld.n,
            "m": self.mld.m,
            "t": self.mld.t,
            "bitsize": bitsize,
        }
        if self.source_params is not None and not self.injective:
            nn, mm = self.source_params
            bound = 85 * mm * mm * nn ** 4
            meta["space-bound"] = bound
            meta["space-bound-ok"] = int(bitsize <= bound)
        return meta


def reduce_standard_form(sf: StandardFormSystem, injective: bool = False,
                         source_params: tuple[int, int] | None = None) -> MqToMldReduction:
    """Assemble the decoding instance for a system already in disjoint form."""
    q, lam = sf.q, sf.lam
    var_coord: dict[int, int] = {}
    for b, (x, y, z) in enumerate(sf.triples):
        var_coord[x] = 3 * b
        var_coord[y] = 3 * b + 1
        var_coord[z] = 3 * b + 2
    if q == 0:
        mld = MldInstance(BitMatrix.zeros(0, 0), BitVector.zeros(0), 0)
        return MqToMldReduction(mld, sf, var_coord, injective, source_params)
    gadget = build_gadget()
    rows = list(block_parity_check(q).row_masks)
    s_bits = 0
    for b in range(q):
        s_bits |= gadget.syndrome.bits << (7 * b)
    for eq in sf.linear:
        rows.append(nu((var_coord[v] for v in eq.vars), q).bits)
    for i, eq in enumerate(sf.linear):
        s_bits |= eq.const << (7 * q + i)
    h = BitMatrix(7 * q + lam, 10 * q, tuple(rows))
    mld = MldInstance(h, BitVector(7 * q + lam, s_bits), 3 * q)
    return MqToMldReduction(mld, sf, var_coord, injective, source_params)


def append_coefficient_rows(sf: StandardFormSystem, inst: MqInstance) -> StandardFormSystem:
    """Record every coefficient of the source system as a pinned variable.

    For each equation, one fresh variable per quadratic, linear, and constant
    coefficient is forced to the coefficient's value by a single-variable
    linear equation; the new variables get padding triples like any other
    linearly-occurring variable.  Distinct source systems therefore map to
    distinct outputs.
    """
    registry = sf.registry.clone()
    defs = list(sf.log.defs)
    triples = list(sf.triples)
    linear = list(sf.linear)
    padding = sf.padding_count
    n = inst.nvars

    def pin(name: str, value: int) -> int:
        g = registry.fresh(name, "coefficient")
        defs.append(Definition(KIND_CONST, g, (), value))
        linear.append(LinearEquation((g,), value))
        return g

    fresh_vars = []
    for h, eq in enumerate(inst.equations, start=1):
        for i in range(n):
            for j in range(i + 1, n):
                bit = 1 if ((1 << i) | (1 << j)) in eq.terms else 0
                fresh_vars.append(pin(f"g{h}_{i + 1}_{j + 1}", bit))
        for i in range(n):
            bit = 1 if (1 << i) in eq.terms else 0
            fresh_vars.append(pin(f"l{h}_{i + 1}", bit))
        fresh_vars.append(pin(f"d{h}", 1 if 0 in eq.terms else 0))

    i = 0
    while i + 1 < len(fresh_vars):
        w1, w2 = fresh_vars[i], fresh_vars[i + 1]
        r = registry.fresh(f"pad{len(registry) + 1}", "padding")
        defs.append(Definition(KIND_PRODUCT, r, (w1, w2)))
        triples.append((w1, w2, r))
        padding += 1
        i += 2
    if i < len(fresh_vars):
        w = fresh_vars[i]
        p = registry.fresh(f"pad{len(registry) + 1}", "padding")
        defs.append(Definition(KIND_CONST, p, (), 0))
        r = registry.fresh(f"pad{len(registry) + 1}", "padding")
        defs.append(Definition(KIND_CONST, r, (), 0))
        triples.append((w, p, r))
        padding += 1

    out = StandardFormSystem(registry, tuple(triples), tuple(linear),
                             TransformLog(sf.log.original_var_count, tuple(defs)),
                             padding, sf.contradiction)
    out.validate()
    return out


def reduce_mq_to_mld(inst: MqInstance, injective: bool = False) -> MqToMldReduction:
    """Full reduction: disjoint-form conversion, then block assembly."""
    sf = to_standard_form(inst)
    if injective:
        sf = append_coefficient_rows(sf, inst)
    return reduce_standard_form(sf, injective, (inst.nvars, inst.m))


def lift_witness(reduction: MqToMldReduction, assign: BitVector) -> BitVector:
    """Map a satisfying disjoint-form assignment to a decoding solution.

    Each triple's value selects the unique weight-3 coset element with that
    three-coordinate prefix, so the concatenation has weight exactly 3q.
    """
    sf = reduction.sf
    if not sf.satisfies(assign):
        raise ValueError("assignment does not satisfy the standard-form system")
    gadget = build_gadget()
    bits = 0
    for b, (x, y, z) in enumerate(sf.triples):
        value = (((assign.bits >> x) & 1)
                 | (((assign.bits >> y) & 1) << 1)
                 | (((assign.bits >> z) & 1) << 2))
        bits |= gadget.block_for(value) << (10 * b)
    v = BitVector(10 * sf.q, bits)
    if not satisfies_mld(reduction.mld, v):
        raise AssertionError("lifted vector fails the decoding instance")
    return v


def pull_back_mld_witness(reduction: MqToMldReduction, v_tilde: BitVector) -> BitVector:
    """Map a decoding solution back to an assignment of the source variables."""
    if not satisfies_mld(reduction.mld, v_tilde):
        raise ValueError("vector does not solve the decoding instance")
    sf = reduction.sf
    tau = truncate_blocks(v_tilde, sf.q) if sf.q else BitVector(0, 0)
    bits = 0
    for var, coord in reduction.var_coord.items():
        bits |= ((tau.bits >> coord) & 1) << var
    full = BitVector(sf.nvars, bits)
    return pull_back_witness(sf.log, full)
