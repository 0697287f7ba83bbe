"""Brute-force reference solvers used as ground truth for the reductions.

The decoding solver enumerates candidate vectors in weight order; the
quadratic-system solver runs a complete backtracking search over variables
in index order, checking an equation as soon as its last variable is
assigned.  Both are exact deciders with hard exploration budgets; they
refuse loudly instead of sampling or truncating.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from itertools import combinations
from math import comb

from .boolpoly import MqInstance, satisfies_mq
from .gf2 import BitMatrix, BitVector, vec_mat_mul
from .mld_to_mq import MldInstance, satisfies_mld

__all__ = [
    "BudgetExceeded",
    "SolveReport",
    "solve_mld_exhaustive",
    "solve_mq_exhaustive",
    "verify_mld",
    "verify_mq",
    "enumerate_coset",
    "iter_mld_solutions",
]

#: Default exploration budget (candidates or search nodes).
DEFAULT_BUDGET = 1 << 26


class BudgetExceeded(RuntimeError):
    """Raised when an exhaustive search would leave its enumeration budget."""


@dataclass
class SolveReport:
    decision: bool
    witness: BitVector | None
    explored: int
    elapsed: float


def verify_mld(inst: MldInstance, v: BitVector) -> bool:
    """Membership check: syndrome matches and weight is within the bound."""
    return satisfies_mld(inst, v)


def verify_mq(inst: MqInstance, assign: BitVector) -> bool:
    """Membership check: every equation evaluates to zero."""
    return satisfies_mq(inst, assign)


def _mld_candidate_count(n: int, t: int) -> int:
    return sum(comb(n, w) for w in range(t + 1))


def solve_mld_exhaustive(inst: MldInstance, budget: int = DEFAULT_BUDGET) -> SolveReport:
    """Decide a decoding instance by weight-ordered enumeration.

    The reported witness is the lexicographically smallest solution (as a
    coordinate tuple) within the lowest weight class containing one.
    """
    start = time.perf_counter()
    n, t = inst.n, inst.t
    total = _mld_candidate_count(n, t)
    if total > budget:
        raise BudgetExceeded(
            f"{total} candidates exceed the budget of {budget}; refusing")
    cols = [inst.h.column_mask(j) for j in range(n)]
    target = inst.s.bits
    explored = 0
    for w in range(t + 1):
        best: int | None = None
        for support in combinations(range(n), w):
            explored += 1
            syn = 0
            for j in support:
                syn ^= cols[j]
            if syn != target:
                continue
            bits = 0
            for j in support:
                bits |= 1 << j
            if best is None or _tuple_lex_less(bits, best, n):
                best = bits
        if best is not None:
            witness = BitVector(n, best)
            assert verify_mld(inst, witness)
            return SolveReport(True, witness, explored, time.perf_counter() - start)
    return SolveReport(False, None, explored, time.perf_counter() - start)


def _tuple_lex_less(a: int, b: int, n: int) -> bool:
    """Coordinate-tuple order: smaller means 0 at the lowest differing index."""
    diff = a ^ b
    if diff == 0:
        return False
    low = diff & -diff
    return a & low == 0


def iter_mld_solutions(inst: MldInstance, budget: int = DEFAULT_BUDGET):
    """Yield every solution of weight <= t, in weight then support order."""
    n, t = inst.n, inst.t
    if _mld_candidate_count(n, t) > budget:
        raise BudgetExceeded("solution enumeration exceeds the budget; refusing")
    cols = [inst.h.column_mask(j) for j in range(n)]
    target = inst.s.bits
    for w in range(t + 1):
        for support in combinations(range(n), w):
            syn = 0
            for j in support:
                syn ^= cols[j]
            if syn == target:
                bits = 0
                for j in support:
                    bits |= 1 << j
                yield BitVector(n, bits)


def solve_mq_exhaustive(inst: MqInstance, budget: int = DEFAULT_BUDGET) -> SolveReport:
    """Decide a quadratic system by complete backtracking enumeration.

    Variables are assigned in index order and each equation is evaluated as
    soon as its highest variable gets a value, so the search prunes forced
    contradictions immediately while still covering the whole assignment
    space.  The witness, when one exists, is the first satisfying assignment
    in 0-before-1 order.  Exploration is counted in search nodes (one per
    attempted variable/value pair) against the budget.
    """
    start = time.perf_counter()
    n = inst.nvars
    buckets: list[list[tuple[int, ...]]] = [[] for _ in range(n)]
    for eq in inst.equations:
        if eq.is_zero():
            continue
        if eq.is_one():
            return SolveReport(False, None, 0, time.perf_counter() - start)
        top = eq.variables_mask().bit_length() - 1
        buckets[top].append(tuple(eq.terms))
    if n == 0:
        witness = BitVector(0, 0)
        return SolveReport(True, witness, 0, time.perf_counter() - start)

    explored = 0
    bits = 0
    tried = [0] * n  # next value to try at each depth: 0, 1, or 2 = exhausted
    depth = 0
    witness_bits: int | None = None
    while depth >= 0:
        if depth == n:
            witness_bits = bits
            break
        val = tried[depth]
        if val == 2:
            tried[depth] = 0
            depth -= 1
            if depth >= 0:
                bits &= ~(1 << depth)
            continue
        tried[depth] = val + 1
        if val:
            bits |= 1 << depth
        else:
            bits &= ~(1 << depth)
        explored += 1
        if explored > budget:
            raise BudgetExceeded(
                f"search exceeded the budget of {budget} nodes; refusing")
        ok = True
        for masks in buckets[depth]:
            acc = 0
            for m in masks:
                if bits & m == m:
                    acc ^= 1
            if acc:
                ok = False
                break
        if ok:
            depth += 1

    elapsed = time.perf_counter() - start
    if witness_bits is None:
        return SolveReport(False, None, explored, elapsed)
    witness = BitVector(n, witness_bits)
    assert verify_mq(inst, witness)
    return SolveReport(True, witness, explored, elapsed)


def enumerate_coset(g: BitMatrix, eps: BitVector,
                    budget: int = 1 << 20) -> list[tuple[BitVector, int]]:
    """All elements of eps + rowspan(g) with weights, ordered by message index."""
    if g.cols != eps.n:
        raise ValueError(f"dimension mismatch: {g.rows}x{g.cols} vs length {eps.n}")
    if 1 << g.rows > budget:
        raise BudgetExceeded(f"coset of size 2^{g.rows} exceeds the budget; refusing")
    out = []
    for msg in range(1 << g.rows):
        word = vec_mat_mul(BitVector(g.rows, msg), g)
        v = word ^ eps
        out.append((v, v.weight()))
    return out
