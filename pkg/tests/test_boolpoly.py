"""Ring arithmetic on multilinear Boolean polynomials."""

from itertools import product

import pytest

from mldmq.boolpoly import (BoolPoly, MqInstance, VariableRegistry, mask_vars,
                            mq_size, satisfies_mq)
from mldmq.gf2 import BitVector
from mldmq.generators import SplitMix64


def poly_of(*monomials):
    """Build a polynomial from variable-index tuples; () is the constant 1."""
    masks = []
    for mono in monomials:
        mask = 0
        for v in mono:
            mask |= 1 << v
        masks.append(mask)
    return BoolPoly.from_masks(masks)


def test_addition_characteristic_two():
    p = poly_of((0, 1), (2,))
    assert (p + p).is_zero()


def test_addition_cancellation():
    p = poly_of((0, 1), (2,))
    q = poly_of((2,), ())
    assert p + q == poly_of((0, 1), ())


def test_addition_identity():
    p = poly_of((0, 1), (2,))
    assert p + BoolPoly.zero() == p


def test_multiplication_idempotent():
    x = BoolPoly.var(0)
    assert x * x == x


def test_multiplication_distributes_to_six_monomials():
    # (u1 + v1)(u2 + v2 + 1): u,v interleaved as variables 0..3
    u1, v1, u2, v2 = (BoolPoly.var(i) for i in range(4))
    lhs = (u1 + v1) * (u2 + v2 + BoolPoly.one())
    expected = (u1 * u2 + u1 * v2 + u1 + v1 * u2 + v1 * v2 + v1)
    assert lhs == expected
    assert len(lhs.terms) == 6


def test_multiplication_identity():
    p = poly_of((0, 1), (2,), ())
    assert p * BoolPoly.one() == p


def test_evaluate_variety_example():
    # x*y + z vanishes exactly on {(0,0,0),(1,0,0),(0,1,0),(1,1,1)}
    p = poly_of((0, 1), (2,))
    zeros = {bits for bits in range(8) if p.evaluate(bits) == 0}
    assert zeros == {0b000, 0b001, 0b010, 0b111}
    assert p.evaluate(0b111) == 0
    assert p.evaluate(0b011) == 1  # (1,1,0)
    assert BoolPoly.one().evaluate(0b101) == 1


def test_eval_is_ring_homomorphism_exhaustive():
    rng = SplitMix64(5)
    for _ in range(30):
        p = BoolPoly.from_masks(rng.below(16) for _ in range(rng.below(6)))
        q = BoolPoly.from_masks(rng.below(16) for _ in range(rng.below(6)))
        for bits in range(16):
            assert (p + q).evaluate(bits) == p.evaluate(bits) ^ q.evaluate(bits)
            assert (p * q).evaluate(bits) == p.evaluate(bits) & q.evaluate(bits)


def test_multilinearity_after_operations():
    rng = SplitMix64(9)
    for _ in range(40):
        p = BoolPoly.from_masks(rng.below(256) for _ in range(5))
        q = BoolPoly.from_masks(rng.below(256) for _ in range(5))
        for mono in (p * q).terms:
            assert len(mask_vars(mono)) == mono.bit_count()


def test_substitute_examples():
    p = poly_of((0, 1), (2,))  # xy + z
    assert p.substitute(1, 1) == poly_of((0,), (2,))
    assert p.substitute(1, 0) == poly_of((2,))


def test_substitute_then_eval_matches_merged_assignment():
    rng = SplitMix64(13)
    for _ in range(40):
        p = BoolPoly.from_masks(rng.below(32) for _ in range(6))
        var = rng.below(5)
        val = rng.bit()
        fixed = p.substitute(var, val)
        assert not fixed.variables_mask() & (1 << var)
        for bits in range(32):
            merged = (bits & ~(1 << var)) | (val << var)
            assert fixed.evaluate(bits) == p.evaluate(merged)


def test_mq_size_examples():
    reg3 = VariableRegistry.originals(3)
    inst = MqInstance(3, (poly_of((0, 1)), poly_of((2,))), reg3)
    assert mq_size(inst) == 14
    assert mq_size(MqInstance(1, (poly_of((0,)),))) == 2
    assert mq_size(MqInstance(4, (BoolPoly.zero(),) * 3)) == 33


def test_mq_instance_rejects_high_degree():
    with pytest.raises(ValueError):
        MqInstance(4, (poly_of((0, 1, 2)),))


def test_mq_instance_rejects_unregistered_variable():
    with pytest.raises(ValueError):
        MqInstance(2, (poly_of((0, 2)),))


def test_satisfies_mq():
    inst = MqInstance(3, (poly_of((0, 1), (2,)),))
    assert satisfies_mq(inst, BitVector(3, 0b111))
    assert not satisfies_mq(inst, BitVector(3, 0b011))


def test_canonical_term_order():
    p = poly_of((2,), (0, 1), (), (0,))
    order = p.canonical_terms()
    assert order == [0, 1 << 0, 1 << 2, 0b011]


def test_degree():
    assert BoolPoly.zero().degree() == 0
    assert BoolPoly.one().degree() == 0
    assert poly_of((0, 1), (2,)).degree() == 2


def test_exhaustive_ring_axioms_four_vars():
    polys = [BoolPoly.from_masks([m]) for m in range(8)]
    for p, q in product(polys, repeat=2):
        for bits in range(16):
            assert (p + q).evaluate(bits) == (p.evaluate(bits) ^ q.evaluate(bits))
            assert (p * q).evaluate(bits) == (p.evaluate(bits) & q.evaluate(bits))
