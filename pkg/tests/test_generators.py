"""Seeded instance generation: determinism and planted witnesses."""

import pytest

from mldmq.formats import serialize_mld, serialize_mq
from mldmq.generators import GenSpec, SplitMix64, gen_mld, gen_mq
from mldmq.gf2 import BitVector
from mldmq.oracles import verify_mld, verify_mq


def test_splitmix_known_stream():
    # first outputs for seed 0, fixed by the documented update rule
    rng = SplitMix64(0)
    assert rng.next_u64() == 0xE220A8397B1DCDAF
    assert rng.next_u64() == 0x6E789E6AA1B965F4


def test_gen_mld_deterministic():
    spec = GenSpec(seed=42, n=8, m=5, t=2, planted=True)
    a, va = gen_mld(spec)
    b, vb = gen_mld(spec)
    assert serialize_mld(a) == serialize_mld(b)
    assert va == vb


def test_gen_mld_planted_verifies():
    inst, v = gen_mld(GenSpec(seed=7, n=8, m=5, t=2, planted=True))
    assert v.weight() == 2
    assert verify_mld(inst, v)


def test_gen_mld_t_zero_planted_gives_zero_syndrome():
    inst, v = gen_mld(GenSpec(seed=3, n=6, m=4, t=0, planted=True))
    assert v == BitVector.zeros(6)
    assert inst.s == BitVector.zeros(4)


def test_gen_mld_unplanted_has_no_witness():
    inst, v = gen_mld(GenSpec(seed=1, n=5, m=3, t=2))
    assert v is None
    assert (inst.n, inst.m, inst.t) == (5, 3, 2)


def test_gen_mld_rejects_bad_ranges():
    with pytest.raises(ValueError):
        gen_mld(GenSpec(seed=0, n=4, m=2, t=5))
    with pytest.raises(ValueError):
        gen_mld(GenSpec(seed=0, n=0, m=2, t=0))


def test_gen_mq_deterministic():
    spec = GenSpec(seed=42, n=5, m=3, planted=True)
    a, pa = gen_mq(spec)
    b, pb = gen_mq(spec)
    assert serialize_mq(a) == serialize_mq(b)
    assert pa == pb


def test_gen_mq_planted_verifies():
    for seed in range(20):
        inst, plant = gen_mq(GenSpec(seed=seed, n=4, m=3, planted=True))
        assert verify_mq(inst, plant)


def test_gen_mq_single_variable_shape():
    inst, _ = gen_mq(GenSpec(seed=9, n=1, m=1))
    assert inst.nvars == 1
    assert all(eq.degree() <= 1 for eq in inst.equations)


def test_distinct_seeds_differ():
    a, _ = gen_mq(GenSpec(seed=1, n=5, m=3))
    b, _ = gen_mq(GenSpec(seed=2, n=5, m=3))
    assert serialize_mq(a) != serialize_mq(b)
