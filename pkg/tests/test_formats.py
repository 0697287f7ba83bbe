"""Instance file formats: golden strings, round trips, and error reporting."""

import pytest

from mldmq.boolpoly import BoolPoly, MqInstance, VariableRegistry
from mldmq.formats import (ParseError, detect_kind, parse_any, parse_mld,
                           parse_mq, parse_standard_form, parse_witness,
                           serialize_metadata, serialize_mld, serialize_mq,
                           serialize_standard_form, serialize_witness)
from mldmq.generators import GenSpec, SplitMix64, gen_mld, gen_mq
from mldmq.gf2 import BitMatrix, BitVector
from mldmq.mld_to_mq import MldInstance
from mldmq.normalize import to_standard_form


def poly_of(*monomials):
    masks = []
    for mono in monomials:
        mask = 0
        for v in mono:
            mask |= 1 << v
        masks.append(mask)
    return BoolPoly.from_masks(masks)


def test_mld_golden():
    inst = MldInstance(BitMatrix.from_strings(["110", "011"]),
                       BitVector.from_string("10"), 1)
    text = serialize_mld(inst)
    assert text == "MLD\nn 3\nm 2\nt 1\nH\n110\n011\ns 10\n"
    assert parse_mld(text) == inst


def test_mq_golden_variety_equation():
    inst = MqInstance(3, (poly_of((0, 1), (2,)),), VariableRegistry.originals(3))
    text = serialize_mq(inst)
    assert text == "MQ\nn 3\nm 1\nEQ Q 1 2 ; L 3 ; C 0\n"
    assert parse_mq(text) == inst


def test_mq_empty_sections():
    inst = MqInstance(2, (BoolPoly.one(), BoolPoly.zero()))
    text = serialize_mq(inst)
    assert "EQ Q ; L ; C 1" in text
    assert "EQ Q ; L ; C 0" in text
    assert parse_mq(text) == inst


def test_witness_roundtrip():
    v = BitVector.from_string("1001100000")
    text = serialize_witness(v)
    assert text == "WITNESS 10\n1001100000\n"
    assert parse_witness(text) == v


def test_standard_form_roundtrip_simple():
    inst = MqInstance(3, (poly_of((0, 1), (2,)),), VariableRegistry.originals(3))
    sf = to_standard_form(inst)
    text = serialize_standard_form(sf)
    parsed = parse_standard_form(text)
    assert parsed == sf
    assert serialize_standard_form(parsed) == text


def test_standard_form_roundtrip_contradiction():
    inst = MqInstance(2, (BoolPoly.one(),), VariableRegistry.originals(2))
    sf = to_standard_form(inst)
    parsed = parse_standard_form(serialize_standard_form(sf))
    assert parsed.contradiction
    assert parsed == sf


def test_mld_fuzz_roundtrip():
    rng = SplitMix64(1)
    for trial in range(120):
        n = 1 + rng.below(12)
        m = 1 + rng.below(8)
        t = rng.below(n + 1)
        inst, _ = gen_mld(GenSpec(seed=trial, n=n, m=m, t=t,
                                  planted=bool(trial % 2)))
        assert parse_mld(serialize_mld(inst)) == inst


def test_mq_fuzz_roundtrip():
    rng = SplitMix64(2)
    for trial in range(120):
        n = 1 + rng.below(8)
        m = 1 + rng.below(6)
        inst, _ = gen_mq(GenSpec(seed=trial, n=n, m=m, planted=bool(trial % 2)))
        assert parse_mq(serialize_mq(inst)) == inst


def test_sf_fuzz_roundtrip():
    for trial in range(60):
        inst, _ = gen_mq(GenSpec(seed=trial, n=1 + trial % 5, m=1 + trial % 4))
        sf = to_standard_form(inst)
        assert parse_standard_form(serialize_standard_form(sf)) == sf


def test_detect_kind_and_parse_any():
    inst = MqInstance(1, (poly_of((0,)),))
    assert detect_kind(serialize_mq(inst)) == "MQ"
    assert isinstance(parse_any(serialize_mq(inst)), MqInstance)
    assert detect_kind("WITNESS 2\n01\n") == "WITNESS"
    with pytest.raises(ParseError):
        detect_kind("BOGUS\n")


def test_parse_errors_name_the_line():
    with pytest.raises(ParseError) as err:
        parse_mld("MLD\nn 3\nm 2\nt 1\nH\n110\n01\ns 10\n")
    assert "row 2" in str(err.value) and err.value.line == 7

    with pytest.raises(ParseError) as err:
        parse_mld("MLD\nn 3\nm 1\nt 4\nH\n110\ns 1\n")
    assert "exceeds" in str(err.value)

    with pytest.raises(ParseError):
        parse_mld("MLD\nn 3\nm 1\nt 1\nH\n1x0\ns 1\n")

    with pytest.raises(ParseError) as err:
        parse_mld("MLD\nn 3\nm 1\nt 1\nH\n1\t0\ns 1\n")
    assert "tab" in str(err.value)


def test_parse_rejects_unknown_header():
    with pytest.raises(ParseError):
        parse_mld("MLD\nn 3\nrows 2\nt 1\nH\n110\n011\ns 10\n")


def test_parse_rejects_missing_trailing_newline():
    with pytest.raises(ParseError):
        parse_mld("MLD\nn 1\nm 1\nt 0\nH\n1\ns 0")


def test_parse_rejects_out_of_range_variable():
    with pytest.raises(ParseError) as err:
        parse_mq("MQ\nn 2\nm 1\nEQ Q 1 3 ; L ; C 0\n")
    assert "outside" in str(err.value)


def test_parse_rejects_bad_pair_order():
    with pytest.raises(ParseError):
        parse_mq("MQ\nn 3\nm 1\nEQ Q 2 1 ; L ; C 0\n")


def test_parse_rejects_trailing_garbage():
    with pytest.raises(ParseError):
        parse_mq("MQ\nn 1\nm 0\nextra\n")


def test_metadata_serialization():
    text = serialize_metadata({"kind": "beta", "q": 3})
    assert text == "kind beta\nq 3\n"
