"""Line-oriented ASCII formats for instances, standard forms, and witnesses.

Every file starts with a kind token (MLD, MQ, SF, WITNESS), carries a fixed
header of ``key value`` lines, ends with a trailing newline, and round-trips
bit-exactly through parse(serialize(x)).  Variable indices are printed
1-based to match the usual subscript convention; parsers reject unknown
header keys, tabs inside bit rows, and report the offending line number.
"""

from __future__ import annotations

from .boolpoly import BoolPoly, MqInstance, VariableRegistry, mask_vars
from .gf2 import BitMatrix, BitVector
from .mld_to_mq import MldInstance
from .normalize import (Definition, KIND_ALIAS, KIND_CHAIN, KIND_CONST,
                        KIND_PRODUCT, LinearEquation, StandardFormSystem,
                        TransformLog)

__all__ = [
    "ParseError",
    "serialize_mld", "parse_mld",
    "serialize_mq", "parse_mq",
    "serialize_standard_form", "parse_standard_form",
    "serialize_witness", "parse_witness",
    "serialize_metadata",
    "detect_kind", "parse_any",
]


class ParseError(ValueError):
    """Malformed instance text; carries the 1-based offending line."""

    def __init__(self, line: int, message: str) -> None:
        super().__init__(f"line {line}: {message}")
        self.line = line


class _Reader:
    def __init__(self, text: str) -> None:
        if not text.endswith("\n"):
            raise ParseError(max(1, text.count("\n") + 1), "missing trailing newline")
        self.lines = text.split("\n")[:-1]
        self.pos = 0

    @property
    def lineno(self) -> int:
        return self.pos  # pos already advanced past the reported line

    def next_line(self) -> str:
        if self.pos >= len(self.lines):
            raise ParseError(self.pos + 1, "unexpected end of file")
        line = self.lines[self.pos]
        self.pos += 1
        return line

    def expect_kind(self, kind: str) -> None:
        line = self.next_line()
        if line != kind:
            raise ParseError(self.lineno, f"expected {kind!r} header, got {line!r}")

    def header_int(self, key: str, minimum: int = 0) -> int:
        line = self.next_line()
        parts = line.split(" ")
        if len(parts) != 2 or parts[0] != key:
            raise ParseError(self.lineno, f"expected '{key} <int>', got {line!r}")
        try:
            value = int(parts[1])
        except ValueError:
            raise ParseError(self.lineno, f"bad integer {parts[1]!r}") from None
        if value < minimum:
            raise ParseError(self.lineno, f"{key} must be >= {minimum}")
        return value

    def bit_row(self, width: int, label: str) -> int:
        line = self.next_line()
        if "\t" in line:
            raise ParseError(self.lineno, f"tab character inside {label}")
        if len(line) != width or any(c not in "01" for c in line):
            raise ParseError(self.lineno,
                             f"{label} must be {width} characters of 0/1, got {line!r}")
        return BitVector.from_string(line).bits

    def done(self) -> None:
        if self.pos != len(self.lines):
            raise ParseError(self.pos + 1, "trailing content after instance")


# ---------------------------------------------------------------------------
# decoding instances

def serialize_mld(inst: MldInstance) -> str:
    lines = ["MLD", f"n {inst.n}", f"m {inst.m}", f"t {inst.t}", "H"]
    lines.extend(inst.h.row_strings())
    lines.append(f"s {inst.s}")
    return "\n".join(lines) + "\n"


def parse_mld(text: str) -> MldInstance:
    r = _Reader(text)
    r.expect_kind("MLD")
    n = r.header_int("n")
    m = r.header_int("m")
    t = r.header_int("t")
    if t > n:
        raise ParseError(r.lineno, f"t = {t} exceeds n = {n}")
    line = r.next_line()
    if line != "H":
        raise ParseError(r.lineno, f"expected 'H', got {line!r}")
    rows = tuple(r.bit_row(n, f"matrix row {i + 1}") for i in range(m))
    line = r.next_line()
    if not line.startswith("s") or (m > 0 and not line.startswith("s ")):
        raise ParseError(r.lineno, "expected syndrome line 's <bits>'")
    s_text = line[2:] if len(line) > 1 else ""
    if "\t" in s_text:
        raise ParseError(r.lineno, "tab character inside syndrome")
    if len(s_text) != m or any(c not in "01" for c in s_text):
        raise ParseError(r.lineno, f"syndrome must be {m} characters of 0/1")
    r.done()
    return MldInstance(BitMatrix(m, n, rows), BitVector.from_string(s_text), t)


# ---------------------------------------------------------------------------
# quadratic systems

def _equation_line(eq: BoolPoly) -> str:
    quad = []
    lin = []
    const = 0
    for mono in eq.canonical_terms():
        deg = mono.bit_count()
        if deg == 0:
            const = 1
        elif deg == 1:
            lin.append(mono.bit_length())
        else:
            i, j = mask_vars(mono)
            quad.extend((i + 1, j + 1))
    parts = ["EQ", "Q", *map(str, quad), ";", "L", *map(str, lin), ";", "C", str(const)]
    return " ".join(parts)


def serialize_mq(inst: MqInstance) -> str:
    lines = ["MQ", f"n {inst.nvars}", f"m {inst.m}"]
    lines.extend(_equation_line(eq) for eq in inst.equations)
    return "\n".join(lines) + "\n"


def _parse_index(token: str, n: int, lineno: int) -> int:
    try:
        value = int(token)
    except ValueError:
        raise ParseError(lineno, f"bad variable index {token!r}") from None
    if not 1 <= value <= n:
        raise ParseError(lineno, f"variable index {value} outside 1..{n}")
    return value - 1


def _parse_equation(line: str, n: int, lineno: int) -> BoolPoly:
    tokens = line.split(" ")
    if tokens[:2] != ["EQ", "Q"]:
        raise ParseError(lineno, f"expected 'EQ Q ...', got {line!r}")
    try:
        sep1 = tokens.index(";")
        sep2 = tokens.index(";", sep1 + 1)
    except ValueError:
        raise ParseError(lineno, "equation line needs two ';' separators") from None
    quad_tokens = tokens[2:sep1]
    if tokens[sep1 + 1:sep1 + 2] != ["L"]:
        raise ParseError(lineno, "expected 'L' section after first ';'")
    lin_tokens = tokens[sep1 + 2:sep2]
    tail = tokens[sep2 + 1:]
    if len(tail) != 2 or tail[0] != "C" or tail[1] not in ("0", "1"):
        raise ParseError(lineno, "expected 'C <0|1>' at end of equation")
    if len(quad_tokens) % 2:
        raise ParseError(lineno, "quadratic section needs index pairs")
    masks = []
    for k in range(0, len(quad_tokens), 2):
        i = _parse_index(quad_tokens[k], n, lineno)
        j = _parse_index(quad_tokens[k + 1], n, lineno)
        if i >= j:
            raise ParseError(lineno, f"quadratic pair must have i < j, got {i + 1},{j + 1}")
        mask = (1 << i) | (1 << j)
        if mask in masks:
            raise ParseError(lineno, "repeated quadratic monomial")
        masks.append(mask)
    for tok in lin_tokens:
        mask = 1 << _parse_index(tok, n, lineno)
        if mask in masks:
            raise ParseError(lineno, "repeated linear monomial")
        masks.append(mask)
    if tail[1] == "1":
        masks.append(0)
    return BoolPoly.from_masks(masks)


def parse_mq(text: str) -> MqInstance:
    r = _Reader(text)
    r.expect_kind("MQ")
    n = r.header_int("n")
    m = r.header_int("m")
    eqs = tuple(_parse_equation(r.next_line(), n, r.pos) for _ in range(m))
    r.done()
    return MqInstance(n, eqs, VariableRegistry.originals(n))


# ---------------------------------------------------------------------------
# standard-form systems

_DEF_NAMES = {KIND_PRODUCT: "PROD", KIND_ALIAS: "ALIAS",
              KIND_CHAIN: "CHAIN", KIND_CONST: "CONST"}
_DEF_KINDS = {name: kind for kind, name in _DEF_NAMES.items()}
_DEF_ORIGIN = {KIND_PRODUCT: "quadratize-aux", KIND_ALIAS: "copy-aux",
               KIND_CHAIN: "chain-aux", KIND_CONST: "padding"}


def serialize_standard_form(sf: StandardFormSystem) -> str:
    lines = ["SF", f"q {sf.q}", f"lambda {sf.lam}",
             f"orig {sf.log.original_var_count}",
             f"padding {sf.padding_count}",
             f"contradiction {int(sf.contradiction)}"]
    for x, y, z in sf.triples:
        lines.append(f"T {x + 1} {y + 1} {z + 1}")
    for eq in sf.linear:
        vars_text = " ".join(str(v + 1) for v in eq.vars)
        lines.append(f"LN {vars_text} ; C {eq.const}")
    for d in sf.log.defs:
        ops = " ".join(str(v + 1) for v in d.operands)
        if d.kind == KIND_CONST:
            lines.append(f"DEF CONST {d.new + 1} {d.value}")
        else:
            lines.append(f"DEF {_DEF_NAMES[d.kind]} {d.new + 1} {ops}")
    return "\n".join(lines) + "\n"


def parse_standard_form(text: str) -> StandardFormSystem:
    r = _Reader(text)
    r.expect_kind("SF")
    q = r.header_int("q")
    lam = r.header_int("lambda")
    orig = r.header_int("orig")
    padding = r.header_int("padding")
    contradiction = r.header_int("contradiction")
    if contradiction not in (0, 1):
        raise ParseError(r.lineno, "contradiction flag must be 0 or 1")

    triple_lines = [r.next_line() for _ in range(q)]
    linear_lines = [r.next_line() for _ in range(lam)]
    def_lines = []
    while r.pos < len(r.lines):
        def_lines.append(r.next_line())
    r.done()

    registry = VariableRegistry.originals(orig)
    defs = []
    for offset, line in enumerate(def_lines):
        lineno = len(r.lines) - len(def_lines) + offset + 1
        tokens = line.split(" ")
        if len(tokens) < 3 or tokens[0] != "DEF" or tokens[1] not in _DEF_KINDS:
            raise ParseError(lineno, f"bad definition line {line!r}")
        kind = _DEF_KINDS[tokens[1]]
        new = registry.fresh(f"d{len(registry) + 1}", _DEF_ORIGIN[kind])
        if int(tokens[2]) - 1 != new:
            raise ParseError(lineno, f"definition for variable {tokens[2]} out of order")
        if kind == KIND_CONST:
            if len(tokens) != 4 or tokens[3] not in ("0", "1"):
                raise ParseError(lineno, "CONST definition needs a bit value")
            defs.append(Definition(kind, new, (), int(tokens[3])))
        else:
            arity = 1 if kind == KIND_ALIAS else 2
            if len(tokens) != 3 + arity:
                raise ParseError(lineno, f"{tokens[1]} definition needs {arity} operands")
            ops = tuple(_parse_index(tok, new, lineno) for tok in tokens[3:])
            defs.append(Definition(kind, new, ops))
    nvars = len(registry)

    triples = []
    for offset, line in enumerate(triple_lines):
        lineno = 7 + offset
        tokens = line.split(" ")
        if len(tokens) != 4 or tokens[0] != "T":
            raise ParseError(lineno, f"bad triple line {line!r}")
        x, y, z = (_parse_index(tok, nvars, lineno) for tok in tokens[1:])
        triples.append((x, y, z))
    linear = []
    for offset, line in enumerate(linear_lines):
        lineno = 7 + q + offset
        tokens = line.split(" ")
        if len(tokens) < 4 or tokens[0] != "LN" or tokens[-2:-1] != ["C"] \
                or ";" not in tokens or tokens[-1] not in ("0", "1"):
            raise ParseError(lineno, f"bad linear line {line!r}")
        sep = tokens.index(";")
        if tokens[sep + 1:] != ["C", tokens[-1]]:
            raise ParseError(lineno, f"bad linear line {line!r}")
        vars_ = tuple(_parse_index(tok, nvars, lineno) for tok in tokens[1:sep])
        linear.append(LinearEquation(vars_, int(tokens[-1])))

    sf = StandardFormSystem(registry, tuple(triples), tuple(linear),
                            TransformLog(orig, tuple(defs)), padding,
                            bool(contradiction))
    sf.validate()
    return sf


# ---------------------------------------------------------------------------
# witnesses and sidecar metadata

def serialize_witness(v: BitVector) -> str:
    return f"WITNESS {v.n}\n{v}\n"


def parse_witness(text: str) -> BitVector:
    r = _Reader(text)
    line = r.next_line()
    parts = line.split(" ")
    if len(parts) != 2 or parts[0] != "WITNESS":
        raise ParseError(r.lineno, f"expected 'WITNESS <len>', got {line!r}")
    try:
        n = int(parts[1])
    except ValueError:
        raise ParseError(r.lineno, f"bad length {parts[1]!r}") from None
    bits = r.bit_row(n, "witness row")
    r.done()
    return BitVector(n, bits)


def serialize_metadata(meta: dict[str, object]) -> str:
    return "".join(f"{key} {value}\n" for key, value in meta.items())


def detect_kind(text: str) -> str:
    head = text.split("\n", 1)[0]
    if head in ("MLD", "MQ", "SF") or head.startswith("WITNESS "):
        return head.split(" ", 1)[0]
    raise ParseError(1, f"unknown instance kind {head!r}")


def parse_any(text: str):
    kind = detect_kind(text)
    if kind == "MLD":
        return parse_mld(text)
    if kind == "MQ":
        return parse_mq(text)
    if kind == "SF":
        return parse_standard_form(text)
    return parse_witness(text)
