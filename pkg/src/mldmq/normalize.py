"""Degree reduction and conversion of quadratic systems to disjoint form.

The target shape consists of quadratic equations x*y + z = 0 that pairwise
share no variable, plus linear equations with at most three variables whose
every variable also sits in exactly one quadratic equation.  Conversion
introduces per-equation variable renames, copies for repeated quadratic
occurrences, product variables for quadratic monomials, chain variables for
long linear residues, and padding triples that give a quadratic home to
variables that would otherwise occur only linearly.

Every auxiliary variable is recorded as a definition in a replayable log, so
any solution of the input extends deterministically to a solution of the
output and any solution of the output projects back onto the input
variables.
"""

from __future__ import annotations

from dataclasses import dataclass

from .boolpoly import BoolPoly, MqInstance, VariableRegistry, mask_of_vars, mask_vars
from .gf2 import BitVector

__all__ = [
    "Definition",
    "TransformLog",
    "LinearEquation",
    "StandardFormSystem",
    "quadratize",
    "split_linear",
    "to_standard_form",
    "extend_witness",
    "pull_back_witness",
]

KIND_PRODUCT = "product"
KIND_ALIAS = "alias"
KIND_CHAIN = "chain"
KIND_CONST = "const"


@dataclass(frozen=True)
class Definition:
    """One auxiliary variable: new = a*b, new = old, new = a^b, or new = const."""

    kind: str
    new: int
    operands: tuple[int, ...] = ()
    value: int = 0

    def __post_init__(self) -> None:
        arity = {KIND_PRODUCT: 2, KIND_ALIAS: 1, KIND_CHAIN: 2, KIND_CONST: 0}
        if self.kind not in arity:
            raise ValueError(f"unknown definition kind {self.kind!r}")
        if len(self.operands) != arity[self.kind]:
            raise ValueError(f"{self.kind} takes {arity[self.kind]} operands")
        if any(op >= self.new for op in self.operands):
            raise ValueError("operands must precede the defined variable")

    def evaluate(self, bits: int) -> int:
        if self.kind == KIND_PRODUCT:
            a, b = self.operands
            return (bits >> a) & (bits >> b) & 1
        if self.kind == KIND_ALIAS:
            return (bits >> self.operands[0]) & 1
        if self.kind == KIND_CHAIN:
            a, b = self.operands
            return ((bits >> a) ^ (bits >> b)) & 1
        return self.value


@dataclass(frozen=True)
class TransformLog:
    """Ordered definitions; definition i introduces variable original_var_count + i."""

    original_var_count: int
    defs: tuple[Definition, ...] = ()

    def __post_init__(self) -> None:
        for i, d in enumerate(self.defs):
            if d.new != self.original_var_count + i:
                raise ValueError(f"definition {i} defines variable {d.new}, "
                                 f"expected {self.original_var_count + i}")

    @property
    def total_vars(self) -> int:
        return self.original_var_count + len(self.defs)


def extend_witness(log: TransformLog, partial: BitVector) -> BitVector:
    """Replay the definitions, extending a solution on the original variables."""
    if partial.n != log.original_var_count:
        raise ValueError(f"partial assignment covers {partial.n} variables, "
                         f"expected {log.original_var_count}")
    bits = partial.bits
    for d in log.defs:
        bits |= d.evaluate(bits) << d.new
    return BitVector(log.total_vars, bits)


def pull_back_witness(log: TransformLog, full: BitVector) -> BitVector:
    """Restrict a full assignment to the original variables."""
    if full.n != log.total_vars:
        raise ValueError(f"assignment covers {full.n} variables, expected {log.total_vars}")
    k = log.original_var_count
    return BitVector(k, full.bits & ((1 << k) - 1))


@dataclass(frozen=True)
class LinearEquation:
    """Sum of up to three distinct variables plus a constant, equal to zero."""

    vars: tuple[int, ...]
    const: int

    def __post_init__(self) -> None:
        if not 1 <= len(self.vars) <= 3:
            raise ValueError(f"linear equation needs 1..3 variables, got {len(self.vars)}")
        if len(set(self.vars)) != len(self.vars):
            raise ValueError("repeated variable in linear equation")
        if self.const not in (0, 1):
            raise ValueError("constant must be a bit")

    def evaluate(self, bits: int) -> int:
        acc = self.const
        for v in self.vars:
            acc ^= (bits >> v) & 1
        return acc

    def to_poly(self) -> BoolPoly:
        masks = [1 << v for v in self.vars]
        if self.const:
            masks.append(0)
        return BoolPoly.from_masks(masks)


@dataclass(eq=False)
class StandardFormSystem:
    """Variable-disjoint triples x*y + z = 0 plus short linear equations."""

    registry: VariableRegistry
    triples: tuple[tuple[int, int, int], ...]
    linear: tuple[LinearEquation, ...]
    log: TransformLog
    padding_count: int = 0
    contradiction: bool = False

    @property
    def q(self) -> int:
        return len(self.triples)

    @property
    def lam(self) -> int:
        return len(self.linear)

    @property
    def nvars(self) -> int:
        return len(self.registry)

    @property
    def core_triple_count(self) -> int:
        """Triples coming from quadratic monomials, padding excluded."""
        return self.q - self.padding_count

    def occurring_variables(self) -> set[int]:
        occ = {v for t in self.triples for v in t}
        occ.update(v for eq in self.linear for v in eq.vars)
        return occ

    def validate(self) -> None:
        """Assert every structural invariant of the disjoint form."""
        seen: set[int] = set()
        for t in self.triples:
            if len(set(t)) != 3:
                raise ValueError(f"triple {t} repeats a variable")
            if seen & set(t):
                raise ValueError(f"triple {t} shares a variable with another triple")
            seen.update(t)
        for eq in self.linear:
            for v in eq.vars:
                if v not in seen:
                    raise ValueError(f"linear variable {v} is in no quadratic triple")
        if len(self.occurring_variables()) != 3 * self.q:
            raise ValueError("occurring variable count differs from 3q")
        if self.nvars != self.log.total_vars:
            raise ValueError("registry size differs from log coverage")
        if any(v >= self.nvars for v in seen):
            raise ValueError("triple references an unregistered variable")

    def to_mq_instance(self) -> MqInstance:
        """The same system as plain degree-<=2 equations (for the oracles)."""
        eqs = [BoolPoly(frozenset(((1 << x) | (1 << y), 1 << z)))
               for x, y, z in self.triples]
        eqs.extend(eq.to_poly() for eq in self.linear)
        return MqInstance(self.nvars, tuple(eqs), self.registry)

    def satisfies(self, assign: BitVector) -> bool:
        if assign.n != self.nvars:
            raise ValueError(f"assignment length {assign.n}, expected {self.nvars}")
        bits = assign.bits
        for x, y, z in self.triples:
            if (((bits >> x) & (bits >> y)) ^ (bits >> z)) & 1:
                return False
        return all(eq.evaluate(bits) == 0 for eq in self.linear)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, StandardFormSystem):
            return NotImplemented
        return (self.triples == other.triples
                and self.linear == other.linear
                and self.log == other.log
                and self.padding_count == other.padding_count
                and self.contradiction == other.contradiction)


def quadratize(eq: BoolPoly, registry: VariableRegistry):
    """Rewrite one equation into degree-<=2 equations via product definitions.

    Each degree-d monomial (d >= 3) gets a fresh chain of d-2 product
    variables over its variables in ascending order; chains are never shared
    between monomials.  Returns the list of produced equations (definition
    equations first, rewritten remainder last) and the log of definitions.
    A degree-<=2 input comes back unchanged with an empty log.
    """
    base = len(registry)
    defs: list[Definition] = []
    def_eqs: list[BoolPoly] = []
    rewritten: list[int] = []
    for mono in eq.canonical_terms():
        if mono.bit_count() <= 2:
            rewritten.append(mono)
            continue
        vs = mask_vars(mono)
        acc = vs[0]
        for nxt in vs[1:-1]:
            y = registry.fresh(f"q{len(registry) + 1}", "quadratize-aux")
            defs.append(Definition(KIND_PRODUCT, y, (acc, nxt)))
            def_eqs.append(BoolPoly(frozenset((1 << y, (1 << acc) | (1 << nxt)))))
            acc = y
        rewritten.append((1 << acc) | (1 << vs[-1]))
    final = BoolPoly(frozenset(rewritten))
    return def_eqs + [final], TransformLog(base, tuple(defs))


def split_linear(eq: BoolPoly, registry: VariableRegistry):
    """Split a linear equation into 3-variable chain equations.

    An equation with l >= 4 variables becomes l-2 equations over l-3 fresh
    prefix-sum variables; shorter equations are returned unchanged.
    """
    if eq.degree() > 1:
        raise ValueError(f"expected a linear polynomial, got degree {eq.degree()}")
    base = len(registry)
    terms = sorted(mask_vars(eq.variables_mask()))
    if not terms:
        raise ValueError("expected at least one variable occurrence")
    const = 1 if 0 in eq.terms else 0
    if len(terms) <= 3:
        return [eq], TransformLog(base, ())
    defs: list[Definition] = []
    linear: list[LinearEquation] = []
    _emit_linear_chain(terms, const, registry, defs, linear)
    return [le.to_poly() for le in linear], TransformLog(base, tuple(defs))


def _emit_linear_chain(terms, const, registry, defs, linear) -> None:
    """Append <=3-variable equations equivalent to sum(terms) + const = 0."""
    l = len(terms)
    if l == 0:
        if const:
            raise ValueError("contradictory constant equation reached the splitter")
        return
    if l <= 3:
        linear.append(LinearEquation(tuple(sorted(terms)), const))
        return
    y = registry.fresh(f"c{len(registry) + 1}", "chain-aux")
    defs.append(Definition(KIND_CHAIN, y, (terms[0], terms[1])))
    linear.append(LinearEquation(tuple(sorted((terms[0], terms[1], y))), 0))
    for k in range(2, l - 2):
        nxt = registry.fresh(f"c{len(registry) + 1}", "chain-aux")
        defs.append(Definition(KIND_CHAIN, nxt, (y, terms[k])))
        linear.append(LinearEquation(tuple(sorted((y, terms[k], nxt))), 0))
        y = nxt
    linear.append(LinearEquation(tuple(sorted((y, terms[l - 2], terms[l - 1]))), const))


def _contradiction_marker(registry: VariableRegistry, orig: int) -> StandardFormSystem:
    """Canonical unsatisfiable system standing in for a 1 = 0 input equation."""
    x = registry.fresh("k1", "padding")
    y = registry.fresh("k2", "padding")
    z = registry.fresh("k3", "padding")
    defs = (Definition(KIND_CONST, x, (), 0),
            Definition(KIND_CONST, y, (), 0),
            Definition(KIND_CONST, z, (), 0))
    linear = (LinearEquation((z,), 1), LinearEquation((x,), 0))
    sf = StandardFormSystem(registry, ((x, y, z),), linear,
                            TransformLog(orig, defs), 0, True)
    sf.validate()
    return sf


def to_standard_form(inst: MqInstance) -> StandardFormSystem:
    """Convert a degree-<=2 system to the variable-disjoint form.

    Per equation containing a quadratic monomial, every occurring variable
    is renamed to a private copy (with a binding linear equation), each
    quadratic monomial becomes a product triple with further copies on
    repeated use, and the linear residue is chain-split.  Purely linear
    equations skip the renaming step.  A final padding pass packs variables
    that occur only linearly pairwise into triples (w1, w2, r) with fresh
    r = w1*w2, which constrains neither w.  An input containing the
    constant equation 1 = 0 yields the canonical unsatisfiable marker.
    """
    registry = inst.registry.clone() if inst.registry is not None \
        else VariableRegistry.originals(inst.nvars)
    orig = inst.nvars
    for eq in inst.equations:
        if eq.is_one():
            return _contradiction_marker(registry, orig)

    defs: list[Definition] = []
    triples: list[tuple[int, int, int]] = []
    linear: list[LinearEquation] = []

    for h, eq in enumerate(inst.equations, start=1):
        if eq.is_zero():
            continue
        const = 1 if 0 in eq.terms else 0
        quad_monos = [m for m in eq.canonical_terms() if m.bit_count() == 2]
        lin_vars = sorted(mask_vars(mask_of_vars(
            v for m in eq.terms if m.bit_count() == 1 for v in mask_vars(m))))
        if not quad_monos:
            _emit_linear_chain(lin_vars, const, registry, defs, linear)
            continue
        rename: dict[int, int] = {}
        for k in sorted(eq.variables()):
            r = registry.fresh(f"r{h}_{registry.name(k)}", "rename-aux")
            defs.append(Definition(KIND_ALIAS, r, (k,)))
            linear.append(LinearEquation((k, r), 0))
            rename[k] = r
        used: set[int] = set()
        residual: list[int] = []
        for mono in quad_monos:
            pair = []
            for k in mask_vars(mono):
                v = rename[k]
                if v in used:
                    c = registry.fresh(f"r{h}_{registry.name(k)}'", "copy-aux")
                    defs.append(Definition(KIND_ALIAS, c, (v,)))
                    linear.append(LinearEquation(tuple(sorted((v, c))), 0))
                    v = c
                pair.append(v)
                used.add(v)
            w = registry.fresh(f"p{h}_{len(registry) + 1}", "quadratize-aux")
            defs.append(Definition(KIND_PRODUCT, w, (pair[0], pair[1])))
            triples.append((pair[0], pair[1], w))
            used.add(w)
            residual.append(w)
        residual.extend(rename[k] for k in lin_vars)
        _emit_linear_chain(residual, const, registry, defs, linear)

    lin_used = {v for le in linear for v in le.vars}
    tri_used = {v for t in triples for v in t}
    orphans = sorted(lin_used - tri_used)
    padding = 0
    i = 0
    while i + 1 < len(orphans):
        w1, w2 = orphans[i], orphans[i + 1]
        r = registry.fresh(f"pad{len(registry) + 1}", "padding")
        defs.append(Definition(KIND_PRODUCT, r, (w1, w2)))
        triples.append((w1, w2, r))
        padding += 1
        i += 2
    if i < len(orphans):
        w = orphans[i]
        p = registry.fresh(f"pad{len(registry) + 1}", "padding")
        defs.append(Definition(KIND_CONST, p, (), 0))
        r = registry.fresh(f"pad{len(registry) + 1}", "padding")
        defs.append(Definition(KIND_CONST, r, (), 0))
        triples.append((w, p, r))
        padding += 1

    sf = StandardFormSystem(registry, tuple(triples), tuple(linear),
                            TransformLog(orig, tuple(defs)), padding, False)
    sf.validate()
    return sf
