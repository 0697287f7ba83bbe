"""Dense GF(2) vectors and matrices backed by Python integers.

Bit order is least-significant-first throughout: coordinate i (0-based) of a
vector is bit i of the backing integer, and string forms print coordinate 0
first.  Under this convention a vector read as a binary counter has integer
value equal to its backing int, so the counter helpers (:func:`int_of_bits`,
:func:`increase`) reduce to plain integer arithmetic.

All values are immutable after construction and every operation is a pure
function, so shared instances are safe to use concurrently.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

__all__ = [
    "BitVector",
    "BitMatrix",
    "WeightBits",
    "bit_length_for",
    "hamming_weight",
    "int_of_bits",
    "increase",
    "project",
    "truncate",
    "mat_vec_mul",
    "vec_mat_mul",
    "systematic_parity_check",
]


def bit_length_for(n: int) -> int:
    """Bits needed to write any weight of a length-n vector: floor(log2 n) + 1."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    return n.bit_length()


@dataclass(frozen=True)
class BitVector:
    """Row vector over GF(2); coordinate i is bit i of ``bits``."""

    n: int
    bits: int = 0

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError(f"negative length {self.n}")
        if self.bits < 0 or self.bits >> self.n:
            raise ValueError(f"bits out of range for length {self.n}")

    @classmethod
    def zeros(cls, n: int) -> "BitVector":
        return cls(n, 0)

    @classmethod
    def ones(cls, n: int) -> "BitVector":
        return cls(n, (1 << n) - 1)

    @classmethod
    def from_bits(cls, values: Iterable[int]) -> "BitVector":
        bits = 0
        n = 0
        for v in values:
            if v not in (0, 1):
                raise ValueError(f"coordinate {n} is {v!r}, expected 0 or 1")
            bits |= v << n
            n += 1
        return cls(n, bits)

    @classmethod
    def from_string(cls, text: str) -> "BitVector":
        """Parse a 01-string, coordinate 0 written first."""
        return cls.from_bits(int(c) if c in "01" else -1 for c in text)

    def get(self, i: int) -> int:
        if not 0 <= i < self.n:
            raise IndexError(f"coordinate {i} out of range for length {self.n}")
        return (self.bits >> i) & 1

    def weight(self) -> int:
        return self.bits.bit_count()

    def to_tuple(self) -> tuple[int, ...]:
        return tuple((self.bits >> i) & 1 for i in range(self.n))

    def concat(self, other: "BitVector") -> "BitVector":
        return BitVector(self.n + other.n, self.bits | (other.bits << self.n))

    def __xor__(self, other: "BitVector") -> "BitVector":
        if self.n != other.n:
            raise ValueError(f"length mismatch: {self.n} vs {other.n}")
        return BitVector(self.n, self.bits ^ other.bits)

    def __iter__(self) -> Iterator[int]:
        return iter(self.to_tuple())

    def __str__(self) -> str:
        return "".join(str((self.bits >> i) & 1) for i in range(self.n))


@dataclass(frozen=True)
class BitMatrix:
    """Matrix over GF(2); row i is the integer ``row_masks[i]`` (bit j = entry i,j)."""

    rows: int
    cols: int
    row_masks: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.rows < 0 or self.cols < 0:
            raise ValueError("negative dimension")
        if len(self.row_masks) != self.rows:
            raise ValueError(f"expected {self.rows} rows, got {len(self.row_masks)}")
        for i, mask in enumerate(self.row_masks):
            if mask < 0 or mask >> self.cols:
                raise ValueError(f"row {i} out of range for {self.cols} columns")

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "BitMatrix":
        return cls(rows, cols, (0,) * rows)

    @classmethod
    def identity(cls, k: int) -> "BitMatrix":
        return cls(k, k, tuple(1 << i for i in range(k)))

    @classmethod
    def from_rows(cls, masks: Iterable[int], cols: int) -> "BitMatrix":
        rows = tuple(masks)
        return cls(len(rows), cols, rows)

    @classmethod
    def from_strings(cls, lines: Iterable[str]) -> "BitMatrix":
        vecs = [BitVector.from_string(line) for line in lines]
        if not vecs:
            return cls(0, 0, ())
        cols = vecs[0].n
        for i, v in enumerate(vecs):
            if v.n != cols:
                raise ValueError(f"row {i} has length {v.n}, expected {cols}")
        return cls(len(vecs), cols, tuple(v.bits for v in vecs))

    def get(self, i: int, j: int) -> int:
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(f"entry ({i},{j}) out of range")
        return (self.row_masks[i] >> j) & 1

    def row(self, i: int) -> BitVector:
        return BitVector(self.cols, self.row_masks[i])

    def column_mask(self, j: int) -> int:
        """Column j packed into an integer over the row index."""
        if not 0 <= j < self.cols:
            raise IndexError(f"column {j} out of range")
        mask = 0
        for i, row in enumerate(self.row_masks):
            mask |= ((row >> j) & 1) << i
        return mask

    def transpose(self) -> "BitMatrix":
        return BitMatrix(self.cols, self.rows,
                         tuple(self.column_mask(j) for j in range(self.cols)))

    def row_strings(self) -> list[str]:
        return [str(self.row(i)) for i in range(self.rows)]


@dataclass(frozen=True)
class WeightBits:
    """A weight value encoded on exactly ``ell`` bits, least-significant first."""

    ell: int
    vec: BitVector

    def __post_init__(self) -> None:
        if self.vec.n != self.ell:
            raise ValueError(f"expected {self.ell} bits, got {self.vec.n}")

    @classmethod
    def from_int(cls, value: int, ell: int) -> "WeightBits":
        if not 0 <= value < (1 << ell):
            raise ValueError(f"{value} does not fit on {ell} bits")
        return cls(ell, BitVector(ell, value))

    def to_int(self) -> int:
        return self.vec.bits


def hamming_weight(v: BitVector) -> int:
    """Number of non-zero coordinates."""
    return v.weight()


def int_of_bits(a: BitVector) -> int:
    """Integer value of a bit vector read least-significant-coordinate first."""
    return a.bits


def increase(a: BitVector) -> BitVector:
    """Binary increment with the all-ones vector as fixed point."""
    if a.bits == (1 << a.n) - 1:
        return a
    return BitVector(a.n, a.bits + 1)


def project(v: BitVector, i: int) -> BitVector:
    """Zero every coordinate past the first i, keeping the length."""
    if not 0 <= i <= v.n:
        raise ValueError(f"projection index {i} out of range for length {v.n}")
    return BitVector(v.n, v.bits & ((1 << i) - 1))


def truncate(v: BitVector, i: int) -> BitVector:
    """First i coordinates as a length-i vector."""
    if not 1 <= i <= v.n:
        raise ValueError(f"truncation index {i} out of range for length {v.n}")
    return BitVector(i, v.bits & ((1 << i) - 1))


def mat_vec_mul(h: BitMatrix, v: BitVector) -> BitVector:
    """Syndrome H v^T as a length-``h.rows`` vector."""
    if h.cols != v.n:
        raise ValueError(f"dimension mismatch: {h.rows}x{h.cols} matrix, length-{v.n} vector")
    out = 0
    for i, row in enumerate(h.row_masks):
        out |= ((row & v.bits).bit_count() & 1) << i
    return BitVector(h.rows, out)


def vec_mat_mul(v: BitVector, m: BitMatrix) -> BitVector:
    """Row-vector product v M (XOR of the rows selected by v)."""
    if v.n != m.rows:
        raise ValueError(f"dimension mismatch: length-{v.n} vector, {m.rows}x{m.cols} matrix")
    out = 0
    bits = v.bits
    while bits:
        low = bits & -bits
        out ^= m.row_masks[low.bit_length() - 1]
        bits ^= low
    return BitVector(m.cols, out)


def systematic_parity_check(g: BitMatrix) -> BitMatrix:
    """Parity-check matrix [R^T | I] of a systematic generator matrix [I | R].

    Over GF(2) the sign in the textbook identity vanishes; the result has
    H c^T = 0 for every row-span element c of g.  Raises ValueError when g
    is not in systematic form.
    """
    k, n = g.rows, g.cols
    if k > n:
        raise ValueError(f"generator matrix is {k}x{n}, needs cols >= rows")
    ident_mask = (1 << k) - 1
    for i, row in enumerate(g.row_masks):
        if row & ident_mask != 1 << i:
            raise ValueError(f"row {i} does not start with the identity pattern")
    out_rows = []
    for j in range(n - k):
        mask = 0
        for i in range(k):
            mask |= ((g.row_masks[i] >> (k + j)) & 1) << i
        mask |= 1 << (k + j)
        out_rows.append(mask)
    return BitMatrix(n - k, n, tuple(out_rows))
