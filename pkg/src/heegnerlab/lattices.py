"""Even integral lattices: construction, duals, complements, primitivity.

A lattice is presented by its Gram matrix of intersection numbers in a fixed
basis.  All arithmetic is exact; signatures are computed by symmetric
elimination over the rationals.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

from .intlinalg import (
    bareiss_determinant,
    hermite_row_basis,
    invert_rational,
    is_symmetric,
    kernel_basis,
    mat_vec,
    symmetric_signature,
)

IntVector = tuple[int, ...]
Gram = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class IntegerLattice:
    """Even integral lattice given by a Gram matrix plus inertia counts."""

    gram: Gram
    signature: tuple[int, int]
    name: str | None = None

    @property
    def rank(self) -> int:
        return len(self.gram)

    def pairing(self, u: Sequence, v: Sequence) -> Fraction:
        """Intersection pairing of two vectors in basis coordinates."""
        gv = mat_vec(self.gram, list(v))
        return _as_fraction(sum(a * b for a, b in zip(u, gv)))

    def norm_of(self, v: Sequence) -> Fraction:
        return self.pairing(v, v)

    def to_jsonable(self) -> dict:
        doc = {}
        if self.name is not None:
            doc["name"] = self.name
        doc["gram"] = [list(row) for row in self.gram]
        doc["signature"] = list(self.signature)
        return doc


@dataclass(frozen=True)
class DualVector:
    """Rational vector in the span of a lattice, in lattice-basis coordinates."""

    lattice: IntegerLattice
    coords: tuple[Fraction, ...]

    def pairing(self, other) -> Fraction:
        coords = other.coords if isinstance(other, DualVector) else other
        return self.lattice.pairing(self.coords, coords)

    def norm(self) -> Fraction:
        return self.pairing(self)

    def in_dual(self) -> bool:
        """Membership in M-dual: integral pairing against every basis vector."""
        return all(x.denominator == 1 for x in mat_vec(self.lattice.gram, self.coords))

    def in_lattice(self) -> bool:
        return all(x.denominator == 1 for x in self.coords)

    def __add__(self, other: "DualVector") -> "DualVector":
        if other.lattice is not self.lattice and other.lattice != self.lattice:
            raise ValueError("dual vectors live in different lattices")
        return DualVector(self.lattice, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "DualVector":
        return DualVector(self.lattice, tuple(-a for a in self.coords))


def _as_fraction(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


def make_lattice(gram: Iterable[Iterable[int]], name: str | None = None) -> IntegerLattice:
    """Build a lattice from an integer Gram matrix, validating evenness."""
    rows = tuple(tuple(int(x) for x in row) for row in gram)
    if not is_symmetric(rows):
        raise ValueError("Gram matrix must be symmetric")
    for i, row in enumerate(rows):
        if row[i] % 2 != 0:
            raise ValueError(f"diagonal entry {row[i]} at position {i} is odd; lattice must be even")
    p, q, z = symmetric_signature(rows)
    if z:
        raise ValueError("Gram matrix is degenerate")
    return IntegerLattice(gram=rows, signature=(p, q), name=name)


U_GRAM = ((0, 1), (1, 0))
A1_GRAM = ((2,),)
A2_GRAM = ((2, -1), (-1, 2))
E8_GRAM = (
    (2, 0, -1, 0, 0, 0, 0, 0),
    (0, 2, 0, -1, 0, 0, 0, 0),
    (-1, 0, 2, -1, 0, 0, 0, 0),
    (0, -1, -1, 2, -1, 0, 0, 0),
    (0, 0, 0, -1, 2, -1, 0, 0),
    (0, 0, 0, 0, -1, 2, -1, 0),
    (0, 0, 0, 0, 0, -1, 2, -1),
    (0, 0, 0, 0, 0, 0, -1, 2),
)


def _block_diag(blocks: Sequence[Gram]) -> list[list[int]]:
    size = sum(len(b) for b in blocks)
    out = [[0] * size for _ in range(size)]
    offset = 0
    for b in blocks:
        for i, row in enumerate(b):
            for j, x in enumerate(row):
                out[offset + i][offset + j] = x
        offset += len(b)
    return out


NAMED_LATTICES = (
    "U",
    "A1",
    "A2",
    "E8",
    "rank1",
    "Lambda_C",
    "Lambda_GM",
    "Lambda_HK",
    "Lambda_HK_prim",
    "Lambda_d",
    "Lambda_sharp",
)


@functools.lru_cache(maxsize=None)
def build_named_lattice(name: str, *params: int) -> IntegerLattice:
    """Construct one of the standard lattices by name.

    Parametrized names: ``rank1(d)`` and ``Lambda_d(d)`` take an even d > 0;
    ``Lambda_HK_prim(n, delta)`` takes n > 0 and delta in {1, 2}, where
    delta = 2 additionally requires n = 3 (mod 4).  Direct summands are laid
    out block-diagonally in the conventional order.  Block signatures add,
    so composite builds skip the full symmetric elimination.
    """
    if name == "U":
        return _named(U_GRAM, "U", params)
    if name == "A1":
        return _named(A1_GRAM, "A1", params)
    if name == "A2":
        return _named(A2_GRAM, "A2", params)
    if name == "E8":
        return _named(E8_GRAM, "E8", params)
    if name == "rank1":
        (d,) = _take_params(name, params, 1)
        _require_even_positive(d)
        return make_lattice(((d,),), name=f"rank1({d})")
    if name == "Lambda_C":
        return _assemble("Lambda_C", [A2_GRAM, U_GRAM, U_GRAM, E8_GRAM, E8_GRAM])
    if name == "Lambda_GM":
        return _assemble("Lambda_GM", [A1_GRAM, A1_GRAM, E8_GRAM, E8_GRAM, U_GRAM, U_GRAM])
    if name == "Lambda_HK":
        return _assemble("Lambda_HK", [A1_GRAM, U_GRAM, U_GRAM, U_GRAM, E8_GRAM, E8_GRAM])
    if name == "Lambda_HK_prim":
        n, delta = _take_params(name, params, 2)
        if n <= 0:
            raise ValueError("Lambda_HK_prim requires n > 0")
        if delta == 1:
            tail: Gram = ((2, 0), (0, 2 * n))
        elif delta == 2:
            if n % 4 != 3:
                raise ValueError("Lambda_HK_prim with delta=2 requires n = 3 (mod 4)")
            tail = ((2, 1), (1, (n + 1) // 2))
        else:
            raise ValueError("delta must be 1 or 2")
        return _assemble(
            f"Lambda_HK_prim({n},{delta})", [U_GRAM, U_GRAM, E8_GRAM, E8_GRAM, tail]
        )
    if name == "Lambda_d":
        (d,) = _take_params(name, params, 1)
        _require_even_positive(d)
        return _assemble(f"Lambda_d({d})", [E8_GRAM, E8_GRAM, U_GRAM, U_GRAM, ((d,),)])
    if name == "Lambda_sharp":
        return _assemble("Lambda_sharp", [E8_GRAM, E8_GRAM, E8_GRAM, U_GRAM, U_GRAM])
    raise ValueError(f"unknown lattice name {name!r}; expected one of {', '.join(NAMED_LATTICES)}")


def _assemble(name: str, blocks: list[Gram]) -> IntegerLattice:
    summands = [make_lattice(b) for b in blocks]
    combined = direct_sum(*summands)
    return IntegerLattice(gram=combined.gram, signature=combined.signature, name=name)


def _named(gram: Gram, name: str, params) -> IntegerLattice:
    if params:
        raise ValueError(f"{name} takes no parameters")
    return make_lattice(gram, name=name)


def _take_params(name: str, params, count: int):
    if len(params) != count:
        raise ValueError(f"{name} requires {count} integer parameter(s), got {len(params)}")
    return tuple(int(p) for p in params)


def _require_even_positive(d: int) -> None:
    if d <= 0:
        raise ValueError(f"d must be positive, got {d}")
    if d % 2 != 0:
        raise ValueError(f"d must be even for an even lattice, got {d}")


def direct_sum(*lattices: IntegerLattice) -> IntegerLattice:
    gram = _block_diag([l.gram for l in lattices])
    p = sum(l.signature[0] for l in lattices)
    q = sum(l.signature[1] for l in lattices)
    return IntegerLattice(gram=tuple(tuple(row) for row in gram), signature=(p, q))


def twist(lattice: IntegerLattice) -> IntegerLattice:
    """Twist by (-1): negate the pairing, swapping the signature."""
    gram = tuple(tuple(-x for x in row) for row in lattice.gram)
    p, q = lattice.signature
    return IntegerLattice(gram=gram, signature=(q, p))


@functools.lru_cache(maxsize=None)
def gram_determinant(lattice: IntegerLattice) -> int:
    return bareiss_determinant(lattice.gram)


def disc(lattice: IntegerLattice) -> int:
    """|det Gram|, the discriminant in the unsigned convention."""
    return abs(gram_determinant(lattice))


def dual_basis(lattice: IntegerLattice) -> list[DualVector]:
    """Dual basis vectors as rows of the inverse Gram matrix."""
    if gram_determinant(lattice) == 0:
        raise ValueError("dual basis requires a nondegenerate Gram matrix")
    inv = invert_rational(lattice.gram)
    return [DualVector(lattice, tuple(row)) for row in inv]


def is_primitive(lattice: IntegerLattice, v: Sequence[int]) -> bool:
    """A nonzero lattice vector is primitive iff its coordinate gcd is 1."""
    coords = [int(x) for x in v]
    if not any(coords):
        raise ValueError("the zero vector is not primitive nor imprimitive")
    g = 0
    for x in coords:
        g = gcd(g, x)
    return g == 1


def orthogonal_complement(
    lattice: IntegerLattice, vectors: Sequence[Sequence[int]]
) -> tuple[IntegerLattice, list[IntVector]]:
    """Orthogonal complement of a set of lattice vectors.

    Returns the complement with its induced Gram matrix together with a basis
    expressed in ambient coordinates.  The integer kernel of the pairing map
    is saturated, so the complement is a primitive sublattice.
    """
    vecs = [[int(x) for x in v] for v in vectors]
    if not vecs:
        return lattice, [tuple(row) for row in _identity_rows(lattice.rank)]
    pairing_rows = [mat_vec(lattice.gram, v) for v in vecs]
    basis = hermite_row_basis(kernel_basis(pairing_rows))
    induced = [[sum(bi[k] * x for k, x in enumerate(mat_vec(lattice.gram, bj))) for bj in basis] for bi in basis]
    p, q, z = symmetric_signature(induced) if induced else (0, 0, 0)
    result = IntegerLattice(
        gram=tuple(tuple(int(x) for x in row) for row in induced),
        signature=(p, q),
    )
    return result, [tuple(b) for b in basis]


def _identity_rows(n: int) -> list[list[int]]:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def lattice_from_jsonable(doc: dict) -> IntegerLattice:
    lattice = make_lattice(doc["gram"], name=doc.get("name"))
    if "signature" in doc and tuple(doc["signature"]) != lattice.signature:
        raise ValueError(
            f"stored signature {tuple(doc['signature'])} does not match computed {lattice.signature}"
        )
    return lattice
