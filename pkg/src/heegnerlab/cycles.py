"""Indexing of Heegner divisors and Kudla special cycles.

Covers the five lattice families: the cubic-fourfold coset rule, the
Gushel-Mukai labelling Gram matrices with their residue vectors, the
hyperkaehler index formula, the Hilbert-square route, and the rank-7
moment-matrix embedding into the unimodular (26, 2) lattice.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import Sequence

from .enumeration import first_primitive_vector
from .intlinalg import (
    elementary_divisors,
    fraction_determinant,
    rational_rank,
    symmetric_signature,
)
from .lattices import DualVector, build_named_lattice, orthogonal_complement
from .discriminant import discriminant_group

Gram = tuple[tuple[int, ...], ...]


@functools.lru_cache(maxsize=None)
def _tag_level(tag: str) -> int:
    if tag.startswith("Lambda_HK_prim"):
        inside = tag[tag.index("(") + 1 : tag.index(")")]
        n, delta = (int(x) for x in inside.split(","))
        lattice = build_named_lattice("Lambda_HK_prim", n, delta)
    else:
        lattice = build_named_lattice(tag)
    return discriminant_group(lattice).level


@dataclass(frozen=True)
class HeegnerIndex:
    """Index (n, gamma) of a Heegner divisor on the tagged period lattice."""

    n: Fraction
    gamma: str
    lattice_tag: str

    def __post_init__(self):
        level = _tag_level(self.lattice_tag)
        if (self.n * level).denominator != 1:
            raise ValueError(
                f"index {self.n} is not in (1/{level})Z for {self.lattice_tag}; the divisor class vanishes"
            )

    def to_jsonable(self) -> dict:
        return {"n": str(self.n), "gamma": self.gamma, "lattice": self.lattice_tag}


@dataclass(frozen=True)
class MomentMatrix:
    """Half-Gram matrix of a tuple of vectors, with its exact rank."""

    entries: tuple[tuple[Fraction, ...], ...]
    rank: int

    @property
    def size(self) -> int:
        return len(self.entries)

    @property
    def det(self) -> Fraction:
        return fraction_determinant(self.entries)

    @property
    def is_positive_semidefinite(self) -> bool:
        scale = 1
        for row in self.entries:
            for x in row:
                scale = scale * x.denominator // _gcd(scale, x.denominator)
        scaled = [[int(x * scale) for x in row] for row in self.entries]
        _, negatives, _ = symmetric_signature(scaled) if scaled else (0, 0, 0)
        return negatives == 0

    def principal_submatrix(self, indices: Sequence[int]) -> "MomentMatrix":
        sub = tuple(tuple(self.entries[i][j] for j in indices) for i in indices)
        return MomentMatrix(entries=sub, rank=rational_rank(sub))

    def to_jsonable(self) -> dict:
        return {
            "entries": [[str(x) for x in row] for row in self.entries],
            "rank": self.rank,
        }


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return abs(a)


@dataclass(frozen=True)
class LabellingWitness:
    """Labelling Gram with a residue vector and its verified identities.

    The checks close inside the 3x3 Gram algebra of the labelling; no
    ambient embedding is involved.
    """

    gram: Gram
    residue_vector: tuple[Fraction, ...]
    checks: dict

    def to_jsonable(self) -> dict:
        return {
            "gram": [list(row) for row in self.gram],
            "residue_vector": [str(x) for x in self.residue_vector],
            "checks": {k: (str(v) if isinstance(v, Fraction) else v) for k, v in self.checks.items()},
        }


@dataclass(frozen=True)
class HKIndexFamily:
    """Heegner-divisor index bound for the hyperkaehler families.

    gamma ranges over the whole discriminant group, so the record carries the
    marker "all" rather than a single coset.
    """

    index: Fraction
    n: int
    delta: int
    d: int
    disc: int
    norm_vv: Fraction
    lattice_tag: str
    gamma: str = "all"

    def to_jsonable(self) -> dict:
        return {
            "n": str(self.index),
            "gamma": self.gamma,
            "lattice": self.lattice_tag,
            "target_n": self.n,
            "delta": self.delta,
            "d": self.d,
            "disc": self.disc,
            "norm_vv": str(self.norm_vv),
        }


@dataclass(frozen=True)
class HilbertSquareRoute:
    """Route through the Hilbert square of a K3, when d/2 - n is a square."""

    g: int
    n: int
    m: int
    target: tuple[int, int]
    heegner_index: Fraction

    def to_jsonable(self) -> dict:
        return {
            "g": self.g,
            "n": self.n,
            "m": self.m,
            "target": {"degree": self.target[0], "delta": self.target[1]},
            "heegner_index": str(self.heegner_index),
        }


@dataclass(frozen=True)
class EmbeddingWitness:
    """Primitive embedding of the degree-d K3 lattice into the (26,2) one."""

    d: int
    image_basis: tuple[tuple[int, ...], ...]
    complement_basis: tuple[tuple[int, ...], ...]
    complement_gram: Gram
    moment: MomentMatrix
    det_lhs: Fraction
    det_rhs: Fraction
    image_primitive: bool

    @property
    def det_check_passed(self) -> bool:
        return self.det_lhs == self.det_rhs

    def to_jsonable(self) -> dict:
        return {
            "d": self.d,
            "image_basis": [list(v) for v in self.image_basis],
            "complement_gram": [list(row) for row in self.complement_gram],
            "moment": self.moment.to_jsonable(),
            "det_check": {
                "lhs": str(self.det_lhs),
                "rhs": str(self.det_rhs),
                "pass": self.det_check_passed,
            },
        }


def cubic_heegner_index(d: int) -> HeegnerIndex:
    """Coset rule for the cubic-fourfold locus of discriminant d."""
    d = int(d)
    if d <= 0:
        raise ValueError(f"d must be positive, got {d}")
    r = d % 6
    if r not in (0, 2):
        raise ValueError(
            f"d = {d} has d = {r} (mod 6); the locus is nonempty only for d = 0 or 2 (mod 6)"
        )
    gamma = "gamma0" if r == 0 else "gamma1"
    return HeegnerIndex(n=Fraction(d, 6), gamma=gamma, lattice_tag="Lambda_C")


def _gm_check_residue(d: int) -> int:
    d = int(d)
    if d <= 0:
        raise ValueError(f"d must be positive, got {d}")
    r = d % 8
    if r not in (0, 2, 4):
        raise ValueError(
            f"d = {d} has d = {r} (mod 8); the labelling exists only for d = 0, 2, or 4 (mod 8)"
        )
    return r


def gm_labelling_gram(d: int) -> tuple[Gram, ...]:
    """Labelling Gram matrices for the Gushel-Mukai locus of discriminant d.

    One matrix for d = 0 or 4 (mod 8); the two-orbit pair for d = 2 (mod 8).
    The corner entry is odd in the d = 2 (mod 8) case, so these are plain
    symmetric integer matrices, not even lattices.
    """
    r = _gm_check_residue(d)
    if r == 0:
        return (((2, 0, 0), (0, 2, 0), (0, 0, d // 4)),)
    if r == 4:
        return (((2, 0, 1), (0, 2, 1), (1, 1, (d + 4) // 4)),)
    corner = (d + 2) // 4
    k_prime = ((2, 0, 1), (0, 2, 0), (1, 0, corner))
    k_double = ((2, 0, 0), (0, 2, 1), (0, 1, corner))
    return (k_prime, k_double)


def _witness(gram: Gram, vec: tuple[Fraction, ...], d: int) -> LabellingWitness:
    gv = [sum(row[j] * vec[j] for j in range(3)) for row in gram]
    pair_h1 = gv[0]
    pair_h2 = gv[1]
    half_norm = sum(vec[i] * gv[i] for i in range(3)) / 2
    checks = {
        "<v,h1>": pair_h1,
        "<v,h2>": pair_h2,
        "half_norm": half_norm,
        "half_norm_equals_d_over_8": half_norm == Fraction(d, 8),
        "orthogonal": pair_h1 == 0 and pair_h2 == 0,
    }
    if not (checks["orthogonal"] and checks["half_norm_equals_d_over_8"]):
        raise AssertionError(f"labelling identities failed for d={d}: {checks}")
    return LabellingWitness(gram=gram, residue_vector=vec, checks=checks)


def gm_residue_vector(d: int) -> tuple[LabellingWitness, ...]:
    """Residue vectors in (h1, h2, zeta)-coordinates, with verified identities.

    The d = 2 (mod 8) case produces one vector per labelling orbit, each
    checked inside its own Gram matrix.
    """
    r = _gm_check_residue(d)
    grams = gm_labelling_gram(d)
    half = Fraction(1, 2)
    one = Fraction(1)
    zero = Fraction(0)
    if r == 0:
        return (_witness(grams[0], (zero, zero, one), d),)
    if r == 4:
        return (_witness(grams[0], (-half, -half, one), d),)
    return (
        _witness(grams[0], (-half, zero, one), d),
        _witness(grams[1], (zero, -half, one), d),
    )


def gm_heegner_index(d: int) -> tuple[HeegnerIndex, ...]:
    """Heegner indices for the Gushel-Mukai locus of discriminant d."""
    r = _gm_check_residue(d)
    n = Fraction(d, 8)
    if r == 0:
        gammas = ("0",)
    elif r == 2:
        gammas = ("e*", "f*")
    else:
        gammas = ("e*+f*",)
    return tuple(HeegnerIndex(n=n, gamma=g, lattice_tag="Lambda_GM") for g in gammas)


def hk_heegner_index(n: int, delta: int, d: int) -> HKIndexFamily:
    """Heegner-divisor bound for the hyperkaehler locus of discriminant d.

    The index is d/(2N) with N the discriminant of the primitive cohomology
    lattice: N = 4n for split polarization (delta 1) and N = n for delta 2.
    gamma ranges over the whole discriminant group.
    """
    n, delta, d = int(n), int(delta), int(d)
    if delta not in (1, 2):
        raise ValueError(f"delta must be 1 or 2, got {delta}")
    if n <= 0:
        raise ValueError(f"n must be positive, got {n}")
    if delta == 2 and n % 4 != 3:
        raise ValueError(f"delta=2 requires n = 3 (mod 4), got n = {n}")
    if d <= 0:
        raise ValueError(f"d must be positive, got {d}")
    if d % 2 != 0:
        raise ValueError(f"d must be even so the index d/(2N) lies in (1/N)Z, got {d}")
    big_n = 4 * n if delta == 1 else n
    return HKIndexFamily(
        index=Fraction(d, 2 * big_n),
        n=n,
        delta=delta,
        d=d,
        disc=big_n,
        norm_vv=Fraction(d, big_n),
        lattice_tag=f"Lambda_HK_prim({n},{delta})",
    )


def hilb_square_route(g: int, n: int) -> HilbertSquareRoute:
    """Recast genus g through the Hilbert square when d/2 - n is a square."""
    g, n = int(g), int(n)
    if g < 2:
        raise ValueError(f"g must be at least 2, got {g}")
    if n <= 0:
        raise ValueError(f"n must be positive, got {n}")
    d = 2 * g - 2
    diff = d // 2 - n
    if diff < 0:
        raise ValueError(f"d/2 - n = {diff} is negative for g={g}, n={n}")
    m = isqrt(diff)
    if m * m != diff:
        raise ValueError(f"d/2 - n = {diff} is not a perfect square for g={g}, n={n}")
    family = hk_heegner_index(n, 1, d)
    return HilbertSquareRoute(g=g, n=n, m=m, target=(2 * n, 1), heegner_index=family.index)


def moment_matrix(vectors: Sequence[DualVector]) -> MomentMatrix:
    """Half-Gram matrix of a tuple of vectors from one ambient lattice."""
    vectors = list(vectors)
    if vectors:
        ambient = vectors[0].lattice
        if any(v.lattice != ambient for v in vectors[1:]):
            raise ValueError("moment matrix requires vectors from a single ambient lattice")
    entries = tuple(
        tuple(vi.pairing(vj) / 2 for vj in vectors) for vi in vectors
    )
    return MomentMatrix(entries=entries, rank=rational_rank(entries) if vectors else 0)


def embed_k3_lattice(d: int) -> EmbeddingWitness:
    """Primitive embedding of the degree-d K3 lattice, with moment identity.

    The two E8 summands and both hyperbolic planes map identically onto
    summands of the unimodular target; the rank-one part maps onto the
    lexicographically least primitive vector of norm d in the spare E8
    block.  The complement basis is an integer kernel basis of rank 7 and
    the determinant of its half-Gram matrix is checked against d / 2^7.
    """
    d = int(d)
    if d <= 0 or d % 2 != 0:
        raise ValueError(f"d must be a positive even integer for an even lattice, got {d}")
    sharp = build_named_lattice("Lambda_sharp")
    e8 = build_named_lattice("E8")
    w = first_primitive_vector(e8, d)
    if w is None:
        raise ValueError(
            f"no primitive vector of norm {d} in E8 (searched the full norm-{d} ellipsoid)"
        )
    image: list[tuple[int, ...]] = []
    for i in range(16):
        image.append(tuple(int(j == i) for j in range(28)))
    for i in range(24, 28):
        image.append(tuple(int(j == i) for j in range(28)))
    image.append(tuple(w[i - 16] if 16 <= i < 24 else 0 for i in range(28)))
    primitive = all(x == 1 for x in elementary_divisors([list(v) for v in image]))
    complement, basis = orthogonal_complement(sharp, image)
    if len(basis) != 7:
        raise AssertionError(f"complement rank {len(basis)} != 7 for d={d}")
    duals = [DualVector(sharp, tuple(Fraction(x) for x in b)) for b in basis]
    moment = moment_matrix(duals)
    return EmbeddingWitness(
        d=d,
        image_basis=tuple(image),
        complement_basis=tuple(tuple(b) for b in basis),
        complement_gram=complement.gram,
        moment=moment,
        det_lhs=moment.det,
        det_rhs=Fraction(d, 2**7),
        image_primitive=primitive,
    )
