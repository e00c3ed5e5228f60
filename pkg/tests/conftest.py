"""Shared helpers: an independent box-scan oracle and random lattice factories.

The box oracle is deliberately a different algorithm from the production
enumerator: it scans an integer box sized from the inverse Gram diagonal and
filters by exact norm, with no tree pruning involved.
"""

from __future__ import annotations

import math
import random
import sys
from fractions import Fraction
from pathlib import Path

import numpy as np
import pytest

SRC = Path(__file__).resolve().parent.parent / "src"
if str(SRC) not in sys.path:
    sys.path.insert(0, str(SRC))

from heegnerlab.intlinalg import bareiss_determinant, invert_rational
from heegnerlab.lattices import DualVector, IntegerLattice, make_lattice


def box_norm_table(lattice: IntegerLattice, max_norm, coset: DualVector | None = None):
    """Map norm -> sorted coordinate tuples for all vectors of norm <= max_norm.

    Scans the full coordinate box |x_i + s_i| <= sqrt(max_norm * inv_ii) + 1
    and evaluates every norm exactly in scaled integers.
    """
    n = lattice.rank
    shift = coset.coords if coset is not None else tuple(Fraction(0) for _ in range(n))
    den = 1
    for s in shift:
        den = den * s.denominator // math.gcd(den, s.denominator)
    inv = invert_rational(lattice.gram)
    cap = Fraction(max_norm)
    axes = []
    for i in range(n):
        r = math.sqrt(float(cap * inv[i][i])) + 1e-9
        lo = math.floor(-float(shift[i]) - r) - 1
        hi = math.ceil(-float(shift[i]) + r) + 1
        axes.append(np.arange(lo, hi + 1, dtype=np.int64))
    mesh = np.meshgrid(*axes, indexing="ij")
    X = np.stack([m.ravel() for m in mesh], axis=1)
    S_num = np.array([int(s * den) for s in shift], dtype=np.int64)
    W = X * den + S_num
    G = np.array(lattice.gram, dtype=np.int64)
    norms_scaled = np.einsum("ij,jk,ik->i", W, G, W)
    keep = norms_scaled <= int(cap * den * den)
    table: dict[Fraction, list[tuple[Fraction, ...]]] = {}
    for row, ns in zip(W[keep], norms_scaled[keep]):
        norm = Fraction(int(ns), den * den)
        vec = tuple(Fraction(int(w), den) for w in row)
        table.setdefault(norm, []).append(vec)
    for norm in table:
        table[norm].sort()
    return table


def random_even_gram(rng: random.Random, rank: int, max_abs_det: int | None = None):
    """Random nondegenerate even Gram matrix (any signature)."""
    while True:
        m = [[0] * rank for _ in range(rank)]
        for i in range(rank):
            m[i][i] = rng.choice((-6, -4, -2, 2, 4, 6))
            for j in range(i):
                m[i][j] = m[j][i] = rng.randint(-2, 2)
        det = bareiss_determinant(m)
        if det == 0:
            continue
        if max_abs_det is not None and abs(det) > max_abs_det:
            continue
        return make_lattice(m)


def random_positive_definite_lattice(rng: random.Random, rank: int) -> IntegerLattice:
    """Random even positive definite lattice: twice a squared integer matrix."""
    while True:
        b = [[rng.randint(-2, 2) for _ in range(rank)] for _ in range(rank)]
        if bareiss_determinant(b) == 0:
            continue
        gram = [[2 * sum(b[k][i] * b[k][j] for k in range(rank)) for j in range(rank)] for i in range(rank)]
        return make_lattice(gram)


@pytest.fixture
def rng():
    return random.Random(20260808)
