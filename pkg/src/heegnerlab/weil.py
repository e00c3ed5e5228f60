"""Weil representation matrices on the group algebra of a discriminant form.

For a discriminant group D with quadratic form q and pairing b, and an even
positive-inertia count m, the generator matrices are

    T = diag(e^{2 pi i q(gamma)}),
    S[delta, gamma] = (sqrt i)^{2-m} / sqrt(|D|) * e^{-2 pi i b(gamma, delta)},

with sqrt(i) = e^{i pi / 4}.  The phases come from exact rational q and b
values, so the only floating point error is in the final complex exponential.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .discriminant import DiscriminantGroup

DEFAULT_DIM_CAP = 2000


@dataclass(frozen=True)
class RelationCheck:
    relation: str
    max_deviation: float
    passed: bool

    def to_jsonable(self) -> dict:
        return {
            "relation": self.relation,
            "max_deviation": self.max_deviation,
            "pass": self.passed,
        }


@dataclass
class WeilRepresentation:
    """Generator matrices of the representation, plus level and weight.

    Values are immutable after construction; nothing here mutates them.
    """

    dim: int
    m: int
    s_matrix: np.ndarray
    t_matrix: np.ndarray
    level: int
    weight: int
    elements: tuple[tuple[int, ...], ...]

    def to_jsonable(self) -> dict:
        return {
            "dim": self.dim,
            "m": self.m,
            "level": self.level,
            "weight": self.weight,
            "s_matrix": _matrix_jsonable(self.s_matrix),
            "t_matrix": _matrix_jsonable(self.t_matrix),
        }


def _matrix_jsonable(mat: np.ndarray) -> list[list[list[float]]]:
    return [[[float(z.real), float(z.imag)] for z in row] for row in mat]


def weight_of(m: int) -> int:
    """Modular weight 1 + m/2 attached to positive-inertia count m."""
    if m % 2 != 0:
        raise ValueError(f"m must be even, got {m}")
    if m < 2:
        raise ValueError(f"m must be at least 2, got {m}")
    return 1 + m // 2


def build_weil_rep(
    group: DiscriminantGroup, m: int, dim_cap: int = DEFAULT_DIM_CAP
) -> WeilRepresentation:
    """Construct the generator matrices for a discriminant group.

    The basis of the group algebra is the canonical element ordering of the
    group (lexicographic residue tuples), which fixes the matrix indexing.
    """
    if m % 2 != 0 or m <= 0:
        raise ValueError(f"m must be an even positive integer, got {m}")
    dim = group.order
    if dim > dim_cap:
        raise ValueError(f"discriminant group order {dim} exceeds the dimension cap {dim_cap}")
    elements = tuple(group.elements())
    t = np.zeros((dim, dim), dtype=complex)
    for k, elem in enumerate(elements):
        t[k, k] = cmath.exp(2j * cmath.pi * float(group.q(elem)))
    prefactor = cmath.exp(1j * cmath.pi * (2 - m) / 4) / math.sqrt(dim)
    s = np.zeros((dim, dim), dtype=complex)
    for col, gamma in enumerate(elements):
        for row, delta in enumerate(elements):
            s[row, col] = prefactor * cmath.exp(-2j * cmath.pi * float(group.b(gamma, delta)))
    return WeilRepresentation(
        dim=dim,
        m=m,
        s_matrix=s,
        t_matrix=t,
        level=group.level,
        weight=weight_of(m),
        elements=elements,
    )


def verify_sl2_relations(rep: WeilRepresentation, tol: float = 1e-9) -> list[RelationCheck]:
    """Check the defining relations to an entrywise tolerance.

    Failures are reported, not raised: each entry carries the relation name,
    the maximum absolute deviation, and a pass flag.
    """
    if tol <= 0:
        raise ValueError("tolerance must be positive")
    s = rep.s_matrix
    t = rep.t_matrix
    eye = np.eye(rep.dim)
    s2 = s @ s
    checks = []

    def record(name: str, deviation: np.ndarray) -> None:
        dev = float(np.abs(deviation).max()) if deviation.size else 0.0
        checks.append(RelationCheck(relation=name, max_deviation=dev, passed=dev <= tol))

    record("S^4 = Id", np.linalg.matrix_power(s, 4) - eye)
    record("(S*T)^3 = S^2", np.linalg.matrix_power(s @ t, 3) - s2)
    record(f"T^{rep.level} = Id", np.linalg.matrix_power(t, rep.level) - eye)
    record("S unitary", s @ s.conj().T - eye)
    return checks


def t_matrix_order(rep: WeilRepresentation, tol: float = 1e-9, max_order: int | None = None) -> int:
    """Smallest k with T^k = Id to tolerance (the matrix order of T)."""
    bound = max_order if max_order is not None else rep.level
    diag = np.diagonal(rep.t_matrix).copy()
    power = np.ones_like(diag)
    for k in range(1, bound + 1):
        power = power * diag
        if float(np.abs(power - 1.0).max()) <= tol:
            return k
    raise ValueError(f"T has no order up to {bound} at tolerance {tol}")


def relations_pass(checks: Sequence[RelationCheck]) -> bool:
    return all(c.passed for c in checks)
