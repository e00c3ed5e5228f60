"""Admissibility tests, growth inequalities, and irrationality bound certificates.

The per-genus certificate collects every applicable route: the cubic and
Gushel-Mukai labelling routes (exponent 10), one Hilbert-square route per
square witness (exponent 10, constant depending on the witness), and the
uniform moment-cycle route (exponent 14, multiplier 2^omega(g-1)).
Multiplicative constants are carried symbolically; the toolkit never invents
a numeric value for them.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import numpy as np

from .arith import (
    divisor_count_sieve,
    divisor_sigma_sieve,
    factorize,
    omega,
    omega_sieve,
    squarefree_sieve,
)
from .cycles import (
    HeegnerIndex,
    cubic_heegner_index,
    embed_k3_lattice,
    gm_heegner_index,
    hilb_square_route,
)

THEOREM_RANGE_MIN_D = 8  # admissible routes need d = 2g - 2 > 6


@dataclass(frozen=True)
class CaseResult:
    ok: bool
    reason: str | None
    in_theorem_range: bool

    def __bool__(self) -> bool:
        return self.ok

    def to_jsonable(self) -> dict:
        return {"pass": self.ok, "reason": self.reason, "in_theorem_range": self.in_theorem_range}


def _check_even(d: int) -> int:
    d = int(d)
    if d % 2 != 0:
        raise ValueError(f"d must be even, got {d}")
    return d


def case_a(d: int) -> CaseResult:
    """Cubic-fourfold admissibility: residue 0 or 2 mod 6; no factor 4, 9,
    or odd prime p = 2 (mod 3).  The first violated clause is named."""
    d = _check_even(d)
    in_range = d > 6
    r = d % 6
    if r not in (0, 2):
        return CaseResult(False, f"d = {r} (mod 6) is not 0 or 2", in_range)
    if d % 4 == 0:
        return CaseResult(False, "divisible by 4", in_range)
    if d % 9 == 0:
        return CaseResult(False, "divisible by 9", in_range)
    for p in sorted(factorize(abs(d))):
        if p != 2 and p % 3 == 2:
            return CaseResult(False, f"divisible by prime {p} = 2 (mod 3)", in_range)
    return CaseResult(True, None, in_range)


def case_b(d: int) -> CaseResult:
    """Gushel-Mukai admissibility: residue 2 or 4 mod 8; no prime p = 3 (mod 4)."""
    d = _check_even(d)
    in_range = d > 6
    r = d % 8
    if r not in (2, 4):
        return CaseResult(False, f"d = {r} (mod 8) is not 2 or 4", in_range)
    for p in sorted(factorize(abs(d))):
        if p % 4 == 3:
            return CaseResult(False, f"divisible by prime {p} = 3 (mod 4)", in_range)
    return CaseResult(True, None, in_range)


def case_c(d: int, n_max: int) -> list[tuple[int, int]]:
    """Square witnesses: all n in [1, min(n_max, d/2)] with d/2 - n a square."""
    d = _check_even(d)
    if d < 2:
        raise ValueError(f"d must be at least 2, got {d}")
    n_max = int(n_max)
    if n_max < 1:
        raise ValueError(f"n_max must be positive, got {n_max}")
    out = []
    m = 0
    while True:
        n = d // 2 - m * m
        if n < 1:
            break
        if n <= n_max:
            out.append((n, m))
        m += 1
    return out


def cubic_map_degree(d: int) -> int:
    """Degree of the moduli correspondence in the cubic route: 2 for d = 0
    (mod 6), 1 for d = 2 (mod 6).  Requires case A admissibility."""
    result = case_a(d)
    if not result.ok:
        raise ValueError(f"d = {d} is inadmissible for the cubic route: {result.reason}")
    return 2 if d % 6 == 0 else 1


def fm_partner_count(g: int) -> int:
    """Fourier-Mukai partner count 2^(omega(g-1) - 1), clamped to 1.

    The printed exponent is negative at omega(g-1) = 0 (g = 2); a surface is
    always its own partner, so the exponent is clamped at zero.
    """
    g = int(g)
    if g < 2:
        raise ValueError(f"g must be at least 2, got {g}")
    return 2 ** max(omega(g - 1) - 1, 0)


def zeta_partial_sum(s: int, terms: int) -> Fraction:
    """Lower bound for zeta(s): the partial sum of 1/j^s up to `terms`."""
    return sum((Fraction(1, j**s) for j in range(1, terms + 1)), Fraction(0))


def zeta_tail_bound(s: int, terms: int) -> Fraction:
    """Integral-test bound for the tail sum beyond `terms`."""
    return Fraction(1, (s - 1) * terms ** (s - 1))


@dataclass(frozen=True)
class SandwichReport:
    k: int
    m_lo: int
    m_hi: int
    zeta_terms: int
    zeta_lower: float
    zeta_upper: float
    failures: tuple[int, ...]

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_jsonable(self) -> dict:
        return {
            "k": self.k,
            "m_range": [self.m_lo, self.m_hi],
            "zeta_terms": self.zeta_terms,
            "zeta_lower": self.zeta_lower,
            "zeta_upper": self.zeta_upper,
            "failures": list(self.failures),
            "pass": self.passed,
        }

    def rows(self) -> list[tuple]:
        return [(f"k={self.k} m=[{self.m_lo},{self.m_hi}]", "sandwich", self.passed)]


def sandwich_check(k: int, m_range: tuple[int, int]) -> SandwichReport:
    """Verify m^(k-1) <= sigma_(k-1)(m) <= zeta(k-1) * m^(k-1) on a range.

    The upper comparison is conservative: it uses an exact rational partial
    sum of zeta(k-1), which is a lower bound for the true value, so a pass
    here implies the true inequality.  The partial sum is lengthened until
    it decides every m (always possible, because the divisor sum of m is
    dominated by the partial sum with m terms).
    """
    k = int(k)
    if k < 3:
        raise ValueError(f"weight must be at least 3, got {k}")
    m_lo, m_hi = (int(x) for x in m_range)
    if not (1 <= m_lo <= m_hi):
        raise ValueError(f"bad range [{m_lo}, {m_hi}]")
    s = k - 1
    sigma = divisor_sigma_sieve(m_hi, s)
    failures = []
    terms = 64
    zlo = zeta_partial_sum(s, terms)
    for m in range(m_lo, m_hi + 1):
        mk = m**s
        if mk > sigma[m]:
            failures.append(m)
            continue
        while sigma[m] * zlo.denominator > zlo.numerator * mk and terms < m:
            terms = min(2 * terms, m)
            zlo = zeta_partial_sum(s, terms)
        if sigma[m] * zlo.denominator > zlo.numerator * mk:
            failures.append(m)
    zhi = zlo + zeta_tail_bound(s, terms)
    return SandwichReport(
        k=k,
        m_lo=m_lo,
        m_hi=m_hi,
        zeta_terms=terms,
        zeta_lower=float(zlo),
        zeta_upper=float(zhi),
        failures=tuple(failures),
    )


@dataclass(frozen=True)
class DivisorBoundReport:
    lo: int
    hi: int
    failures: tuple[int, ...]
    squarefree_equality_checked_to: int
    squarefree_equality_holds: bool

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_jsonable(self) -> dict:
        return {
            "range": [self.lo, self.hi],
            "failures": list(self.failures),
            "pass": self.passed,
            "squarefree_equality_checked_to": self.squarefree_equality_checked_to,
            "squarefree_equality_holds": self.squarefree_equality_holds,
        }


def divisor_bound_check(n_range: tuple[int, int], squarefree_limit: int = 10**4) -> DivisorBoundReport:
    """Verify 2^omega(n) <= d(n) on a range, with squarefree equality."""
    lo, hi = (int(x) for x in n_range)
    if not (1 <= lo <= hi):
        raise ValueError(f"bad range [{lo}, {hi}]")
    om = omega_sieve(hi)
    dc = divisor_count_sieve(hi)
    vals = np.arange(hi + 1)
    mask = (vals >= lo)
    bad = vals[mask & ((1 << om.astype(np.int64)) > dc)]
    sq_hi = min(hi, squarefree_limit)
    sq = squarefree_sieve(sq_hi)
    eq = (1 << om[: sq_hi + 1].astype(np.int64)) == dc[: sq_hi + 1]
    sq_holds = bool(np.all(eq[1:] == sq[1:]))
    return DivisorBoundReport(
        lo=lo,
        hi=hi,
        failures=tuple(int(x) for x in bad),
        squarefree_equality_checked_to=sq_hi,
        squarefree_equality_holds=sq_holds,
    )


def heegner_irr_exponent(m: int) -> int:
    """Irrationality growth exponent m/2 for divisor-route families."""
    if m % 2 != 0:
        raise ValueError(f"m must be even, got {m}")
    if m < 4:
        raise ValueError(f"the divisor route requires m >= 4, got {m}")
    return m // 2


def kudla_irr_exponent(m: int) -> int:
    """Irrationality growth exponent 1 + m/2 for moment-cycle families.

    The codimension hypothesis 1 <= r <= m - 2 is tracked by the caller.
    """
    if m % 2 != 0:
        raise ValueError(f"m must be even, got {m}")
    if m < 4:
        raise ValueError(f"the cycle route requires m >= 4 so that some 1 <= r <= m-2 exists, got {m}")
    return 1 + m // 2


def growth_exponent_estimate(series: Sequence[tuple]) -> float:
    """Least-squares slope of log(value) against log(index), zeros ignored."""
    pts = [(float(i), float(v)) for i, v in series if float(v) != 0.0]
    if len(pts) < 8:
        raise ValueError(f"need at least 8 nonzero entries, got {len(pts)}")
    xs = np.log([p[0] for p in pts])
    ys = np.log([p[1] for p in pts])
    xbar = xs.mean()
    ybar = ys.mean()
    denom = float(((xs - xbar) ** 2).sum())
    if denom == 0.0:
        return 0.0
    return float(((xs - xbar) * (ys - ybar)).sum() / denom)


@dataclass(frozen=True)
class AdmissibilityReport:
    d: int
    case_a: CaseResult
    case_b: CaseResult
    case_c_witnesses: tuple[tuple[int, int], ...]

    def to_jsonable(self) -> dict:
        return {
            "d": self.d,
            "case_a": self.case_a.to_jsonable(),
            "case_b": self.case_b.to_jsonable(),
            "case_c_witnesses": [list(w) for w in self.case_c_witnesses],
        }

    def rows(self) -> list[tuple]:
        return [
            (self.d, "case_a", self.case_a.ok),
            (self.d, "case_b", self.case_b.ok),
            (self.d, "case_c_nonempty", bool(self.case_c_witnesses)),
        ]


def admissibility_report(d: int, n_max: int = 10) -> AdmissibilityReport:
    d = _check_even(d)
    return AdmissibilityReport(
        d=d,
        case_a=case_a(d),
        case_b=case_b(d),
        case_c_witnesses=tuple(case_c(d, n_max)) if d >= 2 else (),
    )


@dataclass(frozen=True)
class Route:
    route: str
    exponent: int
    multiplier: int
    constant: str
    indices: tuple
    source: str
    extras: dict = field(default_factory=dict)

    def to_jsonable(self) -> dict:
        doc = {
            "route": self.route,
            "exponent": self.exponent,
            "multiplier": self.multiplier,
            "constant": self.constant,
            "index": [i.to_jsonable() if hasattr(i, "to_jsonable") else str(i) for i in self.indices],
            "source": self.source,
        }
        doc.update(self.extras)
        return doc


@dataclass(frozen=True)
class BoundCertificate:
    g: int
    d: int
    routes: tuple[Route, ...]
    conventions: dict

    def to_jsonable(self) -> dict:
        return {
            "g": self.g,
            "d": self.d,
            "routes": [r.to_jsonable() for r in self.routes],
            "conventions": dict(self.conventions),
        }

    def route_names(self) -> list[str]:
        return [r.route for r in self.routes]


def irr_bound_certificate(g: int, n_max: int = 10) -> BoundCertificate:
    """Assemble every applicable bound route for genus g.

    Routes A, B, and C(n) carry exponent 10 and all require d = 2g - 2 > 6
    on top of their residue, divisibility, or square tests; each C(n)
    constant depends on its witness n.  The uniform route always applies,
    with exponent 14 and multiplier 2^omega(g-1), witnessed by the rank-7
    moment matrix with determinant d / 2^7.
    """
    g = int(g)
    if g < 2:
        raise ValueError(f"g must be at least 2, got {g}")
    if n_max < 1:
        raise ValueError(f"n_max must be positive, got {n_max}")
    d = 2 * g - 2
    routes: list[Route] = []
    result_a = case_a(d)
    if result_a.ok and result_a.in_theorem_range:
        routes.append(
            Route(
                route="A",
                exponent=10,
                multiplier=cubic_map_degree(d),
                constant="C",
                indices=(cubic_heegner_index(d),),
                source="cubic fourfold labelling route",
            )
        )
    result_b = case_b(d)
    if result_b.ok and result_b.in_theorem_range:
        routes.append(
            Route(
                route="B",
                exponent=10,
                multiplier=1,
                constant="C",
                indices=gm_heegner_index(d),
                source="Gushel-Mukai fourfold labelling route",
            )
        )
    for n, m in case_c(d, n_max) if d > 6 else []:
        hilb = hilb_square_route(g, n)
        routes.append(
            Route(
                route=f"C({n})",
                exponent=10,
                multiplier=1,
                constant=f"C_{n}",
                indices=(
                    HeegnerIndex(
                        n=hilb.heegner_index,
                        gamma="all",
                        lattice_tag=f"Lambda_HK_prim({n},1)",
                    ),
                ),
                source="Hilbert-square polarization route",
                extras={"m": m, "target": {"degree": 2 * n, "delta": 1}},
            )
        )
    witness = embed_k3_lattice(d)
    routes.append(
        Route(
            route="uniform",
            exponent=14,
            multiplier=2 ** omega(g - 1),
            constant="C",
            indices=(f"det(T) = {witness.det_lhs}",),
            source="rank-7 moment cycle in the unimodular (26,2) lattice",
            extras={
                "det_T": str(witness.det_lhs),
                "det_check_pass": witness.det_check_passed,
                "fm_partners": fm_partner_count(g),
            },
        )
    )
    return BoundCertificate(
        g=g,
        d=d,
        routes=tuple(routes),
        conventions={"fm_partner_exponent": "max(omega(g-1) - 1, 0)"},
    )
