"""Generalized mean inequality for nonnegative matrices, in exact rationals.

For a nonnegative matrix with row sums a_i*, column sums a_*j and total e,
the weighted sum phi = sum a_ij (a_i* - rho)(a_*j - gamma) dominates
e (e/v - rho)(e/w - gamma) whenever every row sum is at least 2*rho and
every column sum at least 2*gamma, with equality exactly for constant
margins.  The doubled-threshold hypothesis is sharp; the single-threshold
regime admits counterexamples, which this module can hunt for.

All comparisons are exact Fraction arithmetic: the interesting cases live
near the boundary, where float ties would be untrustworthy.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .graphcore import BipartiteGraph


__all__ = [
    "IneqVerdict",
    "NonnegMatrix",
    "check",
    "find_weak_hypothesis_violation",
    "phi",
    "psi",
]


def _to_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise ValueError(f"matrix entry {value!r} is not a rational")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise ValueError(f"matrix entry {value!r} is not a rational")


class NonnegMatrix:
    """Rectangular matrix of nonnegative rationals with cached margins."""

    __slots__ = ("entries", "v", "w", "row_sums", "col_sums", "total")

    def __init__(self, rows) -> None:
        parsed = [tuple(_to_fraction(x) for x in row) for row in rows]
        if not parsed or not parsed[0]:
            raise ValueError("matrix must have at least one row and one column")
        width = len(parsed[0])
        if any(len(row) != width for row in parsed):
            raise ValueError("matrix rows must all have the same length")
        for row in parsed:
            for x in row:
                if x < 0:
                    raise ValueError(f"matrix entry {x} is negative")
        self.entries = tuple(parsed)
        self.v = len(parsed)
        self.w = width
        self.row_sums = tuple(sum(row, Fraction(0)) for row in parsed)
        self.col_sums = tuple(
            sum((row[j] for row in parsed), Fraction(0)) for j in range(width)
        )
        self.total = sum(self.row_sums, Fraction(0))

    @classmethod
    def from_graph(cls, g: BipartiteGraph) -> "NonnegMatrix":
        """0/1 incidence matrix of a bipartite graph (rows = class V)."""
        if g.v == 0 or g.w == 0:
            raise ValueError("incidence matrix needs both classes nonempty")
        rows = [[0] * g.w for _ in range(g.v)]
        for i, j in g.edges:
            rows[i][j] = 1
        return cls(rows)

    def __repr__(self) -> str:
        return f"NonnegMatrix(v={self.v}, w={self.w}, total={self.total})"


def phi(m: NonnegMatrix, rho, gamma) -> Fraction:
    """sum_ij a_ij (a_i* - rho)(a_*j - gamma), exact."""
    rho = _to_fraction(rho)
    gamma = _to_fraction(gamma)
    total = Fraction(0)
    for i, row in enumerate(m.entries):
        ri = m.row_sums[i] - rho
        for j, a in enumerate(row):
            if a:
                total += a * ri * (m.col_sums[j] - gamma)
    return total


def psi(m: NonnegMatrix) -> Fraction:
    """sum_ij a_ij a_i* a_*j, exact; at least e^3 / (v*w) for any
    nonnegative matrix."""
    total = Fraction(0)
    for i, row in enumerate(m.entries):
        ri = m.row_sums[i]
        for j, a in enumerate(row):
            if a:
                total += a * ri * m.col_sums[j]
    return total


@dataclass(frozen=True)
class IneqVerdict:
    """Exact verdict of the inequality at given (rho, gamma).

    ``hypotheses_hold`` records the doubled thresholds (every row sum
    >= 2*rho, every column sum >= 2*gamma, non-strict so the constant-
    margin equality case is not excluded); it implies ``satisfied``.
    """

    phi: Fraction
    rhs: Fraction
    hypotheses_hold: bool
    satisfied: bool
    equality: bool


def check(m: NonnegMatrix, rho, gamma) -> IneqVerdict:
    """Evaluate phi against e(e/v - rho)(e/w - gamma), all exact.

    Weak hypotheses are not an error: the verdict simply reports
    ``hypotheses_hold = False`` and whatever the comparison says.
    """
    rho = _to_fraction(rho)
    gamma = _to_fraction(gamma)
    if rho < 0 or gamma < 0:
        raise ValueError("rho and gamma must be nonnegative")
    value = phi(m, rho, gamma)
    e = m.total
    rhs = e * (e / m.v - rho) * (e / m.w - gamma)
    hyp = all(s >= 2 * rho for s in m.row_sums) and all(
        s >= 2 * gamma for s in m.col_sums
    )
    return IneqVerdict(
        phi=value,
        rhs=rhs,
        hypotheses_hold=hyp,
        satisfied=value >= rhs,
        equality=value == rhs,
    )


def find_weak_hypothesis_violation(
    m: NonnegMatrix, denominator: int = 4
) -> tuple[Fraction, Fraction] | None:
    """Search a rational grid for (rho, gamma) where the single-threshold
    hypotheses hold (every row sum >= rho, every column sum >= gamma) yet
    phi < e(e/v - rho)(e/w - gamma).

    Returns the first violating pair in grid order, or None.  This is the
    certificate that the doubled thresholds cannot be weakened to single
    ones.
    """
    if denominator < 1:
        raise ValueError("denominator must be >= 1")
    rho_max = min(m.row_sums)
    gamma_max = min(m.col_sums)
    for num_r in range(int(rho_max * denominator) + 1):
        rho = Fraction(num_r, denominator)
        for num_g in range(int(gamma_max * denominator) + 1):
            gamma = Fraction(num_g, denominator)
            verdict = check(m, rho, gamma)
            if not verdict.satisfied:
                return rho, gamma
    return None
