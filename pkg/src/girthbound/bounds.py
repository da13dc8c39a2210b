"""Exact evaluation and integer inversion of the girth-6/8 size bounds.

Everything is arbitrary-precision integer arithmetic except the balanced
approximation, which is documented floating point.  Bound certificates must
be exact, so no bound value ever passes through a float.

Notation used throughout: a bipartite graph with classes of sizes v and w
and e edges.  The girth-6 quadratic is O(v, w, e) = e^2 - w*e - v*w*(v-1);
the girth-8 cubic is P(v, w, e) = e^3 - (v+w)*e^2 + 2*v*w*e - v^2*w^2.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt


__all__ = [
    "BoundReport",
    "CubicDiagnostics",
    "METHOD_ORDER",
    "balanced_approx",
    "balanced_approx_at_cube",
    "bound_report",
    "cubic_discriminant",
    "cubic_max_e",
    "eval_cubic",
    "eval_reiman",
    "girth6_coarse_bound",
    "girth8_coarse_bound",
    "growth_delta",
    "reiman_max_e",
    "unbalanced_cap",
]

# Fixed tie-break order for the binding bound in reports.
METHOD_ORDER = ("reiman", "cubic", "cap", "coarse")


def eval_reiman(v: int, w: int, e) -> int:
    """O(v, w, e) = e^2 - w*e - v*w*(v-1); nonpositive for girth >= 6."""
    return e * e - w * e - v * w * (v - 1)


def eval_cubic(v: int, w: int, e) -> int:
    """P(v, w, e) = e^3 - (v+w)*e^2 + 2*v*w*e - v^2*w^2; nonpositive for girth >= 8."""
    return e ** 3 - (v + w) * e ** 2 + 2 * v * w * e - v * v * w * w


def _require_positive(v: int, w: int) -> None:
    if v < 1 or w < 1:
        raise ValueError(f"class sizes must be >= 1, got v={v} w={w}")


def reiman_max_e(v: int, w: int) -> int:
    """Largest integer e with O nonpositive in both class orientations.

    The (min, max) orientation is binding: the positive root of
    X^2 - vX - vw(w-1) already makes O(v, w, .) nonnegative for v <= w, so
    only one quadratic needs inverting.  Closed form with isqrt, then an
    exact polynomial fix-up.
    """
    _require_positive(v, w)
    a, b = (v, w) if v <= w else (w, v)
    disc = b * b + 4 * a * b * (a - 1)
    e = (b + isqrt(disc)) // 2
    while eval_reiman(a, b, e + 1) <= 0:
        e += 1
    while e > 0 and eval_reiman(a, b, e) > 0:
        e -= 1
    return e


def cubic_max_e(v: int, w: int) -> int:
    """Largest integer e >= 0 with P(v, w, e) <= 0, by integer bisection.

    Valid bracket: P(v, w, 0) = -(vw)^2 <= 0 and P(v, w, vw + 1) > 0
    (P(v, w, vw) = (vw)^2 (v-1)(w-1) >= 0 and the polynomial has a single
    positive real root, so it is positive past vw).  Symmetric in (v, w).
    """
    _require_positive(v, w)
    lo, hi = 0, v * w + 1  # P(lo) <= 0 < P(hi)
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if eval_cubic(v, w, mid) <= 0:
            lo = mid
        else:
            hi = mid
    return lo


def unbalanced_cap(v: int, w: int) -> int | None:
    """a + floor(b^2/4) with (a, b) = (max, min), when a >= floor(b^2/4).

    Applies to graphs without 4- and 6-cycles; absent (None) outside the
    unbalanced regime.
    """
    a, b = max(v, w), min(v, w)
    quarter = b * b // 4
    if a >= quarter:
        return a + quarter
    return None


def _girth6_coarse_oriented(v: int, w: int) -> int:
    half = v * (v - 1) // 2
    if w <= half:
        return isqrt(2 * v * w * (v - 1))
    return half + w


def girth6_coarse_bound(v: int, w: int) -> int:
    """Coarse size bound for graphs without 4-cycles.

    Piecewise: floor(sqrt(2vw(v-1))) when w <= v(v-1)/2, else v(v-1)/2 + w.
    The statement is orientation-dependent, so both role assignments are
    evaluated and the smaller value returned.
    """
    _require_positive(v, w)
    return min(_girth6_coarse_oriented(v, w), _girth6_coarse_oriented(w, v))


def _icbrt(n: int) -> int:
    """Largest integer m with m^3 <= n (n >= 0), by integer bisection."""
    if n < 0:
        raise ValueError("negative argument")
    lo, hi = 0, 1 << (n.bit_length() // 3 + 1)  # lo^3 <= n < hi^3
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if mid ** 3 <= n:
            lo = mid
        else:
            hi = mid
    return lo


def girth8_coarse_bound(v: int, w: int) -> int:
    """Coarse size bound for graphs without 4- and 6-cycles.

    floor(2^(1/3) (vw)^(2/3)) when max(v, w) <= floor(min(v, w)^2 / 4),
    else floor(min^2/4) + max.  The cube-root branch is computed exactly as
    the largest m with m^3 <= 2 (vw)^2.  The handful of small pairs where
    the cube-root factorization flips sign all fail the branch condition,
    so they take the second alternative as required.
    """
    _require_positive(v, w)
    a, b = max(v, w), min(v, w)
    quarter = b * b // 4
    if a <= quarter:
        return _icbrt(2 * (v * w) ** 2)
    return quarter + a


def balanced_approx(v: int) -> float:
    """v^(4/3) + (2/3)v - (2/9)v^(2/3) - (20/81)v^(1/3), in floating point.

    Strict upper bound for the size of balanced girth-8 graphs.  Relative
    error of the float evaluation is below 1e-12.
    """
    if v < 1:
        raise ValueError(f"class size must be >= 1, got v={v}")
    c = v ** (1.0 / 3.0)
    return c ** 4 + (2.0 / 3.0) * v - (2.0 / 9.0) * c * c - (20.0 / 81.0) * c


def balanced_approx_at_cube(k: int) -> Fraction:
    """Exact rational value of the balanced approximation at v = k^3."""
    if k < 1:
        raise ValueError(f"cube root must be >= 1, got k={k}")
    return (
        Fraction(k ** 4)
        + Fraction(2, 3) * k ** 3
        - Fraction(2, 9) * k ** 2
        - Fraction(20, 81) * k
    )


@dataclass(frozen=True)
class CubicDiagnostics:
    """Symmetric-function view of the cubic: s = v+w, p = vw, and the
    discriminant certificate D = 27p^2 + 4s^3 - 36sp - 4s^2 + 32p whose
    positivity gives the cubic exactly one positive root in e."""

    s: int
    p: int
    D: int


def discriminant_from_sp(s: int, p: int) -> int:
    return 27 * p * p + 4 * s ** 3 - 36 * s * p - 4 * s * s + 32 * p


def cubic_discriminant(v: int, w: int) -> CubicDiagnostics:
    _require_positive(v, w)
    s, p = v + w, v * w
    return CubicDiagnostics(s=s, p=p, D=discriminant_from_sp(s, p))


def growth_delta(v: int, w: int, e: int) -> int:
    """P(v+1, w, e+1) - P(v, w, e) in closed form:
    2e^2 + (1-2v)e + (w - w^2)(2v + 1) - v."""
    return 2 * e * e + (1 - 2 * v) * e + (w - w * w) * (2 * v + 1) - v


@dataclass(frozen=True)
class BoundReport:
    """All applicable bound values for a (v, w, girth) query.

    ``values`` maps method name to its integer bound; ``cap`` may be
    absent.  ``binding`` names the minimum, ties broken by METHOD_ORDER.
    """

    v: int
    w: int
    girth_target: int
    values: dict[str, int]
    binding: str

    @property
    def binding_value(self) -> int:
        return self.values[self.binding]


def bound_report(v: int, w: int, girth_target: int) -> BoundReport:
    """Evaluate every bound applicable at the requested girth floor.

    Girth 6: reiman and the coarse 4-cycle-free bound.  Girth 8 adds the
    cubic, the unbalanced cap when defined, and uses the 4/6-cycle-free
    coarse bound; reiman stays applicable since girth 8 implies girth 6.
    """
    _require_positive(v, w)
    if girth_target not in (6, 8):
        raise ValueError(f"girth target must be 6 or 8, got {girth_target}")
    values: dict[str, int] = {"reiman": reiman_max_e(v, w)}
    if girth_target == 6:
        values["coarse"] = girth6_coarse_bound(v, w)
    else:
        values["cubic"] = cubic_max_e(v, w)
        cap = unbalanced_cap(v, w)
        if cap is not None:
            values["cap"] = cap
        values["coarse"] = girth8_coarse_bound(v, w)
    binding = min(
        (name for name in METHOD_ORDER if name in values),
        key=lambda name: (values[name], METHOD_ORDER.index(name)),
    )
    return BoundReport(v=v, w=w, girth_target=girth_target, values=values, binding=binding)
