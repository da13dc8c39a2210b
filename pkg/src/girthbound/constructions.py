"""Generators for the extremal graph families.

Covers the edge-subdivision expansion, grid incidence graphs, complete
bipartite graphs, the optimal unbalanced families for girth 6 and 8, and
two finite-geometry incidence graphs over prime fields: the projective
plane PG(2, q) (girth 6) and the symplectic generalized quadrangle W(q)
(girth 8).  Prime fields only; extension fields are a noted extension
point.

Every generator is deterministic, so outputs are reproducible
byte-for-byte.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product

from .graphcore import BipartiteGraph, Graph, from_edges


__all__ = [
    "CanonicalLine",
    "PrimeField",
    "ProjectivePoint",
    "complete_bipartite",
    "expand",
    "grid_incidence",
    "pg2_incidence",
    "projective_points",
    "unbalanced6",
    "unbalanced8",
    "wq_incidence",
]


def _is_prime(q: int) -> bool:
    if q < 2:
        return False
    d = 2
    while d * d <= q:
        if q % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class PrimeField:
    """Arithmetic mod a prime q on canonical representatives 0..q-1."""

    q: int

    def __post_init__(self) -> None:
        if not _is_prime(self.q):
            raise ValueError(f"{self.q} is not prime")

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.q

    def sub(self, a: int, b: int) -> int:
        return (a - b) % self.q

    def mul(self, a: int, b: int) -> int:
        return (a * b) % self.q

    def neg(self, a: int) -> int:
        return (-a) % self.q

    def inv(self, a: int) -> int:
        if a % self.q == 0:
            raise ZeroDivisionError("no inverse of 0")
        return pow(a, self.q - 2, self.q)

    def elements(self) -> range:
        return range(self.q)


@dataclass(frozen=True)
class ProjectivePoint:
    """Nonzero coordinate vector scaled so its first nonzero entry is 1.

    The normalization is canonical: projectively equal points have
    identical coordinate tuples.
    """

    coords: tuple[int, ...]

    @classmethod
    def normalize(cls, field: PrimeField, coords) -> "ProjectivePoint":
        vec = [c % field.q for c in coords]
        lead = next((c for c in vec if c != 0), None)
        if lead is None:
            raise ValueError("zero vector has no projective point")
        scale = field.inv(lead)
        return cls(tuple(field.mul(scale, c) for c in vec))


def projective_points(field: PrimeField, dim: int) -> list[ProjectivePoint]:
    """All points of PG(dim-1, q) in a fixed lexicographic order."""
    pts = []
    for lead in range(dim):
        tail_len = dim - lead - 1
        for tail in product(field.elements(), repeat=tail_len):
            pts.append(ProjectivePoint((0,) * lead + (1,) + tail))
    return pts


def _rref2(field: PrimeField, r1, r2) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Reduced row-echelon form of a 2-row matrix over F_q; requires rank 2."""
    rows = [[c % field.q for c in r1], [c % field.q for c in r2]]
    n = len(rows[0])
    rank = 0
    for col in range(n):
        pivot = next((r for r in range(rank, 2) if rows[r][col] != 0), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        scale = field.inv(rows[rank][col])
        rows[rank] = [field.mul(scale, c) for c in rows[rank]]
        for r in range(2):
            if r != rank and rows[r][col] != 0:
                factor = rows[r][col]
                rows[r] = [
                    field.sub(rows[r][c], field.mul(factor, rows[rank][c]))
                    for c in range(n)
                ]
        rank += 1
        if rank == 2:
            break
    if rank != 2:
        raise ValueError("rows do not span a 2-dimensional subspace")
    return tuple(rows[0]), tuple(rows[1])


@dataclass(frozen=True)
class CanonicalLine:
    """A 2-dimensional subspace keyed by its RREF basis, so set-equality
    of subspaces is plain coordinate equality."""

    basis: tuple[tuple[int, ...], tuple[int, ...]]

    @classmethod
    def through(cls, field: PrimeField, p1: ProjectivePoint, p2: ProjectivePoint) -> "CanonicalLine":
        return cls(_rref2(field, p1.coords, p2.coords))

    def points(self, field: PrimeField) -> list[ProjectivePoint]:
        r1, r2 = self.basis
        pts = [ProjectivePoint.normalize(field, r2)]
        for t in field.elements():
            combo = [field.add(a, field.mul(t, b)) for a, b in zip(r1, r2)]
            pts.append(ProjectivePoint.normalize(field, combo))
        return pts


def expand(g: Graph) -> BipartiteGraph:
    """Bipartite expansion: class V = vertices, class W = edges of g.

    Every W-vertex gets degree exactly 2 (its two endpoints), so the size
    doubles and so does the girth (the expansion is the edge subdivision).
    """
    pairs = []
    for k, (a, b) in enumerate(g.edges):
        pairs.append((a, k))
        pairs.append((b, k))
    return from_edges(g.n, g.e, pairs)


def grid_incidence(t: int) -> BipartiteGraph:
    """Incidence graph of a (t+1) x (t+1) grid of points with its t+1
    horizontal and t+1 vertical lines.

    v = (t+1)^2, w = 2(t+1), e = 2(t+1)^2; girth 8 for t >= 1.  These are
    the generalized-quadrangle parameters with s = 1, and the cubic bound
    is met with equality.
    """
    if t < 0:
        raise ValueError(f"grid parameter must be >= 0, got {t}")
    side = t + 1
    pairs = []
    for r in range(side):
        for c in range(side):
            point = r * side + c
            pairs.append((point, r))          # horizontal line r
            pairs.append((point, side + c))   # vertical line c
    return from_edges(side * side, 2 * side, pairs)


def complete_bipartite(a: int, b: int) -> BipartiteGraph:
    """K_{a,b} with all a*b edges."""
    return from_edges(a, b, [(i, j) for i in range(a) for j in range(b)])


def pg2_incidence(q: int) -> BipartiteGraph:
    """Point-line incidence graph of the projective plane PG(2, q).

    Points and lines are both the canonical points of PG(2, q) (lines via
    duality); incidence is a vanishing dot product.  v = w = q^2 + q + 1,
    all degrees q + 1, girth 6, and the girth-6 quadratic bound is met
    with equality.  Exercised for prime q up to 13.
    """
    field = PrimeField(q)
    pts = projective_points(field, 3)
    n = len(pts)
    pairs = []
    for j, line in enumerate(pts):
        lc = line.coords
        for i, pt in enumerate(pts):
            pc = pt.coords
            if (pc[0] * lc[0] + pc[1] * lc[1] + pc[2] * lc[2]) % q == 0:
                pairs.append((i, j))
    return from_edges(n, n, pairs)


def _symplectic(field: PrimeField, x, y) -> int:
    # Standard nondegenerate alternating form on F_q^4.
    return (x[0] * y[1] - x[1] * y[0] + x[2] * y[3] - x[3] * y[2]) % field.q


def wq_incidence(q: int) -> BipartiteGraph:
    """Incidence graph of the symplectic generalized quadrangle W(q).

    Points are all of PG(3, q); lines are the totally isotropic
    2-subspaces of the alternating form x1*y2 - x2*y1 + x3*y4 - x4*y3
    (by bilinearity, a basis pair vanishing suffices).  v = w =
    (q+1)(q^2+1), both sides (q+1)-regular, e = (q+1)^2 (q^2+1), girth
    exactly 8, and the cubic bound is met with equality.  Exercised for
    prime q up to 7.
    """
    field = PrimeField(q)
    pts = projective_points(field, 4)
    index = {p: i for i, p in enumerate(pts)}
    lines: dict[CanonicalLine, int] = {}
    for p1, p2 in combinations(pts, 2):
        if _symplectic(field, p1.coords, p2.coords) == 0:
            line = CanonicalLine.through(field, p1, p2)
            if line not in lines:
                lines[line] = len(lines)
    expected = (q + 1) * (q * q + 1)
    if len(lines) != expected:
        raise AssertionError(
            f"isotropic line count {len(lines)} != {expected} for q={q}"
        )
    pairs = []
    for line, j in lines.items():
        for pt in line.points(field):
            pairs.append((index[pt], j))
    return from_edges(len(pts), len(lines), pairs)


def unbalanced6(v: int, w: int) -> BipartiteGraph:
    """Expansion of the complete graph K_v padded with pendant W-vertices.

    Requires w >= v(v-1)/2.  Size is v(v-1)/2 + w, which meets the coarse
    girth-6 bound's second alternative with equality; girth 6 for v >= 3.
    Pendants all attach to V-vertex 0 for reproducibility.
    """
    if v < 1:
        raise ValueError(f"v must be >= 1, got {v}")
    core = v * (v - 1) // 2
    if w < core:
        raise ValueError(f"w must be >= v(v-1)/2 = {core}, got {w}")
    base = expand(Graph(v, list(combinations(range(v), 2))))
    pairs = list(base.edges)
    for k in range(w - core):
        pairs.append((0, core + k))
    return from_edges(v, w, pairs)


def unbalanced8(v: int, w: int) -> BipartiteGraph:
    """Expansion of a balanced complete bipartite graph plus pendants.

    Splits the v vertices into halves of sizes ceil(v/2) (lower indices)
    and floor(v/2), expands the complete bipartite graph between them
    (floor(v^2/4) edges), and attaches w - floor(v^2/4) pendant W-vertices
    to V-vertex 0.  Requires v >= 2 and w >= floor(v^2/4).  Size is
    floor(v^2/4) + w, meeting the coarse girth-8 bound (and the unbalanced
    cap when defined) with equality; girth 8 for v >= 4.
    """
    if v < 2:
        raise ValueError(f"v must be >= 2, got {v}")
    core = v * v // 4
    if w < core:
        raise ValueError(f"w must be >= floor(v^2/4) = {core}, got {w}")
    upper = (v + 1) // 2
    cross = [(a, b) for a in range(upper) for b in range(upper, v)]
    base = expand(Graph(v, cross))
    pairs = list(base.edges)
    for k in range(w - core):
        pairs.append((0, core + k))
    return from_edges(v, w, pairs)
