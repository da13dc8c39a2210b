"""Exhaustive maximum-size search for bipartite graphs under a girth floor.

Depth-first edge addition in a fixed column-major edge order (edge index
m = j*v + i for the pair (i, j)).  A partial graph is extended only when
the new edge closes no cycle shorter than the floor, checked by a breadth-
first probe truncated at depth min_girth - 2.  Pruning combines

  (a) a remaining-edge count bound (degree-ordering aware),
  (b) the cubic (girth 8) or quadratic (girth 6) size bound on any
      completed supergraph, and
  (c) symmetry breaking on class W: W-vertices are used in non-increasing
      degree blocks, with lexicographically non-decreasing neighbour sets
      inside a block, so exactly one column permutation of every graph
      survives.  Class V symmetry is deliberately left unbroken.

The tree is split at fixed depth 2 (the first two chosen edges) into
independent subtrees merged by max with first-in-edge-order ties.  Each
subtree is self-contained, so certificates (including nodes_explored) do
not depend on the worker count; the node budget applies per subtree and
the time budget is a shared absolute deadline.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from . import bounds, graphcore
from .graphcore import BipartiteGraph


__all__ = [
    "BudgetExhausted",
    "DEFAULT_MAX_NODES",
    "DEFAULT_MAX_SECONDS",
    "SearchCertificate",
    "certify_bound",
    "max_size",
]

DEFAULT_MAX_NODES = 10 ** 8
DEFAULT_MAX_SECONDS = 60.0

_TIME_CHECK_MASK = 0x3FF  # poll the clock every 1024 nodes


@dataclass(frozen=True)
class SearchCertificate:
    """Outcome of one search.

    ``witness`` achieves ``e_max`` at girth >= ``min_girth`` (re-verified
    through graphcore.girth, independently of the incremental check used
    while searching).  ``exhaustive`` is True when every subtree completed
    within budget, i.e. no larger graph exists.
    """

    v: int
    w: int
    min_girth: int
    e_max: int
    witness: BipartiteGraph
    exhaustive: bool
    nodes_explored: int
    elapsed: float


class BudgetExhausted(RuntimeError):
    """A search stopped on its node or time budget; the result is only a
    lower bound, so certification is indeterminate."""


def _explore_subtree(args) -> tuple[int, tuple[int, ...], int, bool]:
    """Explore every extension of a fixed edge prefix.

    Returns (best_e, best_edge_indices, nodes_visited, completed).  The
    subtree root itself is counted.  Module-level and tuple-argumented so
    it can cross a process boundary.
    """
    v, w, min_girth, prefix, cap, max_nodes, deadline = args
    total_edges = v * w
    limit = min_girth - 2
    amask_v = [0] * v  # W-neighbour bitmasks per V-vertex
    amask_w = [0] * w  # V-neighbour bitmasks per W-vertex
    deg_w = [0] * w
    stack = list(prefix)
    for m in prefix:
        j, i = divmod(m, v)
        amask_v[i] |= 1 << j
        amask_w[j] |= 1 << i
        deg_w[j] += 1

    best_e = len(prefix)
    best_edges = tuple(prefix)
    nodes = 0
    completed = True

    def reaches(i: int, j: int) -> bool:
        # True iff W-vertex j lies within distance `limit` of V-vertex i.
        target = 1 << j
        seen_v = frontier = 1 << i
        seen_w = 0
        for depth in range(1, limit + 1, 2):
            layer_w = 0
            fv = frontier
            while fv:
                low = fv & -fv
                layer_w |= amask_v[low.bit_length() - 1]
                fv ^= low
            if layer_w & target:
                return True
            if depth + 2 > limit:
                return False
            layer_w &= ~seen_w
            seen_w |= layer_w
            layer_v = 0
            while layer_w:
                low = layer_w & -layer_w
                layer_v |= amask_w[low.bit_length() - 1]
                layer_w ^= low
            frontier = layer_v & ~seen_v
            if not frontier:
                return False
            seen_v |= frontier
        return False

    def rec(last_m: int, e_cur: int) -> None:
        nonlocal nodes, best_e, best_edges, completed
        nodes += 1
        if nodes > max_nodes:
            completed = False
            return
        if nodes & _TIME_CHECK_MASK == 0 and time.monotonic() > deadline:
            completed = False
            return
        if e_cur > best_e:
            best_e = e_cur
            best_edges = tuple(stack)
        col = last_m // v
        ceiling = e_cur + (total_edges - last_m - 1)
        if col >= 1:
            # Degrees are non-increasing, so no later column can exceed
            # the previous one.
            by_degree = e_cur + (deg_w[col - 1] - deg_w[col]) + (w - 1 - col) * deg_w[col - 1]
            if by_degree < ceiling:
                ceiling = by_degree
        if ceiling > cap:
            ceiling = cap
        if ceiling <= best_e:
            return
        # Grow the active column.
        if col == 0 or deg_w[col] < deg_w[col - 1]:
            jbit = 1 << col
            for m in range(last_m + 1, (col + 1) * v):
                i = m - col * v
                if reaches(i, col):
                    continue
                stack.append(m)
                amask_v[i] |= jbit
                amask_w[col] |= 1 << i
                deg_w[col] += 1
                rec(m, e_cur + 1)
                deg_w[col] -= 1
                amask_w[col] ^= 1 << i
                amask_v[i] ^= jbit
                stack.pop()
                if not completed:
                    return
        # Open the next column, finalizing the active one; the finalized
        # pair must satisfy the block-canonical set order.
        nxt = col + 1
        if nxt >= w:
            return
        if col >= 1 and deg_w[col] == deg_w[col - 1]:
            diff = amask_w[col - 1] ^ amask_w[col]
            if diff and not (amask_w[col - 1] & (diff & -diff)):
                return  # previous column's set is lexicographically larger
        jbit = 1 << nxt
        for m in range(nxt * v, (nxt + 1) * v):
            i = m - nxt * v
            if reaches(i, nxt):
                continue
            stack.append(m)
            amask_v[i] |= jbit
            amask_w[nxt] |= 1 << i
            deg_w[nxt] += 1
            rec(m, e_cur + 1)
            deg_w[nxt] -= 1
            amask_w[nxt] ^= 1 << i
            amask_v[i] ^= jbit
            stack.pop()
            if not completed:
                return

    rec(stack[-1], len(prefix))
    return best_e, best_edges, nodes, completed


def _edge_pair(v: int, m: int) -> tuple[int, int]:
    j, i = divmod(m, v)
    return i, j


def max_size(
    v: int,
    w: int,
    min_girth: int,
    max_nodes: int = DEFAULT_MAX_NODES,
    max_seconds: float = DEFAULT_MAX_SECONDS,
    threads: int = 1,
) -> SearchCertificate:
    """Maximum number of edges of a bipartite graph on (v, w) vertices with
    girth >= min_girth, with a witness and an exhaustiveness certificate.

    Exhaustive completion is guaranteed under default budgets for
    v*w <= 36.  On budget exhaustion the certificate carries the best
    graph found so far with ``exhaustive=False``.
    """
    if v < 1 or w < 1:
        raise ValueError(f"class sizes must be >= 1, got v={v} w={w}")
    if min_girth not in (6, 8):
        raise ValueError(f"min_girth must be 6 or 8, got {min_girth}")
    if max_nodes < 1 or max_seconds <= 0:
        raise ValueError("budgets must be positive")
    if threads < 1:
        raise ValueError(f"threads must be >= 1, got {threads}")

    start = time.monotonic()
    deadline = start + max_seconds
    if min_girth == 8:
        cap = bounds.cubic_max_e(v, w)
    else:
        cap = bounds.reiman_max_e(v, w)

    # Depth 0..2 by hand: the root, single-edge graphs (canonical form puts
    # the first edge in column 0), and the two-edge subtree roots.
    nodes = 1
    best_e = 0
    best_edges: tuple[int, ...] = ()
    tasks: list[tuple[int, int]] = []
    singles = list(range(v))
    for m1 in singles:
        for m2 in range(m1 + 1, v):
            tasks.append((m1, m2))  # second edge in column 0
        if w >= 2:
            for m2 in range(v, 2 * v):
                tasks.append((m1, m2))  # second edge opens column 1
    tasks.sort()
    task_args = [
        (v, w, min_girth, (m1, m2), cap, max_nodes, deadline)
        for m1, m2 in tasks
    ]

    if threads == 1 or not task_args:
        results = [_explore_subtree(args) for args in task_args]
    else:
        from concurrent.futures import ProcessPoolExecutor

        chunk = max(1, len(task_args) // (4 * threads))
        with ProcessPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(_explore_subtree, task_args, chunksize=chunk))

    exhaustive = True
    by_first: dict[int, list[int]] = {}
    for idx, (m1, _m2) in enumerate(tasks):
        by_first.setdefault(m1, []).append(idx)
    for m1 in singles:
        nodes += 1
        if 1 > best_e:
            best_e = 1
            best_edges = (m1,)
        for idx in by_first.get(m1, []):
            sub_best, sub_edges, sub_nodes, sub_done = results[idx]
            nodes += sub_nodes
            if not sub_done:
                exhaustive = False
            if sub_best > best_e:
                best_e = sub_best
                best_edges = sub_edges

    witness = graphcore.from_edges(v, w, [_edge_pair(v, m) for m in best_edges])
    report = graphcore.girth(witness)
    if report.girth is not None and report.girth < min_girth:
        raise RuntimeError(
            f"internal error: witness girth {report.girth} below floor {min_girth}"
        )
    return SearchCertificate(
        v=v,
        w=w,
        min_girth=min_girth,
        e_max=best_e,
        witness=witness,
        exhaustive=exhaustive,
        nodes_explored=nodes,
        elapsed=time.monotonic() - start,
    )


def certify_bound(
    v: int,
    w: int,
    min_girth: int,
    max_nodes: int = DEFAULT_MAX_NODES,
    max_seconds: float = DEFAULT_MAX_SECONDS,
    threads: int = 1,
) -> bool:
    """True iff the searched maximum respects the matching size bound.

    Girth 8 compares against the cubic bound, girth 6 against the
    quadratic one.  A non-exhaustive search cannot certify either way and
    raises BudgetExhausted.
    """
    cert = max_size(
        v, w, min_girth, max_nodes=max_nodes, max_seconds=max_seconds, threads=threads
    )
    if not cert.exhaustive:
        raise BudgetExhausted(
            f"search on (v={v}, w={w}, girth>={min_girth}) exceeded its budget"
        )
    if min_girth == 8:
        bound = bounds.cubic_max_e(v, w)
    else:
        bound = bounds.reiman_max_e(v, w)
    return cert.e_max <= bound
