"""Independent reference computations used as test oracles.

Nothing here calls the code paths under test: labeled trees come from
Prüfer decoding, crossing-free optima from filtered full enumeration, and
Fermat points from a grid search with local refinement.
"""

from __future__ import annotations

import itertools
import math


def prufer_decode(seq: tuple[int, ...], n: int) -> list[tuple[int, int]]:
    degree = [1] * n
    for v in seq:
        degree[v] += 1
    edges = []
    ptr = 0
    leaf = -1
    for v in seq:
        if leaf < 0:
            while degree[ptr] != 1:
                ptr += 1
            leaf = ptr
        edges.append((min(leaf, v), max(leaf, v)))
        degree[leaf] -= 1
        degree[v] -= 1
        if degree[v] == 1 and v < ptr:
            leaf = v
        else:
            leaf = -1
    u = [v for v in range(n) if degree[v] == 1]
    edges.append((u[0], u[1]))
    return edges


def all_labeled_trees(n: int):
    """Every labeled tree on n vertices (n^(n-2) of them), via Prüfer."""
    if n == 1:
        yield []
        return
    if n == 2:
        yield [(0, 1)]
        return
    for seq in itertools.product(range(n), repeat=n - 2):
        yield prufer_decode(seq, n)


def edge_length_sum(edges, pts) -> float:
    return sum(
        math.hypot(pts[i][0] - pts[j][0], pts[i][1] - pts[j][1]) for i, j in edges
    )


def segments_cross_reference(s1, s2) -> bool:
    """Same crossing semantics, written independently via parametric
    intersection with exact rational arithmetic."""
    from fractions import Fraction

    (ax, ay), (bx, by) = (map(Fraction, s1[0]), map(Fraction, s1[1]))
    (cx, cy), (dx, dy) = (map(Fraction, s2[0]), map(Fraction, s2[1]))
    ax, ay, bx, by, cx, cy, dx, dy = ax, ay, bx, by, cx, cy, dx, dy
    r = (bx - ax, by - ay)
    s = (dx - cx, dy - cy)
    denom = r[0] * s[1] - r[1] * s[0]
    qp = (cx - ax, cy - ay)
    if denom == 0:
        if qp[0] * r[1] - qp[1] * r[0] != 0:
            return False  # parallel, not collinear
        rr = r[0] * r[0] + r[1] * r[1]
        t0 = (qp[0] * r[0] + qp[1] * r[1]) / rr
        t1 = t0 + (s[0] * r[0] + s[1] * r[1]) / rr
        lo, hi = min(t0, t1), max(t0, t1)
        return max(lo, Fraction(0)) < min(hi, Fraction(1))  # positive overlap only
    t = (qp[0] * s[1] - qp[1] * s[0]) / denom
    u = (qp[0] * r[1] - qp[1] * r[0]) / denom
    if not (0 <= t <= 1 and 0 <= u <= 1):
        return False
    interior = (0 < t < 1) or (0 < u < 1)
    return interior


def max_noncrossing_tree_bruteforce(pts) -> float:
    """Optimal noncrossing spanning tree length by full labeled-tree
    enumeration (exponential; n <= 7 or so)."""
    best = -1.0
    for edges in all_labeled_trees(len(pts)):
        ok = True
        for k in range(len(edges)):
            i, j = edges[k]
            for m in range(k + 1, len(edges)):
                p, q = edges[m]
                if segments_cross_reference(
                    (pts[i], pts[j]), (pts[p], pts[q])
                ):
                    ok = False
                    break
            if not ok:
                break
        if ok:
            best = max(best, edge_length_sum(edges, pts))
    return best


def fermat_grid_oracle(a, b, c, steps: int = 60, rounds: int = 10) -> float:
    """Minimal total distance to three points by grid search with local
    refinement around the best cell."""

    def total(x, y):
        return (
            math.hypot(x - a[0], y - a[1])
            + math.hypot(x - b[0], y - b[1])
            + math.hypot(x - c[0], y - c[1])
        )

    xmin = min(a[0], b[0], c[0])
    xmax = max(a[0], b[0], c[0])
    ymin = min(a[1], b[1], c[1])
    ymax = max(a[1], b[1], c[1])
    best = (None, float("inf"))
    for _ in range(rounds):
        dx = (xmax - xmin) / steps or 1e-15
        dy = (ymax - ymin) / steps or 1e-15
        for i in range(steps + 1):
            for j in range(steps + 1):
                x, y = xmin + i * dx, ymin + j * dy
                v = total(x, y)
                if v < best[1]:
                    best = ((x, y), v)
        (bx, by), _ = best
        xmin, xmax = bx - 2 * dx, bx + 2 * dx
        ymin, ymax = by - 2 * dy, by + 2 * dy
    return best[1]
