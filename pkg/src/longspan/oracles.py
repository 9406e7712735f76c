"""Exact brute-force reference solvers, usable at desk scale only.

exact_ncst enumerates noncrossing spanning trees over a descending edge
list with branch-and-bound pruning; exact_stnb enumerates representative
assignments and solves each with exact Prim.  Guards are hard errors: a
silently truncated oracle would invalidate every ratio it certifies.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

from .geometry import Point, bichromatic_diametral_pair, diametral_pair, dist, segments_cross
from .neighborhoods import NeighborhoodSet, StnbSolution
from .report import SolveReport
from .trees import Tree, max_spanning_tree, tree_length


def exact_ncst(
    points: Sequence[Sequence[float]], max_n: int = 9, prune: bool = True
) -> Tree:
    """A maximum-length noncrossing spanning tree, found exactly.

    Depth-first search over all edges sorted by length descending, keeping
    partial forests acyclic and pairwise noncrossing.  With prune=True an
    optimistic bound (current length plus the longest still-available edges)
    cuts hopeless branches; the bound carries a small slack so pruned and
    unpruned runs return identical trees.  Ties break to the
    lexicographically smallest edge list.
    """
    n = len(points)
    if n < 2:
        raise ValueError("need at least two points")
    if n > max_n:
        raise ValueError("instance too large for oracle")
    pts = [Point(p[0], p[1]) for p in points]

    edges = []
    for i in range(n):
        for j in range(i + 1, n):
            d = dist(pts[i], pts[j])
            if d > 0.0:
                edges.append((d, i, j))
    edges.sort(key=lambda e: (-e[0], e[1], e[2]))
    m = len(edges)
    lengths = [e[0] for e in edges]
    prefix = [0.0]
    for d in lengths:
        prefix.append(prefix[-1] + d)

    cross_mask = [0] * m
    for x in range(m):
        _, i, j = edges[x]
        for y in range(x + 1, m):
            _, p, q = edges[y]
            if segments_cross((pts[i], pts[j]), (pts[p], pts[q])):
                cross_mask[x] |= 1 << y
                cross_mask[y] |= 1 << x

    target = n - 1
    slack = 1e-9 * (1.0 + prefix[min(target, m)])
    best_len = -1.0
    best_edges: tuple[tuple[int, int], ...] | None = None

    parent = list(range(n))

    def find(v: int) -> int:
        while parent[v] != v:
            v = parent[v]
        return v

    chosen: list[int] = []
    chosen_mask = 0

    def dfs(k: int, length: float) -> None:
        nonlocal best_len, best_edges, chosen_mask
        if len(chosen) == target:
            tree_edges = tuple(sorted((edges[x][1], edges[x][2]) for x in chosen))
            if length > best_len or (length == best_len and tree_edges < best_edges):
                best_len, best_edges = length, tree_edges
            return
        need = target - len(chosen)
        if m - k < need:
            return
        if prune and length + (prefix[k + need] - prefix[k]) < best_len - slack:
            return
        d, i, j = edges[k]
        ri, rj = find(i), find(j)
        if ri != rj and not (cross_mask[k] & chosen_mask):
            parent[ri] = rj
            chosen.append(k)
            chosen_mask |= 1 << k
            dfs(k + 1, length + d)
            chosen_mask &= ~(1 << k)
            chosen.pop()
            parent[ri] = ri
        dfs(k + 1, length)

    dfs(0, 0.0)
    if best_edges is None:
        raise ValueError("no noncrossing spanning tree found")
    return Tree(n, best_edges)


def _prim_max_length(indices: Sequence[int], dmat: list[list[float]]) -> float:
    k = len(indices)
    if k == 1:
        return 0.0
    in_tree = [False] * k
    in_tree[0] = True
    row0 = dmat[indices[0]]
    key = [row0[v] for v in indices]
    total = 0.0
    for _ in range(k - 1):
        pick = -1
        for t in range(k):
            if not in_tree[t] and (pick < 0 or key[t] > key[pick]):
                pick = t
        in_tree[pick] = True
        total += key[pick]
        row = dmat[indices[pick]]
        for t in range(k):
            if not in_tree[t]:
                w = row[indices[t]]
                if w > key[t]:
                    key[t] = w
    return total


def exact_stnb(nbs: NeighborhoodSet, max_assignments: int = 10**6) -> StnbSolution:
    """The optimal representative assignment, by full enumeration.

    Every combination of one vertex per neighborhood is scored with an exact
    maximum spanning tree; the guard errors out (rather than truncating)
    when the assignment space exceeds max_assignments.
    """
    ranges = [nbs.vertex_indices(nb.color) for nb in nbs.neighborhoods]
    space = 1
    for r in ranges:
        space *= len(r)
        if space > max_assignments:
            raise ValueError("instance too large for oracle")

    npts = nbs.points
    dmat = [[dist(p, q) for q in npts] for p in npts]
    best_len = -1.0
    best_assign: tuple[int, ...] | None = None
    for assign in itertools.product(*ranges):
        length = _prim_max_length(assign, dmat)
        if length > best_len:
            best_len, best_assign = length, assign

    rep_points = [npts[v] for v in best_assign]
    tree = max_spanning_tree(rep_points)
    reps = {nb.color: v for nb, v in zip(nbs.neighborhoods, best_assign)}
    return StnbSolution(reps, tree, "oracle", tree_length(tree, rep_points))


@dataclass(frozen=True)
class RatioRecord:
    """Approximation quality of one solution against the exact oracle and
    against the cheap certificate (n-1) * diameter."""

    approx_length: float
    oracle_length: float
    ratio: float
    upper_bound: float
    upper_ratio: float


def oracle_ratio(
    instance: Sequence[Sequence[float]] | NeighborhoodSet,
    approx: SolveReport,
    oracle_length: float | None = None,
    max_n: int = 9,
    max_assignments: int = 10**6,
) -> RatioRecord:
    """Score an approximate solution against the matching exact oracle.

    Runs the oracle itself when oracle_length is not supplied.  Raises
    ValueError when the solution does not fit the instance.
    """
    if isinstance(instance, NeighborhoodSet):
        if approx.tree.n != instance.n:
            raise ValueError("solution does not match instance")
        if oracle_length is None:
            oracle_length = exact_stnb(instance, max_assignments).length
        a, b = bichromatic_diametral_pair(instance.points, instance.colors)
        diam = dist(instance.points[a], instance.points[b])
        n = instance.n
    else:
        if approx.tree.n != len(instance):
            raise ValueError("solution does not match instance")
        if oracle_length is None:
            oracle_tree = exact_ncst(instance, max_n)
            oracle_length = tree_length(oracle_tree, instance)
        iu, iv = diametral_pair(instance)
        diam = dist(instance[iu], instance[iv])
        n = len(instance)
    upper = (n - 1) * diam
    return RatioRecord(
        approx_length=approx.length,
        oracle_length=oracle_length,
        ratio=approx.length / oracle_length if oracle_length > 0 else float("inf"),
        upper_bound=upper,
        upper_ratio=approx.length / upper if upper > 0 else float("inf"),
    )
