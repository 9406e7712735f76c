"""Longest noncrossing spanning tree: the 0.519-approximation.

The solver guesses the longest edge (a, b) of an optimal tree by trying all
point pairs.  Guess-independent candidates are the n spanning stars (plus a
monotone path when the input is collinear, where stars self-overlap); each
guess additionally contributes two anchored trees T_a and T_b built in three
sweeps (far-strip points to the anchor, near-strip points into angular
wedges, middle-strip points greedily to visible wedge endpoints).  Every
candidate is crossing-validated and invalid ones are discarded, so the
reported tree is always a noncrossing spanning tree.
"""

from __future__ import annotations

import math
from bisect import bisect_right
from dataclasses import dataclass
from typing import Sequence

from .geometry import Point, diametral_pair, dist, orientation, segments_cross
from .report import SolveReport
from .trees import Tree, is_noncrossing, tree_length, validate_spanning_tree

DELTA_NONCROSSING = 0.519
STRIP_OMEGA = 0.16
BETA_HAT = 0.44


@dataclass(frozen=True)
class NcstParams:
    """Derived constants of the 0.519 analysis for a given guess length.

    All lengths live in the diameter-scaled frame (diam = 1, so
    d <= ab_len <= 1 for unpruned guesses, d = 1/(2*delta)).  lam is the
    focal sum of the outer analysis ellipse E1, gamma of the inner one E2.
    """

    delta: float
    d: float
    omega: float
    beta_hat: float
    alpha_hat: float
    ab_len: float
    lam: float
    gamma: float


def ncst_params(ab_len: float, delta: float = DELTA_NONCROSSING) -> NcstParams:
    if not 0.0 < ab_len <= 1.0 + 1e-9:
        raise ValueError(f"ab_len {ab_len} outside (0, 1]")
    omega = STRIP_OMEGA
    beta_hat = BETA_HAT
    alpha_hat = (2.0 * delta + 3.0 * omega - 2.0) / (omega - 1.0) - beta_hat
    return NcstParams(
        delta=delta,
        d=1.0 / (2.0 * delta),
        omega=omega,
        beta_hat=beta_hat,
        alpha_hat=alpha_hat,
        ab_len=ab_len,
        lam=6.0 * delta / math.sqrt(3.0) + 1.0 - ab_len,
        gamma=(2.0 * delta + alpha_hat - 1.0) * ab_len / alpha_hat,
    )


@dataclass(frozen=True)
class PointLabel:
    """Region memberships of one point relative to a guess (a, b)."""

    in_L: bool
    in_E1: bool
    in_E2: bool
    in_Lprime: bool
    in_Q: bool
    strip: str  # "left" | "middle" | "right"
    in_M: bool


@dataclass(frozen=True)
class RegionClassifier:
    """Point labels and the fractions alpha (in L outside E2) and beta (in
    the middle-strip region M = L intersect E2 between the strip lines).

    beta_prime is the fraction of points in the middle strip regardless of
    E2; it never exceeds alpha + beta.
    """

    params: NcstParams
    labels: tuple[PointLabel, ...]
    alpha: float
    beta: float
    beta_prime: float


def classify_points(
    points: Sequence[Sequence[float]], a: int, b: int, delta: float = DELTA_NONCROSSING
) -> RegionClassifier:
    """Label every point against the regions of the guess (a, b).

    Coordinates must be diameter-scaled (diameter 1): the lens L uses disks
    of radius 1 around a and b.  Strip membership projects onto the ab
    direction; points exactly on a strip line count as middle.
    """
    pa, pb = points[a], points[b]
    ab = dist(pa, pb)
    if ab == 0.0:
        raise ValueError("guess points coincide")
    params = ncst_params(ab, delta)
    ux, uy = (pb[0] - pa[0]) / ab, (pb[1] - pa[1]) / ab
    l1, l2 = params.omega * ab, (1.0 - params.omega) * ab

    labels = []
    for p in points:
        da, db = dist(p, pa), dist(p, pb)
        in_L = da <= 1.0 and db <= 1.0
        in_E1 = da + db <= params.lam
        in_E2 = da + db <= params.gamma
        in_Lp = da <= ab and db <= ab
        x = (p[0] - pa[0]) * ux + (p[1] - pa[1]) * uy
        strip = "left" if x < l1 else ("right" if x > l2 else "middle")
        labels.append(
            PointLabel(
                in_L=in_L,
                in_E1=in_E1,
                in_E2=in_E2,
                in_Lprime=in_Lp,
                in_Q=in_L and not in_E1,
                strip=strip,
                in_M=in_L and in_E2 and strip == "middle",
            )
        )
    n = len(points)
    alpha = sum(1 for lab in labels if lab.in_L and not lab.in_E2) / n
    beta = sum(1 for lab in labels if lab.in_M) / n
    beta_prime = sum(1 for lab in labels if lab.strip == "middle") / n
    return RegionClassifier(params, tuple(labels), alpha, beta, beta_prime)


@dataclass(frozen=True)
class NcstCandidate:
    """One candidate tree: a star, the collinear fallback path, or an
    anchored tree for a guess.  noncrossing is the validation verdict; a
    failed construction carries tree=None."""

    tree: Tree | None
    tag: str  # "star" | "path" | "Ta" | "Tb"
    guess: tuple[int, int] | None
    noncrossing: bool
    center: int | None = None


def _finish_candidate(
    points: Sequence[Sequence[float]],
    edges: list[tuple[int, int]],
    tag: str,
    guess: tuple[int, int] | None,
    center: int | None = None,
) -> NcstCandidate:
    tree = Tree(len(points), tuple(edges))
    if any(dist(points[i], points[j]) == 0.0 for i, j in tree.edges):
        return NcstCandidate(tree, tag, guess, False, center)
    ok = validate_spanning_tree(tree, points) is None and is_noncrossing(tree, points)[0]
    return NcstCandidate(tree, tag, guess, ok, center)


def _anchored_tree(
    points: Sequence[Sequence[float]], root: int, far: int, tag: str,
    guess: tuple[int, int],
) -> NcstCandidate:
    """Three-sweep construction anchored at `root` with mate `far`.

    Sweep 1 connects every right-strip point (beyond the far strip line) to
    the root; these spokes, in angular order, partition the plane into
    wedges.  Sweep 2 sends each left-strip point to the spoke endpoint of
    its wedge (points on the axis count as below it).  Sweep 3 walks the
    middle-strip points in increasing angle and attaches each to the
    farthest visible wedge endpoint, falling back to the nearest visible
    tree vertex; an unattachable point aborts the construction.
    """
    pa, pb = points[root], points[far]
    ab = dist(pa, pb)
    if ab == 0.0:
        return NcstCandidate(None, tag, guess, False)
    ux, uy = (pb[0] - pa[0]) / ab, (pb[1] - pa[1]) / ab
    l1, l2 = STRIP_OMEGA * ab, (1.0 - STRIP_OMEGA) * ab

    def xproj(p) -> float:
        return (p[0] - pa[0]) * ux + (p[1] - pa[1]) * uy

    def angle(p) -> float:
        th = math.atan2(-(p[0] - pa[0]) * uy + (p[1] - pa[1]) * ux, xproj(p))
        return -math.pi if th == math.pi else th

    right, left, middle = [], [], []
    for k in range(len(points)):
        if k == root:
            continue
        x = xproj(points[k])
        if x > l2:
            right.append(k)
        elif x < l1:
            left.append(k)
        else:
            middle.append(k)
    if far not in right:  # cannot happen for a positive-length guess
        return NcstCandidate(None, tag, guess, False)

    right.sort(key=lambda k: (angle(points[k]), dist(pa, points[k]), k))
    spokes = right
    spoke_angles = [angle(points[k]) for k in spokes]
    edges = [(root, k) for k in spokes]
    attached = [root] + list(spokes)

    def wedge_index(phi: float) -> int:
        i = bisect_right(spoke_angles, phi) - 1
        return 0 if i < 0 else i

    for k in sorted(left, key=lambda k: (angle(points[k]), k)):
        edges.append((spokes[wedge_index(angle(points[k]))], k))
        attached.append(k)

    def visible(p, w: int) -> bool:
        seg = (p, points[w])
        for i, j in edges:
            if dist(points[i], points[j]) == 0.0:
                return False
            if segments_cross(seg, (points[i], points[j])):
                return False
        return True

    for k in sorted(middle, key=lambda k: (angle(points[k]), k)):
        p = points[k]
        i = wedge_index(angle(p))
        cands = {spokes[i], root}
        if i + 1 < len(spokes) and angle(p) >= spoke_angles[0]:
            cands.add(spokes[i + 1])
        ordered = sorted(cands, key=lambda w: (-dist(p, points[w]), w))
        target = next((w for w in ordered if visible(p, w)), None)
        if target is None:
            fallback = sorted(attached, key=lambda w: (dist(p, points[w]), w))
            target = next((w for w in fallback if visible(p, w)), None)
        if target is None:
            return NcstCandidate(None, tag, guess, False)
        edges.append((target, k))
        attached.append(k)

    return _finish_candidate(points, edges, tag, guess)


def build_Ta(points: Sequence[Sequence[float]], a: int, b: int) -> NcstCandidate:
    """Anchored tree for guess (a, b) rooted at a."""
    if a == b:
        raise ValueError("guess endpoints must differ")
    return _anchored_tree(points, a, b, "Ta", (a, b))


def build_Tb(points: Sequence[Sequence[float]], a: int, b: int) -> NcstCandidate:
    """Mirror construction rooted at b (same sweeps, reversed axis)."""
    if a == b:
        raise ValueError("guess endpoints must differ")
    return _anchored_tree(points, b, a, "Tb", (a, b))


def _all_collinear(points: Sequence[Sequence[float]]) -> bool:
    base = None
    for k in range(1, len(points)):
        if tuple(points[k]) != tuple(points[0]):
            base = k
            break
    if base is None:
        return True
    return all(
        orientation(points[0], points[base], points[k]) == 0
        for k in range(len(points))
    )


def _monotone_path(points: Sequence[Sequence[float]], iu: int, iv: int) -> list[tuple[int, int]]:
    pu, pv = points[iu], points[iv]
    ux, uy = pv[0] - pu[0], pv[1] - pu[1]
    order = sorted(
        range(len(points)),
        key=lambda k: ((points[k][0] - pu[0]) * ux + (points[k][1] - pu[1]) * uy, k),
    )
    return [(order[t], order[t + 1]) for t in range(len(order) - 1)]


def solve_ncst(points: Sequence[Sequence[float]], prune: bool = True) -> SolveReport:
    """0.519-approximation for the longest noncrossing spanning tree.

    Candidates: the n stars (computed once; a star that self-overlaps on
    collinear input is discarded and, for fully collinear inputs, a monotone
    path substitutes), then T_a and T_b for every guess pair.  With pruning
    on, guesses shorter than d * diameter are skipped: the stars already
    cover them.  Ties keep the earliest candidate in the order stars (by
    center), path, T_a then T_b (by lexicographic guess).
    """
    n = len(points)
    if n < 2:
        raise ValueError("need at least two points")
    pts = [Point(p[0], p[1]) for p in points]
    iu, iv = diametral_pair(pts)
    diam = dist(pts[iu], pts[iv])
    if diam == 0.0:
        raise ValueError("all points coincide")

    candidates: list[NcstCandidate] = []
    for c in range(n):
        edges = [(c, k) for k in range(n) if k != c]
        candidates.append(_finish_candidate(pts, edges, "star", None, center=c))
    if _all_collinear(pts):
        candidates.append(
            _finish_candidate(pts, _monotone_path(pts, iu, iv), "path", None)
        )

    d = 1.0 / (2.0 * DELTA_NONCROSSING)
    threshold = d * diam * (1.0 - 1e-12)
    num_guesses = 0
    guess_candidates: list[NcstCandidate] = []
    for i in range(n):
        for j in range(i + 1, n):
            ab = dist(pts[i], pts[j])
            if ab == 0.0 or (prune and ab < threshold):
                continue
            num_guesses += 1
            guess_candidates.append(build_Ta(pts, i, j))
            guess_candidates.append(build_Tb(pts, i, j))
    tag_rank = {"Ta": 0, "Tb": 1}
    guess_candidates.sort(key=lambda c: (tag_rank[c.tag], c.guess))
    candidates.extend(guess_candidates)

    winner = None
    winner_len = -1.0
    for cand in candidates:
        if not cand.noncrossing or cand.tree is None:
            continue
        length = tree_length(cand.tree, pts)
        if length > winner_len:
            winner, winner_len = cand, length
    if winner is None:
        raise ValueError("no valid noncrossing candidate (degenerate input)")

    upper = (n - 1) * diam
    metrics = {
        "diameter": diam,
        "diametral_pair": [iu, iv],
        "guesses_tried": num_guesses,
        "pruned": prune,
        "ratio_to_upper": winner_len / upper,
    }
    if winner.center is not None:
        metrics["center"] = winner.center
    return SolveReport(
        algorithm="ncst",
        candidate=winner.tag,
        points=tuple(pts),
        tree=winner.tree,
        length=winner_len,
        upper_bound=upper,
        guess=winner.guess,
        metrics=metrics,
    )


@dataclass(frozen=True)
class LemmaDiagnostics:
    """Worst-case margins of the per-guess analysis inequalities on one
    instance: distances from Q-points to the guess endpoints against
    lam - 1, triple connection costs against 3*delta, and middle-region edge
    lengths against the f1(d) cap.  All margins must stay positive."""

    q_margins: tuple[float, ...]
    steiner_margins: tuple[float, ...]
    edge_cap_margins: tuple[float, ...]
    worst_q: float | None
    worst_steiner: float | None
    worst_edge_cap: float | None


def lemma_diagnostics(
    points: Sequence[Sequence[float]],
    a: int,
    b: int,
    delta: float = DELTA_NONCROSSING,
    samples: int = 200,
    seed: int = 0,
) -> LemmaDiagnostics:
    """Evaluate the analysis inequalities for the guess (a, b) on
    diameter-scaled coordinates.

    For every input point q in Q: min(|aq|, |bq|) - (lam - 1) and, for
    sampled probe points p, |pa| + |pb| + |pq| - 3*delta.  For every input
    point q' in M and every input p reachable without crossing ab:
    f1(d) - |q'p|.  Returns all margins plus the worst of each family.
    """
    from .constants import f1  # local import: constants builds on ncst_params
    from .instances import SplitMix64

    pts = [Point(p[0], p[1]) for p in points]
    pa, pb = pts[a], pts[b]
    cls = classify_points(pts, a, b, delta)
    params = cls.params

    q_points = [pts[k] for k in range(len(pts)) if cls.labels[k].in_Q]
    q_margins = [
        min(dist(q, pa), dist(q, pb)) - (params.lam - 1.0) for q in q_points
    ]

    rng = SplitMix64(seed)
    steiner_margins = []
    for q in q_points:
        for _ in range(samples):
            p = (rng.uniform(-1.5, 2.5), rng.uniform(-2.0, 2.0))
            steiner_margins.append(
                dist(p, pa) + dist(p, pb) + dist(p, q) - 3.0 * delta
            )

    edge_cap_margins = []
    if params.ab_len >= params.d - 1e-9:
        cap = f1(params.d, delta)
        for k in range(len(pts)):
            if not cls.labels[k].in_M:
                continue
            q = pts[k]
            for m in range(len(pts)):
                p = pts[m]
                if tuple(p) == tuple(q):
                    continue
                if tuple(p) not in (tuple(pa), tuple(pb)) and tuple(q) not in (
                    tuple(pa),
                    tuple(pb),
                ):
                    if segments_cross((q, p), (pa, pb)):
                        continue
                edge_cap_margins.append(cap - dist(q, p))

    return LemmaDiagnostics(
        q_margins=tuple(q_margins),
        steiner_margins=tuple(steiner_margins),
        edge_cap_margins=tuple(edge_cap_margins),
        worst_q=min(q_margins, default=None),
        worst_steiner=min(steiner_margins, default=None),
        worst_edge_cap=min(edge_cap_margins, default=None),
    )
