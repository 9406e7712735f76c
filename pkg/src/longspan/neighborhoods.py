"""Longest spanning tree with neighborhoods: colored polygonal regions,
the 0.524-approximation (one double-star and three stars, built around a
bichromatic diametral pair), and the lens/ellipse region bookkeeping used
by its ratio analysis."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from .geometry import (
    Frame,
    Point,
    bichromatic_diametral_pair,
    canonical_frame,
    dist,
)
from .report import SolveReport
from .trees import Tree, tree_length


@dataclass(frozen=True)
class Neighborhood:
    """One colored neighborhood: a union of polygons, kept as vertex rings.

    Single-vertex rings model point neighborhoods.  Only boundary vertices
    matter to the solvers: a farthest point inside a polygon is always
    attained at a vertex.
    """

    color: int
    polygons: tuple[tuple[Point, ...], ...]

    def __post_init__(self):
        polys = tuple(
            tuple(Point(p[0], p[1]) for p in ring) for ring in self.polygons
        )
        if not polys or any(len(ring) == 0 for ring in polys):
            raise ValueError("neighborhood needs at least one polygon vertex")
        object.__setattr__(self, "polygons", polys)

    def vertices(self) -> Iterable[Point]:
        for ring in self.polygons:
            yield from ring


class NeighborhoodSet:
    """A collection of uniquely colored neighborhoods, flattened to a vertex
    array with a parallel color array.  Vertices of one neighborhood occupy a
    contiguous index range."""

    def __init__(self, neighborhoods: Sequence[Neighborhood]):
        if len(neighborhoods) < 2:
            raise ValueError("need at least two neighborhoods")
        colors = [nb.color for nb in neighborhoods]
        if len(set(colors)) != len(colors):
            raise ValueError("duplicate color")
        self.neighborhoods = tuple(neighborhoods)
        self.points: list[Point] = []
        self.colors: list[int] = []
        self._ranges: dict[int, range] = {}
        for nb in self.neighborhoods:
            start = len(self.points)
            for v in nb.vertices():
                self.points.append(v)
                self.colors.append(nb.color)
            self._ranges[nb.color] = range(start, len(self.points))

    @property
    def n(self) -> int:
        return len(self.neighborhoods)

    @property
    def total_vertices(self) -> int:
        return len(self.points)

    def color_of(self, vertex: int) -> int:
        return self.colors[vertex]

    def vertex_indices(self, color: int) -> range:
        return self._ranges[color]

    def position_of_color(self, color: int) -> int:
        for k, nb in enumerate(self.neighborhoods):
            if nb.color == color:
                return k
        raise KeyError(color)


@dataclass(frozen=True)
class StnbSolution:
    """A spanning tree over one representative vertex per neighborhood.

    Tree vertex k corresponds to the k-th neighborhood of the set;
    `representatives` maps each color to the chosen flattened vertex index.
    """

    representatives: dict[int, int]
    tree: Tree
    candidate: str
    length: float

    def representative_points(self, nbs: NeighborhoodSet) -> list[Point]:
        return [
            nbs.points[self.representatives[nb.color]] for nb in nbs.neighborhoods
        ]


@dataclass(frozen=True)
class StnbParams:
    """Derived constants of the 0.524 analysis, in the unit frame |ab| = 1.

    omega = 6*delta/sqrt(3) - 1, so that (sqrt(3)/2) * (omega + 1) = 3*delta
    exactly; the analysis ellipse has focal-sum omega + 2*delta.
    """

    delta: float
    omega: float
    ellipse_sum: float
    lens_radius: float
    wide_radius: float
    core_radius: float


def stnb_params(delta: float = 0.524) -> StnbParams:
    omega = 6.0 * delta / math.sqrt(3.0) - 1.0
    return StnbParams(
        delta=delta,
        omega=omega,
        ellipse_sum=omega + 2.0 * delta,
        lens_radius=1.0,
        wide_radius=2.0 * delta,
        core_radius=delta,
    )


def farthest_vertex_in(nbs: NeighborhoodSet, color: int, origin: Sequence[float]) -> int:
    """Flattened index of the vertex of the given neighborhood farthest from
    origin; ties break to the smallest index."""
    indices = nbs.vertex_indices(color)
    if len(indices) == 0:
        raise ValueError("empty neighborhood")
    best = indices[0]
    best_d = dist(nbs.points[best], origin)
    for k in indices[1:]:
        dk = dist(nbs.points[k], origin)
        if dk > best_d:
            best, best_d = k, dk
    return best


def build_double_star(nbs: NeighborhoodSet, a: int, b: int) -> StnbSolution:
    """Double-star on the vertex pair (a, b): the edge ab plus, for every
    other neighborhood, the longer of (a, farthest-from-a) and
    (b, farthest-from-b); ties attach to a.

    Every non-ab edge has length at least |ab|/2 whenever (a, b) is a
    bichromatic diametral pair.
    """
    ca, cb = nbs.color_of(a), nbs.color_of(b)
    if ca == cb:
        raise ValueError("double-star anchors must have different colors")
    pa, pb = nbs.points[a], nbs.points[b]
    ka, kb = nbs.position_of_color(ca), nbs.position_of_color(cb)
    reps = {ca: a, cb: b}
    edges = [(ka, kb)]
    for k, nb in enumerate(nbs.neighborhoods):
        if nb.color in (ca, cb):
            continue
        p_i = farthest_vertex_in(nbs, nb.color, pa)
        q_i = farthest_vertex_in(nbs, nb.color, pb)
        if dist(nbs.points[p_i], pa) >= dist(nbs.points[q_i], pb):
            reps[nb.color] = p_i
            edges.append((ka, k))
        else:
            reps[nb.color] = q_i
            edges.append((kb, k))
    tree = Tree(nbs.n, tuple(edges))
    sol = StnbSolution(reps, tree, "D", 0.0)
    length = tree_length(tree, sol.representative_points(nbs))
    return StnbSolution(reps, tree, "D", length)


def longest_spanning_star_nb(
    nbs: NeighborhoodSet, center: int, candidate: str = "star"
) -> StnbSolution:
    """Longest spanning star centered at a vertex: the center represents its
    own neighborhood and connects to the farthest vertex of every other."""
    cc = nbs.color_of(center)
    pc = nbs.points[center]
    kc = nbs.position_of_color(cc)
    reps = {cc: center}
    edges = []
    for k, nb in enumerate(nbs.neighborhoods):
        if nb.color == cc:
            continue
        reps[nb.color] = farthest_vertex_in(nbs, nb.color, pc)
        edges.append((kc, k))
    tree = Tree(nbs.n, tuple(edges))
    sol = StnbSolution(reps, tree, candidate, 0.0)
    length = tree_length(tree, sol.representative_points(nbs))
    return StnbSolution(reps, tree, candidate, length)


def solve_stnb(nbs: NeighborhoodSet) -> SolveReport:
    """0.524-approximation for the longest spanning tree with neighborhoods.

    Finds a bichromatic diametral pair (a, b), builds the stars S1 (centered
    at the vertex of a's neighborhood farthest from a), S2 (likewise for b),
    S3 (centered at the vertex maximizing |av| + |bv|), and the double-star
    D, then reports the longest; ties keep the earliest candidate in the
    order S1, S2, S3, D.  O(N^2) for the diametral pair, linear afterwards.
    """
    a, b = bichromatic_diametral_pair(nbs.points, nbs.colors)
    pa, pb = nbs.points[a], nbs.points[b]
    ab = dist(pa, pb)

    a_prime = farthest_vertex_in(nbs, nbs.color_of(a), pa)
    b_prime = farthest_vertex_in(nbs, nbs.color_of(b), pb)
    c = 0
    best_sum = -1.0
    for v in range(nbs.total_vertices):
        s = dist(nbs.points[v], pa) + dist(nbs.points[v], pb)
        if s > best_sum:
            best_sum = s
            c = v

    candidates = [
        longest_spanning_star_nb(nbs, a_prime, "S1"),
        longest_spanning_star_nb(nbs, b_prime, "S2"),
        longest_spanning_star_nb(nbs, c, "S3"),
        build_double_star(nbs, a, b),
    ]
    winner = candidates[0]
    for cand in candidates[1:]:
        if cand.length > winner.length:
            winner = cand

    upper = (nbs.n - 1) * ab
    return SolveReport(
        algorithm="stnb",
        candidate=winner.candidate,
        points=tuple(winner.representative_points(nbs)),
        tree=winner.tree,
        length=winner.length,
        upper_bound=upper,
        representatives=dict(winner.representatives),
        metrics={
            "ab_pair": [a, b],
            "ab_length": ab,
            "ratio_to_upper": winner.length / upper if upper > 0 else None,
            "candidate_lengths": {s.candidate: s.length for s in candidates},
        },
    )


@dataclass(frozen=True)
class StnbRegionLabel:
    """Region memberships of one flattened vertex in the unit frame."""

    in_L: bool
    in_L1: bool
    in_L2: bool
    in_Lprime: bool
    in_E: bool
    in_Q: bool


@dataclass(frozen=True)
class StnbRegionReport:
    """Per-vertex region memberships for the 0.524 analysis.

    Q is the part of L1 union L2 outside the analysis ellipse; m counts the
    neighborhoods lying entirely in the open core lens L'.  Consumed by
    property tests, not by the solver.
    """

    params: StnbParams
    a_index: int
    b_index: int
    frame: Frame
    unit_points: tuple[Point, ...]
    labels: tuple[StnbRegionLabel, ...]
    m: int
    q_nonempty: bool


def stnb_region_report(nbs: NeighborhoodSet, delta: float = 0.524) -> StnbRegionReport:
    """Classify every flattened vertex against the lenses L, L1, L2, L' and
    the ellipse E after mapping the bichromatic diametral pair to the unit
    frame a=(0,0), b=(1,0)."""
    a, b = bichromatic_diametral_pair(nbs.points, nbs.colors)
    frame, unit_pts = canonical_frame(nbs.points, a, b, "unit")
    params = stnb_params(delta)
    fa, fb = unit_pts[a], unit_pts[b]

    labels = []
    for p in unit_pts:
        da, db = dist(p, fa), dist(p, fb)
        in_L = da <= 1.0 and db <= 1.0
        in_L1 = db <= 1.0 and da <= params.wide_radius
        in_L2 = da <= 1.0 and db <= params.wide_radius
        in_Lp = da <= params.core_radius and db <= params.core_radius
        in_E = da + db <= params.ellipse_sum
        labels.append(
            StnbRegionLabel(
                in_L=in_L,
                in_L1=in_L1,
                in_L2=in_L2,
                in_Lprime=in_Lp,
                in_E=in_E,
                in_Q=(in_L1 or in_L2) and not in_E,
            )
        )

    m = 0
    for nb in nbs.neighborhoods:
        inside = all(
            dist(unit_pts[k], fa) < params.core_radius
            and dist(unit_pts[k], fb) < params.core_radius
            for k in nbs.vertex_indices(nb.color)
        )
        if inside:
            m += 1

    return StnbRegionReport(
        params=params,
        a_index=a,
        b_index=b,
        frame=frame,
        unit_points=tuple(unit_pts),
        labels=tuple(labels),
        m=m,
        q_nonempty=any(lab.in_Q for lab in labels),
    )
