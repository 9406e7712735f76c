"""Empirical approximation ratios against the exact oracles.

The guaranteed floors are worst-case: observed ratios sit far above them.

Run:  python demos/06_ratio_benchmark.py
"""

from longspan import GenSpec, generate, oracle_ratio, solve_ncst, solve_stnb

print("noncrossing spanning tree, ratio vs exact oracle (floor 0.519):")
for kind in ("uniform_square", "uniform_disk", "two_cluster"):
    ratios = []
    for k in range(24):
        spec = GenSpec(
            kind=kind,
            n=5 + k % 4,
            seed=500 + k,
            epsilon=0.05 if kind == "two_cluster" else None,
        )
        pts = generate(spec)
        rec = oracle_ratio(pts, solve_ncst(pts))
        ratios.append(rec.ratio)
    print(f"  {kind:15s} n in 5..8, 24 seeds: "
          f"min {min(ratios):.4f}  mean {sum(ratios) / len(ratios):.4f}")

print("\nspanning tree with neighborhoods, ratio vs exact oracle (floor 0.524):")
for k_verts in (2, 3, 4):
    ratios = []
    for k in range(24):
        spec = GenSpec(
            kind="random_neighborhoods",
            n=3 + k % 3,
            seed=800 + k,
            vertices_per_nb=k_verts,
        )
        nbs = generate(spec)
        rec = oracle_ratio(nbs, solve_stnb(nbs))
        ratios.append(rec.ratio)
    print(f"  {k_verts} vertices/neighborhood, n in 3..5, 24 seeds: "
          f"min {min(ratios):.4f}  mean {sum(ratios) / len(ratios):.4f}")
