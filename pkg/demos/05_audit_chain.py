"""Audit a putative avoider against the dense-coloring counting chain.

For k >= 4 colors and a dense enough graph on more than (k - 1/2 + eps) n
vertices, no coloring avoids a monochromatic connected matching of n/2
edges. The audit takes a coloring that does avoid one and reports which
requirement it escapes through: too few vertices, too few edges, too many
low-degree vertices, and so on down the chain.
"""

from fractions import Fraction

from cmstruct import AuditParams, EdgeColoring, audit_coloring, complete_graph
from cmstruct.constructions import affine_plane_coloring

params = AuditParams(k=4, epsilon=Fraction(1, 2), delta=Fraction(1, 500), n=4)
print(f"params: k={params.k} eps={params.epsilon} delta={params.delta} "
      f"n={params.n}  (delta cap {params.delta_cap})")

# The affine plane of order 3 colors K_9 with 4 colors and avoids connected
# 2-matchings, but K_9 is far below the (k - 1/2 + eps) n = 16 vertex bar.
g, coloring = affine_plane_coloring(3)
report = audit_coloring(params, g, coloring)
print("\naffine plane of order 3 (K_9, 4 colors):")
for h in report.hypotheses:
    print(f"  [{'pass' if h.passed else 'FAIL'}] {h.name}")
print(f"  low-degree vertices: {len(report.low_degree)} of {g.vertex_count} "
      f"(cap {report.low_degree_cap})")
print(f"  strong vertices above the degree floor: {len(report.strong_survivors)} "
      f"(beta = {report.beta}, cap {report.beta_cap})")
print(f"  escape hatches: {', '.join(report.failures)}")

# A star/triangle coloring of K_4 padded with two unused colors: the same
# story, with every quantity still reported.
g = complete_graph(4)
coloring = EdgeColoring(
    4, {(0, 3): 1, (1, 3): 1, (2, 3): 1, (0, 1): 2, (0, 2): 2, (1, 2): 2}
)
report = audit_coloring(params, g, coloring)
print("\nstar + triangle on K_4, padded to 4 colors:")
print(f"  failed hypotheses: "
      f"{[h.name for h in report.hypotheses if not h.passed]}")
print(f"  residual vertices after removals: {report.residual_count} "
      f"(required {report.residual_required})")
print("  q-saturated loss (standard | shifted by 1/2):")
for v, (std, shifted) in sorted(report.qsat_loss.items()):
    print(f"    v{v}: {std} | {shifted}")
