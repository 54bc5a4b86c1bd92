"""Exact loss accounting: how far a graph sits below (n-1)/2 edges per vertex.

f(G) = (n-1)/2 v(G) - e(G) measures the deficit; f(v) distributes it over
vertices through the S/Q/I partition. The sum of the vertex shares never
exceeds the total, often with equality. The multicolor version F plays the
same game against k (n-1)/2 edges per vertex.
"""

from fractions import Fraction

from cmstruct import (
    EdgeColoring,
    check_F_inequality,
    check_f_inequality,
    complete_graph,
    disjoint_union,
    star_graph,
)

n = 4

for name, g in [
    ("triangle", complete_graph(3)),
    ("star K_{1,3}", star_graph(3)),
    ("two triangles", disjoint_union([complete_graph(3)] * 2)),
]:
    holds, ledger = check_f_inequality(g, n)
    assert holds
    print(f"{name}: f(G) = {ledger.total}, sum f(v) = {ledger.vertex_sum}"
          f"{'  (equality)' if ledger.total == ledger.vertex_sum else ''}")
    for v in sorted(ledger.per_vertex):
        print(f"    v{v} [{ledger.classes[v]}] -> {ledger.per_vertex[v]}")

# Two colors on K_4: a red star at vertex 3 and a blue triangle on the rest.
# No color has a connected matching of two edges, so the ledger applies.
g = complete_graph(4)
coloring = EdgeColoring(
    2, {(0, 3): 1, (1, 3): 1, (2, 3): 1, (0, 1): 2, (0, 2): 2, (1, 2): 2}
)
holds, ledger = check_F_inequality(g, coloring, n)
assert holds
print(f"\nstar + triangle on K_4: F(G) = {ledger.total}, "
      f"sum F(v) = {ledger.vertex_sum}")
for v in sorted(ledger.per_vertex):
    print(f"    v{v} [{ledger.classes[v]}] -> {ledger.per_vertex[v]}")

# The vertex shares always stay exact rationals with denominator 1, 2 or 4.
assert all(
    Fraction(x).denominator in (1, 2, 4) for x in ledger.per_vertex.values()
)
