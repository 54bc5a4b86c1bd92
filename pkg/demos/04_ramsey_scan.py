"""Exact desk-scale Ramsey numbers for connected matchings.

R_cm(k, n) is the smallest N such that every k-coloring of K_N contains a
monochromatic connected matching of n/2 edges. The scan searches each N for
an avoiding coloring; once the (symmetry-reduced) space is exhausted with
no avoider, that N is the answer and the avoider found at N - 1 is the
certificate for the lower bound.
"""

from cmstruct import complete_graph, find_mono_cm, ramsey_cm, serialize

for k, n in [(1, 4), (2, 2), (2, 4)]:
    result = ramsey_cm(k, n, n_max=8)
    assert result.status == "exact"
    print(f"R_cm({k}, {n}) = {result.value}  "
          f"({result.nodes} search nodes)")
    if result.avoider is not None and result.value >= 2:
        size = result.value - 1
        assert find_mono_cm(complete_graph(size), result.avoider, n) is None
        print(f"  avoider on K_{size}:")
        for line in serialize(complete_graph(size), result.avoider).splitlines():
            print(f"    {line}")
    print()

# Scaling up one notch: with three colors the scan still certifies quickly.
result = ramsey_cm(3, 4, n_max=8, node_budget=10**7)
print(f"R_cm(3, 4): status={result.status}, value={result.value}, "
      f"lower bound {result.lower_bound} ({result.nodes} nodes)")
