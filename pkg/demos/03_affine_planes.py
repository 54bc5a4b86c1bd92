"""Affine-plane colorings: small components in every color.

Over the field with q elements, the q^2 + q lines of the affine plane fall
into q + 1 parallel classes. Coloring each pair of points by the class of
the line through them colors K_{q^2} with q + 1 colors, and every color
class is q disjoint q-cliques. For even n with n/2 > floor(q/2), no color
can host a connected matching of n/2 edges.
"""

from cmstruct import color_class, components, find_mono_cm
from cmstruct.constructions import affine_plane_coloring

for q in (2, 3, 5):
    g, coloring = affine_plane_coloring(q)
    print(f"q = {q}: K_{q * q} with {coloring.color_count} colors")
    for color in range(1, coloring.color_count + 1):
        sizes = components(color_class(g, coloring, color)).sizes
        assert sizes == tuple([q] * q)
    print(f"  every color class: {q} components of exactly {q} vertices")
    n = q // 2 * 2 + 2
    witness = find_mono_cm(g, coloring, n)
    print(f"  connected matching of size {n // 2}: "
          f"{'none in any color' if witness is None else witness}")
    print(f"  edges per color: {len(coloring.edges_of_color(1))}, "
          f"total {g.edge_count}")
    print()
