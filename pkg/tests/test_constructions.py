import random

import pytest

from cmstruct import color_class, components, find_mono_cm
from cmstruct.constructions import (
    affine_plane_coloring,
    bounded_component_coloring,
    disjoint_cliques_coloring,
    random_coloring,
)
from cmstruct.errors import NotPrimeError
from cmstruct.graphs import complete_graph


def test_affine_q2_gives_three_perfect_matchings():
    g, coloring = affine_plane_coloring(2)
    assert g.vertex_count == 4 and coloring.color_count == 3
    for color in range(1, 4):
        cls = color_class(g, coloring, color)
        assert components(cls).sizes == (2, 2)


def test_affine_q3_gives_triangle_classes():
    g, coloring = affine_plane_coloring(3)
    assert g.vertex_count == 9 and coloring.color_count == 4
    for color in range(1, 5):
        assert components(color_class(g, coloring, color)).sizes == (3, 3, 3)


def test_affine_rejects_prime_powers():
    with pytest.raises(NotPrimeError):
        affine_plane_coloring(4)


def test_affine_classes_partition_all_edges():
    for q in (2, 3, 5):
        g, coloring = affine_plane_coloring(q)
        assert set(coloring.assignment) == set(g.edges)
        per_line = q * (q - 1) // 2
        for color in range(1, q + 2):
            assert len(coloring.edges_of_color(color)) == q * per_line


def test_affine_avoids_connected_matchings():
    for q in (2, 3):
        g, coloring = affine_plane_coloring(q)
        n = q + 1 if (q + 1) % 2 == 0 else q + 2
        assert n // 2 > q // 2
        assert find_mono_cm(g, coloring, n) is None


def test_disjoint_cliques_examples():
    coloring = disjoint_cliques_coloring(4, 3, 2)
    assert coloring is not None
    g = complete_graph(4)
    for color in range(1, 4):
        assert components(color_class(g, coloring, color)).sizes == (2, 2)

    coloring = disjoint_cliques_coloring(3, 1, 3)
    assert coloring is not None
    assert set(coloring.assignment.values()) == {1}
    assert len(coloring.assignment) == 3

    assert disjoint_cliques_coloring(5, 1, 2) is None


def test_disjoint_cliques_respects_block_size():
    rng = random.Random(4)
    for _ in range(30):
        n = rng.randint(2, 10)
        k = rng.randint(1, 5)
        cap = rng.randint(1, 4)
        coloring = disjoint_cliques_coloring(n, k, cap, seed=rng.randrange(100))
        if coloring is None:
            continue
        g = complete_graph(n)
        assert set(coloring.assignment) == set(g.edges)
        for color in range(1, k + 1):
            cls = color_class(g, coloring, color)
            for comp in components(cls).vertex_sets():
                sub, _ = cls.induced(comp)
                if sub.edge_count:
                    assert len(comp) <= cap
                    # each block is a clique
                    assert sub.edge_count == len(comp) * (len(comp) - 1) // 2


def test_random_coloring_determinism():
    a = random_coloring(10, 3, seed=42)
    b = random_coloring(10, 3, seed=42)
    assert a == b
    assert a != random_coloring(10, 3, seed=43)


def test_random_coloring_single_color():
    coloring = random_coloring(4, 1, seed=5)
    assert set(coloring.assignment.values()) == {1}
    assert len(coloring.assignment) == 6


def test_bounded_component_coloring_caps_components():
    rng = random.Random(99)
    for _ in range(25):
        seed = rng.randrange(10**6)
        g, coloring = bounded_component_coloring(14, 4, 4, seed=seed)
        assert set(coloring.assignment) == set(g.edges)
        for color in range(1, 5):
            sizes = components(color_class(g, coloring, color)).sizes
            touched = [
                len(comp)
                for comp in components(color_class(g, coloring, color)).vertex_sets()
                if len(comp) > 1
            ]
            assert all(t <= 4 for t in touched), (seed, sizes)
        again, coloring2 = bounded_component_coloring(14, 4, 4, seed=seed)
        assert (again, coloring2) == (g, coloring)
