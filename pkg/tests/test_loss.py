import random
from fractions import Fraction

import pytest

from cmstruct import (
    EdgeColoring,
    F_graph,
    F_vertex,
    Graph,
    VertexClass,
    check_F_inequality,
    check_f_inequality,
    classify_vertices,
    color_class,
    complete_graph,
    component_partitions,
    disjoint_union,
    f_graph,
    f_vertex,
    star_graph,
)
from cmstruct.constructions import affine_plane_coloring
from cmstruct.errors import (
    HasConnectedMatchingError,
    HasMonochromaticMatchingError,
    InvalidPartitionError,
)

from .generators import avoiding_coloring, avoiding_graph


def star_triangle():
    g = complete_graph(4)
    coloring = EdgeColoring(
        2, {(0, 3): 1, (1, 3): 1, (2, 3): 1, (0, 1): 2, (0, 2): 2, (1, 2): 2}
    )
    return g, coloring


def test_f_graph_examples():
    assert f_graph(complete_graph(3), 4) == Fraction(3, 2)
    assert f_graph(Graph(1, frozenset()), 4) == Fraction(3, 2)
    assert f_graph(star_graph(3), 4) == 3


def test_f_graph_rejects_large_connected_matching():
    with pytest.raises(HasConnectedMatchingError):
        f_graph(complete_graph(4), 4)


def test_f_vertex_examples():
    g = complete_graph(3)
    values = f_vertex(g, 4, component_partitions(g, 4))
    assert values == {0: Fraction(1, 2), 1: Fraction(1, 2), 2: Fraction(1, 2)}

    g = star_graph(3)
    values = f_vertex(g, 4, component_partitions(g, 4))
    assert values[0] == Fraction(3, 4)  # center sits in S
    assert sorted(values[v] for v in (1, 2, 3)) == [0, 0, Fraction(1)]

    g = Graph(1, frozenset())
    values = f_vertex(g, 4, component_partitions(g, 4))
    assert values == {0: Fraction(3, 2)}


def test_f_vertex_rejects_bad_partitions():
    g = star_graph(3)
    parts = component_partitions(complete_graph(3), 4)
    with pytest.raises(InvalidPartitionError):
        f_vertex(g, 4, parts)


def test_check_f_examples():
    holds, ledger = check_f_inequality(complete_graph(3), 4)
    assert holds and ledger.vertex_sum == ledger.total == Fraction(3, 2)

    holds, ledger = check_f_inequality(star_graph(3), 4)
    assert holds
    assert ledger.vertex_sum == Fraction(7, 4) and ledger.total == 3

    two = disjoint_union([complete_graph(3), complete_graph(3)])
    holds, ledger = check_f_inequality(two, 4)
    assert holds and ledger.vertex_sum == ledger.total == 3


def test_classify_star_triangle():
    g, coloring = star_triangle()
    classes = classify_vertices(g, coloring, 4)
    assert classes[3] is VertexClass.STRONG
    assert classes[0] is VertexClass.Q_SATURATED
    assert classes[1] is classes[2] is VertexClass.SMALL


def test_classify_single_color_triangle():
    g = complete_graph(3)
    coloring = EdgeColoring(1, {e: 1 for e in g.edges})
    classes = classify_vertices(g, coloring, 4)
    assert set(classes.values()) == {VertexClass.Q_SATURATED}


def test_classify_two_perfect_matchings():
    g = Graph.from_edges(4, [(0, 1), (2, 3), (0, 2), (1, 3)])
    coloring = EdgeColoring(2, {(0, 1): 1, (2, 3): 1, (0, 2): 2, (1, 3): 2})
    classes = classify_vertices(g, coloring, 4)
    assert set(classes.values()) == {VertexClass.Q_SATURATED}


def test_classify_rejects_monochromatic_cm():
    g = complete_graph(4)
    coloring = EdgeColoring(1, {e: 1 for e in g.edges})
    with pytest.raises(HasMonochromaticMatchingError):
        classify_vertices(g, coloring, 4)


def test_F_examples():
    g, coloring = star_triangle()
    assert F_graph(g, coloring, 4) == 6
    values = F_vertex(g, coloring, 4)
    assert values[3] == Fraction(3, 4)
    assert values[0] == Fraction(3, 2)
    assert values[1] == values[2] == 0

    holds, ledger = check_F_inequality(g, coloring, 4)
    assert holds and ledger.vertex_sum == Fraction(9, 4) and ledger.total == 6


def test_F_reduces_to_f_for_one_color():
    g = complete_graph(3)
    coloring = EdgeColoring(1, {e: 1 for e in g.edges})
    assert F_graph(g, coloring, 4) == f_graph(g, 4)
    assert F_vertex(g, coloring, 4) == f_vertex(g, 4, component_partitions(g, 4))
    holds, ledger = check_F_inequality(g, coloring, 4)
    assert holds and ledger.vertex_sum == ledger.total == Fraction(3, 2)


def test_F_on_affine_plane():
    g, coloring = affine_plane_coloring(3)
    holds, ledger = check_F_inequality(g, coloring, 4)
    assert holds
    assert ledger.total == 4 * Fraction(3, 2) * 9 - 36


def test_additivity_and_dominance_on_random_instances():
    rng = random.Random(31)
    for _ in range(60):
        n = rng.choice((4, 6))
        g, coloring = avoiding_coloring(rng, rng.randint(4, 12), rng.randint(1, 4), n)
        total = F_graph(g, coloring, n)
        parts = sum(
            (f_graph(color_class(g, coloring, i), n)
             for i in range(1, coloring.color_count + 1)),
            Fraction(0),
        )
        assert total == parts
        values = F_vertex(g, coloring, n)
        assert all(v >= 0 for v in values.values())
        # per-vertex dominance: F(v) <= sum over colors of f_i(v)
        per_color = [
            f_vertex(
                cls := color_class(g, coloring, i),
                n,
                component_partitions(cls, n),
            )
            for i in range(1, coloring.color_count + 1)
        ]
        for v in range(g.vertex_count):
            assert values[v] <= sum(fv[v] for fv in per_color)
        classes = classify_vertices(g, coloring, n)
        assert len(classes) == g.vertex_count


def test_random_single_color_suite():
    rng = random.Random(77)
    for _ in range(150):
        n = rng.choice((4, 6, 8))
        g = avoiding_graph(rng, n)
        holds, ledger = check_f_inequality(g, n)
        assert holds
        assert all(v >= 0 for v in ledger.per_vertex.values())
        assert ledger.total >= 0


def test_random_multicolor_suite():
    rng = random.Random(78)
    for _ in range(60):
        n = rng.choice((4, 6))
        g, coloring = avoiding_coloring(rng, rng.randint(3, 14), rng.randint(1, 4), n)
        holds, ledger = check_F_inequality(g, coloring, n)
        assert holds
        assert all(v >= 0 for v in ledger.per_vertex.values())
