"""Maximum matching and deficiency witnesses for general graphs.

The matching routine is an array-based Edmonds blossom search: repeated BFS
for augmenting paths with blossom contraction tracked through ``base``
pointers, O(V^3) overall. Vertices are always scanned in ascending id order,
so results are deterministic for a fixed input.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .graphs import Graph, components


@dataclass(frozen=True)
class Matching:
    """Set of pairwise vertex-disjoint edges."""

    edges: frozenset[tuple[int, int]]

    @property
    def size(self) -> int:
        return len(self.edges)

    @property
    def covered(self) -> frozenset[int]:
        return frozenset(v for e in self.edges for v in e)


@dataclass(frozen=True)
class DeficiencyWitness:
    """Vertex set certifying how many vertices every maximum matching misses.

    ``deficiency == len(odd_components) - len(witness)`` and also equals
    ``v(G) - 2*matching_number``; both are asserted at construction time.
    """

    witness: frozenset[int]
    deficiency: int
    odd_components: tuple[frozenset[int], ...]


def _max_matching_mates(adj: tuple[tuple[int, ...], ...] | list[list[int]],
                        stop_at: int | None = None) -> list[int]:
    """Mate array of a maximum matching (-1 for exposed vertices).

    ``stop_at`` ends the search early once the matching reaches that many
    edges; the partial matching returned is then of size exactly ``stop_at``.
    """
    n = len(adj)
    mate = [-1] * n

    # Greedy warm start keeps the number of augmentation phases low.
    size = 0
    for v in range(n):
        if mate[v] == -1:
            for u in adj[v]:
                if mate[u] == -1:
                    mate[v] = u
                    mate[u] = v
                    size += 1
                    break
        if stop_at is not None and size >= stop_at:
            return mate

    parent = [-1] * n
    base = list(range(n))
    in_queue = [False] * n

    def lowest_common_base(a: int, b: int) -> int:
        seen = [False] * n
        while True:
            a = base[a]
            seen[a] = True
            if mate[a] == -1:
                break
            a = parent[mate[a]]
        while True:
            b = base[b]
            if seen[b]:
                return b
            b = parent[mate[b]]

    def mark_blossom_path(v: int, root_base: int, child: int, in_blossom: list[bool]):
        while base[v] != root_base:
            in_blossom[base[v]] = True
            in_blossom[base[mate[v]]] = True
            parent[v] = child
            child = mate[v]
            v = parent[mate[v]]

    def augment_from(root: int) -> bool:
        for i in range(n):
            parent[i] = -1
            base[i] = i
            in_queue[i] = False
        queue = deque([root])
        in_queue[root] = True
        while queue:
            v = queue.popleft()
            for to in adj[v]:
                if base[v] == base[to] or mate[v] == to:
                    continue
                if to == root or (mate[to] != -1 and parent[mate[to]] != -1):
                    # Odd cycle through two even-level vertices: contract it.
                    root_base = lowest_common_base(v, to)
                    in_blossom = [False] * n
                    mark_blossom_path(v, root_base, to, in_blossom)
                    mark_blossom_path(to, root_base, v, in_blossom)
                    for i in range(n):
                        if in_blossom[base[i]]:
                            base[i] = root_base
                            if not in_queue[i]:
                                in_queue[i] = True
                                queue.append(i)
                elif parent[to] == -1:
                    parent[to] = v
                    if mate[to] == -1:
                        # Augmenting path found: flip matched edges back to root.
                        u = to
                        while u != -1:
                            pv = parent[u]
                            next_u = mate[pv]
                            mate[u] = pv
                            mate[pv] = u
                            u = next_u
                        return True
                    if not in_queue[mate[to]]:
                        in_queue[mate[to]] = True
                        queue.append(mate[to])
        return False

    for v in range(n):
        if stop_at is not None and size >= stop_at:
            break
        if mate[v] == -1 and augment_from(v):
            size += 1
    return mate


def matching_number(g: Graph) -> int:
    mate = _max_matching_mates(g.adjacency)
    return sum(1 for v, m in enumerate(mate) if m > v)


def maximum_matching(g: Graph) -> Matching:
    """A maximum matching of ``g``, deterministic for fixed input."""
    mate = _max_matching_mates(g.adjacency)
    return Matching(frozenset((v, m) for v, m in enumerate(mate) if m > v))


def matching_of_size(g: Graph, target: int) -> Matching | None:
    """A matching with exactly ``target`` edges, or None if none exists."""
    mate = _max_matching_mates(g.adjacency, stop_at=target)
    edges = sorted((v, m) for v, m in enumerate(mate) if m > v)
    if len(edges) < target:
        return None
    return Matching(frozenset(edges[:target]))


def odd_components(g: Graph, removed: frozenset[int] | set[int]) -> list[frozenset[int]]:
    """Odd-order components of ``g`` minus a vertex set.

    Sorted by size descending, then by smallest contained vertex id.
    """
    removed = set(removed)
    seen = set(removed)
    comps: list[frozenset[int]] = []
    for start in range(g.vertex_count):
        if start in seen:
            continue
        stack = [start]
        seen.add(start)
        comp = []
        while stack:
            v = stack.pop()
            comp.append(v)
            for u in g.neighbors(v):
                if u not in seen:
                    seen.add(u)
                    stack.append(u)
        if len(comp) % 2 == 1:
            comps.append(frozenset(comp))
    comps.sort(key=lambda c: (-len(c), min(c)))
    return comps


def tutte_berge(g: Graph) -> DeficiencyWitness:
    """Deficiency of ``g`` with an explicit witness set.

    The witness is the set of vertices outside D with a neighbor in D, where
    D collects every vertex missed by at least one maximum matching (v is in
    D iff deleting it leaves the matching number unchanged). The returned
    set attains the maximum of odd_components(G-S) - |S| over all S.
    """
    nu = matching_number(g)
    deficiency = g.vertex_count - 2 * nu
    inessential = set()
    for v in range(g.vertex_count):
        adj_minus = [
            tuple(u for u in g.neighbors(w) if u != v) if w != v else ()
            for w in range(g.vertex_count)
        ]
        mates = _max_matching_mates(adj_minus)
        if sum(1 for w, m in enumerate(mates) if m > w) == nu:
            inessential.add(v)
    witness = frozenset(
        u
        for v in inessential
        for u in g.neighbors(v)
        if u not in inessential
    )
    odd = odd_components(g, witness)
    assert len(odd) - len(witness) == deficiency, "witness certificate failed"
    return DeficiencyWitness(witness, deficiency, tuple(odd))


def connected_matching_number(g: Graph) -> tuple[int, frozenset[int]]:
    """Largest matching living inside a single component, with that component.

    Ties are broken toward the component containing the smallest vertex id.
    """
    best = 0
    best_comp: frozenset[int] = frozenset()
    first = True
    for comp in components(g).vertex_sets():
        sub, _ = g.induced(comp)
        nu = matching_number(sub)
        if first or nu > best:
            best = nu
            best_comp = comp
            first = False
    return best, best_comp
