"""Automorphism groups by pruned backtracking, and brute-force isomorphism.

Groups are fully enumerated: the instances in scope have at most a few
thousand automorphisms, and an explicit element list makes stabilizer
checks exact and trivial to reason about.  Elements are permutations in
one-line image notation (tuples), returned in lexicographic order.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional

from .graph import Graph

Permutation = tuple[int, ...]


class BudgetExceeded(RuntimeError):
    """A configured size or enumeration bound was hit."""


def identity(n: int) -> Permutation:
    return tuple(range(n))


def compose(p: Permutation, q: Permutation) -> Permutation:
    """p after q: the image of v is p[q[v]]."""
    return tuple(p[x] for x in q)


def inverse(p: Permutation) -> Permutation:
    inv = [0] * len(p)
    for v, w in enumerate(p):
        inv[w] = v
    return tuple(inv)


def is_automorphism(graph: Graph, p: Permutation) -> bool:
    """True iff p maps edges to edges (and therefore non-edges to non-edges).

    Because p is a bijection, mapping every edge onto an edge already
    forces non-edges onto non-edges.
    """
    if len(p) != graph.n:
        raise ValueError("permutation length does not match vertex count")
    if sorted(p) != list(range(graph.n)):
        raise ValueError("not a permutation of the vertex set")
    nbr = graph.neighbor_sets
    return all(p[v] in nbr[p[u]] for u, v in graph.edges)


@dataclass(frozen=True)
class AutomorphismGroup:
    """Fully enumerated automorphism group of a graph on n vertices."""

    n: int
    elements: tuple[Permutation, ...]

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def is_trivial(self) -> bool:
        return self.order == 1

    def __iter__(self) -> Iterator[Permutation]:
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, p: Permutation) -> bool:
        return tuple(p) in set(self.elements)


def iter_automorphisms(graph: Graph) -> Iterator[Permutation]:
    """Yield every automorphism in lexicographic image order.

    Depth-first extension of a partial vertex map in fixed vertex order,
    pruning candidates on degree equality (equivalently closed-neighborhood
    size) and on adjacency consistency with every previously mapped vertex.
    The identity is always the first permutation yielded.
    """
    n = graph.n
    if n == 0:
        yield ()
        return
    nbr = graph.neighbor_sets
    deg = [graph.degree(v) for v in range(n)]
    by_degree: dict[int, list[int]] = {}
    for v in range(n):
        by_degree.setdefault(deg[v], []).append(v)

    image = [-1] * n
    used = [False] * n

    def extend(v: int) -> Iterator[Permutation]:
        if v == n:
            yield tuple(image)
            return
        v_nbrs = nbr[v]
        for w in by_degree[deg[v]]:
            if used[w]:
                continue
            w_nbrs = nbr[w]
            ok = True
            for u in range(v):
                if (u in v_nbrs) != (image[u] in w_nbrs):
                    ok = False
                    break
            if ok:
                image[v] = w
                used[w] = True
                yield from extend(v + 1)
                used[w] = False

    yield from extend(0)


def automorphism_group(
    graph: Graph,
    *,
    max_vertices: int = 20,
    max_order: Optional[int] = None,
) -> AutomorphismGroup:
    """Enumerate Aut(graph), raising BudgetExceeded beyond the given bounds."""
    if graph.n > max_vertices:
        raise BudgetExceeded(
            f"graph has {graph.n} vertices, above the automorphism bound {max_vertices}"
        )
    elements = []
    for p in iter_automorphisms(graph):
        elements.append(p)
        if max_order is not None and len(elements) > max_order:
            raise BudgetExceeded(
                f"automorphism group larger than the order budget {max_order}"
            )
    return AutomorphismGroup(graph.n, tuple(elements))


def has_nontrivial_automorphism(graph: Graph, *, max_vertices: int = 20) -> bool:
    """True iff some non-identity automorphism exists; stops at the first."""
    if graph.n > max_vertices:
        raise BudgetExceeded(
            f"graph has {graph.n} vertices, above the automorphism bound {max_vertices}"
        )
    ident = identity(graph.n)
    for p in iter_automorphisms(graph):
        if p != ident:
            return True
    return False


def group_equal(a: AutomorphismGroup, b: AutomorphismGroup) -> bool:
    """Set equality of the two element collections."""
    if a.n != b.n:
        raise ValueError("groups act on different vertex counts")
    return set(a.elements) == set(b.elements)


def find_isomorphism(g: Graph, h: Graph) -> Optional[Permutation]:
    """Backtracking search for a vertex bijection g -> h mapping edges onto edges.

    Returns the first isomorphism found (lexicographic image order) or None.
    """
    n = g.n
    if n != h.n or g.edge_count != h.edge_count:
        return None
    deg_g = [g.degree(v) for v in range(n)]
    deg_h = [h.degree(v) for v in range(n)]
    if sorted(deg_g) != sorted(deg_h):
        return None
    h_by_degree: dict[int, list[int]] = {}
    for v in range(n):
        h_by_degree.setdefault(deg_h[v], []).append(v)
    g_nbr = g.neighbor_sets
    h_nbr = h.neighbor_sets

    image = [-1] * n
    used = [False] * n

    def extend(v: int) -> Optional[Permutation]:
        if v == n:
            return tuple(image)
        v_nbrs = g_nbr[v]
        for w in h_by_degree.get(deg_g[v], ()):
            if used[w]:
                continue
            w_nbrs = h_nbr[w]
            ok = True
            for u in range(v):
                if (u in v_nbrs) != (image[u] in w_nbrs):
                    ok = False
                    break
            if ok:
                image[v] = w
                used[w] = True
                found = extend(v + 1)
                if found is not None:
                    return found
                used[w] = False
        return None

    if n == 0:
        return ()
    return extend(0)


def is_isomorphic(g: Graph, h: Graph) -> bool:
    return find_isomorphism(g, h) is not None
