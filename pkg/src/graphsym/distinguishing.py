"""Distinguishing vertex and edge labelings and their minimum label counts.

A labeling is distinguishing when no non-identity automorphism preserves
every label, i.e. the stabilizer of the labeling inside the automorphism
group is trivial.  The minimum over vertex labelings is the distinguishing
number, over edge labelings the distinguishing index.

Exactness contract: below the configured exhaustive budgets the search
space for every smaller label count is exhausted and the result is exact.
Above them the result is a certified upper bound: the returned witness is
always verified against the full automorphism group, and a nontrivial
group certifies the lower bound 2.  A certified value of 2 is therefore
tight (value 1 happens exactly for asymmetric graphs).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterator, Optional, Sequence

from .graph import Graph
from .symmetry import AutomorphismGroup, Permutation, automorphism_group, identity

EXACT = "exact"
CERTIFIED_UPPER = "certified-upper"
UNDEFINED = "undefined"

REASON_ASYMMETRIC = "asymmetric"
REASON_NONTRIVIAL_AUT = "nontrivial-aut"
REASON_EXHAUSTED = "exhausted-smaller-r"


@dataclass(frozen=True)
class Budgets:
    """Search budgets shared by the solvers, the harness, and the CLI.

    exact_vertices / exact_edges: largest instance for which labelings are
    enumerated exhaustively (exact mode).  aut_vertices / aut_max_order:
    automorphism enumeration bounds.  hamiltonian_vertices: traceability
    search bound.  trials: randomized witness budget per label count.
    """

    exact_vertices: int = 12
    exact_edges: int = 14
    aut_vertices: int = 20
    aut_max_order: Optional[int] = 10000
    hamiltonian_vertices: int = 16
    trials: int = 10000
    seed: int = 0


DEFAULT_BUDGETS = Budgets()


@dataclass(frozen=True)
class VertexLabeling:
    """Assignment of a label in 1..r to every vertex, in vertex order."""

    labels: tuple[int, ...]
    r: int

    def __post_init__(self) -> None:
        if self.r < 1:
            raise ValueError("label count must be at least 1")
        if any(not 1 <= lab <= self.r for lab in self.labels):
            raise ValueError("label out of range 1..r")


@dataclass(frozen=True)
class EdgeLabeling:
    """Assignment of a label in 1..r to every edge, keyed by (min, max) pairs."""

    labels: dict[tuple[int, int], int]
    r: int

    def __post_init__(self) -> None:
        if self.r < 1:
            raise ValueError("label count must be at least 1")
        for (u, v), lab in self.labels.items():
            if u >= v:
                raise ValueError(f"edge key {(u, v)} not in (min, max) form")
            if not 1 <= lab <= self.r:
                raise ValueError("label out of range 1..r")


@dataclass(frozen=True)
class DistinguishingResult:
    """Outcome of a distinguishing number or index computation.

    value is the exact minimum (mode "exact") or a witnessed upper bound
    (mode "certified-upper"); lower_bound_reason certifies the matching
    lower bound.  The edge-labeling singularity (a non-identity
    automorphism that fixes every edge, as in K_2) is reported with mode
    "undefined" and no value.
    """

    value: Optional[int]
    mode: str
    witness: object
    lower_bound_reason: Optional[str]

    @property
    def bounds(self) -> tuple[int, int]:
        """Certified (lower, upper) bracket for the true value."""
        if self.mode == EXACT:
            return (self.value, self.value)
        if self.mode == CERTIFIED_UPPER:
            return (2, self.value)
        raise ValueError("undefined result has no bounds")

    @property
    def is_tight(self) -> bool:
        """True when the reported value is provably the exact minimum."""
        if self.mode == EXACT:
            return True
        return self.mode == CERTIFIED_UPPER and self.value == 2

    def witness_json(self):
        if isinstance(self.witness, VertexLabeling):
            return {"kind": "vertex", "labels": list(self.witness.labels), "r": self.witness.r}
        if isinstance(self.witness, EdgeLabeling):
            triples = sorted([u, v, lab] for (u, v), lab in self.witness.labels.items())
            return {"kind": "edge", "labels": triples, "r": self.witness.r}
        return None

    def to_json_dict(self) -> dict:
        return {
            "value": self.value,
            "mode": self.mode,
            "witness": self.witness_json(),
            "reason": self.lower_bound_reason,
        }


def is_distinguishing_vertex(
    graph: Graph, group: AutomorphismGroup, labeling: VertexLabeling
) -> bool:
    """True iff no non-identity automorphism preserves all vertex labels."""
    if group.n != graph.n:
        raise ValueError("group does not act on this graph")
    if len(labeling.labels) != graph.n:
        raise ValueError("labeling length does not match vertex count")
    rows = _nonidentity_rows(group.elements, identity(graph.n))
    return not _preserved_by_some(labeling.labels, rows)


def is_distinguishing_edge(
    graph: Graph, group: AutomorphismGroup, labeling: EdgeLabeling
) -> bool:
    """True iff no non-identity automorphism preserves all edge labels.

    The group acts on edges through vertex images; an element mapping an
    edge outside the edge set would mean the group is not a group of
    automorphisms and is treated as an internal fault.
    """
    if group.n != graph.n:
        raise ValueError("group does not act on this graph")
    if set(labeling.labels) != set(graph.edges):
        raise ValueError("labeling domain is not exactly the edge set")
    flat = tuple(labeling.labels[e] for e in graph.edges)
    ident = identity(graph.n)
    rows = [row for p, row in zip(group.elements, _edge_images(graph, group.elements))
            if p != ident]
    return not _preserved_by_some(flat, rows)


def _edge_images(graph: Graph, elements: Sequence[Permutation]) -> list[tuple[int, ...]]:
    """For each group element, the induced permutation of edge positions."""
    index = {e: i for i, e in enumerate(graph.edges)}
    out = []
    for p in elements:
        row = []
        for (u, v) in graph.edges:
            a, b = p[u], p[v]
            key = (a, b) if a < b else (b, a)
            if key not in index:
                raise RuntimeError(
                    "internal fault: group element maps an edge outside the edge set"
                )
            row.append(index[key])
        out.append(tuple(row))
    return out


def _nonidentity_rows(
    elements: Sequence[Permutation], ident: Permutation
) -> list[Permutation]:
    return [p for p in elements if p != ident]


def _preserved_by_some(labels: Sequence[int], rows: Sequence[tuple[int, ...]]) -> bool:
    """Whether some row (a permutation of label positions) preserves all labels."""
    for row in rows:
        for i, lab in enumerate(labels):
            if labels[row[i]] != lab:
                break
        else:
            return True
    return False


def _first_preserving_row(
    labels: Sequence[int], rows: Sequence[tuple[int, ...]]
) -> Optional[tuple[int, ...]]:
    for row in rows:
        for i, lab in enumerate(labels):
            if labels[row[i]] != lab:
                break
        else:
            return row
    return None


def _growth_strings(n: int, r: int) -> Iterator[tuple[int, ...]]:
    """Length-n label tuples using exactly the labels 1..r, first occurrences
    in increasing order (one canonical representative per palette renaming),
    in lexicographic order.  Position 0 always carries label 1."""
    if n < r:
        return

    prefix: list[int] = []

    def extend(used: int) -> Iterator[tuple[int, ...]]:
        i = len(prefix)
        if i == n:
            if used == r:
                yield tuple(prefix)
            return
        cap = min(used + 1, r)
        for lab in range(1, cap + 1):
            now = used + 1 if lab == used + 1 else used
            if now + (n - i - 1) >= r:
                prefix.append(lab)
                yield from extend(now)
                prefix.pop()

    yield from extend(0)


def _normalize_labels(labels: Sequence[int]) -> tuple[tuple[int, ...], int]:
    """Relabel to 1..k by first occurrence; preserves the stabilizer."""
    seen: dict[int, int] = {}
    out = []
    for lab in labels:
        if lab not in seen:
            seen[lab] = len(seen) + 1
        out.append(seen[lab])
    return tuple(out), len(seen)


def _exhaustive_minimum(
    size: int, rows: Sequence[tuple[int, ...]]
) -> tuple[int, tuple[int, ...]]:
    """Smallest label count with a distinguishing assignment of `size`
    positions, by canonical enumeration; returns the first witness.

    Requires that the all-distinct assignment is distinguishing (true for
    vertex labelings always, for edge labelings once the edge-fixing
    kernel is known trivial), so the search terminates at r = size.
    """
    for r in range(2, size + 1):
        for labels in _growth_strings(size, r):
            if not _preserved_by_some(labels, rows):
                return r, labels
    raise AssertionError("the all-distinct labeling must be distinguishing")


def _randomized_minimum(
    size: int, rows: Sequence[tuple[int, ...]], budgets: Budgets
) -> tuple[int, tuple[int, ...]]:
    """Witness search above the exhaustive budget.

    Seeded random labelings with greedy repair: while some automorphism
    preserves the labeling, flip the label at the first position it moves.
    Every stabilizer evaluation counts against the trial budget, applied
    afresh per label count r.  At r = size the all-distinct labeling is
    tried first, which guarantees termination.
    """
    rng = random.Random(budgets.seed)
    for r in range(2, size + 1):
        trials = 0
        pending: list[list[int]] = []
        if r == size:
            pending.append(list(range(1, size + 1)))
        while trials < budgets.trials or pending:
            labels = pending.pop() if pending else [rng.randint(1, r) for _ in range(size)]
            trials += 1
            row = _first_preserving_row(labels, rows)
            steps = 0
            while row is not None and trials < budgets.trials and steps < 2 * size:
                moved = next(i for i in range(size) if row[i] != i)
                labels[moved] = labels[moved] % r + 1
                trials += 1
                steps += 1
                row = _first_preserving_row(labels, rows)
            if row is None:
                normalized, distinct = _normalize_labels(labels)
                return distinct, normalized
    raise AssertionError("the all-distinct labeling must be distinguishing")


def distinguishing_number(graph: Graph, budgets: Budgets = DEFAULT_BUDGETS) -> DistinguishingResult:
    """Least number of vertex labels admitting a distinguishing labeling.

    Exact for graphs within budgets.exact_vertices; otherwise a certified
    upper bound with a verified witness (tight when the value is 2).
    """
    group = automorphism_group(
        graph, max_vertices=budgets.aut_vertices, max_order=budgets.aut_max_order
    )
    if group.is_trivial:
        witness = VertexLabeling((1,) * graph.n, 1)
        return DistinguishingResult(1, EXACT, witness, REASON_ASYMMETRIC)
    rows = _nonidentity_rows(group.elements, identity(graph.n))
    if graph.n <= budgets.exact_vertices:
        value, labels = _exhaustive_minimum(graph.n, rows)
        reason = REASON_NONTRIVIAL_AUT if value == 2 else REASON_EXHAUSTED
        return DistinguishingResult(value, EXACT, VertexLabeling(labels, value), reason)
    value, labels = _randomized_minimum(graph.n, rows, budgets)
    return DistinguishingResult(
        value, CERTIFIED_UPPER, VertexLabeling(labels, value), REASON_NONTRIVIAL_AUT
    )


def distinguishing_index(graph: Graph, budgets: Budgets = DEFAULT_BUDGETS) -> DistinguishingResult:
    """Least number of edge labels admitting a distinguishing edge labeling.

    Undefined (dedicated outcome, not an error) when some non-identity
    automorphism fixes every edge as a set; among connected graphs that
    happens only for K_2, whose swap fixes the unique edge.
    """
    if graph.edge_count == 0:
        raise ValueError("distinguishing index needs at least one edge")
    group = automorphism_group(
        graph, max_vertices=budgets.aut_vertices, max_order=budgets.aut_max_order
    )
    if group.is_trivial:
        witness = EdgeLabeling({e: 1 for e in graph.edges}, 1)
        return DistinguishingResult(1, EXACT, witness, REASON_ASYMMETRIC)
    ident = identity(graph.n)
    m = graph.edge_count
    ident_row = tuple(range(m))
    rows = [row for p, row in zip(group.elements, _edge_images(graph, group.elements))
            if p != ident]
    if any(row == ident_row for row in rows):
        return DistinguishingResult(None, UNDEFINED, None, None)

    def wrap(flat: tuple[int, ...], r: int) -> EdgeLabeling:
        return EdgeLabeling(dict(zip(graph.edges, flat)), r)

    if m <= budgets.exact_edges:
        value, flat = _exhaustive_minimum(m, rows)
        reason = REASON_NONTRIVIAL_AUT if value == 2 else REASON_EXHAUSTED
        return DistinguishingResult(value, EXACT, wrap(flat, value), reason)
    value, flat = _randomized_minimum(m, rows, budgets)
    return DistinguishingResult(
        value, CERTIFIED_UPPER, wrap(flat, value), REASON_NONTRIVIAL_AUT
    )
