"""Executable verification of the product symmetry bounds and labelings.

Every check builds concrete instances, runs the constructive labeling or
computes both sides of the stated inequality, and returns a BoundReport.
Hypothesis violations and budget limits are reported as not-applicable,
never silently skipped and never conflated with a falsified bound: a check
fails only on a hypothesis-satisfying counterexample.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from math import prod
from typing import Iterable, Optional, Sequence, Union

from .distinguishing import (
    CERTIFIED_UPPER,
    DEFAULT_BUDGETS,
    EXACT,
    UNDEFINED,
    Budgets,
    DistinguishingResult,
    EdgeLabeling,
    VertexLabeling,
    distinguishing_index,
    distinguishing_number,
    is_distinguishing_edge,
    is_distinguishing_vertex,
)
from .graph import Graph, complete, cycle, is_connected, path
from .products import cartesian_product, strong_power, strong_product
from .structure import (
    declared_strong_prime,
    hamiltonian_path_exists,
    is_complete_graph,
    is_cycle_graph,
    is_path_graph,
    is_s_thin,
    is_spanning_subgraph,
)
from .symmetry import (
    AutomorphismGroup,
    BudgetExceeded,
    automorphism_group,
    group_equal,
    is_isomorphic,
)

PASS = "pass"
FAIL = "fail"
NOT_APPLICABLE = "not-applicable"

NUMBER_SANDWICH = "number-sandwich"
LAYERED_LABELING = "layered-labeling"
NUMBER_EQUALITY = "number-equality-sthin"
POWER_NUMBER = "power-number-two"
SEQUENCE_LABELING = "sequence-labeling-bound"
INDEX_MONOTONE = "index-bound-plus-one"
INDEX_STHIN = "index-bound-sthin"
INDEX_LIFT = "index-lift"
TRACEABLE_INDEX = "traceable-index-two"


@dataclass(frozen=True)
class SequenceFamily:
    """All length-n sequences over the alphabet 1..l, in lexicographic order."""

    alphabet: int
    length: int

    @property
    def size(self) -> int:
        return self.alphabet ** self.length

    def __iter__(self):
        return iter(itertools.product(range(1, self.alphabet + 1), repeat=self.length))


def min_alphabet(length: int, target: int) -> int:
    """Smallest l >= 1 with l**length >= target, by integer search."""
    if length < 1:
        raise ValueError("sequence length must be positive")
    l = 1
    while l ** length < target:
        l += 1
    return l


def min_exponent(base: int, target: int) -> Optional[int]:
    """Smallest t >= 0 with base**t >= target (a ceiling-log reading)."""
    if base < 2:
        return None
    t = 0
    while base ** t < target:
        t += 1
    return t


@dataclass(frozen=True)
class BoundReport:
    """Outcome of one verification check on one concrete instance."""

    check: str
    instance: str
    hypotheses: dict[str, bool]
    quantities: dict[str, object]
    status: str
    witness: object = None
    notes: tuple[str, ...] = ()

    @property
    def passed(self) -> bool:
        return self.status == PASS

    @property
    def applicable(self) -> bool:
        return self.status != NOT_APPLICABLE

    def to_json_dict(self) -> dict:
        return {
            "check": self.check,
            "instance": self.instance,
            "hypotheses": dict(self.hypotheses),
            "quantities": dict(self.quantities),
            "status": self.status,
            "witness": _labeling_json(self.witness),
            "notes": list(self.notes),
        }


def _labeling_json(obj):
    if isinstance(obj, VertexLabeling):
        return {"kind": "vertex", "labels": list(obj.labels), "r": obj.r}
    if isinstance(obj, EdgeLabeling):
        return {
            "kind": "edge",
            "labels": sorted([u, v, lab] for (u, v), lab in obj.labels.items()),
            "r": obj.r,
        }
    return None


def graph_name(g: Graph) -> str:
    """Family shorthand when recognizable, else a generic size tag."""
    if g.n == 1:
        return "K1"
    if is_complete_graph(g):
        return f"K{g.n}"
    if is_cycle_graph(g):
        return f"C{g.n}"
    if is_path_graph(g):
        return f"P{g.n}"
    return f"graph(n={g.n},m={g.edge_count})"


# Automorphism groups and distinguishing values are pure functions of the
# graph and the budgets, so harness runs memoize them (including budget
# failures, which would otherwise redo the aborted enumeration).
_aut_cache: dict = {}
_number_cache: dict = {}
_index_cache: dict = {}


def _aut(g: Graph, budgets: Budgets) -> AutomorphismGroup:
    key = (g, budgets.aut_vertices, budgets.aut_max_order)
    hit = _aut_cache.get(key)
    if hit is None:
        try:
            hit = automorphism_group(
                g, max_vertices=budgets.aut_vertices, max_order=budgets.aut_max_order
            )
        except BudgetExceeded as exc:
            hit = exc
        _aut_cache[key] = hit
    if isinstance(hit, BudgetExceeded):
        raise hit
    return hit


def _dist_number(g: Graph, budgets: Budgets) -> DistinguishingResult:
    key = (g, budgets)
    hit = _number_cache.get(key)
    if hit is None:
        try:
            hit = distinguishing_number(g, budgets)
        except BudgetExceeded as exc:
            hit = exc
        _number_cache[key] = hit
    if isinstance(hit, BudgetExceeded):
        raise hit
    return hit


def _dist_index(g: Graph, budgets: Budgets) -> DistinguishingResult:
    key = (g, budgets)
    hit = _index_cache.get(key)
    if hit is None:
        try:
            hit = distinguishing_index(g, budgets)
        except BudgetExceeded as exc:
            hit = exc
        _index_cache[key] = hit
    if isinstance(hit, BudgetExceeded):
        raise hit
    return hit


def _pair_label(g: Graph, h: Graph, label: Optional[str]) -> str:
    return label if label is not None else f"{graph_name(g)} x {graph_name(h)}"


def _na(check: str, instance: str, hyps: dict, note: str, quantities=None) -> BoundReport:
    return BoundReport(check, instance, hyps, quantities or {}, NOT_APPLICABLE, notes=(note,))


def _result_summary(res: DistinguishingResult) -> str:
    return f"{res.value} ({res.mode})"


def layered_labeling(
    g: Graph,
    h: Graph,
    phi: VertexLabeling,
    *,
    budgets: Budgets = DEFAULT_BUDGETS,
    group: Optional[AutomorphismGroup] = None,
) -> VertexLabeling:
    """Label the strong product of g and h by shifting a distinguishing
    labeling of g to a disjoint palette on every copy of g.

    Vertex (x, y) receives phi(x) + y * r, so copy y uses labels
    y*r+1 .. (y+1)*r and no two copies share a label; the result uses
    r * |V(h)| labels.  phi must be distinguishing for g.
    """
    if len(phi.labels) != g.n:
        raise ValueError("labeling length does not match the first factor")
    if group is None:
        group = automorphism_group(
            g, max_vertices=budgets.aut_vertices, max_order=budgets.aut_max_order
        )
    if not is_distinguishing_vertex(g, group, phi):
        raise ValueError("base labeling is not distinguishing")
    labels = [0] * (g.n * h.n)
    for x in range(g.n):
        for y in range(h.n):
            labels[x * h.n + y] = phi.labels[x] + y * phi.r
    return VertexLabeling(tuple(labels), phi.r * h.n)


def check_layered_labeling(
    g: Graph, h: Graph, budgets: Budgets = DEFAULT_BUDGETS, label: Optional[str] = None
) -> BoundReport:
    """Run the palette-shift construction in both orientations and verify
    each output is distinguishing with the advertised label count."""
    instance = _pair_label(g, h, label)
    hyps = {"G connected": is_connected(g), "H connected": is_connected(h)}
    if not all(hyps.values()):
        return _na(LAYERED_LABELING, instance, hyps, "hypothesis failed")
    if g.n * h.n > budgets.aut_vertices:
        return _na(
            LAYERED_LABELING, instance, hyps,
            f"budget: verification needs the product group, product has {g.n * h.n} vertices",
        )
    if max(g.n, h.n) > budgets.exact_vertices:
        return _na(LAYERED_LABELING, instance, hyps, "budget: factor distinguishing number not exact")
    try:
        d_g = _dist_number(g, budgets)
        d_h = _dist_number(h, budgets)
        prod_gh = strong_product(g, h)
        prod_hg = strong_product(h, g)
        lab_gh = layered_labeling(g, h, d_g.witness, budgets=budgets)
        lab_hg = layered_labeling(h, g, d_h.witness, budgets=budgets)
        ok_gh = is_distinguishing_vertex(prod_gh, _aut(prod_gh, budgets), lab_gh)
        ok_hg = is_distinguishing_vertex(prod_hg, _aut(prod_hg, budgets), lab_hg)
    except BudgetExceeded as exc:
        return _na(LAYERED_LABELING, instance, hyps, f"budget: {exc}")
    counts_ok = lab_gh.r == d_g.value * h.n and lab_hg.r == d_h.value * g.n
    quantities = {
        "labels used, G copies": lab_gh.r,
        "labels used, H copies": lab_hg.r,
        "distinguishing, G copies": ok_gh,
        "distinguishing, H copies": ok_hg,
    }
    status = PASS if (ok_gh and ok_hg and counts_ok) else FAIL
    return BoundReport(LAYERED_LABELING, instance, hyps, quantities, status, witness=lab_gh)


def check_number_sandwich(
    g: Graph, h: Graph, budgets: Budgets = DEFAULT_BUDGETS, label: Optional[str] = None
) -> BoundReport:
    """Exactly compute D of both products and check the two-sided bound:
    the Cartesian value is at most the strong value, which is at most
    min(D(G)|V(H)|, |V(G)|D(H))."""
    instance = _pair_label(g, h, label)
    hyps = {"G connected": is_connected(g), "H connected": is_connected(h)}
    if not all(hyps.values()):
        return _na(NUMBER_SANDWICH, instance, hyps, "hypothesis failed")
    if g.n * h.n > budgets.exact_vertices:
        return _na(
            NUMBER_SANDWICH, instance, hyps,
            f"budget: exact distinguishing number limited to {budgets.exact_vertices} vertices, "
            f"product has {g.n * h.n}",
        )
    try:
        strong = strong_product(g, h)
        box = cartesian_product(g, h)
        d_box = _dist_number(box, budgets)
        d_strong = _dist_number(strong, budgets)
        d_g = _dist_number(g, budgets)
        d_h = _dist_number(h, budgets)
    except BudgetExceeded as exc:
        return _na(NUMBER_SANDWICH, instance, hyps, f"budget: {exc}")
    right = min(d_g.value * h.n, g.n * d_h.value)
    quantities = {
        "D(cartesian)": d_box.value,
        "D(strong)": d_strong.value,
        "min(D(G)|V(H)|, |V(G)|D(H))": right,
    }
    ok = d_box.value <= d_strong.value <= right
    return BoundReport(NUMBER_SANDWICH, instance, hyps, quantities, PASS if ok else FAIL)


def check_number_equality(
    g: Graph, h: Graph, budgets: Budgets = DEFAULT_BUDGETS, label: Optional[str] = None
) -> BoundReport:
    """For connected S-thin declared-prime factors: the strong and Cartesian
    products must have equal automorphism groups (element sets) and equal
    distinguishing numbers."""
    instance = _pair_label(g, h, label)
    hyps = {
        "G connected": is_connected(g),
        "H connected": is_connected(h),
        "G S-thin": is_s_thin(g),
        "H S-thin": is_s_thin(h),
        "G declared prime": declared_strong_prime(g),
        "H declared prime": declared_strong_prime(h),
    }
    if not all(hyps.values()):
        return _na(NUMBER_EQUALITY, instance, hyps, "hypothesis failed")
    if g.n * h.n > budgets.aut_vertices:
        return _na(
            NUMBER_EQUALITY, instance, hyps,
            f"budget: product has {g.n * h.n} vertices, automorphism bound is {budgets.aut_vertices}",
        )
    try:
        strong = strong_product(g, h)
        box = cartesian_product(g, h)
        aut_strong = _aut(strong, budgets)
        aut_box = _aut(box, budgets)
        d_strong = _dist_number(strong, budgets)
        d_box = _dist_number(box, budgets)
    except BudgetExceeded as exc:
        return _na(NUMBER_EQUALITY, instance, hyps, f"budget: {exc}")
    groups_equal = group_equal(aut_strong, aut_box)
    quantities = {
        "Aut(strong) order": aut_strong.order,
        "Aut(cartesian) order": aut_box.order,
        "groups equal": groups_equal,
        "D(strong)": _result_summary(d_strong),
        "D(cartesian)": _result_summary(d_box),
    }
    if not (d_strong.is_tight and d_box.is_tight):
        return _na(
            NUMBER_EQUALITY, instance, hyps,
            "budget: certified values not tight enough to compare", quantities,
        )
    ok = groups_equal and d_strong.value == d_box.value
    return BoundReport(NUMBER_EQUALITY, instance, hyps, quantities, PASS if ok else FAIL)


def check_power_number(
    g: Graph, k: int, budgets: Budgets = DEFAULT_BUDGETS, label: Optional[str] = None
) -> BoundReport:
    """The k-th strong power of a nontrivial connected S-thin graph has
    distinguishing number exactly 2 for k >= 2."""
    instance = label if label is not None else f"{graph_name(g)}^{k} (strong)"
    hyps = {
        "G connected": is_connected(g),
        "G non-trivial": g.n >= 2,
        "G S-thin": is_s_thin(g),
        "power at least 2": k >= 2,
    }
    if not all(hyps.values()):
        return _na(POWER_NUMBER, instance, hyps, "hypothesis failed")
    order = g.n ** k
    if order > budgets.aut_vertices:
        return _na(
            POWER_NUMBER, instance, hyps,
            f"budget: power has {order} vertices, automorphism bound is {budgets.aut_vertices}",
        )
    try:
        power = strong_power(g, k)
        result = _dist_number(power, budgets)
    except BudgetExceeded as exc:
        return _na(POWER_NUMBER, instance, hyps, f"budget: {exc}")
    quantities = {"power order": order, "D(power)": _result_summary(result)}
    if not result.is_tight:
        return _na(POWER_NUMBER, instance, hyps, "budget: value not certified tight", quantities)
    status = PASS if result.value == 2 else FAIL
    return BoundReport(POWER_NUMBER, instance, hyps, quantities, status, witness=result.witness)


def sequence_labeling(
    g: Graph, h: Graph, budgets: Budgets = DEFAULT_BUDGETS, label: Optional[str] = None
) -> tuple[Optional[VertexLabeling], BoundReport]:
    """Label the copies of g inside the strong product with distinct label
    sequences and verify the advertised label count.

    One copy of g receives a distinguishing minimum labeling; the other
    copies receive pairwise distinct sequences over an alphabet just large
    enough to supply them.  With n = |V(g)| and m = |V(h)| the alphabet
    floor is d = min{l : l^n >= m-1}: the l-ary sequence family of length
    n has exactly l^n members, so d is computed by integer search, not by
    floating-point logarithms.  A ceiling-log reading of the same bound is
    reported alongside whenever the two disagree.

    Cases: (i) D(g) >= 2 and D(g) != d uses max(D(g), d) labels;
    (ii) D(g) = d >= 2 may need one extra label, realized by overwriting
    the first coordinate of the last copy's sequence; (iii) D(g) = 1 gives
    every copy a distinct sequence over min{l : l^n >= m} labels.
    """
    instance = _pair_label(g, h, label)
    n, m = g.n, h.n
    hyps = {
        "G connected": is_connected(g),
        "H connected": is_connected(h),
        "G S-thin": is_s_thin(g),
        "H S-thin": is_s_thin(h),
        "G declared prime": declared_strong_prime(g),
        "H declared prime": declared_strong_prime(h),
    }
    if all(hyps.values()):
        if max(n, m) > 10:
            return None, _na(
                SEQUENCE_LABELING, instance, hyps,
                "budget: non-isomorphism check limited to factors on 10 vertices",
            )
        hyps["G and H non-isomorphic"] = not is_isomorphic(g, h)
    if not all(hyps.values()):
        return None, _na(SEQUENCE_LABELING, instance, hyps, "hypothesis failed")
    if n * m > budgets.aut_vertices:
        return None, _na(
            SEQUENCE_LABELING, instance, hyps,
            f"budget: product has {n * m} vertices, automorphism bound is {budgets.aut_vertices}",
        )
    if n > budgets.exact_vertices:
        return None, _na(
            SEQUENCE_LABELING, instance, hyps, "budget: factor distinguishing number not exact"
        )

    try:
        d_g = _dist_number(g, budgets)
    except BudgetExceeded as exc:
        return None, _na(SEQUENCE_LABELING, instance, hyps, f"budget: {exc}")
    base = d_g.value
    d = min_alphabet(n, m - 1)
    log_reading = min_exponent(n, m - 1)
    notes: list[str] = []
    if log_reading is not None and log_reading != d:
        notes.append(
            f"integer-search alphabet {d} differs from the ceiling-log reading {log_reading}; "
            "the construction uses the integer search"
        )

    new_label = False
    if base == 1:
        case = "iii"
        alphabet = min_alphabet(n, m)
        bound = alphabet
        sequences = list(itertools.islice(SequenceFamily(alphabet, n), m))
    else:
        case = "ii" if base == d else "i"
        alphabet = max(base, d) if case == "i" else base
        bound = base + 1 if case == "ii" else alphabet
        phi_seq = tuple(d_g.witness.labels)
        pool = (s for s in SequenceFamily(alphabet, n) if s != phi_seq)
        chosen = list(itertools.islice(pool, m - 1))
        if len(chosen) < m - 1:
            # Alphabet exhausted after excluding the first copy's sequence
            # (only possible when alphabet**n == m-1): spend the extra label
            # on the first coordinate of the final copy.
            chosen.append((alphabet + 1,) + phi_seq[1:])
            new_label = True
        sequences = [phi_seq] + chosen

    labels = [0] * (n * m)
    for i, seq in enumerate(sequences):
        for x in range(n):
            labels[x * m + i] = seq[x]
    used = max(labels)
    labeling = VertexLabeling(tuple(labels), used)

    try:
        product = strong_product(g, h)
        group = _aut(product, budgets)
    except BudgetExceeded as exc:
        return None, _na(SEQUENCE_LABELING, instance, hyps, f"budget: {exc}")
    distinct = len(set(sequences)) == m
    distinguishing = is_distinguishing_vertex(product, group, labeling)
    within = used <= bound
    if new_label and case == "i":
        notes.append("construction needed an extra label beyond the stated bound")
    quantities = {
        "case": case,
        "D(G)": base,
        "factor order n": n,
        "copy count m": m,
        "alphabet floor d": d,
        "ceiling-log reading": log_reading,
        "stated bound": bound,
        "labels used": used,
        "extra label introduced": new_label,
        "sequences pairwise distinct": distinct,
        "labeling distinguishing": distinguishing,
    }
    status = PASS if (distinct and distinguishing and within) else FAIL
    report = BoundReport(
        SEQUENCE_LABELING, instance, hyps, quantities, status,
        witness=labeling, notes=tuple(notes),
    )
    return labeling, report


def lift_edge_labeling(
    g: Graph,
    h: Graph,
    labeling: EdgeLabeling,
    *,
    budgets: Budgets = DEFAULT_BUDGETS,
    group_g: Optional[AutomorphismGroup] = None,
    group_h: Optional[AutomorphismGroup] = None,
) -> EdgeLabeling:
    """Extend a distinguishing edge labeling of a spanning subgraph h to g.

    Valid when every automorphism of g is an automorphism of h: such an
    automorphism maps h-edges to h-edges, so keeping h's labels and giving
    every remaining edge the repeated label 1 stays distinguishing.
    """
    if not is_spanning_subgraph(h, g):
        raise ValueError("not a spanning subgraph")
    if group_g is None:
        group_g = automorphism_group(
            g, max_vertices=budgets.aut_vertices, max_order=budgets.aut_max_order
        )
    if group_h is None:
        group_h = automorphism_group(
            h, max_vertices=budgets.aut_vertices, max_order=budgets.aut_max_order
        )
    if not set(group_g.elements) <= set(group_h.elements):
        raise ValueError("host automorphisms are not all subgraph automorphisms")
    if not is_distinguishing_edge(h, group_h, labeling):
        raise ValueError("labeling is not distinguishing for the subgraph")
    lifted = dict(labeling.labels)
    for e in g.edges:
        if e not in lifted:
            lifted[e] = 1
    return EdgeLabeling(lifted, max(labeling.r, 1))


def check_lift(
    g: Graph, h: Graph, budgets: Budgets = DEFAULT_BUDGETS, label: Optional[str] = None
) -> BoundReport:
    """Lift a distinguishing edge labeling from the Cartesian product onto
    the strong product and verify it stays distinguishing, witnessing that
    the strong index is at most the Cartesian index."""
    instance = _pair_label(g, h, label)
    hyps = {"G connected": is_connected(g), "H connected": is_connected(h)}
    if not all(hyps.values()):
        return _na(INDEX_LIFT, instance, hyps, "hypothesis failed")
    if g.n * h.n > budgets.aut_vertices:
        return _na(
            INDEX_LIFT, instance, hyps,
            f"budget: product has {g.n * h.n} vertices, automorphism bound is {budgets.aut_vertices}",
        )
    try:
        strong = strong_product(g, h)
        box = cartesian_product(g, h)
        aut_strong = _aut(strong, budgets)
        aut_box = _aut(box, budgets)
    except BudgetExceeded as exc:
        return _na(INDEX_LIFT, instance, hyps, f"budget: {exc}")
    hyps["cartesian spans strong"] = is_spanning_subgraph(box, strong)
    hyps["Aut(strong) subgroup of Aut(cartesian)"] = (
        set(aut_strong.elements) <= set(aut_box.elements)
    )
    if not all(hyps.values()):
        return _na(INDEX_LIFT, instance, hyps, "hypothesis failed")
    try:
        base = _dist_index(box, budgets)
    except BudgetExceeded as exc:
        return _na(INDEX_LIFT, instance, hyps, f"budget: {exc}")
    if base.mode == UNDEFINED:
        return _na(INDEX_LIFT, instance, hyps, "cartesian index undefined")
    lifted = lift_edge_labeling(
        strong, box, base.witness, budgets=budgets,
        group_g=aut_strong, group_h=aut_box,
    )
    ok = is_distinguishing_edge(strong, aut_strong, lifted)
    quantities = {
        "D'(cartesian)": _result_summary(base),
        "lifted labels": lifted.r,
        "lift distinguishing": ok,
    }
    return BoundReport(
        INDEX_LIFT, instance, hyps, quantities, PASS if ok else FAIL, witness=lifted
    )


def _index_comparison(
    check: str,
    g: Graph,
    h: Graph,
    slack: int,
    hyps: dict[str, bool],
    budgets: Budgets,
    instance: str,
) -> BoundReport:
    """Shared engine: compare D'(strong) <= D'(cartesian) + slack using the
    certified brackets of both computations."""
    if not all(hyps.values()):
        return _na(check, instance, hyps, "hypothesis failed")
    if g.n * h.n > budgets.aut_vertices:
        return _na(
            check, instance, hyps,
            f"budget: product has {g.n * h.n} vertices, automorphism bound is {budgets.aut_vertices}",
        )
    try:
        strong = strong_product(g, h)
        box = cartesian_product(g, h)
        r_strong = _dist_index(strong, budgets)
        r_box = _dist_index(box, budgets)
    except BudgetExceeded as exc:
        return _na(check, instance, hyps, f"budget: {exc}")
    if r_strong.mode == UNDEFINED or r_box.mode == UNDEFINED:
        return _na(check, instance, hyps, "an index is undefined on this instance")
    lo_s, hi_s = r_strong.bounds
    lo_b, hi_b = r_box.bounds
    quantities = {
        "D'(strong)": _result_summary(r_strong),
        "D'(cartesian)": _result_summary(r_box),
        "slack": slack,
    }
    if hi_s <= lo_b + slack:
        status = PASS
    elif lo_s > hi_b + slack:
        status = FAIL
    else:
        return _na(
            check, instance, hyps,
            "budget: brackets too loose to decide the inequality", quantities,
        )
    return BoundReport(check, instance, hyps, quantities, status, witness=r_strong.witness)


def check_index_monotone(
    g: Graph, h: Graph, budgets: Budgets = DEFAULT_BUDGETS, label: Optional[str] = None
) -> BoundReport:
    """D'(strong) <= D'(cartesian) + 1 for connected factors: the Cartesian
    product spans the strong product, and a spanning subgraph costs at most
    one extra edge label."""
    instance = _pair_label(g, h, label)
    hyps = {"G connected": is_connected(g), "H connected": is_connected(h)}
    if all(hyps.values()):
        hyps["cartesian spans strong"] = is_spanning_subgraph(
            cartesian_product(g, h), strong_product(g, h)
        )
    return _index_comparison(INDEX_MONOTONE, g, h, 1, hyps, budgets, instance)


def check_index_sthin(
    g: Graph, h: Graph, budgets: Budgets = DEFAULT_BUDGETS, label: Optional[str] = None
) -> BoundReport:
    """D'(strong) <= D'(cartesian) for connected S-thin declared-prime
    factors, where the two products share their automorphism group."""
    instance = _pair_label(g, h, label)
    hyps = {
        "G connected": is_connected(g),
        "H connected": is_connected(h),
        "G S-thin": is_s_thin(g),
        "H S-thin": is_s_thin(h),
        "G declared prime": declared_strong_prime(g),
        "H declared prime": declared_strong_prime(h),
    }
    return _index_comparison(INDEX_STHIN, g, h, 0, hyps, budgets, instance)


def check_traceable_index(
    factors: Sequence[Graph], budgets: Budgets = DEFAULT_BUDGETS, label: Optional[str] = None
) -> BoundReport:
    """For at least two nontrivial connected factors whose maximum degrees
    do not exceed the factor count, and whose order product is at least 7,
    the strong product must be traceable with a witnessed two-label
    distinguishing edge labeling."""
    factors = list(factors)
    delta = len(factors)
    instance = label if label is not None else " x ".join(graph_name(f) for f in factors)
    orders = [f.n for f in factors]
    order = prod(orders) if orders else 0
    hyps = {
        "at least two factors": delta >= 2,
        "factors non-trivial": all(n >= 2 for n in orders) and delta > 0,
        "factors connected": all(is_connected(f) for f in factors) and delta > 0,
        f"max degree at most {delta}": all(
            max((f.degree(v) for v in range(f.n)), default=0) <= delta for f in factors
        ),
        "product order at least 7": order >= 7,
    }
    if not all(hyps.values()):
        return _na(TRACEABLE_INDEX, instance, hyps, "hypothesis failed")
    if order > budgets.aut_vertices or order > budgets.hamiltonian_vertices:
        return _na(
            TRACEABLE_INDEX, instance, hyps,
            f"budget: product has {order} vertices, bounds are aut {budgets.aut_vertices} "
            f"and traceability {budgets.hamiltonian_vertices}",
        )
    product = factors[0]
    for f in factors[1:]:
        product = strong_product(product, f)
    try:
        traceable = hamiltonian_path_exists(product, max_vertices=budgets.hamiltonian_vertices)
        result = _dist_index(product, budgets)
    except BudgetExceeded as exc:
        return _na(TRACEABLE_INDEX, instance, hyps, f"budget: {exc}")
    if result.mode == UNDEFINED:
        return _na(TRACEABLE_INDEX, instance, hyps, "index undefined on this instance")
    quantities = {
        "product order": order,
        "traceable": traceable,
        "D'(product)": _result_summary(result),
    }
    if not traceable:
        return BoundReport(
            TRACEABLE_INDEX, instance, hyps, quantities, FAIL,
            notes=("product is not traceable although every factor meets the degree bound",),
        )
    _, hi = result.bounds
    if hi <= 2:
        return BoundReport(
            TRACEABLE_INDEX, instance, hyps, quantities, PASS, witness=result.witness
        )
    if result.mode == EXACT:
        return BoundReport(TRACEABLE_INDEX, instance, hyps, quantities, FAIL)
    return _na(
        TRACEABLE_INDEX, instance, hyps,
        "budget: no two-label witness found within the trial budget", quantities,
    )


CorpusEntry = Union[Graph, tuple[str, Graph]]


def default_corpus() -> list[tuple[str, Graph]]:
    """Paths on 2..6 vertices, cycles on 3..7, complete graphs on 2..5."""
    entries: list[tuple[str, Graph]] = []
    entries.extend((f"P{k}", path(k)) for k in range(2, 7))
    entries.extend((f"C{k}", cycle(k)) for k in range(3, 8))
    entries.extend((f"K{k}", complete(k)) for k in range(2, 6))
    return entries


def _normalize_corpus(corpus: Iterable[CorpusEntry]) -> list[tuple[str, Graph]]:
    out = []
    for entry in corpus:
        if isinstance(entry, Graph):
            out.append((graph_name(entry), entry))
        else:
            name, g = entry
            out.append((str(name), g))
    return out


def run_all(
    corpus: Optional[Iterable[CorpusEntry]] = None,
    budgets: Budgets = DEFAULT_BUDGETS,
    extra_pairs: Iterable[tuple[CorpusEntry, CorpusEntry]] = (),
) -> list[BoundReport]:
    """Run every check over all unordered base pairs (plus explicit pairs)
    and the second strong power of every base graph.

    Reports appear in corpus order regardless of how long each check takes;
    hypothesis violations and budget skips are data, not errors.
    """
    bases = default_corpus() if corpus is None else _normalize_corpus(corpus)
    pairs: list[tuple[tuple[str, Graph], tuple[str, Graph]]] = []
    for i in range(len(bases)):
        for j in range(i, len(bases)):
            pairs.append((bases[i], bases[j]))
    for a, b in extra_pairs:
        pairs.append((_normalize_corpus([a])[0], _normalize_corpus([b])[0]))

    reports: list[BoundReport] = []
    for (na, a), (nb, b) in pairs:
        lbl = f"{na} x {nb}"
        reports.append(check_number_sandwich(a, b, budgets, label=lbl))
        reports.append(check_layered_labeling(a, b, budgets, label=lbl))
        reports.append(check_number_equality(a, b, budgets, label=lbl))
        reports.append(sequence_labeling(a, b, budgets, label=lbl)[1])
        if (na, a) != (nb, b):
            reports.append(sequence_labeling(b, a, budgets, label=f"{nb} x {na}")[1])
        reports.append(check_index_monotone(a, b, budgets, label=lbl))
        reports.append(check_index_sthin(a, b, budgets, label=lbl))
        reports.append(check_lift(a, b, budgets, label=lbl))
        reports.append(check_traceable_index([a, b], budgets, label=lbl))
    for name, g in bases:
        reports.append(check_power_number(g, 2, budgets, label=f"{name}^2 (strong)"))
    return reports


def all_applicable_pass(reports: Iterable[BoundReport]) -> bool:
    """Aggregate verdict: no applicable check failed."""
    return all(r.status != FAIL for r in reports)
