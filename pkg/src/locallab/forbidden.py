"""Forbidden configurations and the witness sets they certify.

Detectors find even cycles, monochromatic complete bipartite graphs,
and monochromatic subdivisions by canonical exhaustive search, so a
rerun always returns the same object.  The witness constructors convert
a cycle in an energy graph into a k-set of base vertices with an
explicit, independently re-checkable tally of color repetitions:
equalities are counted through a union-find per color, so repeated or
interlocking equalities are never double counted, and any shortfall is
padded with unused edges of the first step's color.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .coloring import EdgeColoring
from .energy import ln_ceiling
from .energy_graph import (
    EnergyGraph,
    coordinate_neighbor_violations,
    edge_sign_vector,
)
from .errors import (
    LocalLabError,
    PaddingError,
    SignConsistencyError,
    WitnessError,
)


@dataclass(frozen=True)
class CyclePath:
    """A simple cycle as an ordered vertex tuple; consecutive vertices
    (cyclically) are adjacent in the graph the cycle was found in."""

    vertices: tuple
    length: int

    def __post_init__(self):
        if len(self.vertices) != self.length:
            raise LocalLabError("cycle length does not match its vertex list")
        if len(set(self.vertices)) != self.length:
            raise LocalLabError("cycle vertices must be distinct")


def _plain_adjacency(graph) -> dict:
    if isinstance(graph, EnergyGraph):
        return {v: sorted(w for w, _ in nbrs) for v, nbrs in graph.adjacency().items()}
    if isinstance(graph, dict):
        adj = {}
        for v, nbrs in graph.items():
            adj.setdefault(v, set()).update(nbrs)
            for w in nbrs:
                adj.setdefault(w, set()).add(v)
        return {v: sorted(ws) for v, ws in adj.items()}
    raise LocalLabError(f"cannot search {type(graph).__name__} for cycles")


def find_cycle(graph, length: int):
    """First simple cycle of exactly `length`, or None.

    The search is canonical: start vertices ascending, each cycle
    explored only from its smallest vertex, neighbors in sorted order.
    """
    if length < 3:
        raise LocalLabError(f"cycle length {length} must be at least 3")
    adj = _plain_adjacency(graph)
    adj_sets = {v: set(ws) for v, ws in adj.items()}

    def extend(start, path, on_path):
        v = path[-1]
        if len(path) == length:
            return list(path) if start in adj_sets[v] else None
        for w in adj[v]:
            if w <= start or w in on_path:
                continue
            path.append(w)
            on_path.add(w)
            found = extend(start, path, on_path)
            if found:
                return found
            path.pop()
            on_path.remove(w)
        return None

    for s in sorted(adj):
        if len(adj[s]) < 2:
            continue
        found = extend(s, [s], {s})
        if found:
            return CyclePath(tuple(found), length)
    return None


def validate_cycle(graph, cycle: CyclePath) -> None:
    """Re-check distinctness and all cyclic adjacencies; raises on failure."""
    adj = _plain_adjacency(graph)
    n = cycle.length
    for i, v in enumerate(cycle.vertices):
        w = cycle.vertices[(i + 1) % n]
        if v not in adj or w not in set(adj[v]):
            raise WitnessError(f"cycle step {v} -> {w} is not an edge")


def find_complete_bipartite(g: EdgeColoring, color: int, s: int, t: int):
    """Vertex sides (size s, size t) with all s*t cross pairs in `color`,
    or None; exhaustive over s-subsets in lexicographic order."""
    if not 1 <= s <= t:
        raise LocalLabError(f"need 1 <= s <= t, got s={s}, t={t}")
    if color not in g.palette:
        raise LocalLabError(f"color id {color} not in the palette")
    mat = g.color_matrix()
    for side_s in itertools.combinations(range(g.n), s):
        members = set(side_s)
        common = [
            v
            for v in range(g.n)
            if v not in members and all(mat[v][u] == color for u in side_s)
        ]
        if len(common) >= t:
            return side_s, tuple(common[:t])
    return None


@dataclass(frozen=True)
class SubdivisionEmbedding:
    """t branch vertices plus one distinct midpoint per branch pair; every
    branch-midpoint edge carries the searched color."""

    branch_vertices: tuple
    midpoints: dict

    def edges(self):
        for (u, v), m in sorted(self.midpoints.items()):
            yield u, m
            yield v, m


def find_subdivision(g: EdgeColoring, color: int, t: int):
    """Embedding of the subdivision of K_t inside one color class, or None.

    Branch t-sets are scanned lexicographically; midpoints are assigned
    by backtracking over the scarcest pair first.
    """
    if t < 3:
        raise LocalLabError(f"need t >= 3, got {t}")
    if color not in g.palette:
        raise LocalLabError(f"color id {color} not in the palette")
    mat = g.color_matrix()
    class_size = sum(1 for _, _, c in g.edge_items() if c == color)
    if class_size < t * (t - 1):
        return None
    neighbors = [
        {u for u in range(g.n) if mat[v][u] == color} for v in range(g.n)
    ]
    pair_count = t * (t - 1) // 2
    for branch in itertools.combinations(range(g.n), t):
        banned = set(branch)
        candidates = {}
        feasible = True
        for u, v in itertools.combinations(branch, 2):
            cands = sorted((neighbors[u] & neighbors[v]) - banned)
            if not cands:
                feasible = False
                break
            candidates[(u, v)] = cands
        if not feasible:
            continue
        order = sorted(candidates, key=lambda p: (len(candidates[p]), p))
        assignment = {}
        used = set()

        def assign(i):
            if i == pair_count:
                return True
            pair = order[i]
            for m in candidates[pair]:
                if m in used:
                    continue
                assignment[pair] = m
                used.add(m)
                if assign(i + 1):
                    return True
                del assignment[pair]
                used.remove(m)
            return False

        if assign(0):
            return SubdivisionEmbedding(branch, dict(sorted(assignment.items())))
    return None


@dataclass(frozen=True)
class ExtremalReference:
    """Reference edge-count curve n**exponent for a forbidden
    configuration; the constant factor is unknown, so the value is a
    diagnostic, never a certificate."""

    kind: str
    parameter: int
    exponent: Fraction
    reference: float
    certified: bool = False


def extremal_edge_reference(n: int, kind: str, parameter: int) -> ExtremalReference:
    if kind == "even_cycle":
        if parameter < 4 or parameter % 2 != 0:
            raise LocalLabError("even_cycle takes the cycle length 2k >= 4")
        exponent = 1 + Fraction(1, parameter // 2)
    elif kind == "subdivision":
        if parameter < 3:
            raise LocalLabError("subdivision takes t >= 3")
        exponent = Fraction(3, 2) - Fraction(1, 4 * parameter - 6)
    else:
        raise LocalLabError(f"unknown configuration kind {kind!r}")
    return ExtremalReference(kind, parameter, exponent, float(n) ** float(exponent))


# ---------------------------------------------------------------------------
# Witness sets from energy-graph cycles


@dataclass(frozen=True)
class ColorRepetition:
    """One counted repetition: two distinct base edges sharing a color.
    kind records whether it came from a cycle step or from padding."""

    edge1: tuple
    edge2: tuple
    color: object
    kind: str


@dataclass(frozen=True)
class WitnessSet:
    """A target_k-set of base vertices spanning at most
    C(target_k, 2) - claimed_repetitions colors; the equalities listed
    are independent per color by construction, so the bound re-verifies."""

    vertices: tuple
    claimed_repetitions: int
    target_k: int
    colors_spanned: int
    equalities: tuple


class _UnionFind:
    def __init__(self):
        self.parent = {}

    def find(self, x):
        parent = self.parent
        if x not in parent:
            parent[x] = x
            return x
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    def union(self, a, b) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        self.parent[rb] = ra
        return True

    def __contains__(self, x):
        return x in self.parent


def _colors_within(g: EdgeColoring, vertices) -> int:
    mat = g.color_matrix()
    return len({mat[u][v] for u, v in itertools.combinations(sorted(vertices), 2)})


def _base_pair(x, y) -> tuple:
    return (x, y) if x < y else (y, x)


def _walk_cycle(g: EdgeColoring, eg: EnergyGraph, cycle: CyclePath):
    """Tally the independent color repetitions asserted by a cycle.

    Each step equates the r coordinate base pairs of consecutive cycle
    vertices; chaining them through a per-color union-find counts every
    equality at most once, even when steps repeat base edges.
    """
    validate_cycle(eg, cycle)
    forests = {}
    vertices = set()
    equalities = []
    length = cycle.length
    for i in range(length):
        x = cycle.vertices[i]
        y = cycle.vertices[(i + 1) % length]
        pairs = []
        color = None
        for t in range(eg.r):
            if x[t] == y[t]:
                raise WitnessError(f"cycle edge {x}-{y} repeats coordinate {t}")
            c = g.color_of(x[t], y[t])
            if color is None:
                color = c
            elif c != color:
                raise WitnessError(f"cycle edge {x}-{y} mixes colors")
            pairs.append(_base_pair(x[t], y[t]))
        vertices.update(x)
        forest = forests.setdefault(color, _UnionFind())
        for t in range(1, eg.r):
            if forest.union(pairs[t - 1], pairs[t]):
                equalities.append(
                    ColorRepetition(pairs[t - 1], pairs[t], g.label_of(color), f"cycle-step-{i + 1}")
                )
    anchor_color = g.color_of(cycle.vertices[0][0], cycle.vertices[1][0])
    anchor_pair = _base_pair(cycle.vertices[0][0], cycle.vertices[1][0])
    return forests, vertices, equalities, anchor_color, anchor_pair


def _pad_witness(g, forests, vertices, equalities, anchor_color, anchor_pair,
                 target_reps, target_k):
    """Raise the repetition tally to target_reps with unused edges of the
    anchor color, then fill the vertex set to target_k.

    Padding edges are chosen to introduce as few new vertices as
    possible (ties broken lexicographically), which keeps the set within
    its size budget even for degenerate cycles.
    """
    forest = forests[anchor_color]
    anchor_edges = g.color_classes()[anchor_color]
    while len(equalities) < target_reps:
        unused = [e for e in anchor_edges if e not in forest]
        if not unused:
            raise PaddingError(target_reps - len(equalities),
                               g.label_of(anchor_color))
        pad = min(unused, key=lambda e: (sum(1 for v in e if v not in vertices), e))
        forest.union(anchor_pair, pad)
        vertices.update(pad)
        equalities.append(
            ColorRepetition(anchor_pair, pad, g.label_of(anchor_color), "padding")
        )
    if len(vertices) > target_k:
        raise WitnessError(
            f"cycle is too degenerate: {len(vertices)} vertices exceed the target {target_k}"
        )
    for v in range(g.n):
        if len(vertices) == target_k:
            break
        vertices.add(v)
    if len(vertices) < target_k:
        raise WitnessError(f"only {g.n} base vertices, cannot reach size {target_k}")
    claimed = len(equalities)
    spanned = _colors_within(g, vertices)
    budget = target_k * (target_k - 1) // 2 - claimed
    if spanned > budget:
        raise WitnessError(
            f"witness spans {spanned} colors, more than the promised {budget}"
        )
    return WitnessSet(tuple(sorted(vertices)), claimed, target_k, spanned,
                      tuple(equalities))


def witness_from_cycle_2nd(g: EdgeColoring, eg: EnergyGraph, cycle: CyclePath,
                           k: int) -> WitnessSet:
    """Turn a k/2-cycle in a second energy graph into a witness k-set.

    The set spans at most C(k, 2) - k/2 colors, certified by at least
    k/2 independent repetitions; shortfalls from repeated base edges are
    padded with unused edges of the first step's color.
    """
    if eg.r != 2:
        raise WitnessError("needs a second energy graph")
    if k % 4 != 0 or k < 8:
        raise WitnessError(f"k={k} must be a multiple of four and at least 8")
    if k > g.n:
        raise WitnessError(f"k={k} exceeds the {g.n} base vertices")
    if cycle.length != k // 2:
        raise WitnessError(f"cycle length {cycle.length} must equal k/2 = {k // 2}")
    forests, vertices, equalities, anchor_color, anchor_pair = _walk_cycle(g, eg, cycle)
    return _pad_witness(g, forests, vertices, equalities, anchor_color,
                        anchor_pair, k // 2, k)


def witness_from_cycle_3rd(g: EdgeColoring, eg: EnergyGraph,
                           cycle: CyclePath) -> WitnessSet:
    """Turn an 8-cycle in a pruned third energy graph into a witness
    24-set with at least 16 independent repetitions.

    Preconditions: the graph went through part halving and the
    coordinate-neighbor pruning (audited directly), and every color on
    its edges kept at least ceil(ln n) base edges.
    """
    if eg.r != 3:
        raise WitnessError("needs a third energy graph")
    if cycle.length != 8:
        raise WitnessError(f"cycle length {cycle.length} must be 8")
    if g.n < 24:
        raise WitnessError(f"needs at least 24 base vertices, have {g.n}")
    if not any(stage.startswith("halve_parts(") for stage in eg.provenance):
        raise WitnessError("energy graph was never halved")
    if coordinate_neighbor_violations(eg):
        raise WitnessError("two neighbors share a coordinate value")
    floor = ln_ceiling(g.n)
    for _, _, c in eg.edges:
        if eg.color_base_edges.get(c, 0) < floor:
            raise WitnessError(
                f"color id {c} has fewer than {floor} base edges; prune rare colors first"
            )
    forests, vertices, equalities, anchor_color, anchor_pair = _walk_cycle(g, eg, cycle)
    return _pad_witness(g, forests, vertices, equalities, anchor_color,
                        anchor_pair, 16, 24)


# ---------------------------------------------------------------------------
# Cliques from sign-homogeneous arithmetic cycles


@dataclass(frozen=True)
class DifferenceEquality:
    """One repetition over a real set: two base pairs with the same
    absolute difference.  rows are 0-based cycle positions and
    coordinates are 0-based tuple positions; direct equalities compare
    coordinate 0 against a later coordinate across two rows, regrouped
    ones pair the remaining four elements of the same quadruple."""

    edge1: tuple
    edge2: tuple
    difference: object
    kind: str
    rows: tuple
    coordinates: tuple


@dataclass(frozen=True)
class CliqueWitness:
    """A 2k-clique of tuple vertices over 2kr distinct base elements.

    repetitions counts the listed equalities, C(2k,2) * (r-1 + C(r,2))
    of them, each an exact difference identity.  They need not all be
    independent: all-plus sign classes collapse some regrouped
    equalities, so independent_repetitions carries the union-find count.
    """

    clique: tuple
    base_vertices: tuple
    repetitions: int
    equalities: tuple
    independent_repetitions: int


def clique_from_cycle_arith(sub: EnergyGraph, cycle: CyclePath, k: int,
                            values) -> CliqueWitness:
    """Expand a 2k-cycle in one sign class into a full clique witness.

    Telescoping the per-edge sign identities shows every vertex pair of
    the cycle satisfies them too, which forces all 2kr base elements to
    be distinct and yields r-1 direct plus C(r,2) regrouped difference
    repetitions per pair.  Everything is verified with exact arithmetic;
    any failure means the subgraph was not sign-homogeneous.
    """
    vals = getattr(values, "elements", values)
    if cycle.length != 2 * k or k < 2:
        raise WitnessError(f"need a cycle of length 2k with k >= 2, got {cycle.length}")
    validate_cycle(sub, cycle)
    r = sub.r
    rows = cycle.vertices
    base_ids = [v for row in rows for v in row]
    if len(set(base_ids)) != 2 * k * r:
        raise WitnessError("cycle repeats a base element; not a simple witness")

    signs = edge_sign_vector(rows[0], rows[1], vals)
    sgn = [1] + [1 if s == "+" else -1 for s in signs]
    for i in range(1, cycle.length):
        x, y = rows[i], rows[(i + 1) % cycle.length]
        if edge_sign_vector(x, y, vals) != signs:
            raise SignConsistencyError(f"edge {x}-{y} is not in the {signs} class")

    equalities = []
    for p, q in itertools.combinations(range(2 * k), 2):
        a, b = rows[p], rows[q]
        lead = vals[a[0]] - vals[b[0]]
        for l in range(1, r):
            if vals[a[l]] - vals[b[l]] != sgn[l] * lead:
                raise SignConsistencyError(
                    f"rows {p} and {q} break the sign identity in coordinate {l}"
                )
            equalities.append(
                DifferenceEquality(
                    _base_pair(a[0], b[0]),
                    _base_pair(a[l], b[l]),
                    abs(lead),
                    "direct",
                    (p, q),
                    (0, l),
                )
            )
        for l, m in itertools.combinations(range(r), 2):
            if sgn[l] * sgn[m] == 1:
                e1 = _base_pair(a[l], a[m])
                e2 = _base_pair(b[l], b[m])
            else:
                e1 = _base_pair(a[l], b[m])
                e2 = _base_pair(b[l], a[m])
            d1 = abs(vals[e1[0]] - vals[e1[1]])
            if d1 != abs(vals[e2[0]] - vals[e2[1]]):
                raise SignConsistencyError(
                    f"regrouped repetition fails for rows {p},{q} coordinates {l},{m}"
                )
            equalities.append(
                DifferenceEquality(e1, e2, d1, "regrouped", (p, q), (l, m))
            )

    expected = (k * (2 * k - 1)) * (r - 1 + r * (r - 1) // 2)
    if len(equalities) != expected:
        raise WitnessError(f"listed {len(equalities)} repetitions, expected {expected}")
    forests = {}
    independent = 0
    for eq in equalities:
        forest = forests.setdefault(eq.difference, _UnionFind())
        if forest.union(eq.edge1, eq.edge2):
            independent += 1
    return CliqueWitness(
        tuple(rows),
        tuple(sorted(base_ids)),
        len(equalities),
        tuple(equalities),
        independent,
    )
