"""Edge colorings of complete graphs and the (k, l) local property.

A coloring assigns one color to each of the C(n, 2) edges of K_n.  The
(k, l) local property holds when every k-vertex subset spans at least l
distinct edge colors.  Color labels are opaque (ints, strings, or exact
rationals); on construction they are normalized to dense integer ids
numbered by first appearance, and the original labels are kept for I/O.

Everything here is immutable and every operation is pure, so values can
be shared freely between threads.
"""

from __future__ import annotations

import itertools
import json
import random
import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    ColoringError,
    DuplicatePairError,
    MissingPairError,
    SelfLoopError,
    VertexRangeError,
)


def pair_index(n: int, u: int, v: int) -> int:
    """Index of the unordered pair {u, v} in lexicographic order."""
    if u > v:
        u, v = v, u
    return u * (2 * n - u - 1) // 2 + (v - u - 1)


@dataclass(frozen=True)
class EdgeColoring:
    """An edge-colored K_n.

    `colors[pair_index(n, u, v)]` holds the dense color id of {u, v};
    `color_names[c]` holds the label the id was normalized from.  The
    palette is exactly the image of `color_of`, so every declared color
    appears on at least one edge.
    """

    n: int
    colors: tuple
    color_names: tuple

    @property
    def num_colors(self) -> int:
        return len(self.color_names)

    @property
    def palette(self) -> frozenset:
        return frozenset(range(len(self.color_names)))

    def _check_vertex(self, v):
        if not isinstance(v, int) or not 0 <= v < self.n:
            raise VertexRangeError(f"vertex {v!r} outside 0..{self.n - 1}")

    def color_of(self, u: int, v: int) -> int:
        """Dense color id of the edge {u, v}."""
        self._check_vertex(u)
        self._check_vertex(v)
        if u == v:
            raise SelfLoopError(f"no color for the loop ({u}, {v})")
        return self.colors[pair_index(self.n, u, v)]

    def label_of(self, c: int):
        return self.color_names[c]

    def color_id(self, label) -> int:
        """Dense id of an original label (for CLI lookups)."""
        try:
            return self.color_names.index(label)
        except ValueError:
            raise ColoringError(f"unknown color label {label!r}") from None

    def pairs(self):
        return itertools.combinations(range(self.n), 2)

    def edge_items(self):
        """Yield (u, v, dense color id) in lexicographic pair order."""
        for idx, (u, v) in enumerate(self.pairs()):
            yield u, v, self.colors[idx]

    def color_matrix(self):
        """Dense n x n lookup table; -1 on the diagonal."""
        mat = [[-1] * self.n for _ in range(self.n)]
        for u, v, c in self.edge_items():
            mat[u][v] = c
            mat[v][u] = c
        return mat

    def color_classes(self):
        """Edges of each color, lexicographically sorted, indexed by id."""
        classes = [[] for _ in range(self.num_colors)]
        for u, v, c in self.edge_items():
            classes[c].append((u, v))
        return classes


@dataclass(frozen=True)
class ColorStats:
    """Ordered-pair multiplicities: multiplicity[c] counts ordered pairs
    (u, v) with color c, so each edge contributes 2 and the values sum
    to n(n-1)."""

    multiplicity: dict
    total: int


@dataclass(frozen=True)
class PropertyVerdict:
    """Outcome of a local-property check.

    In sampled mode `holds=True` only means "not refuted by the sampled
    subsets", never a proof.  `min_colors_seen` is the smallest per-subset
    color count observed with counting capped at l, so for a passing
    verdict it equals l.  `witness` is the first subset (in scan order)
    attaining `min_colors_seen`; when the property fails it is the
    lexicographically least minimizer.
    """

    holds: bool
    witness: tuple | None
    min_colors_seen: int
    k: int
    l: int
    mode: str
    trials: int | None = None
    seed: int | None = None


def new_coloring(n: int, assignments) -> EdgeColoring:
    """Build a validated EdgeColoring from (u, v, label) triples.

    Raises a distinct error for self-loops, out-of-range vertices,
    duplicated pairs, and missing pairs.  Labels are normalized to dense
    ids in order of first appearance.
    """
    if not isinstance(n, int) or n < 2:
        raise ColoringError(f"need at least 2 vertices, got n={n!r}")
    total = n * (n - 1) // 2
    colors = [None] * total
    names = []
    ids = {}
    for u, v, label in assignments:
        for w in (u, v):
            if not isinstance(w, int) or not 0 <= w < n:
                raise VertexRangeError(f"vertex {w!r} outside 0..{n - 1}")
        if u == v:
            raise SelfLoopError(f"assignment colors the loop ({u}, {v})")
        idx = pair_index(n, u, v)
        if colors[idx] is not None:
            raise DuplicatePairError(f"pair ({min(u, v)}, {max(u, v)}) assigned twice")
        if label not in ids:
            ids[label] = len(names)
            names.append(label)
        colors[idx] = ids[label]
    if any(c is None for c in colors):
        for idx, (u, v) in enumerate(itertools.combinations(range(n), 2)):
            if colors[idx] is None:
                raise MissingPairError(f"pair ({u}, {v}) received no color")
    return EdgeColoring(n, tuple(colors), tuple(names))


def random_coloring(n: int, c: int, seed: int) -> EdgeColoring:
    """Color each edge i.i.d. uniformly from c labels, deterministically.

    Unused labels are dropped by normalization, so the palette may be
    smaller than c.
    """
    if c < 1:
        raise ColoringError("palette size must be at least 1")
    rng = random.Random(seed)
    assignments = [(u, v, rng.randrange(c)) for u, v in itertools.combinations(range(n), 2)]
    return new_coloring(n, assignments)


def color_multiplicities(g: EdgeColoring) -> ColorStats:
    """Ordered-pair multiplicity of every color; totals n(n-1)."""
    counts = {c: 0 for c in range(g.num_colors)}
    for _, _, c in g.edge_items():
        counts[c] += 2
    return ColorStats(counts, g.n * (g.n - 1))


def _scan_subsets(g, k, cap, subsets):
    """Return (best_count, first subset attaining it) over `subsets`.

    Counting within a subset stops once `cap` distinct colors are seen,
    which never changes whether best_count >= cap.
    """
    mat = g.color_matrix()
    best = None
    best_subset = None
    for subset in subsets:
        seen = set()
        for i, j in itertools.combinations(subset, 2):
            seen.add(mat[i][j])
            if cap is not None and len(seen) >= cap:
                break
        count = len(seen)
        if best is None or count < best:
            best = count
            best_subset = tuple(subset)
    return best, best_subset


def _validate_k_l(g, k, l):
    if not 2 <= k <= g.n:
        raise ColoringError(f"k={k} must satisfy 2 <= k <= n={g.n}")
    top = k * (k - 1) // 2
    if not 1 <= l <= top:
        raise ColoringError(f"l={l} must satisfy 1 <= l <= C(k,2)={top}")


def check_local_property(
    g: EdgeColoring,
    k: int,
    l: int,
    mode: str = "exhaustive",
    trials: int | None = None,
    seed: int | None = None,
) -> PropertyVerdict:
    """Decide (exhaustively) or probe (sampled) the (k, l) local property.

    Exhaustive mode scans all C(n, k) subsets in lexicographic order.
    Sampled mode draws `trials` uniform k-subsets from random.Random(seed)
    and can only refute, never prove.
    """
    _validate_k_l(g, k, l)
    if mode == "exhaustive":
        subsets = itertools.combinations(range(g.n), k)
        best, subset = _scan_subsets(g, k, l, subsets)
        return PropertyVerdict(best >= l, subset, best, k, l, "exhaustive")
    if mode == "sampled":
        if trials is None or trials < 1:
            raise ColoringError("sampled mode needs trials >= 1")
        rng = random.Random(seed)
        subsets = [tuple(sorted(rng.sample(range(g.n), k))) for _ in range(trials)]
        best, subset = _scan_subsets(g, k, l, subsets)
        return PropertyVerdict(best >= l, subset, best, k, l, "sampled", trials, seed)
    raise ColoringError(f"unknown mode {mode!r}")


def min_colors_over_k_subsets(g: EdgeColoring, k: int):
    """Exact minimum color count over all k-subsets, with the
    lexicographically least subset attaining it."""
    if not 2 <= k <= g.n:
        raise ColoringError(f"k={k} must satisfy 2 <= k <= n={g.n}")
    best, subset = _scan_subsets(g, k, None, itertools.combinations(range(g.n), k))
    return best, subset


def max_monochromatic_degree(g: EdgeColoring):
    """(vertex, color id, degree) of the largest single-color star.

    Ties prefer the smallest vertex, then the smallest color id.
    """
    mat = g.color_matrix()
    best = (-1, -1, 0)
    for v in range(g.n):
        counts = {}
        for u in range(g.n):
            c = mat[v][u]
            if c >= 0:
                counts[c] = counts.get(c, 0) + 1
        for c in sorted(counts):
            if counts[c] > best[2]:
                best = (v, c, counts[c])
    return best


# ---------------------------------------------------------------------------
# JSON interchange: {"n": int, "edges": [[u, v, color], ...]}

def _label_to_json(label):
    if isinstance(label, Fraction):
        if label.denominator == 1:
            return int(label)
        return f"{label.numerator}/{label.denominator}"
    if isinstance(label, (int, str)):
        return label
    raise ColoringError(f"color label {label!r} is not JSON-portable")


def coloring_to_dict(g: EdgeColoring) -> dict:
    edges = [[u, v, _label_to_json(g.color_names[c])] for u, v, c in g.edge_items()]
    return {"n": g.n, "edges": edges}


_FRACTION_RE = re.compile(r"-?\d+/\d+\Z")


def _label_from_json(label):
    if isinstance(label, str) and _FRACTION_RE.match(label):
        return Fraction(label)
    return label


def coloring_from_dict(data: dict) -> EdgeColoring:
    """Parse the JSON shape.  Strings of the form p/q decode to exact
    rationals (the inverse of serialization); other strings are kept
    verbatim."""
    try:
        n = data["n"]
        edges = data["edges"]
    except (TypeError, KeyError):
        raise ColoringError("coloring JSON needs keys 'n' and 'edges'") from None
    triples = []
    for entry in edges:
        if not isinstance(entry, (list, tuple)) or len(entry) != 3:
            raise ColoringError(f"bad edge entry {entry!r}")
        u, v, label = entry
        if not isinstance(label, (int, str)):
            raise ColoringError(f"color label {label!r} must be int or string")
        triples.append((u, v, _label_from_json(label)))
    return new_coloring(n, triples)


def save_coloring(g: EdgeColoring, path) -> None:
    with open(path, "w") as fh:
        json.dump(coloring_to_dict(g), fh, indent=2, sort_keys=True)
        fh.write("\n")


def load_coloring(path) -> EdgeColoring:
    with open(path) as fh:
        return coloring_from_dict(json.load(fh))
