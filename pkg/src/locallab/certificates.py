"""JSON certificates and the verifier that re-checks them from scratch.

A certificate carries everything a skeptical reader needs: the claimed
object plus the raw equalities behind it.  verify_certificate never
trusts a stored tally; it recounts colors, re-evaluates differences,
and re-runs the union-find independence argument against the coloring
or element set supplied by the caller.
"""

from __future__ import annotations

import itertools
import json
from fractions import Fraction

from .coloring import (
    EdgeColoring,
    PropertyVerdict,
    _label_to_json,
    check_local_property,
    coloring_from_dict,
    coloring_to_dict,
)
from .arithmetic import (
    check_g_property,
    difference_set,
    real_set_from_dict,
    real_set_to_dict,
)
from .errors import LocalLabError
from .forbidden import CliqueWitness, WitnessSet, _UnionFind
from .oracle import OracleResult


def witness_set_certificate(ws: WitnessSet) -> dict:
    return {
        "type": "witness-set",
        "target_k": ws.target_k,
        "vertices": list(ws.vertices),
        "claimed_repetitions": ws.claimed_repetitions,
        "colors_spanned": ws.colors_spanned,
        "equalities": [
            {
                "edge1": list(eq.edge1),
                "edge2": list(eq.edge2),
                "color": _label_to_json(eq.color),
                "kind": eq.kind,
            }
            for eq in ws.equalities
        ],
    }


def clique_certificate(cw: CliqueWitness) -> dict:
    return {
        "type": "arith-clique",
        "k": len(cw.clique) // 2,
        "r": len(cw.clique[0]),
        "clique": [list(row) for row in cw.clique],
        "base_vertices": list(cw.base_vertices),
        "repetitions": cw.repetitions,
        "independent_repetitions": cw.independent_repetitions,
        "equalities": [
            {
                "edge1": list(eq.edge1),
                "edge2": list(eq.edge2),
                "difference": _label_to_json(eq.difference),
                "kind": eq.kind,
                "rows": list(eq.rows),
                "coordinates": list(eq.coordinates),
            }
            for eq in cw.equalities
        ],
    }


def verdict_certificate(v: PropertyVerdict) -> dict:
    return {
        "type": "property-verdict",
        "k": v.k,
        "l": v.l,
        "mode": v.mode,
        "holds": v.holds,
        "witness": None if v.witness is None else list(v.witness),
        "min_colors_seen": v.min_colors_seen,
        "trials": v.trials,
        "seed": v.seed,
    }


def oracle_f_certificate(res: OracleResult, n: int, k: int, l: int) -> dict:
    return {
        "type": "oracle-f",
        "n": n,
        "k": k,
        "l": l,
        "value": res.value,
        "status": res.status,
        "nodes_explored": res.nodes_explored,
        "canonical_classes": res.canonical_classes,
        "witness": None if res.witness is None else coloring_to_dict(res.witness),
    }


def oracle_g_certificate(res: OracleResult, n: int, k: int, l: int,
                         max_value: int) -> dict:
    return {
        "type": "oracle-g",
        "n": n,
        "k": k,
        "l": l,
        "max_value": max_value,
        "value": res.value,
        "status": res.status,
        "nodes_explored": res.nodes_explored,
        "canonical_classes": res.canonical_classes,
        "witness": None if res.witness is None else real_set_to_dict(res.witness),
    }


def save_certificate(cert: dict, path) -> None:
    with open(path, "w") as fh:
        json.dump(cert, fh, indent=2, sort_keys=True)
        fh.write("\n")


def load_certificate(path) -> dict:
    with open(path) as fh:
        cert = json.load(fh)
    if not isinstance(cert, dict) or "type" not in cert:
        raise LocalLabError("not a certificate: missing 'type'")
    return cert


def _canon(label):
    return _label_to_json(label)


def _check_repetition_edges(cert, g: EdgeColoring, messages):
    """Re-check every equality record and recount its independence."""
    vertex_set = set(cert["vertices"])
    forests = {}
    independent = 0
    for idx, eq in enumerate(cert["equalities"]):
        e1, e2 = tuple(eq["edge1"]), tuple(eq["edge2"])
        for u, v in (e1, e2):
            if not (0 <= u < v < g.n):
                messages.append(f"equality {idx}: pair ({u},{v}) is not an edge")
                return
            if u not in vertex_set or v not in vertex_set:
                messages.append(f"equality {idx}: pair ({u},{v}) leaves the witness set")
        if e1 == e2:
            messages.append(f"equality {idx}: the two edges coincide")
            continue
        c1 = _canon(g.label_of(g.color_of(*e1)))
        c2 = _canon(g.label_of(g.color_of(*e2)))
        if not c1 == c2 == _canon(eq["color"]):
            messages.append(
                f"equality {idx}: colors {c1!r} and {c2!r} do not match the claim {eq['color']!r}"
            )
            continue
        forest = forests.setdefault(c1, _UnionFind())
        if forest.union(e1, e2):
            independent += 1
    if independent < cert["claimed_repetitions"]:
        messages.append(
            f"only {independent} independent repetitions re-verify, {cert['claimed_repetitions']} claimed"
        )


def _verify_witness_set(cert, g: EdgeColoring, messages):
    vertices = cert["vertices"]
    if len(vertices) != cert["target_k"] or len(set(vertices)) != len(vertices):
        messages.append(f"vertex list is not a {cert['target_k']}-set")
        return
    if any(not 0 <= v < g.n for v in vertices):
        messages.append("witness vertex out of range")
        return
    _check_repetition_edges(cert, g, messages)
    mat = g.color_matrix()
    spanned = len({mat[u][v] for u, v in itertools.combinations(vertices, 2)})
    if spanned != cert["colors_spanned"]:
        messages.append(f"set spans {spanned} colors, certificate says {cert['colors_spanned']}")
    k = cert["target_k"]
    budget = k * (k - 1) // 2 - cert["claimed_repetitions"]
    if spanned > budget:
        messages.append(f"set spans {spanned} colors, more than the implied bound {budget}")


def _verify_clique(cert, elements, messages):
    vals = list(getattr(elements, "elements", elements))
    rows = [tuple(row) for row in cert["clique"]]
    k, r = cert["k"], cert["r"]
    if len(rows) != 2 * k or any(len(row) != r for row in rows):
        messages.append(f"clique shape is not {2 * k} rows of width {r}")
        return
    flat = [v for row in rows for v in row]
    if sorted(flat) != sorted(cert["base_vertices"]) or len(set(flat)) != len(flat):
        messages.append("base vertices do not match the clique rows or repeat")
        return
    if any(not 0 <= v < len(vals) for v in flat):
        messages.append("base vertex out of range of the element set")
        return
    expected = (k * (2 * k - 1)) * (r - 1 + r * (r - 1) // 2)
    if cert["repetitions"] != expected or len(cert["equalities"]) != expected:
        messages.append(
            f"expected {expected} listed repetitions, certificate has {cert['repetitions']}"
        )
    forests = {}
    independent = 0
    for idx, eq in enumerate(cert["equalities"]):
        e1, e2 = tuple(eq["edge1"]), tuple(eq["edge2"])
        d1 = abs(vals[e1[0]] - vals[e1[1]])
        d2 = abs(vals[e2[0]] - vals[e2[1]])
        if not d1 == d2 == _from_canon(eq["difference"]):
            messages.append(
                f"equality {idx}: differences {d1} and {d2} do not match the claim {eq['difference']!r}"
            )
            continue
        if e1 != e2:
            forest = forests.setdefault(d1, _UnionFind())
            if forest.union(e1, e2):
                independent += 1
    if independent != cert["independent_repetitions"]:
        messages.append(
            f"{independent} independent repetitions re-verify, certificate says {cert['independent_repetitions']}"
        )


def _from_canon(payload):
    if isinstance(payload, str):
        value = Fraction(payload)
        return int(value) if value.denominator == 1 else value
    return payload


def _verify_verdict(cert, g: EdgeColoring, messages):
    fresh = check_local_property(
        g, cert["k"], cert["l"], mode=cert["mode"],
        trials=cert["trials"], seed=cert["seed"],
    )
    if fresh.holds != cert["holds"]:
        messages.append(f"re-check says holds={fresh.holds}, certificate says {cert['holds']}")
    stored = None if cert["witness"] is None else tuple(cert["witness"])
    if fresh.witness != stored:
        messages.append(f"re-check witness {fresh.witness} differs from {stored}")
    if fresh.min_colors_seen != cert["min_colors_seen"]:
        messages.append(
            f"re-check min colors {fresh.min_colors_seen} differs from {cert['min_colors_seen']}"
        )


def _verify_oracle_f(cert, messages):
    if cert["status"] == "infeasible":
        if cert["l"] <= cert["k"] * (cert["k"] - 1) // 2:
            messages.append("infeasible status but l <= C(k,2)")
        return
    g = coloring_from_dict(cert["witness"])
    if g.n != cert["n"]:
        messages.append(f"witness is on {g.n} vertices, certificate says {cert['n']}")
        return
    if g.num_colors != cert["value"]:
        messages.append(f"witness uses {g.num_colors} colors, certificate says {cert['value']}")
    verdict = check_local_property(g, cert["k"], cert["l"])
    if not verdict.holds:
        messages.append(f"witness coloring violates the ({cert['k']},{cert['l']}) property")


def _verify_oracle_g(cert, messages):
    if cert["status"] == "infeasible":
        return
    A = real_set_from_dict(cert["witness"])
    if len(A.elements) != cert["n"]:
        messages.append(f"witness has {len(A.elements)} elements, certificate says {cert['n']}")
        return
    if min(A.elements) != 0 or max(A.elements) > cert["max_value"]:
        messages.append(f"witness leaves the normalized range 0..{cert['max_value']}")
    size = len(difference_set(A))
    if size != cert["value"]:
        messages.append(f"witness difference set has {size} values, certificate says {cert['value']}")
    if not check_g_property(A, cert["k"], cert["l"]).holds:
        messages.append(f"witness set violates the ({cert['k']},{cert['l']}) property")


def verify_certificate(cert: dict, coloring: EdgeColoring | None = None,
                       elements=None) -> tuple[bool, list]:
    """Re-check a certificate; returns (ok, failure messages).

    witness-set and property-verdict certificates need the coloring they
    were issued for; arith-clique needs the element set; oracle
    certificates embed their witness and need nothing.
    """
    messages = []
    ctype = cert.get("type")
    if ctype == "witness-set":
        if coloring is None:
            messages.append("witness-set verification needs the coloring")
        else:
            _verify_witness_set(cert, coloring, messages)
    elif ctype == "arith-clique":
        if elements is None:
            messages.append("arith-clique verification needs the element set")
        else:
            _verify_clique(cert, elements, messages)
    elif ctype == "property-verdict":
        if coloring is None:
            messages.append("property-verdict verification needs the coloring")
        else:
            _verify_verdict(cert, coloring, messages)
    elif ctype == "oracle-f":
        _verify_oracle_f(cert, messages)
    elif ctype == "oracle-g":
        _verify_oracle_g(cert, messages)
    else:
        messages.append(f"unknown certificate type {ctype!r}")
    return not messages, messages
