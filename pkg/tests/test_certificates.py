import copy
import json

from locallab import (
    build_rth_energy_graph,
    build_second_energy_graph,
    check_local_property,
    clique_certificate,
    clique_from_cycle_arith,
    coloring_from_set,
    exact_f,
    exact_g_integers,
    find_cycle,
    load_certificate,
    new_coloring,
    oracle_f_certificate,
    oracle_g_certificate,
    prune_diagonal,
    random_coloring,
    real_set,
    save_certificate,
    sign_decompose,
    verdict_certificate,
    verify_certificate,
    witness_from_cycle_2nd,
    witness_set_certificate,
)


def mono(n):
    return new_coloring(n, [(u, v, "m") for u in range(n) for v in range(u + 1, n)])


def witness_pair():
    g = mono(12)
    eg = prune_diagonal(build_second_energy_graph(g))
    cycle = find_cycle(eg, 4)
    ws = witness_from_cycle_2nd(g, eg, cycle, 8)
    return g, witness_set_certificate(ws)


def clique_pair():
    A = real_set([0, 1, 2, 3, 10, 11, 12, 13])
    g = coloring_from_set(A)
    eg = build_rth_energy_graph(g, 2, ((0, 1, 2, 3), (4, 5, 6, 7)))
    plus = sign_decompose(eg, A)[("+",)]
    cw = clique_from_cycle_arith(plus, find_cycle(plus, 4), 2, A)
    return A, clique_certificate(cw)


def test_witness_set_certificate_round_trip(tmp_path):
    g, cert = witness_pair()
    assert cert["type"] == "witness-set"
    ok, messages = verify_certificate(cert, coloring=g)
    assert ok, messages
    path = tmp_path / "w.json"
    save_certificate(cert, path)
    assert load_certificate(path) == cert
    first = path.read_bytes()
    save_certificate(cert, path)
    assert path.read_bytes() == first
    ok, _ = verify_certificate(load_certificate(path), coloring=g)
    assert ok


def test_witness_set_certificate_detects_tampering():
    g, cert = witness_pair()
    bad = copy.deepcopy(cert)
    bad["claimed_repetitions"] += 1
    ok, messages = verify_certificate(bad, coloring=g)
    assert not ok and messages
    bad = copy.deepcopy(cert)
    bad["vertices"][0] = 11
    ok, _ = verify_certificate(bad, coloring=g)
    assert not ok
    bad = copy.deepcopy(cert)
    bad["equalities"][0]["edge1"] = [0, 9]
    ok, _ = verify_certificate(bad, coloring=g)
    assert not ok
    ok, messages = verify_certificate(cert)
    assert not ok and any("coloring" in m for m in messages)


def test_clique_certificate_round_trip(tmp_path):
    A, cert = clique_pair()
    assert cert["type"] == "arith-clique"
    ok, messages = verify_certificate(cert, elements=A)
    assert ok, messages
    path = tmp_path / "c.json"
    save_certificate(cert, path)
    ok, _ = verify_certificate(load_certificate(path), elements=A)
    assert ok


def test_clique_certificate_detects_tampering():
    A, cert = clique_pair()
    bad = copy.deepcopy(cert)
    bad["equalities"][0]["difference"] = 99
    ok, _ = verify_certificate(bad, elements=A)
    assert not ok
    bad = copy.deepcopy(cert)
    bad["independent_repetitions"] += 1
    ok, _ = verify_certificate(bad, elements=A)
    assert not ok
    bad = copy.deepcopy(cert)
    bad["base_vertices"] = bad["base_vertices"][:-1] + [0]
    ok, _ = verify_certificate(bad, elements=A)
    assert not ok
    ok, messages = verify_certificate(cert)
    assert not ok and any("element" in m for m in messages)


def test_verdict_certificate_round_trip():
    g = random_coloring(9, 4, seed=2)
    v = check_local_property(g, 4, 3)
    cert = verdict_certificate(v)
    assert cert["type"] == "property-verdict"
    ok, messages = verify_certificate(cert, coloring=g)
    assert ok, messages
    bad = copy.deepcopy(cert)
    bad["holds"] = not bad["holds"]
    ok, _ = verify_certificate(bad, coloring=g)
    assert not ok

    sampled = check_local_property(g, 4, 3, mode="sampled", trials=20, seed=5)
    cert = verdict_certificate(sampled)
    ok, messages = verify_certificate(cert, coloring=g)
    assert ok, messages


def test_oracle_f_certificate_round_trip():
    res = exact_f(5, 3, 3)
    cert = oracle_f_certificate(res, 5, 3, 3)
    assert cert["type"] == "oracle-f"
    ok, messages = verify_certificate(cert)
    assert ok, messages
    bad = copy.deepcopy(cert)
    bad["value"] -= 1
    ok, _ = verify_certificate(bad)
    assert not ok
    bad = copy.deepcopy(cert)
    bad["witness"]["edges"][0][2] = "zzz"
    ok, _ = verify_certificate(bad)
    assert not ok


def test_oracle_g_certificate_round_trip():
    res = exact_g_integers(4, 4, 3, 6)
    cert = oracle_g_certificate(res, 4, 4, 3, 6)
    assert cert["type"] == "oracle-g"
    ok, messages = verify_certificate(cert)
    assert ok, messages
    bad = copy.deepcopy(cert)
    bad["witness"]["elements"][1] = 5
    ok, _ = verify_certificate(bad)
    assert not ok
    bad = copy.deepcopy(cert)
    bad["value"] -= 1
    ok, _ = verify_certificate(bad)
    assert not ok


def test_certificates_are_json_serializable():
    g, cert = witness_pair()
    json.dumps(cert)
    A, cert = clique_pair()
    json.dumps(cert)


def test_unknown_certificate_type():
    ok, messages = verify_certificate({"type": "mystery"})
    assert not ok and any("mystery" in m for m in messages)
    ok, messages = verify_certificate({})
    assert not ok and messages
