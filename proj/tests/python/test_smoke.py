"""Smoke tests for the python bindings (PYTHONPATH points at the build tree)."""

from fractions import Fraction

import akform


def frac(s):
    return Fraction(s)


def test_version_and_weights():
    assert akform.version() == akform.__version__
    assert akform.weights(2) == [2, 1, 3]
    assert akform.weights(4) == [4, 3, 2, 1, 7]


def test_poly_basis():
    b = akform.poly_basis(2, 3)
    assert b["dim"] == 3
    assert b["monomials"] == [[0, 0, 1], [0, 3, 0], [1, 1, 0]]
    assert [frac(g) for g in b["gram"]] == [
        Fraction(1, 6),
        Fraction(1),
        Fraction(1, 6),
    ]


def test_vf_and_good_bases():
    h = akform.vf_basis(2, -1)
    assert h["dim"] == 2
    assert h["elements"][0] == {"component": 0, "monomial": [0, 1, 0]}
    g = akform.good_basis(2, 2)
    assert [e["component"] for e in g["elements"]] == [0, 1]
    assert all(e["monomial"][-1] >= 1 for e in g["elements"])


def test_operator_matrices():
    d = akform.operator_matrix(2, "d", -1)
    assert d["matrix"]["entries"] == [["-1", "0"], ["-1", "0"], ["1", "2"]]
    a = akform.operator_matrix(2, "dstar", 2)
    assert a["domain_degree"] == 2
    assert a["codomain_degree"] == 1
    box = akform.operator_matrix(2, "box", 2)
    assert box["matrix"]["rows"] == box["matrix"]["cols"]


def test_adjoint_pairing_on_one_vector():
    # <d(U), V>_2 == <U, dstar(V)>_1 for unit coordinate vectors, k = 2
    d = akform.operator_matrix(2, "d", 1)
    a = akform.operator_matrix(2, "dstar", 2)
    dm = [[frac(x) for x in row] for row in d["matrix"]["entries"]]
    am = [[frac(x) for x in row] for row in a["matrix"]["entries"]]
    g_dom = [frac(x) for x in akform.vf_basis(2, 1)["gram"]]
    g_cod = [frac(x) for x in akform.vf_basis(2, 2)["gram"]]
    rows, cols = len(dm), len(dm[0])
    for u in range(cols):
        for v in range(rows):
            lhs = dm[v][u] * g_cod[v]
            rhs = am[u][v] * g_dom[u]
            assert lhs == rhs


def test_verification_reports():
    reports = akform.verify_kernel_trivial(2, 2, 6)
    assert [r["beta"] for r in reports] == [2, 3, 4, 5, 6]
    assert all(r["dim_good_kernel"] == 0 for r in reports)
    assert all(r["witnesses"] == [] for r in reports)

    dec = akform.verify_decomposition(3, 4)
    assert dec["holds"] and dec["dims_ok"] and dec["orthogonal"]

    proof = akform.structured_kernel_proof(3, 6)
    assert proof["complete"]
    assert proof["p1_forced_zero"] and proof["pk_forced_zero"]
    assert sum(s["count"] for s in proof["steps"]) == proof["unknowns"]


def test_normalize_round_trip():
    system = akform.random_good_system(2, 8, seed=5)
    assert system["k"] == 2
    result = akform.normalize(system, 8)
    assert result["all_resonant_zero"]
    assert result["certificate"]["holds"]
    assert result["certificate"]["checked_order"] == 8
    assert all(d["resonant_zero"] for d in result["degrees"])


def test_normalize_rejects_non_slow_fast_input():
    bad = {"k": 2, "components": [[], [], []]}  # missing F entirely
    try:
        akform.normalize(bad, 6)
    except ValueError as err:
        assert "slow-fast" in str(err)
    else:
        raise AssertionError("expected ValueError")


def test_selftest_deterministic():
    a = akform.selftest(max_k=2, max_degree=6, seed=3)
    b = akform.selftest(max_k=2, max_degree=6, seed=3)
    assert a == b
    assert a["ok"]
    assert a["options"] == {"max_k": 2, "max_degree": 6, "seed": 3}
