"""Smoke tests for the python bindings (built extension on PYTHONPATH)."""

import json

import pytest

grasscoh = pytest.importorskip("grasscoh")


def test_lookup():
    spec = grasscoh.lookup("Gr_2(C^5)")
    assert spec["family"] == "hpq"
    assert (spec["p"], spec["q"]) == (2, 3)
    assert spec["supports_clifford"] is True
    assert spec["euler_characteristic"] == 10


def test_lookup_unknown_raises():
    with pytest.raises(KeyError):
        grasscoh.lookup("Gr_2(X^5)")


def test_graded_ring():
    ring = grasscoh.build_ring("Gr_2(C^5)")
    assert ring.dim == 10
    assert ring.basis()[:3] == ["1", "r1", "r2"]
    assert ring.poincare() == "t^12 + t^10 + 2*t^8 + 2*t^6 + 2*t^4 + t^2 + 1"
    assert ring.poincare() == grasscoh.gaussian_binomial(2, 3, 2)
    assert ring.normal_form("r1^5") == "5*r1*r2^2"
    # r1^3 * r1^3 = 5 r2^3
    i = ring.basis().index("r1^3")
    assert ring.multiply(i, i) == "5*r2^3"


def test_clifford_ring_and_idempotents():
    ring = grasscoh.build_ring("Gr_1(C^2)", "clifford")
    assert ring.normal_form("r1^2") == "1/4"
    prs = ring.idempotents()
    assert sorted(prs) == ["-r1 + 1/2", "r1 + 1/2"]


def test_squarefree_and_exterior():
    lgr = grasscoh.build_ring("LGr(C^6)")
    assert lgr.dim == 8
    assert lgr.normal_form("r1^2") == "2*r2"
    ext = grasscoh.build_ring("LGr*(H^4)")
    assert ext.dim == 4
    assert ext.poincare() == "t^6 + t^5 + t + 1"


def test_table_json():
    ring = grasscoh.build_ring("Gr_1(C^3)")
    data = json.loads(ring.table("json"))
    assert data["descriptor"]["family"] == "hpq"
    n = len(data["basis"])
    assert len(data["table"]) == n and all(len(r) == n for r in data["table"])


def test_schur_operations():
    assert grasscoh.jacobi_trudi("(2,0)", 2, 3) == "r1^2 - r2"
    prod = grasscoh.schur_multiply("(1)", "(1)", 2, 3)
    assert prod == {"(1,1)": "1", "(2)": "1"}
    assert grasscoh.pieri("(1)", 1, 2, 3) == prod


def test_shuffles():
    assert grasscoh.shuffles(1, 1) == [[1], [2]]
    assert len(grasscoh.shuffles(2, 3)) == 10


def test_list_spaces():
    rows = grasscoh.list_spaces()
    assert len(rows) == 10


def test_verify_small():
    results = grasscoh.verify("dims", max_size=2)
    assert results and all(r["pass"] for r in results)


def test_rho_and_parameters():
    assert grasscoh.rho_vector("real-even-even", 1, 2) == ["2", "1", "0"]
    assert grasscoh.rho_vector("real-even-odd", 1, 1) == ["3/2", "1/2"]
    assert grasscoh.rho_vector("lagrangian-C", 3) == ["3", "2", "1"]
    # c = t(rho) for Gr_1(C^2): rho = (1/2, -1/2)
    assert grasscoh.deformation_parameters("complex", 1, 1) == ["0", "-1/4"]
