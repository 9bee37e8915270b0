import pytest

import nichols


def test_algebras():
    k2 = nichols.algebra("K2")
    assert (k2.name, k2.dim) == ("K2", 8)
    assert all(k2.axioms().values())
    assert nichols.algebra("DK1").dim == 16
    assert k2.generators == ["K", "xi1", "xi2"]


def test_fuse_agrees():
    r = nichols.fuse("P(0)*P(1)")
    assert r == {"oracle": "2*P(0) + 2*P(1)", "closed_form": "2*P(0) + 2*P(1)", "agreement": True}
    assert nichols.fuse("O(+2,1)*M(1,0,inf)")["agreement"]
    assert nichols.fuse("St(0)*St(1)", algebra="DK1")["agreement"]


def test_green_and_oracle():
    assert nichols.green_mul("P(0)*O(+1,0)") == {"P(0)": 1, "P(1)": 2}
    assert nichols.oracle("O(+1,0)", "O(-1,1)") == {"V(1)": 1, "P(0)": 2}
    assert nichols.dual_label("M(2,0,2/3)") == "M(2,1,2/3)"


def test_module_objects():
    m = nichols.module("V(1)*M(2,1,2/3)")
    assert m.dim == 4
    assert m.identify() == ["M(2,0,2/3)"]
    assert m.is_negligible()
    p = nichols.realize("P(0)")
    v = nichols.realize("V(1)")
    assert p.qdim() == "0" and v.qdim() == "-1"
    assert (p @ v).identify() == ["P(1)"]
    assert (p + v).dim == 5
    assert not nichols.realize("O(+1,0)").is_quasi_dominated()
    back = nichols.module_from_json(m.to_json())
    assert back.identify() == m.identify()


def test_ideals():
    spec = nichols.ideal_closure(["M(2,0,2/3)"])
    assert spec["proper"]
    assert nichols.ideal_contains(spec, "M(2,1,2/3)+P(0)")
    assert not nichols.ideal_contains(spec, "M(3,0,2/3)")
    assert not nichols.ideal_closure(["O(-1,0)"])["proper"]


def test_auslander_and_verify():
    rep = nichols.verify_auslander(2)
    assert rep["pass"] and rep["dim_A"] == rep["dim_Km"] == 8
    ok, text = nichols.verify("lemma")
    assert ok and "overall: PASS" in text


def test_errors():
    with pytest.raises(nichols.ExprSyntaxError):
        nichols.module("P(0)*")
    with pytest.raises(nichols.InvalidLabel):
        nichols.realize("Q(1)")
    with pytest.raises(ValueError):
        nichols.realize("St(0)", algebra="K2")
    with pytest.raises(nichols.Error):
        nichols.verify_auslander(9)
