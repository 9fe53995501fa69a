"""Smoke tests for the python module: load fixtures, run the main operations."""

import os
import sys

sys.path.insert(0, os.environ["PEQA_MODULE_DIR"])

import peqa  # noqa: E402

FIXTURES = os.environ["PEQA_FIXTURES"]


def read(name):
    with open(os.path.join(FIXTURES, name)) as f:
        return f.read()


def main():
    b = peqa.load(read("B.eqa"))
    assert b.name == "B"
    assert b.kind == "eq"
    assert b.elements == ["0", "a", "b", "1"]
    assert b.validate()["all_pass"]

    props = b.props()
    assert props["bounded"] and props["invariant"]
    assert props["commutative"] and props["symmetric"]
    assert not props["equality"]

    assert b.laws()["all_pass"]

    rt = b.roundtrip()
    assert rt["psi_phi_psi_equal"] and rt["phi_psi_equal"]

    ds = b.ds()
    assert ds == [["1"], ["a", "1"], ["b", "1"], ["0", "a", "b", "1"]]
    assert b.ds(normal_only=True) == ds

    states = b.states(kind="I")
    assert len(states) == 6
    assert states == b.states(kind="II") == b.morphisms()
    assert {"0": "0", "a": "a", "b": "b", "1": "1"} in states

    bos = b.bosbach(point="0")
    assert bos["dimension"] == 1
    assert bos["values"]["0"]["text"] == "0"
    assert bos["values"]["b"]["text"] == "1 - u1"
    assert bos["box"][0]["lo"] == "0" and bos["box"][0]["hi"] == "1"
    assert b.check_bosbach(point="0", values=["0", "1/2", "1/2", "1"])
    assert not b.check_bosbach(point="0", values=["0", "1", "1", "1"])

    cmp = b.bosbach(point="0", compare_bck=True)
    assert cmp["eqa_subset_of_bck"] and cmp["spaces_equal"]

    a = peqa.load(read("A.eqa"))
    pa = a.props()
    assert pa["equality"] and not pa["invariant"]
    # the two diamonds share their implication structure (up to the name line)
    assert a.psi().render().splitlines()[1:] == b.psi().render().splitlines()[1:]

    c = peqa.load(read("C.eqa"))
    corr = c.correspondence()
    assert len(corr["IS_I_EQA"]) != len(corr["IS_II_EQA"])

    bck = b.psi()
    assert bck.kind == "bck"
    assert bck.validate()["all_pass"]
    back = bck.phi()
    assert back.render().splitlines()[2:] == peqa.load(read("B.eqa")).render().splitlines()[2:]

    models = peqa.search(size=3)
    assert len(models) == 9
    for m in models:
        assert m.validate()["all_pass"]

    trivial = peqa.load("algebra t\nkind eq\nelements 1\ntop 1\n"
                        "meet\n1\ntilde\n1\nbtilde\n1\nend\n")
    prod = peqa.product(b, trivial)
    assert prod.validate()["all_pass"]
    assert prod.elements == ["0|1", "a|1", "b|1", "1|1"]

    q = b.quotient(["a", "1"])
    assert len(q.elements) == 2 and q.validate()["all_pass"]
    cong = b.congruences()
    assert len(cong) == 4
    assert [["0"], ["a"], ["b"], ["1"]] in cong

    w = peqa.find_counterexample("IS_I != IS_II", max_size=4)
    assert w is not None and len(w.elements) == 4
    assert peqa.find_counterexample("IS_I != IS_II", max_size=2) is None

    try:
        peqa.load("algebra broken\nend\n")
    except peqa.PeqaError:
        pass
    else:
        raise AssertionError("expected PeqaError")

    print("python smoke tests passed")


if __name__ == "__main__":
    main()
