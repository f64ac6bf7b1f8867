"""Smoke test for the trisys extension module.

Build and install the extension first, then run from the repository root:

    (cd crates/python && maturin develop)
    python python/smoke_test.py
"""

import json
import os
import sys
import tempfile
from fractions import Fraction

import trisys

CORPUS = os.path.join(os.path.dirname(os.path.abspath(__file__)), "..", "crates", "core", "corpus")


def corpus(name):
    return os.path.join(CORPUS, name)


def main():
    sl2 = trisys.Document.load(corpus("sl2_lts.json"))
    assert sl2.kind == "algebra"
    assert sl2.check().passed

    a = sl2.algebra()
    assert a.basis == ["h", "e", "f"] and a.kind == "lts"
    # [e, f, e] = [[e, f], e] = [h, e] = 2e
    assert [Fraction(c) for c in a.bracket(["e", "f", "e"])] == [0, 2, 0]
    assert a.mc()["passes"]
    assert a.cohomology(max_degree=2) == [(1, 9, 6, 3), (2, 24, 18, 0)]
    assert a.oracle(2).passed

    zero2 = trisys.Document.load(corpus("zero2.json")).algebra()
    assert [h for (_, _, _, h) in zero2.cohomology("trivial", 2)] == [2, 2]
    rep = trisys.Document.load(corpus("sl2_natural_rep.json"))
    assert len(a.cohomology(rep, 1)) == 1

    broken = trisys.Document.load(corpus("broken_fundamental.json"))
    report = broken.check()
    assert not report and "lts3" in report.failed
    assert report.violations[0]["identity"] == "lts3"
    assert json.loads(report.to_json("broken"))["kind"] == "report"
    try:
        broken.algebra().cohomology()
    except trisys.PreconditionError:
        pass
    else:
        raise AssertionError("cohomology of a non-LTS must fail")

    cube = trisys.Document.load(corpus("unit_cube_nambu.json")).algebra()
    assert not cube.mc()["mc"]

    strict = trisys.Document.load(corpus("sl2_identity_strict.json"))
    crossed = strict.convert("crossed")
    assert crossed.kind == "crossed_module" and crossed.check().passed
    assert crossed.convert("strict") == strict

    transported = trisys.Document.load(corpus("sl2_transported.json"))
    cat = transported.convert("categorified")
    assert cat.check().passed
    assert cat.convert("decategorified").to_json() == transported.to_json()

    try:
        trisys.Document.load(corpus("zero2_skeletal.json")).convert("crossed")
    except trisys.PreconditionError:
        pass
    else:
        raise AssertionError("a non-strict system has no crossed module")

    try:
        trisys.Document.parse('{"version": "1", "kind": "algebra"')
    except trisys.InputError as e:
        assert "line" in str(e)
    else:
        raise AssertionError("truncated JSON must not parse")

    with tempfile.TemporaryDirectory() as d:
        path = os.path.join(d, "sl2.json")
        sl2.save(path)
        assert trisys.Document.load(path) == sl2

    code, out, _ = trisys.run_cli(["mc", corpus("sl2_lts.json")])
    assert code == 0 and out.startswith("MC: yes; constraints: yes")
    code, _, err = trisys.run_cli(["check", corpus("missing.json")])
    assert code == 2 and err

    print("python smoke test: ok")
    return 0


if __name__ == "__main__":
    sys.exit(main())
