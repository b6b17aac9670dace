"""Checker behavior: passing identities, mutation soundness, sweeps, reports."""
import pytest

from jacktheta import partitions as P
from jacktheta import verify as V


def test_I1_examples():
    assert V.check_I1_binomial_sum((2, 2), (2,), 3).verdict == "pass"
    # r = |lam| degenerates to the reflexive identity
    assert V.check_I1_binomial_sum((3, 1), (2,), 4).verdict == "pass"
    # r = |mu| is the weight-k bridge form
    assert V.check_I1_binomial_sum((3, 1), (2,), 2).verdict == "pass"
    # mu with parts 1 is allowed here
    assert V.check_I1_binomial_sum((3, 1), (2, 1), 3).verdict == "pass"
    with pytest.raises(ValueError):
        V.check_I1_binomial_sum((2, 2), (2,), 1)


def test_identity_checkers_on_rectangle():
    lam = P.rectangle(2, 3)
    for cid in ("I2", "I3", "I4", "I5", "I6", "I7"):
        rep = V.CHECK_FUNCS[cid](lam, (2, 2))
        assert rep.verdict == "pass", cid


def test_prop1_small():
    assert V.check_prop1((2, 2), (2,), 1).verdict == "pass"
    assert V.check_prop1((3, 2), (2, 1), 2).verdict == "pass"
    with pytest.raises(ValueError):
        V.check_prop1((2,), (2,), 1)


def test_mutation_soundness():
    """Every checker must fail, with a witness, on a perturbed input."""
    cases = {
        "I1": ((2, 2), (2,), 3),
        "I2": ((3, 1), (2,)),
        "I3": ((3, 1), (2,)),
        "I4": ((3, 1), (2,)),
        "I5": ((3, 1), (2,)),
        "I6": ((3, 1), (2,)),
        "I7": ((3, 1), (2,)),
        "P1": ((2, 2), (2,), 1),
    }
    for cid, params in cases.items():
        rep = V.CHECK_FUNCS[cid](*params, perturb=1)
        assert rep.verdict == "fail", cid
        assert rep.witness is not None and "diff" in rep.witness, cid


def test_checkers_reject_ones():
    from jacktheta.theta import MuHasOnes

    for cid in ("I2", "I3", "I4", "I5", "I6", "I7"):
        with pytest.raises(MuHasOnes):
            V.CHECK_FUNCS[cid]((3, 1), (2, 1))


def _content(reports):
    return [dict(r.to_obj(), runtime_ms=0) for r in reports]


def test_sweep_deterministic_sampling():
    a = V.sweep(["I2", "I3"], range(0, 5), seed=7, sample=20)
    b = V.sweep(["I2", "I3"], range(0, 5), seed=7, sample=20)
    assert _content(a) == _content(b)
    assert len(a) == 20
    c = V.sweep(["I2"], [], seed=7)
    assert c == []


def test_summarize():
    reps = V.sweep(["I3"], range(0, 4))
    s = V.summarize(reps)
    assert s["total"] == len(reps)
    assert s["fail"] == 0
    assert s["pass"] == s["total"]
    assert s["first_failures"] == []


def test_conjecture1_sweep_m1():
    reports = V.conjecture1_sweep(1, 3)
    assert all(r.verdict == "finding" for r in reports)
    assert all(r.witness["holds"] for r in reports)
    mus = [tuple(r.params["mu"]) for r in reports]
    assert mus == [(2,), (3,)]


def test_table6_and_thm2_checks():
    assert all(r.verdict == "pass" for r in V.table6_check())
    reps = V.thm2_check((2,))
    assert reps[0].verdict == "pass"
    assert reps[1].verdict == "finding" and reps[1].witness["holds"]


def test_theorem1_suite():
    reps = V.theorem1_suite(4)
    nonneg = [r for r in reps if r.check_id == "theorem1.nonneg"]
    assert nonneg and all(r.verdict == "pass" for r in nonneg)
    findings = [r for r in reps if r.check_id == "theorem1.integrality"]
    assert findings and all(r.witness["holds"] for r in findings)


def test_report_serialization():
    rep = V.check_I2_p1_lower((2, 1), (2,))
    obj = rep.to_obj()
    assert obj["check_id"] == "I2"
    assert obj["verdict"] == "pass"
    assert isinstance(obj["runtime_ms"], int)
