import pytest

from lrmbasis import verification
from lrmbasis.report import GuardError, Report, check_guard
from lrmbasis.verification import SUITES, run_suite


@pytest.mark.parametrize("n", range(1, 5))
@pytest.mark.parametrize("suite", ["lrm", "mackey", "vb", "wuv", "wu2"])
def test_algebraic_suites_pass(suite, n):
    rep = run_suite(suite, n)
    assert rep.passed, rep.to_text()
    assert rep.cases


def test_wuv_finds_admissible_words():
    rep = run_suite("wuv", 4)
    assert rep.cases[-1].label.endswith("admissible (w, u, chi, v) found")
    assert int(rep.cases[-1].label.split()[0]) > 0


def test_wu2_part_b_only_up_to_limit():
    small = verification.verify_wu2(3)
    assert any(c.label.startswith("(b)") for c in small.cases)
    no_b = verification.verify_wu2(3, part_b_max_n=2)
    assert not any(c.label.startswith("(b)") for c in no_b.cases)


def test_suite_registry():
    assert set(SUITES) >= {"mackey", "vb", "wuv", "wu2", "basis", "filtration", "scalar-action",
                           "bimodule", "anagram", "inclusion", "sigma-inclusion"}
    with pytest.raises(KeyError):
        run_suite("nope", 3)


def test_guards():
    check_guard(5)
    check_guard(6, extended=True)
    with pytest.raises(GuardError):
        check_guard(6)
    with pytest.raises(GuardError):
        check_guard(7, extended=True)
    with pytest.raises(GuardError):
        check_guard(-1)
    with pytest.raises(GuardError):
        run_suite("vb", 6)
    run_suite("lrm", 6)


def test_report_formatting():
    rep = Report("demo", 3)
    assert rep.add("first", True)
    assert not rep.add("second", False, "left: 1\nright: 2")
    assert rep.summary() == "FAIL demo n=3: 1/2 cases"
    text = rep.to_text()
    assert "FAIL second" in text and "       left: 1" in text
    obj = rep.to_obj()
    assert obj["passed"] is False and obj["cases"][1]["witness"] == "left: 1\nright: 2"
    cont = Report("demo", 3, stop_on_failure=False)
    assert cont.add("x", False)


def test_mackey_failure_witness(monkeypatch):
    from collections import Counter
    real = verification.b_product_mackey
    monkeypatch.setattr(verification, "b_product_mackey",
                        lambda a, b: real(a, b) + Counter({(3,): 1}))
    rep = verification.verify_mackey(3)
    assert not rep.passed and "mackey multiset" in rep.failures[0].witness
