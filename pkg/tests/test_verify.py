import pytest

from rookhl.dyck import enumerate_dyck, modular_triples
from rookhl.qseries import QLaurent, ZERO, ONE, Q, q_power
from rookhl import rook
from rookhl.rook import type_polynomials
from rookhl.verify import (
    CheckReport, check_main, check_modular, check_multiplicativity,
    check_llt, check_principal, sweep, sweep_tasks,
)


def test_check_main_small_sizes():
    for n in range(5):
        for gamma in enumerate_dyck(n):
            rep = check_main(gamma)
            assert rep.ok, (gamma, rep)
            assert rep.identity == "main"
            assert rep.lhs == rep.rhs == ""
    assert check_main((2, 2, 4, 4, 5)).ok


def test_check_main_reports_counterexample_when_rule_is_broken(monkeypatch):
    monkeypatch.setattr(
        rook, "free_cells",
        lambda gamma, placement: rook._free_cells(gamma, placement,
                                                  gate=False))
    rep = check_main((2, 2, 4, 4, 5))
    assert rep.status == "counterexample"
    assert rep.instance == "heights=2,2,4,4,5"
    assert rep.lhs and rep.rhs and rep.lhs != rep.rhs


def test_modular_recurrence_worked_example():
    # middle (2,3,3) with its lower and upper neighbors, single-rook types
    tp_mid = type_polynomials((2, 3, 3))
    tp_low = type_polynomials((2, 2, 3))
    tp_up = type_polynomials((3, 3, 3))
    mu = (1, 1, 1)
    assert tp_mid[mu] == q_power(1)
    assert tp_low[mu] == q_power(2)
    assert tp_up[mu] == ONE
    assert (ONE + Q) * tp_mid[mu] == tp_low[mu] + Q * tp_up[mu]


def test_check_modular():
    for n in range(5):
        for level in ("r_poly", "chromatic"):
            reports = check_modular(n, level)
            assert len(reports) == len(modular_triples(n))
            assert all(r.ok for r in reports)
    assert check_modular(3, "r_poly")[0].identity == "modular.r_poly"
    with pytest.raises(ValueError):
        check_modular(3, "colorings")


def test_check_multiplicativity_single_step():
    reports = check_multiplicativity((1,), 1)
    assert [r.instance for r in reports] == [
        "heights=1;k=1;type=2", "heights=1;k=1;type=1,1"]
    assert all(r.ok for r in reports)
    assert type_polynomials((1, 2)) == {(2,): ONE, (1, 1): Q}


def test_check_multiplicativity_small_sizes():
    for k in (1, 2):
        for n in range(4):
            for gamma in enumerate_dyck(n):
                assert all(r.ok for r in check_multiplicativity(gamma, k))
    for k in (1, 2):
        for n in range(3):
            for gamma in enumerate_dyck(n):
                reports = check_multiplicativity(gamma, k,
                                                 function_level=True)
                assert len(reports) == 1
                assert reports[0].ok
                assert reports[0].identity == "mult.function"
    with pytest.raises(ValueError):
        check_multiplicativity((1,), 0)


def test_check_llt_small_sizes():
    for n in range(5):
        for gamma in enumerate_dyck(n):
            rep = check_llt(gamma)
            assert rep.ok, (gamma, rep)


def test_check_principal_small_sizes():
    for n in range(5):
        for gamma in enumerate_dyck(n):
            reports = check_principal(gamma, n + 2)
            assert len(reports) == n + 3
            assert all(r.ok for r in reports)
    insts = [r.instance for r in check_principal((1, 2), 1)]
    assert insts == ["heights=1,2;colors=0", "heights=1,2;colors=1"]


def test_sweep_main_count_and_determinism():
    reports = sweep(4, {"main"})
    assert len(reports) == 23
    assert all(r.ok for r in reports)
    assert reports == sweep(4, {"main"})
    assert reports[0].instance == "heights=-"


def test_sweep_all_identities_small():
    reports = sweep(3, {"main", "modular", "mult", "llt", "principal"})
    assert all(r.ok for r in reports)
    kinds = {r.identity for r in reports}
    assert kinds == {"main", "modular.r_poly", "modular.chromatic",
                     "mult", "mult.function", "llt", "principal"}


def test_sweep_parallel_equals_serial():
    serial = sweep(3, {"main", "llt"})
    parallel = sweep(3, {"main", "llt"}, jobs=2)
    assert serial == parallel


def test_sweep_rejects_unknown_identity():
    with pytest.raises(ValueError):
        sweep(3, {"main", "bogus"})


def test_sweep_tasks_ranges():
    tasks = sweep_tasks(4, {"mult"})
    combos = {(len(t[1]), t[2], t[3]) for t in tasks}
    assert (3, 1, False) in combos
    assert (1, 3, False) in combos
    assert (2, 2, True) in combos
    assert all(len(t[1]) + t[2] <= 4 for t in tasks)
    assert all(len(t[1]) <= 3 for t in tasks if t[3])
    mods = sweep_tasks(7, {"modular"})
    assert ("modular", 7, "r_poly") in mods
    assert ("modular", 5, "chromatic") in mods
    assert ("modular", 6, "chromatic") not in mods


def test_report_json():
    rep = CheckReport("main", "heights=1,2", "verified")
    assert rep.to_json() == {
        "identity": "main", "instance": "heights=1,2",
        "status": "verified", "lhs": "", "rhs": ""}
