import itertools
import json
from fractions import Fraction

import pytest

from rwhitney import identities
from rwhitney.identities import (
    FAMILIES,
    IdentityReport,
    cauchy_bernoulli_checks,
    classical_bernoulli_at_integer,
    classical_bernoulli_oracle,
    classical_bernoulli_series,
    inversion_wB_check,
    make_report,
    r_stirling_oracle,
    run_suite,
    stirling_oracle,
)
from rwhitney.poly import MPoly

F = Fraction


def _set_partitions(elements):
    if not elements:
        yield []
        return
    first, rest = elements[0], elements[1:]
    for part in _set_partitions(rest):
        for i in range(len(part)):
            yield part[:i] + [[first] + part[i]] + part[i + 1:]
        yield [[first]] + part


def _brute_stirling(n, k):
    return sum(1 for p in _set_partitions(list(range(n))) if len(p) == k)


def _brute_r_stirling(rho, n, k):
    # partitions of {0..n-1} into k blocks with 0..rho-1 in distinct blocks
    count = 0
    for p in _set_partitions(list(range(n))):
        if len(p) != k:
            continue
        if all(sum(1 for e in block if e < rho) <= 1 for block in p):
            count += 1
    return count


def test_stirling_examples():
    assert stirling_oracle(4, 2) == 7 == _brute_stirling(4, 2)
    assert all(stirling_oracle(n, n) == 1 for n in range(8))
    assert stirling_oracle(3, 1) == 1


@pytest.mark.parametrize("n", range(8))
def test_stirling_matches_enumeration(n):
    for k in range(n + 1):
        assert stirling_oracle(n, k) == _brute_stirling(n, k)


@pytest.mark.parametrize("rho", [0, 1, 2, 3])
def test_r_stirling_matches_enumeration(rho):
    for n in range(rho, 8):
        for k in range(rho, n + 1):
            assert r_stirling_oracle(rho, n, k) == _brute_r_stirling(rho, n, k)


def test_oracle_bad_indices():
    with pytest.raises(ValueError):
        stirling_oracle(-1, 0)
    with pytest.raises(ValueError):
        r_stirling_oracle(1, -2, 0)


def test_oracles_do_not_depend_on_whitney():
    import ast
    import inspect

    tree = ast.parse(inspect.getsource(identities))
    oracle_names = {"stirling_oracle", "r_stirling_oracle", "classical_bernoulli_oracle",
                    "classical_bernoulli_series", "classical_bernoulli_at_integer"}
    whitney_names = {"whitney_first", "whitney_second", "whitney_second_explicit", "triangle",
                     "whitney_definitional_oracle", "orthogonality_sums", "whitney_egf_column",
                     "whitney_translated", "bernoulli_q_wsum"}
    for node in tree.body:
        if isinstance(node, ast.FunctionDef) and node.name in oracle_names:
            used = {n.id for n in ast.walk(node) if isinstance(n, ast.Name)}
            assert not used & whitney_names, node.name


def test_classical_bernoulli():
    values = classical_bernoulli_oracle(10)
    assert values[:5] == [1, F(-1, 2), F(1, 6), 0, F(-1, 30)]
    assert values[10] == F(5, 66)
    assert [v.to_rational() for v in classical_bernoulli_series(10)] == values


def test_classical_bernoulli_polynomials():
    polys = classical_bernoulli_series(6, with_r=True)
    assert polys[2] == MPoly.parse("r^2 - r + 1/6")
    for rho in range(4):
        for n in range(7):
            assert polys[n].evaluate({"r": rho}) == classical_bernoulli_at_integer(rho, n)


def test_inversion_examples():
    assert inversion_wB_check(0).lhs == "1" and inversion_wB_check(0).passed
    rep = inversion_wB_check(1)
    assert rep.passed and rep.lhs == rep.rhs == "1/2"
    rep = inversion_wB_check(7)
    assert rep.passed and rep.rhs == "630"


@pytest.mark.parametrize("n", [0, 1, 5])
def test_cauchy_bernoulli_checks(n):
    reports = cauchy_bernoulli_checks(n)
    assert len(reports) == 4
    assert all(rep.passed for rep in reports)
    if n == 0:
        assert all(rep.lhs == "1" for rep in reports)
    if n == 1:
        assert reports[2].lhs == "r - 1/2"


def test_make_report_fail_keeps_both_sides():
    rep = make_report("demo", {"n": 1}, MPoly.parse("q"), F(1, 2))
    assert rep.status == "fail" and rep.lhs == "q" and rep.rhs == "1/2"


def test_report_dict_round_trip():
    rep = make_report("demo", {"n": 3, "q": "1/2"}, 1, 1)
    data = json.loads(json.dumps(rep.to_dict()))
    assert IdentityReport.from_dict(data) == rep
    assert set(data) == {"identity_id", "instance", "status", "lhs", "rhs"}


def test_suite_base_case():
    reports = run_suite(0, seed=0)
    assert reports and all(rep.passed for rep in reports)


def test_suite_covers_every_family():
    ids = {rep.identity_id for rep in run_suite(3, seed=1)}
    for prefix in ["whitney.orthogonality", "whitney.egf", "whitney.translation", "whitney.explicit",
                   "whitney.first.definition", "whitney.second.definition", "whitney.reduce",
                   "cauchy.W_convolution", "cauchy.first.integral", "cauchy.from_bernoulli",
                   "bernoulli.from_cauchy", "bernoulli.w_inversion", "bernoulli.translation",
                   "bernoulli.binomial_expansion", "bernoulli.route.gf", "bernoulli.route.explicit",
                   "bernoulli.sign_law", "bernoulli.reduce", "classical.numbers.series"]:
        assert any(i.startswith(prefix) for i in ids), prefix


def test_suite_deterministic_and_sorted():
    a = run_suite(6, seed=4)
    b = run_suite(6, seed=4)
    assert a == b
    assert [rep.sort_key() for rep in a] == sorted(rep.sort_key() for rep in a)
    assert all(rep.passed for rep in a)


def test_seed_changes_only_random_points():
    a = {(r.identity_id, tuple(sorted(r.instance.items()))) for r in run_suite(3, seed=1)}
    b = {(r.identity_id, tuple(sorted(r.instance.items()))) for r in run_suite(3, seed=2)}
    diff = {i for i, _ in a ^ b}
    assert diff <= {"whitney.explicit", "bernoulli.route.explicit"}


def test_family_filter_is_stable():
    full = [r for r in run_suite(4, seed=9) if r.identity_id.startswith("bernoulli.route")]
    only = [r for r in run_suite(4, seed=9, families=["bernoulli"]) if r.identity_id.startswith("bernoulli.route")]
    assert full == only


def test_suite_rejects_unknown_family():
    with pytest.raises(ValueError):
        run_suite(2, families=["nope"])
    assert set(FAMILIES) == {"whitney", "reductions", "bernoulli", "cauchy"}
