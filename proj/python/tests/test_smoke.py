import pytest

import sumprod


def test_counts_on_pinned_sets():
    assert sumprod.collinear_triples(5, [0, 1], method="brute") == 40
    assert sumprod.collinear_quadruples(5, [0, 1], method="line") == 88
    assert sumprod.collinear_triples(7, [1, 2, 4]) == 279
    assert sumprod.t_fn(7, [1, 2, 4]) == {0: 6, 1: 6, 3: 3, 5: 3}


def test_sets_and_ratios():
    g = sumprod.make_family(7, "subgroup", order=3)
    assert g == [1, 2, 4]
    assert sumprod.pinned_ratios(7, g) == [1, 3, 5]
    assert sumprod.pinned_ratios(7, g, strict=True) == [3, 5]
    assert sumprod.cross_ratio_set(7, [0, 1, 2, 3]) == [2, 4, 6]
    assert sumprod.combine(5, [0, 1], [0, 1], "sum") == [0, 1, 2]
    assert sumprod.eval_expr(7, g, "(A-A)(A-A)") == sumprod.combine(
        7, sumprod.combine(7, g, g, "diff"), sumprod.combine(7, g, g, "diff"), "prod")


def test_energies_and_histogram():
    assert sumprod.energy(5, [0, 1], [0, 1]) == 6
    assert sumprod.energy(5, [0, 1], [0, 1], kind="multiplicative") == 10
    assert sumprod.cross_ratio_energy(11, [0, 1, 3, 7, 9]) == 8832
    h = sumprod.incidence_histogram(7, [1, 2, 4])
    assert h[:4] == [11, 27, 9, 9]


def test_symplectic():
    q = sumprod.quad_identity(7, (1, 0), (0, 1), (1, 1), (1, 2))
    assert q["holds"] and q["expanded"] == 2
    assert sumprod.omega_set(7, [(1, 0), (0, 1)]) == [1, 6]
    assert sumprod.teq_counts(7, [1, 2, 4])["second_moment"] == 1215


def test_errors_carry_kind():
    with pytest.raises(sumprod.SumprodError) as err:
        sumprod.make_family(7, "subgroup", order=4)
    assert err.value.kind == "BadOrder"
    with pytest.raises(sumprod.SumprodError):
        sumprod.collinear_quadruples(101, list(range(40)), budget=10)


def test_checks_and_sweeps():
    ids = {c["id"] for c in sumprod.check_registry()}
    assert {"line_moment_2", "T_asymp"} <= ids
    r = sumprod.run_check("line_moment_2", 7, [1, 2, 4])
    assert r["status"] == "pass" and r["lhs"] == r["rhs"]
    spec = {"primes": [101], "families": [{"kind": "random"}], "sizes": [5, 8],
            "quantities": ["R", "T"], "trials": 2, "seed": 3}
    a = sumprod.run_sweep(spec, jobs=1)
    b = sumprod.run_sweep(spec, jobs=3)
    assert a == b
    assert len(a["rows"]) == 8
    assert sumprod.fourfold_coverage(101, [0, 1, 3, 7])["covered_count"] > 0
    assert sumprod.eval_size_expr("ceil(p^0.5)", 101) == 11
