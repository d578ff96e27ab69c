import pytest

import satura


def test_problem_names():
    assert set(satura.problem_names()) == {"monomial-example", "conics-affine", "alt"}


def test_monomial_example_counts():
    assert satura.compute_gi("monomial-example", 1, 32003)["value"] == 5
    r = satura.compute_gi("monomial-example", 0, 32003, seed=1)
    assert r["value"] == 6
    assert r["degenerate"] is False
    assert r["field"] == "Fp:32003"


def test_rational_field():
    assert satura.compute_gi("monomial-example", 1, 0)["value"] == 5


def test_groebner_basis_counts_roots():
    # x^2 - 1 and y - x have the two roots (1, 1), (-1, -1).
    gb = satura.groebner_basis(["x^2 - 1", "y - x"], ["x", "y"])
    assert gb["standard_monomials"] == 2
    assert len(gb["basis"]) == 2


def test_positive_dimensional_has_no_count():
    assert satura.groebner_basis(["x*y"], ["x", "y"])["standard_monomials"] is None


def test_trials_conserve_count():
    rep = satura.run_trials("monomial-example", 0, 101, 20, seed=3, threads=2)
    h = rep["histogram"]
    total = sum(h["values"].values()) + h["unit"] + h["positive_dimensional"] + h["timeout"] + h["error"]
    assert total == 20
    assert rep["schema_version"] == satura.SCHEMA_VERSION


def test_hilbert_table_alt_top_row():
    t = satura.hilbert_table("alt", [7], 32771, 5, seed=1)
    assert t["rows"][0]["values"] == [1, 3, 6, 7, 7, 7]


def test_hilbert_function_principal():
    # HF of <x> in two variables is d + 1.
    assert satura.hilbert_function(["x"], ["x", "y"], 4) == [1, 2, 3, 4, 5]


def test_bounds():
    assert satura.nu_upper_bound(47, 8) == 7575968400
    degrees = [2] * 1  # a single quadric in one variable
    assert satura.discriminant_degree_bound(1, 1, 2, 2, degrees) == 2 * (2 + 2 * 2) * 2


def test_lm_agreement_lucky_prime():
    polys = ["9*x1 + 4*x2 - 6", "17017*x1 + 9945*x2 - 4675*x1*x2^2 + 9295*x1^3*x2^2"]
    assert satura.lm_agreement(polys, ["x1", "x2"], 7)["agree"]
    assert not satura.lm_agreement(polys, ["x1", "x2"], 13)["agree"]


def test_errors_are_python_exceptions():
    with pytest.raises(satura.SaturaError):
        satura.compute_gi("monomial-example", 0, 4)
    with pytest.raises(satura.SaturaError):
        satura.compute_gi("no-such-problem", 0, 32003)
    with pytest.raises(satura.SaturaTimeout):
        satura.compute_gi("alt", 3, 32003, timeout_s=0.001)
