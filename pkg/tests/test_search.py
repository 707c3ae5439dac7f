"""Deterministic seeded search over coefficient space."""

from __future__ import annotations

import math

import numpy as np
import pytest

from bentgroups import (
    BENT,
    SearchConfig,
    Strategy,
    character_table,
    group_from_label,
    is_bent,
    from_coefficients,
    make_cyclic,
    objective,
    result_to_json,
    run_search,
)


def test_config_validation():
    with pytest.raises(ValueError, match="budget"):
        SearchConfig(group="Z4", budget=0)
    config = SearchConfig(group="Z4", budget=10, strategy="random")
    assert config.strategy is Strategy.RANDOM


def test_objective_examples(z3_table):
    constant = np.zeros(3, dtype=complex)
    constant[0] = 1.0
    assert objective(z3_table, constant) == pytest.approx(1.0, abs=1e-12)
    bent = np.exp(2j * np.pi * (np.arange(3) ** 2 % 3) / 3) / math.sqrt(3)
    assert objective(z3_table, bent) < 1e-12


def test_objective_zero_exactly_on_bent(z4_table):
    rng = np.random.default_rng(61)
    for _ in range(50):
        a = np.exp(2j * np.pi * rng.random(4)) / 2.0
        obj = objective(z4_table, a)
        verdict = is_bent(from_coefficients(z4_table, a)).verdict
        assert (obj < 1e-8) == (verdict == BENT)


def test_objective_shape_error(z3_table):
    with pytest.raises(ValueError):
        objective(z3_table, np.ones(4))


def test_search_is_deterministic():
    config = SearchConfig(group="S3", budget=600, seed=9)
    r1 = run_search(config)
    r2 = run_search(config)
    assert r1.best_objective == r2.best_objective
    assert np.array_equal(r1.best_coefficients, r2.best_coefficients)
    assert r1.histogram == r2.histogram
    assert r1.evaluations == r2.evaluations


def test_different_seeds_differ():
    a = run_search(SearchConfig(group="S3", budget=600, seed=1))
    b = run_search(SearchConfig(group="S3", budget=600, seed=2))
    assert a.best_objective != b.best_objective


@pytest.mark.parametrize("label", ["Z4", "Z5", "V4", "Z2xZ3"])
def test_search_certifies_on_constructible_groups(label):
    result = run_search(SearchConfig(group=label, budget=300, seed=0))
    assert result.certified_bent
    assert result.report is not None
    assert result.report.verdict == BENT
    assert result.best_objective <= 1e-8
    # the certified coefficients really are bent
    table = character_table(group_from_label(label))
    assert is_bent(from_coefficients(table, result.best_coefficients)).verdict == BENT


def test_seeded_candidates_stop_search_early():
    result = run_search(SearchConfig(group="Z12", budget=100_000, seed=0))
    assert result.certified_bent
    assert result.evaluations < 20


def test_search_never_certifies_on_s3():
    result = run_search(SearchConfig(group="S3", budget=3000, seed=4))
    assert not result.certified_bent
    assert result.report is None
    assert result.best_objective > 1e-3
    assert result.evaluations == 3000


def test_search_does_not_certify_on_d4_at_small_budget():
    result = run_search(SearchConfig(group="D4", budget=1500, seed=4))
    assert not result.certified_bent
    assert result.best_objective > 1e-3


def test_random_strategy_uses_full_budget():
    result = run_search(
        SearchConfig(group="S3", budget=700, seed=3, strategy=Strategy.RANDOM)
    )
    assert result.evaluations == 700
    assert not result.certified_bent


def test_local_refinement_does_not_hurt():
    plain = run_search(SearchConfig(group="S3", budget=2000, seed=8, strategy="random"))
    refined = run_search(
        SearchConfig(group="S3", budget=2000, seed=8, strategy="random+local")
    )
    assert refined.best_objective <= plain.best_objective + 1e-12


def test_histogram_quantiles():
    result = run_search(SearchConfig(group="S3", budget=500, seed=5))
    hist = np.array(result.histogram)
    assert len(hist) == 11
    assert np.all(np.diff(hist) >= -1e-12)
    assert hist[0] == pytest.approx(result.best_objective, abs=1e-12)


def test_budget_is_respected():
    for budget in (1, 7, 50):
        result = run_search(SearchConfig(group="Q8", budget=budget, seed=0))
        assert result.evaluations <= budget


def test_result_json_layout():
    result = run_search(SearchConfig(group="Z4", budget=50, seed=0))
    obj = result_to_json(result)
    assert obj["config"] == {
        "group": "Z4",
        "budget": 50,
        "seed": 0,
        "tol": 1e-8,
        "strategy": "random+local",
    }
    assert obj["certified_bent"] is True
    assert obj["report"]["verdict"] == BENT
    assert len(obj["best_coefficients"]) == 4
    not_found = run_search(SearchConfig(group="S3", budget=50, seed=0))
    assert result_to_json(not_found)["report"] is None
