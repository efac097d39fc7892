import pytest

from starfactors.construct import construct
from starfactors.oracle import SearchConfig, exhaustive_search
from starfactors.verifier import verify_decomposition


def test_v12_found_and_verified():
    r = exhaustive_search(SearchConfig(12))
    assert r.status == "found"
    assert r.nodes <= 10**7
    assert verify_decomposition(r.decomposition).valid


@pytest.mark.parametrize("v", [6, 18])
def test_counting_nonexistence(v):
    r = exhaustive_search(SearchConfig(v))
    assert r.status == "nonexistent"
    assert f"{3 * (v - 2)}/5" in r.witness
    assert r.nodes == 0


def test_odd_and_non_multiple_of_six():
    assert "odd" in exhaustive_search(SearchConfig(7)).witness
    assert "divisible by 6" in exhaustive_search(SearchConfig(8)).witness


def test_budget_exhaustion_is_not_nonexistence():
    r = exhaustive_search(SearchConfig(12, budget=3))
    assert r.status == "budget-exhausted"
    assert r.decomposition is None


def test_custom_matching():
    m = tuple((2 * i, 2 * i + 1) for i in range(6))
    r = exhaustive_search(SearchConfig(12, matching=m))
    assert r.status == "found"
    assert r.decomposition.one_factor == m
    assert verify_decomposition(r.decomposition).valid


def test_agrees_with_constructor_up_to_12():
    for v in (6, 12):
        r = exhaustive_search(SearchConfig(v))
        try:
            construct(v)
            built = True
        except ValueError:
            built = False
        assert (r.status == "found") == built


def test_deterministic():
    a = exhaustive_search(SearchConfig(12)).decomposition
    b = exhaustive_search(SearchConfig(12)).decomposition
    assert a == b
