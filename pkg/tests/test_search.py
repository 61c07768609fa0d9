import random

import pytest

from bergecycles.constructions import complete_runiform, two_hub_blocks
from bergecycles.errors import BudgetExhausted, VertexOutOfRange
from bergecycles.hypergraph import build
from bergecycles.search import (BergeCycle, BergePath, PartialBergePath,
                                circumference, codiameter,
                                longest_berge_cycle,
                                longest_berge_path_between, validate_cycle,
                                validate_path)
from oracles import naive_codiameter, naive_longest_cycle, random_hypergraph


def test_length_two_cycle():
    # two edges sharing two vertices close a legal 2-cycle
    h = build(4, 3, [[0, 1, 2], [0, 1, 3]])
    assert circumference(h) == 2


def test_single_edge_has_no_cycle():
    h = build(3, 3, [[0, 1, 2]])
    res = longest_berge_cycle(h)
    assert res.cycle is None and res.complete
    assert circumference(h) == 0


def test_complete_runiform_is_hamiltonian():
    assert circumference(complete_runiform(5, 3)) == 5
    assert circumference(complete_runiform(4, 3)) == 4


def test_two_hub_blocks_capped_at_four():
    for s in (2, 3):
        assert circumference(two_hub_blocks(3, s)) == 4


def test_result_cycle_validates():
    h = complete_runiform(5, 3)
    res = longest_berge_cycle(h)
    assert res.complete
    assert validate_cycle(h, res.cycle) == []


def test_validate_cycle_negatives():
    h = build(4, 3, [[0, 1, 2], [0, 1, 3]])
    assert validate_cycle(h, BergeCycle((0, 0), (0, 1)))
    assert validate_cycle(h, BergeCycle((0, 1), (0, 0)))
    assert validate_cycle(h, BergeCycle((0, 3), (0, 1)))  # {0,3} not in e0
    assert validate_cycle(h, BergeCycle((0, 1), (0, 7)))
    assert validate_cycle(h, BergeCycle((0,), (0,)))


def test_validate_path_negatives():
    h = build(4, 3, [[0, 1, 2], [0, 1, 3]])
    assert validate_path(h, BergePath((0, 3), (0,)))
    assert validate_path(h, BergePath((0, 1, 0), (0, 1)))
    assert validate_path(h, PartialBergePath((0,), (3,)))
    assert validate_path(h, BergePath((0, 1), (0,))) == []
    assert validate_path(h, PartialBergePath((0, 1), (1, 0))) == []


def test_budget_exhausted_carries_incumbent():
    h = complete_runiform(6, 3)
    with pytest.raises(BudgetExhausted) as exc:
        circumference(h, node_budget=10)
    assert exc.value.incumbent is not None
    assert 0 <= exc.value.incumbent <= 6


def test_path_between_basics():
    h = build(4, 3, [[0, 1, 2], [0, 1, 3]])
    p = longest_berge_path_between(h, 2, 3)
    assert p is not None and p.length == 2
    assert p.vertices[0] == 2 and p.vertices[-1] == 3
    with pytest.raises(VertexOutOfRange):
        longest_berge_path_between(h, 0, 9)
    with pytest.raises(VertexOutOfRange):
        longest_berge_path_between(h, 1, 1)


def test_path_between_unreachable():
    h = build(7, 3, [[0, 1, 2], [4, 5, 6]])
    assert longest_berge_path_between(h, 0, 4) is None
    assert codiameter(h) == 0


def test_codiameter_complete():
    # complete 3-graph on 5 vertices: every pair joined by a hamilton path
    assert codiameter(complete_runiform(5, 3)) == 4


def test_at_least_early_exit_path_is_long_enough():
    h = complete_runiform(5, 3)
    p = longest_berge_path_between(h, 0, 1, at_least=2)
    assert p is not None and p.length >= 2


def test_circumference_matches_oracle_sample():
    rng = random.Random(42)
    for _ in range(60):
        h = random_hypergraph(rng)
        assert circumference(h) == naive_longest_cycle(h)


def test_codiameter_matches_oracle_sample():
    rng = random.Random(43)
    for _ in range(40):
        h = random_hypergraph(rng, n_max=5, m_max=6)
        assert codiameter(h) == naive_codiameter(h)


def test_search_is_deterministic():
    h = two_hub_blocks(3, 3)
    a = longest_berge_cycle(h)
    b = longest_berge_cycle(h)
    assert a.cycle == b.cycle
