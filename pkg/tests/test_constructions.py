import math

import pytest

from bergecycles.constructions import (FAMILIES, bounded_core,
                                       complete_runiform,
                                       shared_pair_cliques, two_hub_blocks)
from bergecycles.errors import BadParams


def test_shared_pair_cliques_counts():
    h = shared_pair_cliques(5, 3, 3)
    assert h.n == 11
    assert h.m == 30
    assert h.min_degree() == 6 == math.comb(4, 2)
    # hubs sit in every block
    assert h.degree(0) == h.degree(1) == 18


def test_shared_pair_cliques_small_n():
    import warnings
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        assert shared_pair_cliques(5, 3, 2).n == 8


def test_shared_pair_cliques_q2_warns():
    with pytest.warns(UserWarning):
        shared_pair_cliques(5, 3, 2)


def test_shared_pair_cliques_params():
    for bad in ((4, 3, 3), (5, 2, 3), (5, 3, 1)):
        with pytest.raises(BadParams):
            shared_pair_cliques(*bad)


def test_bounded_core_counts():
    h = bounded_core(5, 3, 9)
    assert h.m == math.comb(4, 3) + math.comb(4, 2) * 5 == 34
    assert h.min_degree() == 6
    with pytest.raises(BadParams):
        bounded_core(5, 3, 4)
    with pytest.raises(BadParams):
        bounded_core(4, 3, 9)


def test_two_hub_blocks_counts():
    h = two_hub_blocks(3, 2)
    assert h.n == 6 and h.m == 4
    assert two_hub_blocks(4, 3).n == 2 + 3 * 3
    assert two_hub_blocks(3, 5).m == 10
    for bad in ((2, 2), (3, 1)):
        with pytest.raises(BadParams):
            two_hub_blocks(*bad)


def test_complete_runiform_counts():
    assert complete_runiform(4, 3).m == 4
    h = complete_runiform(5, 3)
    assert h.m == 10 and h.min_degree() == 6
    with pytest.raises(BadParams):
        complete_runiform(2, 3)


def test_generators_are_deterministic():
    assert shared_pair_cliques(6, 4, 3).edges \
        == shared_pair_cliques(6, 4, 3).edges
    assert bounded_core(5, 3, 9).edges == bounded_core(5, 3, 9).edges


def test_family_registry():
    assert set(FAMILIES) == {"cliques", "core", "hubs", "complete"}
