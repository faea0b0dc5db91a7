import numpy as np
import pytest

from topoclust.errors import MalformedGraphError, ParamError
from topoclust.generators import (barabasi_albert, erdos_renyi,
                                  generate_synthetic, planted_labels,
                                  planted_partition, watts_strogatz)
from topoclust.graph import connected_components


def test_er_complete():
    g = erdos_renyi(100, 1.0, seed=1)
    assert g.m == 100 * 99 // 2


def test_er_empty_rejected():
    with pytest.raises(MalformedGraphError):
        erdos_renyi(100, 0.0, seed=1)


def test_er_mean_degree():
    # expected mean degree p(n-1) = 9.9; allow 3 standard errors
    g = erdos_renyi(1000, 0.01, seed=42)
    mean_deg = 2 * g.m / g.n
    pairs = 1000 * 999 / 2
    se = 2 * np.sqrt(pairs * 0.01 * 0.99) / 1000
    assert abs(mean_deg - 9.9) <= 3 * se


def test_er_edge_count_property():
    # empirical edge count within 4 sigma of expectation over 50 seeds
    n, p = 60, 0.1
    pairs = n * (n - 1) / 2
    sigma = np.sqrt(pairs * p * (1 - p))
    for seed in range(50):
        g = erdos_renyi(n, p, seed=seed)
        assert abs(g.m - pairs * p) <= 4 * sigma


def test_er_param_validation():
    with pytest.raises(ParamError):
        erdos_renyi(100, 1.5)
    with pytest.raises(ParamError):
        erdos_renyi(2, 0.5)


def test_er_deterministic():
    assert erdos_renyi(50, 0.2, seed=3) == erdos_renyi(50, 0.2, seed=3)


def test_ws_ring_structure():
    g = watts_strogatz(20, 4, 0.0, seed=0)
    assert g.m == 20 * 2
    assert (g.degrees() == 4).all()


def test_ws_rewired_keeps_edge_count_and_simple():
    g = watts_strogatz(50, 6, 0.4, seed=5)
    assert g.m == 50 * 3
    assert g.degrees().sum() == 2 * g.m


def test_ws_param_validation():
    with pytest.raises(ParamError):
        watts_strogatz(10, 3, 0.1)  # odd k
    with pytest.raises(ParamError):
        watts_strogatz(10, 10, 0.1)  # k >= n
    with pytest.raises(ParamError):
        watts_strogatz(10, 4, 1.5)


def test_ba_edge_count():
    g = barabasi_albert(100, 3, seed=2)
    # complete seed on 4 nodes + 96 nodes with 3 links each
    assert g.m == 6 + 96 * 3
    cm = connected_components(g)
    assert cm.count == 1


def test_ba_param_validation():
    with pytest.raises(ParamError):
        barabasi_albert(10, 0)
    with pytest.raises(ParamError):
        barabasi_albert(10, 10)


def test_planted_partition_block_densities():
    g = planted_partition(90, 3, 0.8, 0.05, seed=9)
    blocks = planted_labels(90, 3)
    intra = inter = 0
    for u, v in g.edges:
        if blocks[u] == blocks[v]:
            intra += 1
        else:
            inter += 1
    intra_pairs = 3 * 30 * 29 / 2
    inter_pairs = 90 * 89 / 2 - intra_pairs
    assert abs(intra / intra_pairs - 0.8) < 0.1
    assert abs(inter / inter_pairs - 0.05) < 0.05


def test_planted_labels_sizes():
    lab = planted_labels(10, 3)
    assert list(np.bincount(lab)) == [4, 3, 3]


def test_dispatcher():
    g = generate_synthetic("er", seed=1, n=20, p=0.3)
    assert g.n == 20
    with pytest.raises(ParamError):
        generate_synthetic("nope", seed=1)
    with pytest.raises(ParamError):
        generate_synthetic("er", seed=1, n=20)  # missing p
    with pytest.raises(ParamError):
        generate_synthetic("er", seed=1, n=20, p=0.3, extra=1)
