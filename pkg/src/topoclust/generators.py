"""Synthetic graph generators: ER, Watts-Strogatz, Barabasi-Albert, planted partition.

All generators are deterministic for a fixed seed and return simple undirected
Graphs. The planted-partition generator assigns nodes to blocks contiguously,
so ground-truth labels are recoverable with planted_labels().
"""

from __future__ import annotations

import numpy as np

from .errors import ParamError
from .graph import Graph


def _pair_sample(n: int, probs: np.ndarray, rng: np.random.Generator):
    """Keep each unordered pair (u, v) with its own probability."""
    uu, vv = np.triu_indices(n, k=1)
    mask = rng.random(uu.size) < probs
    return list(zip(uu[mask].tolist(), vv[mask].tolist()))


def erdos_renyi(n: int, p: float, seed: int = 0) -> Graph:
    """G(n, p): each of the n(n-1)/2 pairs is an edge independently with prob p."""
    if n < 3:
        raise ParamError(f"n must be >= 3, got {n}")
    if not 0.0 <= p <= 1.0:
        raise ParamError(f"p must be in [0, 1], got {p}")
    rng = np.random.default_rng(seed)
    edges = _pair_sample(n, np.full(n * (n - 1) // 2, p), rng)
    return Graph(n, edges)


def watts_strogatz(n: int, k: int, beta: float, seed: int = 0) -> Graph:
    """Ring lattice with k neighbors per node, each edge rewired with prob beta.

    k must be even and < n; rewiring picks a uniform non-neighbor endpoint,
    keeping the graph simple.
    """
    if n < 3:
        raise ParamError(f"n must be >= 3, got {n}")
    if k < 2 or k % 2 != 0 or k >= n:
        raise ParamError(f"k must be even with 2 <= k < n, got k={k}, n={n}")
    if not 0.0 <= beta <= 1.0:
        raise ParamError(f"beta must be in [0, 1], got {beta}")
    rng = np.random.default_rng(seed)
    adj = [set() for _ in range(n)]
    for u in range(n):
        for off in range(1, k // 2 + 1):
            v = (u + off) % n
            adj[u].add(v)
            adj[v].add(u)
    for off in range(1, k // 2 + 1):
        for u in range(n):
            v = (u + off) % n
            if rng.random() >= beta:
                continue
            # all non-neighbors of u (self excluded) are equally likely
            candidates = [w for w in range(n) if w != u and w not in adj[u]]
            if not candidates:
                continue
            w = candidates[rng.integers(len(candidates))]
            adj[u].discard(v)
            adj[v].discard(u)
            adj[u].add(w)
            adj[w].add(u)
    edges = [(u, v) for u in range(n) for v in adj[u] if u < v]
    return Graph(n, edges)


def barabasi_albert(n: int, m0: int, seed: int = 0) -> Graph:
    """Preferential attachment: each new node links to m0 existing nodes.

    Starts from a complete graph on m0 + 1 nodes; attachment probability is
    proportional to current degree.
    """
    if n < 3:
        raise ParamError(f"n must be >= 3, got {n}")
    if not 1 <= m0 < n:
        raise ParamError(f"m0 must satisfy 1 <= m0 < n, got m0={m0}, n={n}")
    rng = np.random.default_rng(seed)
    edges = [(u, v) for u in range(m0 + 1) for v in range(u + 1, m0 + 1)]
    repeated = [u for e in edges for u in e]
    for node in range(m0 + 1, n):
        targets: set[int] = set()
        while len(targets) < m0:
            targets.add(repeated[rng.integers(len(repeated))])
        for t in sorted(targets):
            edges.append((t, node))
            repeated.append(t)
        repeated.extend([node] * m0)
    return Graph(n, edges)


def planted_partition(n: int, c: int, p_in: float, p_out: float,
                      seed: int = 0) -> Graph:
    """c near-equal blocks; pair probability p_in inside a block, p_out across."""
    if n < 3:
        raise ParamError(f"n must be >= 3, got {n}")
    if not 2 <= c <= n:
        raise ParamError(f"c must satisfy 2 <= c <= n, got {c}")
    for name, p in (("p_in", p_in), ("p_out", p_out)):
        if not 0.0 <= p <= 1.0:
            raise ParamError(f"{name} must be in [0, 1], got {p}")
    rng = np.random.default_rng(seed)
    blocks = planted_labels(n, c)
    uu, vv = np.triu_indices(n, k=1)
    probs = np.where(blocks[uu] == blocks[vv], p_in, p_out)
    mask = rng.random(uu.size) < probs
    edges = list(zip(uu[mask].tolist(), vv[mask].tolist()))
    return Graph(n, edges)


def planted_labels(n: int, c: int) -> np.ndarray:
    """Ground-truth block id per node for planted_partition (contiguous blocks)."""
    sizes = np.full(c, n // c)
    sizes[:n % c] += 1
    return np.repeat(np.arange(c), sizes)


_MODELS = {
    "er": (erdos_renyi, ("n", "p")),
    "ws": (watts_strogatz, ("n", "k", "beta")),
    "ba": (barabasi_albert, ("n", "m0")),
    "pp": (planted_partition, ("n", "c", "p_in", "p_out")),
}


def generate_synthetic(model: str, seed: int = 0, **params) -> Graph:
    """Dispatch by model name: 'er', 'ws', 'ba' or 'pp'."""
    key = model.lower()
    if key not in _MODELS:
        raise ParamError(f"unknown model {model!r}, expected one of {sorted(_MODELS)}")
    fn, names = _MODELS[key]
    unknown = set(params) - set(names)
    if unknown:
        raise ParamError(f"unexpected parameters for {key}: {sorted(unknown)}")
    missing = [p for p in names if p not in params]
    if missing:
        raise ParamError(f"missing parameters for {key}: {missing}")
    return fn(seed=seed, **params)
