"""Local and global topological measures of a connected undirected graph.

Local series: degree, pair distances, eccentricity, betweenness, closeness,
edge betweenness and local transitivity. Global scalars: density, diameter,
radius, transitivity, best-found modularity, plus the averages of the local
series. Betweenness values follow the unordered-pair convention (each pair
v < w contributes once).
"""

from __future__ import annotations

from dataclasses import dataclass, fields

import numpy as np

from .errors import DisconnectedError, UndefinedError
from .graph import Graph, bfs_shortest_path_dag

LOCAL_MEASURES = ("degree", "distance", "eccentricity", "betweenness",
                  "closeness", "edgebetweenness", "local_transitivity")

GLOBAL_MEASURES = ("density", "diameter", "radius", "transitivity",
                   "modularity", "avg_degree", "avg_distance",
                   "avg_eccentricity", "avg_betweenness", "avg_closeness",
                   "avg_edgebetweenness", "avg_local_transitivity")

# adjacency matrices up to this size use dense matmul for triangle counting
_DENSE_TRIANGLE_LIMIT = 2048


@dataclass(frozen=True)
class LocalProfile:
    """Raw local measure series of one connected graph.

    distance is stored over unordered pairs u < v (n(n-1)/2 values);
    edgebetweenness is aligned with the graph's canonical edge order.
    """

    degree: np.ndarray
    distance: np.ndarray
    eccentricity: np.ndarray
    betweenness: np.ndarray
    closeness: np.ndarray
    edgebetweenness: np.ndarray
    local_transitivity: np.ndarray

    def series(self, name: str) -> np.ndarray:
        if name not in LOCAL_MEASURES:
            raise KeyError(name)
        return getattr(self, name)


@dataclass(frozen=True)
class GlobalSummary:
    """The 12 global scalar measures of one network, in canonical order."""

    density: float
    diameter: float
    radius: float
    transitivity: float
    modularity: float
    avg_degree: float
    avg_distance: float
    avg_eccentricity: float
    avg_betweenness: float
    avg_closeness: float
    avg_edgebetweenness: float
    avg_local_transitivity: float

    def as_vector(self) -> np.ndarray:
        return np.array([getattr(self, f.name) for f in fields(self)],
                        dtype=np.float64)


@dataclass(frozen=True)
class CommunityPartition:
    """Dense community id per node."""

    membership: np.ndarray
    count: int


def degrees(g: Graph) -> np.ndarray:
    """Number of links attached to each node."""
    return g.degrees()


def _condensed_index_start(n: int, i: int) -> int:
    return i * (n - 1) - i * (i - 1) // 2


def shortest_path_stats(g: Graph, centrality: bool = True):
    """One BFS + dependency-accumulation pass per source.

    Returns a dict with condensed pair distances, eccentricity, distance sums,
    and (when centrality=True) node and edge betweenness. Raises
    DisconnectedError if any node is unreachable.
    """
    n = g.n
    condensed = np.empty(n * (n - 1) // 2, dtype=np.int64)
    ecc = np.zeros(n, dtype=np.int64)
    dist_sum = np.zeros(n, dtype=np.int64)
    bc = np.zeros(n, dtype=np.float64)
    eb = np.zeros(g.m, dtype=np.float64)
    for s in range(n):
        dist, sigma, dag_levels = bfs_shortest_path_dag(g, s)
        if (dist < 0).any():
            raise DisconnectedError(f"nodes unreachable from {s}")
        start = _condensed_index_start(n, s)
        condensed[start:start + (n - s - 1)] = dist[s + 1:]
        ecc[s] = dist.max()
        dist_sum[s] = dist.sum()
        if not centrality:
            continue
        delta = np.zeros(n, dtype=np.float64)
        for dag_v, dag_w, dag_slots in reversed(dag_levels):
            coef = sigma[dag_v] / sigma[dag_w] * (1.0 + delta[dag_w])
            np.add.at(delta, dag_v, coef)
            np.add.at(eb, g.edge_slot_ids[dag_slots], coef)
        bc += delta
        bc[s] -= delta[s]
    out = {"distance": condensed, "eccentricity": ecc, "dist_sum": dist_sum}
    if centrality:
        out["betweenness"] = bc / 2.0  # ordered-pair accumulation -> v < w pairs
        out["edgebetweenness"] = eb / 2.0
    return out


def eccentricities(g: Graph):
    """Per-node eccentricity plus (diameter, radius)."""
    stats = shortest_path_stats(g, centrality=False)
    ecc = stats["eccentricity"]
    return ecc, int(ecc.max()), int(ecc.min())


def betweenness(g: Graph) -> np.ndarray:
    """Shortest-path betweenness per node over unordered pairs."""
    return shortest_path_stats(g)["betweenness"]


def closeness(g: Graph) -> np.ndarray:
    """Inverse of the summed distances from each node to all others."""
    stats = shortest_path_stats(g, centrality=False)
    return 1.0 / stats["dist_sum"].astype(np.float64)


def edge_betweenness(g: Graph) -> np.ndarray:
    """Shortest-path betweenness per link, aligned with g.edges order."""
    return shortest_path_stats(g)["edgebetweenness"]


def _neighbor_link_counts(g: Graph) -> np.ndarray:
    """Number of links among each node's neighbors (= 2 triangles per link)."""
    n = g.n
    if n <= _DENSE_TRIANGLE_LIMIT:
        a = np.zeros((n, n), dtype=np.float64)
        earr = np.asarray(g.edges)
        a[earr[:, 0], earr[:, 1]] = 1.0
        a[earr[:, 1], earr[:, 0]] = 1.0
        return ((a @ a) * a).sum(axis=1) / 2.0
    counts = np.zeros(n, dtype=np.float64)
    neigh = [g.neighbors(u) for u in range(n)]
    for u, v in g.edges:
        common = np.intersect1d(neigh[u], neigh[v], assume_unique=True).size
        counts[u] += common / 2.0
        counts[v] += common / 2.0
    return counts


def local_transitivity(g: Graph) -> np.ndarray:
    """Fraction of linked neighbor pairs per node; 0 for degree < 2."""
    k = g.degrees().astype(np.float64)
    links = _neighbor_link_counts(g)
    possible = k * (k - 1) / 2.0
    out = np.zeros(g.n, dtype=np.float64)
    ok = possible > 0
    out[ok] = links[ok] / possible[ok]
    return out


def density(g: Graph) -> float:
    """Existing over possible links, undirected form 2m / (n(n-1))."""
    return 2.0 * g.m / (g.n * (g.n - 1))


def global_transitivity(g: Graph) -> float:
    """3 * triangles over paths of length 2."""
    k = g.degrees().astype(np.float64)
    triples = (k * (k - 1) / 2.0).sum()
    if triples == 0:
        raise UndefinedError("no path of length 2 in the graph")
    return float(_neighbor_link_counts(g).sum() / triples)


def modularity(g: Graph, membership) -> float:
    """Intra-community link fraction minus its degree-preserving expectation."""
    membership = np.asarray(membership)
    if membership.shape != (g.n,):
        raise ValueError(f"membership must cover all {g.n} nodes")
    _, dense = np.unique(membership, return_inverse=True)
    ncomm = dense.max() + 1
    earr = np.asarray(g.edges)
    cu, cv = dense[earr[:, 0]], dense[earr[:, 1]]
    intra = np.bincount(cu[cu == cv], minlength=ncomm).astype(np.float64)
    deg_sum = np.bincount(dense, weights=g.degrees().astype(np.float64),
                          minlength=ncomm)
    m = float(g.m)
    return float((intra / m - (deg_sum / (2.0 * m)) ** 2).sum())


def maximize_modularity(g: Graph):
    """Greedy agglomerative modularity maximization from singletons.

    Repeatedly applies the merge with the largest positive modularity gain,
    ties broken by the lowest (community id, community id) pair; stops when no
    merge improves. Returns (CommunityPartition, Q of the returned partition).
    Deterministic.
    """
    m = float(g.m)
    deg = g.degrees().astype(np.float64)
    comm_deg = {u: deg[u] for u in range(g.n)}
    # links[a][b] = number of edges between communities a and b (a != b)
    links: dict[int, dict[int, float]] = {u: {} for u in range(g.n)}
    for u, v in g.edges:
        links[u][v] = links[u].get(v, 0.0) + 1.0
        links[v][u] = links[v].get(u, 0.0) + 1.0
    members: dict[int, list[int]] = {u: [u] for u in range(g.n)}

    while len(members) > 1:
        # candidates ranked by (-gain, a, b): max gain, ties to lowest id pair
        best = None
        for a, row in links.items():
            for b, w in row.items():
                if b <= a:
                    continue
                gain = w / m - comm_deg[a] * comm_deg[b] / (2.0 * m * m)
                cand = (-gain, a, b)
                if best is None or cand < best:
                    best = cand
        if best is None or -best[0] <= 0.0:
            break
        _, a, b = best
        members[a].extend(members[b])
        del members[b]
        comm_deg[a] += comm_deg.pop(b)
        row_b = links.pop(b)
        del links[a][b]
        for c, w in row_b.items():
            if c == a:
                continue
            links[a][c] = links[a].get(c, 0.0) + w
            links[c][a] = links[c].get(a, 0.0) + w
            del links[c][b]

    ordered = sorted(members.values(), key=min)
    membership = np.empty(g.n, dtype=np.int64)
    for cid, nodes in enumerate(ordered):
        membership[nodes] = cid
    part = CommunityPartition(membership=membership, count=len(ordered))
    return part, modularity(g, membership)


def compute_profile(g: Graph) -> LocalProfile:
    """All 7 local series of a connected graph in one shortest-path pass."""
    stats = shortest_path_stats(g, centrality=True)
    return LocalProfile(
        degree=g.degrees(),
        distance=stats["distance"],
        eccentricity=stats["eccentricity"],
        betweenness=stats["betweenness"],
        closeness=1.0 / stats["dist_sum"].astype(np.float64),
        edgebetweenness=stats["edgebetweenness"],
        local_transitivity=local_transitivity(g),
    )


def global_summary(g: Graph, profile: LocalProfile, q_best: float) -> GlobalSummary:
    """Assemble the 12 global scalars from a graph and its local profile."""
    ecc = profile.eccentricity
    return GlobalSummary(
        density=density(g),
        diameter=float(ecc.max()),
        radius=float(ecc.min()),
        transitivity=global_transitivity(g),
        modularity=float(q_best),
        avg_degree=float(profile.degree.mean()),
        avg_distance=float(profile.distance.mean()),
        avg_eccentricity=float(ecc.mean()),
        avg_betweenness=float(profile.betweenness.mean()),
        avg_closeness=float(profile.closeness.mean()),
        avg_edgebetweenness=float(profile.edgebetweenness.mean()),
        avg_local_transitivity=float(profile.local_transitivity.mean()),
    )


def characterize(g: Graph):
    """Profile + greedy modularity + summary of a connected graph."""
    profile = compute_profile(g)
    _, q_best = maximize_modularity(g)
    return profile, global_summary(g, profile, q_best)
