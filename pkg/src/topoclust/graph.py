"""Simple undirected graph: construction, edge-list I/O, connectivity, BFS distances.

Node ids are dense integers 0..n-1 assigned in first-appearance order when
parsing. Graphs are simple (no self-loops, no duplicate edges) and immutable
after construction; all functions here are pure.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DisconnectedError, MalformedGraphError, ParseError

COMMENT_PREFIXES = ("#", "%")


class Graph:
    """Immutable simple undirected graph backed by a CSR adjacency.

    Attributes
    ----------
    n : int
        Node count (>= 3).
    edges : tuple[tuple[int, int], ...]
        Canonical edge list, each pair (u, v) with u < v, sorted.
    labels : tuple[str, ...]
        Original node label per dense id.
    dropped_self_loops : int
        Self-loops discarded while building (parse metadata).
    """

    __slots__ = ("n", "edges", "labels", "indptr", "indices", "edge_slot_ids",
                 "dropped_self_loops")

    def __init__(self, n, edges, labels=None, dropped_self_loops=0):
        if n < 3:
            raise MalformedGraphError(f"graph needs at least 3 nodes, got {n}")
        canon = set()
        for u, v in edges:
            if u == v:
                raise MalformedGraphError(f"self-loop on node {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise MalformedGraphError(f"edge ({u}, {v}) outside id range 0..{n - 1}")
            canon.add((u, v) if u < v else (v, u))
        if not canon:
            raise MalformedGraphError("graph has no edges")
        self.n = int(n)
        self.edges = tuple(sorted(canon))
        if labels is None:
            labels = tuple(str(i) for i in range(n))
        else:
            labels = tuple(str(x) for x in labels)
            if len(labels) != n:
                raise MalformedGraphError(f"{len(labels)} labels for {n} nodes")
        self.labels = labels
        self.dropped_self_loops = int(dropped_self_loops)
        self._build_csr()

    def _build_csr(self):
        m = len(self.edges)
        earr = np.asarray(self.edges, dtype=np.int64)
        src = np.concatenate([earr[:, 0], earr[:, 1]])
        dst = np.concatenate([earr[:, 1], earr[:, 0]])
        eid = np.concatenate([np.arange(m), np.arange(m)])
        order = np.lexsort((dst, src))
        self.indices = dst[order]
        self.edge_slot_ids = eid[order]
        counts = np.bincount(src, minlength=self.n)
        self.indptr = np.concatenate([[0], np.cumsum(counts)])

    @property
    def m(self) -> int:
        return len(self.edges)

    def degrees(self) -> np.ndarray:
        return np.diff(self.indptr).astype(np.int64)

    def neighbors(self, u: int) -> np.ndarray:
        """Sorted neighbor ids of node u."""
        return self.indices[self.indptr[u]:self.indptr[u + 1]]

    def __eq__(self, other):
        return (isinstance(other, Graph) and self.n == other.n
                and self.edges == other.edges and self.labels == other.labels)

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class ComponentMap:
    """Connected-component labeling: dense component id per node plus sizes."""

    labels: np.ndarray
    sizes: tuple[int, ...]

    @property
    def count(self) -> int:
        return len(self.sizes)


def parse_edge_list(text) -> Graph:
    """Parse an edge-list text into a Graph.

    One edge per line, two whitespace-separated node tokens; lines starting
    with '#' or '%' are comments and blank lines are skipped. Node ids are
    assigned densely in first-appearance order, duplicate edges collapse and
    self-loops are dropped (count kept on the result).

    Raises ParseError on a line with a wrong token count, MalformedGraphError
    when fewer than 3 distinct nodes or no edges remain.
    """
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    ids: dict[str, int] = {}
    edges = []
    dropped = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith(COMMENT_PREFIXES):
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise ParseError(f"expected 2 node tokens, got {len(tokens)}", lineno)
        a, b = tokens
        ua = ids.setdefault(a, len(ids))
        ub = ids.setdefault(b, len(ids))
        if ua == ub:
            dropped += 1
            continue
        edges.append((ua, ub))
    if len(ids) < 3:
        raise MalformedGraphError(f"only {len(ids)} distinct nodes after parsing")
    if not edges:
        raise MalformedGraphError("no edges after parsing")
    labels = [None] * len(ids)
    for tok, i in ids.items():
        labels[i] = tok
    return Graph(len(ids), edges, labels=labels, dropped_self_loops=dropped)


def to_edge_list_text(g: Graph) -> str:
    """Canonical serialization: edges sorted by (min id, max id), one per line."""
    lines = [f"{g.labels[u]} {g.labels[v]}" for u, v in g.edges]
    return "\n".join(lines) + "\n"


def connected_components(g: Graph) -> ComponentMap:
    """Label components by BFS; component ids ordered by smallest member id."""
    labels = np.full(g.n, -1, dtype=np.int64)
    sizes = []
    comp = 0
    for root in range(g.n):
        if labels[root] >= 0:
            continue
        dist = _bfs_distances(g, root)
        members = dist >= 0
        labels[members] = comp
        sizes.append(int(members.sum()))
        comp += 1
    return ComponentMap(labels=labels, sizes=tuple(sizes))


def largest_component(g: Graph) -> Graph:
    """Induced subgraph on the largest component, ids re-densified.

    Ties go to the component with the smallest member id. Raises
    MalformedGraphError when the largest component has fewer than 3 nodes.
    """
    cm = connected_components(g)
    best = int(np.argmax(cm.sizes))  # argmax keeps the lowest index on ties
    keep = np.flatnonzero(cm.labels == best)
    if keep.size < 3:
        raise MalformedGraphError(
            f"largest component has {keep.size} nodes, need at least 3")
    remap = np.full(g.n, -1, dtype=np.int64)
    remap[keep] = np.arange(keep.size)
    edges = [(int(remap[u]), int(remap[v])) for u, v in g.edges
             if remap[u] >= 0 and remap[v] >= 0]
    labels = [g.labels[i] for i in keep]
    return Graph(keep.size, edges, labels=labels,
                 dropped_self_loops=g.dropped_self_loops)


def sssp_bfs(g: Graph, source: int) -> np.ndarray:
    """Exact hop distances from source to every node (graph must be connected)."""
    dist = _bfs_distances(g, source)
    if (dist < 0).any():
        raise DisconnectedError(f"nodes unreachable from {source}")
    return dist


def _frontier_neighbors(g: Graph, frontier: np.ndarray):
    """All CSR slots leaving the frontier: (source per slot, target, slot index)."""
    starts = g.indptr[frontier]
    counts = g.indptr[frontier + 1] - starts
    total = int(counts.sum())
    if total == 0:
        empty = np.empty(0, dtype=np.int64)
        return empty, empty, empty
    reps = np.repeat(frontier, counts)
    base = np.repeat(starts, counts)
    within = np.arange(total) - np.repeat(np.cumsum(counts) - counts, counts)
    slots = base + within
    return reps, g.indices[slots], slots


def _bfs_distances(g: Graph, source: int) -> np.ndarray:
    """Level-synchronous BFS; unreachable nodes keep distance -1."""
    dist = np.full(g.n, -1, dtype=np.int64)
    dist[source] = 0
    frontier = np.array([source], dtype=np.int64)
    d = 0
    while frontier.size:
        _, neigh, _ = _frontier_neighbors(g, frontier)
        new = neigh[dist[neigh] < 0]
        if new.size == 0:
            break
        d += 1
        dist[new] = d
        frontier = np.unique(new)
    return dist


def bfs_shortest_path_dag(g: Graph, source: int):
    """BFS with shortest-path counts and the per-level shortest-path DAG.

    Returns (dist, sigma, dag_levels) where dag_levels[d] holds the arrays
    (parents, children, csr_slots) of all DAG edges from level d to d+1.
    Used by the centrality accumulation in measures.
    """
    dist = np.full(g.n, -1, dtype=np.int64)
    sigma = np.zeros(g.n, dtype=np.float64)
    dist[source] = 0
    sigma[source] = 1.0
    frontier = np.array([source], dtype=np.int64)
    dag_levels = []
    d = 0
    while frontier.size:
        reps, neigh, slots = _frontier_neighbors(g, frontier)
        unseen = dist[neigh] < 0
        dist[neigh[unseen]] = d + 1
        on_dag = dist[neigh] == d + 1
        dag_v, dag_w, dag_slots = reps[on_dag], neigh[on_dag], slots[on_dag]
        np.add.at(sigma, dag_w, sigma[dag_v])
        if dag_v.size:
            dag_levels.append((dag_v, dag_w, dag_slots))
        frontier = np.unique(neigh[unseen])
        d += 1
    return dist, sigma, dag_levels
