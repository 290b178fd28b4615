"""
The weighted Cayley graph on all permutations of {1..n}, generated by every
permutation with exactly one nontrivial cycle; an edge through a length-i
generator carries weight i.  Shortest weighted paths in this graph realize
the Hamming distance, which the test suite verifies exhaustively for small n.

Vertices are indexed by the lexicographic rank of their one-line notation.
The graph is immutable once built and all queries are read-only.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from itertools import combinations, permutations

import numpy as np

from .counting import generator_count
from .perms import Perm, compose, from_cycles, hamming_distance, identity

GRAPH_CAP_DEFAULT = 7
REGULARITY_CAP_DEFAULT = 5


class GraphCapError(RuntimeError):
    """n is past the configured graph-size cap."""


def generating_set(n: int, cap: int = GRAPH_CAP_DEFAULT) -> list[Perm]:
    """
    All permutations of {1..n} with exactly one nontrivial cycle, in a fixed
    order (cycle length, then support, then cycle word).  Closed under
    inverse, and of size :func:`hamperm.counting.generator_count`.
    """
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    if n > cap:
        raise GraphCapError(f"n={n} exceeds the graph cap {cap}")
    out = []
    for length in range(2, n + 1):
        for sup in combinations(range(1, n + 1), length):
            for rest in permutations(sup[1:]):
                out.append(from_cycles([(sup[0],) + rest], n))
    assert len(out) == generator_count(n)
    return out


@dataclass(frozen=True)
class CayleyGraph:
    n: int
    perms: tuple[Perm, ...]
    index: dict[Perm, int]
    # neighbors[u] = tuple of (v, weight) pairs, one per generator
    neighbors: tuple[tuple[tuple[int, int], ...], ...]


@dataclass(frozen=True)
class RegularityWitness:
    """Two center pairs at equal distance whose joint-distance counts differ."""

    x: Perm
    y: Perm
    x_prime: Perm
    y_prime: Perm
    k: int
    i: int
    j: int
    count_a: int
    count_b: int

    def to_json_dict(self) -> dict:
        return {
            "k": self.k,
            "i": self.i,
            "j": self.j,
            "pair_a": {
                "x": list(self.x),
                "y": list(self.y),
                "count": self.count_a,
            },
            "pair_b": {
                "x": list(self.x_prime),
                "y": list(self.y_prime),
                "count": self.count_b,
            },
        }


def build_graph(n: int, cap: int = GRAPH_CAP_DEFAULT) -> CayleyGraph:
    """
    Build the full weighted graph.  Every vertex ends up with one edge per
    generator; the number of weight-i edges at a vertex equals the number of
    i-cycles in the generating set.
    """
    generators = generating_set(n, cap=cap)
    weights = [hamming_distance(g, identity(n)) for g in generators]
    perms = tuple(permutations(range(1, n + 1)))
    index = {p: i for i, p in enumerate(perms)}
    neighbors = tuple(
        tuple((index[compose(u, g)], w) for g, w in zip(generators, weights))
        for u in perms
    )
    return CayleyGraph(n=n, perms=perms, index=index, neighbors=neighbors)


def _require_vertex(g: CayleyGraph, p: Perm) -> int:
    if p not in g.index:
        raise ValueError(f"{p} is not a vertex of the Sym_{g.n} graph")
    return g.index[p]


def distances_from(g: CayleyGraph, src: Perm) -> list[int]:
    """Weighted shortest-path distances from src to every vertex (Dijkstra)."""
    start = _require_vertex(g, src)
    dist = [-1] * len(g.perms)
    heap = [(0, start)]
    while heap:
        d, u = heapq.heappop(heap)
        if dist[u] != -1:
            continue
        dist[u] = d
        for v, w in g.neighbors[u]:
            if dist[v] == -1:
                heapq.heappush(heap, (d + w, v))
    return dist


def graph_distance(g: CayleyGraph, p: Perm, q: Perm) -> int:
    """Weighted shortest-path distance between two vertices."""
    target = _require_vertex(g, q)
    start = _require_vertex(g, p)
    if start == target:
        return 0
    dist = [-1] * len(g.perms)
    heap = [(0, start)]
    while heap:
        d, u = heapq.heappop(heap)
        if dist[u] != -1:
            continue
        dist[u] = d
        if u == target:
            return d
        for v, w in g.neighbors[u]:
            if dist[v] == -1:
                heapq.heappush(heap, (d + w, v))
    raise AssertionError("graph is connected; unreachable vertex")


def weight_profile(g: CayleyGraph, p: Perm) -> dict[int, int]:
    """Count of incident edges per weight at a vertex."""
    profile: dict[int, int] = {}
    u = _require_vertex(g, p)
    for _, w in g.neighbors[u]:
        profile[w] = profile.get(w, 0) + 1
    return dict(sorted(profile.items()))


def _distance_matrix(g: CayleyGraph) -> np.ndarray:
    """Pairwise Hamming distances between all vertices (equals graph distance)."""
    arr = np.array(g.perms, dtype=np.int16)
    out = np.empty((len(arr), len(arr)), dtype=np.int32)
    for u in range(len(arr)):
        out[u] = (arr != arr[u]).sum(axis=1)
    return out


def check_distance_regularity(
    g: CayleyGraph, cap: int = REGULARITY_CAP_DEFAULT
) -> tuple[bool, RegularityWitness | None]:
    """
    Test whether, for every center distance k and every pair (i, j), the
    count #{z : d(z,x)=i, d(z,y)=j} is the same for all ordered vertex pairs
    (x, y) at distance k.  Distances are Hamming distances, which coincide
    with the weighted graph distances here.

    Returns (True, None) or (False, first witness in scan order), scanning
    pairs lexicographically by vertex index so the witness is reproducible.
    """
    if g.n > cap:
        raise GraphCapError(f"regularity check capped at n={cap}, got {g.n}")
    dist = _distance_matrix(g)
    n_vals = g.n + 1
    first_hist: dict[int, np.ndarray] = {}
    first_pair: dict[int, tuple[int, int]] = {}
    for x in range(len(g.perms)):
        row_x = dist[x]
        for y in range(len(g.perms)):
            if x == y:
                continue
            k = int(dist[x, y])
            hist = np.bincount(row_x * n_vals + dist[y], minlength=n_vals * n_vals)
            if k not in first_hist:
                first_hist[k] = hist
                first_pair[k] = (x, y)
                continue
            if not np.array_equal(hist, first_hist[k]):
                flat = int(np.nonzero(hist != first_hist[k])[0][0])
                i, j = divmod(flat, n_vals)
                ax, ay = first_pair[k]
                witness = RegularityWitness(
                    x=g.perms[ax],
                    y=g.perms[ay],
                    x_prime=g.perms[x],
                    y_prime=g.perms[y],
                    k=k,
                    i=i,
                    j=j,
                    count_a=int(first_hist[k][flat]),
                    count_b=int(hist[flat]),
                )
                return False, witness
    return True, None


def graph_to_json_dict(g: CayleyGraph) -> dict:
    """Adjacency export: each undirected edge once, as [u, v, weight]."""
    edges = []
    for u, nbrs in enumerate(g.neighbors):
        for v, w in nbrs:
            if u < v:
                edges.append([u, v, w])
    edges.sort()
    return {"n": g.n, "vertices": len(g.perms), "edges": edges}
