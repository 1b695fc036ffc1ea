"""Cut-structure predicates: K1/K2/path cuts, 2-edge-cuts, edge
connectivity, constrained vertex cuts, induced-path enumeration between
vertex pairs, and direct connections between subgraphs.

All searches are desk-scale exhaustive scans; every returned witness
re-verifies by removal-and-count.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, Optional

from .budget import ensure_budget
from .errors import MalformedInput, NoConnection
from .graph import (
    Graph,
    closed_neighborhood,
    induced_subgraph,
    is_induced_path,
    norm_edge,
    num_components,
)


@dataclass(frozen=True)
class CutWitness:
    """A removed set whose deletion disconnects the host graph.

    kind is "K1", "K2", "P3", ..., "EdgePair" or "VertexSet";
    removed holds vertices (or edge pairs for EdgePair).
    """

    kind: str
    removed: tuple
    components_after: int

    def to_dict(self):
        return {
            "kind": self.kind,
            "removed": [list(x) if isinstance(x, tuple) else x for x in self.removed],
            "components_after": self.components_after,
        }


def k1_cuts(G: Graph) -> list[int]:
    """All cut-vertices, by brute-force removal."""
    base = num_components(G)
    return [v for v in range(G.n) if num_components(G, skip_vertices=(v,)) > base]


def k2_cuts(G: Graph) -> list[tuple[int, int]]:
    """All adjacent pairs whose removal disconnects the graph."""
    out = []
    for u, v in sorted(G.edges):
        if num_components(G, skip_vertices=(u, v)) >= 2:
            out.append((u, v))
    return out


def _induced_vertex_paths(G: Graph, nverts: int) -> Iterator[tuple[int, ...]]:
    """All induced paths on exactly nverts vertices, each emitted once
    (endpoints ordered ascending)."""
    adjsets = G.adjsets

    def extend(path, pathset):
        if len(path) == nverts:
            if path[0] < path[-1] or nverts == 1:
                yield tuple(path)
            return
        for w in G.adj[path[-1]]:
            if w in pathset or any(w in adjsets[p] for p in path[:-1]):
                continue
            path.append(w)
            pathset.add(w)
            yield from extend(path, pathset)
            path.pop()
            pathset.remove(w)

    for s in range(G.n):
        yield from extend([s], {s})


def _simple_vertex_paths(G: Graph, nverts: int) -> Iterator[tuple[int, ...]]:
    def extend(path, pathset):
        if len(path) == nverts:
            if path[0] < path[-1] or nverts == 1:
                yield tuple(path)
            return
        for w in G.adj[path[-1]]:
            if w in pathset:
                continue
            path.append(w)
            pathset.add(w)
            yield from extend(path, pathset)
            path.pop()
            pathset.remove(w)

    for s in range(G.n):
        yield from extend([s], {s})


def pi_cuts(G: Graph, i: int, induced: bool = True) -> list[CutWitness]:
    """Every i-vertex path whose removal disconnects G.

    The removed path is required to be induced by default; pass
    induced=False for the sensitivity-check variant.
    """
    if i < 1 or i > G.n:
        return []
    gen = _induced_vertex_paths if induced else _simple_vertex_paths
    out = []
    for path in gen(G, i):
        k = num_components(G, skip_vertices=path)
        if k >= 2:
            out.append(CutWitness(kind=f"P{i}", removed=path, components_after=k))
    out.sort(key=lambda w: w.removed)
    return out


def two_edge_cuts(G: Graph) -> list[tuple[tuple[int, int], tuple[int, int]]]:
    """All pairs of edges whose deletion disconnects G (G connected)."""
    out = []
    edges = sorted(G.edges)
    for e, f in combinations(edges, 2):
        if num_components(G, skip_edges=(e, f)) >= 2:
            out.append((e, f))
    return out


def _max_flow_unit(G: Graph, s: int, t: int) -> int:
    """Edmonds-Karp max flow with unit capacities on both arc directions."""
    cap = {}
    for u, v in G.edges:
        cap[(u, v)] = 1
        cap[(v, u)] = 1
    flow = 0
    while True:
        parent = {s: None}
        q = deque([s])
        while q and t not in parent:
            u = q.popleft()
            for w in G.adj[u]:
                if w not in parent and cap[(u, w)] > 0:
                    parent[w] = u
                    q.append(w)
        if t not in parent:
            return flow
        v = t
        while parent[v] is not None:
            u = parent[v]
            cap[(u, v)] -= 1
            cap[(v, u)] += 1
            v = u
        flow += 1


def edge_connectivity(G: Graph) -> int:
    """Global minimum edge cut size; 0 for disconnected or trivial graphs."""
    if G.n <= 1 or num_components(G) > 1:
        return 0
    return min(_max_flow_unit(G, 0, t) for t in range(1, G.n))


def constrained_vertex_cuts(G: Graph, x: int, y: int) -> list[tuple[int, ...]]:
    """All minimal vertex cuts X with {x,y} <= X <= N[{x,y}].

    Minimal means inclusion-minimal among cuts satisfying the sandwich
    condition; tested by single-vertex removal.
    """
    if x == y:
        raise MalformedInput("x and y must differ")
    pool = sorted(closed_neighborhood(G, (x, y)) - {x, y})

    def is_cut(X):
        return num_components(G, skip_vertices=X) >= 2 and len(X) < G.n

    cuts = []
    for r in range(len(pool) + 1):
        for extra in combinations(pool, r):
            X = (x, y) + extra
            if not is_cut(X):
                continue
            if any(is_cut(tuple(v for v in X if v != e)) for e in extra):
                continue  # not minimal
            cuts.append(tuple(sorted(X)))
    return sorted(set(cuts))


def induced_paths_between(
    G: Graph, x: int, y: int, max_len: int | None = None, budget=None
) -> Iterator[tuple[int, ...]]:
    """Every induced (x,y)-path, as a vertex sequence from x to y.

    The endpoint pair itself is exempt from the chord check: when x and y
    are adjacent, paths that are chordless apart from the xy edge are
    still emitted (so an n-cycle yields lengths 1 and n-1).
    """
    if x == y:
        raise MalformedInput("x and y must differ")
    budget = ensure_budget(budget)
    adjsets = G.adjsets

    def extend(path, pathset):
        last = path[-1]
        for w in G.adj[last]:
            budget.spend()
            if w in pathset:
                continue
            if w == y:
                if any(w in adjsets[p] for p in path[1:-1]):
                    continue
                yield (*path, w)
                continue
            if any(w in adjsets[p] for p in path[:-1]):
                continue
            if max_len is not None and len(path) >= max_len:
                continue
            pathset.add(w)
            path.append(w)
            yield from extend(path, pathset)
            path.pop()
            pathset.remove(w)

    yield from extend([x], {x})


def all_same_length(G: Graph, x: int, y: int, budget=None) -> Optional[int]:
    """The common length of all induced (x,y)-paths, or None when lengths
    vary or no path exists. Exits early on the second distinct length."""
    length = None
    for path in induced_paths_between(G, x, y, budget=budget):
        k = len(path) - 1
        if length is None:
            length = k
        elif k != length:
            return None
    return length


@dataclass(frozen=True)
class DirectConnection:
    """An induced path linking two disjoint subgraphs, touching each of
    them through exactly one end."""

    path: tuple[int, ...]
    attach1: tuple[int, ...]
    attach2: tuple[int, ...]

    def to_dict(self):
        return {
            "path": list(self.path),
            "attach1": list(self.attach1),
            "attach2": list(self.attach2),
        }


def direct_connections(
    G: Graph, H1, H2, exhaustive: bool = True, budget=None
) -> list[DirectConnection]:
    """Direct connections linking H1 and H2 (disjoint vertex sets).

    A witness path lies outside H1 and H2, is induced, and only its first
    vertex has a neighbor in H1 and only its last a neighbor in H2 (a
    single-vertex path may serve both roles). With exhaustive=False only a
    witness extracted from one shortest connecting path is returned.

    Raises NoConnection when no H1-H2 path exists in G at all.
    """
    H1, H2 = set(H1), set(H2)
    if H1 & H2:
        raise MalformedInput("H1 and H2 must be disjoint")
    budget = ensure_budget(budget)
    blocked = H1 | H2
    adjsets = G.adjsets

    def touches(v, H):
        return any(w in H for w in G.adj[v])

    # reachability check (through any vertices)
    seen = set(H1)
    q = deque(H1)
    reached = bool(H1 & H2)
    while q:
        u = q.popleft()
        if u in H2:
            reached = True
            break
        for w in G.adj[u]:
            if w not in seen:
                seen.add(w)
                q.append(w)
    if not (seen & H2 or reached):
        raise NoConnection("H1 and H2 lie in different components")

    if not exhaustive:
        dc = _shortest_direct_connection(G, H1, H2)
        return [dc] if dc is not None else []

    out = []

    def emit(path):
        out.append(
            DirectConnection(
                path=tuple(path),
                attach1=tuple(w for w in G.adj[path[0]] if w in H1),
                attach2=tuple(w for w in G.adj[path[-1]] if w in H2),
            )
        )

    def extend(path, pathset):
        last = path[-1]
        for w in G.adj[last]:
            budget.spend()
            if w in blocked or w in pathset:
                continue
            if touches(w, H1):
                continue  # only the first vertex may touch H1
            if any(w in adjsets[p] for p in path[:-1]):
                continue
            if touches(w, H2):
                emit((*path, w))
                continue
            pathset.add(w)
            path.append(w)
            extend(path, pathset)
            path.pop()
            pathset.remove(w)

    for v1 in range(G.n):
        if v1 in blocked or not touches(v1, H1):
            continue
        if touches(v1, H2):
            emit((v1,))
            continue
        extend([v1], {v1})
    out.sort(key=lambda d: d.path)
    return out


def _shortest_direct_connection(G, H1, H2) -> Optional[DirectConnection]:
    """Internal vertices of a shortest H1-H2 connecting path, when any."""
    blocked = H1 | H2
    parent = {}
    q = deque()
    for h in sorted(H1):
        for w in G.adj[h]:
            if w not in blocked and w not in parent:
                parent[w] = None
                q.append(w)
    while q:
        u = q.popleft()
        if any(w in H2 for w in G.adj[u]):
            path = []
            v = u
            while v is not None:
                path.append(v)
                v = parent[v]
            path.reverse()
            return DirectConnection(
                path=tuple(path),
                attach1=tuple(w for w in G.adj[path[0]] if w in H1),
                attach2=tuple(w for w in G.adj[path[-1]] if w in H2),
            )
        for w in G.adj[u]:
            if w not in blocked and w not in parent:
                parent[w] = u
                q.append(w)
    return None
