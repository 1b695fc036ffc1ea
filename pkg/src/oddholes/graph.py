"""Immutable simple undirected graphs and elementary structural queries.

Vertices are dense integers 0..n-1. Graphs are frozen after construction;
"deletion" helpers return new Graph values together with relabel maps, so
predicates compose without aliasing hazards. Disconnected and empty graphs
are legal inputs everywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .errors import MalformedInput


def norm_edge(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph: no self-loops, no parallel edges.

    edges holds (u, v) pairs with u < v; adj[v] is the sorted neighbor list.
    """

    n: int
    edges: frozenset[tuple[int, int]]
    adj: tuple[tuple[int, ...], ...]

    @cached_property
    def adjsets(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(nbrs) for nbrs in self.adj)

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return norm_edge(u, v) in self.edges

    def vertices(self) -> range:
        return range(self.n)

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class Block:
    """One biconnected component; a bridge block is a single edge."""

    vertices: frozenset[int]
    is_bridge: bool


def from_edge_list(n: int, pairs: Iterable[tuple[int, int]]) -> Graph:
    """Build a Graph, rejecting self-loops, duplicates and bad vertex ids."""
    if n < 0:
        raise MalformedInput(f"negative vertex count {n}")
    edges = set()
    for u, v in pairs:
        if not (0 <= u < n and 0 <= v < n):
            raise MalformedInput(f"edge ({u},{v}) out of range for n={n}")
        if u == v:
            raise MalformedInput(f"self-loop at vertex {u}")
        e = norm_edge(u, v)
        if e in edges:
            raise MalformedInput(f"duplicate edge {e}")
        edges.add(e)
    return _build(n, edges)


def _build(n: int, edges: set[tuple[int, int]]) -> Graph:
    """Trusted constructor: edges already normalized and validated."""
    nbrs: list[list[int]] = [[] for _ in range(n)]
    for u, v in edges:
        nbrs[u].append(v)
        nbrs[v].append(u)
    adj = tuple(tuple(sorted(a)) for a in nbrs)
    return Graph(n=n, edges=frozenset(edges), adj=adj)


def induced_subgraph(G: Graph, S: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """Return (G[S], new_to_old) with vertices relabeled to 0..|S|-1.

    new_to_old[i] is the original id of new vertex i (sorted order).
    """
    S = sorted(set(S))
    for v in S:
        if not 0 <= v < G.n:
            raise MalformedInput(f"vertex {v} out of range")
    old_to_new = {v: i for i, v in enumerate(S)}
    inS = set(S)
    edges = {
        (old_to_new[u], old_to_new[v])
        for u, v in G.edges
        if u in inS and v in inS
    }
    return _build(len(S), edges), tuple(S)


def remove_vertices(G: Graph, X: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """G - X with relabeling; returns (graph, new_to_old)."""
    X = set(X)
    return induced_subgraph(G, (v for v in range(G.n) if v not in X))


def remove_edges(G: Graph, drop: Iterable[tuple[int, int]]) -> Graph:
    """G with the given edges deleted (vertex set unchanged)."""
    drop = {norm_edge(u, v) for u, v in drop}
    missing = drop - G.edges
    if missing:
        raise MalformedInput(f"edges not present: {sorted(missing)}")
    return _build(G.n, set(G.edges - drop))


def closed_neighborhood(G: Graph, S: Iterable[int]) -> frozenset[int]:
    """S together with every vertex having a neighbor in S."""
    S = set(S)
    for v in S:
        if not 0 <= v < G.n:
            raise MalformedInput(f"vertex {v} out of range")
    out = set(S)
    for v in S:
        out.update(G.adj[v])
    return frozenset(out)


def components(
    G: Graph,
    skip_vertices: Iterable[int] = (),
    skip_edges: Iterable[tuple[int, int]] = (),
) -> list[list[int]]:
    """Connected components of G minus the given vertices/edges.

    Component vertex lists keep original ids, sorted; components ordered by
    smallest vertex.
    """
    skipv = set(skip_vertices)
    skipe = {norm_edge(u, v) for u, v in skip_edges}
    seen = set(skipv)
    comps = []
    for root in range(G.n):
        if root in seen:
            continue
        comp = [root]
        seen.add(root)
        stack = [root]
        while stack:
            u = stack.pop()
            for w in G.adj[u]:
                if w in seen or (skipe and norm_edge(u, w) in skipe):
                    continue
                seen.add(w)
                comp.append(w)
                stack.append(w)
        comps.append(sorted(comp))
    return comps


def num_components(G, skip_vertices=(), skip_edges=()):
    return len(components(G, skip_vertices, skip_edges))


def is_connected(G: Graph) -> bool:
    return G.n == 0 or num_components(G) == 1


def is_path_sequence(G: Graph, seq: Sequence[int]) -> bool:
    """Distinct vertices, consecutive ones adjacent."""
    if len(seq) != len(set(seq)):
        return False
    return all(G.has_edge(seq[i], seq[i + 1]) for i in range(len(seq) - 1))


def is_induced_path(G: Graph, seq: Sequence[int]) -> bool:
    """True iff seq is a path with no edge between non-consecutive vertices."""
    if not is_path_sequence(G, seq):
        return False
    for i in range(len(seq)):
        for j in range(i + 2, len(seq)):
            if G.has_edge(seq[i], seq[j]):
                return False
    return True


def is_cycle_sequence(G: Graph, seq: Sequence[int]) -> bool:
    if len(seq) < 3 or len(seq) != len(set(seq)):
        return False
    return all(
        G.has_edge(seq[i], seq[(i + 1) % len(seq)]) for i in range(len(seq))
    )


def is_induced_cycle(G: Graph, seq: Sequence[int]) -> bool:
    """True iff seq is a cycle and the only edges among its vertices are the
    cyclically consecutive ones."""
    if not is_cycle_sequence(G, seq):
        return False
    k = len(seq)
    inseq = set(seq)
    # each vertex of an induced cycle has exactly 2 neighbors inside it
    for v in seq:
        if sum(1 for w in G.adj[v] if w in inseq) != 2:
            return False
    return k >= 3


def canonical_cycle(seq: Sequence[int]) -> tuple[int, ...]:
    """Normalize a cyclic sequence up to rotation and reflection: smallest
    vertex first, then the smaller of the two neighbors second."""
    k = len(seq)
    i = min(range(k), key=lambda j: seq[j])
    fwd = tuple(seq[(i + j) % k] for j in range(k))
    bwd = tuple(seq[(i - j) % k] for j in range(k))
    return min(fwd, bwd)


def path_ends(seq: Sequence[int]) -> tuple[int, int]:
    return seq[0], seq[-1]


def edge_symmetric_difference(
    H1: Iterable[tuple[int, int]], H2: Iterable[tuple[int, int]]
) -> frozenset[tuple[int, int]]:
    """Symmetric difference of two edge sets (pairs normalized)."""
    a = {norm_edge(u, v) for u, v in H1}
    b = {norm_edge(u, v) for u, v in H2}
    return frozenset(a ^ b)


def path_edges(seq: Sequence[int]) -> list[tuple[int, int]]:
    return [norm_edge(seq[i], seq[i + 1]) for i in range(len(seq) - 1)]


def cycle_edges(seq: Sequence[int]) -> list[tuple[int, int]]:
    k = len(seq)
    return [norm_edge(seq[i], seq[(i + 1) % k]) for i in range(k)]


def blocks_and_cutvertices(G: Graph) -> tuple[list[Block], frozenset[int]]:
    """Biconnected decomposition (Hopcroft-Tarjan, iterative).

    Returns the blocks (as vertex sets, bridges flagged) and the set of
    cut-vertices. Isolated vertices belong to no block.
    """
    disc = [-1] * G.n
    low = [0] * G.n
    blocks: list[Block] = []
    cutverts: set[int] = set()
    timer = 0

    for root in range(G.n):
        if disc[root] != -1:
            continue
        root_children = 0
        estack: list[tuple[int, int]] = []
        # frames: (v, parent, neighbor index)
        stack = [(root, -1, 0)]
        disc[root] = low[root] = timer
        timer += 1
        while stack:
            v, parent, i = stack.pop()
            if i < len(G.adj[v]):
                stack.append((v, parent, i + 1))
                w = G.adj[v][i]
                if disc[w] == -1:
                    estack.append((v, w))
                    if v == root:
                        root_children += 1
                    disc[w] = low[w] = timer
                    timer += 1
                    stack.append((w, v, 0))
                elif w != parent and disc[w] < disc[v]:
                    estack.append((v, w))
                    low[v] = min(low[v], disc[w])
            else:
                if parent != -1:
                    low[parent] = min(low[parent], low[v])
                    if low[v] >= disc[parent]:
                        # pop one block ending with edge (parent, v)
                        verts = set()
                        nedges = 0
                        while True:
                            a, b = estack.pop()
                            verts.update((a, b))
                            nedges += 1
                            if (a, b) == (parent, v):
                                break
                        blocks.append(
                            Block(frozenset(verts), is_bridge=(nedges == 1))
                        )
                        if parent != root:
                            cutverts.add(parent)
        if root_children >= 2:
            cutverts.add(root)
    return blocks, frozenset(cutverts)
