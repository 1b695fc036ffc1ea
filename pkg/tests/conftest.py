"""Shared fixtures and independent brute-force oracles.

The oracles deliberately avoid the library's search code: subset scans,
itertools products, and component counts only. They are slow and only
meant for small n.
"""

from itertools import combinations, product

import pytest

from oddholes import (
    Graph,
    cycle,
    from_edge_list,
    petersen,
    theta,
)
from oddholes.graph import components, norm_edge


def complete_graph(n):
    return from_edge_list(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def brute_induced_cycles(G):
    """Every vertex subset inducing a connected 2-regular subgraph."""
    found = set()
    for k in range(3, G.n + 1):
        for S in combinations(range(G.n), k):
            inS = set(S)
            degs = [sum(1 for w in G.adj[v] if w in inS) for v in S]
            if any(d != 2 for d in degs):
                continue
            # connectivity of G[S]
            seen = {S[0]}
            stack = [S[0]]
            while stack:
                u = stack.pop()
                for w in G.adj[u]:
                    if w in inS and w not in seen:
                        seen.add(w)
                        stack.append(w)
            if len(seen) == k:
                found.add(frozenset(S))
    return found


def brute_girth(G):
    cycles = brute_induced_cycles(G)
    return min((len(c) for c in cycles), default=float("inf"))


def brute_cutvertices(G):
    base = len(components(G))
    return {
        v for v in range(G.n) if len(components(G, skip_vertices=(v,))) > base
    }


def brute_is_k_colorable(G, k):
    if G.n == 0:
        return True
    for assignment in product(range(k), repeat=G.n):
        if all(assignment[u] != assignment[v] for u, v in G.edges):
            return True
    return False


def petersen_by_definition():
    """GP(5,2) written out from its textbook definition, independent of
    the package generator."""
    pairs = []
    for i in range(5):
        pairs.append((i, (i + 1) % 5))  # outer cycle
        pairs.append((5 + i, 5 + (i + 2) % 5))  # inner pentagram
        pairs.append((i, 5 + i))  # spokes
    return from_edge_list(10, pairs)


@pytest.fixture(scope="session")
def petersen_graph():
    return petersen()


@pytest.fixture(scope="session")
def k4():
    return complete_graph(4)
