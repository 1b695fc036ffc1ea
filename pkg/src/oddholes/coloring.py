"""Exact chromatic number, k-colorability, and k-vertex-criticality.

Branch-and-bound with saturation-first vertex order, a greedy clique lower
bound, and deterministic tie-breaks by vertex id. No budgets: desk-scale
instances only, and certificates are always re-verifiable.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .graph import Graph, remove_vertices


def verify_coloring(G: Graph, assignment) -> bool:
    """No edge monochromatic and every vertex colored."""
    if len(assignment) != G.n:
        return False
    return all(assignment[u] != assignment[v] for u, v in G.edges)


def greedy_clique(G: Graph) -> list[int]:
    """A maximal clique grown greedily from the highest-degree vertex."""
    if G.n == 0:
        return []
    adjsets = G.adjsets
    order = sorted(range(G.n), key=lambda v: (-G.degree(v), v))
    clique = [order[0]]
    for v in order[1:]:
        if all(v in adjsets[u] for u in clique):
            clique.append(v)
    return sorted(clique)


def is_k_colorable(G: Graph, k: int) -> Optional[list[int]]:
    """An exact proper coloring with at most k colors, or None.

    Saturation-degree vertex selection; colors tried in ascending order,
    capped at one above the maximum color used so far (symmetry break).
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    n = G.n
    if n == 0:
        return []
    if k == 0:
        return None
    if G.m == 0:
        return [0] * n
    adjsets = G.adjsets
    color = [-1] * n

    def pick():
        best, best_key = -1, None
        for v in range(n):
            if color[v] != -1:
                continue
            sat = len({color[w] for w in adjsets[v] if color[w] != -1})
            key = (-sat, -G.degree(v), v)
            if best_key is None or key < best_key:
                best, best_key = v, key
        return best

    def solve(ncolored, maxused):
        if ncolored == n:
            return True
        v = pick()
        forbidden = {color[w] for w in adjsets[v] if color[w] != -1}
        for c in range(min(k - 1, maxused + 1) + 1):
            if c in forbidden:
                continue
            color[v] = c
            if solve(ncolored + 1, max(maxused, c)):
                return True
            color[v] = -1
        return False

    if solve(0, -1):
        assert verify_coloring(G, color)
        return list(color)
    return None


def chromatic_number(G: Graph) -> tuple[int, list[int]]:
    """The least k admitting a proper coloring, with a certificate."""
    if G.n == 0:
        return 0, []
    lo = max(len(greedy_clique(G)), 1)
    k = lo
    while True:
        cert = is_k_colorable(G, k)
        if cert is not None:
            return k, cert
        k += 1


@dataclass(frozen=True)
class CriticalityVerdict:
    k: int
    is_critical: bool
    chi: int
    failing_vertex: Optional[int] = None

    def to_dict(self):
        return {
            "k": self.k,
            "is_critical": self.is_critical,
            "chi": self.chi,
            "failing_vertex": self.failing_vertex,
        }


def is_k_vertex_critical(G: Graph, k: int) -> CriticalityVerdict:
    """chi(G) = k and chi(G - v) = k - 1 for every vertex v.

    failing_vertex is the first v (by id) with chi(G - v) = chi(G) when the
    graph has the right chromatic number but is not critical.
    """
    if k < 1:
        raise ValueError("k must be positive")
    chi, _ = chromatic_number(G)
    if chi != k:
        return CriticalityVerdict(k=k, is_critical=False, chi=chi)
    for v in range(G.n):
        sub, _ = remove_vertices(G, (v,))
        chi_v, _ = chromatic_number(sub)
        assert chi_v in (chi, chi - 1), "vertex deletion can drop chi by at most 1"
        if chi_v != k - 1:
            return CriticalityVerdict(k=k, is_critical=False, chi=chi, failing_vertex=v)
    return CriticalityVerdict(k=k, is_critical=True, chi=chi)
