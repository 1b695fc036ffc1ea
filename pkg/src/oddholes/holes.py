"""Girth, induced-cycle and odd-hole enumeration, membership in the
girth-(2*ell+1) families, theta subgraphs, and chordal paths.

A hole is an induced cycle of length >= 4; an odd hole is a hole of odd
length. A graph belongs to the family with parameter ell >= 2 when its
girth is exactly 2*ell+1 and every odd hole has length exactly 2*ell+1.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from typing import Iterator, Optional, Sequence

from .budget import ensure_budget
from .graph import (
    Graph,
    canonical_cycle,
    induced_subgraph,
    is_induced_cycle,
)

INFINITY = math.inf


def girth(G: Graph):
    """Length of a shortest cycle, by BFS from every vertex; inf for forests.

    Per root, a non-tree edge between vertices at depths d1, d2 witnesses a
    closed walk of length d1+d2+1; the minimum over all roots is the girth.
    """
    best = INFINITY
    for root in range(G.n):
        dist = {root: 0}
        parent = {root: -1}
        q = deque([root])
        while q:
            u = q.popleft()
            if 2 * dist[u] >= best:
                break
            for w in G.adj[u]:
                if w not in dist:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    q.append(w)
                elif parent[u] != w:
                    best = min(best, dist[u] + dist[w] + 1)
    return best


def enumerate_induced_cycles(
    G: Graph, max_len: int | None = None, budget=None
) -> Iterator[tuple[int, ...]]:
    """Yield every induced cycle exactly once, up to rotation/reflection.

    Canonical-start DFS: the anchor is the smallest vertex of the cycle, the
    search only extends with larger vertices and forbids chords as it goes,
    and each cycle is emitted in the direction whose second vertex is
    smaller than its last.
    """
    budget = ensure_budget(budget)
    adjsets = G.adjsets

    def extend(anchor, path, pathset):
        last = path[-1]
        for w in G.adj[last]:
            budget.spend()
            if w <= anchor or w in pathset:
                continue
            # w may touch the path only at `last` (plus the anchor, when closing)
            if any(p != anchor and p != last and w in adjsets[p] for p in path):
                continue
            if w in adjsets[anchor]:
                # closing edge: anything longer would leave a chord to the anchor
                if len(path) >= 2 and path[1] < w:
                    yield (*path, w)
                continue
            if max_len is not None and len(path) + 1 >= max_len:
                continue
            pathset.add(w)
            path.append(w)
            yield from extend(anchor, path, pathset)
            path.pop()
            pathset.remove(w)

    for anchor in range(G.n):
        if max_len is not None and max_len < 3:
            return
        for b in G.adj[anchor]:
            if b <= anchor:
                continue
            yield from extend(anchor, [anchor, b], {anchor, b})


def odd_holes(G: Graph, budget=None) -> list[tuple[int, ...]]:
    """All induced cycles of odd length >= 5."""
    return [
        c
        for c in enumerate_induced_cycles(G, budget=budget)
        if len(c) >= 5 and len(c) % 2 == 1
    ]


@dataclass(frozen=True)
class GellVerdict:
    """Outcome of the membership test.

    failure_reason is one of "acyclic", "girth-even", "girth-too-small",
    "long-odd-hole" (with the offending hole as witness).
    """

    member: bool
    ell: Optional[int] = None
    failure_reason: Optional[str] = None
    witness: Optional[tuple[int, ...]] = None

    def to_dict(self):
        d = {"member": self.member, "ell": self.ell}
        if self.failure_reason is not None:
            d["failure_reason"] = self.failure_reason
        if self.witness is not None:
            d["witness"] = list(self.witness)
        return d


def g_ell_membership(G: Graph, budget=None) -> GellVerdict:
    """Decide membership: girth 2*ell+1 (ell >= 2) and no odd hole of
    length >= 2*ell+3, by full induced-cycle enumeration."""
    g = girth(G)
    if g is INFINITY:
        return GellVerdict(False, failure_reason="acyclic")
    if g % 2 == 0:
        return GellVerdict(False, failure_reason="girth-even")
    if g < 5:
        return GellVerdict(False, failure_reason="girth-too-small")
    ell = (g - 1) // 2
    for c in enumerate_induced_cycles(G, budget=budget):
        if len(c) % 2 == 1 and len(c) > g:
            return GellVerdict(
                False, failure_reason="long-odd-hole", witness=canonical_cycle(c)
            )
    return GellVerdict(True, ell=ell)


@dataclass(frozen=True)
class ThetaDecomposition:
    branch: tuple[int, int]
    paths: tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...]]


def is_induced_theta(G: Graph, S) -> Optional[ThetaDecomposition]:
    """Decide whether G[S] is an induced theta subgraph.

    A theta is two degree-3 vertices joined by three internally disjoint
    paths whose interiors have degree 2, with no other edges. Returns the
    branch vertices and the three paths (in original labels), or None.
    """
    S = sorted(set(S))
    sub, new_to_old = induced_subgraph(G, S)
    n = sub.n
    if n < 4:
        return None
    deg3 = [v for v in range(n) if sub.degree(v) == 3]
    if len(deg3) != 2 or any(
        sub.degree(v) != 2 for v in range(n) if v not in deg3
    ):
        return None
    if sub.m != n + 1:
        return None
    u, w = deg3
    paths = []
    interiors_seen: set[int] = set()
    for first in sub.adj[u]:
        path = [u, first]
        prev, cur = u, first
        while cur not in (u, w):
            nxt = [x for x in sub.adj[cur] if x != prev]
            if len(nxt) != 1:
                return None
            prev, cur = cur, nxt[0]
            path.append(cur)
        if cur != w:
            return None  # walk returned to u: dumbbell-like, not a theta
        interior = set(path[1:-1])
        if interior & interiors_seen:
            return None
        interiors_seen |= interior
        paths.append(tuple(new_to_old[v] for v in path))
    if len(paths) != 3:
        return None
    return ThetaDecomposition(
        branch=(new_to_old[u], new_to_old[w]), paths=tuple(paths)
    )


@dataclass(frozen=True)
class ChordalPathRecord:
    """A chordal path of a hole: an induced path whose interior avoids the
    hole and whose union with the hole induces a theta subgraph.

    arc1 and arc2 are the two hole arcs between the path's endpoints, both
    oriented from the lower endpoint id; arc1 is the one whose second
    vertex is smaller.
    """

    hole: tuple[int, ...]
    path: tuple[int, ...]
    arc1: tuple[int, ...]
    arc2: tuple[int, ...]

    def to_dict(self):
        return {
            "hole": list(self.hole),
            "path": list(self.path),
            "arc1": list(self.arc1),
            "arc2": list(self.arc2),
        }


def hole_arcs(C: Sequence[int], x: int, y: int):
    """The two arcs of cycle C between x and y, ordered per ChordalPathRecord."""
    k = len(C)
    i, j = C.index(x), C.index(y)
    fwd = tuple(C[(i + t) % k] for t in range((j - i) % k + 1))
    bwd = tuple(C[(i - t) % k] for t in range((i - j) % k + 1))
    arcs = []
    for arc in (fwd, bwd):
        if arc[0] != min(x, y):
            arc = tuple(reversed(arc))
        arcs.append(arc)
    arcs.sort(key=lambda a: a[1])
    return arcs[0], arcs[1]


def chordal_paths(G: Graph, C: Sequence[int], budget=None) -> list[ChordalPathRecord]:
    """All chordal paths of the hole C, each as a ChordalPathRecord.

    Enumerates induced paths between pairs of C-vertices whose interiors lie
    outside C, then keeps those whose union with C induces a theta.
    """
    budget = ensure_budget(budget)
    onC = set(C)
    adjsets = G.adjsets
    out: list[ChordalPathRecord] = []

    def extend(path, pathset):
        last = path[-1]
        for w in G.adj[last]:
            budget.spend()
            if w in onC:
                # closing at a second hole vertex; emit once, from the
                # lower endpoint. Endpoints adjacent on C are legal (the
                # short arc is then a single edge); the theta test decides.
                if w == path[0] or len(path) < 2 or path[0] > w:
                    continue
                if any(w in adjsets[p] for p in path[1:-1]):
                    continue
                cand = (*path, w)
                if is_induced_theta(G, onC | set(cand)) is not None:
                    a1, a2 = hole_arcs(C, cand[0], w)
                    out.append(
                        ChordalPathRecord(hole=tuple(C), path=cand, arc1=a1, arc2=a2)
                    )
                continue
            if w in pathset:
                continue
            if any(w in adjsets[p] for p in path[:-1]):
                continue
            pathset.add(w)
            path.append(w)
            extend(path, pathset)
            path.pop()
            pathset.remove(w)

    for x in sorted(onC):
        extend([x], {x})
    return out
