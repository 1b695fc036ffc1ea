"""K4-subdivision enumeration, faces, opposite arris pairs, difference,
and the odd-subdivision property.

A K4-subdivision has four branch vertices of degree 3 and six arrises
(branch-to-branch paths with degree-2 interiors) grouped into three
vertex-disjoint opposite pairs; its four faces are the subdivided K4
triangles. The subdivision is "odd" when every face is an odd hole of the
host graph, checked against the host rather than the subdivision alone.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, Optional

from .budget import ensure_budget
from .graph import Graph, is_induced_cycle, norm_edge, path_edges

# arris index -> (branch index, branch index), sorted pairs in lex order
ARRIS_ENDS = ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))
# vertex-disjoint (opposite) arris index pairs
OPPOSITE_PAIRS = ((0, 5), (1, 4), (2, 3))
# faces as arris index triples: triangles (012), (013), (023), (123)
FACE_ARRISES = ((0, 3, 1), (0, 4, 2), (1, 5, 2), (3, 5, 4))


@dataclass(frozen=True)
class K4Subdivision:
    """branch holds the four degree-3 vertices in ascending order; arris i
    joins branch[ARRIS_ENDS[i][0]] to branch[ARRIS_ENDS[i][1]] and is
    stored oriented that way."""

    branch: tuple[int, int, int, int]
    arrises: tuple[tuple[int, ...], ...]

    def arris_lengths(self) -> tuple[int, ...]:
        return tuple(len(a) - 1 for a in self.arrises)

    def pairs(self):
        """The three opposite arris pairs, as ((arris, arris), ...)."""
        return tuple(
            (self.arrises[i], self.arrises[j]) for i, j in OPPOSITE_PAIRS
        )

    def faces(self) -> tuple[tuple[int, ...], ...]:
        """Four face cycles, each the union of three arrises."""
        out = []
        for ia, ib, ic in FACE_ARRISES:
            a, b, c = self.arrises[ia], self.arrises[ib], self.arrises[ic]
            # a: p->q, b: q->r, c: p->r; walk p..q..r..p
            cyc = list(a) + list(b[1:]) + list(reversed(c))[1:-1]
            out.append(tuple(cyc))
        return tuple(out)

    def vertices(self) -> frozenset[int]:
        return frozenset(v for a in self.arrises for v in a)

    def edges(self) -> frozenset[tuple[int, int]]:
        return frozenset(e for a in self.arrises for e in path_edges(a))

    def to_dict(self):
        return {
            "branch": list(self.branch),
            "arrises": [list(a) for a in self.arrises],
            "pairs": [list(p) for p in OPPOSITE_PAIRS],
            "face_lengths": [len(f) for f in self.faces()],
        }


def verify_subdivision(G: Graph, H: K4Subdivision) -> bool:
    """Re-verify the full structure from scratch: edges present, branch
    degrees 3 within H, arris interiors of degree 2 avoiding branches,
    internal disjointness, opposite pairs vertex-disjoint."""
    if len(H.branch) != 4 or len(set(H.branch)) != 4 or len(H.arrises) != 6:
        return False
    if not all(e in G.edges for e in H.edges()):
        return False
    branchset = set(H.branch)
    interiors: set[int] = set()
    for idx, arris in enumerate(H.arrises):
        i, j = ARRIS_ENDS[idx]
        if arris[0] != H.branch[i] or arris[-1] != H.branch[j]:
            return False
        if len(arris) != len(set(arris)):
            return False
        inner = set(arris[1:-1])
        if inner & branchset or inner & interiors:
            return False
        interiors |= inner
    deg: dict[int, int] = {}
    for u, v in H.edges():
        deg[u] = deg.get(u, 0) + 1
        deg[v] = deg.get(v, 0) + 1
    if any(deg.get(b) != 3 for b in H.branch):
        return False
    if any(deg[v] != 2 for v in interiors):
        return False
    for i, j in OPPOSITE_PAIRS:
        if set(H.arrises[i]) & set(H.arrises[j]):
            return False
    return True


@dataclass(frozen=True)
class OddK4Verdict:
    subdivision: K4Subdivision
    is_odd: bool
    face_lengths: tuple[int, int, int, int]
    non_odd_face: Optional[int] = None

    def to_dict(self):
        return {
            "subdivision": self.subdivision.to_dict(),
            "is_odd": self.is_odd,
            "face_lengths": list(self.face_lengths),
            "non_odd_face": self.non_odd_face,
        }


def is_odd_k4_subdivision(G: Graph, H: K4Subdivision) -> OddK4Verdict:
    """Faces must be odd holes of the HOST graph: odd length >= 5 and
    induced in G, not merely in H."""
    faces = H.faces()
    lengths = tuple(len(f) for f in faces)
    non_odd = None
    for i, f in enumerate(faces):
        if len(f) < 5 or len(f) % 2 == 0 or not is_induced_cycle(G, f):
            non_odd = i
            break
    return OddK4Verdict(
        subdivision=H,
        is_odd=non_odd is None,
        face_lengths=lengths,
        non_odd_face=non_odd,
    )


def _paths_between(G, x, y, blocked, max_len, exact_len, budget):
    """Simple (x,y)-paths with interior outside blocked, ascending
    neighbor order (so enumeration order is deterministic)."""

    def extend(path, pathset):
        last = path[-1]
        for w in G.adj[last]:
            budget.spend()
            if w == y:
                if exact_len is not None and len(path) != exact_len:
                    continue
                yield (*path, w)
                continue
            if w in blocked or w in pathset:
                continue
            if max_len is not None and len(path) >= max_len:
                continue
            if exact_len is not None and len(path) >= exact_len:
                continue
            pathset.add(w)
            path.append(w)
            yield from extend(path, pathset)
            path.pop()
            pathset.remove(w)

    yield from extend([x], {x})


def enumerate_k4_subdivisions(
    G: Graph,
    max_arris_len: int | None = None,
    require_odd_faces: bool = False,
    pruned: bool = False,
    ell: int | None = None,
    budget=None,
) -> Iterator[K4Subdivision]:
    """Every K4-subdivision subgraph, once per subgraph.

    Branch 4-tuples are scanned in ascending order over vertices of degree
    >= 3; the six arrises are assigned by backtracking with incremental
    disjointness. With pruned=True (requires ell) arris lengths are capped
    at ell and opposite pairs are forced to equal lengths; this is sound
    only when the host is a verified member of the girth-(2*ell+1) family
    and odd faces are required.
    """
    if pruned and ell is None:
        raise ValueError("pruned search needs ell")
    budget = ensure_budget(budget)
    cand = [v for v in range(G.n) if G.degree(v) >= 3]

    cap = max_arris_len
    if pruned:
        cap = ell if cap is None else min(cap, ell)

    def assign(branch, idx, arrises, used):
        if idx == 6:
            H = K4Subdivision(branch=branch, arrises=tuple(arrises))
            if require_odd_faces and not is_odd_k4_subdivision(G, H).is_odd:
                return
            yield H
            return
        bi, bj = ARRIS_ENDS[idx]
        x, y = branch[bi], branch[bj]
        exact = None
        if pruned and idx >= 3:
            opp = {3: 2, 4: 1, 5: 0}[idx]
            exact = len(arrises[opp]) - 1
        blocked = set(branch) | used
        blocked.discard(x)
        for path in _paths_between(G, x, y, blocked, cap, exact, budget):
            inner = set(path[1:-1])
            arrises.append(path)
            used.update(inner)
            yield from assign(branch, idx + 1, arrises, used)
            used.difference_update(inner)
            arrises.pop()

    for branch in combinations(cand, 4):
        budget.spend()
        yield from assign(branch, 0, [], set())


def find_odd_k4_subdivision(G: Graph, budget=None) -> Optional[OddK4Verdict]:
    """First odd-K4-subdivision witness in canonical enumeration order,
    or None after exhaustive search. Raises SearchBudgetExceeded instead
    of returning None when the budget runs out."""
    for H in enumerate_k4_subdivisions(G, require_odd_faces=True, budget=budget):
        return is_odd_k4_subdivision(G, H)
    return None


def arris_pairs(H: K4Subdivision):
    return H.pairs()


def difference(H: K4Subdivision) -> int:
    """Longest arris length minus minimum arris length. When opposite
    pairs have equal lengths this matches the usual difference of an odd
    subdivision; for other hosts it is a max-minus-min generalization."""
    lengths = H.arris_lengths()
    return max(lengths) - min(lengths)


def edge_count_check(H: K4Subdivision, ell: int) -> bool:
    """Total arris length equals 4*ell + 2."""
    if ell < 2:
        raise ValueError("ell must be at least 2")
    return sum(H.arris_lengths()) == 4 * ell + 2
