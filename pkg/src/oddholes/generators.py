"""Witness families and corpora: cycles, theta graphs, prescribed-length
K4-subdivision hosts, generalized Petersen graphs, Mycielski construction,
odd wheels, girth-filtered random graphs, and the builtin corpus.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .errors import ExhaustedAttempts, MalformedInput
from .graph import Graph, from_edge_list, _build, norm_edge
from .subdivisions import ARRIS_ENDS, K4Subdivision


def cycle(n: int) -> Graph:
    if n < 3:
        raise MalformedInput("cycle needs n >= 3")
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def theta(a: int, b: int, c: int) -> Graph:
    """Two branch vertices 0 and 1 joined by internally disjoint paths of
    lengths a, b, c. At most one length may be 1 (no parallel edges)."""
    lengths = (a, b, c)
    if any(x < 1 for x in lengths):
        raise MalformedInput("theta path lengths must be >= 1")
    if sum(1 for x in lengths if x == 1) > 1:
        raise MalformedInput("two length-1 theta paths would form a multi-edge")
    edges = []
    nxt = 2
    for L in lengths:
        prev = 0
        for _ in range(L - 1):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
        edges.append((prev, 1))
    return from_edge_list(nxt, edges)


def odd_wheel(n_rim: int) -> Graph:
    """An odd cycle plus a hub adjacent to every rim vertex."""
    if n_rim < 3 or n_rim % 2 == 0:
        raise MalformedInput("odd wheel needs an odd rim of length >= 3")
    edges = [(i, (i + 1) % n_rim) for i in range(n_rim)]
    edges += [(i, n_rim) for i in range(n_rim)]
    return from_edge_list(n_rim + 1, edges)


# arris index -> prescribed length slot: opposite pairs (0,5), (1,4), (2,3)
# receive lengths (p, p), (q, q), (l, l) respectively.
_LENGTH_SLOT = (0, 1, 2, 2, 1, 0)


def k4_subdivision(p: int, q: int, l: int) -> tuple[Graph, K4Subdivision]:
    """Host graph whose four faces all have length p + q + l.

    Opposite arris pairs get equal lengths, so for odd p+q+l = 2*ell+1 with
    p, q, l <= ell the host is a member of the girth-(2*ell+1) family and
    contains an odd K4-subdivision.
    """
    if min(p, q, l) < 1:
        raise MalformedInput("arris lengths must be >= 1")
    return k4_subdivision_custom(tuple((p, q, l)[s] for s in _LENGTH_SLOT))


def k4_subdivision_custom(lengths) -> tuple[Graph, K4Subdivision]:
    """Build a K4-subdivision with six prescribed arris lengths (indexed as
    in ARRIS_ENDS). Unequal opposite pairs are allowed; such hosts serve as
    negative tests for the detector."""
    lengths = tuple(lengths)
    if len(lengths) != 6 or any(x < 1 for x in lengths):
        raise MalformedInput("need six arris lengths >= 1")
    edges = []
    arrises = []
    nxt = 4
    for idx, L in enumerate(lengths):
        x, y = ARRIS_ENDS[idx]
        path = [x]
        prev = x
        for _ in range(L - 1):
            edges.append((prev, nxt))
            path.append(nxt)
            prev = nxt
            nxt += 1
        edges.append((prev, y))
        path.append(y)
        arrises.append(tuple(path))
    G = from_edge_list(nxt, edges)
    return G, K4Subdivision(branch=(0, 1, 2, 3), arrises=tuple(arrises))


def generalized_petersen(n: int, k: int) -> Graph:
    """GP(n, k): outer n-cycle 0..n-1, inner star polygon n..2n-1 with
    steps of k, and spokes."""
    if n < 3 or k < 1 or 2 * k >= n:
        raise MalformedInput("generalized Petersen needs n >= 3, 1 <= k < n/2")
    edges = [(i, (i + 1) % n) for i in range(n)]
    edges += [(n + i, n + (i + k) % n) for i in range(n)]
    edges += [(i, n + i) for i in range(n)]
    return from_edge_list(2 * n, edges)


def petersen() -> Graph:
    return generalized_petersen(5, 2)


def mycielski(G: Graph) -> Graph:
    """Standard Mycielski construction on 2n+1 vertices: originals,
    shadow copies wired to original neighborhoods, and an apex over the
    copies. Raises the chromatic number by one (for nonempty graphs with
    edges) without creating triangles from triangle-free inputs."""
    n = G.n
    edges = set(G.edges)
    for u, v in G.edges:
        edges.add(norm_edge(u, n + v))
        edges.add(norm_edge(v, n + u))
    apex = 2 * n
    for i in range(n):
        edges.add((n + i, apex))
    return _build(2 * n + 1, edges)


def grotzsch() -> Graph:
    return mycielski(cycle(5))


class SplitMix64:
    """Deterministic 64-bit PRNG (splitmix64).

    State advances by the golden-ratio increment 0x9E3779B97F4A7C15; output
    mixing multiplies by 0xBF58476D1CE4E5B9 and 0x94D049BB133111EB with
    30/27/31-bit xor-shifts. Fixed here so corpora are bit-reproducible
    across implementations.
    """

    _MASK = (1 << 64) - 1

    def __init__(self, seed: int):
        self.state = seed & self._MASK

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & self._MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & self._MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & self._MASK
        return z ^ (z >> 31)

    def randrange(self, k: int) -> int:
        # rejection sampling keeps the draw unbiased
        lim = (1 << 64) - ((1 << 64) % k)
        while True:
            r = self.next_u64()
            if r < lim:
                return r % k


def _bfs_dist(adj, u, v, cap):
    """Distance from u to v, or None when greater than cap/unreachable."""
    if u == v:
        return 0
    dist = {u: 0}
    q = deque([u])
    while q:
        a = q.popleft()
        if dist[a] >= cap:
            return None
        for b in adj[a]:
            if b not in dist:
                if b == v:
                    return dist[a] + 1
                dist[b] = dist[a] + 1
                q.append(b)
    return None


def random_girth_graph(
    n: int, m: int, girth_min: int, seed: int, max_attempts: int = 100
) -> Graph:
    """Random m-edge graph on n vertices with girth >= girth_min.

    Rejection sampling with edge-insertion short-cycle checks: a candidate
    edge is accepted only when its endpoints are at distance >= girth_min-1
    in the partial graph, so no short cycle can ever appear. Deterministic
    given the seed. Raises ExhaustedAttempts when no attempt completes.
    """
    if n < 1 or m < 0 or girth_min < 3 or max_attempts < 1:
        raise MalformedInput("parameters must be positive (girth_min >= 3)")
    rng = SplitMix64(seed)
    for _ in range(max_attempts):
        edges: set[tuple[int, int]] = set()
        adj: list[list[int]] = [[] for _ in range(n)]
        tries = 0
        limit = 60 * m + 120
        while len(edges) < m and tries < limit:
            tries += 1
            u = rng.randrange(n)
            v = rng.randrange(n)
            if u == v:
                continue
            e = norm_edge(u, v)
            if e in edges:
                continue
            d = _bfs_dist(adj, u, v, girth_min - 2)
            if d is not None:
                continue  # would close a cycle shorter than girth_min
            edges.add(e)
            adj[u].append(v)
            adj[v].append(u)
        if len(edges) == m:
            return _build(n, edges)
    raise ExhaustedAttempts(
        f"no {m}-edge graph on {n} vertices with girth >= {girth_min} "
        f"after {max_attempts} attempts"
    )


@dataclass(frozen=True)
class CorpusEntry:
    id: str
    graph: Graph
    provenance: str


def builtin_corpus() -> list[CorpusEntry]:
    """Deterministic corpus exercising every predicate family."""
    entries: list[CorpusEntry] = []

    def add(eid, G, prov):
        entries.append(CorpusEntry(id=eid, graph=G, provenance=prov))

    for n in range(5, 16):
        add(f"cycle-{n}", cycle(n), f"cycle({n})")
    for a in range(1, 7):
        for b in range(a, 7):
            for c in range(b, 7):
                if a == 1 and b == 1:
                    continue
                add(f"theta-{a}-{b}-{c}", theta(a, b, c), f"theta({a},{b},{c})")
    for p in range(1, 7):
        for q in range(1, p + 1):
            for l in range(1, q + 1):
                G, _ = k4_subdivision(p, q, l)
                add(f"k4sub-{p}-{q}-{l}", G, f"k4_subdivision({p},{q},{l})")
    for n in range(5, 13):
        add(f"gp-{n}-2", generalized_petersen(n, 2), f"generalized_petersen({n},2)")
    add("k4", from_edge_list(4, [(i, j) for i in range(4) for j in range(i + 1, 4)]), "complete(4)")
    add("wheel-5", odd_wheel(5), "odd_wheel(5)")
    add("wheel-7", odd_wheel(7), "odd_wheel(7)")
    add("grotzsch", grotzsch(), "mycielski(cycle(5))")
    add("mycielski-c7", mycielski(cycle(7)), "mycielski(cycle(7))")
    for i in range(50):
        n = 13 + (i % 8)
        m = n + 1
        gm = (5, 7, 9, 11)[i % 4]
        seed = 9000 + i
        try:
            G = random_girth_graph(n, m, gm, seed=seed, max_attempts=40)
        except ExhaustedAttempts:
            continue  # deterministic skip: parameters infeasible at this size
        add(
            f"rand-{i}",
            G,
            f"random_girth_graph({n},{m},{gm},seed={seed})",
        )
    assert len({e.id for e in entries}) == len(entries)
    return entries
