"""Simple undirected graphs with girth, cycle, distance, and bridge queries.

Vertices are dense indices ``0..n-1``. Edges are unordered pairs stored in
canonical ``(min, max)`` order; self-loops and parallel edges are rejected.
All query functions are pure; algorithms that mutate work on copies.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import shortest_path

from .errors import AcyclicGraphError, DomainError

# Girth of a forest: compares greater than any finite cycle length, so
# "girth >= g" is vacuously true for acyclic graphs.
ACYCLIC = math.inf

# Distance between vertices in different components.
UNREACHABLE = math.inf


def canonical_edge(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


class Graph:
    """Mutable simple graph backed by adjacency sets."""

    __slots__ = ("n", "_adj", "_m")

    def __init__(self, n: int, edges=()):
        if n < 1:
            raise DomainError(f"graph needs at least one vertex, got n={n}")
        self.n = n
        self._adj: list[set[int]] = [set() for _ in range(n)]
        self._m = 0
        for u, v in edges:
            self.add_edge(u, v)

    # -- construction helpers -------------------------------------------------

    @classmethod
    def complete(cls, n: int) -> "Graph":
        return cls(n, ((u, v) for u in range(n) for v in range(u + 1, n)))

    @classmethod
    def cycle(cls, n: int) -> "Graph":
        if n < 3:
            raise DomainError("cycle graph needs n >= 3")
        return cls(n, ((i, (i + 1) % n) for i in range(n)))

    @classmethod
    def path(cls, n: int) -> "Graph":
        return cls(n, ((i, i + 1) for i in range(n - 1)))

    @classmethod
    def star(cls, n_leaves: int) -> "Graph":
        return cls(n_leaves + 1, ((0, i) for i in range(1, n_leaves + 1)))

    # -- mutation --------------------------------------------------------------

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise DomainError(f"vertex {v} out of range for n={self.n}")

    def add_edge(self, u: int, v: int) -> None:
        self._check_vertex(u)
        self._check_vertex(v)
        if u == v:
            raise DomainError(f"self-loop ({u},{v}) not allowed")
        if v in self._adj[u]:
            raise DomainError(f"edge ({u},{v}) already present")
        self._adj[u].add(v)
        self._adj[v].add(u)
        self._m += 1

    def remove_edge(self, u: int, v: int) -> None:
        if not self.has_edge(u, v):
            raise DomainError(f"edge ({u},{v}) not present")
        self._adj[u].remove(v)
        self._adj[v].remove(u)
        self._m -= 1

    # -- queries ---------------------------------------------------------------

    @property
    def m(self) -> int:
        return self._m

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self.n and v in self._adj[u]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def neighbors(self, v: int) -> frozenset[int]:
        return frozenset(self._adj[v])

    def sorted_neighbors(self, v: int) -> list[int]:
        return sorted(self._adj[v])

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self._adj[u] if u < v]

    def copy(self) -> "Graph":
        g = Graph.__new__(Graph)
        g.n = self.n
        g._adj = [set(s) for s in self._adj]
        g._m = self._m
        return g

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and self._adj == other._adj
        )

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self._m})"

    # -- matrix views ------------------------------------------------------------

    def adjacency_matrix(self) -> np.ndarray:
        a = np.zeros((self.n, self.n), dtype=np.int64)
        for u, v in self.edges():
            a[u, v] = a[v, u] = 1
        return a

    def incidence_matrix(self) -> np.ndarray:
        """Oriented incidence matrix, so B @ B.T equals the Laplacian."""
        b = np.zeros((self.n, self._m), dtype=np.int64)
        for j, (u, v) in enumerate(self.edges()):
            b[u, j] = 1
            b[v, j] = -1
        return b

    def adjacency_bits(self) -> list[int]:
        """Adjacency rows as integer bitmasks (bit v set iff v adjacent)."""
        bits = [0] * self.n
        for u, nbrs in enumerate(self._adj):
            x = 0
            for v in nbrs:
                x |= 1 << v
            bits[u] = x
        return bits


# -- cycles ---------------------------------------------------------------------


@dataclass
class CycleSet:
    """Simple cycles of a common length, canonically deduplicated.

    Each cycle is a vertex tuple starting at its smallest vertex, with the
    lexicographically smaller of the two traversal directions.
    """

    length: int
    cycles: list[tuple[int, ...]]

    def __len__(self) -> int:
        return len(self.cycles)

    def __iter__(self):
        return iter(self.cycles)


def girth(g: Graph):
    """Length of the shortest cycle, or ``ACYCLIC`` for forests.

    BFS from every vertex; the first non-tree edge seen from root r gives a
    cycle-length upper bound, and the minimum over all roots is exact.
    """
    n = g.n
    adj = g._adj
    best = n + 1
    for r in range(n):
        dist = [-1] * n
        parent = [-1] * n
        dist[r] = 0
        q = deque([r])
        while q:
            u = q.popleft()
            du = dist[u]
            if 2 * du >= best - 1:
                break
            for w in adj[u]:
                if dist[w] == -1:
                    dist[w] = du + 1
                    parent[w] = u
                    q.append(w)
                elif parent[u] != w and parent[w] != u:
                    c = du + dist[w] + 1
                    if c < best:
                        best = c
    return best if best <= n else ACYCLIC


def _restricted_bfs(adj, n: int, s: int) -> list[int]:
    """BFS distances from s using only vertices >= s; -1 if unreachable."""
    dist = [-1] * n
    dist[s] = 0
    q = deque([s])
    while q:
        u = q.popleft()
        du = dist[u]
        for w in adj[u]:
            if w > s and dist[w] == -1:
                dist[w] = du + 1
                q.append(w)
    return dist


def iter_cycles_of_length(g: Graph, length: int):
    """Yield every simple cycle with exactly ``length`` edges, each once.

    Depth-limited DFS anchored at the cycle's smallest vertex, pruned by the
    BFS distance back to the anchor; direction fixed by requiring the second
    vertex to be smaller than the last.
    """
    if length < 3:
        raise DomainError(f"cycle length must be >= 3, got {length}")
    L = length
    n = g.n
    adjset = g._adj
    adj = [sorted(s) for s in adjset]
    for s in range(n):
        if sum(1 for w in adjset[s] if w > s) < 2:
            continue
        dist = _restricted_bfs(adj, n, s)
        s_adj = adjset[s]
        used = bytearray(n)
        used[s] = 1
        path = [s]

        def extend(u, depth):
            if depth == L - 1:
                v1 = path[1]
                for w in adj[u]:
                    if w > v1 and not used[w] and w in s_adj:
                        yield tuple(path) + (w,)
                return
            for w in adj[u]:
                if w > s and not used[w]:
                    dw = dist[w]
                    if dw == -1 or dw > L - depth:
                        continue
                    used[w] = 1
                    path.append(w)
                    yield from extend(w, depth + 1)
                    path.pop()
                    used[w] = 0

        yield from extend(s, 1)


def cycles_of_length(g: Graph, length: int) -> CycleSet:
    """All simple cycles of exactly ``length`` edges (may be empty)."""
    return CycleSet(length, list(iter_cycles_of_length(g, length)))


def count_cycles_of_length(g: Graph, length: int, limit: int | None = None) -> int:
    """Count simple cycles of exactly ``length`` edges without materialising.

    Bitmask DFS over the first ``length - 2`` vertices past the anchor; the
    final vertex is counted with a popcount. Each cycle is seen twice (once
    per direction), so the directed total is halved.

    If ``limit`` is given, counting may stop early once the (undirected)
    count exceeds it; the returned value is then only a lower bound > limit.
    """
    if length < 3:
        raise DomainError(f"cycle length must be >= 3, got {length}")
    L = length
    n = g.n
    bits = g.adjacency_bits()
    stop_at = None if limit is None else 2 * limit + 2
    total = 0
    full = (1 << n) - 1
    for s in range(n):
        allowed = full ^ ((1 << (s + 1)) - 1)  # vertices > s
        s_adj = bits[s]
        if (s_adj & allowed).bit_count() < 2:
            continue

        def rec(u, used, depth):
            nonlocal total
            if depth == L - 2:
                total += (bits[u] & s_adj & allowed & ~used).bit_count()
                return
            cand = bits[u] & allowed & ~used
            while cand:
                b = cand & -cand
                cand ^= b
                rec(b.bit_length() - 1, used | b, depth + 1)

        rec(s, 1 << s, 0)
        if stop_at is not None and total >= stop_at:
            break
    return total // 2


def shortest_cycles(g: Graph) -> CycleSet:
    """Every cycle whose length equals the girth, canonically deduplicated."""
    gg = girth(g)
    if gg is ACYCLIC or gg == ACYCLIC:
        raise AcyclicGraphError("graph has no cycle")
    return cycles_of_length(g, int(gg))


# -- distances and connectivity ---------------------------------------------------


def distance_matrix(g: Graph) -> np.ndarray:
    """All-pairs unweighted shortest-path distances; inf for unreachable."""
    n = g.n
    edges = g.edges()
    if not edges:
        d = np.full((n, n), UNREACHABLE)
        np.fill_diagonal(d, 0.0)
        return d
    rows = [u for u, _ in edges] + [v for _, v in edges]
    cols = [v for _, v in edges] + [u for u, _ in edges]
    mat = csr_matrix((np.ones(len(rows)), (rows, cols)), shape=(n, n))
    return shortest_path(mat, method="D", directed=False, unweighted=True)


def is_connected(g: Graph) -> bool:
    n = g.n
    seen = bytearray(n)
    seen[0] = 1
    q = deque([0])
    count = 1
    adj = g._adj
    while q:
        u = q.popleft()
        for w in adj[u]:
            if not seen[w]:
                seen[w] = 1
                count += 1
                q.append(w)
    return count == n


def connected_components(g: Graph) -> int:
    n = g.n
    seen = bytearray(n)
    comps = 0
    adj = g._adj
    for r in range(n):
        if seen[r]:
            continue
        comps += 1
        seen[r] = 1
        q = deque([r])
        while q:
            u = q.popleft()
            for w in adj[u]:
                if not seen[w]:
                    seen[w] = 1
                    q.append(w)
    return comps


def bridges(g: Graph) -> set[tuple[int, int]]:
    """All bridge edges, by iterative low-link DFS."""
    n = g.n
    adj = g._adj
    disc = [-1] * n
    low = [0] * n
    out: set[tuple[int, int]] = set()
    timer = 0
    for root in range(n):
        if disc[root] != -1:
            continue
        disc[root] = low[root] = timer
        timer += 1
        stack = [(root, -1, iter(adj[root]))]
        while stack:
            u, pe, it = stack[-1]
            advanced = False
            for w in it:
                if disc[w] == -1:
                    disc[w] = low[w] = timer
                    timer += 1
                    stack.append((w, u, iter(adj[w])))
                    advanced = True
                    break
                elif w != pe:
                    if disc[w] < low[u]:
                        low[u] = disc[w]
            if not advanced:
                stack.pop()
                if stack:
                    p = stack[-1][0]
                    if low[u] < low[p]:
                        low[p] = low[u]
                    if low[u] > disc[p]:
                        out.add(canonical_edge(p, u))
    return out


def non_bridge_edges(g: Graph) -> set[tuple[int, int]]:
    """Edges lying on at least one cycle (= edge union of any cycle basis)."""
    bridge_set = bridges(g)
    return {e for e in g.edges() if e not in bridge_set}


def leaf_count(g: Graph) -> int:
    """Number of vertices with degree < 2 (leaves and isolated vertices)."""
    return sum(1 for v in range(g.n) if g.degree(v) < 2)


def moore_min_nodes(d: int, g: int) -> int:
    """Minimum vertex count of a d-regular graph with girth g (Moore bound)."""
    if d < 2:
        raise DomainError(f"degree must be >= 2, got {d}")
    if g < 3:
        raise DomainError(f"girth must be >= 3, got {g}")
    if g % 2 == 0:
        return 2 * sum((d - 1) ** i for i in range(g // 2))
    return 1 + d * sum((d - 1) ** i for i in range((g - 1) // 2))


# -- serialisation -----------------------------------------------------------------


def to_edge_list(g: Graph) -> str:
    """Text form: header line ``n m``, then one ``u v`` line per edge."""
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def from_edge_list(text: str) -> Graph:
    lines = [ln for ln in (s.strip() for s in text.splitlines()) if ln]
    if not lines:
        raise DomainError("empty edge-list document")
    n, m = (int(t) for t in lines[0].split())
    g = Graph(n)
    for ln in lines[1:]:
        u, v = (int(t) for t in ln.split())
        g.add_edge(u, v)
    if g.m != m:
        raise DomainError(f"header claims {m} edges, found {g.m}")
    return g


def write_graph(g: Graph, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(to_edge_list(g))


def read_graph(path) -> Graph:
    with open(path, "r", encoding="utf-8") as fh:
        return from_edge_list(fh.read())


def to_adjacency_lines(g: Graph) -> str:
    """Debug export: one ``v: n1 n2 ...`` line per vertex."""
    return "\n".join(
        f"{v}: " + " ".join(map(str, g.sorted_neighbors(v))) for v in range(g.n)
    ) + "\n"
