"""Simple undirected graphs and the structural operations built on them.

Vertices are the integers 0..n-1.  Graphs are immutable after construction;
every operation here is a pure function.  The module also implements the
graph interchange formats: a small JSON object and bit-exact graph6.
"""

from __future__ import annotations

import json
import math
from collections import deque
from itertools import combinations

from .errors import SameVertex


class Graph:
    """Immutable simple undirected graph on vertices 0..n-1.

    Edges are stored as a sorted tuple of (i, j) pairs with i < j; a
    per-vertex sorted neighbor index is built at construction so adjacency
    and common-neighbor queries are cheap.
    """

    __slots__ = ("n", "edges", "_neighbors", "_nbr_sets")

    def __init__(self, n: int, edges):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        seen = set()
        for e in edges:
            i, j = e
            if i == j:
                raise ValueError(f"loop at vertex {i}")
            if not (0 <= i < n and 0 <= j < n):
                raise ValueError(f"edge {e} out of range for n={n}")
            seen.add((i, j) if i < j else (j, i))
        self.n = n
        self.edges = tuple(sorted(seen))
        nbrs = [[] for _ in range(n)]
        for i, j in self.edges:
            nbrs[i].append(j)
            nbrs[j].append(i)
        self._neighbors = tuple(tuple(sorted(a)) for a in nbrs)
        self._nbr_sets = tuple(frozenset(a) for a in nbrs)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._neighbors[v]

    def neighbor_set(self, v: int) -> frozenset[int]:
        return self._nbr_sets[v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._nbr_sets[u]

    def degree(self, v: int) -> int:
        return len(self._neighbors[v])

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def relabel(self, perm) -> "Graph":
        """Image under the vertex permutation v -> perm[v]."""
        if len(perm) != self.n or set(perm) != set(range(self.n)):
            raise ValueError(f"not a permutation of 0..{self.n - 1}")
        return Graph(self.n, [(perm[i], perm[j]) for i, j in self.edges])

    def subgraph(self, vertices) -> "Graph":
        """Induced subgraph; vertex i of the result is sorted(vertices)[i]."""
        vs = sorted(vertices)
        pos = {v: i for i, v in enumerate(vs)}
        edges = [
            (pos[i], pos[j]) for i, j in self.edges if i in pos and j in pos
        ]
        return Graph(len(vs), edges)

    def adjacency_rows(self) -> list[list[int]]:
        """Dense 0/1 adjacency matrix as plain Python int rows."""
        rows = [[0] * self.n for _ in range(self.n)]
        for i, j in self.edges:
            rows[i][j] = 1
            rows[j][i] = 1
        return rows

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and self.edges == other.edges
        )

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={len(self.edges)})"


def cycle_graph(n: int) -> Graph:
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return Graph(n, combinations(range(n), 2))


def line_graph(g: Graph) -> tuple[Graph, tuple[tuple[int, int], ...]]:
    """Line graph of g, plus the edge ordering that names its vertices.

    Vertex i of the result is edge_order[i] (edges of g in lexicographic
    order); two vertices are adjacent iff the underlying edges share exactly
    one endpoint.
    """
    edge_order = g.edges
    index_at = {e: i for i, e in enumerate(edge_order)}
    # edges meeting at a common vertex: all pairs within each star
    incident = [[] for _ in range(g.n)]
    for e in edge_order:
        incident[e[0]].append(index_at[e])
        incident[e[1]].append(index_at[e])
    seen = set()
    for star in incident:
        for x, y in combinations(star, 2):
            seen.add((x, y) if x < y else (y, x))
    return Graph(len(edge_order), seen), edge_order


def connected_components(g: Graph) -> list[list[int]]:
    """Partition of the vertices into components, ordered by minimum vertex."""
    unseen = set(range(g.n))
    parts = []
    while unseen:
        root = min(unseen)
        comp = {root}
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for w in g.neighbors(v):
                if w not in comp:
                    comp.add(w)
                    queue.append(w)
        unseen -= comp
        parts.append(sorted(comp))
    return parts


def common_neighbors(g: Graph, u: int, v: int) -> int:
    """|N(u) ∩ N(v)| for distinct vertices u, v."""
    if u == v:
        raise SameVertex(f"vertices must differ, got {u} twice")
    return len(g.neighbor_set(u) & g.neighbor_set(v))


def girth(g: Graph) -> float:
    """Length of the shortest cycle; math.inf for forests."""
    best = math.inf
    for root in range(g.n):
        dist = {root: 0}
        parent = {root: -1}
        queue = deque([root])
        while queue:
            v = queue.popleft()
            if 2 * dist[v] >= best - 1:
                break
            for w in g.neighbors(v):
                if w not in dist:
                    dist[w] = dist[v] + 1
                    parent[w] = v
                    queue.append(w)
                elif parent[v] != w:
                    # non-tree edge closes a cycle through the BFS root
                    best = min(best, dist[v] + dist[w] + 1)
    return best


def degree_profile(g: Graph) -> set[int]:
    """Set of distinct vertex degrees."""
    return {g.degree(v) for v in range(g.n)}


# ---------------------------------------------------------------------------
# interchange: JSON
# ---------------------------------------------------------------------------

def graph_to_json(g: Graph) -> dict:
    return {"n": g.n, "edges": [list(e) for e in g.edges]}


def graph_from_json(obj) -> Graph:
    if isinstance(obj, str):
        obj = json.loads(obj)
    if not isinstance(obj, dict) or "n" not in obj or "edges" not in obj:
        raise ValueError("graph JSON must be an object with 'n' and 'edges'")
    n = obj["n"]
    if not isinstance(n, int):
        raise ValueError("'n' must be an integer")
    edges = []
    for e in obj["edges"]:
        if not (isinstance(e, (list, tuple)) and len(e) == 2):
            raise ValueError(f"bad edge entry {e!r}")
        edges.append((int(e[0]), int(e[1])))
    return Graph(n, edges)


# ---------------------------------------------------------------------------
# interchange: graph6 (bit-exact)
# ---------------------------------------------------------------------------
#
# Header: for n <= 62 a single byte n+63; for 63 <= n <= 258047 the byte '~'
# (126) followed by three bytes holding n in 6-bit big-endian groups, each
# +63.  Body: upper-triangle bits x(0,1), x(0,2), x(1,2), x(0,3), ...,
# x(n-2,n-1), packed 6 per byte (zero-padded), each group +63.

_G6_MAX_N = 258047


def graph_to_graph6(g: Graph) -> str:
    return _graph6_bytes(g.n, _triangle_bits(g)).decode("ascii")


def _graph6_header(n: int) -> bytes:
    if n < 0 or n > _G6_MAX_N:
        raise ValueError(f"graph6 supports 0 <= n <= {_G6_MAX_N}, got {n}")
    if n <= 62:
        return bytes([n + 63])
    return bytes([126, (n >> 12) + 63, ((n >> 6) & 63) + 63, (n & 63) + 63])


def _triangle_bits(g: Graph) -> bytearray:
    # bit index of pair (i, j), i < j, in column-major order is C(j,2) + i
    nbits = g.n * (g.n - 1) // 2
    bits = bytearray(nbits)
    for i, j in g.edges:
        bits[j * (j - 1) // 2 + i] = 1
    return bits

def _graph6_bytes(n: int, bits: bytearray) -> bytes:
    out = bytearray(_graph6_header(n))
    for k in range(0, len(bits), 6):
        group = 0
        for b in bits[k:k + 6]:
            group = (group << 1) | b
        group <<= max(0, 6 - len(bits[k:k + 6]))
        out.append(group + 63)
    return bytes(out)


def graph_from_graph6(s: str | bytes) -> Graph:
    data = s.encode("ascii") if isinstance(s, str) else bytes(s)
    data = data.strip()
    if data.startswith(b">>graph6<<"):
        data = data[len(b">>graph6<<"):]
    if not data:
        raise ValueError("empty graph6 string")
    if data[0] == 126:
        # '~' + 3 size bytes covers n up to 258047; a second '~' would
        # start the 36-bit form, which is beyond this library's sizes
        if (
            len(data) < 4
            or data[1] == 126
            or any(not 63 <= c <= 126 for c in data[1:4])
        ):
            raise ValueError("bad extended graph6 header")
        n = ((data[1] - 63) << 12) | ((data[2] - 63) << 6) | (data[3] - 63)
        body = data[4:]
    else:
        n = data[0] - 63
        body = data[1:]
    if n < 0:
        raise ValueError("bad graph6 header byte")
    nbits = n * (n - 1) // 2
    if len(body) != (nbits + 5) // 6:
        raise ValueError(
            f"graph6 body has {len(body)} bytes, expected {(nbits + 5) // 6}"
        )
    bits = []
    for c in body:
        val = c - 63
        if not 0 <= val < 64:
            raise ValueError(f"graph6 byte {c} out of range")
        bits.extend((val >> shift) & 1 for shift in range(5, -1, -1))
    if any(bits[nbits:]):
        raise ValueError("nonzero padding bits in graph6 body")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    return Graph(n, edges)
