"""Hyperpaths, local edge connectivity, components, blocks, and
separating-structure searches.

Local edge connectivity is computed by unit-capacity max flow on a
network where every hyperedge is split into an in/out node pair of
capacity one, so a flow unit may cross each hyperedge at most once.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass, field

from .hypercore import Hypergraph


@dataclass(frozen=True)
class Hyperpath:
    """Alternating vertex/edge sequence v1, e1, v2, ..., e_{q-1}, v_q."""

    vertices: tuple[int, ...]
    edges: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.vertices) != len(self.edges) + 1 or not self.vertices:
            raise ValueError("hyperpath lengths do not match")
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError("repeated vertex in hyperpath")
        if len(set(self.edges)) != len(self.edges):
            raise ValueError("repeated edge in hyperpath")

    def is_valid_in(self, g: Hypergraph) -> bool:
        try:
            for i, ref in enumerate(self.edges):
                e = set(g.edge(ref))
                if self.vertices[i] not in e or self.vertices[i + 1] not in e:
                    return False
        except ValueError:
            return False
        return all(0 <= v < g.n for v in self.vertices)

    def as_sequence(self) -> list[int]:
        """Interleaved [v1, e1, v2, ...] form used in JSON output."""
        out: list[int] = [self.vertices[0]]
        for e, v in zip(self.edges, self.vertices[1:]):
            out.extend((e, v))
        return out


@dataclass(frozen=True)
class EdgeCut:
    """An edge cut (X, Y, F) with the cut-incident vertex sets."""

    x: tuple[int, ...]
    y: tuple[int, ...]
    f: tuple[int, ...]
    x_f: tuple[int, ...]
    y_f: tuple[int, ...]

    @classmethod
    def from_side(cls, g: Hypergraph, xs) -> "EdgeCut":
        x = tuple(sorted(set(xs)))
        y = tuple(v for v in range(g.n) if v not in set(x))
        f = g.boundary(x)
        touched = set()
        for ref in f:
            touched.update(g.edge(ref))
        return cls(
            x=x,
            y=y,
            f=f,
            x_f=tuple(v for v in x if v in touched),
            y_f=tuple(v for v in y if v in touched),
        )

    def is_nontrivial(self) -> bool:
        return len(self.x_f) >= 2 and len(self.y_f) >= 2


@dataclass(frozen=True)
class FlowResult:
    """Max number of edge-disjoint hyperpaths plus both witnesses."""

    value: int
    paths: tuple[Hyperpath, ...]
    cut_side: tuple[int, ...]


# -- components ------------------------------------------------------------


def components(g: Hypergraph) -> list[tuple[int, ...]]:
    """Partition of V(G) into maximal hyperpath-connected classes."""
    seen: set[int] = set()
    incident = [[] for _ in range(g.n)]
    for e in g.edges:
        for v in e:
            incident[v].append(e)
    out = []
    for start in range(g.n):
        if start in seen:
            continue
        comp = {start}
        queue = deque([start])
        seen.add(start)
        while queue:
            v = queue.popleft()
            for e in incident[v]:
                for w in e:
                    if w not in seen:
                        seen.add(w)
                        comp.add(w)
                        queue.append(w)
        out.append(tuple(sorted(comp)))
    return out


def is_connected(g: Hypergraph) -> bool:
    return len(components(g)) <= 1


# -- max flow / Menger -----------------------------------------------------


class _FlowNet:
    """Unit-capacity network: node 0..n-1 are vertices, then per edge i
    an in-node n+2i and out-node n+2i+1 joined by a capacity-1 arc."""

    def __init__(self, g: Hypergraph) -> None:
        self.g = g
        size = g.n + 2 * g.m
        self.adj: list[list[int]] = [[] for _ in range(size)]
        self.to: list[int] = []
        self.cap: list[int] = []
        big = g.m + 1
        for i, e in enumerate(g.edges):
            self._arc(g.n + 2 * i, g.n + 2 * i + 1, 1)
            for v in e:
                self._arc(v, g.n + 2 * i, big)
                self._arc(g.n + 2 * i + 1, v, big)

    def _arc(self, a: int, b: int, c: int) -> None:
        self.adj[a].append(len(self.to))
        self.to.append(b)
        self.cap.append(c)
        self.adj[b].append(len(self.to))
        self.to.append(a)
        self.cap.append(0)

    def max_flow(self, s: int, t: int) -> int:
        flow = 0
        while True:
            pred = self._bfs(s, t)
            if pred is None:
                return flow
            # unit bottleneck: the path crosses at least one edge pair
            node = t
            while node != s:
                arc = pred[node]
                self.cap[arc] -= 1
                self.cap[arc ^ 1] += 1
                node = self.to[arc ^ 1]
            flow += 1

    def _bfs(self, s: int, t: int) -> dict[int, int] | None:
        pred: dict[int, int] = {}
        seen = {s}
        queue = deque([s])
        while queue:
            node = queue.popleft()
            for arc in self.adj[node]:
                nxt = self.to[arc]
                if self.cap[arc] > 0 and nxt not in seen:
                    seen.add(nxt)
                    pred[nxt] = arc
                    if nxt == t:
                        return pred
                    queue.append(nxt)
        return None

    def residual_side(self, s: int) -> set[int]:
        """Original vertices reachable from s in the residual network."""
        seen = {s}
        queue = deque([s])
        while queue:
            node = queue.popleft()
            for arc in self.adj[node]:
                nxt = self.to[arc]
                if self.cap[arc] > 0 and nxt not in seen:
                    seen.add(nxt)
                    queue.append(nxt)
        return {v for v in seen if v < self.g.n}

    def edge_flow(self, ref: int) -> int:
        # the capacity-1 arc of edge `ref` is the first arc added for it
        arc = self.adj[self.g.n + 2 * ref][0]
        return 1 - self.cap[arc]

    def decompose(self, s: int, t: int, value: int) -> list[Hyperpath]:
        """Trace the integral flow into edge-disjoint hyperpaths,
        following lowest-index arcs first."""
        used = [self.edge_flow(i) for i in range(self.g.m)]
        exits = []  # per edge, the vertex the flow unit leaves towards
        for i in range(self.g.m):
            out_node = self.g.n + 2 * i + 1
            exit_v = None
            if used[i]:
                for arc in self.adj[out_node]:
                    nxt = self.to[arc]
                    # forward arc with positive flow: remaining cap < big
                    if nxt < self.g.n and arc % 2 == 0 and self.cap[arc] < self.g.m + 1:
                        exit_v = nxt
                        break
            exits.append(exit_v)
        entries: dict[int, list[int]] = {v: [] for v in range(self.g.n)}
        for i in range(self.g.m):
            if used[i]:
                # entry vertex: the one whose arc into e_in carries flow
                in_node = self.g.n + 2 * i
                for arc in self.adj[in_node]:
                    nxt = self.to[arc]
                    if nxt < self.g.n and arc % 2 == 1 and self.cap[arc] > 0:
                        entries[nxt].append(i)
        for v in entries:
            entries[v].sort()
        paths = []
        for _ in range(value):
            walk_v = [s]
            walk_e = []
            v = s
            while v != t:
                ref = entries[v].pop(0)
                walk_e.append(ref)
                v = exits[ref]
                walk_v.append(v)
            paths.append(_shorten(walk_v, walk_e))
        return paths


def _shorten(walk_v: list[int], walk_e: list[int]) -> Hyperpath:
    """Cut loops out of an edge-distinct walk, yielding a hyperpath."""
    while True:
        pos: dict[int, int] = {}
        loop = None
        for i, v in enumerate(walk_v):
            if v in pos:
                loop = (pos[v], i)
                break
            pos[v] = i
        if loop is None:
            return Hyperpath(tuple(walk_v), tuple(walk_e))
        a, b = loop
        walk_v = walk_v[: a + 1] + walk_v[b + 1 :]
        walk_e = walk_e[:a] + walk_e[b:]


def local_edge_connectivity(g: Hypergraph, v: int, w: int) -> FlowResult:
    """Menger: max edge-disjoint (v,w)-hyperpaths, with an explicit
    path system and a side X (v in X, w not) with |boundary(X)| equal."""
    g._check_vertex(v)
    g._check_vertex(w)
    if v == w:
        raise ValueError("endpoints must be distinct")
    net = _FlowNet(g)
    value = net.max_flow(v, w)
    paths = net.decompose(v, w, value)
    cut_side = tuple(sorted(net.residual_side(v)))
    return FlowResult(value, tuple(paths), cut_side)


def local_edge_connectivity_value(g: Hypergraph, v: int, w: int) -> int:
    g._check_vertex(v)
    g._check_vertex(w)
    if v == w:
        raise ValueError("endpoints must be distinct")
    return _FlowNet(g).max_flow(v, w)


def max_local_edge_connectivity(g: Hypergraph) -> int:
    """lambda(G): max over all vertex pairs; 0 when |G| <= 1."""
    if g.n <= 1:
        return 0
    best = 0
    for comp in components(g):
        for v, w in itertools.combinations(comp, 2):
            best = max(best, _FlowNet(g).max_flow(v, w))
    return best


def is_k_edge_connected(g: Hypergraph, k: int) -> bool:
    if g.n < 2:
        raise ValueError("edge connectivity needs at least 2 vertices")
    if not is_connected(g):
        return False
    return all(
        _FlowNet(g).max_flow(v, w) >= k for v, w in itertools.combinations(range(g.n), 2)
    )


# -- blocks ----------------------------------------------------------------


@dataclass(frozen=True)
class Block:
    """A block, annotated with original vertex ids and edge refs."""

    vertices: tuple[int, ...]
    edge_refs: tuple[int, ...]

    def graph(self, g: Hypergraph) -> Hypergraph:
        pos = {v: i for i, v in enumerate(self.vertices)}
        return Hypergraph.of(
            len(self.vertices), [tuple(pos[v] for v in g.edge(r)) for r in self.edge_refs]
        )


def blocks(g: Hypergraph) -> list[Block]:
    """Blocks via biconnected components of the 2-section graph.

    A vertex separates G iff it is an articulation point of the
    2-section, and each hyperedge's clique lies in one biconnected
    component, so grouping hyperedges by component gives the blocks.
    """
    pair_owner: dict[tuple[int, int], list[int]] = {}
    adj: list[set[int]] = [set() for _ in range(g.n)]
    for i, e in enumerate(g.edges):
        for a, b in itertools.combinations(e, 2):
            pair_owner.setdefault((a, b), []).append(i)
            adj[a].add(b)
            adj[b].add(a)
    comp_of_pair = _biconnected_pairs(g.n, adj)
    groups: dict[int, list[int]] = {}
    for i, e in enumerate(g.edges):
        a, b = e[0], e[1]
        key = comp_of_pair[(a, b) if a < b else (b, a)]
        groups.setdefault(key, []).append(i)
    out = []
    covered: set[int] = set()
    for refs in groups.values():
        vs: set[int] = set()
        for r in refs:
            vs.update(g.edge(r))
        covered.update(vs)
        out.append(Block(tuple(sorted(vs)), tuple(sorted(refs))))
    for v in range(g.n):
        if v not in covered:
            out.append(Block((v,), ()))
    out.sort(key=lambda b: b.vertices)
    return out


def _biconnected_pairs(n: int, adj: list[set[int]]) -> dict[tuple[int, int], int]:
    """Map each 2-section edge (a<b) to a biconnected-component id."""
    comp_of: dict[tuple[int, int], int] = {}
    disc = [-1] * n
    low = [0] * n
    comp_id = 0
    timer = 0
    for root in range(n):
        if disc[root] != -1:
            continue
        stack: list[tuple[int, int]] = []
        # iterative DFS: (vertex, parent, neighbor iterator)
        frame = [(root, -1, iter(sorted(adj[root])))]
        disc[root] = low[root] = timer
        timer += 1
        while frame:
            v, parent, it = frame[-1]
            advanced = False
            for w in it:
                if disc[w] == -1:
                    stack.append((v, w) if v < w else (w, v))
                    disc[w] = low[w] = timer
                    timer += 1
                    frame.append((w, v, iter(sorted(adj[w]))))
                    advanced = True
                    break
                elif w != parent and disc[w] < disc[v]:
                    stack.append((v, w) if v < w else (w, v))
                    low[v] = min(low[v], disc[w])
            if advanced:
                continue
            frame.pop()
            if frame:
                pv = frame[-1][0]
                low[pv] = min(low[pv], low[v])
                if low[v] >= disc[pv]:
                    edge = (pv, v) if pv < v else (v, pv)
                    while stack:
                        top = stack.pop()
                        comp_of[top] = comp_id
                        if top == edge:
                            break
                    comp_id += 1
    return comp_of


def separating_vertices(g: Hypergraph) -> tuple[int, ...]:
    """Vertices contained in more than one block."""
    count: dict[int, int] = {}
    for b in blocks(g):
        for v in b.vertices:
            count[v] = count.get(v, 0) + 1
    return tuple(sorted(v for v, c in count.items() if c > 1))


# -- separating structures -------------------------------------------------


def is_separating_vertex_set(g: Hypergraph, sep) -> bool:
    """S separates iff G / S has more components than G."""
    s = tuple(sorted(set(sep)))
    if len(s) >= g.n:
        return False
    shrunk = g.div_vertices(s).graph
    return len(components(shrunk)) > len(components(g))


def enumerate_separating_sets(g: Hypergraph, max_size: int) -> list[tuple[int, ...]]:
    """All separating vertex sets of size <= max_size (the calculus
    only ever needs sizes 1 and 2), sorted."""
    out = []
    for size in range(1, max_size + 1):
        for s in itertools.combinations(range(g.n), size):
            if is_separating_vertex_set(g, s):
                out.append(s)
    return out


def bridges(g: Hypergraph) -> list[int]:
    """Edges e whose deletion creates |e|-1 extra components."""
    base = len(components(g))
    out = []
    for i, e in enumerate(g.edges):
        if len(components(g.delete_edge(i))) == base + len(e) - 1:
            out.append(i)
    return out


def is_separating_edge_set(g: Hypergraph, refs) -> bool:
    f = tuple(sorted(set(refs)))
    return len(components(g.delete_edges(f))) > len(components(g))


def minimal_separating_edge_sets(g: Hypergraph, max_size: int) -> list[EdgeCut]:
    """All minimal separating edge sets of size <= max_size as EdgeCuts."""
    if not is_connected(g):
        raise ValueError("hypergraph must be connected")
    if max_size < 1:
        raise ValueError("max_size must be >= 1")
    found = []
    for size in range(1, max_size + 1):
        for f in itertools.combinations(range(g.m), size):
            if not is_separating_edge_set(g, f):
                continue
            if any(
                is_separating_edge_set(g, sub)
                for r in range(1, size)
                for sub in itertools.combinations(f, r)
            ):
                continue
            found.append(edge_cut_for(g, f))
    return found


def edge_cut_for(g: Hypergraph, refs) -> EdgeCut:
    """The edge cut (X, Y, F) realizing a minimal separating set F.

    X is a union of components of G - F with boundary exactly F; ties
    break to the lexicographically smallest X.
    """
    f = tuple(sorted(set(refs)))
    comps = components(g.delete_edges(f))
    fset = set(f)
    best = None
    for r in range(1, len(comps)):
        for pick in itertools.combinations(comps, r):
            xs = sorted(v for comp in pick for v in comp)
            if len(xs) == g.n:
                continue
            if set(g._boundary(set(xs))) == fset:
                if best is None or xs < best:
                    best = xs
    if best is None:
        raise ValueError(f"edge set {f} is not a boundary cut")
    return EdgeCut.from_side(g, best)


def mixed_separating_sets(g: Hypergraph) -> list[tuple[int, int]]:
    """All pairs (v, e) with v a separating vertex of G - e, sorted by
    (edge ref, vertex id)."""
    if not is_connected(g):
        raise ValueError("hypergraph must be connected")
    out = []
    for ref in range(g.m):
        rest = g.delete_edge(ref)
        for v in separating_vertices(rest):
            out.append((v, ref))
    out.sort(key=lambda p: (p[1], p[0]))
    return out
