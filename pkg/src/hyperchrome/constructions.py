"""Constructive operators and named families: Hajos join, Dirac sum,
splitting, the decomposition theorems, and the generators for the
families used throughout the calculus."""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .hypercore import Hypergraph, Relabeled, canonical_edges
from . import connectivity as conn
from . import coloring as col


# -- generators ------------------------------------------------------------


def complete_graph(n: int) -> Hypergraph:
    return Hypergraph.of(n, itertools.combinations(range(n), 2))


def cycle(n: int) -> Hypergraph:
    if n < 3:
        raise ValueError("cycle needs at least 3 vertices")
    return Hypergraph.of(n, [(i, (i + 1) % n) for i in range(n)])


def odd_wheel(rim_len: int) -> Hypergraph:
    """Rim cycle 0..rim_len-1 plus hub vertex rim_len."""
    if rim_len < 3 or rim_len % 2 == 0:
        raise ValueError("rim length must be odd and >= 3")
    edges = [(i, (i + 1) % rim_len) for i in range(rim_len)]
    edges += [(i, rim_len) for i in range(rim_len)]
    return Hypergraph.of(rim_len + 1, edges)


def hyperwheel(edge_size: int) -> Hypergraph:
    """Base hyperedge 0..edge_size-1 plus hub vertex edge_size with
    ordinary spokes."""
    if edge_size < 3:
        raise ValueError("base edge size must be >= 3")
    edges = [tuple(range(edge_size))]
    edges += [(i, edge_size) for i in range(edge_size)]
    return Hypergraph.of(edge_size + 1, edges)


def dirac_sum(g1: Hypergraph, g2: Hypergraph) -> Hypergraph:
    """Disjoint union plus all ordinary edges across; g2 ids shift up."""
    shift = g1.n
    edges = list(g1.edges)
    edges += [tuple(v + shift for v in e) for e in g2.edges]
    edges += [(a, b + shift) for a in range(g1.n) for b in range(g2.n)]
    return Hypergraph.of(g1.n + g2.n, edges)


def kc(n: int, p: int) -> Hypergraph:
    """KC_{n,p}: the Dirac sum of K_n and the odd cycle C_{2p+1}."""
    if n < 1 or p < 1:
        raise ValueError("need n >= 1 and p >= 1")
    return dirac_sum(complete_graph(n), cycle(2 * p + 1))


def c2_tree(parents: list[int]) -> Hypergraph:
    """A tree (parent array, root marked -1) plus the hyperedge of its
    leaves.  The root must have degree >= 2 and all leaf depths must
    share a parity."""
    n = len(parents)
    roots = [v for v, p in enumerate(parents) if p == -1]
    if len(roots) != 1:
        raise ValueError("exactly one root (-1 entry) required")
    root = roots[0]
    depth = [-1] * n
    depth[root] = 0
    pending = True
    while pending:
        pending = False
        for v, p in enumerate(parents):
            if v == root:
                continue
            if not 0 <= p < n:
                raise ValueError(f"parent of {v} out of range")
            if depth[v] == -1 and depth[p] != -1:
                depth[v] = depth[p] + 1
                pending = True
    if any(d == -1 for d in depth):
        raise ValueError("parent array does not form a tree")
    children: dict[int, list[int]] = {v: [] for v in range(n)}
    for v, p in enumerate(parents):
        if v != root:
            children[p].append(v)
    if len(children[root]) < 2:
        raise ValueError("root degree must be >= 2")
    leaves = sorted(v for v in range(n) if not children[v])
    if len({depth[v] % 2 for v in leaves}) != 1:
        raise ValueError("leaf depths must all have the same parity")
    edges = [tuple(sorted((v, parents[v]))) for v in range(n) if v != root]
    edges.append(tuple(leaves))
    return Hypergraph.of(n, edges)


def figure3() -> Hypergraph:
    """The tree-based 3-critical member without small separators: root
    of degree 3, three internal vertices, six leaves on one hyperedge."""
    return c2_tree([-1, 0, 0, 0, 1, 1, 2, 2, 3, 3])


def toft_graph(p: int) -> Hypergraph:
    """Toft's dense 4-critical graph: the Dirac sum of two single-edge
    hypergraphs of size 2p+1, with both hyperedges split away using
    wheel hubs.  Order 8p+4 with (2p+1)^2 + 8p + 4 edges."""
    if p < 1:
        raise ValueError("need p >= 1")
    size = 2 * p + 1
    base = Hypergraph.of(size, [tuple(range(size))])
    g = dirac_sum(base, base)
    for offset in (0, size):
        edge_vs = tuple(range(offset, offset + size))
        wheel = kc(1, p)  # hub is vertex 0
        hub_edges = wheel.incident(0)
        s = {ref: (edge_vs[i],) for i, ref in enumerate(hub_edges)}
        g = split(SplitSpec(g, g.edge_ref(edge_vs), wheel, 0, s)).graph
    return g


def figure2_g2() -> Hypergraph:
    """The 9-vertex 4-critical graph whose degree-6 vertex (id 8) can
    be split into an independent pair."""
    edges = [
        (0, 1), (0, 5), (0, 8), (1, 2), (2, 3), (2, 6), (3, 4), (4, 7),
        (4, 8), (1, 3), (1, 8), (3, 8), (5, 6), (5, 8), (6, 7), (7, 8),
    ]
    return Hypergraph.of(9, edges)


def figure2_g1() -> Hypergraph:
    """The 10-vertex 4-critical companion of figure2_g2: the degree-6
    vertex split into the independent pair {8, 9}."""
    g2 = figure2_g2()
    s = {g2.edge_ref(e): (0 if e in {(0, 8), (1, 8), (5, 8)} else 1,)
         for e in [(0, 8), (1, 8), (5, 8), (4, 8), (3, 8), (7, 8)]}
    return split_vertex(g2, 8, 2, s).graph


# -- Hajos join ------------------------------------------------------------


@dataclass(frozen=True)
class HajosJoinSpec:
    """Join data: delete e1 from g1 and e2 from g2, identify v1 with v2
    and add the merged edge (with or without the merged vertex)."""

    g1: Hypergraph
    g2: Hypergraph
    v1: int
    v2: int
    e1: int
    e2: int
    include_vstar: bool

    def __post_init__(self) -> None:
        if self.v1 not in self.g1.edge(self.e1):
            raise ValueError("v1 must lie on e1")
        if self.v2 not in self.g2.edge(self.e2):
            raise ValueError("v2 must lie on e2")


@dataclass(frozen=True)
class JoinResult:
    """The join plus provenance: result ids 0..n1-1 are g1's ids (the
    merged vertex keeps v1's id), then g2's other vertices in order."""

    graph: Hypergraph
    vstar: int
    g1_map: tuple[int, ...]
    g2_map: tuple[int, ...]
    estar: tuple[int, ...]


def hajos_join(spec: HajosJoinSpec) -> JoinResult:
    g1, g2 = spec.g1, spec.g2
    g1_map = tuple(range(g1.n))
    rest2 = [u for u in range(g2.n) if u != spec.v2]
    g2_map = tuple(
        spec.v1 if u == spec.v2 else g1.n + rest2.index(u) for u in range(g2.n)
    )
    edges = [e for i, e in enumerate(g1.edges) if i != spec.e1]
    edges += [
        tuple(sorted(g2_map[u] for u in e))
        for i, e in enumerate(g2.edges)
        if i != spec.e2
    ]
    estar = set(g1.edge(spec.e1)) - {spec.v1}
    estar |= {g2_map[u] for u in g2.edge(spec.e2) if u != spec.v2}
    if spec.include_vstar:
        estar.add(spec.v1)
    estar_t = tuple(sorted(estar))
    if len(estar_t) < 2:
        raise ValueError("merged edge would have fewer than 2 vertices")
    if estar_t in set(canonical_edges(edges)):
        raise ValueError("merged edge duplicates an existing edge")
    edges.append(estar_t)
    return JoinResult(
        Hypergraph.of(g1.n + g2.n - 1, edges), spec.v1, g1_map, g2_map, estar_t
    )


def figure1_join(include_vstar: bool) -> JoinResult:
    """Either Hajos join of two K4 (7 vertices, 11 edges)."""
    k4 = complete_graph(4)
    return hajos_join(HajosJoinSpec(k4, k4, 0, 0, k4.edge_ref((0, 1)),
                                    k4.edge_ref((0, 1)), include_vstar))


@dataclass(frozen=True)
class MixedDecomposition:
    """Hajos decomposition at a mixed separating set (v*, e*)."""

    spec: HajosJoinSpec
    g1_old: tuple[int, ...]  # spec.g1 vertex -> original id
    g2_old: tuple[int, ...]
    vstar: int
    estar: int  # original edge ref


def hajos_decompose_mixed(g: Hypergraph, v_star: int, e_star: int) -> MixedDecomposition:
    """Peel one Hajos-join layer at a mixed separating set: G - e* is
    the union of two parts meeting exactly at v*, and each part plus
    its half of e* (through v*) is an operand of the join."""
    estar_vs = set(g.edge(e_star))
    rest = g.delete_edge(e_star)
    comps = [set(c) for c in conn.components(rest.div_vertices((v_star,)).graph)]
    div_old = rest.div_vertices((v_star,)).old_ids
    comps = [{div_old[v] for v in c} for c in comps]
    if len(comps) < 2:
        raise ValueError(f"({v_star}, edge {e_star}) is not a mixed separating set")
    side1 = comps[0]
    side2 = set().union(*comps[1:])
    if not (estar_vs - {v_star}) & side1 or not (estar_vs - {v_star}) & side2:
        raise ValueError("deleted edge does not meet both sides")
    parts = []
    for side in (side1, side2):
        vs = sorted(side | {v_star})
        sub, old = g.delete_edge(e_star).induced(vs)
        pos = {u: i for i, u in enumerate(old)}
        half = tuple(sorted({pos[u] for u in estar_vs if u in side} | {pos[v_star]}))
        if half in set(sub.edges):
            raise ValueError(
                "half edge already present; input violates the decomposition"
            )
        parts.append((Hypergraph.of(sub.n, sub.edges + (half,)), old, pos, half))
    (p1, old1, pos1, half1), (p2, old2, pos2, half2) = parts
    spec = HajosJoinSpec(
        p1, p2, pos1[v_star], pos2[v_star], p1.edge_ref(half1), p2.edge_ref(half2),
        include_vstar=v_star in estar_vs,
    )
    return MixedDecomposition(spec, old1, old2, v_star, e_star)


def replay_mixed(dec: MixedDecomposition) -> Hypergraph:
    """Re-join the decomposition and relabel back to the original ids."""
    joined = hajos_join(dec.spec)
    new_of_join = [0] * joined.graph.n
    for old_v1, res in enumerate(joined.g1_map):
        new_of_join[res] = dec.g1_old[old_v1]
    for old_v2, res in enumerate(joined.g2_map):
        new_of_join[res] = dec.g2_old[old_v2]
    edges = [tuple(sorted(new_of_join[v] for v in e)) for e in joined.graph.edges]
    return Hypergraph.of(joined.graph.n, edges)


# -- splitting -------------------------------------------------------------


@dataclass(frozen=True)
class SplitSpec:
    """Split data: replace vertex v_tilde of g2 by the edge e_tilde of
    g1, redistributing its incident edges via the covering map s (g2
    edge ref -> non-empty tuple of e_tilde vertices, union = e_tilde)."""

    g1: Hypergraph
    e_tilde: int
    g2: Hypergraph
    v_tilde: int
    s: dict[int, tuple[int, ...]]

    def __post_init__(self) -> None:
        target = set(self.g1.edge(self.e_tilde))
        incident = set(self.g2.incident(self.v_tilde))
        if set(self.s) != incident:
            raise ValueError("s must cover exactly the edges at v_tilde")
        covered: set[int] = set()
        for ref, img in self.s.items():
            if not img:
                raise ValueError(f"s({ref}) is empty")
            if not set(img) <= target:
                raise ValueError(f"s({ref}) leaves the target edge")
            covered.update(img)
        if covered != target:
            raise ValueError("images of s must cover the target edge")

    def is_simple(self) -> bool:
        return all(len(img) == 1 for img in self.s.values())


@dataclass(frozen=True)
class SplitResult:
    graph: Hypergraph
    g1_map: tuple[int, ...]
    g2_map: tuple[int, ...]  # v_tilde maps to -1 (it disappears)


def split(spec: SplitSpec) -> SplitResult:
    """S(G1, e~, G2, v~, s): g1 keeps its ids, g2's other vertices are
    appended; duplicate-edge collisions are hard errors."""
    g1, g2 = spec.g1, spec.g2
    rest2 = [u for u in range(g2.n) if u != spec.v_tilde]
    g2_map = tuple(
        -1 if u == spec.v_tilde else g1.n + rest2.index(u) for u in range(g2.n)
    )
    edges = [e for i, e in enumerate(g1.edges) if i != spec.e_tilde]
    for i, e in enumerate(g2.edges):
        if spec.v_tilde in e:
            moved = {g2_map[u] for u in e if u != spec.v_tilde}
            moved.update(spec.s[i])
        else:
            moved = {g2_map[u] for u in e}
        edges.append(tuple(sorted(moved)))
    canon = canonical_edges(edges)
    if len(set(canon)) != len(edges):
        raise ValueError("splitting produced a duplicate edge")
    return SplitResult(Hypergraph.of(g1.n + g2.n - 1, edges), tuple(range(g1.n)), g2_map)


def split_vertex(g: Hypergraph, v: int, count: int, s: dict[int, tuple[int, ...]]) -> Relabeled:
    """Split a vertex into `count` fresh vertices: S(G, v, X, s).  The
    surviving vertices compact to 0..n-2, the fresh set is appended;
    s maps each edge at v to the fresh slots (0-based) it moves to."""
    if count < 1:
        raise ValueError("need at least one fresh vertex")
    incident = set(g.incident(v))
    if set(s) != incident:
        raise ValueError("s must cover exactly the edges at v")
    covered: set[int] = set()
    for ref, img in s.items():
        if not img or not all(0 <= i < count for i in img):
            raise ValueError(f"bad image for edge {ref}")
        covered.update(img)
    if covered != set(range(count)):
        raise ValueError("images of s must cover the fresh set")
    old = [u for u in range(g.n) if u != v]
    pos = {u: i for i, u in enumerate(old)}
    fresh = [len(old) + i for i in range(count)]
    edges = []
    for i, e in enumerate(g.edges):
        if v in e:
            moved = {pos[u] for u in e if u != v} | {fresh[j] for j in s[i]}
        else:
            moved = {pos[u] for u in e}
        edges.append(tuple(sorted(moved)))
    if len(set(canonical_edges(edges))) != len(edges):
        raise ValueError("splitting produced a duplicate edge")
    return Relabeled(Hypergraph.of(len(old) + count, edges), tuple(old) + (-1,) * count)


# -- decomposition theorems ------------------------------------------------


@dataclass(frozen=True)
class VertexPairDecomposition:
    """Decomposition at an independent separating pair {v, w}: side 1
    forces equal colors on the pair, side 2 forces distinct colors."""

    v: int
    w: int
    h1: tuple[int, ...]
    h2: tuple[int, ...]
    g1: Relabeled
    g2: Relabeled
    g1_prime: Hypergraph  # g1 plus the edge vw, in g1's id space
    g2_prime: Hypergraph  # g2 with v and w identified


def decompose_vertex_pair(
    g: Hypergraph, k: int, force: bool = False
) -> VertexPairDecomposition | None:
    """Theorem-backed decomposition of a (k+1)-critical hypergraph at
    a separating vertex pair; None when no size-<=2 separator exists."""
    report = col.is_critical(g, k + 1, force=force)
    if not report.is_critical:
        raise ValueError(f"hypergraph is not {k + 1}-critical: {report.reason}")
    seps = conn.enumerate_separating_sets(g, 2)
    if not seps:
        return None
    s = seps[0]
    if len(s) != 2:
        raise ValueError("critical hypergraph has a separating vertex; bug upstream")
    v, w = s
    if any(set(e) == {v, w} for e in g.edges):
        raise ValueError("separating pair is not independent; theorem violated")
    shrunk, old = g.div_vertices(s)
    comps = [tuple(sorted(old[x] for x in c)) for c in conn.components(shrunk)]
    if len(comps) != 2:
        raise ValueError(f"expected exactly 2 components, found {len(comps)}")
    h1, h2 = sorted(comps)
    side1 = g.induced(sorted(set(h1) | {v, w}))
    side2 = g.induced(sorted(set(h2) | {v, w}))

    def pair_behavior(side: Relabeled) -> bool | None:
        """True if every k-coloring identifies v and w, False if every
        coloring separates them, None on a mix (theorem violation)."""
        pv, pw = side.old_ids.index(v), side.old_ids.index(w)
        same = differ = False
        for phi in col.enumerate_k_colorings(side.graph, k):
            if phi.colors[pv] == phi.colors[pw]:
                same = True
            else:
                differ = True
            if same and differ:
                return None
        return same

    b1, b2 = pair_behavior(side1), pair_behavior(side2)
    if b1 is None or b2 is None or b1 == b2:
        raise ValueError("coloring dichotomy fails; theorem violated")
    if not b1:
        side1, side2 = side2, side1
        h1, h2 = h2, h1
    pv, pw = side1.old_ids.index(v), side1.old_ids.index(w)
    g1_prime = Hypergraph.of(side1.graph.n, side1.graph.edges + ((pv, pw),))
    pv2, pw2 = side2.old_ids.index(v), side2.old_ids.index(w)
    g2_prime = identify_vertices(side2.graph, pv2, pw2)
    for part, name in ((g1_prime, "G1'"), (g2_prime, "G2'")):
        rep = col.is_critical(part, k + 1, force=force)
        if not rep.is_critical:
            raise ValueError(f"{name} is not {k + 1}-critical: {rep.reason}")
    return VertexPairDecomposition(v, w, h1, h2, side1, side2, g1_prime, g2_prime)


def identify_vertices(g: Hypergraph, v: int, w: int) -> Hypergraph:
    """Merge w into v; duplicate images collapse (identification is a
    quotient, unlike join/split)."""
    if v == w:
        raise ValueError("vertices must be distinct")
    old = [u for u in range(g.n) if u != w]
    pos = {u: i for i, u in enumerate(old)}
    pos[w] = pos[v]
    edges = set()
    for e in g.edges:
        img = tuple(sorted({pos[u] for u in e}))
        if len(img) >= 2:
            edges.add(img)
    return Hypergraph.of(g.n - 1, edges)


@dataclass(frozen=True)
class EdgeCutDecomposition:
    """Decomposition at a size-k edge cut, oriented so that side X
    forces one color on X_F and side Y spreads all k colors on Y_F."""

    cut: conn.EdgeCut
    g1: Hypergraph | None  # G[X] + hyperedge X_F, absent when |X_F| < 2
    g1_old: tuple[int, ...]
    g2: Hypergraph  # G[Y] + apex (last vertex) with the redirected cut edges
    g2_old: tuple[int, ...]  # apex maps to -1


def decompose_edge_cut(
    g: Hypergraph, k: int, f, force: bool = False, check_critical: bool = True
) -> EdgeCutDecomposition:
    """Theorem-backed decomposition of a (k+1)-critical hypergraph at a
    separating edge set of size <= k (which must then have size k)."""
    refs = tuple(sorted(set(f)))
    if check_critical:
        report = col.is_critical(g, k + 1, force=force)
        if not report.is_critical:
            raise ValueError(f"hypergraph is not {k + 1}-critical: {report.reason}")
    if not conn.is_separating_edge_set(g, refs):
        raise ValueError("edge set is not separating")
    if len(refs) > k:
        raise ValueError(f"separating set has size {len(refs)} > {k}")
    if any(
        conn.is_separating_edge_set(g, sub)
        for r in range(1, len(refs))
        for sub in itertools.combinations(refs, r)
    ):
        raise ValueError("separating edge set is not minimal; k-edge-connectivity bug")
    if len(refs) != k:
        raise ValueError(f"minimal separating set of size {len(refs)} != {k}")
    cut = conn.edge_cut_for(g, refs)

    def forced_side(xs, marked) -> bool | None:
        """True if all k-colorings of G[xs] are constant on `marked`,
        False if all use k colors there, None otherwise."""
        sub, old = g.induced(xs)
        pos = [old.index(u) for u in marked]
        one = full = True
        for phi in col.enumerate_k_colorings(sub, k):
            img = {phi.colors[p] for p in pos}
            one = one and len(img) == 1
            full = full and len(img) == k
            if not one and not full:
                return None
        return one

    bx = forced_side(cut.x, cut.x_f)
    if bx is None:
        raise ValueError("side X coloring behavior is mixed; theorem violated")
    if not bx:
        cut = conn.EdgeCut(cut.y, cut.x, cut.f, cut.y_f, cut.x_f)
    _assert_cut_properties(g, cut, k)
    g1 = None
    g1_old: tuple[int, ...] = ()
    if len(cut.x_f) >= 2:
        sub, old = g.induced(cut.x)
        pos = {u: i for i, u in enumerate(old)}
        g1 = Hypergraph.of(sub.n, sub.edges + (tuple(sorted(pos[u] for u in cut.x_f)),))
        g1_old = old
        rep = col.is_critical(g1, k + 1, force=force)
        if not rep.is_critical:
            raise ValueError(f"G1 is not {k + 1}-critical: {rep.reason}")
    suby, oldy = g.induced(cut.y)
    posy = {u: i for i, u in enumerate(oldy)}
    apex = suby.n
    new_edges = list(suby.edges)
    xset = set(cut.x)
    for ref in cut.f:
        e = g.edge(ref)
        new_edges.append(tuple(sorted({posy[u] for u in e if u not in xset} | {apex})))
    g2 = Hypergraph.of(suby.n + 1, new_edges)
    rep = col.is_critical(g2, k + 1, force=force)
    if not rep.is_critical:
        raise ValueError(f"G2 is not {k + 1}-critical: {rep.reason}")
    return EdgeCutDecomposition(cut, g1, g1_old, g2, oldy + (-1,))


def _assert_cut_properties(g: Hypergraph, cut: conn.EdgeCut, k: int) -> None:
    """Full check of the coloring structure (a) and incidence rule (b)."""
    fset = set(cut.f)
    for u in cut.y_f:
        if sum(1 for ref in fset if u in g.edge(ref)) != 1:
            raise ValueError(f"vertex {u} not incident to exactly one cut edge")
    subx, oldx = g.induced(cut.x)
    posx = [oldx.index(u) for u in cut.x_f]
    for phi in col.enumerate_k_colorings(subx, k):
        if len({phi.colors[p] for p in posx}) != 1:
            raise ValueError("a k-coloring of G[X] is not constant on X_F")
    suby, oldy = g.induced(cut.y)
    posy = {u: i for i, u in enumerate(oldy)}
    yset = set(cut.y)
    for phi in col.enumerate_k_colorings(suby, k):
        if len({phi.colors[posy[u]] for u in cut.y_f}) != k:
            raise ValueError("a k-coloring of G[Y] misses a color on Y_F")
        for i in range(1, k + 1):
            if not any(
                {phi.colors[posy[u]] for u in g.edge(ref) if u in yset} == {i}
                for ref in cut.f
            ):
                raise ValueError(f"color {i} not concentrated on any cut edge")


# -- splitting validators --------------------------------------------------


def _infer_k(g: Hypergraph, force: bool = False) -> int:
    return col.chromatic_number(g, force=force) - 1


def _require_critical(g: Hypergraph, k: int, name: str, force: bool = False) -> None:
    rep = col.is_critical(g, k + 1, force=force)
    if not rep.is_critical:
        raise ValueError(f"{name} is not {k + 1}-critical: {rep.reason}")


def validate_split_low(
    spec: SplitSpec, k: int | None = None, force: bool = False
) -> SplitResult:
    """Split at a low vertex of g2: the result must be (k+1)-critical
    with the boundary of g1's side a size-k separating edge set."""
    if k is None:
        k = _infer_k(spec.g1, force=force)
    _require_critical(spec.g1, k, "G1", force=force)
    _require_critical(spec.g2, k, "G2", force=force)
    if spec.g2.degree(spec.v_tilde) != k:
        raise ValueError("v_tilde is not a low vertex of G2")
    result = split(spec)
    _require_critical(result.graph, k, "split result", force=force)
    f = result.graph.boundary(range(spec.g1.n))
    if len(f) != k or not conn.is_separating_edge_set(result.graph, f):
        raise ValueError("expected a separating boundary of size k")
    return result


@dataclass(frozen=True)
class OrdinarySplitReport:
    result: SplitResult
    theorem_applies: bool  # chi(G2') <= k
    is_critical: bool
    pair_separates: bool


def validate_split_ordinary(
    spec: SplitSpec, k: int | None = None, force: bool = False
) -> OrdinarySplitReport:
    """Split an ordinary edge of g1 into a vertex of g2.  When the
    quotient side stays k-colorable the result must be critical with
    the edge a separating pair; otherwise both outcomes are reported
    (the quotient is then itself critical)."""
    if k is None:
        k = _infer_k(spec.g1, force=force)
    if len(spec.g1.edge(spec.e_tilde)) != 2:
        raise ValueError("e_tilde must be an ordinary edge")
    _require_critical(spec.g1, k, "G1", force=force)
    _require_critical(spec.g2, k, "G2", force=force)
    result = split(spec)
    pair = spec.g1.edge(spec.e_tilde)
    g2_side = sorted(set(range(spec.g1.n, result.graph.n)) | set(pair))
    quotient, _ = result.graph.induced(g2_side)
    applies = col.chromatic_number(quotient, force=force) <= k
    rep = col.is_critical(result.graph, k + 1, force=force)
    separates = conn.is_separating_vertex_set(result.graph, pair)
    if applies and not (rep.is_critical and separates):
        raise ValueError("theorem conclusion failed despite its precondition")
    return OrdinarySplitReport(result, applies, rep.is_critical, separates)


def check_general_split_precondition(
    spec: SplitSpec, k: int | None = None, force: bool = False
) -> bool:
    """True iff every non-constant palette assignment on the split edge
    extends to a k-coloring of the quotient side, which guarantees the
    split result is (k+1)-critical."""
    if k is None:
        k = _infer_k(spec.g1, force=force)
    _require_critical(spec.g1, k, "G1", force=force)
    _require_critical(spec.g2, k, "G2", force=force)
    result = split(spec)
    pair = spec.g1.edge(spec.e_tilde)
    g2_side = sorted(set(range(spec.g1.n, result.graph.n)) | set(pair))
    quotient, old = result.graph.induced(g2_side)
    marked = [old.index(u) for u in pair]
    if k ** len(marked) > col.ENUM_GUARD:
        raise col.GuardExceeded("too many palette assignments on the split edge")
    for assignment in itertools.product(range(1, k + 1), repeat=len(marked)):
        if len(set(assignment)) < 2:
            continue
        preset = dict(zip(marked, assignment))
        if col.find_k_coloring(quotient, k, preset=preset) is None:
            return False
    return True


@dataclass(frozen=True)
class UniversalVerdict:
    universal_up_to_bound: bool
    counterexample: tuple[int, dict[int, tuple[int, ...]], tuple[int, ...]] | None


def is_universal_vertex_bounded(
    g: Hypergraph,
    v: int,
    k: int,
    max_set_size: int,
    guard: int = 200_000,
    force: bool = False,
) -> UniversalVerdict:
    """Bounded universality check: enumerate splittings of v into fresh
    independent sets of size <= max_set_size and test that every
    non-constant palette assignment on the fresh set extends."""
    _require_critical(g, k, "G", force=force)
    incident = g.incident(v)
    d = len(incident)
    for t in range(2, max_set_size + 1):
        images = [x for r in range(1, t + 1) for x in itertools.combinations(range(t), r)]
        if len(images) ** d > guard:
            raise col.GuardExceeded("too many splitting maps at this bound")
        for choice in itertools.product(images, repeat=d):
            if set().union(*choice) != set(range(t)):
                continue
            s = dict(zip(incident, choice))
            try:
                g_split = split_vertex(g, v, t, s).graph
            except ValueError:
                continue  # duplicate-edge collision: not a valid splitting
            fresh = range(g_split.n - t, g_split.n)
            for assignment in itertools.product(range(1, k + 1), repeat=t):
                if len(set(assignment)) < 2:
                    continue
                preset = dict(zip(fresh, assignment))
                if col.find_k_coloring(g_split, k, preset=preset) is None:
                    return UniversalVerdict(False, (t, s, assignment))
    return UniversalVerdict(True, None)
