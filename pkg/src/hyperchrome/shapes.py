"""Structural shape predicates for the named base families."""

from __future__ import annotations

from .hypercore import Hypergraph
from .connectivity import is_connected


def is_complete_graph(g: Hypergraph) -> bool:
    """K_n: all ordinary edges, every pair adjacent (K_1 included)."""
    if g.n == 0:
        return False
    return g.is_graph() and g.m == g.n * (g.n - 1) // 2


def is_cycle(g: Hypergraph) -> bool:
    """C_n, n >= 3: connected, 2-regular, ordinary edges only."""
    if g.n < 3 or g.m != g.n or not g.is_graph():
        return False
    return all(g.degree(v) == 2 for v in range(g.n)) and is_connected(g)


def is_odd_cycle(g: Hypergraph) -> bool:
    return is_cycle(g) and g.n % 2 == 1


def is_single_edge(g: Hypergraph) -> bool:
    """A connected hypergraph consisting of exactly one edge."""
    return g.m == 1 and g.n == len(g.edges[0])


def wheel_hub(g: Hypergraph) -> int | None:
    """The hub of an odd wheel: rim vertices have degree 3 and the hub
    is adjacent to all of them by ordinary edges.  For K_4 (= the wheel
    over a triangle) any vertex qualifies; the smallest id is returned."""
    if not g.is_graph() or g.n < 4 or g.n % 2 == 1:
        return None
    rim_len = g.n - 1
    if g.m != 2 * rim_len:
        return None
    for hub in range(g.n):
        if g.degree(hub) != rim_len:
            continue
        rim = [v for v in range(g.n) if v != hub]
        if any(g.degree(v) != 3 for v in rim):
            continue
        rim_graph, _ = g.induced(rim)
        if is_odd_cycle(rim_graph):
            return hub
    return None


def is_odd_wheel(g: Hypergraph) -> bool:
    return wheel_hub(g) is not None


def is_hyperwheel(g: Hypergraph) -> bool:
    """One base edge plus an apex joined to each base vertex by an
    ordinary edge."""
    if g.n < 3:
        return False
    base_size = g.n - 1
    if g.m != base_size + 1:
        return False
    candidates = [e for e in g.edges if len(e) == base_size]
    for base in candidates:
        (hub,) = set(range(g.n)) - set(base)
        spokes = {tuple(sorted((hub, v))) for v in base}
        if spokes == set(g.edges) - {base}:
            return True
    return False
