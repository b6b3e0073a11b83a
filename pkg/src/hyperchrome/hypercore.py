"""Immutable hypergraph values and set-level operations.

Invariants
- every edge has size >= 2 and distinct, in-range vertex ids;
- no two edges are equal as sets;
- edges are stored sorted, in lexicographic order, so structural
  equality of two hypergraphs is plain value equality.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple

Edge = tuple[int, ...]


class HgrFormatError(ValueError):
    """Malformed HGR input; carries the offending line number."""

    def __init__(self, line_no: int, message: str) -> None:
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


class Relabeled(NamedTuple):
    """A derived hypergraph plus the map back to the original ids.

    ``old_ids[i]`` is the id, in the parent hypergraph, of vertex ``i``
    of ``graph``.  Certificates refer to original ids through this map.
    """

    graph: "Hypergraph"
    old_ids: tuple[int, ...]


def canonical_edges(edges: Iterable[Iterable[int]]) -> tuple[Edge, ...]:
    """Sort each edge and sort the edge list lexicographically."""
    return tuple(sorted(tuple(sorted(set(e))) for e in edges))


@dataclass(frozen=True)
class Hypergraph:
    """A hypergraph on vertices ``0..n-1`` with canonical edge order."""

    n: int
    edges: tuple[Edge, ...] = ()

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("negative vertex count")
        seen: set[Edge] = set()
        prev: Edge | None = None
        for e in self.edges:
            if len(e) < 2:
                raise ValueError(f"edge {e} has size < 2")
            if list(e) != sorted(set(e)):
                raise ValueError(f"edge {e} is not strictly sorted")
            if e[0] < 0 or e[-1] >= self.n:
                raise ValueError(f"edge {e} has out-of-range vertex")
            if e in seen:
                raise ValueError(f"duplicate edge {e}")
            if prev is not None and e < prev:
                raise ValueError("edges not in canonical order")
            seen.add(e)
            prev = e

    @classmethod
    def of(cls, n: int, edges: Iterable[Iterable[int]] = ()) -> "Hypergraph":
        """Build a hypergraph, canonicalizing the edge list."""
        return cls(n, canonical_edges(edges))

    # -- basic accessors ---------------------------------------------------

    @property
    def m(self) -> int:
        return len(self.edges)

    def vertices(self) -> range:
        return range(self.n)

    def edge(self, ref: int) -> Edge:
        if not 0 <= ref < len(self.edges):
            raise ValueError(f"edge ref {ref} out of range")
        return self.edges[ref]

    def edge_ref(self, e: Iterable[int]) -> int:
        """Index of the edge with the given vertex set; raises if absent."""
        key = tuple(sorted(set(e)))
        try:
            return self.edges.index(key)
        except ValueError:
            raise ValueError(f"no edge {key}") from None

    def incident(self, v: int) -> tuple[int, ...]:
        """Refs of all edges containing v."""
        self._check_vertex(v)
        return tuple(i for i, e in enumerate(self.edges) if v in e)

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise ValueError(f"vertex {v} out of range")

    def _check_subset(self, xs: Iterable[int]) -> tuple[int, ...]:
        out = tuple(sorted(set(xs)))
        for v in out:
            self._check_vertex(v)
        return out

    # -- set-level operations ----------------------------------------------

    def induced(self, xs: Iterable[int]) -> Relabeled:
        """G[X]: keep exactly the edges fully inside X, relabel to 0..|X|-1."""
        old = self._check_subset(xs)
        pos = {v: i for i, v in enumerate(old)}
        keep = set(old)
        edges = [tuple(pos[v] for v in e) for e in self.edges if keep.issuperset(e)]
        return Relabeled(Hypergraph.of(len(old), edges), old)

    def shrink(self, xs: Iterable[int]) -> Relabeled:
        """G(X): intersect every edge with X, keep intersections of size >= 2.

        Duplicate intersections collapse to one edge (edges are sets).
        """
        old = self._check_subset(xs)
        pos = {v: i for i, v in enumerate(old)}
        keep = set(old)
        edges = set()
        for e in self.edges:
            cut = tuple(pos[v] for v in e if v in keep)
            if len(cut) >= 2:
                edges.add(cut)
        return Relabeled(Hypergraph.of(len(old), edges), old)

    def delete_vertices(self, xs: Iterable[int]) -> Relabeled:
        """G - X = G[V \\ X]."""
        drop = set(self._check_subset(xs))
        return self.induced(v for v in range(self.n) if v not in drop)

    def div_vertices(self, xs: Iterable[int]) -> Relabeled:
        """G / X = G(V \\ X)."""
        drop = set(self._check_subset(xs))
        return self.shrink(v for v in range(self.n) if v not in drop)

    def delete_edges(self, refs: Iterable[int]) -> "Hypergraph":
        """Same vertices, edges minus the given refs."""
        drop = set(refs)
        for r in drop:
            self.edge(r)
        return Hypergraph(self.n, tuple(e for i, e in enumerate(self.edges) if i not in drop))

    def delete_edge(self, ref: int) -> "Hypergraph":
        return self.delete_edges((ref,))

    def boundary(self, xs: Iterable[int]) -> tuple[int, ...]:
        """Refs of the edges meeting both X and V \\ X; X must be a
        non-empty proper subset."""
        inside = set(self._check_subset(xs))
        if not inside or len(inside) == self.n:
            raise ValueError("boundary needs a non-empty proper vertex subset")
        return self._boundary(inside)

    def _boundary(self, inside: set[int]) -> tuple[int, ...]:
        out = []
        for i, e in enumerate(self.edges):
            k = sum(1 for v in e if v in inside)
            if 0 < k < len(e):
                out.append(i)
        return tuple(out)

    def degree(self, v: int) -> int:
        return len(self.incident(v))

    def min_degree(self) -> int:
        if self.n == 0:
            return 0
        return min(self.degree(v) for v in range(self.n))

    def max_degree(self) -> int:
        if self.n == 0:
            return 0
        return max(self.degree(v) for v in range(self.n))

    def union(self, other: "Hypergraph") -> "Hypergraph":
        """Union in a shared id space."""
        return Hypergraph.of(max(self.n, other.n), set(self.edges) | set(other.edges))

    def intersection(self, other: "Hypergraph") -> "Hypergraph":
        return Hypergraph.of(min(self.n, other.n), set(self.edges) & set(other.edges))

    def is_simple(self) -> bool:
        """True iff no edge is contained in another edge."""
        sets = [set(e) for e in self.edges]
        for i, a in enumerate(sets):
            for j, b in enumerate(sets):
                if i != j and a <= b:
                    return False
        return True

    def is_graph(self) -> bool:
        """True iff every edge is ordinary (size 2)."""
        return all(len(e) == 2 for e in self.edges)

    # -- HGR v1 text format -------------------------------------------------

    def to_hgr(self) -> str:
        lines = ["HGR 1", f"n {self.n}"]
        lines.extend("e " + " ".join(str(v) for v in e) for e in self.edges)
        return "\n".join(lines) + "\n"

    @classmethod
    def from_hgr(cls, text: str) -> "Hypergraph":
        n: int | None = None
        edges: list[Edge] = []
        seen: set[Edge] = set()
        got_header = False
        for line_no, raw in enumerate(text.splitlines(), start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            if not got_header:
                if line != "HGR 1":
                    raise HgrFormatError(line_no, "expected header 'HGR 1'")
                got_header = True
                continue
            parts = line.split()
            if parts[0] == "n":
                if n is not None:
                    raise HgrFormatError(line_no, "duplicate vertex-count line")
                if len(parts) != 2 or not parts[1].isdigit():
                    raise HgrFormatError(line_no, "expected 'n <count>'")
                n = int(parts[1])
            elif parts[0] == "e":
                if n is None:
                    raise HgrFormatError(line_no, "edge before vertex-count line")
                try:
                    vs = tuple(int(p) for p in parts[1:])
                except ValueError:
                    raise HgrFormatError(line_no, "non-integer vertex id") from None
                if len(vs) < 2:
                    raise HgrFormatError(line_no, "edge has fewer than 2 vertices")
                if any(a >= b for a, b in zip(vs, vs[1:])):
                    raise HgrFormatError(line_no, "vertex ids not strictly increasing")
                if vs[0] < 0 or vs[-1] >= n:
                    raise HgrFormatError(line_no, "vertex id out of range")
                if vs in seen:
                    raise HgrFormatError(line_no, f"duplicate edge {vs}")
                seen.add(vs)
                edges.append(vs)
            else:
                raise HgrFormatError(line_no, f"unknown directive {parts[0]!r}")
        if not got_header:
            raise HgrFormatError(1, "empty input, expected header 'HGR 1'")
        if n is None:
            raise HgrFormatError(1, "missing vertex-count line")
        return cls.of(n, edges)
