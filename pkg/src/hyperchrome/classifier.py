"""Membership in the join-closed critical classes, replayable join
certificates, critical-subhypergraph extraction, and the classifier
that decides whether the chromatic number meets the connectivity bound.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Union

from .hypercore import Hypergraph, Relabeled
from . import coloring as col
from . import connectivity as conn
from . import constructions as cons
from . import shapes


class CertificateError(ValueError):
    """A certificate failed to replay or an internal invariant broke.

    Structural certification and the semantic oracle are provably
    equivalent, so disagreement is a bug and fails loudly."""


# -- certificates ----------------------------------------------------------


@dataclass(frozen=True)
class Leaf:
    """Base shape with explicit target ids.  ``labels[i]`` is the target
    id of canonical vertex i: for an odd wheel the canonical layout is
    rim 0..r-1 in cyclic order then the hub; for a complete graph any
    order."""

    kind: str  # "odd_wheel" | "complete"
    labels: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.kind not in ("odd_wheel", "complete"):
            raise CertificateError(f"unknown leaf kind {self.kind!r}")
        if len(set(self.labels)) != len(self.labels):
            raise CertificateError("leaf labels are not distinct")
        if self.kind == "odd_wheel" and (len(self.labels) < 4 or len(self.labels) % 2):
            raise CertificateError("odd wheel leaf needs even order >= 4")
        if self.kind == "complete" and len(self.labels) < 2:
            raise CertificateError("complete leaf needs order >= 2")


@dataclass(frozen=True)
class Join:
    """Join of the two sub-certificates in a shared target id space:
    the parts overlap exactly in ``vstar``, the edges ``e1``/``e2``
    (given as target vertex tuples) are deleted, and the merged edge
    (e1 ∪ e2) − {v*} — plus v* when ``include_vstar`` — is added."""

    left: "Certificate"
    right: "Certificate"
    vstar: int
    e1: tuple[int, ...]
    e2: tuple[int, ...]
    include_vstar: bool


Certificate = Union[Leaf, Join]

Replayed = tuple[frozenset[int], frozenset[frozenset[int]]]


def replay_certificate(cert: Certificate) -> Replayed:
    """Rebuild the certified hypergraph bottom-up as explicit vertex
    and edge sets in target ids, checking every join invariant."""
    if isinstance(cert, Leaf):
        vs = frozenset(cert.labels)
        if cert.kind == "complete":
            es = frozenset(frozenset(p) for p in itertools.combinations(cert.labels, 2))
        else:
            rim, hub = cert.labels[:-1], cert.labels[-1]
            es = frozenset(
                frozenset((rim[i], rim[(i + 1) % len(rim)])) for i in range(len(rim))
            ) | frozenset(frozenset((v, hub)) for v in rim)
        return vs, es
    v1, es1 = replay_certificate(cert.left)
    v2, es2 = replay_certificate(cert.right)
    if v1 & v2 != {cert.vstar}:
        raise CertificateError("join parts must overlap exactly in the merged vertex")
    e1, e2 = frozenset(cert.e1), frozenset(cert.e2)
    if e1 not in es1 or e2 not in es2:
        raise CertificateError("deleted edge missing from its part")
    if cert.vstar not in e1 or cert.vstar not in e2:
        raise CertificateError("merged vertex must lie on both deleted edges")
    estar = (e1 | e2) - {cert.vstar}
    if cert.include_vstar:
        estar |= {cert.vstar}
    if len(estar) < 2:
        raise CertificateError("merged edge has fewer than 2 vertices")
    es = (es1 - {e1}) | (es2 - {e2})
    if estar in es:
        raise CertificateError("merged edge duplicates an existing edge")
    return v1 | v2, es | {estar}


def certificate_matches(cert: Certificate, vertices, edges) -> bool:
    """Bit-exact comparison of the replay against explicit target sets."""
    vs, es = replay_certificate(cert)
    return vs == frozenset(vertices) and es == {frozenset(e) for e in edges}


def verify_certificate(g: Hypergraph, cert: Certificate) -> bool:
    return certificate_matches(cert, range(g.n), g.edges)


def relabel_certificate(cert: Certificate, new_of_old) -> Certificate:
    if isinstance(cert, Leaf):
        return Leaf(cert.kind, tuple(new_of_old[v] for v in cert.labels))
    return Join(
        relabel_certificate(cert.left, new_of_old),
        relabel_certificate(cert.right, new_of_old),
        new_of_old[cert.vstar],
        tuple(sorted(new_of_old[v] for v in cert.e1)),
        tuple(sorted(new_of_old[v] for v in cert.e2)),
        cert.include_vstar,
    )


def certificate_to_json(cert: Certificate) -> dict:
    if isinstance(cert, Leaf):
        return {"type": "leaf", "kind": cert.kind, "labels": list(cert.labels)}
    return {
        "type": "join",
        "left": certificate_to_json(cert.left),
        "right": certificate_to_json(cert.right),
        "vstar": cert.vstar,
        "e1": list(cert.e1),
        "e2": list(cert.e2),
        "include_vstar": cert.include_vstar,
    }


def certificate_from_json(data: dict) -> Certificate:
    try:
        if data["type"] == "leaf":
            return Leaf(data["kind"], tuple(data["labels"]))
        if data["type"] == "join":
            return Join(
                certificate_from_json(data["left"]),
                certificate_from_json(data["right"]),
                data["vstar"],
                tuple(data["e1"]),
                tuple(data["e2"]),
                bool(data["include_vstar"]),
            )
    except (KeyError, TypeError) as exc:
        raise CertificateError(f"malformed certificate JSON: {exc}") from None
    raise CertificateError(f"unknown certificate node type {data.get('type')!r}")


# -- membership and certification ------------------------------------------


def is_in_Ck(g: Hypergraph, k: int, force: bool = False) -> bool:
    """Semantic membership oracle: (k+1)-critical with local edge
    connectivity at most k.  Only k >= 3 is decided."""
    if k < 3:
        raise ValueError("membership is only decided for k >= 3")
    if not col.is_critical(g, k + 1, force=force).is_critical:
        return False
    return conn.max_local_edge_connectivity(g) <= k


def _wheel_leaf(g: Hypergraph) -> Leaf | None:
    hub = shapes.wheel_hub(g)
    if hub is None:
        return None
    rim = [v for v in range(g.n) if v != hub]
    adj = {v: [] for v in rim}
    for e in g.edges:
        if hub not in e:
            adj[e[0]].append(e[1])
            adj[e[1]].append(e[0])
    order = [rim[0], min(adj[rim[0]])]
    while len(order) < len(rim):
        a, b = order[-2], order[-1]
        order.append(next(u for u in adj[b] if u != a))
    return Leaf("odd_wheel", tuple(order) + (hub,))


def hk_certificate(g: Hypergraph, k: int, force: bool = False) -> Certificate | None:
    """A replayable join decomposition over the base shapes, or None
    when the semantic oracle rejects.  Internal failures on accepted
    inputs raise, since the equivalence theorem guarantees success."""
    if k < 3:
        raise ValueError("certificates exist only for k >= 3")
    if not is_in_Ck(g, k, force=force):
        return None
    cert = _certify(g, k, force)
    if not verify_certificate(g, cert):
        raise CertificateError("certificate replay mismatch; internal bug")
    return cert


def _certify(g: Hypergraph, k: int, force: bool) -> Certificate:
    if not conn.enumerate_separating_sets(g, 2):
        if k == 3:
            leaf = _wheel_leaf(g)
            if leaf is not None:
                return leaf
        elif shapes.is_complete_graph(g) and g.n == k + 1:
            return Leaf("complete", tuple(range(g.n)))
        raise CertificateError(
            "no small separator but no base shape matched; internal bug"
        )
    mixed = conn.mixed_separating_sets(g)
    if not mixed:
        raise CertificateError("small separator without mixed separator; internal bug")
    v_star, e_star = mixed[0]
    dec = cons.hajos_decompose_mixed(g, v_star, e_star)
    parts = []
    for part, old in ((dec.spec.g1, dec.g1_old), (dec.spec.g2, dec.g2_old)):
        if not is_in_Ck(part, k, force=force):
            raise CertificateError("join operand left the class; internal bug")
        parts.append(relabel_certificate(_certify(part, k, force), old))
    half1 = tuple(sorted(dec.g1_old[u] for u in dec.spec.g1.edge(dec.spec.e1)))
    half2 = tuple(sorted(dec.g2_old[u] for u in dec.spec.g2.edge(dec.spec.e2)))
    return Join(
        parts[0], parts[1], v_star, half1, half2,
        include_vstar=v_star in g.edge(e_star),
    )


# -- critical subhypergraph extraction -------------------------------------


def extract_critical(g: Hypergraph, target_chi: int, force: bool = False) -> Relabeled:
    """A critical subhypergraph with the same chromatic number, with id
    provenance.  Deterministic: lowest-index edge deletions first, then
    isolated vertices drop, then the lowest-index component with the
    target chromatic number is kept."""
    if col.chromatic_number(g, force=force) != target_chi:
        raise ValueError(f"chromatic number is not {target_chi}")
    if target_chi <= 1:
        sub, old = g.induced(range(min(g.n, 1)))
        return Relabeled(sub, old)
    cur = g
    progress = True
    while progress:
        progress = False
        for ref in range(cur.m):
            if col.find_k_coloring(cur.delete_edge(ref), target_chi - 1) is None:
                cur = cur.delete_edge(ref)
                progress = True
                break
    covered = sorted({v for e in cur.edges for v in e})
    sub, old = cur.induced(covered)
    for comp in conn.components(sub):
        csub, cold = sub.induced(comp)
        if col.chromatic_number(csub, force=force) == target_chi:
            return Relabeled(csub, tuple(old[v] for v in cold))
    raise CertificateError("no component kept the chromatic number; internal bug")


# -- the classifier --------------------------------------------------------


@dataclass(frozen=True)
class ClassifyOutcome:
    """Either a lambda-coloring, a certified tight block, or the small
    connectivity report (where the bound's tight cases are explicitly
    characterized for lambda <= 1 and open for lambda = 2)."""

    lam: int
    chi: int
    verdict: str  # "colorable" | "tight" | "small-lambda"
    coloring: col.Coloring | None = None
    block: tuple[int, ...] | None = None
    certificate: Certificate | None = None
    note: str = ""
    h2_closure: bool | None = None


def classify(g: Hypergraph, force: bool = False, h2_info: bool = False) -> ClassifyOutcome:
    """Decide whether chi(G) = lambda(G)+1, with a witness either way
    when lambda >= 3."""
    lam = conn.max_local_edge_connectivity(g)
    if lam >= 3:
        phi = col.find_k_coloring(g, lam)
        if phi is not None:
            return ClassifyOutcome(lam, _chi_below(g, lam), "colorable", coloring=phi)
        chi = lam + 1
        crit = extract_critical(g, chi, force=force)
        block_vs = set(crit.old_ids)
        if not any(set(b.vertices) == block_vs for b in conn.blocks(g)):
            raise CertificateError("critical part is not a block; internal bug")
        sub, old = g.induced(sorted(block_vs))
        if sub != crit.graph:
            raise CertificateError("block carries extra edges; internal bug")
        cert = hk_certificate(crit.graph, lam, force=force)
        if cert is None:
            raise CertificateError("tight instance rejected by the oracle; internal bug")
        cert = relabel_certificate(cert, crit.old_ids)
        return ClassifyOutcome(lam, chi, "tight", block=tuple(sorted(block_vs)), certificate=cert)
    chi = col.chromatic_number(g, force=force)
    if lam == 0:
        note = (
            "edgeless: every component is a single vertex, chi = lambda + 1"
            if g.n else "empty hypergraph"
        )
        return ClassifyOutcome(lam, chi, "small-lambda", note=note)
    if lam == 1:
        if chi != 2 or any(len(b.edge_refs) != 1 for b in conn.blocks(g) if b.edge_refs):
            raise CertificateError("lambda=1 characterization failed; internal bug")
        return ClassifyOutcome(
            lam, chi, "small-lambda",
            note="every block is a single edge, chi = 2 = lambda + 1",
        )
    note = (
        "chi = 3 = lambda + 1; no certificate family is known at lambda = 2"
        if chi == 3 else "chi <= lambda"
    )
    h2 = None
    if h2_info and chi == 3:
        h2 = _h2_closure_hint(g, force=force)
    return ClassifyOutcome(lam, chi, "small-lambda", note=note, h2_closure=h2)


def _chi_below(g: Hypergraph, lam: int) -> int:
    """chi given a valid lam-coloring exists: downward scan."""
    chi = lam
    while chi > 1 and col.find_k_coloring(g, chi - 1) is not None:
        chi -= 1
    return chi


def _h2_closure_hint(g: Hypergraph, depth: int = 6, force: bool = False) -> bool:
    """Informational only: is some 3-chromatic block producible from
    hyperwheels by joins within the given recursion depth?"""
    for b in conn.blocks(g):
        sub = b.graph(g)
        crit = extract_critical(sub, 3, force=force) if col.chromatic_number(sub, force=force) == 3 else None
        if crit and _h2_search(crit.graph, depth):
            return True
    return False


def _h2_search(g: Hypergraph, depth: int) -> bool:
    if shapes.is_hyperwheel(g):
        return True
    if depth == 0:
        return False
    for v, ref in conn.mixed_separating_sets(g):
        try:
            dec = cons.hajos_decompose_mixed(g, v, ref)
        except ValueError:
            continue
        if _h2_search(dec.spec.g1, depth - 1) and _h2_search(dec.spec.g2, depth - 1):
            return True
    return False


# -- degree-bound classifier -----------------------------------------------


@dataclass(frozen=True)
class JonesVerdict:
    equality: bool  # chi = max_degree + 1
    shape: str | None  # "complete" | "odd_cycle" | "single_edge"
    chi: int
    max_degree: int


def jones_classify(g: Hypergraph, force: bool = False) -> JonesVerdict:
    """Report whether chi reaches the degree bound max_degree + 1, and
    which extremal shape realizes it; the iff is asserted."""
    if not conn.is_connected(g):
        raise ValueError("degree-bound classification needs a connected hypergraph")
    chi = col.chromatic_number(g, force=force)
    shape = None
    if shapes.is_complete_graph(g):
        shape = "complete"
    elif shapes.is_odd_cycle(g):
        shape = "odd_cycle"
    elif g.m == 1:
        shape = "single_edge"
    equality = chi == g.max_degree() + 1
    if equality != (shape is not None):
        raise CertificateError("degree-bound characterization failed; internal bug")
    return JonesVerdict(equality, shape, chi, g.max_degree())
