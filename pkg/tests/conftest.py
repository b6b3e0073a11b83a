import itertools
import random

from hypothesis import strategies as st

from hyperchrome.hypercore import Hypergraph
from hyperchrome.connectivity import is_connected


def _possible_edges(n: int, sizes):
    return [
        e
        for size in sizes
        if size <= n
        for e in itertools.combinations(range(n), size)
    ]


@st.composite
def hypergraphs(draw, min_n=0, max_n=6, sizes=(2, 3)):
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    pool = _possible_edges(n, sizes)
    edges = draw(st.lists(st.sampled_from(pool), unique=True, max_size=12)) if pool else []
    return Hypergraph.of(n, edges)


@st.composite
def connected_hypergraphs(draw, min_n=1, max_n=6, sizes=(2, 3)):
    g = draw(hypergraphs(min_n=min_n, max_n=max_n, sizes=sizes))
    if is_connected(g):
        return g
    # stitch components together with a spanning chain of extra edges
    comps = []
    from hyperchrome.connectivity import components

    for c in components(g):
        comps.append(c[0])
    extra = [(a, b) for a, b in zip(comps, comps[1:])]
    return Hypergraph.of(g.n, set(g.edges) | {tuple(sorted(e)) for e in extra})


def seeded_random_hypergraph(rng: random.Random, n: int, sizes, m_max: int) -> Hypergraph:
    pool = _possible_edges(n, sizes)
    m = rng.randint(0, min(m_max, len(pool)))
    return Hypergraph.of(n, rng.sample(pool, m))


def random_nested_join(rng: random.Random, k: int, n_max: int, joins: int) -> Hypergraph:
    """Nested Hajos joins over the base shapes for the given k."""
    from hyperchrome import constructions as cons

    if k == 3:
        bases = [cons.odd_wheel(5), cons.complete_graph(4), cons.odd_wheel(7)]
    else:
        bases = [cons.complete_graph(k + 1)]
    g = rng.choice(bases)
    for _ in range(joins):
        other = rng.choice(bases)
        if g.n + other.n - 1 > n_max:
            break
        for _ in range(40):
            e1, e2 = rng.randrange(g.m), rng.randrange(other.m)
            v1, v2 = rng.choice(g.edge(e1)), rng.choice(other.edge(e2))
            include = rng.random() < 0.5
            try:
                g = cons.hajos_join(
                    cons.HajosJoinSpec(g, other, v1, v2, e1, e2, include)
                ).graph
                break
            except ValueError:
                continue
    return g
