"""Split graphs, the vicinal quasi-order, and symmetric extensions.

The vicinal quasi-order x <= y iff N(x) is contained in N(y) u {y} drives
everything here: threshold graphs are the graphs whose vertices form one
vicinal chain, and split graphs whose clique and independent sides each
split into two chains are exactly the split permutation graphs.  The
symmetric extension embeds any such graph, with all vertex identities
preserved, into one whose side pairs are universal threshold graphs.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator

from .graphs import Graph, Vertex, VertexMap

__all__ = [
    "SplitPartition",
    "LabelledSplitGraph",
    "SymmetricWitness",
    "UniversalThresholdGraph",
    "vicinal_leq",
    "vicinal_comparable",
    "dilworth_number",
    "min_vicinal_chain_partition",
    "is_threshold",
    "is_split",
    "universal_threshold",
    "universal_threshold_orderings",
    "symmetric_orderings",
    "find_four_partition",
    "symmetric_extension",
]


def vicinal_leq(g: Graph, x: Vertex, y: Vertex) -> bool:
    """N(x) <= N(y) u {y} (reflexive, transitive)."""
    if x not in g or y not in g:
        raise KeyError(f"unknown vertex in {x!r}, {y!r}")
    extra = g.neighbors(x) - g.neighbors(y)
    return not extra or extra == frozenset((y,))


def vicinal_comparable(g: Graph, x: Vertex, y: Vertex) -> bool:
    return vicinal_leq(g, x, y) or vicinal_leq(g, y, x)


def _incomparability(g: Graph) -> dict[Vertex, set[Vertex]]:
    incomp: dict[Vertex, set[Vertex]] = {v: set() for v in g.vertices}
    for x, y in itertools.combinations(g.vertices, 2):
        if not vicinal_comparable(g, x, y):
            incomp[x].add(y)
            incomp[y].add(x)
    return incomp


def dilworth_number(g: Graph) -> int:
    """Maximum size of a set of pairwise vicinal-incomparable vertices.

    Branch-and-bound over the incomparability adjacency; fine at desk scale.
    Agrees with :func:`min_vicinal_chain_partition` (Dilworth duality),
    which the tests cross-check on small graphs.
    """
    if g.vertex_count == 0:
        return 0
    incomp = _incomparability(g)
    best = 1

    def grow(candidates: list[Vertex], size: int) -> None:
        nonlocal best
        if size > best:
            best = size
        for i, v in enumerate(candidates):
            if size + len(candidates) - i <= best:
                return
            grow([u for u in candidates[i + 1:] if u in incomp[v]], size + 1)

    grow(list(g.vertices), 0)
    return best


def min_vicinal_chain_partition(g: Graph) -> int:
    """Minimum number of vicinal chains covering all vertices (exhaustive)."""
    vs = list(g.vertices)
    if not vs:
        return 0
    best = len(vs)

    def rec(i: int, chains: list[list[Vertex]]) -> None:
        nonlocal best
        if i == len(vs):
            best = min(best, len(chains))
            return
        if len(chains) >= best:
            return
        v = vs[i]
        for chain in chains:
            if all(vicinal_comparable(g, v, u) for u in chain):
                chain.append(v)
                rec(i + 1, chains)
                chain.pop()
        if len(chains) + 1 < best:
            chains.append([v])
            rec(i + 1, chains)
            chains.pop()

    rec(0, [])
    return best


def is_threshold(g: Graph) -> bool:
    """All vertex pairs vicinal-comparable, i.e. one vicinal chain."""
    return all(vicinal_comparable(g, x, y)
               for x, y in itertools.combinations(g.vertices, 2))


@dataclass(frozen=True)
class SplitPartition:
    """A clique/independent-set bipartition of all vertices."""

    clique: tuple[Vertex, ...]
    independent: tuple[Vertex, ...]

    def validates(self, g: Graph) -> bool:
        both = list(self.clique) + list(self.independent)
        return (sorted(map(repr, both)) == sorted(map(repr, g.vertices))
                and len(both) == g.vertex_count
                and g.is_clique(self.clique)
                and g.is_independent_set(self.independent))


def is_split(g: Graph) -> SplitPartition | None:
    """Find a clique/independent partition, or None.

    Greedy attempt first: the k highest-degree vertices where k is the last
    index with degree >= k-1.  If that fails, exact backtracking over
    clique-or-independent assignments in vertex order.
    """
    order = sorted(g.vertices, key=lambda v: (-g.degree(v), g.index_of(v)))
    k = 0
    for i, v in enumerate(order, start=1):
        if g.degree(v) >= i - 1:
            k = i
    candidate = SplitPartition(
        tuple(v for v in g.vertices if v in set(order[:k])),
        tuple(v for v in g.vertices if v in set(order[k:])))
    if candidate.validates(g):
        return candidate

    clique: list[Vertex] = []
    indep: list[Vertex] = []

    def rec(i: int) -> SplitPartition | None:
        if i == g.vertex_count:
            return SplitPartition(tuple(clique), tuple(indep))
        v = g.vertices[i]
        if all(g.has_edge(v, u) for u in clique):
            clique.append(v)
            found = rec(i + 1)
            clique.pop()
            if found:
                return found
        if not any(g.has_edge(v, u) for u in indep):
            indep.append(v)
            found = rec(i + 1)
            indep.pop()
            if found:
                return found
        return None

    return rec(0)


@dataclass(frozen=True)
class LabelledSplitGraph:
    """A split graph with a four-partition (C1, C2, I1, I2).

    Structural requirements (checked on construction): the four classes
    partition the vertex set, C1 u C2 is a clique and I1 u I2 an independent
    set.  The threshold conditions - G[C1 u I], G[C2 u I], G[C u I1] and
    G[C u I2] all threshold - are verified by :meth:`verify_conditions`;
    constructors in this package call it except on very large hosts, where
    the symmetry check stands in (tests cover the small cases).
    """

    graph: Graph
    c1: tuple[Vertex, ...]
    c2: tuple[Vertex, ...]
    i1: tuple[Vertex, ...]
    i2: tuple[Vertex, ...]

    def __post_init__(self) -> None:
        classes = (self.c1, self.c2, self.i1, self.i2)
        combined = [v for cls in classes for v in cls]
        if len(combined) != self.graph.vertex_count or len(set(combined)) != len(combined):
            raise ValueError("classes must partition the vertex set")
        if any(v not in self.graph for v in combined):
            raise ValueError("class member not in graph")
        if not self.graph.is_clique(self.clique):
            raise ValueError("C1 u C2 must be a clique")
        if not self.graph.is_independent_set(self.independent):
            raise ValueError("I1 u I2 must be an independent set")

    @property
    def clique(self) -> tuple[Vertex, ...]:
        return self.c1 + self.c2

    @property
    def independent(self) -> tuple[Vertex, ...]:
        return self.i1 + self.i2

    def class_of(self, v: Vertex) -> str:
        for name, members in (("C1", self.c1), ("C2", self.c2),
                              ("I1", self.i1), ("I2", self.i2)):
            if v in members:
                return name
        raise KeyError(v)

    def partition_dict(self) -> dict[str, list[Vertex]]:
        return {"C1": list(self.c1), "C2": list(self.c2),
                "I1": list(self.i1), "I2": list(self.i2)}

    def verify_conditions(self) -> bool:
        """Threshold conditions on both clique splits and both I splits."""
        g = self.graph
        i_all = set(self.independent)
        c_all = set(self.clique)
        return (is_threshold(g.subgraph(set(self.c1) | i_all))
                and is_threshold(g.subgraph(set(self.c2) | i_all))
                and is_threshold(g.subgraph(c_all | set(self.i1)))
                and is_threshold(g.subgraph(c_all | set(self.i2))))


def universal_threshold_orderings(g: Graph, clique_side: Iterable[Vertex],
                                  independent_side: Iterable[Vertex],
                                  ) -> tuple[tuple[Vertex, ...], tuple[Vertex, ...]] | None:
    """Orderings showing G restricted to the two sides is universal threshold.

    Returns (c_order, i_order) such that, within the side, the k-th
    independent vertex is adjacent to exactly the first k clique vertices;
    None when the structure is absent.  Requires equal side sizes and
    distinct side-degrees 1..m.
    """
    cs = list(clique_side)
    is_ = list(independent_side)
    m = len(cs)
    if len(is_) != m:
        return None
    if m == 0:
        return (), ()
    c_set = set(cs)
    i_set = set(is_)
    i_deg = {v: len(g.neighbors(v) & c_set) for v in is_}
    c_deg = {v: len(g.neighbors(v) & i_set) for v in cs}
    if sorted(i_deg.values()) != list(range(1, m + 1)):
        return None
    if sorted(c_deg.values()) != list(range(1, m + 1)):
        return None
    i_order = tuple(sorted(is_, key=lambda v: i_deg[v]))
    c_order = tuple(sorted(cs, key=lambda v: -c_deg[v]))
    prefix: set[Vertex] = set()
    for k, iv in enumerate(i_order, start=1):
        prefix.add(c_order[k - 1])
        if g.neighbors(iv) & c_set != prefix:
            return None
    return c_order, i_order


@dataclass(frozen=True)
class SymmetricWitness:
    """Orderings certifying that both side pairs are universal threshold."""

    labelled: LabelledSplitGraph
    c1_order: tuple[Vertex, ...]
    i1_order: tuple[Vertex, ...]
    c2_order: tuple[Vertex, ...]
    i2_order: tuple[Vertex, ...]


def symmetric_orderings(lsg: LabelledSplitGraph) -> SymmetricWitness | None:
    """Check the symmetry condition on a four-partitioned split graph."""
    side1 = universal_threshold_orderings(lsg.graph, lsg.c1, lsg.i1)
    if side1 is None:
        return None
    side2 = universal_threshold_orderings(lsg.graph, lsg.c2, lsg.i2)
    if side2 is None:
        return None
    return SymmetricWitness(lsg, side1[0], side1[1], side2[0], side2[1])


@dataclass(frozen=True)
class UniversalThresholdGraph:
    """The 2n-vertex threshold graph containing every n-vertex one."""

    graph: Graph
    clique_order: tuple[Vertex, ...]
    independent_order: tuple[Vertex, ...]


def universal_threshold(n: int) -> UniversalThresholdGraph:
    """Clique c1..cn, independent i1..in, with N(i_j) = {c_1..c_j}."""
    if n < 0:
        raise ValueError("n must be >= 0")
    cs = tuple(f"c{j}" for j in range(1, n + 1))
    is_ = tuple(f"i{j}" for j in range(1, n + 1))
    edges: list[tuple[Vertex, Vertex]] = list(itertools.combinations(cs, 2))
    for j in range(1, n + 1):
        edges.extend((is_[j - 1], cs[s]) for s in range(j))
    return UniversalThresholdGraph(Graph(cs + is_, edges), cs, is_)


def _subsets_lex(items: tuple[Vertex, ...]) -> Iterator[tuple[Vertex, ...]]:
    """All subsets ordered lexicographically by member positions."""
    n = len(items)
    masks = sorted(range(1 << n),
                   key=lambda m: tuple(i for i in range(n) if m >> i & 1))
    for m in masks:
        yield tuple(items[i] for i in range(n) if m >> i & 1)


def _iter_split_partitions(g: Graph) -> Iterator[SplitPartition]:
    for clique in _subsets_lex(g.vertices):
        if not g.is_clique(clique):
            continue
        rest = tuple(v for v in g.vertices if v not in set(clique))
        if g.is_independent_set(rest):
            yield SplitPartition(clique, rest)


def find_four_partition(g: Graph) -> LabelledSplitGraph | None:
    """Four-partition satisfying both threshold conditions, or None.

    Scans split partitions and, independently for the clique and the
    independent side, the lexicographically first two-way split whose parts
    pass the threshold condition.  A graph admits such a partition exactly
    when it is split with Dilworth number at most 2; anything else exhausts
    the search and returns None.  Deterministic, so repeated calls pick the
    same partition (the extension built from it depends on this choice).
    """
    for partition in _iter_split_partitions(g):
        c_all, i_all = set(partition.clique), set(partition.independent)
        c_split = None
        for c1 in _subsets_lex(partition.clique):
            c2 = tuple(v for v in partition.clique if v not in set(c1))
            if (is_threshold(g.subgraph(set(c1) | i_all))
                    and is_threshold(g.subgraph(set(c2) | i_all))):
                c_split = (c1, c2)
                break
        if c_split is None:
            continue
        for i1 in _subsets_lex(partition.independent):
            i2 = tuple(v for v in partition.independent if v not in set(i1))
            if (is_threshold(g.subgraph(c_all | set(i1)))
                    and is_threshold(g.subgraph(c_all | set(i2)))):
                return LabelledSplitGraph(g, c_split[0], c_split[1], i1, i2)
    return None


def _side_embedding(g: Graph, c_old: tuple[Vertex, ...], i_old: tuple[Vertex, ...],
                    ) -> tuple[dict[Vertex, int], dict[Vertex, int], int]:
    """Slot assignment embedding one side into its universal threshold graph.

    Returns (c_slots, i_slots, m) where slots are 1-based positions in the
    target universal threshold graph on 2m vertices, m = |C|+|I|.  A shared
    slot counter interleaves the two rows so that the independent vertex
    with side-degree d lands after exactly d clique images, even with
    repeated degrees.  Ties in side-degree are broken by full degree and
    then vertex order, keeping the cross-edge closure away from old pairs.
    """
    m = len(c_old) + len(i_old)
    c_set, i_set = set(c_old), set(i_old)
    i_side_deg = {v: len(g.neighbors(v) & c_set) for v in i_old}
    c_side_deg = {v: len(g.neighbors(v) & i_set) for v in c_old}
    i_sorted = sorted(i_old, key=lambda v: (i_side_deg[v], g.degree(v), g.index_of(v)))
    c_sorted = sorted(c_old, key=lambda v: (-c_side_deg[v], -g.degree(v), g.index_of(v)))

    c_slots: dict[Vertex, int] = {}
    i_slots: dict[Vertex, int] = {}
    slot = 0
    placed = 0
    for x in i_sorted:
        while placed < i_side_deg[x]:
            slot += 1
            c_slots[c_sorted[placed]] = slot
            placed += 1
        slot += 1
        i_slots[x] = slot
    for y in c_sorted[placed:]:
        slot += 1
        c_slots[y] = slot
    assert slot == m
    return c_slots, i_slots, m


def _cross_closure(inherited: list[tuple[int, int]], i_count: int,
                   ) -> dict[int, int]:
    """Monotone closure of inherited (i-slot, c-slot) cross edges.

    Result maps each i-slot p to the largest c-slot q that must be adjacent:
    any inherited edge (t, s) forces all (p, q) with p >= t and q <= s.
    """
    reach: dict[int, int] = {}
    best = 0
    by_islot: dict[int, int] = {}
    for t, s in inherited:
        by_islot[t] = max(by_islot.get(t, 0), s)
    for p in range(1, i_count + 1):
        best = max(best, by_islot.get(p, 0))
        if best:
            reach[p] = best
    return reach


def symmetric_extension(lsg: LabelledSplitGraph) -> tuple[SymmetricWitness, VertexMap]:
    """Extend an n-vertex four-partitioned graph to a symmetric one on 2n.

    Each side pair grows into a universal threshold graph on twice its size;
    cross edges between the new independent and clique rows are added by the
    monotone closure of the inherited edges so that both rows become vicinal
    chains again.  Postconditions are asserted, not trusted: the original
    graph must come back intact under the returned embedding, the result
    must satisfy all three structural conditions, and have exactly twice the
    input's vertices.
    """
    g = lsg.graph
    n = g.vertex_count

    c1_slots, i1_slots, m1 = _side_embedding(g, lsg.c1, lsg.i1)
    c2_slots, i2_slots, m2 = _side_embedding(g, lsg.c2, lsg.i2)
    assert m1 + m2 == n

    c1_names = tuple(f"c1_{t}" for t in range(1, m1 + 1))
    i1_names = tuple(f"i1_{t}" for t in range(1, m1 + 1))
    c2_names = tuple(f"c2_{t}" for t in range(1, m2 + 1))
    i2_names = tuple(f"i2_{t}" for t in range(1, m2 + 1))

    edges: list[tuple[Vertex, Vertex]] = []
    edges.extend(itertools.combinations(c1_names + c2_names, 2))
    for names_c, names_i, m in ((c1_names, i1_names, m1), (c2_names, i2_names, m2)):
        for t in range(1, m + 1):
            edges.extend((names_i[t - 1], names_c[s - 1]) for s in range(1, t + 1))

    inherited_12 = [(i1_slots[x], c2_slots[y])
                    for x in lsg.i1 for y in lsg.c2 if g.has_edge(x, y)]
    for p, q_max in _cross_closure(inherited_12, m1).items():
        edges.extend((i1_names[p - 1], c2_names[q - 1]) for q in range(1, q_max + 1))
    inherited_21 = [(i2_slots[x], c1_slots[y])
                    for x in lsg.i2 for y in lsg.c1 if g.has_edge(x, y)]
    for p, q_max in _cross_closure(inherited_21, m2).items():
        edges.extend((i2_names[p - 1], c1_names[q - 1]) for q in range(1, q_max + 1))

    extended = Graph(c1_names + c2_names + i1_names + i2_names, edges)
    embedding = VertexMap(
        {**{v: c1_names[t - 1] for v, t in c1_slots.items()},
         **{v: c2_names[t - 1] for v, t in c2_slots.items()},
         **{v: i1_names[t - 1] for v, t in i1_slots.items()},
         **{v: i2_names[t - 1] for v, t in i2_slots.items()}})

    result = LabelledSplitGraph(extended, c1_names, c2_names, i1_names, i2_names)
    if extended.vertex_count != 2 * n:
        raise AssertionError("extension size is not 2n")
    if not embedding.validates(extended, g):
        raise AssertionError("extension damaged the embedded original graph")
    if not result.verify_conditions():
        raise AssertionError("extension violates a threshold condition")
    witness = symmetric_orderings(result)
    if witness is None:
        raise AssertionError("extension is not symmetric")
    return witness, embedding
