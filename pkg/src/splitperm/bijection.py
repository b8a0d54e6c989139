"""The bijection between labelled 321-avoiders and symmetric split graphs.

A labelled permutation of length n maps to a split graph on clique c1..cn
and independent set i1..in: an element v labelled 1 connects i_v to the
clique vertices of all values up to v, while an element labelled 2 connects
i_v to the clique vertices of the elements appearing up to v's position.
The inverse reads the permutation back off independent-vertex degrees.
Both directions are checked on every call (symmetry witness, degree
invariants, and a full round-trip respectively).
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass

from .graphs import Graph, Vertex, VertexMap, find_induced_embedding
from .perms import LabelledPermutation, Permutation, contains_labelled_pattern
from .split_graphs import LabelledSplitGraph, symmetric_orderings

__all__ = [
    "SplitGraphImage",
    "graph_from_permutation",
    "permutation_from_graph",
    "labelled_induced_embedding",
    "labelled_graphs_isomorphic",
    "containment_transfer_agrees",
    "clique_vertex",
    "independent_vertex",
]

# Full threshold-condition validation is quadratic; above this many vertices
# the (always-run) symmetry and degree checks stand in, and tests cover the
# conditions on small instances.
FULL_CONDITION_CHECK_LIMIT = 300


def clique_vertex(value: int) -> str:
    return f"c{value}"


def independent_vertex(value: int) -> str:
    return f"i{value}"


@dataclass(frozen=True)
class SplitGraphImage:
    """Image of a labelled permutation: the graph plus the element map."""

    labelled: LabelledSplitGraph
    element_map: dict[int, tuple[str, str]]

    @property
    def graph(self) -> Graph:
        return self.labelled.graph


def graph_from_permutation(lp: LabelledPermutation) -> SplitGraphImage:
    """Forward direction of the bijection (2n vertices from length n)."""
    n = lp.n
    values = lp.perm.values
    cs = tuple(clique_vertex(v) for v in range(1, n + 1))
    is_ = tuple(independent_vertex(v) for v in range(1, n + 1))

    def edge_source() -> itertools.chain:
        clique_edges = itertools.combinations(cs, 2)
        cross_edges = (
            (independent_vertex(v), clique_vertex(w))
            for j, v in enumerate(values, start=1)
            for w in (range(1, v + 1) if lp.label_of(v) == 1 else values[:j])
        )
        return itertools.chain(clique_edges, cross_edges)

    graph = Graph(cs + is_, edge_source())
    c1 = tuple(clique_vertex(v) for v in range(1, n + 1) if lp.label_of(v) == 1)
    c2 = tuple(clique_vertex(v) for v in range(1, n + 1) if lp.label_of(v) == 2)
    i1 = tuple(independent_vertex(v) for v in range(1, n + 1) if lp.label_of(v) == 1)
    i2 = tuple(independent_vertex(v) for v in range(1, n + 1) if lp.label_of(v) == 2)
    labelled = LabelledSplitGraph(graph, c1, c2, i1, i2)

    for side in (i1, i2):
        degs = [graph.degree(v) for v in side]
        if len(set(degs)) != len(degs):
            raise AssertionError("repeated independent degree within a class")
        if any(not 1 <= d <= n for d in degs):
            raise AssertionError("independent degree outside 1..n")
    if symmetric_orderings(labelled) is None:
        raise AssertionError("image is not symmetric")
    if graph.vertex_count <= FULL_CONDITION_CHECK_LIMIT:
        if not labelled.verify_conditions():
            raise AssertionError("image violates a threshold condition")

    return SplitGraphImage(labelled,
                           {v: (clique_vertex(v), independent_vertex(v))
                            for v in range(1, n + 1)})


def permutation_from_graph(sg: LabelledSplitGraph) -> LabelledPermutation:
    """Inverse direction; requires a symmetric four-partition.

    Label-1 values are the degrees of the I1 vertices; the remaining values,
    labelled 2, sit at the positions given by the I2 degrees, each class
    placed in increasing order.  The round trip through the forward map is
    asserted before returning.
    """
    if symmetric_orderings(sg) is None:
        raise ValueError("graph is not a symmetric labelled split graph")
    if sg.graph.vertex_count % 2:
        raise ValueError("vertex count must be 2n")
    n = sg.graph.vertex_count // 2
    if len(sg.clique) != n or len(sg.independent) != n:
        raise ValueError("clique and independent sides must both have n vertices")

    class1 = sorted(sg.graph.degree(v) for v in sg.i1)
    positions2 = sorted(sg.graph.degree(v) for v in sg.i2)
    class2 = sorted(set(range(1, n + 1)) - set(class1))
    if len(class1) + len(class2) != n:
        raise ValueError("independent degrees do not determine a permutation")

    values = [0] * n
    for pos, v in zip(positions2, class2):
        values[pos - 1] = v
    rest = iter(class1)
    for idx in range(n):
        if values[idx] == 0:
            values[idx] = next(rest)

    labels = [0] * n
    for v in class1:
        labels[v - 1] = 1
    for v in class2:
        labels[v - 1] = 2
    lp = LabelledPermutation(Permutation(tuple(values)), tuple(labels))

    if not labelled_graphs_isomorphic(graph_from_permutation(lp).labelled, sg):
        raise AssertionError("round trip does not reproduce the input graph")
    return lp


def _class_allowed(host: LabelledSplitGraph, pattern: LabelledSplitGraph,
                   ) -> dict[Vertex, tuple[Vertex, ...]]:
    """Each pattern vertex may only map into the host class of the same name."""
    host_classes = {"C1": host.c1, "C2": host.c2, "I1": host.i1, "I2": host.i2}
    return {v: host_classes[pattern.class_of(v)] for v in pattern.graph.vertices}


def labelled_induced_embedding(host: LabelledSplitGraph,
                               pattern: LabelledSplitGraph) -> VertexMap | None:
    """Induced embedding mapping each partition class into its counterpart."""
    return find_induced_embedding(host.graph, pattern.graph,
                                  _class_allowed(host, pattern))


def labelled_graphs_isomorphic(a: LabelledSplitGraph, b: LabelledSplitGraph) -> bool:
    """Isomorphism preserving all four partition classes."""
    if a.graph.vertex_count != b.graph.vertex_count:
        return False
    if any(len(x) != len(y) for x, y in ((a.c1, b.c1), (a.c2, b.c2),
                                         (a.i1, b.i1), (a.i2, b.i2))):
        return False
    return labelled_induced_embedding(b, a) is not None


def containment_transfer_agrees(lp1: LabelledPermutation,
                                lp2: LabelledPermutation) -> bool:
    """Does labelled pattern containment match labelled graph containment?

    True when the two sides agree (both contain or both do not); False is a
    falsification of the transfer property for this pair.
    """
    pattern_side = contains_labelled_pattern(lp1, lp2) is not None
    host_image = graph_from_permutation(lp1)
    pattern_image = graph_from_permutation(lp2)
    graph_side = labelled_induced_embedding(host_image.labelled,
                                            pattern_image.labelled) is not None
    return pattern_side == graph_side
