"""The universal split permutation graph and checked embeddings into it.

The host on 4n^3 vertices is the split-graph image of the labelled universal
permutation.  Embedding an arbitrary n-vertex split permutation graph runs
the constructive pipeline end to end - four-partition, symmetric extension
to 2n vertices, read-back to a labelled permutation, labelled occurrence
search in the universal permutation, translation to host vertices - and
every map it returns has been re-validated against the induced-subgraph
condition.
"""
from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass, field

from .bijection import (
    SplitGraphImage,
    clique_vertex,
    graph_from_permutation,
    independent_vertex,
    labelled_induced_embedding,
    permutation_from_graph,
)
from .graphs import Graph, VertexMap, graphs_isomorphic, permutation_graph
from .perms import (
    LabelledPermutation,
    Permutation,
    contains_pattern,
    iter_labelled_pattern_witnesses,
)
from .split_graphs import (
    LabelledSplitGraph,
    dilworth_number,
    find_four_partition,
    is_split,
    symmetric_extension,
)
from .universal_perms import labelled_universal_permutation

__all__ = [
    "DEFAULT_SEED",
    "FalsificationError",
    "SplitPermutationError",
    "UniversalGraphBundle",
    "GraphUniversalityReport",
    "OptimalityReport",
    "SplitPermutationClass",
    "universal_split_graph",
    "embed_into_universal",
    "verify_universal_graph",
    "optimality_report",
    "split_permutation_graph_classes",
]

DEFAULT_SEED = 1729
EXHAUSTIVE_LIMIT = 4
DEFAULT_SAMPLE_SIZE = 200
WITNESS_SAMPLE_LIMIT = 10


class SplitPermutationError(ValueError):
    """The input graph is not a split permutation graph."""


class FalsificationError(RuntimeError):
    """A constructive claim failed verification; carries the counterexample."""


@dataclass(frozen=True)
class UniversalGraphBundle:
    """The universal host graph together with its construction data."""

    n: int
    labelled: LabelledSplitGraph
    source: LabelledPermutation
    element_map: dict[int, tuple[str, str]]

    @property
    def graph(self) -> Graph:
        return self.labelled.graph


def universal_split_graph(n: int) -> UniversalGraphBundle:
    """Image of the labelled universal permutation; exactly 4n^3 vertices."""
    if n < 1:
        raise ValueError("n must be >= 1")
    source = labelled_universal_permutation(n)
    image: SplitGraphImage = graph_from_permutation(source)
    if image.graph.vertex_count != 4 * n ** 3:
        raise AssertionError(
            f"expected {4 * n ** 3} vertices, built {image.graph.vertex_count}")
    return UniversalGraphBundle(n, image.labelled, source, image.element_map)


def _pad_name(g: Graph, k: int) -> str:
    name = f"_pad{k}"
    while name in g:
        name = "_" + name
    return name


def _padded_partition(g: Graph, four: LabelledSplitGraph,
                      n: int) -> LabelledSplitGraph:
    """Add isolated independent vertices until the graph has n vertices."""
    pads = []
    padded = g
    for k in range(1, n - g.vertex_count + 1):
        pads.append(_pad_name(padded, k))
        padded = Graph(padded.vertices + (pads[-1],), padded.edges())
    return LabelledSplitGraph(padded, four.c1, four.c2,
                              four.i1 + tuple(pads), four.i2)


def embed_into_universal(g: Graph, n: int,
                         bundle: UniversalGraphBundle | None = None) -> VertexMap:
    """Verified embedding of a split permutation graph into the 4n^3 host.

    Pipeline: four-partition the input (padding with isolated independent
    vertices up to n), extend symmetrically to 2n vertices, read off the
    corresponding labelled permutation, locate a label-respecting occurrence
    inside the universal permutation, and translate it back to host
    vertices.  Occurrences are enumerated until one passes direct
    re-validation; running out falsifies the universality claim.
    """
    if g.vertex_count > n:
        raise ValueError(f"graph has {g.vertex_count} > n = {n} vertices")
    four = find_four_partition(g)
    if four is None:
        raise SplitPermutationError("not a split permutation graph")
    padded = _padded_partition(g, four, n)

    witness, to_extension = symmetric_extension(padded)
    extension = witness.labelled
    perm = permutation_from_graph(extension)
    image = graph_from_permutation(perm)
    to_image = labelled_induced_embedding(image.labelled, extension)
    assert to_image is not None, "round-tripped image must embed its source"

    if bundle is None:
        bundle = universal_split_graph(n)
    host = bundle.graph
    source_values = bundle.source.perm.values
    position_of = {value: j for j, value in enumerate(perm.perm.values)}

    for occurrence in iter_labelled_pattern_witnesses(bundle.source, perm):
        translate: dict[str, str] = {}
        for value in range(1, perm.n + 1):
            text_value = source_values[occurrence.positions[position_of[value]] - 1]
            translate[clique_vertex(value)] = clique_vertex(text_value)
            translate[independent_vertex(value)] = independent_vertex(text_value)
        mapping = VertexMap({
            v: translate[to_image.mapping[to_extension.mapping[v]]]
            for v in g.vertices})
        if mapping.validates(host, g):
            return mapping
    raise FalsificationError(
        f"no labelled occurrence transfers to an induced embedding for n={n}: "
        f"graph {g!r}")


@dataclass(frozen=True)
class SplitPermutationClass:
    """One isomorphism class of split permutation graphs with its source."""

    graph: Graph
    source: Permutation


_FORBIDDEN_SOURCES = (Permutation((2, 1, 4, 3)), Permutation((3, 4, 1, 2)))


def split_permutation_graph_classes(n: int, method: str = "dilworth",
                                    ) -> list[SplitPermutationClass]:
    """Iso classes of n-vertex split permutation graphs, deterministically.

    ``method="dilworth"`` keeps permutation graphs that are split with
    Dilworth number at most 2; ``method="pattern"`` keeps graphs of source
    permutations avoiding both 2143 and 3412.  The two filters must agree
    class-for-class, which the verification suite checks.
    """
    if method not in ("dilworth", "pattern"):
        raise ValueError(f"unknown method {method!r}")
    classes: list[SplitPermutationClass] = []
    for word in itertools.permutations(range(1, n + 1)):
        source = Permutation(word)
        if method == "pattern":
            if any(contains_pattern(source, f) for f in _FORBIDDEN_SOURCES):
                continue
            graph = permutation_graph(source)
        else:
            graph = permutation_graph(source)
            if is_split(graph) is None or dilworth_number(graph) > 2:
                continue
        if not any(graphs_isomorphic(graph, kept.graph) for kept in classes):
            classes.append(SplitPermutationClass(graph, source))
    return classes


@dataclass
class GraphUniversalityReport:
    """Outcome of embedding every (sampled) class into the universal host."""

    n: int
    universe_size: int
    checked: int
    all_contained: bool
    misses: list[str] = field(default_factory=list)
    witness_sample: list[dict] = field(default_factory=list)

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "universe_size": self.universe_size,
            "checked": self.checked,
            "all_contained": self.all_contained,
            "misses": self.misses,
            "witness_sample": self.witness_sample,
        }


def verify_universal_graph(n: int, sample_size: int | None = None,
                           seed: int = DEFAULT_SEED) -> GraphUniversalityReport:
    """Embed each n-vertex split permutation graph class into the host.

    Exhaustive through n = 4 by default; n >= 5 defaults to a seeded sample
    of 200 classes (capped at the universe size, which is smaller for n = 5,
    so the sample is effectively exhaustive there too).  Every embedding is
    re-validated; failures land in ``misses`` rather than being swallowed.
    """
    classes = split_permutation_graph_classes(n)
    universe = len(classes)
    if sample_size is None and n > EXHAUSTIVE_LIMIT:
        sample_size = DEFAULT_SAMPLE_SIZE
    if sample_size is not None and universe > sample_size:
        rng = random.Random(seed)
        classes = rng.sample(classes, sample_size)
        classes.sort(key=lambda cls: cls.source.values)

    bundle = universal_split_graph(n)
    misses: list[str] = []
    witness_sample: list[dict] = []
    for cls in classes:
        try:
            mapping = embed_into_universal(cls.graph, n, bundle=bundle)
        except (SplitPermutationError, FalsificationError) as exc:
            misses.append(f"source {cls.source.format()}: {exc}")
            continue
        if not mapping.validates(bundle.graph, cls.graph):
            misses.append(f"source {cls.source.format()}: invalid witness")
            continue
        if len(witness_sample) < WITNESS_SAMPLE_LIMIT:
            witness_sample.append({
                "source": cls.source.format(),
                "vertices": cls.graph.vertex_count,
                "map": mapping.to_json_pairs(cls.graph),
            })
    return GraphUniversalityReport(
        n=n,
        universe_size=universe,
        checked=len(classes),
        all_contained=not misses,
        misses=misses,
        witness_sample=witness_sample,
    )


EXACT_CLASS_COUNT_LIMIT = 6


@dataclass
class OptimalityReport:
    """Size of the universal host against the information-theoretic floor."""

    n: int
    universal_size: int
    class_count: int | None
    class_count_bound: float
    class_count_is_exact: bool
    ratio: float

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "universal_size": self.universal_size,
            "class_count": self.class_count,
            "class_count_bound": self.class_count_bound,
            "class_count_is_exact": self.class_count_is_exact,
            "ratio": self.ratio,
        }


def optimality_report(n: int) -> OptimalityReport:
    """Ratio n*log2|V| over max(log2 |X_n|, n*log2 n) for |V| = 4n^3.

    The class count is exact (by enumeration) through n = 6 and replaced by
    the n! upper bound beyond; order-optimality shows up as the ratio
    staying under a fixed constant as n grows.
    """
    if n < 2:
        raise ValueError("n must be >= 2")
    universal_size = 4 * n ** 3
    if n <= EXACT_CLASS_COUNT_LIMIT:
        count = len(split_permutation_graph_classes(n))
        bound = math.log2(count)
        exact = True
    else:
        count = None
        bound = math.log2(math.factorial(n))
        exact = False
    denominator = max(bound, n * math.log2(n))
    ratio = n * math.log2(universal_size) / denominator
    return OptimalityReport(n, universal_size, count, bound, exact, ratio)
