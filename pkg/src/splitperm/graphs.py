"""Finite simple graphs with identity-preserving operations at desk scale.

Vertices are arbitrary hashable identifiers (ints for permutation graphs,
strings like "c3"/"i3" for the split-graph constructions); every derived
object keeps the original identities so embedding witnesses stay readable.
Search operations are exact backtracking with pruning; output order is
always determined by each graph's fixed vertex order.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Any, Hashable, Iterable, Iterator, Mapping

from .perms import Permutation

__all__ = [
    "Graph",
    "VertexMap",
    "permutation_graph",
    "connected_components",
    "find_induced_embedding",
    "iter_induced_embeddings",
    "graphs_isomorphic",
    "graph_to_json_dict",
    "graph_from_json_dict",
    "graph_to_dot",
]

Vertex = Hashable


class Graph:
    """Immutable simple undirected graph with ordered, identified vertices."""

    __slots__ = ("_vertices", "_index", "_adj", "_edge_count")

    def __init__(self, vertices: Iterable[Vertex],
                 edges: Iterable[tuple[Vertex, Vertex]] = ()) -> None:
        self._vertices: tuple[Vertex, ...] = tuple(vertices)
        self._index: dict[Vertex, int] = {v: i for i, v in enumerate(self._vertices)}
        if len(self._index) != len(self._vertices):
            raise ValueError("duplicate vertex identifiers")
        adj: dict[Vertex, set[Vertex]] = {v: set() for v in self._vertices}
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at {u!r}")
            if u not in adj or v not in adj:
                raise ValueError(f"edge ({u!r}, {v!r}) uses an unknown vertex")
            adj[u].add(v)
            adj[v].add(u)
        self._adj: dict[Vertex, frozenset] = {v: frozenset(ns) for v, ns in adj.items()}
        self._edge_count = sum(len(ns) for ns in self._adj.values()) // 2

    @property
    def vertices(self) -> tuple[Vertex, ...]:
        return self._vertices

    @property
    def vertex_count(self) -> int:
        return len(self._vertices)

    @property
    def edge_count(self) -> int:
        return self._edge_count

    def __contains__(self, v: Vertex) -> bool:
        return v in self._index

    def index_of(self, v: Vertex) -> int:
        return self._index[v]

    def neighbors(self, v: Vertex) -> frozenset:
        return self._adj[v]

    def degree(self, v: Vertex) -> int:
        return len(self._adj[v])

    def has_edge(self, u: Vertex, v: Vertex) -> bool:
        return v in self._adj[u]

    def edges(self) -> list[tuple[Vertex, Vertex]]:
        """Edges as pairs ordered by vertex position, deterministically."""
        out = []
        for i, u in enumerate(self._vertices):
            for v in self._vertices[i + 1:]:
                if v in self._adj[u]:
                    out.append((u, v))
        return out

    def subgraph(self, keep: Iterable[Vertex]) -> "Graph":
        """Induced subgraph; retained vertices keep their relative order."""
        keep_set = set(keep)
        unknown = keep_set - set(self._index)
        if unknown:
            raise ValueError(f"unknown vertices: {sorted(map(repr, unknown))}")
        vs = tuple(v for v in self._vertices if v in keep_set)
        edges = [(u, v) for u, v in self.edges() if u in keep_set and v in keep_set]
        return Graph(vs, edges)

    def is_clique(self, vs: Iterable[Vertex]) -> bool:
        vs = list(vs)
        return all(self.has_edge(u, v) for u, v in itertools.combinations(vs, 2))

    def is_independent_set(self, vs: Iterable[Vertex]) -> bool:
        vs = list(vs)
        return not any(self.has_edge(u, v) for u, v in itertools.combinations(vs, 2))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return (set(self._vertices) == set(other._vertices)
                and self._adj == other._adj)

    def __hash__(self) -> int:
        return hash((frozenset(self._vertices),
                     frozenset((v, ns) for v, ns in self._adj.items())))

    def __repr__(self) -> str:
        return f"Graph({self.vertex_count} vertices, {self.edge_count} edges)"


def permutation_graph(p: Permutation) -> Graph:
    """Inversion graph: vertices 1..n, values a < b adjacent iff b precedes a."""
    position = {v: i for i, v in enumerate(p.values)}
    vertices = range(1, p.n + 1)
    edges = [(a, b)
             for a in vertices for b in range(a + 1, p.n + 1)
             if position[b] < position[a]]
    return Graph(vertices, edges)


def connected_components(g: Graph) -> list[list[Vertex]]:
    """Component partition; components and members follow the vertex order."""
    seen: set[Vertex] = set()
    components: list[list[Vertex]] = []
    for root in g.vertices:
        if root in seen:
            continue
        stack = [root]
        seen.add(root)
        members = {root}
        while stack:
            x = stack.pop()
            for y in g.neighbors(x):
                if y not in seen:
                    seen.add(y)
                    members.add(y)
                    stack.append(y)
        components.append([v for v in g.vertices if v in members])
    return components


@dataclass
class VertexMap:
    """Injective vertex map witnessing induced-subgraph containment."""

    mapping: dict

    def validates(self, host: Graph, pattern: Graph) -> bool:
        """Re-check injectivity and the exact adjacency correspondence."""
        if set(self.mapping) != set(pattern.vertices):
            return False
        images = list(self.mapping.values())
        if len(set(images)) != len(images):
            return False
        if any(img not in host for img in images):
            return False
        for u, v in itertools.combinations(pattern.vertices, 2):
            if pattern.has_edge(u, v) != host.has_edge(self.mapping[u], self.mapping[v]):
                return False
        return True

    def compose(self, outer: "VertexMap") -> "VertexMap":
        """outer after self: pattern -> mid -> host."""
        return VertexMap({v: outer.mapping[img] for v, img in self.mapping.items()})

    def restrict(self, keep: Iterable) -> "VertexMap":
        keep_set = set(keep)
        return VertexMap({v: img for v, img in self.mapping.items() if v in keep_set})

    def to_json_pairs(self, pattern: Graph | None = None) -> list[list]:
        order = pattern.vertices if pattern is not None else sorted(
            self.mapping, key=repr)
        return [[v, self.mapping[v]] for v in order if v in self.mapping]


def iter_induced_embeddings(host: Graph, pattern: Graph,
                            allowed: Mapping[Vertex, Iterable[Vertex]] | None = None,
                            ) -> Iterator[VertexMap]:
    """Backtracking enumeration of induced embeddings, deterministic order.

    Pattern vertices are processed in their graph order; host candidates in
    host order, pruned by degree, by adjacency consistency with the partial
    map, and by the optional per-vertex ``allowed`` sets.
    """
    pvs = pattern.vertices
    if not pvs:
        yield VertexMap({})
        return
    allowed_sets: dict[Vertex, set] | None = None
    if allowed is not None:
        allowed_sets = {v: set(allowed[v]) for v in pvs}
    assignment: dict[Vertex, Vertex] = {}
    used: set[Vertex] = set()

    def candidates(pv: Vertex) -> Iterator[Vertex]:
        pdeg = pattern.degree(pv)
        for hv in host.vertices:
            if hv in used or host.degree(hv) < pdeg:
                continue
            if allowed_sets is not None and hv not in allowed_sets[pv]:
                continue
            ok = True
            for prev, img in assignment.items():
                if pattern.has_edge(pv, prev) != host.has_edge(hv, img):
                    ok = False
                    break
            if ok:
                yield hv

    def extend(i: int) -> Iterator[VertexMap]:
        pv = pvs[i]
        for hv in candidates(pv):
            assignment[pv] = hv
            used.add(hv)
            if i + 1 == len(pvs):
                yield VertexMap(dict(assignment))
            else:
                yield from extend(i + 1)
            used.discard(hv)
            del assignment[pv]

    yield from extend(0)


def find_induced_embedding(host: Graph, pattern: Graph,
                           allowed: Mapping[Vertex, Iterable[Vertex]] | None = None,
                           ) -> VertexMap | None:
    """First induced embedding in deterministic order, or None."""
    return next(iter_induced_embeddings(host, pattern, allowed), None)


def _refined_colours(g: Graph) -> dict[Vertex, int]:
    """Iterated neighbourhood-degree refinement (stable colouring)."""
    colour = {v: g.degree(v) for v in g.vertices}
    for _ in range(g.vertex_count):
        signature = {
            v: (colour[v], tuple(sorted(colour[u] for u in g.neighbors(v))))
            for v in g.vertices
        }
        palette = {sig: i for i, sig in enumerate(sorted(set(signature.values())))}
        fresh = {v: palette[signature[v]] for v in g.vertices}
        if fresh == colour:
            break
        colour = fresh
    return colour


def graphs_isomorphic(a: Graph, b: Graph) -> bool:
    """Exact isomorphism test by colour refinement plus backtracking."""
    if a.vertex_count != b.vertex_count or a.edge_count != b.edge_count:
        return False
    ca, cb = _refined_colours(a), _refined_colours(b)
    if sorted(ca.values()) != sorted(cb.values()):
        return False
    b_by_colour: dict[int, list[Vertex]] = {}
    for v, c in cb.items():
        b_by_colour.setdefault(c, []).append(v)

    order = sorted(a.vertices, key=lambda v: (ca[v], a.index_of(v)))
    assignment: dict[Vertex, Vertex] = {}
    used: set[Vertex] = set()

    def extend(i: int) -> bool:
        if i == len(order):
            return True
        av = order[i]
        for bv in b_by_colour.get(ca[av], []):
            if bv in used:
                continue
            if any(a.has_edge(av, prev) != b.has_edge(bv, img)
                   for prev, img in assignment.items()):
                continue
            assignment[av] = bv
            used.add(bv)
            if extend(i + 1):
                return True
            used.discard(bv)
            del assignment[av]
        return False

    return extend(0)


def graph_to_json_dict(g: Graph,
                       partition: Mapping[str, Iterable[Vertex]] | None = None,
                       ) -> dict[str, Any]:
    out: dict[str, Any] = {
        "n": g.vertex_count,
        "vertices": list(g.vertices),
        "edges": [[u, v] for u, v in g.edges()],
    }
    if partition is not None:
        out["partition"] = {key: list(partition[key])
                            for key in ("C1", "C2", "I1", "I2")}
    return out


def graph_from_json_dict(data: Mapping[str, Any]) -> tuple[Graph, dict | None]:
    """Load a graph (and its four-partition, if present) from JSON data."""
    vertices = [_freeze_id(v) for v in data["vertices"]]
    edges = [(_freeze_id(u), _freeze_id(v)) for u, v in data.get("edges", [])]
    g = Graph(vertices, edges)
    if "n" in data and data["n"] != g.vertex_count:
        raise ValueError("declared n does not match the vertex list")
    partition = None
    if "partition" in data:
        partition = {key: [_freeze_id(v) for v in data["partition"].get(key, [])]
                     for key in ("C1", "C2", "I1", "I2")}
    return g, partition


def _freeze_id(v: Any) -> Vertex:
    if isinstance(v, list):
        return tuple(v)
    return v


def _dot_id(v: Vertex) -> str:
    s = str(v)
    if s.isidentifier() or s.isdigit():
        return s
    return '"' + s.replace('"', r'\"') + '"'


def graph_to_dot(g: Graph, name: str = "G",
                 partition: Mapping[str, Iterable[Vertex]] | None = None) -> str:
    """Emit Graphviz DOT; class membership becomes a node attribute."""
    cls: dict[Vertex, str] = {}
    if partition is not None:
        for key in ("C1", "C2", "I1", "I2"):
            for v in partition.get(key, []):
                cls[v] = key
    lines = [f"graph {name} {{"]
    for v in g.vertices:
        attr = f' [class="{cls[v]}"]' if v in cls else ""
        lines.append(f"  {_dot_id(v)}{attr};")
    for u, v in g.edges():
        lines.append(f"  {_dot_id(u)} -- {_dot_id(v)};")
    lines.append("}")
    return "\n".join(lines) + "\n"
