"""Signed graphs with links, loops, halfedges and loose edges.

Graphs are immutable values. Every structural operation returns a new graph
and leaves its input untouched. Vertices are integer indices; the display
label of each vertex travels with it through deletions and contractions.
"""

import logging
from dataclasses import dataclass, field, replace

import networkx as nx

from .exceptions import GraphError
from .models import EdgeKind, Mode

logger = logging.getLogger(__name__)

POSITIVE = 1
NEGATIVE = -1


@dataclass(frozen=True)
class Edge:
    id: int
    kind: EdgeKind
    ends: tuple
    sign: int = None

    def __post_init__(self):
        if self.kind == EdgeKind.LINK:
            if len(self.ends) != 2 or self.ends[0] == self.ends[1]:
                raise GraphError(f"Link {self.id} needs two distinct endpoints, got {self.ends}.")
        elif self.kind in (EdgeKind.LOOP, EdgeKind.HALFEDGE):
            if len(self.ends) != 1:
                raise GraphError(f"{self.kind.label} {self.id} needs exactly one endpoint.")
        elif self.ends:
            raise GraphError(f"Loose edge {self.id} cannot have endpoints.")
        if self.kind in (EdgeKind.LINK, EdgeKind.LOOP):
            if self.sign not in (POSITIVE, NEGATIVE):
                raise GraphError(f"Edge {self.id} needs a sign of +1 or -1, got {self.sign}.")
        elif self.sign is not None:
            raise GraphError(f"{self.kind.label} {self.id} carries no sign.")

    @property
    def is_link(self):
        return self.kind == EdgeKind.LINK

    @property
    def is_loop(self):
        return self.kind == EdgeKind.LOOP

    @property
    def is_halfedge(self):
        return self.kind == EdgeKind.HALFEDGE

    @property
    def is_loose(self):
        return self.kind == EdgeKind.LOOSE

    @property
    def is_positive_loop(self):
        return self.is_loop and self.sign == POSITIVE

    @property
    def is_negative_loop(self):
        return self.is_loop and self.sign == NEGATIVE

    def touches(self, v):
        return v in self.ends

    def describe(self, label=str):
        if self.is_link:
            v, w = self.ends
            return f"edge {label(v)} {label(w)} {sign_symbol(self.sign)}"
        if self.is_loop:
            return f"loop {label(self.ends[0])} {sign_symbol(self.sign)}"
        if self.is_halfedge:
            return f"halfedge {label(self.ends[0])}"
        return "loose"


def sign_symbol(sign):
    return "+" if sign == POSITIVE else "-"


def link(edge_id, v, w, sign=POSITIVE):
    return Edge(edge_id, EdgeKind.LINK, (v, w), sign)


def loop(edge_id, v, sign=POSITIVE):
    return Edge(edge_id, EdgeKind.LOOP, (v,), sign)


def halfedge(edge_id, v):
    return Edge(edge_id, EdgeKind.HALFEDGE, (v,))


def loose(edge_id):
    return Edge(edge_id, EdgeKind.LOOSE, ())


@dataclass(frozen=True)
class SignedGraph:
    vertices: tuple
    edges: tuple
    mode: Mode = Mode.SIGNED
    labels: tuple = field(default=(), compare=False)

    def __post_init__(self):
        if tuple(sorted(set(self.vertices))) != tuple(self.vertices):
            raise GraphError(f"Vertex indices must be unique and sorted, got {self.vertices}.")
        present = set(self.vertices)
        ids = set()
        for edge in self.edges:
            if edge.id in ids:
                raise GraphError(f"Duplicate edge id {edge.id}.")
            ids.add(edge.id)
            missing = [v for v in edge.ends if v not in present]
            if missing:
                raise GraphError(f"Edge {edge.id} refers to missing vertex {missing[0]}.")
        if not self.labels:
            object.__setattr__(self, "labels", tuple(str(v + 1) for v in self.vertices))
        elif len(self.labels) != len(self.vertices):
            raise GraphError("Every vertex needs exactly one label.")

    @classmethod
    def build(cls, n, edges=(), mode=Mode.SIGNED, labels=None):
        """Graph on vertices 0..n-1 from ``(kind, ...)`` tuples.

        ``("link", v, w, sign)``, ``("loop", v, sign)``, ``("halfedge", v)``
        and ``("loose",)``; edge ids are assigned in order.
        """
        built = []
        for edge_id, spec in enumerate(edges):
            kind, *args = spec
            if kind == EdgeKind.LINK:
                built.append(link(edge_id, *args))
            elif kind == EdgeKind.LOOP:
                built.append(loop(edge_id, *args))
            elif kind == EdgeKind.HALFEDGE:
                built.append(halfedge(edge_id, *args))
            elif kind == EdgeKind.LOOSE:
                built.append(loose(edge_id))
            else:
                raise GraphError(f"Unknown edge kind {kind!r}.")
        return cls(tuple(range(n)), tuple(built), Mode(mode), tuple(labels or ()))

    @property
    def order(self):
        return len(self.vertices)

    @property
    def size(self):
        return len(self.edges)

    @property
    def is_edgeless(self):
        return not self.edges

    @property
    def has_loose_edge(self):
        return any(edge.is_loose for edge in self.edges)

    @property
    def is_link_only(self):
        return all(edge.is_link for edge in self.edges)

    @property
    def is_simple(self):
        if not self.is_link_only:
            return False
        pairs = [frozenset(edge.ends) for edge in self.edges]
        return len(pairs) == len(set(pairs))

    def label(self, v):
        return self.labels[self.vertices.index(v)]

    def edge(self, edge_id):
        for edge in self.edges:
            if edge.id == edge_id:
                return edge
        raise GraphError(f"Unknown edge id {edge_id}.")

    def _require_vertex(self, v):
        if v not in self.vertices:
            raise GraphError(f"Unknown vertex {v}.")

    def describe(self):
        lines = [str(self.mode), f"vertices {self.order}"]
        lines.extend(edge.describe(self.label) for edge in self.edges)
        return "\n".join(lines)


def delete_edge(graph, edge_id):
    graph.edge(edge_id)
    return replace(graph, edges=tuple(e for e in graph.edges if e.id != edge_id))


def delete_vertex(graph, v):
    """Remove ``v`` together with every edge incident to it.

    Loose edges have no endpoint and survive.
    """
    graph._require_vertex(v)
    keep = [i for i, u in enumerate(graph.vertices) if u != v]
    return SignedGraph(
        tuple(graph.vertices[i] for i in keep),
        tuple(e for e in graph.edges if not e.touches(v)),
        graph.mode,
        tuple(graph.labels[i] for i in keep),
    )


def induced_delete(graph, removed):
    removed = set(removed)
    unknown = removed - set(graph.vertices)
    if unknown:
        raise GraphError(f"Vertices {sorted(unknown)} are not in the graph.")
    result = graph
    for v in sorted(removed):
        result = delete_vertex(result, v)
    return result


def switch(graph, switching):
    missing = [v for v in graph.vertices if v not in switching]
    if missing:
        raise GraphError(f"Switching is not defined on vertex {missing[0]}.")
    bad = [v for v in graph.vertices if switching[v] not in (POSITIVE, NEGATIVE)]
    if bad:
        raise GraphError(f"Switching value at vertex {bad[0]} must be +1 or -1.")
    edges = []
    for edge in graph.edges:
        if edge.is_link:
            v, w = edge.ends
            edge = replace(edge, sign=switching[v] * edge.sign * switching[w])
        edges.append(edge)
    return replace(graph, edges=tuple(edges))


def negate(graph):
    return replace(
        graph,
        edges=tuple(
            replace(e, sign=-e.sign) if e.is_link or e.is_loop else e
            for e in graph.edges
        ),
    )


def strip_halfedges(graph):
    return replace(graph, edges=tuple(e for e in graph.edges if not e.is_halfedge))


def contraction_vertex(graph, edge_id):
    """The vertex a link or positive loop contracts to."""
    edge = graph.edge(edge_id)
    if edge.is_link:
        return min(edge.ends)
    if edge.is_positive_loop:
        return edge.ends[0]
    raise GraphError(f"Edge {edge_id} does not contract to a vertex.")


def contract_edge(graph, edge_id):
    edge = graph.edge(edge_id)
    if edge.is_loose:
        raise GraphError(f"Loose edge {edge_id} cannot be contracted.")
    if edge.is_positive_loop:
        return delete_edge(graph, edge_id)
    if edge.is_link:
        return _contract_link(graph, edge)
    return _contract_unbalanced(graph, edge)


def _contract_link(graph, edge):
    v, w = edge.ends
    keep, gone = min(v, w), max(v, w)
    switching = {u: POSITIVE for u in graph.vertices}
    switching[gone] = edge.sign
    switched = switch(graph, switching)
    edges = []
    for other in switched.edges:
        if other.id == edge.id:
            continue
        if other.touches(gone):
            ends = tuple(keep if u == gone else u for u in other.ends)
            if other.is_link and ends[0] == ends[1]:
                other = loop(other.id, keep, other.sign)
            else:
                other = replace(other, ends=ends)
        edges.append(other)
    index = graph.vertices.index(gone)
    return SignedGraph(
        graph.vertices[:index] + graph.vertices[index + 1:],
        tuple(edges),
        graph.mode,
        graph.labels[:index] + graph.labels[index + 1:],
    )


def _contract_unbalanced(graph, edge):
    # Negative loop or halfedge at v: v is discarded, links at v hang on as
    # halfedges, anything else at v cannot be colored and becomes loose.
    v = edge.ends[0]
    edges = []
    for other in graph.edges:
        if other.id == edge.id:
            continue
        if other.is_link and other.touches(v):
            (w,) = [u for u in other.ends if u != v]
            other = halfedge(other.id, w)
        elif other.touches(v):
            other = loose(other.id)
        edges.append(other)
    index = graph.vertices.index(v)
    return SignedGraph(
        graph.vertices[:index] + graph.vertices[index + 1:],
        tuple(edges),
        graph.mode,
        graph.labels[:index] + graph.labels[index + 1:],
    )


def to_networkx(graph):
    """Underlying multigraph: links and loops as edges keyed by id, halfedge counts as node data."""
    multigraph = nx.MultiGraph()
    for v in graph.vertices:
        multigraph.add_node(v, halfedges=0)
    for edge in graph.edges:
        if edge.is_link:
            multigraph.add_edge(*edge.ends, key=edge.id, sign=edge.sign)
        elif edge.is_loop:
            v = edge.ends[0]
            multigraph.add_edge(v, v, key=edge.id, sign=edge.sign)
        elif edge.is_halfedge:
            multigraph.nodes[edge.ends[0]]["halfedges"] += 1
    return multigraph


def components(graph):
    """Connected components as subgraphs; isolated vertices count, loose edges belong to none."""
    multigraph = to_networkx(graph)
    parts = sorted(nx.connected_components(multigraph), key=min)
    result = []
    for part in parts:
        keep = [i for i, v in enumerate(graph.vertices) if v in part]
        result.append(
            SignedGraph(
                tuple(graph.vertices[i] for i in keep),
                tuple(e for e in graph.edges if e.ends and e.ends[0] in part),
                graph.mode,
                tuple(graph.labels[i] for i in keep),
            )
        )
    return result


def balancing_switching(graph):
    """A switching making every link and loop positive, or None when unbalanced."""
    if any(e.is_halfedge or e.is_loose or e.is_negative_loop for e in graph.edges):
        return None
    multigraph = to_networkx(graph)
    switching = {}
    for part in nx.connected_components(multigraph):
        root = min(part)
        switching[root] = POSITIVE
        for parent, child in nx.bfs_edges(multigraph, root):
            sign = next(iter(multigraph.get_edge_data(parent, child).values()))["sign"]
            switching[child] = switching[parent] * sign
    for edge in graph.edges:
        if edge.is_link:
            v, w = edge.ends
            if switching[v] * switching[w] != edge.sign:
                return None
    return switching


def balanced_components(graph):
    return [balancing_switching(part) is not None for part in components(graph)]


def is_balanced(graph):
    if graph.has_loose_edge:
        return False
    return all(balanced_components(graph))


def is_antibalanced(graph):
    return is_balanced(negate(graph))


def relabel(graph, order):
    """Renumber vertices: ``order[v]`` is the new index of ``v``."""
    if sorted(order[v] for v in graph.vertices) != list(range(graph.order)):
        raise GraphError("Relabeling must be a bijection onto 0..n-1.")
    labels = dict(zip(graph.vertices, graph.labels))
    vertices = tuple(range(graph.order))
    inverse = {order[v]: v for v in graph.vertices}
    edges = tuple(replace(e, ends=tuple(order[u] for u in e.ends)) for e in graph.edges)
    return SignedGraph(vertices, edges, graph.mode, tuple(labels[inverse[i]] for i in vertices))


def canonical_key(graph):
    """Hashable structure key after dense renumbering in index order.

    No isomorphism or switching reduction: equal keys mean identical
    structure, which is all the memo needs.
    """
    dense = {v: i for i, v in enumerate(graph.vertices)}
    items = []
    for edge in graph.edges:
        ends = tuple(sorted(dense[u] for u in edge.ends))
        items.append((str(edge.kind), ends, edge.sign or 0))
    return (str(graph.mode), graph.order, tuple(sorted(items)))
