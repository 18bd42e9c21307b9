"""Orientations, compatibility with colorings, and the reciprocity checks.

An orientation is an incidence function η on edge ends: η = +1 when the
arrow at that end points into the vertex and -1 when it points away. On a
link or loop with sign σ the two ends satisfy σ = -η₁η₂.

An orientation is acyclic when no circuit of the signed graph is coherent
(one end in and one out at every vertex along it). The circuits are the
positive circles and the handcuffs: two negative circles meeting in one
vertex, or two disjoint negative circles joined by a path. A negative circle
alone always has a source or a sink. With all signs positive this is the
usual "no directed cycle".
"""

import itertools
import logging
from dataclasses import dataclass, field

from .count import Coloring
from .dc import poly_signed_dc, poly_unsigned_dc
from .exceptions import OrientationError
from .models import Mode, Palette
from .sgraph import induced_delete

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Orientation:
    # ((edge id, end position), η) pairs sorted by edge id then position.
    eta: tuple

    def at(self, edge_id, position=0):
        for (eid, pos), value in self.eta:
            if eid == edge_id and pos == position:
                return value
        raise OrientationError(f"No end {position} on edge {edge_id}.")

    def at_vertex(self, edge, v):
        return self.at(edge.id, edge.ends.index(v))

    def describe(self, graph):
        parts = []
        for edge in graph.edges:
            if edge.is_halfedge:
                parts.append(f"e{edge.id}:{_arrow(self.at(edge.id, 0))}")
            else:
                parts.append(
                    f"e{edge.id}:{_arrow(self.at(edge.id, 0))}{_arrow(self.at(edge.id, 1))}"
                )
        return " ".join(parts)


def _arrow(value):
    return "in" if value > 0 else "out"


@dataclass
class MultiplicityReport:
    total: int = 0
    histogram: dict = field(default_factory=dict)
    per_coloring: list = field(default_factory=list)

    def add(self, colors, weight, keep):
        self.total += weight
        self.histogram[weight] = self.histogram.get(weight, 0) + 1
        if keep:
            self.per_coloring.append((colors, weight))


@dataclass(frozen=True)
class Verdict:
    name: str
    lhs: int
    rhs: int

    @property
    def passed(self):
        return self.lhs == self.rhs


def enumerate_orientations(graph):
    if graph.has_loose_edge:
        raise OrientationError("Loose edges cannot be oriented.")
    choices = []
    for edge in graph.edges:
        if edge.is_halfedge:
            choices.append([(((edge.id, 0), eta),) for eta in (1, -1)])
        else:
            choices.append(
                [(((edge.id, 0), eta), ((edge.id, 1), -edge.sign * eta)) for eta in (1, -1)]
            )
    for picked in itertools.product(*choices):
        yield Orientation(tuple(end for ends in picked for end in ends))


def _require_links(graph, what):
    if not graph.is_link_only:
        raise OrientationError(f"{what} is only defined here for graphs whose edges are all links.")


def _circles(graph):
    """Simple cycles as (vertex list, edge list); edge i joins vertex i and i+1."""
    found = {}
    adjacency = {v: [] for v in graph.vertices}
    for edge in graph.edges:
        v, w = edge.ends
        adjacency[v].append((edge, w))
        adjacency[w].append((edge, v))

    def extend(start, path_vertices, path_edges):
        here = path_vertices[-1]
        for edge, there in adjacency[here]:
            if path_edges and edge.id == path_edges[-1].id:
                continue
            if there == start and path_edges:
                edges = path_edges + [edge]
                found.setdefault(frozenset(e.id for e in edges), (list(path_vertices), edges))
            elif there > start and there not in path_vertices:
                extend(start, path_vertices + [there], path_edges + [edge])

    for start in graph.vertices:
        extend(start, [start], [])
    return [found[key] for key in sorted(found, key=lambda ids: sorted(ids))]


def _incoherent(cycle, orientation):
    vertices, edges = cycle
    bad = []
    for i, v in enumerate(vertices):
        before, after = edges[i - 1], edges[i]
        if orientation.at_vertex(before, v) == orientation.at_vertex(after, v):
            bad.append(v)
    return bad


def _sign(edges):
    product = 1
    for edge in edges:
        product *= edge.sign
    return product


def _paths(graph, start, end, blocked):
    """Simple paths start -> end as edge lists, avoiding ``blocked`` inside."""
    adjacency = {v: [] for v in graph.vertices}
    for edge in graph.edges:
        v, w = edge.ends
        adjacency[v].append((edge, w))
        adjacency[w].append((edge, v))
    stack = [(start, [start], [])]
    while stack:
        here, seen, edges = stack.pop()
        for edge, there in adjacency[here]:
            if there == end:
                yield seen + [end], edges + [edge]
            elif there not in seen and there not in blocked:
                stack.append((there, seen + [there], edges + [edge]))


def _coherent_path(vertices, edges, orientation):
    for i in range(1, len(vertices) - 1):
        v = vertices[i]
        if orientation.at_vertex(edges[i - 1], v) == orientation.at_vertex(edges[i], v):
            return False
    return True


def _coherent_handcuff(graph, orientation, first, second):
    (c1, bad1, alpha1), (c2, bad2, alpha2) = first, second
    shared = set(c1[0]) & set(c2[0])
    if len(shared) > 1:
        return False
    if shared:
        (u,) = shared
        return bad1 == [u] and bad2 == [u] and alpha1 == -alpha2
    u1, u2 = bad1[0], bad2[0]
    blocked = set(c1[0]) | set(c2[0])
    for vertices, edges in _paths(graph, u1, u2, blocked):
        if orientation.at_vertex(edges[0], u1) != -alpha1:
            continue
        if orientation.at_vertex(edges[-1], u2) != -alpha2:
            continue
        if _coherent_path(vertices, edges, orientation):
            return True
    return False


def is_acyclic(graph, orientation, circles=None):
    _require_links(graph, "Acyclicity")
    circles = _circles(graph) if circles is None else circles
    negatives = []
    for cycle in circles:
        bad = _incoherent(cycle, orientation)
        if _sign(cycle[1]) > 0:
            if not bad:
                return False
            continue
        if len(bad) == 1:
            # The circle is coherent everywhere except at one vertex, where
            # both of its ends point the same way.
            u = bad[0]
            vertices, edges = cycle
            alpha = orientation.at_vertex(edges[vertices.index(u)], u)
            negatives.append((cycle, bad, alpha))
    for first, second in itertools.combinations(negatives, 2):
        if _coherent_handcuff(graph, orientation, first, second):
            return False
    return True


def acyclic_orientations(graph):
    _require_links(graph, "Acyclicity")
    circles = _circles(graph)
    return [o for o in enumerate_orientations(graph) if is_acyclic(graph, o, circles)]


def count_acyclic(graph):
    return len(acyclic_orientations(graph))


def _colors_of(graph, coloring):
    if isinstance(coloring, Coloring):
        return coloring.colors
    if isinstance(coloring, dict):
        return tuple(coloring[v] for v in graph.vertices)
    return tuple(coloring)


def is_compatible(graph, orientation, coloring):
    """η_v x_v + η_w x_w >= 0 on links; η_v x_v >= 0 on halfedges and negative loops."""
    colors = _colors_of(graph, coloring)
    position = {v: i for i, v in enumerate(graph.vertices)}
    for edge in graph.edges:
        if edge.is_link:
            v, w = edge.ends
            total = orientation.at(edge.id, 0) * colors[position[v]]
            total += orientation.at(edge.id, 1) * colors[position[w]]
            if total < 0:
                return False
        elif edge.is_halfedge or edge.is_negative_loop:
            if orientation.at(edge.id, 0) * colors[position[edge.ends[0]]] < 0:
                return False
    return True


def _check_parameters(k, l):
    if k < 1 or l < 0:
        raise OrientationError(f"Reciprocity needs k >= 1 and l >= 0, got k={k}, l={l}.")


def _high_vertices(graph, colors, k):
    return frozenset(v for v, c in zip(graph.vertices, colors) if abs(c) > k)


def multiplicity_report(graph, k, l, mode=None, detail=False):
    """Weights of all (k+l)-colorings.

    A coloring's weight is the number of acyclic orientations of G - W
    compatible with it, W being the vertices colored beyond k. Colorings
    entirely inside the k-cube count against G itself; colorings entirely
    outside it weigh 1.
    """
    mode = Mode(mode or graph.mode)
    _check_parameters(k, l)
    _require_links(graph, "Reciprocity")
    palette = Palette.UNSIGNED if mode == Mode.UNSIGNED else Palette.SIGNED
    remainders = {}
    report = MultiplicityReport()
    for colors in itertools.product(palette.colors(k, l), repeat=graph.order):
        high = _high_vertices(graph, colors, k)
        if high not in remainders:
            rest = induced_delete(graph, high)
            remainders[high] = (rest, acyclic_orientations(rest))
        rest, acyclic = remainders[high]
        kept = tuple(c for v, c in zip(graph.vertices, colors) if v not in high)
        weight = sum(1 for o in acyclic if is_compatible(rest, o, kept))
        report.add(colors, weight, detail)
    logger.debug("multiplicity report k=%s l=%s: %s remainders", k, l, len(remainders))
    return report


def reciprocity_rhs_unsigned(graph, k, l, detail=False):
    if graph.mode != Mode.UNSIGNED:
        raise OrientationError("Unsigned reciprocity needs an unsigned graph.")
    return multiplicity_report(graph, k, l, Mode.UNSIGNED, detail).total


def reciprocity_rhs_signed(graph, k, l, detail=False):
    if graph.mode != Mode.SIGNED:
        raise OrientationError("Signed reciprocity needs a signed graph.")
    return multiplicity_report(graph, k, l, Mode.SIGNED, detail).total


def reciprocity_lhs(graph, k, l, mode=None):
    mode = Mode(mode or graph.mode)
    parity = (-1) ** graph.order
    if mode == Mode.UNSIGNED:
        return parity * poly_unsigned_dc(graph).polynomial.evaluate(-k, -l)
    return parity * poly_signed_dc(graph).polynomial.evaluate(-(2 * k + 1), -2 * l)


def check_reciprocity(graph, k, l, mode=None):
    mode = Mode(mode or graph.mode)
    if mode != graph.mode:
        raise OrientationError(f"A {graph.mode} graph cannot be checked in {mode} mode.")
    _check_parameters(k, l)
    lhs = reciprocity_lhs(graph, k, l, mode)
    if mode == Mode.UNSIGNED:
        rhs = reciprocity_rhs_unsigned(graph, k, l)
    else:
        rhs = reciprocity_rhs_signed(graph, k, l)
    verdict = Verdict(f"{mode} reciprocity k={k} l={l}", lhs, rhs)
    logger.info("%s: lhs=%s rhs=%s", verdict.name, lhs, rhs)
    return verdict


def zaslavsky_special(graph):
    """(-1)^|V| P(λ=-1, μ=0) against the number of acyclic orientations."""
    if graph.mode != Mode.SIGNED:
        raise OrientationError("Zaslavsky's count needs a signed graph.")
    lhs = (-1) ** graph.order * poly_signed_dc(graph).polynomial.evaluate(-1, 0)
    return Verdict("acyclic orientations (signed)", lhs, count_acyclic(graph))


def stanley_special(graph):
    if graph.mode != Mode.UNSIGNED:
        raise OrientationError("Stanley's count needs an unsigned graph.")
    lhs = (-1) ** graph.order * poly_unsigned_dc(graph).polynomial.evaluate(-1, 0)
    return Verdict("acyclic orientations (unsigned)", lhs, count_acyclic(graph))
