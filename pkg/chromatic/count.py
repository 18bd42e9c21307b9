"""Brute-force oracles.

Every count here enumerates colorings straight from the definitions. They
are slow on purpose and serve as ground truth for the polynomial producers.
"""

import itertools
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, replace

from django.conf import settings

from .exceptions import ColoringError, GraphError
from .models import Mode, Palette
from .poly import BivarPoly
from .sgraph import NEGATIVE, induced_delete, is_antibalanced, components

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Coloring:
    colors: tuple
    palette: Palette
    bound: int

    @classmethod
    def of(cls, graph, colors, palette, k, l):
        if isinstance(colors, dict):
            missing = [v for v in graph.vertices if v not in colors]
            if missing:
                raise ColoringError(f"Coloring is not defined on vertex {missing[0]}.")
            colors = tuple(colors[v] for v in graph.vertices)
        colors = tuple(colors)
        if len(colors) != graph.order:
            raise ColoringError(
                f"Coloring has {len(colors)} colors for {graph.order} vertices."
            )
        allowed = set(Palette(palette).colors(k, l))
        for v, color in zip(graph.vertices, colors):
            if color not in allowed:
                raise ColoringError(f"Color {color} at vertex {v} is outside {Palette(palette).label}.")
        return cls(colors, Palette(palette), k + l)

    def at(self, graph, v):
        return self.colors[graph.vertices.index(v)]


@dataclass(frozen=True)
class _Rules:
    # Edges compiled to vertex positions for the enumeration loop.
    links: tuple
    positive_loops: tuple
    nonzero: tuple
    dead: bool
    unsigned: bool


def _compile(graph):
    index = {v: i for i, v in enumerate(graph.vertices)}
    links, positive_loops, nonzero = [], [], []
    dead = False
    unsigned = graph.mode == Mode.UNSIGNED
    for edge in graph.edges:
        if edge.is_loose:
            dead = True
        elif edge.is_link:
            if unsigned and edge.sign == NEGATIVE:
                raise GraphError(f"Unsigned graph has a negative edge {edge.id}.")
            v, w = edge.ends
            links.append((index[v], index[w], edge.sign))
        elif edge.is_positive_loop:
            positive_loops.append(index[edge.ends[0]])
        else:
            if unsigned:
                raise GraphError(
                    f"Unsigned graph cannot carry {edge.kind.label.lower()} {edge.id}."
                )
            nonzero.append(index[edge.ends[0]])
    return _Rules(tuple(links), tuple(positive_loops), tuple(nonzero), dead, unsigned)


def _passes(rules, colors, k):
    if rules.dead:
        return False
    for i in rules.nonzero:
        if colors[i] == 0:
            return False
    if rules.unsigned:
        for i in rules.positive_loops:
            if colors[i] <= k:
                return False
        for i, j, _ in rules.links:
            if colors[i] == colors[j] and colors[i] <= k:
                return False
        return True
    for i in rules.positive_loops:
        if abs(colors[i]) <= k:
            return False
    for i, j, sign in rules.links:
        if colors[i] == sign * colors[j] and abs(colors[i]) <= k:
            return False
    return True


def is_proper(graph, coloring, k):
    """Edge-by-edge propriety of ``coloring`` with the ">k" escape."""
    if not isinstance(coloring, Coloring):
        raise ColoringError("is_proper needs a Coloring; build one with Coloring.of().")
    if len(coloring.colors) != graph.order:
        raise ColoringError("Coloring does not cover the graph.")
    if coloring.bound < k:
        raise ColoringError(f"Palette bound {coloring.bound} is below k={k}.")
    return _passes(_compile(graph), coloring.colors, k)


def _count_slice(rules, palette, k, order, first_colors):
    total = 0
    for first in first_colors:
        for rest in itertools.product(palette, repeat=order - 1):
            if _passes(rules, (first,) + rest, k):
                total += 1
    return total


def _count(graph, palette, k, l, jobs=None):
    if k < 0 or l < 0:
        raise ColoringError(f"k and l must be non-negative, got k={k}, l={l}.")
    rules = _compile(graph)
    if rules.dead:
        return 0
    colors = Palette(palette).colors(k, l)
    if graph.order == 0:
        return 1
    jobs = jobs or getattr(settings, "SGCHROM_JOBS", 1) or 1
    if jobs <= 1 or len(colors) < 2:
        return _count_slice(rules, colors, k, graph.order, colors)
    # Partition on the first vertex's color; the sum does not depend on the split.
    chunks = [colors[i::jobs] for i in range(jobs) if colors[i::jobs]]
    with ProcessPoolExecutor(max_workers=len(chunks)) as pool:
        futures = [
            pool.submit(_count_slice, rules, colors, k, graph.order, chunk)
            for chunk in chunks
        ]
        return sum(future.result() for future in futures)


def _require_signed(graph, what):
    if graph.mode != Mode.SIGNED:
        raise GraphError(f"{what} colorings need a signed graph; use count_unsigned for unsigned ones.")


def count_signed(graph, k, l, jobs=None):
    _require_signed(graph, "Signed")
    return _count(graph, Palette.SIGNED, k, l, jobs)


def count_zero_free(graph, k, l, jobs=None):
    _require_signed(graph, "Zero-free")
    return _count(graph, Palette.ZERO_FREE, k, l, jobs)


def count_unsigned(graph, k, l, jobs=None):
    if graph.mode != Mode.UNSIGNED:
        graph = _as_unsigned(graph)
    return _count(graph, Palette.UNSIGNED, k, l, jobs)


def count_for(graph, palette, k, l, jobs=None):
    return {
        Palette.SIGNED: count_signed,
        Palette.ZERO_FREE: count_zero_free,
        Palette.UNSIGNED: count_unsigned,
    }[Palette(palette)](graph, k, l, jobs)


def _as_unsigned(graph):
    return replace(graph, mode=Mode.UNSIGNED)


def zaslavsky_signed(graph, k):
    return count_signed(graph, k, 0)


def zaslavsky_zero_free(graph, k):
    return count_zero_free(graph, k, 0)


def nowhere_zero_recount(graph, k, l):
    """Signed-range colorings that avoid 0 and are proper; must equal count_zero_free."""
    rules = _compile(graph)
    if rules.dead:
        return 0
    colors = Palette.SIGNED.colors(k, l)
    return sum(
        1
        for candidate in itertools.product(colors, repeat=graph.order)
        if 0 not in candidate and _passes(rules, candidate, k)
    )


def _link_neighbors(graph):
    adjacent = {v: set() for v in graph.vertices}
    for edge in graph.edges:
        if edge.is_link:
            v, w = edge.ends
            adjacent[v].add(w)
            adjacent[w].add(v)
    return adjacent


def vertex_subsets(vertices):
    for size in range(len(vertices) + 1):
        yield from itertools.combinations(vertices, size)


def independence_poly(graph):
    """Sum of x^|V-W| over independent W; x is the first variable.

    Only links make vertices adjacent; loops and halfedges are ignored.
    """
    adjacent = _link_neighbors(graph)
    coeffs = [0] * (graph.order + 1)
    for chosen in vertex_subsets(graph.vertices):
        chosen_set = set(chosen)
        if any(adjacent[v] & chosen_set for v in chosen):
            continue
        coeffs[graph.order - len(chosen)] += 1
    return BivarPoly.from_univariate(coeffs)


def antibalance_poly(graph):
    """Sum of x^|V(S)| y^c(S) over antibalanced induced subgraphs S = G - W."""
    terms = {}
    for removed in vertex_subsets(graph.vertices):
        rest = induced_delete(graph, removed)
        if not is_antibalanced(rest):
            continue
        key = (rest.order, len(components(rest)))
        terms[key] = terms.get(key, 0) + 1
    return BivarPoly(terms)
