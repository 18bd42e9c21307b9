"""Seeded generators of small signed graphs for exhaustive checking."""

import itertools
import math
import random

from django.conf import settings

from .models import Mode
from .sgraph import NEGATIVE, POSITIVE, SignedGraph, halfedge, link, loop

ALL_KINDS = ("link+", "link-", "loop+", "loop-", "halfedge")
LINK_KINDS = ("link+", "link-")
UNSIGNED_KINDS = ("link+", "loop+")


def alphabet(n, kinds=ALL_KINDS):
    """Every single edge that can sit on vertices 0..n-1."""
    letters = []
    for v, w in itertools.combinations(range(n), 2):
        if "link+" in kinds:
            letters.append(("link", v, w, POSITIVE))
        if "link-" in kinds:
            letters.append(("link", v, w, NEGATIVE))
    for v in range(n):
        if "loop+" in kinds:
            letters.append(("loop", v, POSITIVE))
        if "loop-" in kinds:
            letters.append(("loop", v, NEGATIVE))
        if "halfedge" in kinds:
            letters.append(("halfedge", v))
    return letters


def _build(n, letters, mode):
    edges = []
    for edge_id, letter in enumerate(letters):
        kind = letter[0]
        if kind == "link":
            edges.append(link(edge_id, letter[1], letter[2], letter[3]))
        elif kind == "loop":
            edges.append(loop(edge_id, letter[1], letter[2]))
        else:
            edges.append(halfedge(edge_id, letter[1]))
    return SignedGraph(tuple(range(n)), tuple(edges), mode)


def _all(max_vertices, max_edges, kinds, mode):
    for n in range(max_vertices + 1):
        letters = alphabet(n, kinds)
        for m in range(max_edges + 1):
            if m and not letters:
                break
            for chosen in itertools.combinations_with_replacement(letters, m):
                yield _build(n, chosen, mode)


def family_size(max_vertices, max_edges, kinds=ALL_KINDS):
    total = 0
    for n in range(max_vertices + 1):
        size = len(alphabet(n, kinds))
        for m in range(max_edges + 1):
            if m and not size:
                break
            total += math.comb(size + m - 1, m) if size else 1
    return total


def exhaustive_graphs(max_vertices=4, max_edges=6, kinds=ALL_KINDS, cap=None, seed=None, mode=Mode.SIGNED):
    """All graphs as multisets of edges, down-sampled to ``cap`` when larger.

    The sample is a seeded reservoir, returned in generation order, so the
    same arguments always give the same list.
    """
    if cap is None:
        cap = getattr(settings, "SGCHROM_GENERATOR_CAP", 5000)
    if seed is None:
        seed = getattr(settings, "SGCHROM_GENERATOR_SEED", 0)
    graphs = _all(max_vertices, max_edges, kinds, Mode(mode))
    if family_size(max_vertices, max_edges, kinds) <= cap:
        return list(graphs)
    rng = random.Random(seed)
    reservoir = []
    for index, graph in enumerate(graphs):
        if index < cap:
            reservoir.append((index, graph))
            continue
        slot = rng.randrange(index + 1)
        if slot < cap:
            reservoir[slot] = (index, graph)
    return [graph for _, graph in sorted(reservoir, key=lambda item: item[0])]


def random_graph(rng, max_vertices=4, max_edges=6, kinds=ALL_KINDS, mode=Mode.SIGNED):
    n = rng.randint(1, max_vertices)
    letters = alphabet(n, kinds)
    m = rng.randint(0, max_edges) if letters else 0
    return _build(n, [rng.choice(letters) for _ in range(m)], Mode(mode))


def random_switching(graph, rng):
    return {v: rng.choice((POSITIVE, NEGATIVE)) for v in graph.vertices}


def link_only(graphs):
    return [g for g in graphs if g.is_link_only]


def simple(graphs):
    return [g for g in graphs if g.is_simple]
