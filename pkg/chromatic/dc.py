"""Polynomial producers for the bivariate chromatic polynomials.

Three independent routes give the same polynomial:

* deletion-contraction on edges, memoized on the graph's canonical key,
* the subset expansion over vertex sets colored with colors > k, built on
  univariate chromatic polynomials of the vertex-deleted subgraphs,
* interpolation of brute-force counts on a full (n+1) x (n+1) grid.
"""

import logging
import random
import threading
from dataclasses import dataclass

from django.conf import settings

from . import count
from .exceptions import ConventionError, GraphError
from .models import Convention, Mode, Palette, Provenance
from .poly import BivarPoly, interpolate_grid, kl_expansion
from .sgraph import (
    NEGATIVE,
    canonical_key,
    contract_edge,
    contraction_vertex,
    delete_edge,
    delete_vertex,
    induced_delete,
)

logger = logging.getLogger(__name__)

LAMBDA = BivarPoly.lam()
MU = BivarPoly.mu()

PALETTES = {
    Convention.SIGNED: Palette.SIGNED,
    Convention.ZERO_FREE: Palette.ZERO_FREE,
    Convention.UNSIGNED: Palette.UNSIGNED,
}


@dataclass(frozen=True)
class PolyResult:
    polynomial: BivarPoly
    convention: Convention
    provenance: Provenance

    def evaluate(self, k, l):
        """Value at the original arguments (k, l)."""
        return self.polynomial.evaluate(*self.convention.arguments(k, l))

    def agrees_with(self, other):
        if self.convention != other.convention:
            raise ConventionError(
                f"Cannot compare a {self.convention} polynomial with a {other.convention} one."
            )
        return self.polynomial == other.polynomial

    def kl(self):
        return kl_expansion(self.polynomial, self.convention)

    def to_json(self):
        return {
            "convention": str(self.convention),
            "provenance": str(self.provenance),
            "terms": self.polynomial.json_terms(),
        }


class MemoCache:
    """Map from (canonical key, convention) to polynomial.

    Reads and inserts happen under a lock. Two threads may compute the same
    entry; both store the same value. Past ``cap`` entries nothing new is
    stored and callers recompute.
    """

    def __init__(self, cap=None):
        self.cap = cap
        self.hits = 0
        self.misses = 0
        self._entries = {}
        self._lock = threading.Lock()
        self._warned = False

    def get(self, key):
        with self._lock:
            value = self._entries.get(key)
            if value is None:
                self.misses += 1
            else:
                self.hits += 1
            return value

    def put(self, key, value):
        with self._lock:
            if key in self._entries:
                return
            if self.cap is not None and len(self._entries) >= self.cap:
                if not self._warned:
                    logger.warning("Memo cap of %s entries reached; recomputing from here on.", self.cap)
                    self._warned = True
                return
            self._entries[key] = value

    def clear(self):
        with self._lock:
            self._entries.clear()
            self.hits = 0
            self.misses = 0
            self._warned = False

    def __len__(self):
        with self._lock:
            return len(self._entries)


class _NoCache:
    def get(self, key):
        return None

    def put(self, key, value):
        pass


_default_cache = None
_default_lock = threading.Lock()


def default_cache():
    global _default_cache
    with _default_lock:
        if _default_cache is None:
            _default_cache = MemoCache(getattr(settings, "SGCHROM_MEMO_CAP", None))
        return _default_cache


def reset_default_cache(cap=None):
    global _default_cache
    with _default_lock:
        _default_cache = MemoCache(cap)
        return _default_cache


def _resolve_cache(memo, cache):
    if not memo:
        return _NoCache()
    return cache if cache is not None else default_cache()


def _edge_rank(edge):
    if edge.is_link:
        return 0
    if edge.is_positive_loop:
        return 1
    return 2


def default_edge_order(graph):
    """Links first, then positive loops, then halfedges and negative loops; ties by id."""
    return min(graph.edges, key=lambda e: (_edge_rank(e), e.id))


def shuffled_edge_order(seed):
    """Edge choice that is random per graph but reproducible for a seed."""

    def choose(graph):
        rng = random.Random(f"{seed}:{canonical_key(graph)}")
        return rng.choice(sorted(graph.edges, key=lambda e: e.id))

    return choose


def _edgeless(graph):
    return (LAMBDA + MU) ** graph.order


class _Recursion:
    def __init__(self, convention, cache, choose):
        self.convention = convention
        self.cache = cache
        self.choose = choose or default_edge_order
        self.calls = 0

    def __call__(self, graph):
        if graph.has_loose_edge:
            return BivarPoly.zero()
        if graph.is_edgeless:
            return _edgeless(graph)
        key = (canonical_key(graph), str(self.convention), "bivariate")
        cached = self.cache.get(key)
        if cached is not None:
            return cached
        self.calls += 1
        edge = self.choose(graph)
        if edge.is_halfedge or edge.is_negative_loop:
            if self.convention == Convention.ZERO_FREE:
                result = self(delete_edge(graph, edge.id))
            else:
                result = self(delete_edge(graph, edge.id)) - self(contract_edge(graph, edge.id))
        else:
            contracted = contract_edge(graph, edge.id)
            v = contraction_vertex(graph, edge.id)
            result = (
                self(delete_edge(graph, edge.id))
                - self(contracted)
                + MU * self(delete_vertex(contracted, v))
            )
        self.cache.put(key, result)
        return result


def _run(graph, convention, memo, cache, policy):
    cache = _resolve_cache(memo, cache)
    recursion = _Recursion(convention, cache, policy)
    polynomial = recursion(graph)
    logger.debug(
        "%s deletion-contraction on %s vertices / %s edges: %s expansions, memo %s/%s hits/misses",
        convention, graph.order, graph.size, recursion.calls,
        getattr(cache, "hits", 0), getattr(cache, "misses", 0),
    )
    return PolyResult(polynomial, convention, Provenance.DELETION_CONTRACTION)


def poly_signed_dc(graph, memo=True, cache=None, policy=None):
    return _run(graph, Convention.SIGNED, memo, cache, policy)


def poly_zero_free_dc(graph, memo=True, cache=None, policy=None):
    return _run(graph, Convention.ZERO_FREE, memo, cache, policy)


def _require_unsigned(graph):
    for edge in graph.edges:
        if edge.is_halfedge or edge.is_loose:
            raise GraphError(f"Unsigned graph cannot carry {edge.kind.label.lower()} {edge.id}.")
        if edge.sign == NEGATIVE:
            raise GraphError(f"Unsigned graph has a negative edge {edge.id}.")


def poly_unsigned_dc(graph, memo=True, cache=None, policy=None):
    _require_unsigned(graph)
    return _run(graph, Convention.UNSIGNED, memo, cache, policy)


def zaslavsky_poly(graph, convention, memo=True, cache=None):
    """The l = 0 slice as a polynomial in λ, by its own deletion-contraction.

    Positive loops and loose edges kill every coloring; halfedges and
    negative loops forbid color 0 (vacuous when 0 is not in the palette).
    """
    convention = Convention(convention)
    if convention == Convention.UNSIGNED:
        _require_unsigned(graph)
    cache = _resolve_cache(memo, cache)

    def slice_of(current):
        if current.has_loose_edge or any(e.is_positive_loop for e in current.edges):
            return BivarPoly.zero()
        if current.is_edgeless:
            return LAMBDA ** current.order
        key = (canonical_key(current), str(convention), "slice")
        cached = cache.get(key)
        if cached is not None:
            return cached
        edge = default_edge_order(current)
        if convention == Convention.ZERO_FREE and (edge.is_halfedge or edge.is_negative_loop):
            result = slice_of(delete_edge(current, edge.id))
        else:
            result = slice_of(delete_edge(current, edge.id)) - slice_of(contract_edge(current, edge.id))
        cache.put(key, result)
        return result

    return slice_of(graph)


def _subset(graph, convention, memo, cache):
    total = BivarPoly.zero()
    for removed in count.vertex_subsets(graph.vertices):
        rest = induced_delete(graph, removed)
        total = total + (MU ** len(removed)) * zaslavsky_poly(rest, convention, memo, cache)
    return PolyResult(total, convention, Provenance.SUBSET_EXPANSION)


def poly_signed_subset(graph, memo=True, cache=None):
    return _subset(graph, Convention.SIGNED, memo, cache)


def poly_zero_free_subset(graph, memo=True, cache=None):
    return _subset(graph, Convention.ZERO_FREE, memo, cache)


def poly_unsigned_subset(graph, memo=True, cache=None):
    return _subset(graph, Convention.UNSIGNED, memo, cache)


def poly_interpolated(graph, convention, jobs=None):
    """Fit the brute-force counts for k, l = 0..n."""
    convention = Convention(convention)
    palette = PALETTES[convention]
    if convention == Convention.UNSIGNED:
        _require_unsigned(graph)
    n = graph.order
    values = {}
    for k in range(n + 1):
        for l in range(n + 1):
            values[convention.arguments(k, l)] = count.count_for(graph, palette, k, l, jobs)
    polynomial = interpolate_grid(values, n)
    return PolyResult(polynomial, convention, Provenance.INTERPOLATION)


PRODUCERS = {
    (Convention.SIGNED, Provenance.DELETION_CONTRACTION): poly_signed_dc,
    (Convention.ZERO_FREE, Provenance.DELETION_CONTRACTION): poly_zero_free_dc,
    (Convention.UNSIGNED, Provenance.DELETION_CONTRACTION): poly_unsigned_dc,
    (Convention.SIGNED, Provenance.SUBSET_EXPANSION): poly_signed_subset,
    (Convention.ZERO_FREE, Provenance.SUBSET_EXPANSION): poly_zero_free_subset,
    (Convention.UNSIGNED, Provenance.SUBSET_EXPANSION): poly_unsigned_subset,
}


def convention_for(graph, zero_free=False):
    if graph.mode == Mode.UNSIGNED:
        if zero_free:
            raise ConventionError("Unsigned graphs have no zero-free polynomial.")
        return Convention.UNSIGNED
    return Convention.ZERO_FREE if zero_free else Convention.SIGNED


def compute(graph, convention, provenance=Provenance.DELETION_CONTRACTION, memo=True, jobs=None):
    convention = Convention(convention)
    provenance = Provenance(provenance)
    if provenance == Provenance.INTERPOLATION:
        return poly_interpolated(graph, convention, jobs)
    return PRODUCERS[(convention, provenance)](graph, memo=memo)
