"""The identity suite run by ``sgchrom verify``.

Each check compares two independent computations exactly. Checks that do
not apply to a graph (reciprocity on graphs with loops, the independence
identity on graphs with loops or halfedges) are reported as skipped.
"""

import json
import logging
import random
import time
from dataclasses import dataclass, field

from . import count, dc, orient
from .models import Convention, Mode
from .poly import BivarPoly, interpolate_univariate
from .sgraph import delete_vertex, sign_symbol, strip_halfedges, switch

logger = logging.getLogger(__name__)

PASS = "PASS"
FAIL = "FAIL"
SKIP = "SKIP"


@dataclass(frozen=True)
class CheckResult:
    name: str
    status: str
    detail: str = ""
    seconds: float = field(default=0.0, compare=False)

    @property
    def passed(self):
        return self.status != FAIL

    def to_json(self):
        return {"name": self.name, "status": self.status, "detail": self.detail}


@dataclass
class VerificationReport:
    summary: str
    checks: list = field(default_factory=list)

    @property
    def passed(self):
        return all(check.passed for check in self.checks)

    @property
    def counts(self):
        tally = {PASS: 0, FAIL: 0, SKIP: 0}
        for check in self.checks:
            tally[check.status] += 1
        return tally

    def render_text(self):
        lines = [self.summary]
        for check in self.checks:
            line = f"[{check.status}] {check.name}"
            if check.detail:
                line += f": {check.detail}"
            lines.append(line)
        tally = self.counts
        lines.append(
            f"{tally[PASS]} passed, {tally[FAIL]} failed, {tally[SKIP]} skipped"
            f" -> {'PASS' if self.passed else 'FAIL'}"
        )
        return "\n".join(lines)

    def render_json(self):
        return json.dumps(
            {
                "summary": self.summary,
                "passed": self.passed,
                "checks": [check.to_json() for check in self.checks],
            },
            indent=2,
            sort_keys=True,
            ensure_ascii=False,
        )


def _result(name, ok, detail=""):
    return CheckResult(name, PASS if ok else FAIL, detail)


def _mismatch(left, right):
    return f"{left} != {right}"


def agreement(first, second, name):
    ok = first.agrees_with(second)
    return _result(name, ok, "" if ok else _mismatch(first.polynomial, second.polynomial))


def oracle_agreement(graph, result, kmax, lmax, jobs=None):
    palette = dc.PALETTES[result.convention]
    for k in range(kmax + 1):
        for l in range(lmax + 1):
            expected = count.count_for(graph, palette, k, l, jobs)
            got = result.evaluate(k, l)
            if got != expected:
                return _result(
                    f"{result.convention} polynomial vs oracle",
                    False,
                    f"k={k} l={l}: polynomial {got}, oracle {expected}",
                )
    return _result(f"{result.convention} polynomial vs oracle", True, f"k<={kmax}, l<={lmax}")


def derivative_identity(graph, convention):
    """d/dμ P(G) equals the sum of P(G - v) over all vertices."""
    producer = dc.PRODUCERS[(convention, dc.Provenance.DELETION_CONTRACTION)]
    left = producer(graph).polynomial.d_dmu()
    right = BivarPoly.zero()
    for v in graph.vertices:
        right = right + producer(delete_vertex(graph, v)).polynomial
    ok = left == right
    return _result(f"{convention} derivative identity", ok, "" if ok else _mismatch(left, right))


def antibalance_side(graph):
    """Sum of μ^|W| 2^c(G-W) over antibalanced G-W, as a polynomial in μ.

    Halfedges are dropped first: they do not constrain zero-free colorings
    but would block antibalance.
    """
    reduced = strip_halfedges(graph)
    terms = {}
    for (kept, parts), coeff in count.antibalance_poly(reduced).terms:
        key = (0, reduced.order - kept)
        terms[key] = terms.get(key, 0) + coeff * 2 ** parts
    return BivarPoly(terms)


def antibalance_identity(graph):
    left = dc.poly_zero_free_dc(graph).polynomial.substitute_lambda(2)
    right = antibalance_side(graph)
    ok = left == right
    return _result("zero-free P(2, mu) vs antibalance sum", ok, "" if ok else _mismatch(left, right))


def independence_identity(graph):
    if not graph.is_link_only:
        return CheckResult("P(1, mu) vs independence polynomial", SKIP, "graph has loops or halfedges")
    left = dc.poly_signed_dc(graph).polynomial.substitute_lambda(1)
    right = count.independence_poly(graph).swap_variables()
    ok = left == right
    return _result("P(1, mu) vs independence polynomial", ok, "" if ok else _mismatch(left, right))


def independence_oracle(graph):
    """l -> count_signed(G, 0, l) interpolated, against i(2l)."""
    if not graph.is_link_only:
        return CheckResult("oracle at k=0 vs independence polynomial", SKIP, "graph has loops or halfedges")
    xs = [2 * l for l in range(graph.order + 1)]
    ys = [count.count_signed(graph, 0, l) for l in range(graph.order + 1)]
    left = interpolate_univariate(xs, ys)
    right = count.independence_poly(graph)
    ok = left == right
    return _result("oracle at k=0 vs independence polynomial", ok, "" if ok else _mismatch(left, right))


def slice_identity(graph, convention):
    """P(λ, 0) against Zaslavsky's polynomial, both by recursion and by oracle."""
    result = dc.PRODUCERS[(convention, dc.Provenance.DELETION_CONTRACTION)](graph)
    sliced = result.polynomial.lambda_slice()
    recursive = dc.zaslavsky_poly(graph, convention)
    palette = dc.PALETTES[convention]
    ks = range(graph.order + 1)
    xs = [convention.arguments(k, 0)[0] for k in ks]
    interpolated = interpolate_univariate(xs, [count.count_for(graph, palette, k, 0) for k in ks])
    ok = sliced == recursive == interpolated
    detail = "" if ok else f"slice {sliced}, recursion {recursive}, oracle {interpolated}"
    return _result(f"{convention} l=0 slice vs chromatic polynomial", ok, detail)


def switching_invariance(graph, rounds=3, seed=0):
    rng = random.Random(seed)
    base = dc.poly_signed_dc(graph)
    base_count = count.count_signed(graph, 1, 1)
    for _ in range(rounds):
        switching = {v: rng.choice((1, -1)) for v in graph.vertices}
        switched = switch(graph, switching)
        if not dc.poly_signed_dc(switched).agrees_with(base):
            return _result("switching invariance", False, f"polynomial changes under {switching}")
        if count.count_signed(switched, 1, 1) != base_count:
            return _result("switching invariance", False, f"count changes under {switching}")
        if graph.is_link_only and orient.count_acyclic(switched) != orient.count_acyclic(graph):
            return _result("switching invariance", False, f"acyclic count changes under {switching}")
    return _result("switching invariance", True, f"{rounds} switchings")


def policy_independence(graph, convention, seeds=(1, 2, 3)):
    producer = dc.PRODUCERS[(convention, dc.Provenance.DELETION_CONTRACTION)]
    base = producer(graph, memo=False)
    for seed in seeds:
        other = producer(graph, memo=False, policy=dc.shuffled_edge_order(seed))
        if not other.agrees_with(base):
            return _result(f"{convention} edge-order independence", False, f"seed {seed}: {other.polynomial}")
    return _result(f"{convention} edge-order independence", True, f"{len(seeds)} shuffled orders")


def memo_transparency(graph, convention):
    producer = dc.PRODUCERS[(convention, dc.Provenance.DELETION_CONTRACTION)]
    with_memo = producer(graph, cache=dc.MemoCache())
    without = producer(graph, memo=False)
    return agreement(with_memo, without, f"{convention} memo on/off")


def reciprocity_checks(graph, kmax, lmax):
    results = []
    name = f"{graph.mode} reciprocity"
    if not graph.is_link_only:
        return [CheckResult(name, SKIP, "graph has loops or halfedges")]
    for k in range(1, max(kmax, 1) + 1):
        for l in range(lmax + 1):
            verdict = orient.check_reciprocity(graph, k, l)
            if not verdict.passed:
                results.append(_result(name, False, f"k={k} l={l}: lhs {verdict.lhs}, rhs {verdict.rhs}"))
                return results
    results.append(_result(name, True, f"1<=k<={max(kmax, 1)}, l<={lmax}"))
    special = orient.stanley_special(graph) if graph.mode == Mode.UNSIGNED else orient.zaslavsky_special(graph)
    results.append(_result(special.name, special.passed, f"{special.lhs} vs {special.rhs}"))
    return results


def _timed(check, *args, **kwargs):
    started = time.perf_counter()
    outcome = check(*args, **kwargs)
    elapsed = time.perf_counter() - started
    outcomes = outcome if isinstance(outcome, list) else [outcome]
    timed = []
    for result in outcomes:
        timed.append(CheckResult(result.name, result.status, result.detail, elapsed))
        if result.status == SKIP:
            logger.warning("Skipped %s: %s", result.name, result.detail)
        else:
            logger.info("%s %s", result.status, result.name)
        logger.debug("%s took %.3fs", result.name, elapsed)
    return timed


def summarize(graph):
    kinds = {}
    for edge in graph.edges:
        key = str(edge.kind) + (sign_symbol(edge.sign) if edge.sign else "")
        kinds[key] = kinds.get(key, 0) + 1
    parts = ", ".join(f"{n} {kind}" for kind, n in sorted(kinds.items())) or "no edges"
    return f"{graph.mode} graph, {graph.order} vertices, {graph.size} edges ({parts})"


def conventions_for(graph):
    if graph.mode == Mode.UNSIGNED:
        return [Convention.UNSIGNED]
    return [Convention.SIGNED, Convention.ZERO_FREE]


def run_suite(graph, kmax=3, lmax=3, jobs=None):
    report = VerificationReport(summarize(graph))
    add = report.checks.extend
    for convention in conventions_for(graph):
        by_dc = dc.compute(graph, convention, dc.Provenance.DELETION_CONTRACTION)
        by_subset = dc.compute(graph, convention, dc.Provenance.SUBSET_EXPANSION)
        add(_timed(agreement, by_dc, by_subset, f"{convention} deletion-contraction vs subset expansion"))
        add(_timed(
            lambda: agreement(
                by_dc,
                dc.poly_interpolated(graph, convention, jobs),
                f"{convention} deletion-contraction vs interpolation",
            )
        ))
        add(_timed(oracle_agreement, graph, by_dc, kmax, lmax, jobs))
        add(_timed(slice_identity, graph, convention))
        add(_timed(derivative_identity, graph, convention))
        add(_timed(policy_independence, graph, convention))
        add(_timed(memo_transparency, graph, convention))
    if graph.mode == Mode.SIGNED:
        add(_timed(antibalance_identity, graph))
        add(_timed(independence_identity, graph))
        add(_timed(independence_oracle, graph))
        add(_timed(switching_invariance, graph))
        add(_timed(_zero_free_recount, graph, kmax, lmax))
    add(_timed(reciprocity_checks, graph, kmax, lmax))
    return report


def _zero_free_recount(graph, kmax, lmax):
    for k in range(kmax + 1):
        for l in range(lmax + 1):
            direct = count.count_zero_free(graph, k, l)
            filtered = count.nowhere_zero_recount(graph, k, l)
            if direct != filtered:
                return _result("zero-free count vs filtered signed count", False, f"k={k} l={l}: {direct} != {filtered}")
    return _result("zero-free count vs filtered signed count", True)
