import json

from django.core.exceptions import ValidationError
from django.core.management.base import BaseCommand, CommandError

from chromatic import count, dc, documents, orient, verification
from chromatic.exceptions import ChromaticError
from chromatic.models import Provenance
from chromatic.reports import render_pdf

METHODS = {
    "dc": Provenance.DELETION_CONTRACTION,
    "subset": Provenance.SUBSET_EXPANSION,
    "interp": Provenance.INTERPOLATION,
}


def _dump(payload):
    return json.dumps(payload, indent=2, sort_keys=True, ensure_ascii=False)


class Command(BaseCommand):
    help = "Compute and verify bivariate chromatic polynomials of signed graphs."

    def add_arguments(self, parser):
        subparsers = parser.add_subparsers(dest="subcommand", required=True)

        poly = subparsers.add_parser("poly", help="Print the bivariate chromatic polynomial.")
        poly.add_argument("file")
        poly.add_argument("--zero-free", action="store_true")
        poly.add_argument("--method", choices=sorted(METHODS), default="dc")
        poly.add_argument("--kl", action="store_true", help="Expand in the arguments k and l.")
        poly.add_argument("--json", action="store_true")
        poly.add_argument("--no-memo", action="store_true")
        poly.add_argument("--jobs", type=int)

        evaluate = subparsers.add_parser("eval", help="Evaluate the polynomial at (k, l).")
        evaluate.add_argument("file")
        evaluate.add_argument("-k", type=int, required=True)
        evaluate.add_argument("-l", type=int, required=True)
        evaluate.add_argument("--zero-free", action="store_true")
        evaluate.add_argument("--oracle", action="store_true", help="Also count colorings directly.")
        evaluate.add_argument("--json", action="store_true")
        evaluate.add_argument("--no-memo", action="store_true")
        evaluate.add_argument("--jobs", type=int)

        independence = subparsers.add_parser("independence", help="Print the independence polynomial.")
        independence.add_argument("file")

        antibalance = subparsers.add_parser("antibalance", help="Print the antibalanced-subgraph polynomial.")
        antibalance.add_argument("file")

        orientations = subparsers.add_parser("orientations", help="List orientations.")
        orientations.add_argument("file")
        orientations.add_argument("--acyclic", action="store_true")

        reciprocity = subparsers.add_parser("reciprocity", help="Check the reciprocity identity at (k, l).")
        reciprocity.add_argument("file")
        reciprocity.add_argument("-k", type=int, required=True)
        reciprocity.add_argument("-l", type=int, required=True)
        reciprocity.add_argument("--detail", action="store_true")

        verify = subparsers.add_parser("verify", help="Run the identity suite.")
        verify.add_argument("file")
        verify.add_argument("--kmax", type=int, default=3)
        verify.add_argument("--lmax", type=int, default=3)
        verify.add_argument("--json", action="store_true")
        verify.add_argument("--pdf")
        verify.add_argument("--jobs", type=int)

        show = subparsers.add_parser("show", help="Print the graph file in canonical form.")
        show.add_argument("file")

    def handle(self, *args, **options):
        document = self._load(options["file"])
        handler = getattr(self, f"do_{options['subcommand']}")
        try:
            handler(document, options)
        except ChromaticError as exc:
            raise CommandError(str(exc), returncode=2)

    def _load(self, path):
        try:
            return documents.load(path)
        except ValidationError as exc:
            raise CommandError("\n".join([f"{path}:"] + exc.messages), returncode=2)
        except OSError as exc:
            raise CommandError(f"Cannot read {path}: {exc.strerror or exc}", returncode=2)

    def _header(self, convention, provenance):
        self.stdout.write(f"# {convention.label} ({provenance})")

    def do_poly(self, document, options):
        graph = document.to_graph()
        convention = dc.convention_for(graph, options["zero_free"])
        result = dc.compute(
            graph,
            convention,
            METHODS[options["method"]],
            memo=not options["no_memo"],
            jobs=options["jobs"],
        )
        if options["json"]:
            payload = result.to_json()
            if options["kl"]:
                payload["kl_terms"] = result.kl().json_terms()
            self.stdout.write(_dump(payload))
            return
        self._header(convention, result.provenance)
        if options["kl"]:
            self.stdout.write(result.kl().render(names=("k", "l")))
        else:
            self.stdout.write(result.polynomial.render())

    def do_eval(self, document, options):
        graph = document.to_graph()
        k, l = options["k"], options["l"]
        if k < 0 or l < 0:
            raise CommandError("k and l must be non-negative.", returncode=2)
        convention = dc.convention_for(graph, options["zero_free"])
        result = dc.compute(graph, convention, memo=not options["no_memo"])
        value = result.evaluate(k, l)
        oracle = None
        if options["oracle"]:
            oracle = count.count_for(graph, dc.PALETTES[convention], k, l, options["jobs"])
        if options["json"]:
            payload = {"convention": str(convention), "k": k, "l": l, "value": str(value)}
            if oracle is not None:
                payload["oracle"] = str(oracle)
                payload["agree"] = oracle == value
            self.stdout.write(_dump(payload))
        else:
            self.stdout.write(str(value))
            if oracle is not None:
                self.stdout.write(f"oracle {oracle}: {'agree' if oracle == value else 'DISAGREE'}")
        if oracle is not None and oracle != value:
            raise CommandError(f"Polynomial gives {value} but {oracle} colorings were counted.", returncode=1)

    def do_independence(self, document, options):
        self.stdout.write("# independence polynomial, x marks a vertex outside the independent set")
        self.stdout.write(count.independence_poly(document.to_graph()).render(names=("x", "y")))

    def do_antibalance(self, document, options):
        self.stdout.write("# antibalanced induced subgraphs, x^vertices y^components")
        self.stdout.write(count.antibalance_poly(document.to_graph()).render(names=("x", "y")))

    def do_orientations(self, document, options):
        graph = document.to_graph()
        if options["acyclic"]:
            chosen = orient.acyclic_orientations(graph)
        else:
            chosen = list(orient.enumerate_orientations(graph))
        for orientation in chosen:
            self.stdout.write(orientation.describe(graph))
        total = 2 ** graph.size
        kind = "acyclic orientations" if options["acyclic"] else "orientations"
        self.stdout.write(f"{len(chosen)} {kind} of {total}")

    def do_reciprocity(self, document, options):
        graph = document.to_graph()
        k, l = options["k"], options["l"]
        verdict = orient.check_reciprocity(graph, k, l)
        self.stdout.write(f"LHS {verdict.lhs}")
        self.stdout.write(f"RHS {verdict.rhs}")
        if options["detail"]:
            report = orient.multiplicity_report(graph, k, l)
            for weight, colorings in sorted(report.histogram.items()):
                self.stdout.write(f"weight {weight}: {colorings} colorings")
        self.stdout.write("PASS" if verdict.passed else "FAIL")
        if not verdict.passed:
            raise CommandError(f"{verdict.name} fails: {verdict.lhs} != {verdict.rhs}", returncode=1)

    def do_verify(self, document, options):
        graph = document.to_graph()
        report = verification.run_suite(graph, options["kmax"], options["lmax"], options["jobs"])
        if options["json"]:
            self.stdout.write(report.render_json())
        else:
            self.stdout.write(report.render_text())
        if options["pdf"]:
            polynomials = []
            for convention in verification.conventions_for(graph):
                # Standard PDF fonts have no Greek glyphs, so print the (k, l) form.
                result = dc.compute(graph, convention)
                polynomials.append((f"{convention} in k, l", result.kl().render(names=("k", "l"))))
            render_pdf(report, options["pdf"], polynomials)
        if not report.passed:
            raise CommandError("Verification failed.", returncode=1)

    def do_show(self, document, options):
        self.stdout.write(document.render(), ending="")
