"""Graph files.

::

    # comment
    signed                  (or: unsigned)
    vertices 3
    edge 1 2 -
    edge 2 3 +
    loop 1 -
    halfedge 3

Vertex labels are 1-based in files and 0-based in ``SignedGraph``.
"""

import re
from dataclasses import dataclass, field

from django.core.exceptions import ValidationError
from django.core.validators import RegexValidator

from .models import EdgeKind, Mode
from .sgraph import NEGATIVE, POSITIVE, SignedGraph, halfedge, link, loop, sign_symbol

SIGNS = {"+": POSITIVE, "-": NEGATIVE}

mode_validator = RegexValidator(
    regex=r"^(signed|unsigned)$",
    message="The first line must be 'signed' or 'unsigned'.",
)
vertices_validator = RegexValidator(
    regex=r"^vertices\s+(\d+)$",
    message="Expected 'vertices <n>'.",
)
edge_validator = RegexValidator(
    regex=r"^edge\s+(\d+)\s+(\d+)\s+([+-])$",
    message="Expected 'edge <v> <w> <+|->'.",
)
loop_validator = RegexValidator(
    regex=r"^loop\s+(\d+)\s+([+-])$",
    message="Expected 'loop <v> <+|->'.",
)
halfedge_validator = RegexValidator(
    regex=r"^halfedge\s+(\d+)$",
    message="Expected 'halfedge <v>'.",
)

DECLARATIONS = {
    "edge": edge_validator,
    "loop": loop_validator,
    "halfedge": halfedge_validator,
}


@dataclass(frozen=True)
class EdgeDeclaration:
    kind: EdgeKind
    vertices: tuple
    sign: int = None
    line: int = field(default=0, compare=False)

    def render(self):
        if self.kind == EdgeKind.LINK:
            return f"edge {self.vertices[0]} {self.vertices[1]} {sign_symbol(self.sign)}"
        if self.kind == EdgeKind.LOOP:
            return f"loop {self.vertices[0]} {sign_symbol(self.sign)}"
        return f"halfedge {self.vertices[0]}"


@dataclass(frozen=True)
class GraphDocument:
    mode: Mode
    vertex_count: int
    edges: tuple = ()
    source: str = field(default="", compare=False)

    def render(self):
        lines = [str(self.mode), f"vertices {self.vertex_count}"]
        lines.extend(edge.render() for edge in self.edges)
        return "\n".join(lines) + "\n"

    def to_graph(self):
        built = []
        for edge_id, declaration in enumerate(self.edges):
            ends = [v - 1 for v in declaration.vertices]
            if declaration.kind == EdgeKind.LINK:
                built.append(link(edge_id, ends[0], ends[1], declaration.sign))
            elif declaration.kind == EdgeKind.LOOP:
                built.append(loop(edge_id, ends[0], declaration.sign))
            else:
                built.append(halfedge(edge_id, ends[0]))
        return SignedGraph(
            tuple(range(self.vertex_count)),
            tuple(built),
            self.mode,
            tuple(str(v + 1) for v in range(self.vertex_count)),
        )


def _clean(raw):
    return raw.split("#", 1)[0].strip()


def _check(validator, text, number, errors):
    try:
        validator(text)
    except ValidationError as exc:
        errors.extend(f"line {number}: {message}" for message in exc.messages)
        return None
    return validator.regex.match(text)


def parse(text, source=""):
    """Parse graph-file text; every problem is reported with its line number."""
    errors = []
    mode = None
    vertex_count = None
    edges = []
    for number, raw in enumerate(text.splitlines(), start=1):
        line = re.sub(r"\s+", " ", _clean(raw))
        if not line:
            continue
        if mode is None:
            match = _check(mode_validator, line, number, errors)
            if match is None:
                break
            mode = Mode(match.group(1))
            continue
        if vertex_count is None:
            match = _check(vertices_validator, line, number, errors)
            if match is None:
                break
            vertex_count = int(match.group(1))
            continue
        keyword = line.split(" ", 1)[0]
        if keyword == "halfedge" and re.match(r"^halfedge\s+\d+\s+[+-]$", line):
            errors.append(f"line {number}: A halfedge carries no sign.")
            continue
        if keyword == "loose":
            errors.append(f"line {number}: Loose edges cannot be declared.")
            continue
        if keyword == "vertices":
            errors.append(f"line {number}: The vertex count is already declared.")
            continue
        validator = DECLARATIONS.get(keyword)
        if validator is None:
            errors.append(f"line {number}: Unknown keyword {keyword!r}.")
            continue
        match = _check(validator, line, number, errors)
        if match is None:
            continue
        declaration = _declaration(keyword, match, number)
        errors.extend(_validate(declaration, mode, vertex_count))
        edges.append(declaration)
    if not errors:
        if mode is None:
            errors.append("The file is empty; expected 'signed' or 'unsigned'.")
        elif vertex_count is None:
            errors.append("Missing 'vertices <n>' line.")
    if errors:
        raise ValidationError(errors)
    return GraphDocument(mode, vertex_count, tuple(edges), source)


def _declaration(keyword, match, number):
    if keyword == "edge":
        return EdgeDeclaration(
            EdgeKind.LINK,
            (int(match.group(1)), int(match.group(2))),
            SIGNS[match.group(3)],
            number,
        )
    if keyword == "loop":
        return EdgeDeclaration(EdgeKind.LOOP, (int(match.group(1)),), SIGNS[match.group(2)], number)
    return EdgeDeclaration(EdgeKind.HALFEDGE, (int(match.group(1)),), None, number)


def _validate(declaration, mode, vertex_count):
    errors = []
    if declaration.kind == EdgeKind.LINK and declaration.vertices[0] == declaration.vertices[1]:
        errors.append(
            f"line {declaration.line}: A link needs two distinct vertices; use 'loop' instead."
        )
    for v in declaration.vertices:
        if not 1 <= v <= vertex_count:
            errors.append(f"line {declaration.line}: Vertex {v} is outside 1..{vertex_count}.")
    if mode == Mode.UNSIGNED:
        if declaration.kind == EdgeKind.HALFEDGE:
            errors.append(f"line {declaration.line}: Unsigned graphs cannot have halfedges.")
        elif declaration.sign == NEGATIVE:
            errors.append(f"line {declaration.line}: Unsigned graphs cannot have negative edges.")
    return errors


def load(path):
    try:
        with open(path, encoding="utf-8") as handle:
            text = handle.read()
    except UnicodeDecodeError as exc:
        raise ValidationError(f"byte {exc.start}: The file is not UTF-8 text.") from exc
    return parse(text, source=str(path))


def from_graph(graph):
    """Document for a graph on vertices 0..n-1 (the inverse of ``to_graph``)."""
    declarations = []
    for edge in graph.edges:
        ends = tuple(v + 1 for v in edge.ends)
        declarations.append(EdgeDeclaration(edge.kind, ends, edge.sign))
    return GraphDocument(graph.mode, graph.order, tuple(declarations))
