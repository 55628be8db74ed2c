"""The DCP text format: a line-oriented description of colored posets.

Grammar (one declaration per line, ``#`` starts a comment):

    type vertex-poset | edge-lattice
    vertex NAME [color INT]
    edge NAME NAME [color INT]

Names match ``[A-Za-z0-9_.]+``.  A vertex-poset colors every vertex and no
edge; an edge-lattice colors every edge and no vertex.  ``emit`` writes the
canonical form (vertices in declaration order, edges sorted), so parsing an
emitted document reproduces the structure exactly whenever its labels fit
the name alphabet; labels that do not (products, duals) are rewritten
deterministically on output.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .errors import ParseError, ValidationError
from .paths import compute_rank
from .structures import EdgeColoredPoset, Structure, VertexColoredPoset

NAME_RE = re.compile(r"[A-Za-z0-9_.]+\Z")
KINDS = ("vertex-poset", "edge-lattice")


@dataclass
class DcpDocument:
    """Parsed declarations with their source lines, before semantic checks."""

    kind: str
    vertices: list[tuple[str, int | None, int]] = field(default_factory=list)
    edges: list[tuple[str, str, int | None, int]] = field(default_factory=list)


def _tokens(line: str) -> list[tuple[str, int]]:
    out = []
    col = 1
    for part in line.replace("\t", " ").split(" "):
        if part:
            out.append((part, col))
        col += len(part) + 1
    return out


def parse_document(text: str) -> DcpDocument:
    doc: DcpDocument | None = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].rstrip()
        if not line.strip():
            continue
        toks = _tokens(line)
        word, col = toks[0]
        if doc is None:
            if word != "type":
                raise ParseError("expected 'type vertex-poset' or 'type edge-lattice'", lineno, col)
            if len(toks) != 2 or toks[1][0] not in KINDS:
                raise ParseError(f"unknown structure kind (expected one of {', '.join(KINDS)})",
                                 lineno, toks[1][1] if len(toks) > 1 else col)
            doc = DcpDocument(kind=toks[1][0])
            continue
        if word == "type":
            raise ParseError("duplicate 'type' declaration", lineno, col)
        if word == "vertex":
            if len(toks) not in (2, 4):
                raise ParseError("expected 'vertex NAME [color INT]'", lineno, col)
            name, ncol = toks[1]
            if not NAME_RE.match(name):
                raise ParseError(f"invalid name {name!r}", lineno, ncol)
            color = None
            if len(toks) == 4:
                kw, kcol = toks[2]
                if kw != "color":
                    raise ParseError("expected 'color'", lineno, kcol)
                val, vcol = toks[3]
                if not val.isdigit():
                    raise ParseError(f"color must be a non-negative integer, got {val!r}", lineno, vcol)
                color = int(val)
            doc.vertices.append((name, color, lineno))
        elif word == "edge":
            if len(toks) not in (3, 5):
                raise ParseError("expected 'edge NAME NAME [color INT]'", lineno, col)
            a, acol = toks[1]
            b, bcol = toks[2]
            for nm, nc in ((a, acol), (b, bcol)):
                if not NAME_RE.match(nm):
                    raise ParseError(f"invalid name {nm!r}", lineno, nc)
            color = None
            if len(toks) == 5:
                kw, kcol = toks[3]
                if kw != "color":
                    raise ParseError("expected 'color'", lineno, kcol)
                val, vcol = toks[4]
                if not val.isdigit():
                    raise ParseError(f"color must be a non-negative integer, got {val!r}", lineno, vcol)
                color = int(val)
            doc.edges.append((a, b, color, lineno))
        else:
            raise ParseError(f"unknown declaration {word!r}", lineno, col)
    if doc is None:
        raise ParseError("empty document: missing 'type' line", 1)
    return doc


def document_to_structure(doc: DcpDocument) -> Structure:
    declared = {}
    for name, color, line in doc.vertices:
        if name in declared:
            raise ValidationError(f"duplicate vertex {name!r}", line)
        declared[name] = (color, line)
    for a, b, color, line in doc.edges:
        for nm in (a, b):
            if nm not in declared:
                raise ValidationError(f"edge references undeclared vertex {nm!r}", line)
    if doc.kind == "vertex-poset":
        for name, color, line in doc.vertices:
            if color is None:
                raise ValidationError(f"vertex {name!r} needs a color in a vertex-poset", line)
        for a, b, color, line in doc.edges:
            if color is not None:
                raise ValidationError("edges are uncolored in a vertex-poset", line)
        return VertexColoredPoset(
            [name for name, _, _ in doc.vertices],
            [(a, b) for a, b, _, _ in doc.edges],
            {name: color for name, color, _ in doc.vertices},
        )
    for name, color, line in doc.vertices:
        if color is not None:
            raise ValidationError("vertices are uncolored in an edge-lattice", line)
    for a, b, color, line in doc.edges:
        if color is None:
            raise ValidationError(f"edge {a!r} -> {b!r} needs a color in an edge-lattice", line)
    return EdgeColoredPoset(
        [name for name, _, _ in doc.vertices],
        [(a, b, c) for a, b, c, _ in doc.edges],
    )


def parse(text: str) -> Structure:
    """Parse DCP text into a validated structure."""
    return document_to_structure(parse_document(text))


def _safe_labels(structure: Structure) -> dict[str, str]:
    """Deterministic mapping of labels into the DCP name alphabet.

    Labels produced by the product and dual operations carry parentheses,
    commas, or stars; those are rewritten and collisions get numeric
    suffixes.  Labels already in the alphabet pass through unchanged.
    """
    mapping = {}
    used = set()
    for v in structure.vertices:
        if NAME_RE.match(v):
            cand = v
        else:
            cand = v.replace("(", "").replace(")", "").replace(",", ".").replace("*", ".d").replace(" ", "")
            cand = re.sub(r"[^A-Za-z0-9_.]", "_", cand) or "v"
        base = cand
        k = 2
        while cand in used:
            cand = f"{base}_{k}"
            k += 1
        used.add(cand)
        mapping[v] = cand
    return mapping


def emit(structure: Structure) -> str:
    """Canonical DCP text: vertices in id order, edges sorted."""
    safe = _safe_labels(structure)
    lines = []
    if isinstance(structure, VertexColoredPoset):
        lines.append("type vertex-poset")
        for v in structure.vertices:
            lines.append(f"vertex {safe[v]} color {structure.colors[v]}")
        order = structure.index_of
        for a, b in sorted(structure.covers, key=lambda e: (order(e[0]), order(e[1]))):
            lines.append(f"edge {safe[a]} {safe[b]}")
    else:
        lines.append("type edge-lattice")
        for v in structure.vertices:
            lines.append(f"vertex {safe[v]}")
        order = structure.index_of
        for a, b, c in sorted(structure.covers, key=lambda e: (order(e[0]), order(e[1]), e[2])):
            lines.append(f"edge {safe[a]} {safe[b]} color {c}")
    return "\n".join(lines) + "\n"


def render_dot(structure: Structure) -> str:
    """Deterministic Graphviz digraph; rank levels are grouped when ranked."""
    safe = _safe_labels(structure)
    lines = ["digraph poset {", "  rankdir=BT;", '  node [shape=ellipse, fontsize=10];']
    if isinstance(structure, VertexColoredPoset):
        for v in structure.vertices:
            lines.append(f'  "{safe[v]}" [label="{safe[v]}:{structure.colors[v]}"];')
    else:
        for v in structure.vertices:
            lines.append(f'  "{safe[v]}" [label="{safe[v]}"];')
    try:
        ranks = compute_rank(structure)
        by_level: dict[int, list[str]] = {}
        for v in structure.vertices:
            by_level.setdefault(ranks.rank[v], []).append(v)
        for level in sorted(by_level):
            row = "; ".join(f'"{safe[v]}"' for v in by_level[level])
            lines.append(f"  {{ rank=same; {row}; }}")
    except Exception:
        pass
    order = structure.index_of
    if isinstance(structure, VertexColoredPoset):
        for a, b in sorted(structure.covers, key=lambda e: (order(e[0]), order(e[1]))):
            lines.append(f'  "{safe[a]}" -> "{safe[b]}";')
    else:
        for a, b, c in sorted(structure.covers, key=lambda e: (order(e[0]), order(e[1]), e[2])):
            lines.append(f'  "{safe[a]}" -> "{safe[b]}" [label="{c}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
