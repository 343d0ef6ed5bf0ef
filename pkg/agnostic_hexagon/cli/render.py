"""Text and SVG drawings of hexagon states.

Vertices are laid out with U on top, A and E on the upper corners, I and O
on the lower corners and Y at the bottom. Edges are drawn by relation kind:
implications as solid arrows, contrarieties dashed, subcontrarieties dotted
and contradictions as double lines. Modalities that hold are highlighted.
"""
import math
import xml.etree.ElementTree as ET
from dataclasses import dataclass
from typing import Dict, List, Mapping, Sequence, Tuple

from agnostic_hexagon.errors import ChainViolationError, HexagonStateError
from agnostic_hexagon.modality.hexagon import (
    HEXAGON_RELATIONS,
    OppositionRelation,
    RelationKind,
    check_hexagon,
    opposition_graph,
)
from agnostic_hexagon.modality.verdict import (
    ALL_MODALITIES,
    Modality,
    ModalVerdict,
    assignment_of,
    verdict_of,
)

SVG_NAMESPACE = "http://www.w3.org/2000/svg"
ET.register_namespace("", SVG_NAMESPACE)

STYLES = ("alethic", "probabilistic")

# unit positions, y pointing down
LAYOUT: Dict[Modality, Tuple[float, float]] = {
    Modality.U: (0.0, -1.0),
    Modality.A: (-math.sqrt(3) / 2, -0.5),
    Modality.E: (math.sqrt(3) / 2, -0.5),
    Modality.I: (-math.sqrt(3) / 2, 0.5),
    Modality.O: (math.sqrt(3) / 2, 0.5),
    Modality.Y: (0.0, 1.0),
}

EDGE_STYLES: Dict[RelationKind, Dict[str, str]] = {
    RelationKind.IMPLICATION: {"stroke": "#1f77b4", "marker-end": "url(#arrow)"},
    RelationKind.CONTRARIETY: {"stroke": "#d62728", "stroke-dasharray": "6,4"},
    RelationKind.SUBCONTRARIETY: {"stroke": "#2ca02c", "stroke-dasharray": "2,3"},
    RelationKind.CONTRADICTION: {"stroke": "#000000"},
}

ASCII_EDGES = {
    RelationKind.IMPLICATION: "──▶",
    RelationKind.CONTRARIETY: "- -",
    RelationKind.SUBCONTRARIETY: "· ·",
    RelationKind.CONTRADICTION: "═══",
}

HIGHLIGHT = "#ffdd57"


@dataclass(frozen=True)
class HexagonState:
    label: str
    assignment: Mapping[Modality, bool]
    style: str = "alethic"

    def __post_init__(self):
        if self.style not in STYLES:
            raise HexagonStateError(f"Unknown style {self.style!r}, available: {list(STYLES)}")
        violated = check_hexagon(self.assignment)
        if violated:
            raise HexagonStateError(
                f"State of {self.label} violates {[str(v) for v in violated]}."
            )

    @classmethod
    def from_verdict(
        cls, verdict: ModalVerdict, label: str = "H", style: str = "alethic"
    ) -> "HexagonState":
        return cls(label, assignment_of(verdict), style)

    @property
    def verdict(self) -> ModalVerdict:
        return verdict_of(dict(self.assignment))

    def holds(self, modality: Modality) -> bool:
        return bool(self.assignment[modality])

    def vertex_text(self, modality: Modality) -> str:
        symbol = modality.symbol if self.style == "alethic" else modality.probabilistic_symbol
        return f"{symbol}{self.label}"

    @property
    def true_modalities(self) -> List[Modality]:
        return [m for m in ALL_MODALITIES if self.holds(m)]


def _ascii_vertex(state: HexagonState, modality: Modality) -> str:
    text = state.vertex_text(modality)
    return f"[{text}]" if state.holds(modality) else f" {text} "


def _ascii_block(state: HexagonState, width: int = 36) -> List[str]:
    v = {m: _ascii_vertex(state, m) for m in ALL_MODALITIES}
    return [
        v[Modality.U].center(width).rstrip(),
        (v[Modality.A].ljust(width - len(v[Modality.E])) + v[Modality.E]).rstrip(),
        "",
        (v[Modality.I].ljust(width - len(v[Modality.O])) + v[Modality.O]).rstrip(),
        v[Modality.Y].center(width).rstrip(),
        "-" * width,
    ]


def _ascii_relations(relations: Sequence[OppositionRelation]) -> List[str]:
    return [
        f"  {r.source} {ASCII_EDGES[r.kind]} {r.target}  {r.kind.value}" for r in relations
    ]


def render_ascii(state: HexagonState) -> str:
    lines = [f"{state.style} hexagon of {state.label}: {state.verdict}"]
    lines.extend(_ascii_block(state))
    lines.append("holds: " + " ".join(state.vertex_text(m) for m in state.true_modalities))
    lines.extend(_ascii_relations(HEXAGON_RELATIONS))
    return "\n".join(lines) + "\n"


def _fmt(value: float) -> str:
    return f"{value:.2f}"


def _svg_root(width: float, height: float) -> ET.Element:
    root = ET.Element(
        f"{{{SVG_NAMESPACE}}}svg",
        {
            "width": _fmt(width),
            "height": _fmt(height),
            "viewBox": f"0 0 {_fmt(width)} {_fmt(height)}",
            "font-family": "DejaVu Sans, sans-serif",
        },
    )
    defs = ET.SubElement(root, f"{{{SVG_NAMESPACE}}}defs")
    marker = ET.SubElement(
        defs,
        f"{{{SVG_NAMESPACE}}}marker",
        {
            "id": "arrow",
            "viewBox": "0 0 10 10",
            "refX": "10",
            "refY": "5",
            "markerWidth": "6",
            "markerHeight": "6",
            "orient": "auto",
        },
    )
    ET.SubElement(marker, f"{{{SVG_NAMESPACE}}}path", {"d": "M 0 0 L 10 5 L 0 10 z"})
    return root


def _shorten(
    start: Tuple[float, float], end: Tuple[float, float], margin: float
) -> Tuple[Tuple[float, float], Tuple[float, float], Tuple[float, float]]:
    dx, dy = end[0] - start[0], end[1] - start[1]
    length = math.hypot(dx, dy)
    ux, uy = dx / length, dy / length
    return (
        (start[0] + ux * margin, start[1] + uy * margin),
        (end[0] - ux * margin, end[1] - uy * margin),
        (-uy, ux),
    )


def _svg_line(parent: ET.Element, start, end, attributes: Dict[str, str]) -> None:
    ET.SubElement(
        parent,
        f"{{{SVG_NAMESPACE}}}line",
        {
            "x1": _fmt(start[0]),
            "y1": _fmt(start[1]),
            "x2": _fmt(end[0]),
            "y2": _fmt(end[1]),
            "stroke-width": "1.5",
            **attributes,
        },
    )


def _svg_edge(parent: ET.Element, kind: RelationKind, start, end, margin: float) -> None:
    start, end, normal = _shorten(start, end, margin)
    attributes = EDGE_STYLES[kind]
    if kind is RelationKind.CONTRADICTION:
        for offset in (-2.0, 2.0):
            shift = (normal[0] * offset, normal[1] * offset)
            _svg_line(
                parent,
                (start[0] + shift[0], start[1] + shift[1]),
                (end[0] + shift[0], end[1] + shift[1]),
                attributes,
            )
    else:
        _svg_line(parent, start, end, attributes)


def _positions(center: Tuple[float, float], radius: float) -> Dict[Modality, Tuple[float, float]]:
    return {
        m: (center[0] + x * radius, center[1] + y * radius) for m, (x, y) in LAYOUT.items()
    }


def _svg_hexagon(
    parent: ET.Element, state: HexagonState, center: Tuple[float, float], radius: float
) -> Dict[Modality, Tuple[float, float]]:
    group = ET.SubElement(
        parent, f"{{{SVG_NAMESPACE}}}g", {"class": f"hexagon {state.style}"}
    )
    positions = _positions(center, radius)
    node_radius = max(radius / 6.0, 14.0)
    for source, target, kind in opposition_graph().edges(data="kind"):
        _svg_edge(group, kind, positions[source], positions[target], node_radius)
    for modality in ALL_MODALITIES:
        x, y = positions[modality]
        holds = state.holds(modality)
        ET.SubElement(
            group,
            f"{{{SVG_NAMESPACE}}}circle",
            {
                "cx": _fmt(x),
                "cy": _fmt(y),
                "r": _fmt(node_radius),
                "fill": HIGHLIGHT if holds else "#ffffff",
                "stroke": "#333333",
                "stroke-width": "2.5" if holds else "1",
            },
        )
        text = ET.SubElement(
            group,
            f"{{{SVG_NAMESPACE}}}text",
            {
                "x": _fmt(x),
                "y": _fmt(y + 4.0),
                "text-anchor": "middle",
                "font-size": "12",
                "font-weight": "bold" if holds else "normal",
            },
        )
        text.text = state.vertex_text(modality)
    return positions


def _svg_title(parent: ET.Element, x: float, y: float, content: str) -> None:
    title = ET.SubElement(
        parent,
        f"{{{SVG_NAMESPACE}}}text",
        {"x": _fmt(x), "y": _fmt(y), "text-anchor": "middle", "font-size": "14"},
    )
    title.text = content


def _to_string(root: ET.Element) -> str:
    ET.indent(root, space="  ")
    return ET.tostring(root, encoding="unicode") + "\n"


def render_svg(states: Sequence[HexagonState], radius: float = 110.0) -> str:
    """One hexagon per state, side by side."""
    cell = 2 * radius + 80
    root = _svg_root(cell * max(len(states), 1), cell + 30)
    for index, state in enumerate(states):
        center = (cell * index + cell / 2, cell / 2 + 30)
        _svg_title(root, center[0], 24, f"{state.label}: {state.verdict}")
        _svg_hexagon(root, state, center, radius)
    return _to_string(root)


def render_hexagon(state: HexagonState, format: str = "ascii") -> str:
    if format == "ascii":
        return render_ascii(state)
    if format == "svg":
        return render_svg([state])
    raise ValueError(f"Unknown format {format!r}, expected ascii or svg.")


def render_hexagons(states: Sequence[HexagonState], format: str = "ascii") -> str:
    if format == "ascii":
        return "\n".join(render_ascii(state) for state in states)
    if format == "svg":
        return render_svg(states)
    raise ValueError(f"Unknown format {format!r}, expected ascii or svg.")


# bridging implications from the outer (alethic) to the inner (probabilistic) hexagon
BRIDGES: Tuple[Tuple[str, Modality, str, Modality, str], ...] = (
    ("outer", Modality.A, "inner", Modality.A, "□H ⇒ ⊞H"),
    ("inner", Modality.I, "outer", Modality.I, "⟡H ⇒ ◇H"),
    ("outer", Modality.E, "inner", Modality.E, "¬◇H ⇒ ¬⟡H"),
    ("inner", Modality.O, "outer", Modality.O, "¬⊞H ⇒ ¬□H"),
)


def _check_nesting(outer: HexagonState, inner: HexagonState) -> None:
    if outer.style != "alethic" or inner.style != "probabilistic":
        raise HexagonStateError("Nesting expects an alethic outer and a probabilistic inner state.")
    states = {"outer": outer, "inner": inner}
    for source, source_modality, target, target_modality, name in BRIDGES:
        if states[source].holds(source_modality) and not states[target].holds(target_modality):
            raise ChainViolationError(name)


def render_nested(outer: HexagonState, inner: HexagonState, format: str = "ascii") -> str:
    _check_nesting(outer, inner)
    if format == "ascii":
        lines = [f"nested hexagons of {outer.label}: outer {outer.verdict}, inner {inner.verdict}"]
        lines.append("outer (alethic):")
        lines.extend(_ascii_block(outer))
        lines.append("inner (probabilistic):")
        lines.extend(_ascii_block(inner))
        lines.append("bridges:")
        lines.extend(f"  {name}" for *_, name in BRIDGES)
        return "\n".join(lines) + "\n"
    if format != "svg":
        raise ValueError(f"Unknown format {format!r}, expected ascii or svg.")
    return render_nested_svg([(outer, inner)])


NESTED_RADIUS = 150.0


def _svg_nested(
    root: ET.Element,
    outer: HexagonState,
    inner: HexagonState,
    center: Tuple[float, float],
    radius: float,
) -> None:
    _svg_title(root, center[0], 24, f"{outer.label}: {outer.verdict} / {inner.verdict}")
    positions = {
        "outer": _svg_hexagon(root, outer, center, radius),
        "inner": _svg_hexagon(root, inner, center, radius / 2),
    }
    bridges = ET.SubElement(root, f"{{{SVG_NAMESPACE}}}g", {"class": "bridges"})
    for source, source_modality, target, target_modality, _ in BRIDGES:
        _svg_edge(
            bridges,
            RelationKind.IMPLICATION,
            positions[source][source_modality],
            positions[target][target_modality],
            max(radius / 12.0, 14.0),
        )


def render_nested_svg(
    pairs: Sequence[Tuple[HexagonState, HexagonState]], radius: float = NESTED_RADIUS
) -> str:
    """One nested drawing per pair, side by side in a single document."""
    size = 2 * radius + 100
    root = _svg_root(size * max(len(pairs), 1), size + 20)
    for index, (outer, inner) in enumerate(pairs):
        _check_nesting(outer, inner)
        _svg_nested(root, outer, inner, (size * index + size / 2, size / 2 + 20), radius)
    return _to_string(root)


def render_nested_pairs(
    pairs: Sequence[Tuple[HexagonState, HexagonState]], format: str = "ascii"
) -> str:
    if format == "svg":
        return render_nested_svg(pairs)
    return "\n".join(render_nested(outer, inner, format=format) for outer, inner in pairs)
