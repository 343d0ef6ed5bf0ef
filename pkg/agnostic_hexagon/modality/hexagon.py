import itertools
from dataclasses import dataclass
from enum import Enum
from typing import Dict, List, Mapping, Tuple, Union

import networkx as nx

from agnostic_hexagon.errors import HexagonStateError
from agnostic_hexagon.modality.verdict import (
    ALL_MODALITIES,
    ALL_VERDICTS,
    Modality,
    assignment_of,
)

A, E, Y, I, O, U = (
    Modality.A,
    Modality.E,
    Modality.Y,
    Modality.I,
    Modality.O,
    Modality.U,
)


class RelationKind(Enum):
    IMPLICATION = "implication"
    CONTRARIETY = "contrariety"
    SUBCONTRARIETY = "subcontrariety"
    CONTRADICTION = "contradiction"

    @property
    def symmetric(self) -> bool:
        return self is not RelationKind.IMPLICATION


@dataclass(frozen=True)
class OppositionRelation:
    """An edge of the hexagon. For implications `source` points to `target`."""

    kind: RelationKind
    source: Modality
    target: Modality

    @property
    def endpoints(self) -> Tuple[Modality, Modality]:
        return self.source, self.target

    @property
    def key(self) -> Tuple:
        """Orientation-free identity for symmetric relations."""
        if self.kind.symmetric:
            return self.kind, frozenset(self.endpoints)
        return self.kind, self.source, self.target

    def holds(self, assignment: Mapping[Modality, bool]) -> bool:
        j, k = bool(assignment[self.source]), bool(assignment[self.target])
        if self.kind is RelationKind.IMPLICATION:
            return (not j) or k
        if self.kind is RelationKind.CONTRARIETY:
            return not (j and k)
        if self.kind is RelationKind.SUBCONTRARIETY:
            return j or k
        return j != k

    def __str__(self):
        if self.kind is RelationKind.IMPLICATION:
            return f"Implication {self.source}→{self.target}"
        return f"{self.kind.value.capitalize()}{{{self.source},{self.target}}}"


def _relations(kind: RelationKind, pairs: str) -> List[OppositionRelation]:
    return [
        OppositionRelation(kind, Modality(pair[0]), Modality(pair[1]))
        for pair in pairs.split()
    ]


HEXAGON_RELATIONS: Tuple[OppositionRelation, ...] = tuple(
    _relations(RelationKind.IMPLICATION, "AI EO AU EU YI YO")
    + _relations(RelationKind.CONTRARIETY, "AE AY EY")
    + _relations(RelationKind.SUBCONTRARIETY, "IO IU OU")
    + _relations(RelationKind.CONTRADICTION, "AO EI UY")
)


def hexagon_relations() -> List[OppositionRelation]:
    return list(HEXAGON_RELATIONS)


@dataclass(frozen=True)
class VertexDefinition:
    """Defines one of the two vertices added to the square: U = A ∨ E, Y = I ∧ O.

    The fifteen edges alone admit a fourth assignment (A, E, Y all false);
    these definitions rule it out.
    """

    vertex: Modality
    operands: Tuple[Modality, Modality]
    connective: str

    def holds(self, assignment: Mapping[Modality, bool]) -> bool:
        left, right = (bool(assignment[m]) for m in self.operands)
        value = (left or right) if self.connective == "or" else (left and right)
        return bool(assignment[self.vertex]) == value

    def __str__(self):
        left, right = self.operands
        return f"Definition {self.vertex} = {left} {self.connective} {right}"


VERTEX_DEFINITIONS: Tuple[VertexDefinition, ...] = (
    VertexDefinition(U, (A, E), "or"),
    VertexDefinition(Y, (I, O), "and"),
)


def check_hexagon(
    assignment: Mapping[Modality, bool]
) -> List[Union[OppositionRelation, VertexDefinition]]:
    """Everything `assignment` violates, empty when it is a hexagon state.

    Violated opposition relations come first, followed by any broken vertex
    definition (U = A or E, Y = I and O). A definition entry can appear
    even when every relation holds.
    """
    missing = [m for m in ALL_MODALITIES if m not in assignment]
    if missing:
        raise HexagonStateError(
            f"Assignment must define all six modalities, missing {[str(m) for m in missing]}."
        )
    violated = [r for r in HEXAGON_RELATIONS if not r.holds(assignment)]
    return violated + [d for d in VERTEX_DEFINITIONS if not d.holds(assignment)]


def all_assignments() -> List[Dict[Modality, bool]]:
    return [
        dict(zip(ALL_MODALITIES, values))
        for values in itertools.product((False, True), repeat=len(ALL_MODALITIES))
    ]


def consistent_assignments() -> List[Dict[Modality, bool]]:
    """Brute force over the 64 assignments, keeping those `check_hexagon` accepts."""
    return [a for a in all_assignments() if not check_hexagon(a)]


def derive_relations() -> List[OppositionRelation]:
    """Derives every edge of the hexagon from the definition predicates alone.

    A relation between two modalities is kept when it holds on the three
    verdicts and is not implied by a stronger one (contradiction subsumes
    contrariety and subcontrariety, equivalence never occurs).
    """
    images = [assignment_of(verdict) for verdict in ALL_VERDICTS]
    derived = []
    for j, k in itertools.combinations(ALL_MODALITIES, 2):
        contradiction = OppositionRelation(RelationKind.CONTRADICTION, j, k)
        if all(contradiction.holds(image) for image in images):
            derived.append(contradiction)
            continue
        for kind in (RelationKind.CONTRARIETY, RelationKind.SUBCONTRARIETY):
            relation = OppositionRelation(kind, j, k)
            if all(relation.holds(image) for image in images):
                derived.append(relation)
        for source, target in ((j, k), (k, j)):
            relation = OppositionRelation(RelationKind.IMPLICATION, source, target)
            if all(relation.holds(image) for image in images):
                derived.append(relation)
    return derived


def opposition_graph() -> nx.DiGraph:
    """The hexagon as a graph; symmetric relations are stored once, from `source`."""
    graph = nx.DiGraph()
    for modality in ALL_MODALITIES:
        graph.add_node(modality, label=modality.label, symbol=modality.symbol)
    for relation in HEXAGON_RELATIONS:
        graph.add_edge(
            relation.source,
            relation.target,
            kind=relation.kind,
            symmetric=relation.kind.symmetric,
        )
    return graph
