from agnostic_hexagon.modality.verdict import (
    ALL_MODALITIES,
    ALL_VERDICTS,
    ModalVerdict,
    Modality,
    assignment_of,
    invertibility_image,
    modalities_of,
    table_equivalences,
    verdict_of,
)
from agnostic_hexagon.modality.hexagon import (
    HEXAGON_RELATIONS,
    VERTEX_DEFINITIONS,
    OppositionRelation,
    RelationKind,
    VertexDefinition,
    all_assignments,
    check_hexagon,
    consistent_assignments,
    derive_relations,
    hexagon_relations,
    opposition_graph,
)

__all__ = [
    "ModalVerdict",
    "Modality",
    "ALL_MODALITIES",
    "ALL_VERDICTS",
    "modalities_of",
    "assignment_of",
    "verdict_of",
    "table_equivalences",
    "invertibility_image",
    "RelationKind",
    "OppositionRelation",
    "VertexDefinition",
    "HEXAGON_RELATIONS",
    "VERTEX_DEFINITIONS",
    "hexagon_relations",
    "check_hexagon",
    "all_assignments",
    "consistent_assignments",
    "derive_relations",
    "opposition_graph",
]
