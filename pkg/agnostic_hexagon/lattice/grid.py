import json
import logging
import math
from pathlib import Path
from typing import List, Optional, Dict, Any, Union, Sequence

import numpy as np

from agnostic_hexagon.config import FromParams, Params
from agnostic_hexagon.errors import GridError, GridSizeError

logger = logging.getLogger(__name__)

MAX_GRID_SIZE = 4096
PRIOR_TOLERANCE = 1e-12


class GridPoint(FromParams):
    def __init__(
        self,
        id: str,
        prior: float,
        coord: Optional[List[float]] = None,
        reference: Optional[float] = None,
    ):
        self.id = id
        self.prior = float(prior)
        self.coord = tuple(float(c) for c in coord) if coord is not None else ()
        self.reference = None if reference is None else float(reference)

    def to_dict(self) -> Dict[str, Any]:
        point = {"id": self.id, "coord": list(self.coord), "prior": self.prior}
        if self.reference is not None:
            point["reference"] = self.reference
        return point

    def __repr__(self):
        return (
            f"GridPoint(id={self.id!r}, coord={self.coord}, prior={self.prior}, "
            f"reference={self.reference})"
        )


class ParameterGrid(FromParams):
    """Finite parameter space with prior masses and reference weights.

    Points without an explicit reference weight get the uniform weight 1/n.
    """

    def __init__(self, points: List[GridPoint], normalize: bool = False):
        if len(points) == 0:
            raise GridError("A parameter grid needs at least one point.")
        if len(points) > MAX_GRID_SIZE:
            raise GridSizeError(
                f"Grids are limited to {MAX_GRID_SIZE} points, got {len(points)}."
            )
        ids = [point.id for point in points]
        if len(set(ids)) != len(ids):
            duplicates = sorted({i for i in ids if ids.count(i) > 1})
            raise GridError(f"Grid point identifiers must be unique, got duplicates {duplicates}.")

        priors = np.array([point.prior for point in points], dtype=float)
        if not np.all(np.isfinite(priors)) or np.any(priors < 0):
            raise GridError(f"Prior masses must be finite and non-negative, got {priors.tolist()}.")
        total = math.fsum(priors)
        if normalize and total > 0 and abs(total - 1.0) > PRIOR_TOLERANCE:
            logger.warning(f"Prior masses sum to {total}, normalizing them.")
            priors = priors / total
        elif abs(total - 1.0) > PRIOR_TOLERANCE:
            raise GridError(f"Prior masses must sum to 1, got {total}.")

        n = len(points)
        references = np.array(
            [1.0 / n if point.reference is None else point.reference for point in points],
            dtype=float,
        )
        if not np.all(np.isfinite(references)) or np.any(references <= 0):
            raise GridError(
                f"Reference weights must be strictly positive, got {references.tolist()}."
            )

        self.points = list(points)
        self.ids = ids
        self.priors = priors
        self.references = references
        self._index = {point_id: index for index, point_id in enumerate(ids)}

        for array in (self.priors, self.references):
            array.setflags(write=False)

    @property
    def size(self) -> int:
        return len(self.points)

    def __len__(self):
        return self.size

    def index_of(self, point_id: str) -> int:
        try:
            return self._index[point_id]
        except KeyError:
            raise GridError(f"Unknown grid point {point_id!r}.")

    def coord(self, index: int) -> tuple:
        return self.points[index].coord

    def with_uniform_reference(self) -> "ParameterGrid":
        n = self.size
        points = [
            GridPoint(p.id, self.priors[i], list(p.coord), 1.0 / n)
            for i, p in enumerate(self.points)
        ]
        return ParameterGrid(points)

    def with_prior(self, prior: Sequence[float]) -> "ParameterGrid":
        if len(prior) != self.size:
            raise GridError(f"Expected {self.size} prior masses, got {len(prior)}.")
        points = [
            GridPoint(p.id, prior[i], list(p.coord), self.references[i])
            for i, p in enumerate(self.points)
        ]
        return ParameterGrid(points)

    @classmethod
    def uniform(
        cls,
        n: int,
        coords: Optional[Sequence[Sequence[float]]] = None,
        ids: Optional[Sequence[str]] = None,
    ) -> "ParameterGrid":
        if n < 1:
            raise GridError(f"A parameter grid needs at least one point, got {n}.")
        ids = ids or [f"t{i + 1}" for i in range(n)]
        points = [
            GridPoint(ids[i], 1.0 / n, list(coords[i]) if coords is not None else [float(i)])
            for i in range(n)
        ]
        return cls(points)

    @classmethod
    def from_dict(cls, grid: Dict[str, Any]) -> "ParameterGrid":
        return cls.from_params(Params(json.loads(json.dumps(grid))))

    @classmethod
    def from_file(cls, path: Union[str, Path]) -> "ParameterGrid":
        return cls.from_params(Params.from_file(path))

    def to_dict(self) -> Dict[str, Any]:
        return {
            "points": [
                {
                    "id": p.id,
                    "coord": list(p.coord),
                    "prior": float(self.priors[i]),
                    "reference": float(self.references[i]),
                }
                for i, p in enumerate(self.points)
            ]
        }

    def __eq__(self, other):
        if not isinstance(other, ParameterGrid):
            return NotImplemented
        return (
            self.ids == other.ids
            and [p.coord for p in self.points] == [p.coord for p in other.points]
            and np.array_equal(self.priors, other.priors)
            and np.array_equal(self.references, other.references)
        )

    def __hash__(self):
        return hash(tuple(self.ids))

    def __repr__(self):
        return f"ParameterGrid(size={self.size}, ids={self.ids[:8]}{'...' if self.size > 8 else ''})"
