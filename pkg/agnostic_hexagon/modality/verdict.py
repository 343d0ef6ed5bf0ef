from enum import Enum
from typing import FrozenSet, Union, Dict


class ModalVerdict(Enum):
    """Output L(H) of an agnostic test: accept (0), agnostic (0.5) or reject (1)."""

    ACCEPT = "accept"
    AGNOSTIC = "agnostic"
    REJECT = "reject"

    @property
    def numeric(self) -> float:
        return _NUMERIC[self]

    @classmethod
    def from_value(cls, value: Union[str, int, float, "ModalVerdict"]) -> "ModalVerdict":
        if isinstance(value, ModalVerdict):
            return value
        if isinstance(value, str):
            try:
                return cls(value.strip().lower())
            except ValueError:
                pass
            try:
                value = float(value)
            except ValueError:
                raise ValueError(f"Unknown verdict {value!r}.")
        if isinstance(value, bool):
            raise ValueError(f"Unknown verdict {value!r}.")
        for verdict, numeric in _NUMERIC.items():
            if value == numeric:
                return verdict
        raise ValueError(f"Unknown verdict {value!r}, expected one of 0, 0.5, 1.")

    def __str__(self):
        return self.value


_NUMERIC: Dict[ModalVerdict, float] = {
    ModalVerdict.ACCEPT: 0,
    ModalVerdict.AGNOSTIC: 0.5,
    ModalVerdict.REJECT: 1,
}


class Modality(Enum):
    A = "A"  # necessity
    E = "E"  # impossibility
    Y = "Y"  # contingency
    I = "I"  # possibility
    O = "O"  # non-necessity
    U = "U"  # non-contingency

    @property
    def label(self) -> str:
        return _LABELS[self]

    @property
    def symbol(self) -> str:
        return _SYMBOLS[self]

    @property
    def probabilistic_symbol(self) -> str:
        return _PROBABILISTIC_SYMBOLS[self]

    @property
    def negation(self) -> "Modality":
        return _CONTRADICTORY[self]

    def holds(self, verdict: ModalVerdict) -> bool:
        numeric = verdict.numeric
        if self is Modality.A:
            return numeric == 0
        if self is Modality.E:
            return numeric == 1
        if self is Modality.Y:
            return numeric == 0.5
        if self is Modality.I:
            return numeric < 1
        if self is Modality.O:
            return numeric > 0
        return numeric != 0.5

    def __str__(self):
        return self.value


_LABELS = {
    Modality.A: "necessity",
    Modality.E: "impossibility",
    Modality.Y: "contingency",
    Modality.I: "possibility",
    Modality.O: "non-necessity",
    Modality.U: "non-contingency",
}

_SYMBOLS = {
    Modality.A: "□",
    Modality.E: "¬◇",
    Modality.Y: "∇",
    Modality.I: "◇",
    Modality.O: "¬□",
    Modality.U: "Δ",
}

# plus sign superposed on the alethic glyph
_PROBABILISTIC_SYMBOLS = {
    Modality.A: "⊞",
    Modality.E: "¬⟡",
    Modality.Y: "∇⁺",
    Modality.I: "⟡",
    Modality.O: "¬⊞",
    Modality.U: "Δ⁺",
}

_CONTRADICTORY = {
    Modality.A: Modality.O,
    Modality.O: Modality.A,
    Modality.E: Modality.I,
    Modality.I: Modality.E,
    Modality.U: Modality.Y,
    Modality.Y: Modality.U,
}

ALL_MODALITIES = (Modality.A, Modality.E, Modality.Y, Modality.I, Modality.O, Modality.U)
ALL_VERDICTS = (ModalVerdict.ACCEPT, ModalVerdict.AGNOSTIC, ModalVerdict.REJECT)


def modalities_of(verdict: ModalVerdict) -> FrozenSet[Modality]:
    return frozenset(modality for modality in ALL_MODALITIES if modality.holds(verdict))


def assignment_of(verdict: ModalVerdict) -> Dict[Modality, bool]:
    return {modality: modality.holds(verdict) for modality in ALL_MODALITIES}


def verdict_of(assignment: Dict[Modality, bool]) -> ModalVerdict:
    """Inverse of `assignment_of` on the three consistent assignments."""
    for verdict in ALL_VERDICTS:
        if assignment_of(verdict) == {m: bool(assignment[m]) for m in ALL_MODALITIES}:
            return verdict
    raise ValueError(f"Assignment {assignment} is not the image of any verdict.")


def table_equivalences(verdict: ModalVerdict) -> Dict[Modality, bool]:
    """Right-hand sides of the equivalence column, evaluated on `verdict`.

    Each entry must equal the definition predicate of its modality.
    """
    holds = assignment_of(verdict)
    return {
        Modality.A: holds[Modality.U] and holds[Modality.I],
        Modality.E: holds[Modality.U] and not holds[Modality.A],
        Modality.Y: holds[Modality.I] and not holds[Modality.A],
        Modality.I: holds[Modality.A] or holds[Modality.Y],
        Modality.O: holds[Modality.E] or holds[Modality.Y],
        Modality.U: holds[Modality.A] or holds[Modality.E],
    }


def invertibility_image(verdict: ModalVerdict) -> ModalVerdict:
    """Verdict the complement must receive when invertibility holds."""
    if verdict is ModalVerdict.ACCEPT:
        return ModalVerdict.REJECT
    if verdict is ModalVerdict.REJECT:
        return ModalVerdict.ACCEPT
    return ModalVerdict.AGNOSTIC
