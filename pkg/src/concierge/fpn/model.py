"""Data model for fuzzy Petri nets.

A net couples places with propositions one-to-one.  Transitions carry a
certainty factor ``mu`` in [0, 1] and connect bags of input places to bags
of output places.  A marking assigns each place a truth degree in [0, 1];
places absent from a marking have degree 0.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from concierge.errors import NotFoundError, ValidationError


def _check_unit(value: float, what: str) -> float:
    if not isinstance(value, (int, float)) or isinstance(value, bool):
        raise ValidationError("must be a number", what)
    if not 0.0 <= value <= 1.0:
        raise ValidationError(f"must be in [0, 1], got {value!r}", what)
    return float(value)


@dataclass(frozen=True)
class Proposition:
    id: str
    label: str = ""

    def __post_init__(self):
        if not self.id:
            raise ValidationError("proposition id must be non-empty")
        if not self.label:
            object.__setattr__(self, "label", self.id)


@dataclass(frozen=True)
class Place:
    id: str
    proposition_id: str

    def __post_init__(self):
        if not self.id or not self.proposition_id:
            raise ValidationError("place id and proposition reference must be non-empty")


@dataclass(frozen=True)
class Transition:
    id: str
    mu: float
    inputs: tuple[str, ...]
    outputs: tuple[str, ...]

    def __post_init__(self):
        if not self.id:
            raise ValidationError("transition id must be non-empty")
        object.__setattr__(self, "mu", _check_unit(self.mu, f"transition {self.id}.mu"))
        object.__setattr__(self, "inputs", tuple(self.inputs))
        object.__setattr__(self, "outputs", tuple(self.outputs))
        if not self.inputs:
            raise ValidationError("transition must have at least one input", self.id)
        if not self.outputs:
            raise ValidationError("transition must have at least one output", self.id)


class FuzzyPetriNet:
    """Immutable net: validated once, safe to share across readers."""

    def __init__(self, propositions, places, transitions):
        self.propositions: tuple[Proposition, ...] = tuple(propositions)
        self.places: tuple[Place, ...] = tuple(places)
        self.transitions: tuple[Transition, ...] = tuple(transitions)
        self._prop_by_id = {}
        self._place_by_id = {}
        self._place_of_prop = {}
        self._validate()

    def _validate(self):
        for prop in self.propositions:
            if prop.id in self._prop_by_id:
                raise ValidationError("duplicate proposition id", prop.id)
            self._prop_by_id[prop.id] = prop
        for place in self.places:
            if place.id in self._place_by_id:
                raise ValidationError("duplicate place id", place.id)
            if place.proposition_id not in self._prop_by_id:
                raise ValidationError(
                    f"unknown proposition {place.proposition_id!r}", f"place {place.id}"
                )
            if place.proposition_id in self._place_of_prop:
                raise ValidationError(
                    "proposition mapped by more than one place", place.proposition_id
                )
            self._place_by_id[place.id] = place
            self._place_of_prop[place.proposition_id] = place
        if len(self.places) != len(self.propositions):
            raise ValidationError(
                f"places and propositions must be bijective "
                f"({len(self.places)} places, {len(self.propositions)} propositions)"
            )
        seen_t = set()
        for t in self.transitions:
            if t.id in seen_t or t.id in self._place_by_id:
                raise ValidationError("duplicate id", f"transition {t.id}")
            seen_t.add(t.id)
            for arc, place_id in [("inputs", p) for p in t.inputs] + [
                ("outputs", p) for p in t.outputs
            ]:
                if place_id not in self._place_by_id:
                    raise ValidationError(
                        f"unknown place {place_id!r}", f"transition {t.id}.{arc}"
                    )

    def place(self, place_id: str) -> Place:
        try:
            return self._place_by_id[place_id]
        except KeyError:
            raise NotFoundError(f"no place {place_id!r}") from None

    def place_for(self, proposition_id: str) -> Place:
        try:
            return self._place_of_prop[proposition_id]
        except KeyError:
            raise NotFoundError(f"no proposition {proposition_id!r}") from None

    def proposition(self, proposition_id: str) -> Proposition:
        try:
            return self._prop_by_id[proposition_id]
        except KeyError:
            raise NotFoundError(f"no proposition {proposition_id!r}") from None

    def has_proposition(self, proposition_id: str) -> bool:
        return proposition_id in self._prop_by_id

    def __eq__(self, other):
        if not isinstance(other, FuzzyPetriNet):
            return NotImplemented
        return (
            self.propositions == other.propositions
            and self.places == other.places
            and self.transitions == other.transitions
        )

    def __repr__(self):
        return (
            f"FuzzyPetriNet({len(self.places)} places, "
            f"{len(self.transitions)} transitions)"
        )


@dataclass
class Marking:
    """Truth-degree assignment; unknown places read as 0."""

    degrees: dict[str, float] = field(default_factory=dict)

    def __post_init__(self):
        self.degrees = {
            k: _check_unit(v, f"degrees[{k}]") for k, v in self.degrees.items()
        }

    def get(self, place_id: str) -> float:
        return self.degrees.get(place_id, 0.0)

    def set(self, place_id: str, degree: float) -> None:
        self.degrees[place_id] = _check_unit(degree, f"degrees[{place_id}]")

    def copy(self) -> "Marking":
        return Marking(dict(self.degrees))

    def check_against(self, net: FuzzyPetriNet) -> None:
        for place_id in self.degrees:
            if place_id not in net._place_by_id:
                raise ValidationError("marking references unknown place", place_id)
