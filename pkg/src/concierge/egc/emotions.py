"""Valence, intensity, and classification into 20 emotion types.

The sign octant of the three axes decides pleasure vs displeasure; a
vector on any axis raises no emotion at all.  The situation flags then
refine the simple valence into one of 20 emotion types in six groups.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from concierge.egc.axes import EmotionAxes, assign_axes
from concierge.egc.frames import CaseFrame
from concierge.egc.fv import FVDatabase
from concierge.errors import ValidationError


class Valence(enum.Enum):
    PLEASURE = "Pleasure"
    DISPLEASURE = "Displeasure"
    NEUTRAL = "Neutral"


class EmotionGroup(enum.Enum):
    WELL_BEING = "Well-Being"
    FORTUNES_OF_OTHERS = "Fortunes-of-Others"
    PROSPECT_BASED = "Prospect-based"
    CONFIRMATION = "Confirmation"
    ATTRIBUTION = "Attribution"
    WELL_BEING_ATTRIBUTION = "Well-Being/Attribution"


class EmotionType(enum.Enum):
    JOY = "joy"
    DISTRESS = "distress"
    HAPPY_FOR = "happy-for"
    GLOATING = "gloating"
    RESENTMENT = "resentment"
    SORRY_FOR = "sorry-for"
    HOPE = "hope"
    FEAR = "fear"
    SATISFACTION = "satisfaction"
    RELIEF = "relief"
    FEARS_CONFIRMED = "fears-confirmed"
    DISAPPOINTMENT = "disappointment"
    PRIDE = "pride"
    ADMIRATION = "admiration"
    SHAME = "shame"
    DISLIKING = "disliking"
    GRATITUDE = "gratitude"
    ANGER = "anger"
    GRATIFICATION = "gratification"
    REMORSE = "remorse"

    @property
    def group(self) -> EmotionGroup:
        return _GROUPS[self]

    @property
    def positive(self) -> bool:
        return self in POSITIVE_TYPES

    @property
    def index(self) -> int:
        return EMOTION_ORDER.index(self)


# Fixed enumeration order; the 20-d vectors everywhere follow it.
EMOTION_ORDER: tuple[EmotionType, ...] = tuple(EmotionType)

_GROUPS = {
    EmotionType.JOY: EmotionGroup.WELL_BEING,
    EmotionType.DISTRESS: EmotionGroup.WELL_BEING,
    EmotionType.HAPPY_FOR: EmotionGroup.FORTUNES_OF_OTHERS,
    EmotionType.GLOATING: EmotionGroup.FORTUNES_OF_OTHERS,
    EmotionType.RESENTMENT: EmotionGroup.FORTUNES_OF_OTHERS,
    EmotionType.SORRY_FOR: EmotionGroup.FORTUNES_OF_OTHERS,
    EmotionType.HOPE: EmotionGroup.PROSPECT_BASED,
    EmotionType.FEAR: EmotionGroup.PROSPECT_BASED,
    EmotionType.SATISFACTION: EmotionGroup.CONFIRMATION,
    EmotionType.RELIEF: EmotionGroup.CONFIRMATION,
    EmotionType.FEARS_CONFIRMED: EmotionGroup.CONFIRMATION,
    EmotionType.DISAPPOINTMENT: EmotionGroup.CONFIRMATION,
    EmotionType.PRIDE: EmotionGroup.ATTRIBUTION,
    EmotionType.ADMIRATION: EmotionGroup.ATTRIBUTION,
    EmotionType.SHAME: EmotionGroup.ATTRIBUTION,
    EmotionType.DISLIKING: EmotionGroup.ATTRIBUTION,
    EmotionType.GRATITUDE: EmotionGroup.WELL_BEING_ATTRIBUTION,
    EmotionType.ANGER: EmotionGroup.WELL_BEING_ATTRIBUTION,
    EmotionType.GRATIFICATION: EmotionGroup.WELL_BEING_ATTRIBUTION,
    EmotionType.REMORSE: EmotionGroup.WELL_BEING_ATTRIBUTION,
}

POSITIVE_TYPES = frozenset(
    {
        EmotionType.JOY,
        EmotionType.HAPPY_FOR,
        EmotionType.GLOATING,
        EmotionType.HOPE,
        EmotionType.SATISFACTION,
        EmotionType.RELIEF,
        EmotionType.PRIDE,
        EmotionType.ADMIRATION,
        EmotionType.GRATITUDE,
        EmotionType.GRATIFICATION,
    }
)
NEGATIVE_TYPES = frozenset(EmotionType) - POSITIVE_TYPES


@dataclass(frozen=True)
class SituationFlags:
    target: str = "self"  # self | other
    other_fortune: str = "none"  # none | desirable | undesirable
    prospect: str = "none"  # none | prospective | confirmed | disconfirmed
    agent: str = "none"  # none | self | other
    approval: str = "none"  # none | approved | disapproved

    def __post_init__(self):
        allowed = {
            "target": {"self", "other"},
            "other_fortune": {"none", "desirable", "undesirable"},
            "prospect": {"none", "prospective", "confirmed", "disconfirmed"},
            "agent": {"none", "self", "other"},
            "approval": {"none", "approved", "disapproved"},
        }
        for name, values in allowed.items():
            if getattr(self, name) not in values:
                raise ValidationError(f"{name} must be one of {sorted(values)}")
        if self.other_fortune != "none" and self.target != "other":
            raise ValidationError("other_fortune requires target = other")


@dataclass(frozen=True)
class EmotionResult:
    emotion: EmotionType | None
    valence: Valence
    intensity: float

    def __post_init__(self):
        if self.valence is Valence.NEUTRAL and (self.emotion is not None or self.intensity != 0.0):
            raise ValidationError("neutral outcome carries no emotion and zero intensity")


def valence(axes: EmotionAxes) -> Valence:
    product = axes.f1 * axes.f2 * axes.f3
    if product == 0.0:
        return Valence.NEUTRAL
    return Valence.PLEASURE if product > 0.0 else Valence.DISPLEASURE


def intensity(axes: EmotionAxes) -> float:
    return (abs(axes.f1) * abs(axes.f2) * abs(axes.f3)) ** (1.0 / 3.0)


def classify(v: Valence, flags: SituationFlags) -> EmotionType | None:
    """Decision table over the situation flags; highest-priority row wins."""
    if v is Valence.NEUTRAL:
        return None
    pleased = v is Valence.PLEASURE
    if flags.prospect == "prospective":
        return EmotionType.HOPE if pleased else EmotionType.FEAR
    if flags.prospect == "confirmed":
        return EmotionType.SATISFACTION if pleased else EmotionType.FEARS_CONFIRMED
    if flags.prospect == "disconfirmed":
        return EmotionType.RELIEF if pleased else EmotionType.DISAPPOINTMENT
    if flags.target == "other" and flags.other_fortune != "none":
        if flags.other_fortune == "desirable":
            return EmotionType.HAPPY_FOR if pleased else EmotionType.RESENTMENT
        return EmotionType.GLOATING if pleased else EmotionType.SORRY_FOR
    if flags.agent != "none" and flags.approval != "none":
        if flags.agent == "self":
            return EmotionType.GRATIFICATION if pleased else EmotionType.REMORSE
        return EmotionType.GRATITUDE if pleased else EmotionType.ANGER
    if flags.approval != "none":
        if flags.target == "self":
            return EmotionType.PRIDE if pleased else EmotionType.SHAME
        return EmotionType.ADMIRATION if pleased else EmotionType.DISLIKING
    return EmotionType.JOY if pleased else EmotionType.DISTRESS


def evaluate(
    frame: CaseFrame,
    flags: SituationFlags | None = None,
    db: FVDatabase | None = None,
    person: str | None = None,
    diagnostics: list[str] | None = None,
) -> EmotionResult:
    flags = flags or SituationFlags()
    db = db or FVDatabase()
    axes = assign_axes(frame, db, person, diagnostics)
    v = valence(axes)
    if v is Valence.NEUTRAL:
        return EmotionResult(None, v, 0.0)
    return EmotionResult(classify(v, flags), v, intensity(axes))


def emotion_to_vector20(result: EmotionResult) -> list[float]:
    vector = [0.0] * len(EMOTION_ORDER)
    if result.emotion is not None:
        vector[result.emotion.index] = result.intensity
    return vector
