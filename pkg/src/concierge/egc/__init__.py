from concierge.egc.axes import BETA, EmotionAxes, assign_axes
from concierge.egc.emotions import (
    EMOTION_ORDER,
    NEGATIVE_TYPES,
    POSITIVE_TYPES,
    EmotionGroup,
    EmotionResult,
    EmotionType,
    SituationFlags,
    Valence,
    classify,
    emotion_to_vector20,
    evaluate,
    intensity,
    valence,
)
from concierge.egc.frames import PRIMARY_OBJECT_SLOT, CaseFrame, EventType, required_slots
from concierge.egc.fv import FVDatabase, FVLookup, lookup_fv, normalize_term

__all__ = [
    "BETA",
    "CaseFrame",
    "EMOTION_ORDER",
    "EmotionAxes",
    "EmotionGroup",
    "EmotionResult",
    "EmotionType",
    "EventType",
    "FVDatabase",
    "FVLookup",
    "NEGATIVE_TYPES",
    "POSITIVE_TYPES",
    "PRIMARY_OBJECT_SLOT",
    "SituationFlags",
    "Valence",
    "assign_axes",
    "classify",
    "emotion_to_vector20",
    "evaluate",
    "intensity",
    "lookup_fv",
    "normalize_term",
    "required_slots",
    "valence",
]
