from concierge.fpn.engine import (
    FiringRecord,
    FiringTrace,
    ReasoningConfig,
    enabled,
    fire,
    query,
    run,
)
from concierge.fpn.model import FuzzyPetriNet, Marking, Place, Proposition, Transition
from concierge.fpn.rules import RuleSpec, RuleType, compile_rules, place_id_for
from concierge.fpn.serialize import (
    export_dot,
    marking_from_json,
    marking_to_json,
    net_from_json,
    net_to_json,
)

__all__ = [
    "FiringRecord",
    "FiringTrace",
    "FuzzyPetriNet",
    "Marking",
    "Place",
    "Proposition",
    "ReasoningConfig",
    "RuleSpec",
    "RuleType",
    "Transition",
    "compile_rules",
    "enabled",
    "export_dot",
    "fire",
    "marking_from_json",
    "marking_to_json",
    "net_from_json",
    "net_to_json",
    "place_id_for",
    "query",
    "run",
]
