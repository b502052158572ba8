"""Case frames: a predicate plus deep-case slots holding terms.

Event types name which slots take part in the emotion axes.  ``V(...)``
types are verb events, ``A(...)`` types attribute (adjective) events;
the letters after S name the deep cases involved (O object, OF from,
OT to, OM mutual, OS source, OC content, I instrument, C complement).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from concierge.errors import ValidationError


class EventType(enum.Enum):
    V_S = "V(S)"
    A_S_C = "A(S,C)"
    A_S_OF_C = "A(S,OF,C)"
    A_S_OT_C = "A(S,OT,C)"
    A_S_OM_C = "A(S,OM,C)"
    A_S_OS_C = "A(S,OS,C)"
    V_S_OF = "V(S,OF)"
    V_S_OT = "V(S,OT)"
    V_S_OM = "V(S,OM)"
    V_S_OS = "V(S,OS)"
    V_S_O = "V(S,O)"
    V_S_O_OF = "V(S,O,OF)"
    V_S_O_OT = "V(S,O,OT)"
    V_S_O_OM = "V(S,O,OM)"
    V_S_O_I = "V(S,O,I)"
    V_S_O_OC = "V(S,O,OC)"
    A_S_O_C = "A(S,O,C)"

    @classmethod
    def from_code(cls, code: str) -> "EventType":
        for member in cls:
            if member.value == code:
                return member
        raise ValidationError(f"unknown event type {code!r}")


# Deep-case slot names.
SUBJECT = "subject"
OBJECT = "object"
OBJECT_FROM = "object_from"
OBJECT_TO = "object_to"
OBJECT_MUTUAL = "object_mutual"
OBJECT_SOURCE = "object_source"
OBJECT_CONTENT = "object_content"
INSTRUMENT = "instrument"
PREDICATE = "predicate"

ALL_SLOTS = frozenset(
    {
        SUBJECT,
        OBJECT,
        OBJECT_FROM,
        OBJECT_TO,
        OBJECT_MUTUAL,
        OBJECT_SOURCE,
        OBJECT_CONTENT,
        INSTRUMENT,
        PREDICATE,
    }
)

# Slots an event type requires beyond subject and predicate.
_EXTRA_REQUIRED: dict[EventType, frozenset[str]] = {
    EventType.V_S: frozenset(),
    EventType.A_S_C: frozenset(),
    EventType.A_S_OF_C: frozenset({OBJECT_FROM}),
    EventType.A_S_OT_C: frozenset({OBJECT_TO}),
    EventType.A_S_OM_C: frozenset({OBJECT_MUTUAL}),
    EventType.A_S_OS_C: frozenset({OBJECT_SOURCE}),
    EventType.V_S_OF: frozenset({OBJECT_FROM}),
    EventType.V_S_OT: frozenset({OBJECT_TO}),
    EventType.V_S_OM: frozenset({OBJECT_MUTUAL}),
    EventType.V_S_OS: frozenset({OBJECT_SOURCE}),
    EventType.V_S_O: frozenset({OBJECT}),
    EventType.V_S_O_OF: frozenset({OBJECT, OBJECT_FROM}),
    EventType.V_S_O_OT: frozenset({OBJECT, OBJECT_TO}),
    EventType.V_S_O_OM: frozenset({OBJECT, OBJECT_MUTUAL}),
    EventType.V_S_O_I: frozenset({OBJECT, INSTRUMENT}),
    EventType.V_S_O_OC: frozenset({OBJECT, OBJECT_CONTENT}),
    EventType.A_S_O_C: frozenset({OBJECT}),
}

# The slot a lone parsed object fills for each event type.
PRIMARY_OBJECT_SLOT: dict[EventType, str | None] = {
    EventType.V_S: None,
    EventType.A_S_C: None,
    EventType.A_S_OF_C: OBJECT_FROM,
    EventType.A_S_OT_C: OBJECT_TO,
    EventType.A_S_OM_C: OBJECT_MUTUAL,
    EventType.A_S_OS_C: OBJECT_SOURCE,
    EventType.V_S_OF: OBJECT_FROM,
    EventType.V_S_OT: OBJECT_TO,
    EventType.V_S_OM: OBJECT_MUTUAL,
    EventType.V_S_OS: OBJECT_SOURCE,
    EventType.V_S_O: OBJECT,
    EventType.V_S_O_OF: OBJECT,
    EventType.V_S_O_OT: OBJECT,
    EventType.V_S_O_OM: OBJECT,
    EventType.V_S_O_I: OBJECT,
    EventType.V_S_O_OC: OBJECT,
    EventType.A_S_O_C: OBJECT,
}


def required_slots(event_type: EventType) -> frozenset[str]:
    return frozenset({SUBJECT, PREDICATE}) | _EXTRA_REQUIRED[event_type]


@dataclass
class CaseFrame:
    event_type: EventType
    slots: dict[str, str] = field(default_factory=dict)

    def __post_init__(self):
        for slot in self.slots:
            if slot not in ALL_SLOTS:
                raise ValidationError(f"unknown deep-case slot {slot!r}")
        missing = sorted(required_slots(self.event_type) - set(self.slots))
        if missing:
            raise ValidationError(
                f"event type {self.event_type.value} requires slot {missing[0]!r}"
            )

    def term(self, slot: str) -> str | None:
        return self.slots.get(slot)
