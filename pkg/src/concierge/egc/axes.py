"""Map a case frame onto the three emotion axes.

Each event type selects which slot favorite values land on which axis.
An axis with no assigned element receives the dummy value ``BETA``; a
term referenced by a two-term difference but absent from the frame
contributes 0.0 (the unknown-term default).  Differences are clamped
back into [-1, 1].
"""

from __future__ import annotations

from dataclasses import dataclass

from concierge.egc import frames as fr
from concierge.egc.frames import CaseFrame, EventType
from concierge.egc.fv import FVDatabase

BETA = 0.5


@dataclass(frozen=True)
class EmotionAxes:
    f1: float
    f2: float
    f3: float

    def as_tuple(self) -> tuple[float, float, float]:
        return (self.f1, self.f2, self.f3)


def _clamp(x: float) -> float:
    return max(-1.0, min(1.0, x))


def assign_axes(
    frame: CaseFrame,
    db: FVDatabase,
    person: str | None = None,
    diagnostics: list[str] | None = None,
) -> EmotionAxes:
    unknown: list[str] = []

    def fv(slot: str) -> float:
        term = frame.term(slot)
        if term is None:
            return 0.0
        hit = db.lookup(term, person)
        if not hit.known:
            unknown.append(term)
        return hit.value

    def fv_known(slot: str) -> bool:
        term = frame.term(slot)
        return term is not None and db.lookup(term, person).known

    et = frame.event_type
    subject_group = {
        EventType.V_S,
        EventType.A_S_C,
        EventType.A_S_OF_C,
        EventType.A_S_OT_C,
        EventType.A_S_OM_C,
        EventType.A_S_OS_C,
    }

    if et in subject_group:
        axes = (fv(fr.SUBJECT), None, fv(fr.PREDICATE))
    elif et in (EventType.V_S_OF, EventType.V_S_OT):
        axes = (fv(fr.SUBJECT), _clamp(fv(fr.OBJECT_TO) - fv(fr.OBJECT_FROM)), fv(fr.PREDICATE))
    elif et is EventType.V_S_OM:
        axes = (fv(fr.SUBJECT), fv(fr.OBJECT_MUTUAL), fv(fr.PREDICATE))
    elif et is EventType.V_S_OS:
        axes = (_clamp(fv(fr.SUBJECT) - fv(fr.OBJECT_SOURCE)), None, fv(fr.PREDICATE))
    elif et is EventType.V_S_O:
        subject_value = fv(fr.SUBJECT)
        if fv_known(fr.SUBJECT):
            axes = (subject_value, fv(fr.OBJECT), fv(fr.PREDICATE))
        else:
            # Fallback row: subject carries no sentiment, lead with the object.
            axes = (fv(fr.OBJECT), None, fv(fr.PREDICATE))
    elif et in (EventType.V_S_O_OF, EventType.V_S_O_OT):
        axes = (fv(fr.OBJECT), _clamp(fv(fr.OBJECT_TO) - fv(fr.OBJECT_FROM)), fv(fr.PREDICATE))
    elif et is EventType.V_S_O_OM:
        axes = (fv(fr.OBJECT), fv(fr.OBJECT_MUTUAL), fv(fr.PREDICATE))
    elif et is EventType.V_S_O_I:
        axes = (fv(fr.OBJECT), abs(fv(fr.INSTRUMENT)), fv(fr.PREDICATE))
    elif et is EventType.V_S_O_OC:
        axes = (fv(fr.OBJECT), None, fv(fr.OBJECT_CONTENT))
    else:  # A_S_O_C
        axes = (fv(fr.OBJECT), None, fv(fr.PREDICATE))

    if diagnostics is not None:
        diagnostics.extend(f"unknown-term:{t}" for t in unknown)

    f1, f2, f3 = (BETA if v is None else v for v in axes)
    return EmotionAxes(f1, f2, f3)
