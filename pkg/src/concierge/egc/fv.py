"""Favorite values: like/dislike strength of a term in [-1, 1].

Personal values (per person id) take precedence over the shared initial
table.  Unknown terms resolve to 0.0 so they force a neutral outcome
instead of inventing sentiment; the lookup result carries a flag so the
caller can surface the gap in diagnostics.
"""

from __future__ import annotations

from dataclasses import dataclass

from concierge.errors import ValidationError


def normalize_term(term: str) -> str:
    return term.strip().lower()


def _check_fv(value, path: str) -> float:
    if not isinstance(value, (int, float)) or isinstance(value, bool):
        raise ValidationError("favorite value must be a number", path)
    if not -1.0 <= value <= 1.0:
        raise ValidationError(f"favorite value {value!r} outside [-1, 1]", path)
    return float(value)


@dataclass(frozen=True)
class FVLookup:
    value: float
    known: bool
    source: str  # "personal" | "initial" | "default"


class FVDatabase:
    def __init__(self, initial=None, personal=None):
        self.initial: dict[str, float] = {
            normalize_term(k): _check_fv(v, f"initial.{k}") for k, v in (initial or {}).items()
        }
        self.personal: dict[str, dict[str, float]] = {
            person: {
                normalize_term(k): _check_fv(v, f"personal.{person}.{k}")
                for k, v in table.items()
            }
            for person, table in (personal or {}).items()
        }

    @classmethod
    def from_dict(cls, doc: dict) -> "FVDatabase":
        if not isinstance(doc, dict):
            raise ValidationError("favorite-value document must be an object")
        initial = doc.get("initial", {})
        personal = doc.get("personal", {})
        if not isinstance(initial, dict) or not isinstance(personal, dict):
            raise ValidationError("'initial' and 'personal' must be objects")
        return cls(initial, personal)

    def to_dict(self) -> dict:
        return {"initial": dict(self.initial), "personal": {p: dict(t) for p, t in self.personal.items()}}

    def lookup(self, term: str, person: str | None = None) -> FVLookup:
        term = normalize_term(term)
        if person is not None:
            table = self.personal.get(person)
            if table is not None and term in table:
                return FVLookup(table[term], True, "personal")
        if term in self.initial:
            return FVLookup(self.initial[term], True, "initial")
        return FVLookup(0.0, False, "default")


def lookup_fv(db: FVDatabase, term: str, person: str | None = None) -> FVLookup:
    return db.lookup(term, person)
