"""Catalog records: sightseeing spots, local foods, and gifts."""

from __future__ import annotations

from dataclasses import dataclass, field

from concierge.egc.emotions import EMOTION_ORDER
from concierge.egc.fv import normalize_term
from concierge.errors import ValidationError

IMPRESSION_SIZE = len(EMOTION_ORDER)


@dataclass(frozen=True)
class SpotRecord:
    id: str
    name: str
    impression: tuple[float, ...]
    area: str = ""
    nearby: tuple[str, ...] = ()

    def __post_init__(self):
        if not self.id:
            raise ValidationError("spot id must be non-empty")
        object.__setattr__(self, "impression", tuple(float(v) for v in self.impression))
        if len(self.impression) != IMPRESSION_SIZE:
            raise ValidationError(
                f"impression vector must have {IMPRESSION_SIZE} components, "
                f"got {len(self.impression)}",
                self.id,
            )
        if not all(0.0 <= v <= 1.0 for v in self.impression):
            raise ValidationError("impression components must be in [0, 1]", self.id)
        object.__setattr__(self, "nearby", tuple(self.nearby))


@dataclass(frozen=True)
class FoodRecord:
    id: str
    name: str
    fv_term: str
    nearby: tuple[str, ...] = ()

    def __post_init__(self):
        if not self.id:
            raise ValidationError("food id must be non-empty")
        object.__setattr__(self, "fv_term", normalize_term(self.fv_term))
        object.__setattr__(self, "nearby", tuple(self.nearby))


@dataclass(frozen=True)
class GiftRecord:
    id: str
    name: str
    fv_term: str
    nearby: tuple[str, ...] = ()

    def __post_init__(self):
        if not self.id:
            raise ValidationError("gift id must be non-empty")
        object.__setattr__(self, "fv_term", normalize_term(self.fv_term))
        object.__setattr__(self, "nearby", tuple(self.nearby))


class TabooList:
    """Session-scoped set of banned terms; only ever grows."""

    def __init__(self, terms=()):
        self._terms: set[str] = {normalize_term(t) for t in terms}

    def add(self, *terms: str) -> None:
        self._terms.update(normalize_term(t) for t in terms)

    def __contains__(self, term: str) -> bool:
        return normalize_term(term) in self._terms

    def __iter__(self):
        return iter(sorted(self._terms))

    def __len__(self):
        return len(self._terms)

    def blocks(self, *candidates: str) -> bool:
        """True if any candidate, or any word of it, is taboo."""
        for candidate in candidates:
            if not candidate:
                continue
            normalized = normalize_term(candidate)
            if normalized in self._terms:
                return True
            if any(part in self._terms for part in normalized.replace("_", " ").split()):
                return True
        return False

    def as_list(self) -> list[str]:
        return sorted(self._terms)


@dataclass(frozen=True)
class Recommendation:
    kind: str  # Spot | Food | Gift
    id: str
    name: str
    strength: float
    fired_rules: tuple[str, ...] = ()
    rationale: str = ""

    def __post_init__(self):
        if self.kind not in ("Spot", "Food", "Gift"):
            raise ValidationError(f"unknown recommendation kind {self.kind!r}")
        if not 0.0 <= self.strength <= 1.0:
            raise ValidationError("strength must be in [0, 1]", self.id)
        object.__setattr__(self, "fired_rules", tuple(self.fired_rules))
