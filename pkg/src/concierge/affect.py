"""Session-level affect: accumulated emotion profile and mood.

The 20-component profile is an exponential moving average of per-turn
emotion vectors.  Mood is a discrete state that moves along configured,
weighted transitions triggered by the elicited emotion's group and
valence; the deterministic mode takes the heaviest edge, the stochastic
mode samples proportionally to the weights.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field

from concierge.egc.emotions import (
    EMOTION_ORDER,
    NEGATIVE_TYPES,
    EmotionResult,
    Valence,
)
from concierge.errors import ValidationError

PROFILE_SIZE = len(EMOTION_ORDER)
DEFAULT_RHO = 0.5


@dataclass
class EmotionProfile:
    values: list[float] = field(default_factory=lambda: [0.0] * PROFILE_SIZE)
    rho: float = DEFAULT_RHO

    def __post_init__(self):
        if len(self.values) != PROFILE_SIZE:
            raise ValidationError(f"profile must have {PROFILE_SIZE} components")
        if not all(0.0 <= v <= 1.0 for v in self.values):
            raise ValidationError("profile components must be in [0, 1]")
        if not 0.0 <= self.rho < 1.0:
            raise ValidationError("decay rho must be in [0, 1)")


def update_profile(profile: EmotionProfile, vector: list[float]) -> EmotionProfile:
    if len(vector) != PROFILE_SIZE:
        raise ValidationError(f"update vector must have {PROFILE_SIZE} components")
    if not all(0.0 <= v <= 1.0 for v in vector):
        raise ValidationError("update components must be in [0, 1]")
    rho = profile.rho
    merged = [rho * p + (1.0 - rho) * v for p, v in zip(profile.values, vector)]
    return EmotionProfile(merged, rho)


def is_negative(subject) -> bool:
    """Displeasure check for an emotion result, a profile, or a raw vector."""
    if isinstance(subject, EmotionResult):
        return subject.valence is Valence.DISPLEASURE
    values = subject.values if isinstance(subject, EmotionProfile) else list(subject)
    if len(values) != PROFILE_SIZE:
        raise ValidationError(f"expected {PROFILE_SIZE} components")
    negative_mass = sum(v for e, v in zip(EMOTION_ORDER, values) if e in NEGATIVE_TYPES)
    positive_mass = sum(v for e, v in zip(EMOTION_ORDER, values) if e not in NEGATIVE_TYPES)
    return negative_mass > positive_mass


DEFAULT_STATES = ("angry", "anxious", "happy", "neutral", "sad")


class MSTNConfig:
    """States plus (state, trigger) -> {next state: weight} transition rows.

    Triggers are emotion-group names suffixed with the valence sign
    (``"Well-Being-"``) with plain ``"+"`` / ``"-"`` rows as fallback.
    """

    def __init__(self, states, weights, initial_state: str | None = None):
        self.states: tuple[str, ...] = tuple(states)
        if not self.states:
            raise ValidationError("state set must be non-empty")
        if len(set(self.states)) != len(self.states):
            raise ValidationError("state ids must be unique")
        self.initial_state = initial_state or ("neutral" if "neutral" in self.states else self.states[0])
        if self.initial_state not in self.states:
            raise ValidationError(f"initial state {self.initial_state!r} not in state set")
        self.weights: dict[str, dict[str, dict[str, float]]] = {}
        for state, rows in (weights or {}).items():
            if state not in self.states:
                raise ValidationError(f"weight row for unknown state {state!r}")
            table = {}
            for trigger, edges in rows.items():
                clean = {}
                for nxt, w in edges.items():
                    if nxt not in self.states:
                        raise ValidationError(f"transition to unknown state {nxt!r}", f"{state}.{trigger}")
                    if not isinstance(w, (int, float)) or w < 0 or not math.isfinite(w):
                        raise ValidationError("weights must be finite and non-negative", f"{state}.{trigger}.{nxt}")
                    clean[nxt] = float(w)
                if not any(w > 0 for w in clean.values()):
                    raise ValidationError("trigger row needs at least one positive weight", f"{state}.{trigger}")
                table[trigger] = clean
            self.weights[state] = table

    @classmethod
    def from_dict(cls, doc: dict) -> "MSTNConfig":
        if not isinstance(doc, dict) or "states" not in doc:
            raise ValidationError("mood config must be an object with 'states'")
        return cls(doc["states"], doc.get("weights", {}), doc.get("initial_state"))

    def row(self, state: str, trigger: str) -> dict[str, float] | None:
        return self.weights.get(state, {}).get(trigger)


def mood_trigger(result: EmotionResult) -> str | None:
    if result.valence is Valence.NEUTRAL or result.emotion is None:
        return None
    sign = "+" if result.valence is Valence.PLEASURE else "-"
    return result.emotion.group.value + sign


def update_mood(
    state: str,
    result: EmotionResult,
    cfg: MSTNConfig,
    rng: random.Random | None = None,
    diagnostics: list[str] | None = None,
) -> str:
    if state not in cfg.states:
        raise ValidationError(f"state {state!r} not in configured set")
    trigger = mood_trigger(result)
    if trigger is None:
        return state
    row = cfg.row(state, trigger)
    if row is None:
        row = cfg.row(state, trigger[-1])  # bare valence fallback
    if row is None:
        if diagnostics is not None:
            diagnostics.append(f"mood-trigger-missing:{state}:{trigger}")
        return state
    if rng is None:
        best = max(row.items(), key=lambda kv: (kv[1], ))
        top = best[1]
        return min(s for s, w in row.items() if w == top)
    total = sum(row.values())
    pick = rng.uniform(0.0, total)
    cumulative = 0.0
    for nxt in sorted(row):
        cumulative += row[nxt]
        if pick <= cumulative:
            return nxt
    return sorted(row)[-1]
