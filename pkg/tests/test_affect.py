import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from concierge.affect import (
    MSTNConfig,
    EmotionProfile,
    is_negative,
    mood_trigger,
    update_mood,
    update_profile,
)
from concierge.egc import EMOTION_ORDER, EmotionResult, EmotionType, Valence
from concierge.errors import ValidationError

JOY = EMOTION_ORDER.index(EmotionType.JOY)
DISTRESS = EMOTION_ORDER.index(EmotionType.DISTRESS)


def one_hot(index, value):
    vec = [0.0] * 20
    vec[index] = value
    return vec


def test_update_profile_ema():
    profile = EmotionProfile(rho=0.5)
    updated = update_profile(profile, one_hot(JOY, 0.8))
    assert updated.values[JOY] == pytest.approx(0.4)
    assert sum(updated.values) == pytest.approx(0.4)


def test_profile_decays_geometrically():
    profile = EmotionProfile(one_hot(JOY, 0.8), rho=0.5)
    for expected in (0.4, 0.2, 0.1):
        profile = update_profile(profile, [0.0] * 20)
        assert profile.values[JOY] == pytest.approx(expected)


def test_rho_zero_tracks_latest():
    profile = EmotionProfile(one_hot(JOY, 0.9), rho=0.0)
    updated = update_profile(profile, one_hot(DISTRESS, 0.3))
    assert updated.values[JOY] == 0.0
    assert updated.values[DISTRESS] == pytest.approx(0.3)


@given(
    st.lists(st.floats(min_value=0.0, max_value=1.0), min_size=20, max_size=20),
    st.lists(st.floats(min_value=0.0, max_value=1.0), min_size=20, max_size=20),
    st.floats(min_value=0.0, max_value=0.99),
)
def test_profile_stays_in_range(start, vector, rho):
    profile = EmotionProfile(start, rho=rho)
    updated = update_profile(profile, vector)
    assert all(0.0 <= v <= 1.0 for v in updated.values)


def test_profile_validation():
    with pytest.raises(ValidationError):
        EmotionProfile([0.5] * 19)
    with pytest.raises(ValidationError):
        EmotionProfile([1.5] + [0.0] * 19)
    with pytest.raises(ValidationError):
        EmotionProfile(rho=1.0)


def test_is_negative_results():
    assert is_negative(EmotionResult(EmotionType.DISTRESS, Valence.DISPLEASURE, 0.6))
    assert not is_negative(EmotionResult(EmotionType.JOY, Valence.PLEASURE, 0.6))
    assert not is_negative(EmotionResult(None, Valence.NEUTRAL, 0.0))


def test_is_negative_profile_mass():
    values = [0.0] * 20
    values[DISTRESS] = 0.5
    values[JOY] = 0.2
    assert is_negative(EmotionProfile(values))
    values[JOY] = 0.7
    assert not is_negative(EmotionProfile(values))


def simple_config():
    return MSTNConfig(
        states=["happy", "neutral", "sad"],
        weights={
            "neutral": {
                "Well-Being+": {"happy": 1.0},
                "Well-Being-": {"sad": 1.0},
                "+": {"happy": 1.0},
                "-": {"sad": 1.0},
            },
        },
    )


def test_mood_trigger_format():
    assert mood_trigger(EmotionResult(EmotionType.DISTRESS, Valence.DISPLEASURE, 0.5)) == "Well-Being-"
    assert mood_trigger(EmotionResult(EmotionType.HOPE, Valence.PLEASURE, 0.5)) == "Prospect-based+"
    assert mood_trigger(EmotionResult(None, Valence.NEUTRAL, 0.0)) is None


def test_update_mood_default_config_distress_to_sad(bundle):
    distress = EmotionResult(EmotionType.DISTRESS, Valence.DISPLEASURE, 0.5)
    assert update_mood("neutral", distress, bundle.mstn) == "sad"


def test_neutral_emotion_keeps_state():
    cfg = simple_config()
    neutral = EmotionResult(None, Valence.NEUTRAL, 0.0)
    assert update_mood("sad", neutral, cfg) == "sad"


def test_valence_fallback_row():
    cfg = simple_config()
    hope = EmotionResult(EmotionType.HOPE, Valence.PLEASURE, 0.5)
    # no Prospect-based+ row: falls back to "+"
    assert update_mood("neutral", hope, cfg) == "happy"


def test_uniform_weights_tie_breaks_lexicographically():
    cfg = MSTNConfig(
        states=["happy", "neutral", "sad"],
        weights={"neutral": {"+": {"happy": 1.0, "neutral": 1.0, "sad": 1.0}}},
    )
    joy = EmotionResult(EmotionType.JOY, Valence.PLEASURE, 0.5)
    assert update_mood("neutral", joy, cfg) == "happy"


def test_missing_trigger_row_keeps_state_with_diagnostic():
    cfg = MSTNConfig(states=["neutral", "sad"], weights={})
    distress = EmotionResult(EmotionType.DISTRESS, Valence.DISPLEASURE, 0.5)
    diagnostics = []
    assert update_mood("neutral", distress, cfg, diagnostics=diagnostics) == "neutral"
    assert any(d.startswith("mood-trigger-missing") for d in diagnostics)


def test_seeded_random_mode_reproducible():
    cfg = MSTNConfig(
        states=["happy", "neutral", "sad"],
        weights={"neutral": {"+": {"happy": 0.5, "neutral": 0.5}}},
    )
    joy = EmotionResult(EmotionType.JOY, Valence.PLEASURE, 0.5)
    first = [update_mood("neutral", joy, cfg, rng=random.Random(42)) for _ in range(10)]
    second = [update_mood("neutral", joy, cfg, rng=random.Random(42)) for _ in range(10)]
    assert first == second
    assert set(first) <= {"happy", "neutral"}


def test_mood_never_leaves_state_set():
    cfg = simple_config()
    rng = random.Random(1)
    state = "neutral"
    for _ in range(50):
        emotion = EmotionResult(
            rng.choice(list(EmotionType)),
            rng.choice([Valence.PLEASURE, Valence.DISPLEASURE]),
            rng.random(),
        )
        state = update_mood(state, emotion, cfg, rng=rng)
        assert state in cfg.states


def test_config_validation():
    with pytest.raises(ValidationError):
        MSTNConfig(states=[], weights={})
    with pytest.raises(ValidationError):
        MSTNConfig(states=["a"], weights={"a": {"+": {"b": 1.0}}})
    with pytest.raises(ValidationError):
        MSTNConfig(states=["a"], weights={"a": {"+": {"a": 0.0}}})
    with pytest.raises(ValidationError):
        MSTNConfig(states=["a", "b"], weights={"a": {"+": {"b": -1.0}}})
