import itertools
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from concierge.egc import (
    EMOTION_ORDER,
    CaseFrame,
    EmotionAxes,
    EmotionGroup,
    EmotionResult,
    EmotionType,
    EventType,
    FVDatabase,
    SituationFlags,
    Valence,
    classify,
    emotion_to_vector20,
    evaluate,
    intensity,
    valence,
)
from concierge.egc import frames as fr
from concierge.errors import ValidationError

# The published sign table: (sign f1, sign f2, sign f3) -> valence.
SIGN_TABLE = {
    (1, 1, 1): Valence.PLEASURE,
    (-1, 1, 1): Valence.DISPLEASURE,
    (-1, -1, 1): Valence.PLEASURE,
    (1, -1, 1): Valence.DISPLEASURE,
    (1, 1, -1): Valence.DISPLEASURE,
    (-1, 1, -1): Valence.PLEASURE,
    (-1, -1, -1): Valence.DISPLEASURE,
    (1, -1, -1): Valence.PLEASURE,
}

MAGNITUDES = (0.2, 0.4, 0.6, 0.8, 1.0)


def test_octant_grid_matches_sign_table():
    for signs, expected in SIGN_TABLE.items():
        for mags in itertools.product(MAGNITUDES, repeat=3):
            axes = EmotionAxes(*(s * m for s, m in zip(signs, mags)))
            assert valence(axes) is expected, (signs, mags)


def test_randomized_octants_match_sign_table():
    rng = random.Random(2013)
    for _ in range(1000):
        signs = tuple(rng.choice((-1, 1)) for _ in range(3))
        axes = EmotionAxes(*(s * rng.uniform(1e-6, 1.0) for s in signs))
        assert valence(axes) is SIGN_TABLE[signs]


def test_zero_axis_is_neutral():
    assert valence(EmotionAxes(0.0, 0.6, 0.7)) is Valence.NEUTRAL
    assert valence(EmotionAxes(0.5, 0.0, -0.7)) is Valence.NEUTRAL
    assert valence(EmotionAxes(0.5, 0.6, 0.0)) is Valence.NEUTRAL


def test_sign_product_equivalence():
    rng = random.Random(99)
    for _ in range(500):
        axes = EmotionAxes(*(rng.uniform(-1, 1) for _ in range(3)))
        product = axes.f1 * axes.f2 * axes.f3
        v = valence(axes)
        if product > 0:
            assert v is Valence.PLEASURE
        elif product < 0:
            assert v is Valence.DISPLEASURE
        else:
            assert v is Valence.NEUTRAL


def test_intensity_examples():
    assert intensity(EmotionAxes(1, 1, 1)) == pytest.approx(1.0)
    assert intensity(EmotionAxes(0, 0.6, 0.7)) == 0.0
    assert intensity(EmotionAxes(0.5, 0.5, 0.5)) == pytest.approx(0.5)


@given(
    st.floats(min_value=0.01, max_value=1.0),
    st.floats(min_value=0.01, max_value=1.0),
    st.floats(min_value=0.01, max_value=1.0),
)
def test_intensity_sign_symmetric(a, b, c):
    base = intensity(EmotionAxes(a, b, c))
    assert intensity(EmotionAxes(-a, b, c)) == pytest.approx(base)
    assert intensity(EmotionAxes(a, -b, c)) == pytest.approx(base)
    assert intensity(EmotionAxes(-a, -b, -c)) == pytest.approx(base)


def test_intensity_strictly_monotone_per_axis():
    base = intensity(EmotionAxes(0.4, 0.6, 0.7))
    assert intensity(EmotionAxes(0.5, 0.6, 0.7)) > base
    assert intensity(EmotionAxes(0.4, 0.7, 0.7)) > base
    assert intensity(EmotionAxes(0.4, 0.6, 0.8)) > base


# ------------------------------------------------------------- classify

GROUPS = {
    EmotionGroup.WELL_BEING: {EmotionType.JOY, EmotionType.DISTRESS},
    EmotionGroup.FORTUNES_OF_OTHERS: {
        EmotionType.HAPPY_FOR,
        EmotionType.GLOATING,
        EmotionType.RESENTMENT,
        EmotionType.SORRY_FOR,
    },
    EmotionGroup.PROSPECT_BASED: {EmotionType.HOPE, EmotionType.FEAR},
    EmotionGroup.CONFIRMATION: {
        EmotionType.SATISFACTION,
        EmotionType.RELIEF,
        EmotionType.FEARS_CONFIRMED,
        EmotionType.DISAPPOINTMENT,
    },
    EmotionGroup.ATTRIBUTION: {
        EmotionType.PRIDE,
        EmotionType.ADMIRATION,
        EmotionType.SHAME,
        EmotionType.DISLIKING,
    },
    EmotionGroup.WELL_BEING_ATTRIBUTION: {
        EmotionType.GRATITUDE,
        EmotionType.ANGER,
        EmotionType.GRATIFICATION,
        EmotionType.REMORSE,
    },
}


def expected_group(flags: SituationFlags) -> EmotionGroup:
    """Independent mirror of the precedence order, for totality checking."""
    if flags.prospect == "prospective":
        return EmotionGroup.PROSPECT_BASED
    if flags.prospect in ("confirmed", "disconfirmed"):
        return EmotionGroup.CONFIRMATION
    if flags.target == "other" and flags.other_fortune != "none":
        return EmotionGroup.FORTUNES_OF_OTHERS
    if flags.agent != "none" and flags.approval != "none":
        return EmotionGroup.WELL_BEING_ATTRIBUTION
    if flags.approval != "none":
        return EmotionGroup.ATTRIBUTION
    return EmotionGroup.WELL_BEING


def all_valid_flags():
    for target in ("self", "other"):
        fortunes = ("none",) if target == "self" else ("none", "desirable", "undesirable")
        for other_fortune in fortunes:
            for prospect in ("none", "prospective", "confirmed", "disconfirmed"):
                for agent in ("none", "self", "other"):
                    for approval in ("none", "approved", "disapproved"):
                        yield SituationFlags(target, other_fortune, prospect, agent, approval)


def test_group_membership_matches_published_lists():
    for group, members in GROUPS.items():
        for member in members:
            assert member.group is group


def test_classify_total_and_correctly_grouped():
    for flags in all_valid_flags():
        for v in (Valence.PLEASURE, Valence.DISPLEASURE):
            emotion = classify(v, flags)
            assert emotion is not None
            assert emotion.group is expected_group(flags), (v, flags)
            assert emotion in GROUPS[emotion.group]


def test_classify_examples():
    assert classify(Valence.PLEASURE, SituationFlags(prospect="prospective")) is EmotionType.HOPE
    assert (
        classify(Valence.DISPLEASURE, SituationFlags(target="other", other_fortune="desirable"))
        is EmotionType.RESENTMENT
    )
    assert classify(Valence.PLEASURE, SituationFlags()) is EmotionType.JOY
    assert (
        classify(Valence.DISPLEASURE, SituationFlags(agent="other", approval="disapproved"))
        is EmotionType.ANGER
    )
    assert classify(Valence.NEUTRAL, SituationFlags()) is None


def test_flags_invariant():
    with pytest.raises(ValidationError):
        SituationFlags(target="self", other_fortune="desirable")
    with pytest.raises(ValidationError):
        SituationFlags(prospect="sideways")


# ------------------------------------------------------------- evaluate


def test_evaluate_composition():
    db = FVDatabase(initial={"subj": 0.8, "obj": 0.6, "pred": 0.7})
    f = CaseFrame(
        EventType.V_S_O, {fr.SUBJECT: "subj", fr.PREDICATE: "pred", fr.OBJECT: "obj"}
    )
    result = evaluate(f, None, db)
    assert result.emotion is EmotionType.JOY
    assert result.valence is Valence.PLEASURE
    # hand-computed: cube root of 0.8*0.6*0.7
    assert result.intensity == pytest.approx((0.336) ** (1 / 3), abs=1e-12)
    assert round(result.intensity, 3) == 0.695


def test_evaluate_zero_axis_neutral():
    db = FVDatabase(initial={"subj": 0.8, "pred": 0.7})  # obj unknown -> 0.0
    f = CaseFrame(
        EventType.V_S_O, {fr.SUBJECT: "subj", fr.PREDICATE: "pred", fr.OBJECT: "mystery"}
    )
    result = evaluate(f, None, db)
    assert result == EmotionResult(None, Valence.NEUTRAL, 0.0)


def test_evaluate_negative_object():
    db = FVDatabase(initial={"subj": 0.8, "obj": -0.6, "pred": 0.7})
    f = CaseFrame(
        EventType.V_S_O, {fr.SUBJECT: "subj", fr.PREDICATE: "pred", fr.OBJECT: "obj"}
    )
    result = evaluate(f, None, db)
    assert result.emotion is EmotionType.DISTRESS
    assert result.valence is Valence.DISPLEASURE


def test_emotion_vector_one_hot_scaled():
    result = EmotionResult(EmotionType.JOY, Valence.PLEASURE, 0.7)
    vec = emotion_to_vector20(result)
    assert len(vec) == 20
    assert vec[EMOTION_ORDER.index(EmotionType.JOY)] == 0.7
    assert sum(vec) == 0.7


def test_neutral_vector_is_zero():
    assert emotion_to_vector20(EmotionResult(None, Valence.NEUTRAL, 0.0)) == [0.0] * 20


def test_enumeration_order_is_stable():
    names = [e.value for e in EMOTION_ORDER]
    assert names == [
        "joy", "distress", "happy-for", "gloating", "resentment", "sorry-for",
        "hope", "fear", "satisfaction", "relief", "fears-confirmed",
        "disappointment", "pride", "admiration", "shame", "disliking",
        "gratitude", "anger", "gratification", "remorse",
    ]
