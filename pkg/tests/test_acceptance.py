"""Acceptance criteria, one test per criterion.

Each test prints a single ``ACCEPTANCE PASS/FAIL: <criterion>`` line
(visible with ``pytest -s`` or in captured output on failure).  The
browser UI snapshot criterion lives in the frontend's own test suite.
"""

import itertools
import random
import shutil

import pytest
from fastapi.testclient import TestClient

from concierge.dialog import DialogEngine
from concierge.egc import (
    BETA,
    EmotionAxes,
    SituationFlags,
    Valence,
    classify,
    valence,
)
from concierge.egc.emotions import EmotionGroup, EmotionType
from concierge.fpn import (
    Marking,
    ReasoningConfig,
    RuleSpec,
    RuleType,
    compile_rules,
    query,
    run,
)
from concierge.rules.recommend import agreement_value
from concierge.service.app import create_app
from concierge.store.bundle import default_data_dir, load_bundle
from concierge.store.sessions import SessionState, SessionStore

from test_egc_axes import BLANK_AXES, DB, full_frame
from test_egc_emotions import GROUPS, SIGN_TABLE, all_valid_flags, expected_group
from test_fpn_engine import brute_force_fixpoint, exact_cfg, random_net
from test_recommend import DISPLEASED, NEUTRAL, PLEASED, build_parsed, profile_with

from concierge.egc import assign_axes
from concierge.rules.recommend import ConciergeRules
from concierge.rules.catalog import TabooList


def _report(name, body):
    try:
        body()
    except BaseException:
        print(f"ACCEPTANCE FAIL: {name}")
        raise
    print(f"ACCEPTANCE PASS: {name}")


def test_table2_exhaustive_octants():
    def body():
        magnitudes = (0.2, 0.4, 0.6, 0.8, 1.0)
        for signs, expected in SIGN_TABLE.items():
            for mags in itertools.product(magnitudes, repeat=3):
                axes = EmotionAxes(*(s * m for s, m in zip(signs, mags)))
                assert valence(axes) is expected
        rng = random.Random(1234)
        for _ in range(1000):
            signs = tuple(rng.choice((-1, 1)) for _ in range(3))
            axes = EmotionAxes(*(s * rng.uniform(1e-9, 1.0) for s in signs))
            assert valence(axes) is SIGN_TABLE[signs]
        for zeroed in ((0, 0.5, 0.5), (0.5, 0, -0.5), (-0.5, 0.5, 0)):
            assert valence(EmotionAxes(*zeroed)) is Valence.NEUTRAL

    _report("Table II sign octants (grid + 1000 random, zero axis neutral)", body)


def test_token_rule_oracle_equivalence():
    def body():
        rng = random.Random(77)
        for case in range(200):
            net, marking = random_net(rng)
            lam = (0.0, 0.1, 0.5)[case % 3]
            expected = brute_force_fixpoint(net, marking, lam)
            final, _ = run(net, marking, exact_cfg(lam))
            for place in net.places:
                assert abs(final.get(place.id) - expected.get(place.id, 0.0)) <= 1e-9

    _report("engine fixpoint equals brute-force oracle on 200 random nets", body)


def test_monotonicity_and_confluence():
    def body():
        rng = random.Random(88)
        for _ in range(100):
            net, marking = random_net(rng)
            base, _ = run(net, marking, exact_cfg(0.1))
            bumped = marking.copy()
            target = rng.choice(net.places).id
            bumped.set(target, min(1.0, marking.get(target) + rng.uniform(0.05, 0.5)))
            raised, _ = run(net, bumped, exact_cfg(0.1))
            for place in net.places:
                assert raised.get(place.id) >= base.get(place.id) - 1e-12
        for _ in range(20):
            net, marking = random_net(rng)
            reference, _ = run(net, marking, exact_cfg(0.1))
            ids = [t.id for t in net.transitions]
            for _ in range(10):
                rng.shuffle(ids)
                permuted, _ = run(net, marking, exact_cfg(0.1), order=list(ids))
                for place in net.places:
                    assert abs(permuted.get(place.id) - reference.get(place.id)) <= 1e-12

    _report("monotone in inputs; confluent across 10 firing orders", body)


def test_threshold_law():
    def body():
        lam = 0.5
        net = compile_rules(
            [
                RuleSpec(RuleType.TYPE1, ["d1"], ["d2"], [0.9]),
                RuleSpec(RuleType.TYPE1, ["d2"], ["d3"], [0.9]),
            ]
        )
        final, trace = run(
            net, Marking({"p_d1": lam - 0.01}), ReasoningConfig(threshold=lam, tolerance=0.0)
        )
        assert query(net, final, "d2") == 0.0
        assert query(net, final, "d3") == 0.0
        assert len(trace) == 0

    _report("input below threshold contributes nothing downstream", body)


def test_type2_fanout_exact():
    def body():
        net = compile_rules([RuleSpec(RuleType.TYPE2, ["d1"], ["d2", "d3", "d4"], [0.5])])
        final, _ = run(net, Marking({"p_d1": 0.7}), ReasoningConfig(threshold=0.1))
        for prop in ("d2", "d3", "d4"):
            assert query(net, final, prop) == 0.7 * 0.5

    _report("every fan-out consequent receives exactly y*mu", body)


def test_beta_rule_all_event_types():
    def body():
        from concierge.egc import EventType

        blank_rows = 0
        for event_type in EventType:
            axes = assign_axes(full_frame(event_type), DB).as_tuple()
            for position in BLANK_AXES[event_type]:
                assert axes[position] == BETA
                blank_rows += 1
        assert blank_rows >= 8  # the subject-attribute block plus the f2 blanks

    _report("blank axes receive the +0.5 dummy value on all 17 event types", body)


def test_classification_totality():
    def body():
        count = 0
        for flags in all_valid_flags():
            for v in (Valence.PLEASURE, Valence.DISPLEASURE):
                emotion = classify(v, flags)
                assert emotion is not None
                assert emotion.group is expected_group(flags)
                assert emotion in GROUPS[emotion.group]
                count += 1
        assert count == 288  # 144 valid flag combinations x 2 valences
        assert classify(Valence.NEUTRAL, SituationFlags()) is None

    _report("classification total over valences x flags with correct groups", body)


def test_rule_routing_totality():
    def body():
        bundle = load_bundle(default_data_dir())
        rules = ConciergeRules(
            bundle.spots, bundle.foods, bundle.gifts, bundle.fv_db, bundle.membership
        )
        seen = set()
        for category in ("Spot", "Food", "Gift", "Other", None):
            for emotion in (PLEASED, NEUTRAL, DISPLEASED):
                for case_route in ("CASE1", "CASE2", "CASE3"):
                    parsed = build_parsed(bundle, case_route, category)
                    outcome = rules.route(parsed, emotion, profile_with(), TabooList())
                    entry = outcome.fired[0]
                    assert entry in {"R1", "R2", "R3", "R4", "R5", "R6", "R7", "R8"}
                    seen.add(entry)
        assert seen == {"R1", "R2", "R3", "R4", "R5", "R6", "R7", "R8"}

    _report("every route x category x valence reaches exactly one rule", body)


def test_taboo_monotonicity_ten_turns():
    def body():
        bundle = load_bundle(default_data_dir())
        engine = DialogEngine(bundle)
        state = SessionState(session_id="taboo")
        script = [
            "go to miyajima",
            "i am hungry",
            "the natto was awful",  # captures 'natto' and 'awful'
            "i am hungry",
            "buy momiji manju",
            "nice weather today",
            "eat okonomiyaki",
            "go somewhere",
            "talk about dinner",
            "i am hungry",
        ]
        captured_at = None
        for index, text in enumerate(script):
            result = engine.run_turn(state, text)
            if captured_at is None and "natto" in result.taboo:
                captured_at = index
            if captured_at is not None:
                assert all(r.id != "natto" for r in result.recommendations), text
                assert "natto" in result.taboo
        assert captured_at == 2

    _report("taboo capture blocks the term for the rest of the session", body)


def test_guided_walk_scenario():
    def body():
        bundle = load_bundle(default_data_dir())
        engine = DialogEngine(bundle)
        state = SessionState(session_id="walk")
        arrival = engine.run_turn(state, "i will go to hiroshima castle")
        assert arrival.recommendations[0].id == "hiroshima_castle"
        hungry = engine.run_turn(state, "i am hungry")
        assert hungry.recommendations[0].kind == "Food"
        closed = engine.run_turn(state, "the restaurant was closed")
        assert closed.emotion.valence is Valence.DISPLEASURE
        assert closed.emotion.emotion is EmotionType.DISTRESS
        assert "closed" in closed.taboo
        top = closed.recommendations[0]
        assert top.kind == "Food" and top.id == "okonomiyaki"
        assert "near" in top.rationale.lower()
        assert "shukukeien" in top.rationale.lower() or "hondori" in top.rationale.lower()

    _report("guided-walk scenario: closed restaurant -> okonomiyaki nearby", body)


def test_agreement_value_properties():
    def body():
        rng = random.Random(55)
        for _ in range(1000):
            x = [rng.random() for _ in range(20)]
            y = [rng.random() for _ in range(20)]
            z = [rng.random() for _ in range(20)]
            av = agreement_value(x, y)
            assert 0.0 <= av <= 1.0
            assert agreement_value(x, x) == 1.0
            assert abs(av - agreement_value(y, x)) <= 1e-12
            bound = sum(abs(a - b) for a, b in zip(x, y)) / 20
            assert abs(agreement_value(x, z) - agreement_value(y, z)) <= bound + 1e-12

    _report("agreement value: range, identity, symmetry, Lipschitz (1000 pairs)", body)


VOCABULARY = [
    "go to miyajima",
    "go to hiroshima castle",
    "i am hungry",
    "eat okonomiyaki",
    "buy momiji manju",
    "the restaurant was closed",
    "nice weather today",
    "the natto was awful",
    "see the atomic bomb dome",
    "look for a gift",
    "talk about dinner",
    "visit shukukeien",
]


def test_persistence_and_api_library_equivalence(tmp_path):
    def body():
        data = tmp_path / "data"
        shutil.copytree(default_data_dir(), data)
        app = create_app(data_dir=data, sessions_dir=tmp_path / "api_sessions")
        bundle = load_bundle(default_data_dir())
        engine = DialogEngine(bundle)
        store = SessionStore(tmp_path / "lib_sessions")
        state = store.create()

        rng = random.Random(2024)
        with TestClient(app) as client:
            session_id = client.post("/api/v1/sessions", json={}).json()["session_id"]
            for _ in range(20):
                text = rng.choice(VOCABULARY)
                api_body = client.post(
                    f"/api/v1/sessions/{session_id}/utterances", json={"text": text}
                ).json()
                direct = engine.run_turn(state, text)
                store.save(state)
                assert api_body["profile"] == direct.profile
                assert api_body["mood"] == direct.mood
                assert api_body["taboo"] == direct.taboo
                assert [r["id"] for r in api_body["recommendations"]] == [
                    r.id for r in direct.recommendations
                ]
                assert api_body["fired_rules"] == direct.fired_rules
                # persistence round trip after every turn
                reloaded = store.load(state.session_id)
                assert reloaded.to_dict() == state.to_dict()

    _report("persistence round-trip and API/library equivalence on 20 turns", body)
