"""One dialog turn, end to end.

parse -> emotion axes/valence/type -> profile and mood update ->
rule routing -> taboo filtering -> reply.  The compiled fuzzy Petri
net runs on the same turn evidence; its consequent degrees and fired
transitions are recorded with the turn.  The HTTP service and the CLI
both drive this engine, so their outputs are identical by construction.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from concierge.affect import EmotionProfile, is_negative, update_mood, update_profile
from concierge.egc.emotions import (
    EmotionResult,
    SituationFlags,
    Valence,
    emotion_to_vector20,
    evaluate,
)
from concierge.errors import EmptyUtteranceError
from concierge.parsing import ParsedUtterance, parse
from concierge.rules.catalog import Recommendation, TabooList
from concierge.rules.net import (
    AV_HIGH,
    EMOTION_NEGATIVE,
    FV_POSITIVE,
    OBJ_IS_FOOD_GIFT,
    OBJ_IS_NOTHING,
    OBJ_IS_SPOT,
    compile_concierge_net,
    run_concierge_net,
)
from concierge.rules.recommend import ConciergeRules, agreement_value, filter_taboo
from concierge.store.bundle import CatalogBundle
from concierge.store.sessions import SessionState, TurnRecord


@dataclass
class TurnResult:
    reply: str
    directive_kind: str
    parsed: ParsedUtterance
    emotion: EmotionResult
    profile: list[float]
    mood: str
    recommendations: list[Recommendation]
    taboo: list[str]
    fired_rules: list[str]
    net_degrees: dict[str, float] = field(default_factory=dict)
    net_fired: list[str] = field(default_factory=list)
    diagnostics: list[str] = field(default_factory=list)


class DialogEngine:
    def __init__(self, bundle: CatalogBundle, threshold: float = 0.1):
        self.bundle = bundle
        self.threshold = threshold
        self.rules = ConciergeRules(
            bundle.spots, bundle.foods, bundle.gifts, bundle.fv_db, bundle.membership
        )
        self.net = compile_concierge_net(bundle.rule_cf)

    def run_turn(
        self,
        state: SessionState,
        text: str,
        flags: SituationFlags | None = None,
    ) -> TurnResult:
        if not text or not text.strip():
            raise EmptyUtteranceError("utterance is empty")
        diagnostics: list[str] = []

        parsed = parse(text, self.bundle.lexicon)
        emotion = evaluate(
            parsed.frame, flags, self.bundle.fv_db, state.person_id, diagnostics
        )

        profile = update_profile(
            EmotionProfile(list(state.profile), state.rho), emotion_to_vector20(emotion)
        )
        mood = update_mood(state.mood, emotion, self.bundle.mstn, diagnostics=diagnostics)

        taboo = TabooList(state.taboo)
        outcome = self.rules.route(parsed, emotion, profile, taboo, state.person_id)
        recommendations = filter_taboo(outcome.recommendations, taboo)
        diagnostics.extend(outcome.diagnostics)

        evidence = self._evidence(parsed, emotion, profile, state.person_id)
        net_degrees, net_fired = run_concierge_net(self.net, evidence, self.threshold)

        result = TurnResult(
            reply=outcome.directive.text if outcome.directive else "",
            directive_kind=outcome.directive.kind if outcome.directive else "none",
            parsed=parsed,
            emotion=emotion,
            profile=list(profile.values),
            mood=mood,
            recommendations=recommendations,
            taboo=taboo.as_list(),
            fired_rules=list(outcome.fired),
            net_degrees=net_degrees,
            net_fired=net_fired,
            diagnostics=diagnostics,
        )
        self._commit(state, text, result)
        return result

    def _evidence(self, parsed, emotion, profile, person) -> dict[str, float]:
        category = parsed.object_category
        evidence = {
            OBJ_IS_SPOT: 1.0 if category == "Spot" else 0.0,
            OBJ_IS_FOOD_GIFT: 1.0 if category in ("Food", "Gift") else 0.0,
            OBJ_IS_NOTHING: 1.0 if category in (None, "Other") else 0.0,
            AV_HIGH: 0.0,
            FV_POSITIVE: 0.0,
            EMOTION_NEGATIVE: emotion.intensity if is_negative(emotion) else 0.0,
        }
        if parsed.case_route == "CASE1":
            if category == "Spot":
                spot = self.bundle.spot(parsed.object_term)
                if spot is not None:
                    av = agreement_value(profile.values, list(spot.impression))
                    evidence[AV_HIGH] = self.bundle.membership.fuzzify_av(av)
            elif category in (None, "Other") and self.bundle.spots:
                best = max(
                    agreement_value(profile.values, list(s.impression))
                    for s in self.bundle.spots
                )
                evidence[AV_HIGH] = self.bundle.membership.fuzzify_av(best)
        if category in ("Food", "Gift") or parsed.case_route == "CASE2":
            evidence[FV_POSITIVE] = self._best_item_like(parsed, person)
        return evidence

    def _best_item_like(self, parsed, person) -> float:
        named = parsed.object_term
        if named and parsed.object_category in ("Food", "Gift"):
            fv = self.bundle.fv_db.lookup(named, person).value
            return self.bundle.membership.fuzzify_fv(fv).like
        pool = self.bundle.foods if parsed.verb_lemma != "buy" else self.bundle.gifts
        likes = [
            self.bundle.membership.fuzzify_fv(
                self.bundle.fv_db.lookup(item.fv_term, person).value
            ).like
            for item in pool
        ]
        return max(likes, default=0.0)

    def _commit(self, state: SessionState, text: str, result: TurnResult) -> None:
        state.profile = list(result.profile)
        state.mood = result.mood
        state.taboo = list(result.taboo)
        state.history.append(
            TurnRecord(
                utterance=text,
                case_route=result.parsed.case_route,
                verb=result.parsed.verb_lemma,
                object_term=result.parsed.object_term,
                object_category=result.parsed.object_category,
                emotion=result.emotion.emotion.value if result.emotion.emotion else None,
                valence=result.emotion.valence.value,
                intensity=result.emotion.intensity,
                mood_after=result.mood,
                reply=result.reply,
                fired_rules=list(result.fired_rules),
                recommendations=[
                    {
                        "kind": r.kind,
                        "id": r.id,
                        "name": r.name,
                        "strength": r.strength,
                        "fired_rules": list(r.fired_rules),
                        "rationale": r.rationale,
                    }
                    for r in result.recommendations
                ],
                taboo_after=list(result.taboo),
                net_degrees=dict(result.net_degrees),
                diagnostics=list(result.diagnostics),
            )
        )


def neutral_emotion() -> EmotionResult:
    return EmotionResult(None, Valence.NEUTRAL, 0.0)
