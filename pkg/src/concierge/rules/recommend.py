"""The concierge rule base: eight production rules over three case routes.

Case 1 (movement/sight verbs) reasons over sightseeing spots by the
agreement between the session's emotion profile and each spot's
impression vector.  Case 2 (eat/buy verbs) ranks foods and gifts by
favorite value.  Case 3 (small talk) watches for dislike words, grows
the taboo list, and steers the conversation to a safe topic.  Every
recommendation carries a defuzzified strength and the rules that fired.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from concierge.affect import EmotionProfile, is_negative
from concierge.egc.emotions import EMOTION_ORDER, NEGATIVE_TYPES, EmotionResult
from concierge.egc.fv import FVDatabase
from concierge.errors import NoCandidatesError, ValidationError
from concierge.parsing import ParsedUtterance
from concierge.rules.catalog import (
    FoodRecord,
    GiftRecord,
    Recommendation,
    SpotRecord,
    TabooList,
)
from concierge.rules.membership import MembershipFunctionSet, defuzzify

DISLIKE_THRESHOLD = -0.3
SPOT_SHORTLIST = 3
ITEM_SHORTLIST = 5
AV_HIGH_CUT = 0.5


def agreement_value(profile: list[float], impression: list[float]) -> float:
    """1 minus the mean absolute difference of the 20 components."""
    n = len(EMOTION_ORDER)
    if len(profile) != n or len(impression) != n:
        raise ValidationError(f"agreement value needs two {n}-component vectors")
    return 1.0 - sum(abs(p - q) for p, q in zip(profile, impression)) / n


def positivity_score(impression: list[float]) -> float:
    """Positive-type mass minus negative-type mass of an impression."""
    return sum(
        v if e not in NEGATIVE_TYPES else -v
        for e, v in zip(EMOTION_ORDER, impression)
    )


def filter_taboo(recs: list[Recommendation], taboo: TabooList) -> list[Recommendation]:
    return [r for r in recs if not taboo.blocks(r.id, r.name)]


@dataclass
class Directive:
    kind: str  # recommend_spot | recommend_item | continue_talk | clarify
    text: str
    topic: str | None = None


@dataclass
class RuleOutcome:
    fired: list[str] = field(default_factory=list)
    recommendations: list[Recommendation] = field(default_factory=list)
    directive: Directive | None = None
    diagnostics: list[str] = field(default_factory=list)


class ConciergeRules:
    """Stateless rule engine over an immutable catalog."""

    def __init__(
        self,
        spots: list[SpotRecord],
        foods: list[FoodRecord],
        gifts: list[GiftRecord],
        fv_db: FVDatabase,
        mfs: MembershipFunctionSet | None = None,
    ):
        self.spots = list(spots)
        self.foods = list(foods)
        self.gifts = list(gifts)
        self.fv_db = fv_db
        self.mfs = mfs or MembershipFunctionSet.default()
        self._spot_by_id = {s.id: s for s in self.spots}

    # -- strength helpers -------------------------------------------------

    def spot_strength(self, av: float) -> float:
        high = self.mfs.fuzzify_av(av)
        return defuzzify(1.0 - high, 0.0, high, self.mfs)

    def fv_strength(self, fv: float) -> float:
        m = self.mfs.fuzzify_fv(fv)
        return defuzzify(m.dislike, m.normal, m.like, self.mfs)

    def positivity_strength(self, impression) -> float:
        n = len(EMOTION_ORDER)
        normalized = (positivity_score(list(impression)) + n) / (2 * n)
        high = self.mfs.fuzzify_av(normalized)
        return defuzzify(1.0 - high, 0.0, high, self.mfs)

    # -- case 1: spots -----------------------------------------------------

    def select_spots_case1(
        self,
        parsed: ParsedUtterance,
        emotion: EmotionResult,
        profile: EmotionProfile,
        taboo: TabooList,
        person: str | None = None,
    ) -> RuleOutcome:
        if not self.spots:
            raise NoCandidatesError("catalog has no spots")
        negative = is_negative(emotion)
        category = parsed.object_category

        if category == "Spot":
            if negative:
                return self._rule2_other_spots(parsed, taboo)
            return self._rule1_named_spot(parsed, profile, taboo)
        if category in ("Food", "Gift"):
            outcome = self.select_food_gift_case2(parsed, person, taboo, kind=category)
            outcome.fired.insert(0, "R3")
            return outcome
        if negative:
            outcome = self.handle_talk_case3(parsed, emotion, profile, taboo, person)
            outcome.fired.insert(0, "R5")
            return outcome
        return self._rule4_best_spots(profile, taboo)

    def _scored_spots(self, profile: EmotionProfile, taboo: TabooList):
        scored = []
        for spot in self.spots:
            if taboo.blocks(spot.id, spot.name):
                continue
            av = agreement_value(profile.values, list(spot.impression))
            scored.append((spot, av, self.spot_strength(av)))
        return scored

    def _rule1_named_spot(self, parsed, profile, taboo) -> RuleOutcome:
        outcome = RuleOutcome(fired=["R1"])
        named_id = parsed.object_term
        scored = self._scored_spots(profile, taboo)
        named = next(((s, av, st) for s, av, st in scored if s.id == named_id), None)
        others = sorted(
            (x for x in scored if x[0].id != named_id),
            key=lambda x: (-x[2], x[0].id),
        )
        if named is None:
            # Named spot is taboo or unknown: behave like the else branch.
            outcome.diagnostics.append(f"spot-unavailable:{named_id}")
            picks = others[:SPOT_SHORTLIST]
        elif self.mfs.fuzzify_av(named[1]) >= AV_HIGH_CUT:
            picks = [named] + others[: SPOT_SHORTLIST - 1]
        else:
            # "AV not high": recommend other spots instead of the named one.
            outcome.diagnostics.append(f"av-not-high:{named_id}")
            picks = others[:SPOT_SHORTLIST]
        for spot, av, strength in picks:
            outcome.recommendations.append(
                Recommendation(
                    "Spot",
                    spot.id,
                    spot.name,
                    strength,
                    ("R1",),
                    f"agreement {av:.2f} with your current mood",
                )
            )
        outcome.directive = self._spot_directive(outcome.recommendations)
        return outcome

    def _rule2_other_spots(self, parsed, taboo) -> RuleOutcome:
        outcome = RuleOutcome(fired=["R2"])
        named_id = parsed.object_term
        candidates = [
            s
            for s in self.spots
            if s.id != named_id and not taboo.blocks(s.id, s.name)
        ]
        candidates.sort(key=lambda s: (-positivity_score(list(s.impression)), s.id))
        for spot in candidates[:SPOT_SHORTLIST]:
            outcome.recommendations.append(
                Recommendation(
                    "Spot",
                    spot.id,
                    spot.name,
                    self.positivity_strength(spot.impression),
                    ("R2",),
                    "a place where the mood turns positive",
                )
            )
        outcome.directive = self._spot_directive(
            outcome.recommendations, lead="Somewhere to lift the mood: "
        )
        return outcome

    def _rule4_best_spots(self, profile, taboo) -> RuleOutcome:
        outcome = RuleOutcome(fired=["R4"])
        scored = sorted(
            self._scored_spots(profile, taboo), key=lambda x: (-x[1], x[0].id)
        )
        for spot, av, strength in scored[:SPOT_SHORTLIST]:
            outcome.recommendations.append(
                Recommendation(
                    "Spot",
                    spot.id,
                    spot.name,
                    strength,
                    ("R4",),
                    f"agreement {av:.2f} with your current mood",
                )
            )
        outcome.directive = self._spot_directive(outcome.recommendations)
        return outcome

    # -- case 2: foods and gifts -------------------------------------------

    def select_food_gift_case2(
        self,
        parsed: ParsedUtterance,
        person: str | None,
        taboo: TabooList,
        kind: str | None = None,
    ) -> RuleOutcome:
        outcome = RuleOutcome(fired=["R6"])
        if kind is None and parsed.object_category in ("Food", "Gift"):
            kind = parsed.object_category
        if kind is None:
            kind = "Gift" if parsed.verb_lemma == "buy" else "Food"
        pool = self.foods if kind == "Food" else self.gifts
        named_id = parsed.object_term

        scored = []
        for item in pool:
            if taboo.blocks(item.id, item.name, item.fv_term):
                continue
            fv = self.fv_db.lookup(item.fv_term, person).value
            scored.append((item, fv, self.fv_strength(fv)))
        if not scored:
            outcome.diagnostics.append("all-candidates-taboo")
            outcome.directive = Directive(
                "clarify", "Everything I know in that category is on your taboo list."
            )
            return outcome

        scored.sort(key=lambda x: (-x[2], x[0].id))
        named = next(((i, fv, st) for i, fv, st in scored if i.id == named_id), None)
        if named is not None and named[1] > 0:
            scored.remove(named)
            scored.insert(0, named)
        for item, fv, strength in scored[:ITEM_SHORTLIST]:
            outcome.recommendations.append(
                Recommendation(
                    kind,
                    item.id,
                    item.name,
                    strength,
                    ("R6",),
                    self._item_rationale(item, fv),
                )
            )
        top = outcome.recommendations[0]
        outcome.directive = Directive(
            "recommend_item", f"How about {top.name}? {top.rationale}", topic=top.id
        )
        return outcome

    def _item_rationale(self, item, fv: float) -> str:
        nearby_names = [
            self._spot_by_id[sid].name for sid in item.nearby if sid in self._spot_by_id
        ]
        note = f"favorite value {fv:+.2f}"
        if nearby_names:
            note += "; near " + ", ".join(nearby_names)
        return note

    # -- case 3: talk ------------------------------------------------------

    def handle_talk_case3(
        self,
        parsed: ParsedUtterance,
        emotion: EmotionResult,
        profile: EmotionProfile,
        taboo: TabooList,
        person: str | None = None,
    ) -> RuleOutcome:
        if not is_negative(emotion):
            return self._rule8_reroute(parsed, emotion, profile, taboo, person)

        outcome = RuleOutcome(fired=["R7"])
        captured = []
        for noun in parsed.nouns:
            if self.fv_db.lookup(noun, person).value < DISLIKE_THRESHOLD and noun not in taboo:
                captured.append(noun)
        if captured:
            taboo.add(*captured)
            outcome.diagnostics.append("taboo-captured:" + ",".join(captured))

        proposals = self._topic_proposals(taboo, person)
        outcome.recommendations = proposals[:SPOT_SHORTLIST]
        if outcome.recommendations:
            top = outcome.recommendations[0]
            outcome.directive = Directive(
                "continue_talk",
                f"I hear you. Maybe we could talk about {top.name} instead? {top.rationale}",
                topic=top.id,
            )
        else:
            outcome.directive = Directive("continue_talk", "Tell me more about it.")
        return outcome

    def _topic_proposals(self, taboo: TabooList, person) -> list[Recommendation]:
        proposals = []
        for kind, pool in (("Food", self.foods), ("Gift", self.gifts)):
            for item in pool:
                if taboo.blocks(item.id, item.name, item.fv_term):
                    continue
                fv = self.fv_db.lookup(item.fv_term, person).value
                proposals.append(
                    (fv, Recommendation(kind, item.id, item.name, self.fv_strength(fv), ("R7",), self._item_rationale(item, fv)))
                )
        for spot in self.spots:
            if taboo.blocks(spot.id, spot.name):
                continue
            hit = self.fv_db.lookup(spot.id, person)
            if hit.known:
                proposals.append(
                    (
                        hit.value,
                        Recommendation(
                            "Spot",
                            spot.id,
                            spot.name,
                            self.fv_strength(hit.value),
                            ("R7",),
                            f"favorite value {hit.value:+.2f}",
                        ),
                    )
                )
        proposals.sort(key=lambda x: (-x[0], x[1].id))
        return [rec for _, rec in proposals]

    def _rule8_reroute(self, parsed, emotion, profile, taboo, person) -> RuleOutcome:
        if parsed.object_category in ("Food", "Gift"):
            outcome = self.select_food_gift_case2(parsed, person, taboo, kind=parsed.object_category)
        elif parsed.object_category == "Spot":
            outcome = self._rule1_named_spot(parsed, profile, taboo)
        else:
            outcome = self._rule4_best_spots(profile, taboo)
        outcome.fired.insert(0, "R8")
        return outcome

    # -- routing -----------------------------------------------------------

    def route(
        self,
        parsed: ParsedUtterance,
        emotion: EmotionResult,
        profile: EmotionProfile,
        taboo: TabooList,
        person: str | None = None,
    ) -> RuleOutcome:
        """Total dispatch: every (route, category, valence) hits one rule."""
        if parsed.case_route == "CASE1":
            return self.select_spots_case1(parsed, emotion, profile, taboo, person)
        if parsed.case_route == "CASE2":
            return self.select_food_gift_case2(parsed, person, taboo)
        return self.handle_talk_case3(parsed, emotion, profile, taboo, person)

    @staticmethod
    def _spot_directive(recs: list[Recommendation], lead: str = "") -> Directive:
        if not recs:
            return Directive("clarify", "I could not find a spot to suggest.")
        names = ", ".join(r.name for r in recs)
        return Directive(
            "recommend_spot", f"{lead}You could visit {names}.", topic=recs[0].id
        )
