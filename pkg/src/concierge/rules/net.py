"""The concierge rule base compiled onto a fuzzy Petri net.

Twelve propositions cover the evidence (object category, agreement
high, favorite value positive, emotion negative) and the conclusions
(recommend spot / alternative spot / food-gift, continue talk, reroute
to case 1 or 2).  Every rule is a conjunction, so each compiles to a
TYPE1 spec; rules sharing a conclusion merge by max exactly as a
disjunctive rule would.  RC1-RC3 are the bridges between the three
case regions; RC3 doubles as rule 5 ("no object and negative mood:
go talk") and RC1/RC2 as rule 8's way back out of small talk.
"""

from __future__ import annotations

from concierge.fpn import (
    FuzzyPetriNet,
    Marking,
    ReasoningConfig,
    RuleSpec,
    RuleType,
    compile_rules,
    place_id_for,
    run,
)

OBJ_IS_SPOT = "obj-is-spot"
OBJ_IS_FOOD_GIFT = "obj-is-food-gift"
OBJ_IS_NOTHING = "obj-is-nothing"
AV_HIGH = "av-high"
FV_POSITIVE = "fv-positive"
EMOTION_NEGATIVE = "emotion-negative"
RECOMMEND_SPOT = "recommend-spot"
RECOMMEND_ALT_SPOT = "recommend-alt-spot"
RECOMMEND_FOOD_GIFT = "recommend-food-gift"
CONTINUE_TALK = "continue-talk"
REROUTE_CASE1 = "reroute-case1"
REROUTE_CASE2 = "reroute-case2"

EVIDENCE = (
    OBJ_IS_SPOT,
    OBJ_IS_FOOD_GIFT,
    OBJ_IS_NOTHING,
    AV_HIGH,
    FV_POSITIVE,
    EMOTION_NEGATIVE,
)
CONSEQUENTS = (
    RECOMMEND_SPOT,
    RECOMMEND_ALT_SPOT,
    RECOMMEND_FOOD_GIFT,
    CONTINUE_TALK,
    REROUTE_CASE1,
    REROUTE_CASE2,
)

DEFAULT_CF = {
    "R1": 0.9,
    "R2": 0.9,
    "R3": 0.9,
    "R4": 0.9,
    "R6": 0.9,
    "R7": 0.8,
    "RC1": 0.8,
    "RC2": 0.8,
    "RC3": 0.8,
}


def compile_concierge_net(cf: dict[str, float] | None = None) -> FuzzyPetriNet:
    factors = dict(DEFAULT_CF)
    factors.update(cf or {})
    t1 = RuleType.TYPE1

    def rule(rid, antecedents, consequent):
        return RuleSpec(t1, list(antecedents), [consequent], [factors[rid]], id=rid)

    specs = [
        rule("R1", (OBJ_IS_SPOT, AV_HIGH), RECOMMEND_SPOT),
        rule("R2", (OBJ_IS_SPOT, EMOTION_NEGATIVE), RECOMMEND_ALT_SPOT),
        rule("R3", (OBJ_IS_FOOD_GIFT, FV_POSITIVE), RECOMMEND_FOOD_GIFT),
        rule("R4", (OBJ_IS_NOTHING, AV_HIGH), RECOMMEND_SPOT),
        rule("R6", (FV_POSITIVE,), RECOMMEND_FOOD_GIFT),
        rule("R7", (EMOTION_NEGATIVE,), CONTINUE_TALK),
        rule("RC1", (OBJ_IS_SPOT,), REROUTE_CASE1),
        rule("RC2", (OBJ_IS_FOOD_GIFT,), REROUTE_CASE2),
        rule("RC3", (OBJ_IS_NOTHING, EMOTION_NEGATIVE), CONTINUE_TALK),
    ]
    return compile_rules(specs)


def evidence_marking(net: FuzzyPetriNet, evidence: dict[str, float]) -> Marking:
    marking = Marking()
    for proposition, degree in evidence.items():
        marking.set(place_id_for(proposition), degree)
    return marking


def run_concierge_net(
    net: FuzzyPetriNet,
    evidence: dict[str, float],
    threshold: float = 0.1,
) -> tuple[dict[str, float], list[str]]:
    """Run the net on evidence; return consequent degrees and fired rule ids."""
    final, trace = run(net, evidence_marking(net, evidence), ReasoningConfig(threshold=threshold))
    degrees = {prop: final.get(place_id_for(prop)) for prop in CONSEQUENTS}
    return degrees, sorted(trace.transitions_fired())
