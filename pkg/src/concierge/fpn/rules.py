"""Compile fuzzy production rules into a fuzzy Petri net.

Three rule shapes are supported:

* TYPE1 — ``IF a1 and ... and an THEN c`` with one certainty factor:
  a single transition with n input arcs and one output arc.
* TYPE2 — ``IF a THEN c1 and ... and cn`` with one certainty factor:
  a single transition fanning out to every consequent.
* TYPE3 — ``IF a1 or ... or an THEN c`` with one certainty factor per
  antecedent: n parallel transitions sharing the consequent place, so the
  max-merge of the reasoner realizes the disjunction.

TYPE4 (disjunctive consequents) has no clear implication and is rejected.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from concierge.errors import UnsupportedRuleTypeError, ValidationError
from concierge.fpn.model import FuzzyPetriNet, Place, Proposition, Transition

PLACE_PREFIX = "p_"


class RuleType(enum.Enum):
    TYPE1 = "TYPE1"
    TYPE2 = "TYPE2"
    TYPE3 = "TYPE3"
    TYPE4 = "TYPE4"


@dataclass
class RuleSpec:
    rule_type: RuleType
    antecedents: list[str]
    consequents: list[str]
    cf: list[float]
    id: str | None = None
    labels: dict[str, str] = field(default_factory=dict)

    def validate(self) -> None:
        if self.rule_type is RuleType.TYPE4:
            raise UnsupportedRuleTypeError(
                "TYPE4 rules have no clear implication and are not compiled"
            )
        if not self.antecedents:
            raise ValidationError("rule has no antecedents", self.id)
        if not self.consequents:
            raise ValidationError("rule has no consequents", self.id)
        for value in self.cf:
            if not 0.0 <= value <= 1.0:
                raise ValidationError(f"certainty factor {value!r} outside [0, 1]", self.id)
        if self.rule_type is RuleType.TYPE1:
            if len(self.consequents) != 1 or len(self.cf) != 1:
                raise ValidationError(
                    "TYPE1 needs exactly one consequent and one certainty factor", self.id
                )
        elif self.rule_type is RuleType.TYPE2:
            if len(self.antecedents) != 1 or len(self.cf) != 1:
                raise ValidationError(
                    "TYPE2 needs exactly one antecedent and one certainty factor", self.id
                )
        elif self.rule_type is RuleType.TYPE3:
            if len(self.antecedents) < 2:
                raise ValidationError("TYPE3 needs at least two antecedents", self.id)
            if len(self.consequents) != 1:
                raise ValidationError("TYPE3 needs exactly one consequent", self.id)
            if len(self.cf) != len(self.antecedents):
                raise ValidationError(
                    "TYPE3 needs one certainty factor per antecedent", self.id
                )


def place_id_for(proposition_id: str) -> str:
    return PLACE_PREFIX + proposition_id


def compile_rules(rules: list[RuleSpec]) -> FuzzyPetriNet:
    """Build one net from a rule list; shared proposition ids share places."""
    propositions: dict[str, Proposition] = {}
    transitions: list[Transition] = []
    counter = 0

    def intern(prop_id: str, rule: RuleSpec) -> str:
        if not prop_id:
            raise ValidationError("empty proposition id", rule.id)
        if prop_id not in propositions:
            propositions[prop_id] = Proposition(prop_id, rule.labels.get(prop_id, prop_id))
        return place_id_for(prop_id)

    for rule in rules:
        rule.validate()
        inputs = [intern(a, rule) for a in rule.antecedents]
        outputs = [intern(c, rule) for c in rule.consequents]
        counter += 1
        base = rule.id or f"t{counter}"
        if rule.rule_type is RuleType.TYPE3:
            for k, (inp, mu) in enumerate(zip(inputs, rule.cf), start=1):
                transitions.append(Transition(f"{base}_{k}", mu, (inp,), tuple(outputs)))
        else:
            transitions.append(Transition(base, rule.cf[0], tuple(inputs), tuple(outputs)))

    places = [Place(place_id_for(p), p) for p in propositions]
    return FuzzyPetriNet(propositions.values(), places, transitions)
