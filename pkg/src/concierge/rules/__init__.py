from concierge.rules.catalog import (
    FoodRecord,
    GiftRecord,
    Recommendation,
    SpotRecord,
    TabooList,
)
from concierge.rules.membership import (
    FVMembership,
    MembershipFunctionSet,
    PiecewiseLinear,
    defuzzify,
)
from concierge.rules.net import (
    CONSEQUENTS,
    DEFAULT_CF,
    EVIDENCE,
    compile_concierge_net,
    evidence_marking,
    run_concierge_net,
)
from concierge.rules.recommend import (
    ConciergeRules,
    Directive,
    RuleOutcome,
    agreement_value,
    filter_taboo,
    positivity_score,
)

__all__ = [
    "CONSEQUENTS",
    "ConciergeRules",
    "DEFAULT_CF",
    "Directive",
    "EVIDENCE",
    "FVMembership",
    "FoodRecord",
    "GiftRecord",
    "MembershipFunctionSet",
    "PiecewiseLinear",
    "Recommendation",
    "RuleOutcome",
    "SpotRecord",
    "TabooList",
    "agreement_value",
    "compile_concierge_net",
    "defuzzify",
    "evidence_marking",
    "filter_taboo",
    "positivity_score",
    "run_concierge_net",
]
