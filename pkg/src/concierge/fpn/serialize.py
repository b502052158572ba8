"""JSON and DOT views of nets and markings.

Net document layout::

    {"propositions": [{"id": "d1", "label": "..."}],
     "places":       [{"id": "p_d1", "proposition": "d1"}],
     "transitions":  [{"id": "t1", "mu": 0.9, "inputs": ["p_d1"], "outputs": ["p_d2"]}],
     "marking":      {"degrees": {"p_d1": 1.0}}}        # optional

A marking document is the ``{"degrees": {...}}`` object on its own.
"""

from __future__ import annotations

import json

from concierge.errors import ValidationError
from concierge.fpn.model import FuzzyPetriNet, Marking, Place, Proposition, Transition


def net_to_dict(net: FuzzyPetriNet) -> dict:
    return {
        "propositions": [{"id": p.id, "label": p.label} for p in net.propositions],
        "places": [{"id": p.id, "proposition": p.proposition_id} for p in net.places],
        "transitions": [
            {"id": t.id, "mu": t.mu, "inputs": list(t.inputs), "outputs": list(t.outputs)}
            for t in net.transitions
        ],
    }


def net_to_json(net: FuzzyPetriNet) -> str:
    return json.dumps(net_to_dict(net), indent=2)


def _require(doc: dict, key: str, kind: type, path: str):
    if key not in doc:
        raise ValidationError("missing field", f"{path}.{key}")
    value = doc[key]
    if not isinstance(value, kind) or isinstance(value, bool) and kind is not bool:
        raise ValidationError(f"expected {kind.__name__}", f"{path}.{key}")
    return value


def net_from_dict(doc: dict) -> FuzzyPetriNet:
    if not isinstance(doc, dict):
        raise ValidationError("net document must be an object", "$")
    propositions = []
    for i, entry in enumerate(_require(doc, "propositions", list, "$")):
        path = f"propositions[{i}]"
        propositions.append(
            Proposition(_require(entry, "id", str, path), str(entry.get("label", "")))
        )
    places = []
    for i, entry in enumerate(_require(doc, "places", list, "$")):
        path = f"places[{i}]"
        places.append(
            Place(_require(entry, "id", str, path), _require(entry, "proposition", str, path))
        )
    transitions = []
    for i, entry in enumerate(_require(doc, "transitions", list, "$")):
        path = f"transitions[{i}]"
        mu = _require(entry, "mu", (int, float), path)
        inputs = _require(entry, "inputs", list, path)
        outputs = _require(entry, "outputs", list, path)
        transitions.append(
            Transition(_require(entry, "id", str, path), float(mu), tuple(inputs), tuple(outputs))
        )
    net = FuzzyPetriNet(propositions, places, transitions)
    if "marking" in doc:
        marking_from_dict(doc["marking"], net)
    return net


def net_from_json(text: str) -> FuzzyPetriNet:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValidationError(f"malformed JSON: {exc}") from None
    return net_from_dict(doc)


def marking_to_json(m: Marking) -> str:
    return json.dumps({"degrees": dict(m.degrees)}, indent=2)


def marking_from_dict(doc: dict, net: FuzzyPetriNet | None = None) -> Marking:
    if not isinstance(doc, dict):
        raise ValidationError("marking document must be an object", "marking")
    degrees = _require(doc, "degrees", dict, "marking")
    m = Marking(dict(degrees))
    if net is not None:
        m.check_against(net)
    return m


def marking_from_json(text: str, net: FuzzyPetriNet | None = None) -> Marking:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValidationError(f"malformed JSON: {exc}") from None
    return marking_from_dict(doc, net)


def export_dot(net: FuzzyPetriNet) -> str:
    """DOT digraph: circles for places, boxes for transitions."""
    lines = ["digraph fpn {", "  rankdir=LR;"]
    for place in net.places:
        label = net.proposition(place.proposition_id).label
        lines.append(f'  "{place.id}" [shape=circle, label="{label}"];')
    for t in net.transitions:
        lines.append(f'  "{t.id}" [shape=box, label="{t.id}\\nmu={t.mu:.2f}"];')
    for t in net.transitions:
        for p in t.inputs:
            lines.append(f'  "{p}" -> "{t.id}";')
        for p in t.outputs:
            lines.append(f'  "{t.id}" -> "{p}";')
    lines.append("}")
    return "\n".join(lines) + "\n"
