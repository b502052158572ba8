"""Rule-based utterance parsing against a keyword lexicon.

The first verb (lemma or synonym, left to right) fixes the case route
and event type; the first recognized noun after it fills that event
type's object slot.  Utterances without any listed verb fall back to
the small-talk route with the last recognized noun as conversation
topic.  Multi-word noun terms are written with underscores in the
lexicon and folded greedily during tokenization, as is the one
multi-word verb ``look up`` -> ``look_for``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from concierge.egc.frames import (
    OBJECT,
    PREDICATE,
    PRIMARY_OBJECT_SLOT,
    SUBJECT,
    CaseFrame,
    EventType,
)
from concierge.errors import EmptyUtteranceError, ValidationError

CASE_ROUTES = ("CASE1", "CASE2", "CASE3")
FALLBACK_VERB = "talk"
DEFAULT_SUBJECT = "user"

_REQUIRED_VERBS = {
    "CASE1": {"go", "come", "see", "look_for"},
    "CASE2": {"eat", "buy", "hungry"},
    "CASE3": {"talk"},
}

_WORD_RE = re.compile(r"[^a-z0-9_\s]+")


@dataclass(frozen=True)
class VerbEntry:
    lemma: str
    synonyms: tuple[str, ...]
    case_route: str
    event_type: EventType


class Lexicon:
    def __init__(self, verbs, nouns, stopwords):
        self.verbs: dict[str, VerbEntry] = {}
        self._verb_index: dict[str, str] = {}
        for entry in verbs:
            if entry.lemma in self.verbs:
                raise ValidationError(f"duplicate verb lemma {entry.lemma!r}")
            self.verbs[entry.lemma] = entry
            for token in (entry.lemma, *entry.synonyms):
                if token in self._verb_index and self._verb_index[token] != entry.lemma:
                    raise ValidationError(
                        f"verb token {token!r} claimed by both "
                        f"{self._verb_index[token]!r} and {entry.lemma!r}"
                    )
                self._verb_index[token] = entry.lemma
        self.nouns: dict[str, str] = dict(nouns)
        for term, category in self.nouns.items():
            if category not in ("Spot", "Food", "Gift", "Other"):
                raise ValidationError(f"noun {term!r} has unknown category {category!r}")
        self.stopwords: frozenset[str] = frozenset(stopwords)
        for route, required in _REQUIRED_VERBS.items():
            have = {v.lemma for v in self.verbs.values() if v.case_route == route}
            missing = required - have
            if missing:
                raise ValidationError(f"lexicon is missing {route} verbs {sorted(missing)}")
        # Multi-word terms, longest first, for greedy folding.
        self._phrases = sorted(
            (term.split("_") for term in self.nouns if "_" in term),
            key=len,
            reverse=True,
        )

    @classmethod
    def from_dict(cls, doc: dict) -> "Lexicon":
        if not isinstance(doc, dict):
            raise ValidationError("lexicon document must be an object")
        verbs = []
        for i, entry in enumerate(doc.get("verbs", [])):
            path = f"verbs[{i}]"
            try:
                lemma = entry["lemma"]
                case_route = entry["case"]
                event_type = EventType.from_code(entry["event_type"])
            except KeyError as exc:
                raise ValidationError(f"missing field {exc.args[0]!r}", path) from None
            if case_route not in CASE_ROUTES:
                raise ValidationError(f"unknown case route {case_route!r}", path)
            verbs.append(
                VerbEntry(lemma, tuple(entry.get("synonyms", [])), case_route, event_type)
            )
        nouns = {}
        for i, entry in enumerate(doc.get("nouns", [])):
            path = f"nouns[{i}]"
            if "term" not in entry or "category" not in entry:
                raise ValidationError("noun needs 'term' and 'category'", path)
            nouns[entry["term"]] = entry["category"]
        return cls(verbs, nouns, doc.get("stopwords", []))

    def verb_for(self, token: str) -> VerbEntry | None:
        lemma = self._verb_index.get(token)
        return self.verbs[lemma] if lemma else None

    def noun_category(self, token: str) -> str | None:
        return self.nouns.get(token)

    def fold_phrases(self, tokens: list[str]) -> list[str]:
        out = []
        i = 0
        while i < len(tokens):
            matched = False
            for parts in self._phrases:
                n = len(parts)
                if tokens[i : i + n] == parts:
                    out.append("_".join(parts))
                    i += n
                    matched = True
                    break
            if not matched:
                out.append(tokens[i])
                i += 1
        return out


@dataclass
class ParsedUtterance:
    frame: CaseFrame
    verb_lemma: str
    case_route: str
    object_category: str | None  # Spot | Food | Gift | Other | None
    nouns: list[str] = field(default_factory=list)

    @property
    def object_term(self) -> str | None:
        slot = PRIMARY_OBJECT_SLOT[self.frame.event_type]
        return self.frame.term(slot) if slot else None


def tokenize(text: str, lexicon: Lexicon | None = None) -> list[str]:
    cleaned = _WORD_RE.sub(" ", text.lower())
    tokens = cleaned.split()
    folded = []
    i = 0
    while i < len(tokens):
        if tokens[i] == "look" and i + 1 < len(tokens) and tokens[i + 1] in ("up", "for"):
            folded.append("look_for")
            i += 2
        else:
            folded.append(tokens[i])
            i += 1
    if lexicon is not None:
        folded = lexicon.fold_phrases(folded)
        folded = [t for t in folded if t not in lexicon.stopwords]
    else:
        folded = [t for t in folded if t not in _BARE_STOPWORDS]
    if not folded:
        raise EmptyUtteranceError("utterance has no usable tokens")
    return folded


_BARE_STOPWORDS = frozenset(
    "a an the i you we he she they to at in on of is am are was were be it "
    "my me your this that and or but so".split()
)


def parse(text: str, lexicon: Lexicon) -> ParsedUtterance:
    tokens = tokenize(text, lexicon)
    verb_entry = None
    verb_index = -1
    for i, token in enumerate(tokens):
        entry = lexicon.verb_for(token)
        if entry is not None:
            verb_entry = entry
            verb_index = i
            break

    nouns = []
    for token in tokens:
        if lexicon.noun_category(token) is not None and token not in nouns:
            nouns.append(token)

    if verb_entry is not None:
        lemma = verb_entry.lemma
        case_route = verb_entry.case_route
        event_type = verb_entry.event_type
        object_term = next(
            (
                t
                for t in tokens[verb_index + 1 :]
                if lexicon.noun_category(t) is not None
            ),
            None,
        )
    else:
        lemma = FALLBACK_VERB
        case_route = lexicon.verbs[FALLBACK_VERB].case_route
        event_type = lexicon.verbs[FALLBACK_VERB].event_type
        object_term = nouns[-1] if nouns else None

    slots = {SUBJECT: DEFAULT_SUBJECT, PREDICATE: lemma}
    slot = PRIMARY_OBJECT_SLOT[event_type]
    if object_term is not None and slot is not None:
        slots[slot] = object_term
    else:
        # No object to fill: degrade to the largest type the slots support.
        if slot is not None:
            event_type = EventType.V_S if event_type.value.startswith("V") else EventType.A_S_C

    frame = CaseFrame(event_type, slots)
    category = lexicon.noun_category(object_term) if object_term else None
    return ParsedUtterance(frame, lemma, case_route, category, nouns)
