"""Load and validate the data bundle: catalog, lexicon, favorite values,
membership breakpoints, mood network, and rule certainty factors.

All files are plain JSON in one directory; validation problems across
every file are aggregated into a single report instead of failing on
the first.  A loaded bundle is immutable and safe to share.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

from concierge.affect import MSTNConfig
from concierge.egc.fv import FVDatabase, normalize_term
from concierge.errors import BundleValidationError, ConciergeError, ValidationError
from concierge.parsing import Lexicon
from concierge.rules.catalog import FoodRecord, GiftRecord, SpotRecord
from concierge.rules.membership import MembershipFunctionSet

BUNDLE_FILES = (
    "catalog.json",
    "lexicon.json",
    "fv.json",
    "membership.json",
    "mstn.json",
    "rules_cf.json",
)


@dataclass
class CatalogBundle:
    spots: list[SpotRecord]
    foods: list[FoodRecord]
    gifts: list[GiftRecord]
    lexicon: Lexicon
    fv_db: FVDatabase
    membership: MembershipFunctionSet
    mstn: MSTNConfig
    rule_cf: dict[str, float]
    warnings: list[str] = field(default_factory=list)

    def spot(self, spot_id: str) -> SpotRecord | None:
        return next((s for s in self.spots if s.id == spot_id), None)

    def summary(self) -> dict:
        return {
            "spots": [{"id": s.id, "name": s.name, "area": s.area, "nearby": list(s.nearby)} for s in self.spots],
            "foods": [{"id": f.id, "name": f.name, "nearby": list(f.nearby)} for f in self.foods],
            "gifts": [{"id": g.id, "name": g.name, "nearby": list(g.nearby)} for g in self.gifts],
        }


def _load_json(path: Path, problems) -> dict | None:
    try:
        return json.loads(path.read_text())
    except FileNotFoundError:
        problems.append((path.name, None, "file not found"))
    except json.JSONDecodeError as exc:
        problems.append((path.name, None, f"malformed JSON: {exc}"))
    return None


def _records(doc, key, cls, problems, filename):
    records = []
    for i, entry in enumerate(doc.get(key, [])):
        path = f"{key}[{i}]"
        try:
            records.append(
                cls(
                    id=entry["id"],
                    name=entry.get("name", entry["id"]),
                    **(
                        {"impression": entry.get("impression", []), "area": entry.get("area", "")}
                        if cls is SpotRecord
                        else {"fv_term": entry.get("fv_term", entry["id"])}
                    ),
                    nearby=tuple(entry.get("nearby", [])),
                )
            )
        except KeyError as exc:
            problems.append((filename, path, f"missing field {exc.args[0]!r}"))
        except ValidationError as exc:
            problems.append((filename, path, str(exc)))
    return records


def load_bundle(data_dir: str | Path) -> CatalogBundle:
    data_dir = Path(data_dir)
    problems: list[tuple[str, str | None, str]] = []
    warnings: list[str] = []

    docs = {name: _load_json(data_dir / name, problems) for name in BUNDLE_FILES}
    if problems:
        raise BundleValidationError(problems)

    catalog = docs["catalog.json"]
    spots = _records(catalog, "spots", SpotRecord, problems, "catalog.json")
    foods = _records(catalog, "foods", FoodRecord, problems, "catalog.json")
    gifts = _records(catalog, "gifts", GiftRecord, problems, "catalog.json")
    if not spots and not any(f == "catalog.json" for f, _, _ in problems):
        problems.append(("catalog.json", "spots", "catalog needs at least one spot"))

    lexicon = fv_db = membership = mstn = None
    try:
        lexicon = Lexicon.from_dict(docs["lexicon.json"])
    except ConciergeError as exc:
        problems.append(("lexicon.json", None, str(exc)))
    try:
        fv_db = FVDatabase.from_dict(docs["fv.json"])
    except ConciergeError as exc:
        problems.append(("fv.json", None, str(exc)))
    try:
        membership = MembershipFunctionSet.from_dict(docs["membership.json"])
    except ConciergeError as exc:
        problems.append(("membership.json", None, str(exc)))
    try:
        mstn = MSTNConfig.from_dict(docs["mstn.json"])
    except ConciergeError as exc:
        problems.append(("mstn.json", None, str(exc)))

    rule_cf = {}
    for rule_id, value in (docs["rules_cf.json"] or {}).items():
        if rule_id.startswith("_"):
            continue
        if not isinstance(value, (int, float)) or not 0.0 <= value <= 1.0:
            problems.append(("rules_cf.json", rule_id, f"certainty factor {value!r} outside [0, 1]"))
        else:
            rule_cf[rule_id] = float(value)

    # Cross references.
    spot_ids = {s.id for s in spots}
    for s in spots:
        for sid in s.nearby:
            if sid not in spot_ids:
                problems.append(("catalog.json", f"spots.{s.id}.nearby", f"unknown spot {sid!r}"))
    for item in [*foods, *gifts]:
        for sid in item.nearby:
            if sid not in spot_ids:
                problems.append(("catalog.json", f"{item.id}.nearby", f"unknown spot {sid!r}"))
        if fv_db is not None and not fv_db.lookup(item.fv_term).known:
            warnings.append(f"no favorite value for {item.id} (term {item.fv_term!r})")

    if problems:
        raise BundleValidationError(problems)
    return CatalogBundle(spots, foods, gifts, lexicon, fv_db, membership, mstn, rule_cf, warnings)


def default_data_dir() -> Path:
    return Path(__file__).resolve().parent.parent / "data"
