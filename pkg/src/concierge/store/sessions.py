"""Session state and its on-disk form.

Each session is a JSON snapshot at ``<root>/<id>.json`` plus an
append-only JSONL turn log at ``<root>/<id>.log.jsonl``.  Snapshots are
written atomically (tmp file + rename); the log survives snapshot
corruption.  Writes to one session are serialized by a per-id lock.
"""

from __future__ import annotations

import json
import threading
import uuid
from dataclasses import asdict, dataclass, field
from pathlib import Path

from concierge.affect import DEFAULT_RHO, PROFILE_SIZE
from concierge.errors import NotFoundError, SessionIntegrityError, ValidationError


@dataclass
class TurnRecord:
    utterance: str
    case_route: str
    verb: str
    object_term: str | None
    object_category: str | None
    emotion: str | None
    valence: str
    intensity: float
    mood_after: str
    reply: str
    fired_rules: list[str] = field(default_factory=list)
    recommendations: list[dict] = field(default_factory=list)
    taboo_after: list[str] = field(default_factory=list)
    net_degrees: dict[str, float] = field(default_factory=dict)
    diagnostics: list[str] = field(default_factory=list)


@dataclass
class SessionState:
    session_id: str
    person_id: str | None = None
    mood: str = "neutral"
    profile: list[float] = field(default_factory=lambda: [0.0] * PROFILE_SIZE)
    rho: float = DEFAULT_RHO
    taboo: list[str] = field(default_factory=list)
    history: list[TurnRecord] = field(default_factory=list)

    def __post_init__(self):
        if len(self.profile) != PROFILE_SIZE:
            raise ValidationError(f"profile must have {PROFILE_SIZE} components")

    def to_dict(self) -> dict:
        return asdict(self)

    @classmethod
    def from_dict(cls, doc: dict) -> "SessionState":
        history = [TurnRecord(**turn) for turn in doc.get("history", [])]
        return cls(
            session_id=doc["session_id"],
            person_id=doc.get("person_id"),
            mood=doc.get("mood", "neutral"),
            profile=list(doc.get("profile", [0.0] * PROFILE_SIZE)),
            rho=doc.get("rho", DEFAULT_RHO),
            taboo=list(doc.get("taboo", [])),
            history=history,
        )


class SessionStore:
    def __init__(self, root: str | Path):
        self.root = Path(root)
        self.root.mkdir(parents=True, exist_ok=True)
        self._locks: dict[str, threading.RLock] = {}
        self._locks_guard = threading.Lock()

    def lock_for(self, session_id: str) -> threading.RLock:
        with self._locks_guard:
            return self._locks.setdefault(session_id, threading.RLock())

    def _snapshot_path(self, session_id: str) -> Path:
        return self.root / f"{session_id}.json"

    def _log_path(self, session_id: str) -> Path:
        return self.root / f"{session_id}.log.jsonl"

    def create(self, person_id: str | None = None, mood: str = "neutral") -> SessionState:
        state = SessionState(session_id=uuid.uuid4().hex[:12], person_id=person_id, mood=mood)
        self.save(state)
        return state

    def save(self, state: SessionState) -> None:
        with self.lock_for(state.session_id):
            path = self._snapshot_path(state.session_id)
            tmp = path.with_suffix(".json.tmp")
            tmp.write_text(json.dumps(state.to_dict(), indent=2))
            tmp.replace(path)

    def append_turn(self, session_id: str, record: TurnRecord) -> None:
        with self.lock_for(session_id):
            with self._log_path(session_id).open("a") as handle:
                handle.write(json.dumps(asdict(record)) + "\n")

    def load(self, session_id: str) -> SessionState:
        path = self._snapshot_path(session_id)
        if not path.exists():
            raise NotFoundError(f"no session {session_id!r}")
        try:
            return SessionState.from_dict(json.loads(path.read_text()))
        except (json.JSONDecodeError, KeyError, TypeError) as exc:
            raise SessionIntegrityError(
                f"session snapshot {path.name} is corrupt ({exc}); "
                f"turn log left untouched"
            ) from None

    def list_ids(self) -> list[str]:
        return sorted(p.stem for p in self.root.glob("*.json") if not p.name.endswith(".tmp"))

    def delete(self, session_id: str) -> None:
        path = self._snapshot_path(session_id)
        if not path.exists():
            raise NotFoundError(f"no session {session_id!r}")
        with self.lock_for(session_id):
            path.unlink()
            log = self._log_path(session_id)
            if log.exists():
                log.unlink()

    def exists(self, session_id: str) -> bool:
        return self._snapshot_path(session_id).exists()
