"""Emotion-oriented tourist concierge.

Utterances are parsed into case frames, an emotion is computed on a
three-axis space and classified into one of 20 types, the session's
profile and mood are updated, and fuzzy production rules (compiled
onto a fuzzy Petri net) pick sightseeing spots, foods, and gifts.
"""

from concierge.dialog import DialogEngine, TurnResult
from concierge.store.bundle import CatalogBundle, default_data_dir, load_bundle
from concierge.store.sessions import SessionState, SessionStore

__version__ = "0.1.0"

__all__ = [
    "CatalogBundle",
    "DialogEngine",
    "SessionState",
    "SessionStore",
    "TurnResult",
    "default_data_dir",
    "load_bundle",
    "__version__",
]
