from concierge.store.bundle import BUNDLE_FILES, CatalogBundle, default_data_dir, load_bundle
from concierge.store.sessions import SessionState, SessionStore, TurnRecord

__all__ = [
    "BUNDLE_FILES",
    "CatalogBundle",
    "SessionState",
    "SessionStore",
    "TurnRecord",
    "default_data_dir",
    "load_bundle",
]
