import pytest

from concierge.store.bundle import default_data_dir, load_bundle


@pytest.fixture(scope="session")
def bundle():
    return load_bundle(default_data_dir())


@pytest.fixture()
def session_dir(tmp_path):
    d = tmp_path / "sessions"
    d.mkdir()
    return d
