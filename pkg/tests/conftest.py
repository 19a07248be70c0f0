import pytest

from lietriples.pipeline import RunConfig, replay


@pytest.fixture(scope="session")
def config():
    return RunConfig(seed=1)


@pytest.fixture(scope="session")
def replay_result():
    """One full catalog replay shared by every test that needs reports."""
    doc, reports, all_match = replay(RunConfig(seed=1))
    by_id = {r.triple_id: r for r in reports}
    return doc, by_id, all_match
