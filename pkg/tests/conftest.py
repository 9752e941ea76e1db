import pytest

from hopflike.symfunc import transition_cache


@pytest.fixture(autouse=True)
def _isolate_cache_path():
    # CLI tests may point the shared cache at a tmp file; restore after
    cache = transition_cache()
    previous = cache.path
    yield
    cache.set_path(previous)
