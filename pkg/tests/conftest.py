import os
import sys
from pathlib import Path

import pytest

from dvsigma import pipeline
from dvsigma.pipeline import Cache, Options

CORE_STAGES = [s for s in pipeline.STAGES if pipeline.STAGES[s] not in pipeline.STRETCH]


@pytest.fixture(scope="session")
def cache_dir(tmp_path_factory) -> Path:
    """Shared pipeline cache; set DVSIGMA_TEST_CACHE to reuse one across runs."""
    env = os.environ.get("DVSIGMA_TEST_CACHE")
    return Path(env) if env else tmp_path_factory.mktemp("dvsigma-cache")


@pytest.fixture(scope="session")
def cache(cache_dir) -> Cache:
    return Cache(cache_dir, Options())


def ensure(cache: Cache, *stages):
    """Run the given stages (and their prerequisites) unless already cached."""
    for stage in stages:
        for pre in pipeline.PREREQS[stage]:
            ensure(cache, pre)
        if not cache.has(stage):
            pipeline.run_stage(stage, cache)
    return cache


@pytest.fixture(scope="session")
def generators(cache):
    return ensure(cache, "build-sigma").artifact("build-sigma")


@pytest.fixture(scope="session")
def group(cache):
    return ensure(cache, "characters").artifact("characters")


@pytest.fixture(scope="session")
def points(cache):
    return ensure(cache, "singular-points").artifact("singular-points")


@pytest.fixture(scope="session")
def picard_artifacts(cache):
    return ensure(cache, "picard").artifact("picard")


def pytest_terminal_summary(terminalreporter):
    acc = sys.modules.get("test_acceptance")
    if acc is None or not acc.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(acc.RESULTS):
        terminalreporter.write_line(acc.RESULTS[num])
