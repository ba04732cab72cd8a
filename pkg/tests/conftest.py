import os

import pytest
from hypothesis import HealthCheck, settings

import fstable.config

# expensive internal cross-checks stay on for the whole suite
fstable.config.DEBUG = True

settings.register_profile(
    "suite",
    derandomize=True,
    deadline=None,
    max_examples=60,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("suite")


@pytest.fixture(scope="session")
def backend_name():
    return os.environ.get("FSTABLE_KERNELS", "auto")
