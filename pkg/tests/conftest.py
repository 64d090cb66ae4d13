import pathlib

import pytest
from hypothesis import HealthCheck, settings

settings.register_profile(
    "package",
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("package")

_GOLDEN = pathlib.Path(__file__).parent / "golden" / "oracle.tsv"


def load_golden() -> dict[tuple[str, int, str], str]:
    """Frozen oracle values as {(kind, k, key): value}; see scripts/make_goldens.py."""
    table = {}
    for line in _GOLDEN.read_text().splitlines():
        if line.startswith("#") or line.startswith("kind\t"):
            continue
        kind, k, key, value = line.split("\t")
        table[(kind, int(k), key)] = value
    return table


@pytest.fixture(scope="session")
def golden():
    return load_golden()
