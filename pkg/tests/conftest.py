import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

import pytest  # noqa: E402

from rootnum.catalog_io import catalog_family  # noqa: E402

# (name, params) for every built-in family at its reference parameters
CATALOG_CASES = (
    ("washington", {}),
    ("legendre", {}),
    ("F", {"s": 1}),
    ("G", {"w": 1}),
    ("H", {"w": 1}),
    ("I", {"w": 1}),
    ("J", {"m": 1, "w": 1}),
    ("L", {"w": 1, "s": 1, "v": 1}),
)


@pytest.fixture(scope="session")
def surfaces():
    return {name: catalog_family(name, **kw).surface()
            for name, kw in CATALOG_CASES}
