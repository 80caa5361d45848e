import sys
from pathlib import Path

import pytest

from quiverhom import GF, QQ

sys.path.insert(0, str(Path(__file__).parent))

FIELDS = [QQ, GF(101)]
FIELD_IDS = ["QQ", "GF101"]


@pytest.fixture(params=FIELDS, ids=FIELD_IDS)
def field(request):
    return request.param


def repo_root() -> Path:
    return Path(__file__).resolve().parent.parent


@pytest.fixture
def fixture_dir() -> Path:
    return repo_root() / "fixtures"
