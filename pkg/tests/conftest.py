from fractions import Fraction as F
from itertools import product

import pytest
from hypothesis import settings

from chkbasis import exact
from chkbasis.chk import MassParams

settings.register_profile("exact", deadline=None, max_examples=60)
settings.load_profile("exact")

GRID = [MassParams(m, n) for m, n in product([F(0), F(1, 2), F(1)], [F(0), F(1, 3), F(2)])]
SAMPLES = [F(k, 20) for k in range(21)]


@pytest.fixture(autouse=True)
def _verify_solves(monkeypatch):
    monkeypatch.setattr(exact, "VERIFY_SOLUTIONS", True)
