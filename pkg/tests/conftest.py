import sys
import time
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from zetaline.config import DEFAULT_CONFIG
from zetaline.dedekind import field_for_discriminant, merged_zero_list
from zetaline.zeros import find_zeros_up_to, t_for_zero_count


@pytest.fixture(scope="session")
def cfg():
    return DEFAULT_CONFIG


@pytest.fixture(scope="session")
def build_times():
    """Wall-clock records for the expensive session builds."""
    return {}


@pytest.fixture(scope="session")
def zeros_2000(build_times):
    """The first >= 2000 critical-line zero ordinates, built once."""
    start = time.monotonic()
    zl = find_zeros_up_to(t_for_zero_count(2000))
    build_times["zeros_2000"] = time.monotonic() - start
    assert len(zl) >= 2000
    return zl


@pytest.fixture(scope="session")
def zeros_small():
    return find_zeros_up_to(120.0)


@pytest.fixture(scope="session")
def field_qi():
    return field_for_discriminant(-4)


@pytest.fixture(scope="session")
def field_q5():
    return field_for_discriminant(5)


@pytest.fixture(scope="session")
def merged_qi(field_qi):
    """Merged zeta_kappa zero list for Q(i), enough for 100-term products."""
    zl = merged_zero_list(field_qi, 150.0)
    assert len(zl) >= 100
    return zl


@pytest.fixture(scope="session")
def merged_q5(field_q5):
    zl = merged_zero_list(field_q5, 150.0)
    assert len(zl) >= 100
    return zl
