"""Shared sequence-set fixtures; sets are treated as immutable."""
import pytest

from ppsim import build_pps_set


@pytest.fixture(scope="session")
def set3():
    return build_pps_set(3)


@pytest.fixture(scope="session")
def set3_half():
    return build_pps_set(3, mapping_phase="pi/2")


@pytest.fixture(scope="session")
def set4():
    return build_pps_set(4)
