import pytest
from pytest import fixture

from burnside_etale.env import ORDER_CAP, VERBOSE, STRUCTURAL_CHECK_MAX_ORDER
from burnside_etale.pipeline import Analysis, analyze_group


@pytest.fixture(scope="session", autouse=True)
def set_env():
    with ORDER_CAP.temporary_set(1000), \
            VERBOSE.temporary_set(False), \
            STRUCTURAL_CHECK_MAX_ORDER.temporary_set(360):
        yield


@fixture(scope="session")
def c6() -> Analysis:
    return analyze_group('C6')


@fixture(scope="session")
def s3() -> Analysis:
    return analyze_group('S3')


@fixture(scope="session")
def a5() -> Analysis:
    return analyze_group('A5')
