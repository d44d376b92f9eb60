import pytest

import property_suites as ps


@pytest.mark.parametrize("suite", ps.ALL_SUITES, ids=lambda s: s.__name__)
def test_property_suite(suite):
    n, failures = suite(seed=1234)
    assert n >= 40
    assert not failures, failures[:5]


def test_total_case_count():
    total, failures = ps.run_all(seed=1234)
    assert total >= 200
    assert not failures
