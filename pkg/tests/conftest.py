import os
from unittest import mock

import pytest

from weak_crossed.fixtures import groupoid_fixture, hopf_smash_fixture, paper_example
from weak_crossed.linalg import QQ, PrimeField


@pytest.fixture(autouse=True)
def mock_env_vars():
    env = {
        k: v
        for k, v in os.environ.items()
        if not k.startswith("WEAK_CROSSED_")
    }
    with mock.patch.dict(os.environ, env, clear=True):
        yield


@pytest.fixture(params=[QQ, PrimeField(3)], ids=["QQ", "GF3"])
def field(request):
    return request.param


@pytest.fixture(scope="session")
def paper():
    return paper_example()


@pytest.fixture(scope="session")
def smash():
    return hopf_smash_fixture()


@pytest.fixture(scope="session")
def groupoid2():
    return groupoid_fixture(2)


@pytest.fixture(scope="session")
def groupoid3():
    return groupoid_fixture(3)
