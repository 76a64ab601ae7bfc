from __future__ import annotations

import pytest

from cone_zoo import all_cones, all_semigroups


@pytest.fixture(scope="session")
def zoo_cones():
    return all_cones()


@pytest.fixture(scope="session")
def zoo_semigroups():
    return all_semigroups()
