import pytest

from flagspec.catalog import BIPLANE_IDS, CATALOG_IDS, get_design
from flagspec.flag_graphs import gamma1, gamma2


@pytest.fixture(scope="session")
def catalog_designs():
    return {cid: get_design(cid) for cid in CATALOG_IDS}


@pytest.fixture(scope="session")
def gamma1_graphs(catalog_designs):
    return {cid: gamma1(d) for cid, d in catalog_designs.items()}


@pytest.fixture(scope="session")
def gamma2_graphs(catalog_designs):
    return {cid: gamma2(catalog_designs[cid]) for cid in BIPLANE_IDS}
