import pytest

from chevalg.claims import Context, RunConfig
from chevalg.chevalley import build_structure_table
from chevalg.embedding import decompose_adjoint, phi_so14_e8
from chevalg.root_system import CartanType, build_root_system


@pytest.fixture(scope="session")
def e8_rs():
    return build_root_system(CartanType("E", 8))


@pytest.fixture(scope="session")
def d7_rs():
    return build_root_system(CartanType("D", 7))


@pytest.fixture(scope="session")
def e8_table(e8_rs):
    return build_structure_table(e8_rs)


@pytest.fixture(scope="session")
def d7_table(d7_rs):
    return build_structure_table(d7_rs)


@pytest.fixture(scope="session")
def emb(d7_rs, e8_table):
    return phi_so14_e8(d7_rs, e8_table)


@pytest.fixture(scope="session")
def adjoint(emb):
    return decompose_adjoint(emb)


@pytest.fixture(scope="session")
def ctx(e8_table, d7_table):
    """Shared claim context with full default sampling sizes."""
    return Context(RunConfig(), e8_table=e8_table, d7_table=d7_table)
