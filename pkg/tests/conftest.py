import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from foxcoh.entry import parse_entry  # noqa: E402
from foxcoh.exactla import QuatMatrix  # noqa: E402
from foxcoh.lie import FLAVORS, lie_basis  # noqa: E402
from foxcoh.manifest import Manifest  # noqa: E402
from foxcoh.words import Presentation  # noqa: E402

R8 = "BabAbaBAbA"
RW = "abAAAbbABaaaBB"


def qm(rows):
    return QuatMatrix([[parse_entry(e) for e in row] for row in rows])


@pytest.fixture(scope="session")
def gamma8():
    return Manifest.load("gamma8_rho0.json")


@pytest.fixture(scope="session")
def gammaW():
    return Manifest.load("gammaW_rhoW.json")


@pytest.fixture(scope="session")
def z3z3():
    return Manifest.load("z3z3_rhoW.json")


@pytest.fixture(scope="session")
def rho0(gamma8):
    return gamma8.representation()


@pytest.fixture(scope="session")
def rhoW(gammaW):
    return gammaW.representation()


@pytest.fixture(scope="session")
def p8():
    return Presentation.parse("ab", [R8], "gamma8")


@pytest.fixture(scope="session")
def pW():
    return Presentation.parse("ab", [RW], "gammaW")


@pytest.fixture(scope="session")
def pZ3():
    return Presentation.parse("ab", ["aaa", "bbb"], "z3z3")


@pytest.fixture(scope="session")
def bases0(rho0):
    return {f: lie_basis(rho0.form, f) for f in FLAVORS}


@pytest.fixture(scope="session")
def basesW(rhoW):
    return {f: lie_basis(rhoW.form, f) for f in FLAVORS}
