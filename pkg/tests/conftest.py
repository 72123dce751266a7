import pytest

from mhopf.fixtures import OreDoubleFixtures, build_ore_double
from mhopf.instances.group import FunctionAlgebra, GroupAlgebra, GroupPairing, load_group
from mhopf.instances.ore import OreAlgebra, OreDual, OrePairing, ore_dual_r
from mhopf.quasitri import QTStructure
from mhopf.double import canonical_r
from mhopf.suites import build_group_double


@pytest.fixture(scope="session")
def ore():
    return OreAlgebra()


@pytest.fixture(scope="session")
def dual():
    return OreDual()


@pytest.fixture(scope="session")
def pairing(ore, dual):
    return OrePairing(ore, dual)


@pytest.fixture(scope="session")
def dual_qt(dual):
    return QTStructure(dual, ore_dual_r(dual), name="ore-dual")


@pytest.fixture(scope="session")
def ore_double():
    D, A, Ah, P = build_ore_double()
    return D


@pytest.fixture(scope="session")
def double_qt(ore_double):
    return QTStructure(ore_double, canonical_r(ore_double, lambda i: i), name="ore-double")


@pytest.fixture(scope="session")
def double_fixtures(ore_double):
    return OreDoubleFixtures(ore_double)


@pytest.fixture(scope="session")
def s3():
    return load_group("S3")


@pytest.fixture(scope="session")
def z4():
    return load_group("Z4")


@pytest.fixture(scope="session")
def s3_double(s3):
    return build_group_double(s3)


@pytest.fixture(scope="session")
def z4_double(z4):
    return build_group_double(z4)


@pytest.fixture(scope="session")
def s3_parts(s3):
    K, kG = FunctionAlgebra(s3), GroupAlgebra(s3)
    return K, kG, GroupPairing(s3, K, kG)


def all_pass(records):
    bad = [r for r in records if r.status != "pass"]
    assert records, "no records produced"
    assert not bad, f"{len(bad)} failing, first: {bad[0]}"


def some_fail(records):
    assert any(r.status == "fail" for r in records), "corruption went undetected"


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import LINES
    except ImportError:
        return
    if LINES:
        terminalreporter.section("acceptance criteria")
        for n in sorted(LINES):
            terminalreporter.write_line(LINES[n])
