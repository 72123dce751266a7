import itertools

import pytest

from mhopf.core import identity_multiplier
from mhopf.double import two_leg_from_tensor
from mhopf.instances.group import GroupAlgebra
from mhopf.instances.ore import ore_dual_r
from mhopf.linalg import tensor
from mhopf.quasitri import (QTStructure, check_inner_s2, check_inner_s4, check_qt_axioms, check_r_self_inverse,
                            check_yang_baxter, multiplier_equal_records)

from conftest import all_pass, some_fail

KEYS = [(p, k) for p in range(-3, 4) for k in (0, 1)]
PAIRS = list(itertools.product(KEYS, KEYS))[::3]
TRIPLES = list(itertools.product(KEYS[::2], KEYS[1::3], KEYS[::3]))[:80]


@pytest.fixture(scope="module")
def bad_qt(dual):
    return QTStructure(dual, ore_dual_r(dual, corrupt="r-sign"), name="ore-dual")


def test_trivial_r_gives_trivial_u(z4):
    kG = GroupAlgebra(z4)
    qt = QTStructure(kG, two_leg_from_tensor(kG, tensor(kG.one(), kG.one()), label="1"))
    for p in z4.elements:
        x = kG.elem(p)
        assert qt.u().left(x) == x and qt.g().left(x) == x
    ks = z4.elements
    pairs = list(itertools.product(ks, ks))
    triples = list(itertools.product(ks, ks, ks))
    all_pass(check_qt_axioms(qt, pairs, triples))
    all_pass(check_yang_baxter(qt, triples))


def test_dual_r_axioms(dual_qt):
    all_pass(check_qt_axioms(dual_qt, PAIRS, TRIPLES))
    all_pass(check_r_self_inverse(dual_qt, PAIRS))


def test_dual_r_yang_baxter(dual_qt):
    all_pass(check_yang_baxter(dual_qt, TRIPLES))


def test_dual_u_is_delta_hat(dual_qt, dual):
    d = dual.modular_multiplier()
    all_pass(multiplier_equal_records("ore-dual", dual, dual_qt.u(), d, KEYS, "u = delta_hat"))
    all_pass(multiplier_equal_records("ore-dual", dual, dual_qt.u_inv(), d, KEYS, "u^-1 = delta_hat"))


def test_dual_g_is_one(dual_qt, dual):
    all_pass(multiplier_equal_records("ore-dual", dual, dual_qt.g(), identity_multiplier(dual), KEYS, "g = 1"))


def test_dual_inner_automorphisms(dual_qt):
    all_pass(check_inner_s2(dual_qt, KEYS, PAIRS))
    all_pass(check_inner_s4(dual_qt, KEYS, PAIRS))


def test_r_sign_corruption_detected(bad_qt):
    some_fail(check_qt_axioms(bad_qt, PAIRS, TRIPLES))
    some_fail(check_inner_s2(bad_qt, KEYS, PAIRS))


def test_double_r_axioms(double_qt, ore_double):
    keys = ore_double.window(1)
    pairs = list(itertools.product(keys, keys))[::7]
    triples = list(itertools.product(keys[::3], keys[1::4], keys[::5]))[:40]
    all_pass(check_qt_axioms(double_qt, pairs, triples))
    all_pass(check_yang_baxter(double_qt, triples))
