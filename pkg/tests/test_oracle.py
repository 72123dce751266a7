import pytest

from mhopf.instances.group import FunctionAlgebra, GroupAlgebra
from mhopf.instances.ore import CORRUPTIONS_DUAL, CORRUPTIONS_ORE, OreAlgebra, OreDual, ore_dual_r
from mhopf.oracle import (delta_partial_sum_oracle, double_r_partial_sum_oracle, dual_antipode_oracle,
                          dual_coproduct_oracle, dual_product_oracle, group_function_oracle, group_twist_oracle,
                          naive_ore_antipode, naive_ore_coproduct, naive_ore_product, ore_table_oracles,
                          r_partial_sum_oracle)


def _clean(rep):
    assert rep.records and rep.status == "pass", rep.mismatches[:2]


def test_naive_ore_words():
    # b a = -a b, and b^2 = 0
    assert naive_ore_product((0, 1), (1, 0)) == {(1, 1): -1}
    assert naive_ore_product((0, 1), (0, 1)) == {}
    assert naive_ore_antipode((0, 1)) == {(-1, 1): -1}
    assert naive_ore_coproduct((0, 1)) == {((1, 0), (0, 1)): 1, ((0, 1), (0, 0)): 1}


def test_ore_tables_certified(ore):
    _clean(ore_table_oracles(ore))


@pytest.mark.parametrize("oracle", [dual_product_oracle, dual_coproduct_oracle, dual_antipode_oracle])
def test_dual_tables_certified(dual, oracle):
    _clean(oracle(dual))


def test_partial_sums_certified(dual, dual_qt, ore_double, double_qt):
    _clean(delta_partial_sum_oracle(dual))
    _clean(r_partial_sum_oracle(dual, dual_qt.R))
    _clean(double_r_partial_sum_oracle(ore_double, double_qt.R))


def test_group_oracles_certified(s3, s3_double):
    _clean(group_function_oracle(s3, FunctionAlgebra(s3), GroupAlgebra(s3)))
    _clean(group_twist_oracle(s3_double[0]))


@pytest.mark.parametrize("corrupt", sorted(CORRUPTIONS_ORE))
def test_ore_corruptions_caught(corrupt):
    assert ore_table_oracles(OreAlgebra(corrupt=corrupt), radius=3).mismatches


@pytest.mark.parametrize("corrupt", sorted(CORRUPTIONS_DUAL))
def test_dual_corruptions_caught(corrupt):
    dual = OreDual(corrupt=corrupt)
    reps = [dual_product_oracle(dual, 3), dual_coproduct_oracle(dual, 3, 2), dual_antipode_oracle(dual, 3)]
    assert any(r.mismatches for r in reps)


def test_r_sign_caught_by_partial_sums(dual):
    rep = r_partial_sum_oracle(dual, ore_dual_r(dual, corrupt="r-sign"), N=6, radius=3)
    assert rep.mismatches


@pytest.mark.parametrize("corrupt", ["antipode-sign"])
def test_group_corruption_caught(s3, corrupt):
    rep = group_function_oracle(s3, FunctionAlgebra(s3, corrupt=corrupt), GroupAlgebra(s3))
    assert rep.mismatches


def test_truncation_too_small_is_inconclusive(dual):
    rep = delta_partial_sum_oracle(dual, N=2, radius=4)
    assert rep.status == "inconclusive"
    assert not rep.mismatches


def test_report_dict_shape(dual):
    d = dual_product_oracle(dual, 2).as_dict()
    assert set(d) == {"name", "range", "status", "counts", "mismatches"}
    assert d["counts"]["fail"] == 0 and d["counts"]["pass"] > 0
