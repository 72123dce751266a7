import itertools

import pytest

from mhopf.axioms import check_mha_axioms
from mhopf.core import identity_multiplier
from mhopf.double import PairingBundle, canonical_r, plain_double
from mhopf.linalg import serialize, sign
from mhopf.quasitri import QTStructure, check_inner_s4, multiplier_equal_records

from conftest import all_pass, some_fail


@pytest.fixture(scope="module")
def fkeys(ore_double):
    return ore_double.window(1)


@pytest.mark.parametrize("p", [-3, 0, 1, 4])
def test_six_relations(double_fixtures, p):
    for name, lhs, rhs in double_fixtures.relations(p):
        assert lhs == rhs, name


def test_relation_b_w1_expanded(double_fixtures):
    # b w[2,1] = w[2,0] - w[2,0] a - w[1,1] b
    F = double_fixtures
    lhs = F.D.multiply(F.ab(0, 1), F.w(2, 1))
    assert serialize(lhs) == serialize(F.w(2, 0) - F.D.multiply(F.w(2, 0), F.ab(1)) - F.D.multiply(F.w(1, 1), F.ab(0, 1)))


def test_embeddings_commute_with_pair(ore_double):
    D = ore_double
    x, y = D.X.elem((2, 1)), D.Y.elem((-1, 0))
    assert D.multiply(D.embed_x(x), D.embed_y(y)) == D.pair(x, y)


@pytest.mark.parametrize("name", ["u (algebra side first)", "u (rewritten)"])
def test_u_fixtures(double_qt, double_fixtures, ore_double, fkeys, name):
    all_pass(multiplier_equal_records("ore-double", ore_double, double_qt.u(), double_fixtures.all()[name], fkeys,
                                      name))


@pytest.mark.parametrize("name", ["u^-1 (algebra side first)", "u^-1 (rewritten)"])
def test_u_inverse_fixtures(double_qt, double_fixtures, ore_double, fkeys, name):
    all_pass(multiplier_equal_records("ore-double", ore_double, double_qt.u_inv(), double_fixtures.all()[name],
                                      fkeys, name))


@pytest.mark.parametrize("name", ["S(u)^-1 (algebra side first)", "S(u)^-1 (rewritten)"])
def test_s_u_inverse_fixtures(double_qt, double_fixtures, ore_double, fkeys, name):
    all_pass(multiplier_equal_records("ore-double", ore_double, double_qt.s_u_inv(), double_fixtures.all()[name],
                                      fkeys, name))


def test_g_is_product_of_modular_elements(double_qt, double_fixtures, ore_double, fkeys):
    F = double_fixtures
    all_pass(multiplier_equal_records("ore-double", ore_double, double_qt.g(), F.g_expanded(), fkeys, "g expanded"))
    all_pass(multiplier_equal_records("ore-double", ore_double, double_qt.g(), F.g(), fkeys, "g closed"))


def test_g_acts_by_signs(double_fixtures):
    # g = sum (-1)^p w[p,0] a^-1, so on w[q,0] from the left it gives (-1)^q w[q,0] a^-1
    F = double_fixtures
    g = F.g()
    for q in (-2, 0, 3):
        assert g.left(F.w(q, 0)) == F.D.multiply(F.w(q, 0), F.ab(-1)).scale(sign(q))


def test_g_is_not_one(double_qt, ore_double, fkeys):
    some_fail(multiplier_equal_records("ore-double", ore_double, double_qt.g(), identity_multiplier(ore_double),
                                       fkeys, "g = 1"))


def test_double_mha_axioms(ore_double):
    keys = ore_double.window(1)
    pairs = list(itertools.product(keys, keys))[::5]
    triples = list(itertools.product(keys[::3], keys[1::4], keys[::5]))[:40]
    all_pass(check_mha_axioms(ore_double, keys, pairs, triples, ore_double.window(2)))


def test_r_sign_corruption_breaks_g(ore_double, fkeys):
    coeff = lambda i: -1 if i[1] == 1 else 1
    qt = QTStructure(ore_double, canonical_r(ore_double, lambda i: i, coeff=coeff), name="ore-double")
    pairs = list(itertools.product(fkeys, fkeys))[::5]
    some_fail(check_inner_s4(qt, fkeys, pairs))


def _exchange_holds(D, G, target):
    return all(D.multiply(D.embed_y(D.Y.elem(q)), D.embed_x(D.X.elem(p))) == D.pair(D.X.elem(p), D.Y.elem(target(p, q)))
               for p in G.elements for q in G.elements)


def test_group_double_exchange_rules(s3_double, s3):
    # crossed double: the crossing absorbs the conjugation, so d_q u_p = u_p d_q;
    # plain double: d_q u_p = u_p d_{p^-1 q p}
    Dc, _qt, K, kG, pw = s3_double
    plain = plain_double(PairingBundle(kG, K, pw.hit, name="grp"), "plain")
    assert _exchange_holds(Dc, s3, lambda p, q: q)
    assert _exchange_holds(plain, s3, lambda p, q: s3.conj(s3.inv(p), q))
    assert not _exchange_holds(plain, s3, lambda p, q: q)
