import itertools

import pytest

from mhopf.core import identity_multiplier
from mhopf.piqt import (check_grouplike_tilde, check_intertwining_lemmas, check_theorem_w, check_u_tilde,
                        u_tilde_closed_form)
from mhopf.quasitri import check_intertwining, check_pi_invariance, check_pi_yang_baxter, check_qt_axioms, \
    multiplier_equal_records
from mhopf.suites import build_group_double

from conftest import all_pass, some_fail


def _samples(D):
    keys = D.window(0)
    pairs = list(itertools.product(keys, keys))
    triples = list(itertools.product(keys, keys, keys))[::61]
    return keys, pairs, triples


@pytest.fixture(scope="module", params=["S3", "Z4"])
def gdouble(request, s3, z4):
    G = s3 if request.param == "S3" else z4
    return (G,) + build_group_double(G)


def test_u_tilde_closed_form(gdouble):
    G, D, qt, *_ = gdouble
    keys, pairs, _ = _samples(D)
    all_pass(multiplier_equal_records(qt.name, D, qt.u(), u_tilde_closed_form(D), keys, "u~ closed form"))
    all_pass(check_u_tilde(qt, keys, pairs))


def test_grouplike_tilde_is_one(gdouble):
    G, D, qt, *_ = gdouble
    keys, pairs, _ = _samples(D)
    all_pass(multiplier_equal_records(qt.name, D, qt.g(), identity_multiplier(D), keys, "g~ = 1"))
    all_pass(check_grouplike_tilde(qt, keys, pairs))


def test_theorem_w(gdouble):
    G, D, qt, *_ = gdouble
    _, pairs, triples = _samples(D)
    all_pass(check_theorem_w(qt, pairs, triples))


def test_pi_axioms_and_yang_baxter(gdouble):
    G, D, qt, *_ = gdouble
    _, pairs, triples = _samples(D)
    all_pass(check_qt_axioms(qt, pairs, triples))
    all_pass(check_pi_yang_baxter(qt, triples))


def test_intertwining_lemmas(gdouble):
    G, D, qt, *_ = gdouble
    _, pairs, _ = _samples(D)
    all_pass(check_intertwining_lemmas(qt, pairs))


def test_wrong_index_detected_on_s3(s3_double):
    D, qt = s3_double[:2]
    _, pairs, _ = _samples(D)
    some_fail(check_intertwining_lemmas(qt, pairs, wrong_index=True))


def test_wrong_index_vacuous_on_abelian(z4_double):
    # q and q^-1 conjugate identically when G is abelian
    D, qt = z4_double[:2]
    _, pairs, _ = _samples(D)
    all_pass(check_intertwining_lemmas(qt, pairs, wrong_index=True))


@pytest.mark.parametrize("corrupt", ["w-drop", "w-sign"])
def test_w_term_corruptions_break_invariance_not_intertwining(s3, corrupt):
    D, qt = build_group_double(s3, corrupt)[:2]
    _, pairs, triples = _samples(D)
    some_fail(check_pi_invariance(qt, pairs))
    all_pass(check_intertwining(qt, triples))


def test_inverse_key_w_breaks_intertwining(s3):
    D, qt = build_group_double(s3, "w-inverse-key")[:2]
    triples = list(itertools.product(*[D.window(0)] * 3))[::97]
    some_fail(check_intertwining(qt, triples))
    some_fail(check_intertwining(qt, [(("132", "123"), ("123", "312"), ("321", "231"))]))
