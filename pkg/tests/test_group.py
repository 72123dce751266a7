import pytest

from mhopf.axioms import check_mha_axioms
from mhopf.cograded import GradedCrossing, crossing_violations, grading_violations
from mhopf.instances.group import (FunctionAlgebra, GroupAlgebra, GroupLoadError, GroupPairing, canonical_w,
                                   canonical_w_inverse, cyclic_group, load_group, parse_cayley_table, w_as_tensor)
from mhopf.linalg import tensor

from conftest import all_pass, some_fail


def _all(G):
    ks = G.elements
    return ks, [(a, b) for a in ks for b in ks], [(a, b, c) for a in ks for b in ks for c in ks]


def test_builtin_groups(s3, z4):
    assert len(s3) == 6 and not s3.is_abelian()
    assert len(z4) == 4 and z4.is_abelian()
    assert z4.inv("1") == "3" and s3.inv(s3.e) == s3.e
    assert load_group("Z1").elements == ["0"]


def test_cayley_table_file(tmp_path):
    path = tmp_path / "z2.txt"
    path.write_text("# the group of order two\n2 e x\ne x\nx e\n")
    G = load_group(str(path))
    assert G.mul("x", "x") == "e" and G.name == "z2"


@pytest.mark.parametrize("text,fragment", [
    ("", "empty group file"),
    ("two e x\ne x\nx e\n", "first token must be the order"),
    ("2 e x\ne x\n", "expected 2 rows"),
    ("2 e x\ne x\nx x\n", "x has no inverse"),
    ("2 e x\ne y\nx e\n", "outside the set"),
    ("3 e x y\ne x y\nx x e\ny e y\n", "(x, x, y)"),
])
def test_bad_tables(text, fragment):
    with pytest.raises(GroupLoadError) as info:
        parse_cayley_table(text)
    assert fragment in str(info.value)


def test_unknown_group_name():
    with pytest.raises(GroupLoadError):
        load_group("Q8")


@pytest.mark.parametrize("cls", [FunctionAlgebra, GroupAlgebra])
@pytest.mark.parametrize("gname", ["S3", "Z4"])
def test_group_mha_axioms(cls, gname):
    G = load_group(gname)
    inst = cls(G)
    all_pass(check_mha_axioms(inst, *_all(G)))


@pytest.mark.parametrize("cls", [FunctionAlgebra, GroupAlgebra])
def test_antipode_sign_corruption_detected(cls, s3):
    some_fail(check_mha_axioms(cls(s3, corrupt="antipode-sign"), *_all(s3)))


def test_function_coproduct(s3_parts, s3):
    K, kG, pw = s3_parts
    t = K.coproduct(K.elem(s3.e))
    assert len(t) == 6
    assert all(s3.mul(s, u) == s3.e for (s, u) in t.keys())


def test_pairing_is_kronecker(s3_parts, s3):
    K, kG, pw = s3_parts
    for p in s3.elements:
        for q in s3.elements:
            assert pw.pair(kG.elem(p), K.elem(q)) == (1 if p == q else 0)


def test_pairing_transports_products(s3_parts, s3):
    # <u_p u_q, d_r> = <u_p (x) u_q, Delta(d_r)>
    K, kG, pw = s3_parts
    for p in s3.elements:
        for q in s3.elements:
            for r in s3.elements:
                lhs = pw.pair(kG.multiply(kG.elem(p), kG.elem(q)), K.elem(r))
                rhs = sum(c * pw.pair_keys(p, s) * pw.pair_keys(q, t) for (s, t), c in K.coproduct_key(r).items())
                assert lhs == rhs


def test_w_tensor_and_inverse(s3_parts, s3):
    K, kG, pw = s3_parts
    W = w_as_tensor(pw)
    assert len(W) == 6
    w, winv = canonical_w(pw), canonical_w_inverse(pw)
    for p in s3.elements:
        t = tensor(K.elem(p), kG.one())
        assert winv.left(w.left(t)) == t


def test_w_drop_loses_a_term(s3_parts, s3):
    K, kG, pw = s3_parts
    w = canonical_w(pw, drop=s3.elements[1])
    assert w.left(tensor(K.elem(s3.elements[1]), kG.one())).is_zero()


def test_conjugation_crossing(s3):
    K = FunctionAlgebra(s3)
    gc = GradedCrossing(K, s3, K.degree, K.conjugation)
    ks = s3.elements
    assert crossing_violations(gc, ks) == []
    assert grading_violations(gc, ks) == []


def test_crossing_inverse_corruption_detected(s3):
    K = FunctionAlgebra(s3, corrupt="crossing-inverse")
    gc = GradedCrossing(K, s3, K.degree, K.conjugation)
    assert crossing_violations(gc, s3.elements)


def test_crossing_inverse_is_invisible_on_abelian_groups():
    G = cyclic_group(4)
    K = FunctionAlgebra(G, corrupt="crossing-inverse")
    gc = GradedCrossing(K, G, K.degree, K.conjugation)
    assert crossing_violations(gc, G.elements) == []


def test_pairing_default_parts(z4):
    pw = GroupPairing(z4)
    assert pw.functions.group is z4 and pw.algebra.group is z4
