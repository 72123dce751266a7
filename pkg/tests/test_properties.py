"""Algebraic laws on random sparse elements."""
from hypothesis import given, settings, strategies as st

from mhopf.core import multiplier_from_elem
from mhopf.instances.group import FunctionAlgebra, GroupAlgebra, GroupPairing, symmetric_group_3
from mhopf.instances.ore import OreAlgebra, OreDual, OrePairing
from mhopf.linalg import Elem, apply_to_leg

A, AH = OreAlgebra(), OreDual()
P = OrePairing(A, AH)
G = symmetric_group_3()
K, KG = FunctionAlgebra(G), GroupAlgebra(G)
PG = GroupPairing(G, K, KG)

coeff = st.integers(-3, 3).filter(bool)
ore_key = st.tuples(st.integers(-4, 4), st.sampled_from([0, 1]))
grp_key = st.sampled_from(G.elements)


def elems(inst, key):
    return st.dictionaries(key, coeff, min_size=1, max_size=3).map(lambda d: Elem(inst.basis, d))


ore_el, dual_el = elems(A, ore_key), elems(AH, ore_key)
fun_el, grp_el = elems(K, grp_key), elems(KG, grp_key)
fast = settings(max_examples=60, deadline=None)


def sum_products(inst, t):
    out = inst.zero()
    for (k1, k2), c in t.items():
        out = out + inst.multiply(inst.elem(k1), inst.elem(k2)).scale(c)
    return out


@fast
@given(ore_el, ore_el, ore_el)
def test_ore_associative(x, y, z):
    assert A.multiply(A.multiply(x, y), z) == A.multiply(x, A.multiply(y, z))


@fast
@given(dual_el, dual_el, dual_el)
def test_dual_associative(x, y, z):
    assert AH.multiply(AH.multiply(x, y), z) == AH.multiply(x, AH.multiply(y, z))


@fast
@given(ore_el, ore_el)
def test_antipode_anti_multiplicative(x, y):
    assert A.antipode(A.multiply(x, y)) == A.multiply(A.antipode(y), A.antipode(x))


@fast
@given(dual_el, dual_el)
def test_dual_antipode_anti_multiplicative(x, y):
    assert AH.antipode(AH.multiply(x, y)) == AH.multiply(AH.antipode(y), AH.antipode(x))


@fast
@given(dual_el)
def test_dual_antipode_regular(x):
    assert AH.antipode_inv(AH.antipode(x)) == x and AH.antipode(AH.antipode_inv(x)) == x


@fast
@given(dual_el, dual_el)
def test_dual_counit_law(x, y):
    # (eps (x) id)(Delta(x)(1 (x) y)) = x y
    assert apply_to_leg(AH.cover(x, r2=y), 0, AH.counit) == AH.multiply(x, y)


@fast
@given(dual_el, dual_el)
def test_dual_antipode_law(x, y):
    # m(S (x) id)(Delta(x)(1 (x) y)) = eps(x) y
    t = apply_to_leg(AH.cover(x, r2=y), 0, AH.antipode)
    assert sum_products(AH, t) == y.scale(AH.counit(x))


def tensor_product(inst, t1, t2):
    out = {}
    for (a1, a2), c in t1.items():
        for (b1, b2), d in t2.items():
            for k1, c1 in inst.mul_keys(a1, b1).items():
                for k2, c2 in inst.mul_keys(a2, b2).items():
                    out[(k1, k2)] = out.get((k1, k2), 0) + c * d * c1 * c2
    return Elem(t1.basis, out)


@fast
@given(dual_el, dual_el, ore_el)
def test_pairing_transports_product(f, g, x):
    # <f g, x> = <f (x) g, Delta(x)>
    rhs = sum((c * P.pair(f, A.elem(k1)) * P.pair(g, A.elem(k2)) for (k1, k2), c in A.coproduct(x).items()), 0)
    assert P.pair(AH.multiply(f, g), x) == rhs


@fast
@given(dual_el, ore_el)
def test_pairing_bilinear(f, x):
    assert P.pair(f.scale(2) + f, x) == 3 * P.pair(f, x)
    assert P.pair(f, x.scale(-1)) == -P.pair(f, x)


@fast
@given(ore_key, ore_key)
def test_pairing_orthogonal(k1, k2):
    assert P.pair(AH.elem(k1), A.elem(k2)) == (1 if k1 == k2 else 0)


@fast
@given(fun_el, fun_el)
def test_function_grading_sound(x, y):
    # d_p d_q = 0 unless p = q
    prod = K.multiply(x, y)
    assert set(prod.keys()) <= set(x.keys()) & set(y.keys())


@fast
@given(fun_el, grp_key)
def test_crossing_is_automorphism(x, p):
    y = K.conjugation(p, x)
    assert K.multiply(y, y) == K.conjugation(p, K.multiply(x, x))
    assert K.conjugation(G.inv(p), y) == x


@fast
@given(grp_el, fun_el, fun_el)
def test_group_pairing_transports_product(a, x, y):
    # <a, x y> = <Delta(a), x (x) y>
    cop = KG.coproduct(a)
    rhs = sum((c * x.coeff(k1) * y.coeff(k2) for (k1, k2), c in cop.items()), 0)
    assert PG.pair(a, K.multiply(x, y)) == rhs


@fast
@given(grp_el, grp_el)
def test_group_algebra_coproduct_multiplicative(a, b):
    lhs = KG.coproduct(KG.multiply(a, b))
    ca, cb = KG.coproduct(a), KG.coproduct(b)
    out = {}
    for (a1, a2), c in ca.items():
        for (b1, b2), d in cb.items():
            key = (G.mul(a1, b1), G.mul(a2, b2))
            out[key] = out.get(key, 0) + c * d
    assert lhs == Elem(lhs.basis, out)


@fast
@given(dual_el, dual_el, dual_el)
def test_multiplier_compatibility(m, x, y):
    # (x m) y = x (m y) for the multiplier of an element
    mm = multiplier_from_elem(AH, m)
    assert AH.multiply(mm.right(x), y) == AH.multiply(x, mm.left(y))


@fast
@given(dual_el, dual_el)
def test_delta_hat_is_a_multiplier(x, y):
    d = AH.modular_multiplier()
    assert d.left(AH.multiply(x, y)) == AH.multiply(d.left(x), y)
    assert d.right(AH.multiply(x, y)) == AH.multiply(x, d.right(y))
    assert d.left(d.left(x)) == x


@fast
@given(ore_el, ore_el)
def test_ore_coproduct_multiplicative(x, y):
    assert A.coproduct(A.multiply(x, y)) == tensor_product(A, A.coproduct(x), A.coproduct(y))
