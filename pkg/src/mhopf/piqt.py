"""Checks for pi-quasitriangular structures: u~, the intertwining lemmas, g~ and the crossed double's W."""
from __future__ import annotations

from .cograded import GradedCrossing
from .core import MhaInstance, coproduct_multiplier_op, coproduct_op, multiplier_from_elem
from .double import DoubleInstance, crossed_w, two_leg_from_tensor
from .linalg import accumulate, tensor
from .quasitri import (
    QTStructure,
    _pi_multiplier,
    check_coproduct_legs,
    check_grouplike,
    check_inner_s2,
    check_inner_s4,
    check_intertwining,
    check_pi_invariance,
    legwise_maps,
    multiplier_equal_records,
    sigma,
)
from .report import Record, compare


def check_u_tilde(qt: QTStructure, keys: list, pairs: list) -> list[Record]:
    """Both constructions of u~, pi-invariance, the right action, u~^-1 and the S^2 conjugations."""
    inst, gc = qt.inst, qt.gc
    out = multiplier_equal_records(qt.name, inst, qt.u(), qt.u_via_deformed_antipode(), keys,
                                   "u~ via pi_p(S(R2)) = u~ via S~(R2)")
    u = qt.u()
    for p in gc.group.elements:
        pu = _pi_multiplier(inst, gc, p, u)
        for k in keys:
            x = inst.elem(k)
            out.append(compare("pi_p(u~) = u~", qt.name, f"p={p}, {x}", pu.left(x), u.left(x)))
    out += check_inner_s2(qt, keys, pairs)
    return out


def check_intertwining_lemmas(qt: QTStructure, pairs: list, wrong_index: bool = False) -> list[Record]:
    """The three sigma(R) R identities, for every pair of homogeneous basis elements.

    For a of degree pq and b of degree q:
      ((id(x)pi_{p^-1})sigma(R)) R Delta(a)(c (x) b) = ((pi_{pq^-1p^-1}(x)pi_{p^-1})Delta(a)) ((id(x)pi_{p^-1})sigma(R)) R (c (x) b).
    For a of degree p and b of degree q:
      Delta(u~)((id(x)pi_{q^-1})sigma(R))((pi_{p^-1}(x)pi_{q^-1})R)(a (x) b) = u~a (x) u~b,
      ((pi_{pq^-1p^-1}(x)pi_{p^-1})Delta(u~))((id(x)pi_{p^-1})sigma(R)) R (a (x) b) = u~a (x) u~b,
      ((pi_p(x)id)sigma(R)) R Delta(u~)(a (x) b) = u~a (x) u~b.
    ``wrong_index`` replaces the conjugator q^-1 by q (negative control).
    """
    inst, R, gc = qt.inst, qt.R, qt.gc
    G = gc.group
    inv, mul = G.inv, G.mul
    sR = sigma(R)
    u = qt.u()
    du = coproduct_multiplier_op(inst, u)
    out = []
    for ka, kb in pairs:
        a, b = inst.elem(ka), inst.elem(kb)
        da, q = gc.degree(ka), gc.degree(kb)
        ua_ub = tensor(u.left(a), u.left(b))
        t = tensor(a, b)
        # a in A_{pq}: p = deg(a) q^-1; the extra right factor c runs over the pair partner
        p = mul(da, inv(q))
        sig = legwise_maps(sR, [None, inv(p)], gc)
        da_op = legwise_maps(coproduct_op(inst, a), [mul(mul(p, inv(q)), inv(p)), inv(p)], gc)
        for c in (b, a):
            lhs = sig.left(R.left(inst.cover(a, r1=c, r2=b)))
            rhs = da_op.left(sig.left(R.left(tensor(c, b))))
            out.append(compare("sigma(R) R Delta(a) = Delta(a) sigma(R) R (crossed)", qt.name,
                               f"a={a}, b={b}, c={c}", lhs, rhs))
        # Delta(u~) forms, a in A_p with p = deg(a)
        p = da
        qq = q if wrong_index else inv(q)
        m1 = legwise_maps(sR, [None, qq], gc)
        m2 = legwise_maps(R, [inv(p), qq], gc)
        out.append(compare("Delta(u~) sigma(R) R = u~ (x) u~ (q-form)", qt.name, t,
                           du.left(m1.left(m2.left(t))), ua_ub))
        d_op = legwise_maps(du, [mul(mul(p, inv(q)), inv(p)), inv(p)], gc)
        s_op = legwise_maps(sR, [None, inv(p)], gc)
        out.append(compare("Delta(u~) sigma(R) R = u~ (x) u~ (p-form)", qt.name, t,
                           d_op.left(s_op.left(R.left(t))), ua_ub))
        s3 = legwise_maps(sR, [p, None], gc)
        out.append(compare("sigma(R) R Delta(u~) = u~ (x) u~", qt.name, t,
                           s3.left(R.left(du.left(t))), ua_ub))
    return out


def check_grouplike_tilde(qt: QTStructure, keys: list, pairs: list) -> list[Record]:
    return check_inner_s4(qt, keys, pairs)


# -- the crossed double -----------------------------------------------------------------

def crossed_qt(D: DoubleInstance, dual_key, drop=None, name: str | None = None, flip=None) -> QTStructure:
    W = two_leg_from_tensor(D, crossed_w(D, dual_key, drop=drop, flip=flip), label="W")
    return QTStructure(D, W, crossing=D.crossing(), name=name or D.name)


def u_tilde_closed_form(D: DoubleInstance):
    """sum_p u_{p^-1} >< d_p."""
    G = D.bundle.crossing.group
    z = accumulate(D.basis, [(1, D.pair(D.X.elem(G.inv(p)), D.Y.elem(p))) for p in G.elements])
    return multiplier_from_elem(D, z, label="sum u_{p^-1} >< d_p")


def check_theorem_w(qt: QTStructure, pairs: list, triples: list) -> list[Record]:
    """Crossing invariance, the two coproduct-leg identities and the intertwining of W."""
    out = check_pi_invariance(qt, pairs)
    out += check_coproduct_legs(qt, triples)
    out += check_intertwining(qt, triples)
    return out


def check_matches_plain(crossed: MhaInstance, plain: MhaInstance, keys: list) -> list[Record]:
    """Products and covered coproducts of two instances over the same basis agree."""
    out = []
    for k1 in keys:
        x = crossed.elem(k1)
        out.append(compare("antipode agrees with plain double", crossed.name, x,
                           crossed.antipode(x), plain.antipode(x)))
        for k2 in keys:
            y = crossed.elem(k2)
            out.append(compare("product agrees with plain double", crossed.name, f"{x} * {y}",
                               crossed.multiply(x, y), plain.multiply(x, y)))
            out.append(compare("coproduct agrees with plain double", crossed.name, f"Delta({x})(1(x){y})",
                               crossed.cover(x, r2=y), plain.cover(x, r2=y)))
    return out


def trivial_crossing_reduction(qt_pi: QTStructure, qt_plain: QTStructure, keys: list, pairs: list,
                               triples: list) -> list[Record]:
    """Every crossed operation equals its plain counterpart when the crossing acts trivially."""
    from .quasitri import check_qt_axioms, check_yang_baxter, check_pi_yang_baxter

    inst = qt_pi.inst
    out = []
    for label, m1, m2 in (("u~ = u", qt_pi.u(), qt_plain.u()), ("u~^-1 = u^-1", qt_pi.u_inv(), qt_plain.u_inv()),
                          ("g~ = g", qt_pi.g(), qt_plain.g())):
        out += multiplier_equal_records(qt_pi.name, inst, m1, m2, keys, label)
    r_pi = [r for r in check_qt_axioms(qt_pi, pairs, triples) if not r.axiom.startswith("(pi_p(x)pi_p)")]
    r_plain = check_qt_axioms(qt_plain, pairs, triples)
    if len(r_pi) != len(r_plain):
        out.append(compare("reduction: qt axioms record count", qt_pi.name, "counts", len(r_pi), len(r_plain)))
    for r1, r2 in zip(r_pi, r_plain):
        out.append(compare(f"reduction: {r1.axiom}", qt_pi.name, r1.sample, f"{r1.lhs} = {r1.rhs}", f"{r2.lhs} = {r2.rhs}"))
    yb_pi = check_pi_yang_baxter(qt_pi, triples)
    yb = check_yang_baxter(qt_plain, triples)
    for i, r in enumerate(yb):
        for r1 in yb_pi[2 * i:2 * i + 2]:
            out.append(compare(f"reduction: {r1.axiom}", qt_pi.name, r.sample, f"{r1.lhs} = {r1.rhs}", f"{r.rhs} = {r.lhs}"))
    return out
