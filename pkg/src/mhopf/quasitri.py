"""R-matrices, the Drinfel'd multiplier u and the grouplike g = u S(u)^-1.

Everything here works for an optional crossing pi.  With the trivial crossing
the formulas are the ordinary quasitriangular ones; with a crossing u becomes
u~ (u~ a = sum pi_p(S(R2)) R1 a for a of degree p) and the coproduct in the
intertwining axiom becomes the deformed co-opposite one.
"""
from __future__ import annotations

from typing import Callable, Iterable

from .cograded import CopInstance, DeformedInstance, GradedCrossing
from .core import (
    MhaInstance,
    Multiplier,
    TensorOp,
    TwoLegMultiplier,
    antipode_inv_multiplier,
    antipode_multiplier,
    character_on_multiplier,
    coproduct_multiplier_op,
    coproduct_op,
    galois_right,
    multipliers_agree,
)
from .linalg import Elem, accumulate, apply_to_leg, flip, legs_of, tensor
from .report import Record, compare, inconclusive, verdict


def _pi_multiplier(inst: MhaInstance, gc: GradedCrossing, p, m: Multiplier) -> Multiplier:
    """pi_p extended to M(A)."""
    if gc.is_trivial:
        return m
    G = gc.group
    f, finv = gc.pi(p), gc.pi(G.inv(p))
    if m.elem is not None:
        from .core import multiplier_from_elem
        return multiplier_from_elem(inst, f(m.elem), label=f"pi_{p}({m.label})")
    return Multiplier(inst, lambda k: f(m.left(finv(inst.elem(k)))), lambda k: f(m.right(finv(inst.elem(k)))),
                      label=f"pi_{p}({m.label})")


def sigma(op: TensorOp) -> TensorOp:
    """The flip of a two-leg multiplier."""
    right = None if op._right is None else (lambda t: flip(op.right(flip(t))))
    return TensorOp(lambda t: flip(op.left(flip(t))), right, label=f"sigma({op.label})")


def legwise_maps(op: TensorOp, maps: list, gc: GradedCrossing, label: str | None = None) -> TensorOp:
    """(f_1 (x) ... (x) f_n)(M) for crossing automorphisms; ``maps`` holds group labels or None."""
    G = gc.group
    fs = [None if p is None else gc.pi(p) for p in maps]
    invs = [None if p is None else gc.pi(G.inv(p)) for p in maps]
    return op.conjugated(fs, invs, label=label)


class QTStructure:
    """An instance with a (pi-)R-matrix and the derived multipliers."""

    def __init__(self, inst: MhaInstance, R: TwoLegMultiplier, Rinv: TwoLegMultiplier | None = None,
                 crossing: GradedCrossing | None = None, name: str | None = None):
        self.inst = inst
        self.R = R
        self.gc = crossing or GradedCrossing.trivial(inst)
        self.name = name or inst.name
        self.Rinv = Rinv or R.map_second_leg(lambda m: antipode_inv_multiplier(inst, m), label="R^-1")
        self._cache: dict = {}

    @property
    def trivial(self) -> bool:
        return self.gc.is_trivial

    def deformed(self) -> MhaInstance:
        if "deformed" not in self._cache:
            self._cache["deformed"] = self.inst if self.trivial else DeformedInstance(self.inst, self.gc)
        return self._cache["deformed"]

    def deformed_cop(self) -> MhaInstance:
        if "dcop" not in self._cache:
            self._cache["dcop"] = CopInstance(self.deformed())
        return self._cache["dcop"]

    # -- S^k helpers --------------------------------------------------------------------
    def s_pow(self, x: Elem, k: int) -> Elem:
        f = self.inst.antipode if k > 0 else self.inst.antipode_inv
        for _ in range(abs(k)):
            x = f(x)
        return x

    def _by_degree(self, x: Elem, fn: Callable) -> Elem:
        """Apply fn(component, degree) to each homogeneous component of x and sum."""
        parts = self.gc.split(x)
        return accumulate(self.inst.basis, [(1, fn(xp, p)) for p, xp in parts.items()])

    # -- u and its inverse -----------------------------------------------------------------
    def _u_left(self, x: Elem) -> Elem:
        inst, gc = self.inst, self.gc

        def comp(xp, p):
            pieces = []
            for e, m in self.R.half_left_elem(xp):
                sm = _pi_multiplier(inst, gc, p, antipode_multiplier(inst, m))
                pieces.append((1, sm.left(e)))
            return accumulate(inst.basis, pieces)

        return self._by_degree(x, comp)

    def _u_right(self, x: Elem) -> Elem:
        """x u = u pi_{p^-1}(S^-2(x)) for x of degree p."""
        G = self.gc.group
        return self._by_degree(x, lambda xp, p: self._u_left(self.gc.apply(G.inv(p), self.s_pow(xp, -2))))

    def u(self) -> Multiplier:
        if "u" not in self._cache:
            inst = self.inst
            self._cache["u"] = Multiplier(inst, lambda k: self._u_left(inst.elem(k)),
                                          lambda k: self._u_right(inst.elem(k)),
                                          label="u" if self.trivial else "u~")
        return self._cache["u"]

    def u_via_deformed_antipode(self) -> Multiplier:
        """u~ a = sum S~(R2) R1 a with S~ extended to multipliers (left action only)."""
        inst, Dt = self.inst, self.deformed()

        def left(k):
            pieces = []
            for e, m in self.R.half_left(k):
                sm = antipode_multiplier(Dt, m) if m.elem is None else None
                if sm is None:
                    from .core import multiplier_from_elem
                    sm = multiplier_from_elem(inst, Dt.antipode(m.elem))
                pieces.append((1, sm.left(e)))
            return accumulate(inst.basis, pieces)

        return Multiplier(inst, left, lambda k: self._u_right(inst.elem(k)), label="u (deformed antipode)")

    def _t_left(self, x: Elem) -> Elem:
        """t a = sum R2 S^2(R1) a, from the half cover of S^-2(a)."""
        inst = self.inst
        pieces = [(1, m.left(self.s_pow(e, 2))) for e, m in self.R.half_left_elem(self.s_pow(x, -2))]
        return accumulate(inst.basis, pieces)

    def _t_right(self, x: Elem) -> Elem:
        """x t = t pi_p(S^2(x)) for x of degree p."""
        return self._by_degree(x, lambda xp, p: self._t_left(self.gc.apply(p, self.s_pow(xp, 2))))

    def u_inv(self) -> Multiplier:
        if "t" not in self._cache:
            inst = self.inst
            self._cache["t"] = Multiplier(inst, lambda k: self._t_left(inst.elem(k)),
                                          lambda k: self._t_right(inst.elem(k)),
                                          label="u^-1" if self.trivial else "u~^-1")
        return self._cache["t"]

    def u_inv_forms(self) -> dict[str, Callable[[Elem], Elem]]:
        """The three expressions for u^-1 a (trivial crossing)."""
        inst = self.inst

        def f1(x):
            return accumulate(inst.basis, [(1, antipode_inv_multiplier(inst, antipode_inv_multiplier(inst, m)).left(e))
                                           for e, m in self.R.half_left_elem(x)])

        def f2(x):
            return accumulate(inst.basis, [(1, antipode_inv_multiplier(inst, m).left(inst.antipode(e)))
                                           for e, m in self.R.half_right_elem(inst.antipode_inv(x))])

        return {"S^-2(R2)R1": f1, "S^-1(R2)S(R1)": f2, "R2 S^2(R1)": self._t_left}

    def s_u(self) -> Multiplier:
        return antipode_multiplier(self.inst, self.u())

    def s_u_inv(self) -> Multiplier:
        """S(u)^-1 computed as S(u^-1)."""
        return antipode_multiplier(self.inst, self.u_inv())

    def g(self) -> Multiplier:
        m = self.u() * self.s_u_inv()
        m.label = "g" if self.trivial else "g~"
        return m

    def g_inv(self) -> Multiplier:
        return self.s_u() * self.u_inv()

    # -- second-leg functionals ------------------------------------------------------------
    def first_leg_of(self, chi: Callable[[Elem], object], probes: list) -> Multiplier:
        """(id (x) chi)(R) for a character chi, via the half covers."""
        inst = self.inst

        def act(k, side):
            pairs = self.R.half_left(k) if side == "left" else self.R.half_right(k)
            return accumulate(inst.basis, [(character_on_multiplier(inst, chi, m, probes), e) for e, m in pairs])

        return Multiplier(inst, lambda k: act(k, "left"), lambda k: act(k, "right"), label="(id(x)chi)(R)")


# -- checks ---------------------------------------------------------------------------------

def _t(inst, a, b) -> Elem:
    return tensor(inst.elem(a), inst.elem(b))


def check_r_inverse(qt: QTStructure, pairs: Iterable) -> list[Record]:
    inst, R, V = qt.inst, qt.R, qt.Rinv
    out = []
    for a, b in pairs:
        t = _t(inst, a, b)
        out.append(compare("R R^-1 = 1", qt.name, t, R.left(V.left(t)), t))
        out.append(compare("R^-1 R = 1", qt.name, t, V.left(R.left(t)), t))
        out.append(compare("R R^-1 = 1 (right)", qt.name, t, V.right(R.right(t)), t))
    return out


def check_r_self_inverse(qt: QTStructure, pairs: Iterable) -> list[Record]:
    """R R = 1 on the window, i.e. R^-1 = R."""
    inst, R = qt.inst, qt.R
    out = []
    for a, b in pairs:
        t = _t(inst, a, b)
        out.append(compare("R R = 1", qt.name, t, R.left(R.left(t)), t))
        out.append(compare("R^-1 = R", qt.name, t, qt.Rinv.left(t), R.left(t)))
    return out


def check_intertwining(qt: QTStructure, triples: Iterable) -> list[Record]:
    """R Delta(x)(y (x) z) = Delta^cop(x) R (y (x) z) (deformed co-opposite with a crossing)."""
    inst, R = qt.inst, qt.R
    cop = qt.deformed_cop()
    out = []
    for a, b, c in triples:
        x, t = inst.elem(a), _t(inst, b, c)
        lhs = R.left(inst.cover(x, r1=inst.elem(b), r2=inst.elem(c)))
        rhs = coproduct_op(cop, x).left(R.left(t))
        out.append(compare("R Delta = Delta^cop R", qt.name, f"x={x}, on {t}", lhs, rhs))
    return out


def check_coproduct_legs(qt: QTStructure, triples: Iterable) -> list[Record]:
    """(Delta (x) id)(R) = R13 R23 and (id (x) Delta)(R) = R13 R12 applied to x (x) y (x) z."""
    inst, R = qt.inst, qt.R
    first = qt.deformed()
    R12, R13, R23 = R.on_legs((0, 1)), R.on_legs((0, 2)), R.on_legs((1, 2))
    out = []
    for a, b, c in triples:
        x, y, z = inst.elem(a), inst.elem(b), inst.elem(c)
        t3 = tensor(x, y, z)
        pieces = []
        for (ai, bi), ci in galois_right(first, x, y).items():
            for e, m in R.half_left(ai):
                pieces.append((ci, tensor(first.cover(e, r2=inst.elem(bi)), m.left(z))))
        lhs = accumulate(t3.basis, pieces)
        out.append(compare("(Delta(x)id)(R) = R13 R23", qt.name, t3, lhs, R13.left(R23.left(t3))))
        pieces = []
        for e, m in R.half_left_elem(x):
            pieces.append((1, tensor(e, coproduct_multiplier_op(inst, m).left(tensor(y, z)))))
        lhs = accumulate(t3.basis, pieces)
        out.append(compare("(id(x)Delta)(R) = R13 R12", qt.name, t3, lhs, R13.left(R12.left(t3))))
    return out


def check_counit_legs(qt: QTStructure, pairs: Iterable) -> list[Record]:
    inst, R = qt.inst, qt.R
    out = []
    for a, b in pairs:
        x, y = inst.elem(a), inst.elem(b)
        r = R.left(tensor(x, y))
        out.append(compare("(eps(x)id)(R) = 1", qt.name, f"{x} (x) {y}",
                           apply_to_leg(r, 0, inst.counit), y.scale(inst.counit(x))))
        out.append(compare("(id(x)eps)(R) = 1", qt.name, f"{x} (x) {y}",
                           apply_to_leg(r, 1, inst.counit), x.scale(inst.counit(y))))
    return out


def check_inverse_formulas(qt: QTStructure, pairs: Iterable) -> list[Record]:
    """R^-1(a (x) 1) = (S (x) id)((S^-1 a (x) 1)R) and (a (x) 1)R^-1 = (S (x) id)(R(S^-1 a (x) 1)).

    With a crossing S is replaced by the deformed antipode on the first leg.
    """
    inst, R, V = qt.inst, qt.R, qt.Rinv
    Dt = qt.deformed()
    out = []
    for a, b in pairs:
        x, y = inst.elem(a), inst.elem(b)
        sx = Dt.antipode_inv(x)
        lhs = V.left(tensor(x, y))
        rhs = accumulate(lhs.basis, [(1, tensor(Dt.antipode(e), m.left(y))) for e, m in R.half_right_elem(sx)])
        out.append(compare("R^-1(a(x)1) = (S(x)id)((S^-1 a(x)1)R)", qt.name, f"{x} (x) {y}", lhs, rhs))
        lhs = V.right(tensor(x, y))
        rhs = accumulate(lhs.basis, [(1, tensor(Dt.antipode(e), m.right(y))) for e, m in R.half_left_elem(sx)])
        out.append(compare("(a(x)1)R^-1 = (S(x)id)(R(S^-1 a(x)1))", qt.name, f"{x} (x) {y}", lhs, rhs))
    return out


def check_s_tensor_s(qt: QTStructure, pairs: Iterable) -> list[Record]:
    """(S (x) S)(R) = R, through R(S(a) (x) y) = sum S(a R1) (x) S(R2) y ((S~ (x) S) with a crossing)."""
    inst, R = qt.inst, qt.R
    Dt = qt.deformed()
    out = []
    for a, b in pairs:
        x, y = inst.elem(a), inst.elem(b)
        lhs = R.left(tensor(Dt.antipode(x), y))
        rhs = accumulate(lhs.basis, [(1, tensor(Dt.antipode(e), antipode_multiplier(inst, m).left(y)))
                                     for e, m in R.half_right_elem(x)])
        out.append(compare("(S(x)S)(R) = R", qt.name, f"{x} (x) {y}", lhs, rhs))
    return out


def check_pi_invariance(qt: QTStructure, pairs: Iterable) -> list[Record]:
    """(pi_p (x) pi_p)(R) = R for every p."""
    inst, R, gc = qt.inst, qt.R, qt.gc
    out = []
    for p in gc.group.elements:
        f = gc.pi(p)
        for a, b in pairs:
            x, y = inst.elem(a), inst.elem(b)
            lhs = R.left(tensor(f(x), f(y)))
            rhs = apply_to_leg(apply_to_leg(R.left(tensor(x, y)), 0, f), 1, f)
            out.append(compare("(pi_p(x)pi_p)(R) = R", qt.name, f"p={p}, {x} (x) {y}", lhs, rhs))
    return out


def check_qt_axioms(qt: QTStructure, pairs: list, triples: list) -> list[Record]:
    out = []
    if not qt.trivial:
        out += check_pi_invariance(qt, pairs)
    out += check_intertwining(qt, triples)
    out += check_coproduct_legs(qt, triples)
    out += check_counit_legs(qt, pairs)
    out += check_r_inverse(qt, pairs)
    out += check_inverse_formulas(qt, pairs)
    out += check_s_tensor_s(qt, pairs)
    return out


def check_yang_baxter(qt: QTStructure, triples: Iterable) -> list[Record]:
    inst, R = qt.inst, qt.R
    R12, R13, R23 = R.on_legs((0, 1)), R.on_legs((0, 2)), R.on_legs((1, 2))
    out = []
    for a, b, c in triples:
        t = tensor(inst.elem(a), inst.elem(b), inst.elem(c))
        out.append(compare("R12 R13 R23 = R23 R13 R12", qt.name, t,
                           R12.left(R13.left(R23.left(t))), R23.left(R13.left(R12.left(t)))))
    return out


def check_pi_yang_baxter(qt: QTStructure, triples: Iterable) -> list[Record]:
    """(R23 R13 R12)(a(x)b(x)c) = (R12 (id(x)id(x)pi_{p^-1})(R13) R23)(...) = (R12 (pi_p(x)id(x)id)(R13) R23)(...)."""
    inst, R, gc = qt.inst, qt.R, qt.gc
    G = gc.group
    R12, R13, R23 = R.on_legs((0, 1)), R.on_legs((0, 2)), R.on_legs((1, 2))
    out = []
    for a, b, c in triples:
        p = gc.degree(b)
        t = tensor(inst.elem(a), inst.elem(b), inst.elem(c))
        lhs = R23.left(R13.left(R12.left(t)))
        m1 = legwise_maps(R13, [None, None, G.inv(p)], gc)
        m2 = legwise_maps(R13, [p, None, None], gc)
        r1 = R12.left(m1.left(R23.left(t)))
        r2 = R12.left(m2.left(R23.left(t)))
        out.append(compare("pi-Yang-Baxter (third-leg form)", qt.name, f"{t}, p={p}", lhs, r1))
        out.append(compare("pi-Yang-Baxter (first-leg form)", qt.name, f"{t}, p={p}", lhs, r2))
    return out


def check_u(qt: QTStructure, keys: list, pairs: list) -> list[Record]:
    """u two-sided (u(xy) = pi_p(S^2(x))(u y)), u t = t u = 1, the three forms of u^-1."""
    inst, gc = qt.inst, qt.gc
    u, t = qt.u(), qt.u_inv()
    out = []
    for a, b in pairs:
        x, y = inst.elem(a), inst.elem(b)
        lhs = u.left(inst.multiply(x, y))
        rhs = inst.multiply(gc.apply(gc.degree(a), qt.s_pow(x, 2)), u.left(y))
        out.append(compare("u(xy) = pi_p(S^2(x))(uy)", qt.name, f"x={x}, y={y}", lhs, rhs))
        lhs = inst.multiply(u.right(x), y)
        out.append(compare("(xu)y = x(uy)", qt.name, f"x={x}, y={y}", lhs, inst.multiply(x, u.left(y))))
        lhs = inst.multiply(t.right(x), y)
        out.append(compare("(xt)y = x(ty)", qt.name, f"x={x}, y={y}", lhs, inst.multiply(x, t.left(y))))
    for k in keys:
        x = inst.elem(k)
        out.append(compare("u u^-1 = 1", qt.name, x, u.left(t.left(x)), x))
        out.append(compare("u^-1 u = 1", qt.name, x, t.left(u.left(x)), x))
        out.append(compare("x u u^-1 = x", qt.name, x, t.right(u.right(x)), x))
        if qt.trivial:
            forms = qt.u_inv_forms()
            vals = {n: f(x) for n, f in forms.items()}
            names = list(vals)
            for n in names[:-1]:
                out.append(compare(f"u^-1: {n} = {names[-1]}", qt.name, x, vals[n], vals[names[-1]]))
    return out


def check_inner_s2(qt: QTStructure, keys: list, pairs: list) -> list[Record]:
    """S^2(x) = u pi_{p^-1}(x) u^-1 = S(u)^-1 pi_p(x) S(u)."""
    inst, gc = qt.inst, qt.gc
    G = gc.group
    u, t, su, sui = qt.u(), qt.u_inv(), qt.s_u(), qt.s_u_inv()
    out = check_u(qt, keys, pairs)
    for k in keys:
        x = inst.elem(k)
        p = gc.degree(k)
        s2 = qt.s_pow(x, 2)
        out.append(compare("S^2(x) = u x u^-1", qt.name, x, t.right(u.left(gc.apply(G.inv(p), x))), s2))
        out.append(compare("S^2(x) = S(u)^-1 x S(u)", qt.name, x, su.right(sui.left(gc.apply(p, x))), s2))
        out.append(compare("S(u) S(u)^-1 = 1", qt.name, x, su.left(sui.left(x)), x))
    return out


def check_grouplike(qt: QTStructure, m: Multiplier, pairs: list, label: str) -> list[Record]:
    """Delta(m x)(1 (x) y) = (m (x) m)(Delta(x)(1 (x) y)) and eps(m x) = eps(x)."""
    inst = qt.inst
    out = []
    for a, b in pairs:
        x, y = inst.elem(a), inst.elem(b)
        lhs = inst.cover(m.left(x), r2=y)
        rhs = apply_to_leg(apply_to_leg(inst.cover(x, r2=y), 0, m.left), 1, m.left)
        out.append(compare(f"{label} grouplike", qt.name, f"x={x}, y={y}", lhs, rhs))
        out.append(compare(f"eps({label} x) = eps(x)", qt.name, x, inst.counit(m.left(x)), inst.counit(x)))
    return out


def check_inner_s4(qt: QTStructure, keys: list, pairs: list) -> list[Record]:
    inst = qt.inst
    g, gi = qt.g(), qt.g_inv()
    out = []
    for k in keys:
        x = inst.elem(k)
        out.append(compare("S^4(x) = g x g^-1", qt.name, x, gi.right(g.left(x)), qt.s_pow(x, 4)))
        out.append(compare("g g^-1 = 1", qt.name, x, g.left(gi.left(x)), x))
    out += check_grouplike(qt, g, pairs, "g")
    out += check_sigma_r_r(qt, pairs)
    return out


def check_sigma_r_r(qt: QTStructure, pairs: list) -> list[Record]:
    """sigma(R) R Delta(u) = u (x) u on a (x) b (trivial crossing)."""
    if not qt.trivial:
        return []
    inst, R = qt.inst, qt.R
    u = qt.u()
    sR = sigma(R)
    du = coproduct_multiplier_op(inst, u)
    out = []
    for a, b in pairs:
        x, y = inst.elem(a), inst.elem(b)
        t = tensor(x, y)
        out.append(compare("sigma(R) R Delta(u) = u (x) u", qt.name, t,
                           sR.left(R.left(du.left(t))), tensor(u.left(x), u.left(y))))
    return out


def check_modular_formula(qt: QTStructure, modular_inv: Multiplier, chi: Callable, probes: list, keys: list,
                   label: str) -> list[Record]:
    """u S(u)^-1 = delta^-1 (id (x) chi)(R) with chi the pairing against the dual modular element's inverse."""
    inst = qt.inst
    rhs = modular_inv * qt.first_leg_of(chi, probes)
    g = qt.g()
    out = []
    for k in keys:
        x = inst.elem(k)
        out.append(compare(f"u S(u)^-1 = {label} (left)", qt.name, x, g.left(x), rhs.left(x)))
        out.append(compare(f"u S(u)^-1 = {label} (right)", qt.name, x, g.right(x), rhs.right(x)))
    return out


def multiplier_equal_records(name: str, inst: MhaInstance, m1: Multiplier, m2: Multiplier, keys: list,
                             axiom: str) -> list[Record]:
    out = []
    for k in keys:
        x = inst.elem(k)
        out.append(compare(f"{axiom} (left)", name, x, m1.left(x), m2.left(x)))
        out.append(compare(f"{axiom} (right)", name, x, m1.right(x), m2.right(x)))
    return out
