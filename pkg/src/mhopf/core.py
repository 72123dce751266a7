"""Regular multiplier Hopf algebras given by structure maps on a basis.

An instance supplies a product rule on basis keys, the counit, the antipode and
its inverse, and *covered* coproducts: for y in A and covering elements l1, l2,
r1, r2 (any subset, at least one) the finite tensor

    (l1 (x) l2) Delta(y) (r1 (x) r2).

Multipliers of A are pairs of linear operators (left action, right action);
multipliers of A (x) A are represented through half covers, as for R-matrices.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .linalg import (
    Basis,
    Elem,
    TensorBasis,
    accumulate,
    apply_to_leg,
    apply_to_legs,
    bilinear,
    flip,
    legs_of,
    linear,
    linear_functional,
    scalar,
    simple_tensor,
    tensor,
    tensor_basis,
)


class UncoveredError(ValueError):
    """Raised when a coproduct is requested without any covering element."""


class MhaInstance:
    """Base class; subclasses implement the ``*_key`` rules and ``cover``."""

    name = "instance"
    unital = False

    def __init__(self, basis: Basis):
        self.basis = basis
        self._mul_cache: dict = {}

    # -- elements -------------------------------------------------------------
    def elem(self, key, coeff=1) -> Elem:
        return Elem._raw(self.basis, {key: scalar(coeff)} if coeff else {})

    def zero(self) -> Elem:
        return Elem._raw(self.basis, {})

    def one(self) -> Elem:
        raise TypeError(f"{self.name} is not unital")

    # -- algebra ----------------------------------------------------------------
    def mul_keys(self, k1, k2) -> Elem:
        raise NotImplementedError

    def _mul_cached(self, k1, k2) -> Elem:
        key = (k1, k2)
        r = self._mul_cache.get(key)
        if r is None:
            r = self.mul_keys(k1, k2)
            self._mul_cache[key] = r
        return r

    def multiply(self, x: Elem, y: Elem) -> Elem:
        return bilinear(self._mul_cached, x, y, self.basis)

    def product(self, *xs: Elem) -> Elem:
        out = xs[0]
        for x in xs[1:]:
            out = self.multiply(out, x)
        return out

    # -- coalgebra ------------------------------------------------------------
    def counit_key(self, k):
        raise NotImplementedError

    def counit(self, x: Elem):
        return linear_functional(self.counit_key, x)

    def antipode_key(self, k) -> Elem:
        raise NotImplementedError

    def antipode_inv_key(self, k) -> Elem:
        raise NotImplementedError

    def antipode(self, x: Elem) -> Elem:
        return linear(self.antipode_key, x, self.basis)

    def antipode_inv(self, x: Elem) -> Elem:
        return linear(self.antipode_inv_key, x, self.basis)

    def cover(self, y: Elem, l1=None, l2=None, r1=None, r2=None) -> Elem:
        raise NotImplementedError

    def coproduct_right(self, x: Elem, y: Elem) -> Elem:
        """Delta(x)(1 (x) y)."""
        return self.cover(x, r2=y)

    def coproduct_left(self, x: Elem, y: Elem) -> Elem:
        """(x (x) 1)Delta(y)."""
        return self.cover(y, l1=x)

    # -- tensors over this instance ------------------------------------------
    def tbasis(self, n: int = 2) -> TensorBasis:
        return tensor_basis(*([self.basis] * n))

    def finish_cover(self, t: Elem, l1=None, l2=None, r1=None, r2=None) -> Elem:
        """Multiply the legs of ``t`` by whichever covers are given."""
        if l1 is not None:
            t = apply_to_leg(t, 0, lambda e: self.multiply(l1, e))
        if l2 is not None:
            t = apply_to_leg(t, 1, lambda e: self.multiply(l2, e))
        if r1 is not None:
            t = apply_to_leg(t, 0, lambda e: self.multiply(e, r1))
        if r2 is not None:
            t = apply_to_leg(t, 1, lambda e: self.multiply(e, r2))
        return t

    # -- windows ----------------------------------------------------------------
    def window(self, radius: int) -> list:
        raise NotImplementedError

    def ring(self, radius: int) -> list:
        """Basis keys in window(radius) but not in window(radius - 1)."""
        inner = set(self.window(radius - 1)) if radius > 0 else set()
        return [k for k in self.window(radius) if k not in inner]

    def size(self, key) -> int:
        """Integer size of a key; window(r) contains exactly the keys with size <= r."""
        return 0

    # -- local units (non-unital instances) ------------------------------------
    def local_unit(self, s) -> Elem:
        raise TypeError(f"{self.name} has no local units")

    def unit_candidates(self, x: Elem, side: str) -> Iterable:
        raise TypeError(f"{self.name} has no local units")

    def local_unit_indices(self, x: Elem, side: str) -> list:
        """Indices s with x * sum(e_s) = x (side 'right') or sum(e_s) * x = x ('left').

        The candidate set is certified by recomputing the product, so the
        result is exact rather than heuristic.
        """
        cands = sorted(set(self.unit_candidates(x, side)))
        chosen = []
        for s in cands:
            e = self.local_unit(s)
            if (self.multiply(x, e) if side == "right" else self.multiply(e, x)):
                chosen.append(s)
        total = accumulate(self.basis, ((1, self.local_unit(s)) for s in chosen))
        check = self.multiply(x, total) if side == "right" else self.multiply(total, x)
        if check != x:
            raise ArithmeticError(f"local unit search failed for {x} on the {side}")
        return chosen


class FiniteCoproductInstance(MhaInstance):
    """Instances whose coproduct of a basis element is a finite tensor."""

    def coproduct_key(self, k) -> Elem:
        raise NotImplementedError

    def coproduct(self, x: Elem) -> Elem:
        return linear(self._coproduct_cached, x, self.tbasis(2))

    def _coproduct_cached(self, k):
        cache = self.__dict__.setdefault("_cop_cache", {})
        r = cache.get(k)
        if r is None:
            r = cache[k] = self.coproduct_key(k)
        return r

    def cover(self, y: Elem, l1=None, l2=None, r1=None, r2=None) -> Elem:
        return self.finish_cover(self.coproduct(y), l1, l2, r1, r2)

    def coproduct2(self, x: Elem) -> Elem:
        """(Delta (x) id) Delta(x) as a 3-tensor."""
        return apply_to_leg(self.coproduct(x), 0, self.coproduct)


class ExpansionInstance(MhaInstance):
    """Instances whose Delta(y) is an infinite sum that is finite against covers.

    Subclasses give ``first_part(y, j)`` with Delta(y) = sum_j first_part(y, j) (x) e_j
    and ``second_part(y, i)`` with Delta(y) = sum_i e_i (x) second_part(y, i),
    together with the supports ``left_support(k) = {j : e_j e_k != 0}`` and
    ``right_support(k) = {j : e_k e_j != 0}``.
    """

    def first_part(self, ykey, j) -> Elem:
        raise NotImplementedError

    def second_part(self, ykey, i) -> Elem:
        raise NotImplementedError

    def left_support(self, k) -> Iterable:
        raise NotImplementedError

    def right_support(self, k) -> Iterable:
        raise NotImplementedError

    def _supports(self, x: Elem, fn) -> set:
        out = set()
        for k in x.keys():
            out.update(fn(k))
        return out

    def cover(self, y: Elem, l1=None, l2=None, r1=None, r2=None) -> Elem:
        tb = self.tbasis(2)
        if r2 is not None or l2 is not None:
            if r2 is not None:
                js = self._supports(r2, self.left_support)
            else:
                js = self._supports(l2, self.right_support)
            pieces = []
            for yk, c in y.items():
                for j in js:
                    f = self.first_part(yk, j)
                    if f:
                        pieces.append((c, tensor(f, self.elem(j))))
            t = accumulate(tb, pieces)
        elif r1 is not None or l1 is not None:
            if r1 is not None:
                is_ = self._supports(r1, self.left_support)
            else:
                is_ = self._supports(l1, self.right_support)
            pieces = []
            for yk, c in y.items():
                for i in is_:
                    g = self.second_part(yk, i)
                    if g:
                        pieces.append((c, tensor(self.elem(i), g)))
            t = accumulate(tb, pieces)
        else:
            raise UncoveredError(f"Delta of {y} needs a covering element")
        return self.finish_cover(t, l1, l2, r1, r2)


# -- multipliers of A ----------------------------------------------------------

class Multiplier:
    """A two-sided multiplier given by its left and right actions on A."""

    def __init__(self, inst: MhaInstance, left_key: Callable, right_key: Callable,
                 label: str | None = None, elem: Elem | None = None):
        self.inst = inst
        self._lk = left_key
        self._rk = right_key
        self._lcache: dict = {}
        self._rcache: dict = {}
        self.label = label
        self.elem = elem

    def _left_key(self, k):
        r = self._lcache.get(k)
        if r is None:
            r = self._lcache[k] = self._lk(k)
        return r

    def _right_key(self, k):
        r = self._rcache.get(k)
        if r is None:
            r = self._rcache[k] = self._rk(k)
        return r

    def left(self, x: Elem) -> Elem:
        """m * x"""
        return linear(self._left_key, x, self.inst.basis)

    def right(self, x: Elem) -> Elem:
        """x * m"""
        return linear(self._right_key, x, self.inst.basis)

    def __mul__(self, other: "Multiplier") -> "Multiplier":
        a, b = self, other
        elem = None
        if a.elem is not None and b.elem is not None:
            elem = a.inst.multiply(a.elem, b.elem)
        return Multiplier(
            self.inst,
            lambda k: a.left(b._left_key(k)),
            lambda k: b.right(a._right_key(k)),
            label=f"({a.label})*({b.label})" if a.label and b.label else None,
            elem=elem,
        )

    def scale(self, c) -> "Multiplier":
        m = self
        return Multiplier(self.inst, lambda k: m._left_key(k).scale(c), lambda k: m._right_key(k).scale(c),
                          label=f"{c}*({m.label})" if m.label else None,
                          elem=m.elem.scale(c) if m.elem is not None else None)

    def __add__(self, other: "Multiplier") -> "Multiplier":
        a, b = self, other
        elem = a.elem + b.elem if a.elem is not None and b.elem is not None else None
        return Multiplier(self.inst, lambda k: a._left_key(k) + b._left_key(k),
                          lambda k: a._right_key(k) + b._right_key(k), elem=elem)

    def __repr__(self):
        return f"Multiplier({self.label or '?'})"

    def as_elem(self) -> Elem:
        """For unital instances the multiplier is the element m * 1."""
        if self.elem is not None:
            return self.elem
        return self.left(self.inst.one())


def multiplier_from_elem(inst: MhaInstance, g: Elem, label: str | None = None) -> Multiplier:
    return Multiplier(
        inst,
        lambda k: inst.multiply(g, inst.elem(k)),
        lambda k: inst.multiply(inst.elem(k), g),
        label=label or str(g),
        elem=g,
    )


def identity_multiplier(inst: MhaInstance) -> Multiplier:
    return Multiplier(inst, inst.elem, inst.elem, label="1")


def diagonal_multiplier(inst: MhaInstance, left_coeff: Callable, right_coeff: Callable,
                        label: str | None = None) -> Multiplier:
    """Multiplier acting on each basis key by a scalar (left and right may differ)."""
    return Multiplier(inst, lambda k: inst.elem(k, left_coeff(k)), lambda k: inst.elem(k, right_coeff(k)), label=label)


def antipode_multiplier(inst: MhaInstance, m: Multiplier) -> Multiplier:
    """Extension of the anti-automorphism S to M(A)."""
    if m.elem is not None:
        try:
            return multiplier_from_elem(inst, inst.antipode(m.elem), label=f"S({m.label})")
        except (TypeError, KeyError):
            pass
    return Multiplier(
        inst,
        lambda k: inst.antipode(m.right(inst.antipode_inv_key(k))),
        lambda k: inst.antipode(m.left(inst.antipode_inv_key(k))),
        label=f"S({m.label})",
    )


def antipode_inv_multiplier(inst: MhaInstance, m: Multiplier) -> Multiplier:
    if m.elem is not None:
        try:
            return multiplier_from_elem(inst, inst.antipode_inv(m.elem), label=f"S^-1({m.label})")
        except (TypeError, KeyError):
            pass
    return Multiplier(
        inst,
        lambda k: inst.antipode_inv(m.right(inst.antipode_key(k))),
        lambda k: inst.antipode_inv(m.left(inst.antipode_key(k))),
        label=f"S^-1({m.label})",
    )


def automorphism_multiplier(inst: MhaInstance, m: Multiplier, f: Callable, f_inv: Callable,
                            label: str | None = None) -> Multiplier:
    """Extension of an algebra automorphism f (with inverse) to M(A)."""
    return Multiplier(
        inst,
        lambda k: f(m.left(f_inv(inst.elem(k)))),
        lambda k: f(m.right(f_inv(inst.elem(k)))),
        label=label,
    )


def character_on_multiplier(inst: MhaInstance, chi: Callable[[Elem], object], m: Multiplier,
                            probes: Sequence) -> object:
    """Extend a character chi of A to M(A) via chi(m) = chi(m e) / chi(e)."""
    for k in probes:
        e = inst.elem(k)
        base = chi(e)
        if base:
            return scalar(Fraction(chi(m.left(e))) / base)
    raise ValueError("no probe element with nonzero character value")


def multipliers_agree(m1: Multiplier, m2: Multiplier, keys: Iterable) -> list:
    """Keys on which the two multipliers differ (either side)."""
    bad = []
    inst = m1.inst
    for k in keys:
        x = inst.elem(k)
        if m1.left(x) != m2.left(x) or m1.right(x) != m2.right(x):
            bad.append(k)
    return bad


# -- operators on tensors ------------------------------------------------------

class TensorOp:
    """A multiplier of A1 (x) ... (x) An given by left and right actions on tensors."""

    def __init__(self, left: Callable[[Elem], Elem], right: Callable[[Elem], Elem] | None = None,
                 label: str | None = None):
        self._left = left
        self._right = right
        self.label = label

    def left(self, t: Elem) -> Elem:
        return self._left(t)

    def right(self, t: Elem) -> Elem:
        if self._right is None:
            raise NotImplementedError(f"right action of {self.label} not available")
        return self._right(t)

    def __mul__(self, other: "TensorOp") -> "TensorOp":
        a, b = self, other
        right = None
        if a._right is not None and b._right is not None:
            right = lambda t: b.right(a.right(t))
        return TensorOp(lambda t: a.left(b.left(t)), right, label=f"{a.label}{b.label}")

    def on_legs(self, idx: tuple) -> "TensorOp":
        """Place this operator on legs ``idx`` of a larger tensor (leg j of op -> idx[j])."""
        op = self
        right = None if op._right is None else (lambda t: apply_to_legs(t, idx, op.right))
        return TensorOp(lambda t: apply_to_legs(t, idx, op.left), right,
                        label=f"{op.label}^{''.join(str(i + 1) for i in idx)}")

    def conjugated(self, maps: Sequence, inverses: Sequence, label: str | None = None) -> "TensorOp":
        """(f1 (x) ... (x) fn)(M) for algebra automorphisms f_i given leg-wise."""
        op = self

        def push(t, fs):
            for i, f in enumerate(fs):
                if f is not None:
                    t = apply_to_leg(t, i, f)
            return t

        return TensorOp(
            lambda t: push(op.left(push(t, inverses)), maps),
            None if op._right is None else (lambda t: push(op.right(push(t, inverses)), maps)),
            label=label or f"conj({op.label})",
        )


def identity_op() -> TensorOp:
    return TensorOp(lambda t: t, lambda t: t, label="1")


def legwise_op(insts: Sequence[MhaInstance], factors: Sequence) -> TensorOp:
    """The multiplier m1 (x) m2 (x) ... acting leg by leg (entries Multiplier or None)."""

    def act(t, side):
        for i, m in enumerate(factors):
            if m is None:
                continue
            fn = m.left if side == "left" else m.right
            t = apply_to_leg(t, i, fn)
        return t

    return TensorOp(lambda t: act(t, "left"), lambda t: act(t, "right"))


class TwoLegMultiplier(TensorOp):
    """An element of M(A (x) A) given by the half covers R(a (x) 1) and (a (x) 1)R.

    ``half_left(key)`` and ``half_right(key)`` return finite lists of pairs
    (first-leg element, second-leg Multiplier).
    """

    def __init__(self, inst: MhaInstance, half_left: Callable, half_right: Callable,
                 label: str = "R", inst2: MhaInstance | None = None):
        self.inst = inst
        self.inst2 = inst2 or inst
        self._hl = half_left
        self._hr = half_right
        self._hlc: dict = {}
        self._hrc: dict = {}
        super().__init__(self._act_left, self._act_right, label=label)

    def half_left(self, key) -> list:
        r = self._hlc.get(key)
        if r is None:
            r = self._hlc[key] = list(self._hl(key))
        return r

    def half_right(self, key) -> list:
        r = self._hrc.get(key)
        if r is None:
            r = self._hrc[key] = list(self._hr(key))
        return r

    def half_left_elem(self, x: Elem) -> list:
        return [(e.scale(c), m) for k, c in x.items() for e, m in self.half_left(k)]

    def half_right_elem(self, x: Elem) -> list:
        return [(e.scale(c), m) for k, c in x.items() for e, m in self.half_right(k)]

    def _act(self, t: Elem, side: str) -> Elem:
        pieces = []
        b1, b2 = legs_of(t.basis)
        for (k1, k2), c in t.items():
            pairs = self.half_left(k1) if side == "left" else self.half_right(k1)
            y = Elem._raw(b2, {k2: 1})
            for e, m in pairs:
                z = m.left(y) if side == "left" else m.right(y)
                if z:
                    pieces.append((c, tensor(e, z)))
        return accumulate(t.basis, pieces)

    def _act_left(self, t: Elem) -> Elem:
        return self._act(t, "left")

    def _act_right(self, t: Elem) -> Elem:
        return self._act(t, "right")

    def map_second_leg(self, fn: Callable[[Multiplier], Multiplier], label: str | None = None) -> "TwoLegMultiplier":
        """(id (x) f)(R) for a map f on second-leg multipliers (e.g. extended S^-1)."""
        r = self
        return TwoLegMultiplier(
            self.inst,
            lambda k: [(e, fn(m)) for e, m in r.half_left(k)],
            lambda k: [(e, fn(m)) for e, m in r.half_right(k)],
            label=label or f"(id(x)f)({r.label})",
            inst2=self.inst2,
        )


# -- coproduct of elements and multipliers as operators ------------------------

def coproduct_op(inst: MhaInstance, x: Elem) -> TensorOp:
    """Delta(x) as a multiplier of A (x) A."""

    def left(t):
        pieces = []
        b1, b2 = legs_of(t.basis)
        for (k1, k2), c in t.items():
            pieces.append((c, inst.cover(x, r1=inst.elem(k1), r2=inst.elem(k2))))
        return accumulate(inst.tbasis(2), pieces)

    def right(t):
        pieces = []
        for (k1, k2), c in t.items():
            pieces.append((c, inst.cover(x, l1=inst.elem(k1), l2=inst.elem(k2))))
        return accumulate(inst.tbasis(2), pieces)

    return TensorOp(left, right, label=f"Delta({x})")


def galois_right(inst: MhaInstance, y: Elem, z: Elem) -> Elem:
    """Return sum a_i (x) b_i with sum Delta(a_i)(1 (x) b_i) = y (x) z."""
    t = inst.cover(y, l2=inst.antipode_inv(z))
    return apply_to_leg(t, 1, inst.antipode)


def galois_left(inst: MhaInstance, y: Elem, z: Elem) -> Elem:
    """Return sum c_i (x) d_i with sum (c_i (x) 1)Delta(d_i) = y (x) z."""
    t = inst.cover(z, r1=inst.antipode_inv(y))
    return apply_to_leg(t, 0, inst.antipode)


def coproduct_multiplier_op(inst: MhaInstance, m: Multiplier) -> TensorOp:
    """Delta(m) for a multiplier m, through the Galois maps."""

    def left(t):
        pieces = []
        for (k1, k2), c in t.items():
            g = galois_right(inst, inst.elem(k1), inst.elem(k2))
            for (a, b), c2 in g.items():
                pieces.append((c * c2, inst.cover(m.left(inst.elem(a)), r2=inst.elem(b))))
        return accumulate(inst.tbasis(2), pieces)

    def right(t):
        pieces = []
        for (k1, k2), c in t.items():
            g = galois_left(inst, inst.elem(k1), inst.elem(k2))
            for (a, b), c2 in g.items():
                pieces.append((c * c2, inst.cover(m.right(inst.elem(b)), l1=inst.elem(a))))
        return accumulate(inst.tbasis(2), pieces)

    return TensorOp(left, right, label=f"Delta({m.label})")


def mul_leg(inst: MhaInstance, t: Elem, i: int, m, side: str = "left") -> Elem:
    """Multiply leg i of t by an element or multiplier m on the given side."""
    if isinstance(m, Multiplier):
        fn = m.left if side == "left" else m.right
    elif side == "left":
        fn = lambda e: inst.multiply(m, e)
    else:
        fn = lambda e: inst.multiply(e, m)
    return apply_to_leg(t, i, fn)


def basis_tensor(inst: MhaInstance, *keys) -> Elem:
    return simple_tensor(inst.tbasis(len(keys)), tuple(keys))


def multiply_out(inst: MhaInstance, t: Elem) -> Elem:
    """m: A (x) A -> A."""
    pieces = []
    for (k1, k2), c in t.items():
        pieces.append((c, inst._mul_cached(k1, k2)))
    return accumulate(inst.basis, pieces)
