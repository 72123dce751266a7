"""G-gradings, crossings and the deformed coproduct and antipode.

A ``GradedCrossing`` attaches to an instance a degree for every basis key and an
action pi of G by automorphisms.  ``DeformedInstance`` is the same algebra with
the deformed coproduct

    Delta~(b)(1 (x) b') = (pi_{q^-1} (x) id)(Delta(b)(1 (x) b'))    for b' of degree q

and the deformed antipode S~(b) = pi_{p^-1}(S(b)) for b of degree p.
"""
from __future__ import annotations

import itertools
from typing import Callable

from .core import MhaInstance
from .instances.group import FiniteGroup, trivial_group
from .linalg import Elem, accumulate, apply_to_leg, flip, legs_of


class GradedCrossing:
    def __init__(self, inst: MhaInstance, group: FiniteGroup, degree: Callable, act: Callable,
                 name: str = "pi"):
        self.inst = inst
        self.group = group
        self._degree = degree
        self._act = act
        self.name = name

    @classmethod
    def trivial(cls, inst: MhaInstance) -> "GradedCrossing":
        G = trivial_group()
        return cls(inst, G, lambda k: G.e, lambda p, x: x, name="trivial")

    @property
    def is_trivial(self) -> bool:
        return len(self.group) == 1 or self.name == "trivial"

    def degree(self, key):
        return self._degree(key)

    def pi(self, p) -> Callable[[Elem], Elem]:
        return lambda x: self._act(p, x)

    def apply(self, p, x: Elem) -> Elem:
        return self._act(p, x)

    def split(self, x: Elem) -> dict:
        """Homogeneous components of x, keyed by degree."""
        parts: dict = {}
        for k, c in x.items():
            parts.setdefault(self._degree(k), {})[k] = c
        return {q: Elem._raw(x.basis, t) for q, t in parts.items()}

    def project(self, x: Elem, q) -> Elem:
        return Elem._raw(x.basis, {k: c for k, c in x.items() if self._degree(k) == q})

    def project_leg(self, t: Elem, leg: int, q) -> Elem:
        return Elem._raw(t.basis, {k: c for k, c in t.items() if self._degree(k[leg]) == q})

    def degree_of(self, x: Elem):
        """The degree of a nonzero homogeneous element (None if not homogeneous)."""
        degs = {self._degree(k) for k in x.keys()}
        return degs.pop() if len(degs) == 1 else None


class _Delegate(MhaInstance):
    def __init__(self, inner: MhaInstance):
        super().__init__(inner.basis)
        self.inner = inner
        self.unital = inner.unital
        self._mul_cache = inner._mul_cache

    def one(self):
        return self.inner.one()

    def mul_keys(self, k1, k2):
        return self.inner.mul_keys(k1, k2)

    def counit_key(self, k):
        return self.inner.counit_key(k)

    def window(self, radius):
        return self.inner.window(radius)

    def size(self, key):
        return self.inner.size(key)

    def local_unit(self, s):
        return self.inner.local_unit(s)

    def unit_candidates(self, x, side):
        return self.inner.unit_candidates(x, side)


class CopInstance(_Delegate):
    """The co-opposite: same algebra, Delta^cop = flip o Delta, antipode S^-1."""

    def __init__(self, inner: MhaInstance):
        super().__init__(inner)
        self.name = f"{inner.name}^cop"

    def cover(self, y, l1=None, l2=None, r1=None, r2=None):
        return flip(self.inner.cover(y, l1=l2, l2=l1, r1=r2, r2=r1))

    def antipode_key(self, k):
        return self.inner.antipode_inv_key(k)

    def antipode_inv_key(self, k):
        return self.inner.antipode_key(k)


class DeformedInstance(_Delegate):
    """(B~, Delta~, S~) for a graded instance with an admissible action."""

    def __init__(self, inner: MhaInstance, crossing: GradedCrossing):
        super().__init__(inner)
        self.crossing = crossing
        self.name = f"{inner.name}~"

    def cover(self, y, l1=None, l2=None, r1=None, r2=None):
        gc, G = self.crossing, self.crossing.group
        degrees = list(G.elements)
        if r2 is not None:
            degrees = [q for q in degrees if gc.project(r2, q)]
        if l2 is not None:
            degrees = [q for q in degrees if gc.project(l2, q)]
        pieces = []
        for q in degrees:
            qi = G.inv(q)
            inner = self.inner.cover(
                y,
                l1=None if l1 is None else gc.apply(q, l1),
                l2=None if l2 is None else gc.project(l2, q),
                r1=None if r1 is None else gc.apply(q, r1),
                r2=None if r2 is None else gc.project(r2, q),
            )
            inner = gc.project_leg(inner, 1, q)
            if inner:
                pieces.append((1, apply_to_leg(inner, 0, gc.pi(qi))))
        return accumulate(self.tbasis(2), pieces)

    def antipode_key(self, k):
        gc = self.crossing
        p = gc.degree(k)
        return gc.apply(gc.group.inv(p), self.inner.antipode_key(k))

    def antipode_inv_key(self, k):
        gc = self.crossing
        q = gc.degree(k)
        return self.inner.antipode_inv(gc.apply(gc.group.inv(q), self.inner.elem(k)))


def crossing_violations(gc: GradedCrossing, keys: list, pairs: list | None = None) -> list[str]:
    """Structural checks of a crossing on a set of basis keys.

    Homomorphism, automorphism of the product, coproduct compatibility in
    covered form, and the crossing condition pi_p(B_q) in B_{pqp^-1}.
    """
    inst, G = gc.inst, gc.group
    out = []
    els = list(G.elements)
    for p, q in itertools.product(els, els):
        pq = G.mul(p, q)
        for k in keys:
            x = inst.elem(k)
            if gc.apply(p, gc.apply(q, x)) != gc.apply(pq, x):
                out.append(f"pi_{p} pi_{q} != pi_{pq} on {x}")
            y = gc.apply(p, x)
            dq = gc.degree(k)
            if y and gc.degree_of(y) != G.conj(p, dq):
                out.append(f"pi_{p}({x}) not of degree {G.conj(p, dq)}")
    pairs = pairs if pairs is not None else [(a, b) for a in keys for b in keys]
    for p in els:
        f = gc.pi(p)
        for k1, k2 in pairs:
            x, y = inst.elem(k1), inst.elem(k2)
            if f(inst.multiply(x, y)) != inst.multiply(f(x), f(y)):
                out.append(f"pi_{p} not multiplicative on {x}, {y}")
            lhs = inst.cover(f(x), r2=f(y))
            rhs = apply_to_leg(apply_to_leg(inst.cover(x, r2=y), 0, f), 1, f)
            if lhs != rhs:
                out.append(f"pi_{p} not comultiplicative on {x}, {y}")
    return out


def grading_violations(gc: GradedCrossing, keys: list) -> list[str]:
    """B_p B_q = 0 for p != q, products stay in degree, Delta(B_pq)(1 (x) B_q) in B_p (x) B_q."""
    inst, G = gc.inst, gc.group
    out = []
    for k1, k2 in itertools.product(keys, keys):
        x, y = inst.elem(k1), inst.elem(k2)
        d1, d2 = gc.degree(k1), gc.degree(k2)
        prod = inst.multiply(x, y)
        if d1 != d2 and prod:
            out.append(f"{x}*{y} != 0 across degrees")
        if d1 == d2 and prod and any(gc.degree(k) != d1 for k in prod.keys()):
            out.append(f"{x}*{y} leaves degree {d1}")
        t = inst.cover(x, r2=y)
        expect = G.mul(d1, G.inv(d2))
        for (a, b) in t.keys():
            if gc.degree(a) != expect or gc.degree(b) != d2:
                out.append(f"Delta({x})(1(x){y}) has a term outside degree ({expect}, {d2})")
                break
    return out
