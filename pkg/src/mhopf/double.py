"""Drinfel'd doubles X >< Y of a pairing, plain and crossed.

Elements are sums of basis pairs x><y.  The algebra is the twisted tensor
product with

    (x >< y)(x' >< y') = x T(y (x) x') y',
    T(y (x) x') = sum hit(x', S^-1(y_(3)), pi_{p^-1}(y_(1))) >< y_(2)    (y of degree p),

where hit(x', c, d) is the functional w |-> <x', c w d>.  The coalgebra is the
product of the coalgebras ``xf`` and ``yf`` placed on the two factors: for the
plain double xf = X and yf = Y^cop, for the crossed double xf = X^cop and
yf = Y~.

Y must be unital with finite coproducts.  X may be non-unital; its unit then
appears as the key ``None`` in the X slot, which only ever occurs inside
intermediate products with multipliers of the form 1 >< y.
"""
from __future__ import annotations

from typing import Callable

from .cograded import CopInstance, DeformedInstance, GradedCrossing
from .core import MhaInstance, Multiplier, TwoLegMultiplier, multiplier_from_elem
from .linalg import Basis, Elem, accumulate, scalar, tensor, tensor_basis


class PairingBundle:
    """A pairing between X (whose elements get hit) and a unital, finite-coproduct Y.

    ``hit(xkey, c, d)`` returns sum <x_(1), c> x_(2) <x_(3), d> for c, d in Y.
    ``crossing`` is a GradedCrossing on Y (None for the plain double).
    """

    def __init__(self, X: MhaInstance, Y: MhaInstance, hit: Callable, crossing: GradedCrossing | None = None,
                 x_action: Callable | None = None, name: str = "pair"):
        if not Y.unital:
            raise ValueError("the second factor of a double must be unital")
        self.X = X
        self.Y = Y
        self.hit = hit
        self.crossing = crossing
        self.x_action = x_action
        self.name = name
        self._twist: dict = {}

    def twist(self, ykey, xkey) -> Elem:
        """T(y (x) x') as an element of X (x) Y (memoized per basis pair)."""
        key = (ykey, xkey)
        r = self._twist.get(key)
        if r is not None:
            return r
        X, Y, gc = self.X, self.Y, self.crossing
        tb = tensor_basis(X.basis, Y.basis)
        if gc is None:
            back = lambda e: e
        else:
            back = gc.pi(gc.group.inv(gc.degree(ykey)))
        pieces = []
        for (k1, k2, k3), c in Y.coproduct2(Y.elem(ykey)).items():
            h = self.hit(xkey, Y.antipode_inv(Y.elem(k3)), back(Y.elem(k1)))
            if h:
                pieces.append((c, tensor(h, Y.elem(k2))))
        r = self._twist[key] = accumulate(tb, pieces)
        return r


def _fmt_pair(X: MhaInstance, Y: MhaInstance):
    def fmt(k):
        xk, yk = k
        left = "1" if xk is None else X.basis.fmt(xk)
        return f"{left}><{Y.basis.fmt(yk)}"
    return fmt


def _order_pair(X: MhaInstance, Y: MhaInstance):
    def order(k):
        xk, yk = k
        return ((0,) if xk is None else (1, X.basis.order(xk)), Y.basis.order(yk))
    return order


class DoubleInstance(MhaInstance):
    def __init__(self, bundle: PairingBundle, xf: MhaInstance, yf: MhaInstance, name: str,
                 unit_margin: int = 2):
        X, Y = bundle.X, bundle.Y
        super().__init__(Basis(name, _fmt_pair(X, Y), _order_pair(X, Y)))
        self.name = name
        self.bundle = bundle
        self.X, self.Y = X, Y
        self.xf, self.yf = xf, yf
        self.unital = X.unital
        self.unit_margin = unit_margin
        self._ycop: dict = {}
        self._full: dict = {}

    # -- element helpers -----------------------------------------------------------
    def pair(self, xe: Elem | None, ye: Elem) -> Elem:
        """x >< y for x in X (None: the unit of X) and y in Y."""
        if xe is None:
            if self.X.unital:
                xe = self.X.one()
            else:
                return Elem._raw(self.basis, {(None, k): c for k, c in ye.items()})
        return Elem._raw(self.basis, {(a, b): scalar(c * d) for a, c in xe.items() for b, d in ye.items()})

    def embed_x(self, xe: Elem) -> Elem:
        return self.pair(xe, self.Y.one())

    def embed_y(self, ye: Elem) -> Elem:
        return self.pair(None, ye)

    def y_multiplier(self, ye: Elem, label: str | None = None) -> Multiplier:
        """1 >< y as a multiplier of the double."""
        emb = self.embed_y(ye)
        return Multiplier(
            self,
            lambda k: self.multiply(emb, self.elem(k)),
            lambda k: self.multiply(self.elem(k), emb),
            label=label or f"1><{ye}",
            elem=emb if self.unital else None,
        )

    def x_multiplier(self, xe: Elem, label: str | None = None) -> Multiplier:
        return multiplier_from_elem(self, self.embed_x(xe), label=label)

    def one(self) -> Elem:
        if not self.unital:
            raise TypeError(f"{self.name} is not unital")
        return self.pair(self.X.one(), self.Y.one())

    # -- algebra -----------------------------------------------------------------
    def mul_keys(self, k1, k2) -> Elem:
        (x, y), (x2, y2) = k1, k2
        X, Y = self.X, self.Y
        if x2 is None:
            return self.pair(None if x is None else X.elem(x), Y._mul_cached(y, y2))
        pieces = []
        for (a, b), c in self.bundle.twist(y, x2).items():
            left = X.elem(a) if x is None else X._mul_cached(x, a)
            if not left:
                continue
            right = Y._mul_cached(b, y2)
            if right:
                pieces.append((c, self.pair(left, right)))
        return accumulate(self.basis, pieces)

    # -- counit, antipode ------------------------------------------------------------
    def counit_key(self, k):
        x, y = k
        cx = 1 if x is None else self.X.counit_key(x)
        return cx * self.Y.counit_key(y)

    def _anti(self, k, sx, sy) -> Elem:
        x, y = k
        left = self.embed_y(sy(self.Y.elem(y)))
        if x is None:
            return left
        return self.multiply(left, self.embed_x(sx(self.X.elem(x))))

    def antipode_key(self, k) -> Elem:
        """S(x >< y) = (1 >< S_yf(y))(S_xf(x) >< 1)."""
        return self._anti(k, self.xf.antipode, self.yf.antipode)

    def antipode_inv_key(self, k) -> Elem:
        return self._anti(k, self.xf.antipode_inv, self.yf.antipode_inv)

    # -- coproduct -------------------------------------------------------------------
    def _y_cop(self, ykey) -> list:
        """The finite Delta_yf(y) as a list of (coeff, yA, yB)."""
        r = self._ycop.get(ykey)
        if r is None:
            Y = self.Y
            t = self.yf.cover(Y.elem(ykey), r2=Y.one())
            r = self._ycop[ykey] = [(c, Y.elem(a), Y.elem(b)) for (a, b), c in t.items()]
        return r

    def _full_key(self, k) -> Elem:
        """Delta(x >< y) for a unital X, as a finite tensor."""
        r = self._full.get(k)
        if r is not None:
            return r
        x, y = k
        X = self.X
        tx = self.xf.cover(X.elem(x), r2=X.one())
        pieces = []
        for (a, b), c in tx.items():
            for cy, yA, yB in self._y_cop(y):
                pieces.append((c * cy, tensor(self.pair(X.elem(a), yA), self.pair(X.elem(b), yB))))
        r = self._full[k] = accumulate(self.tbasis(2), pieces)
        return r

    def coproduct(self, z: Elem) -> Elem:
        if not self.unital:
            raise TypeError(f"coproduct of {self.name} needs a covering element")
        pieces = [(c, self._full_key(k)) for k, c in z.items()]
        return accumulate(self.tbasis(2), pieces)

    def cover(self, y: Elem, l1=None, l2=None, r1=None, r2=None) -> Elem:
        if self.unital:
            return self.finish_cover(self.coproduct(y), l1, l2, r1, r2)
        pieces = [(c, self._cover_key(k, l1, l2, r1, r2)) for k, c in y.items()]
        return accumulate(self.tbasis(2), pieces)

    def _cover_key(self, k, l1, l2, r1, r2) -> Elem:
        x, yk = k
        X, xf = self.X, self.xf
        if x is None:
            raise TypeError("coproduct of a multiplier 1><y is not an element")
        xe = X.elem(x)
        tb = self.tbasis(2)
        pieces = []
        if r2 is not None:
            for cy, yA, yB in self._y_cop(yk):
                s = self.multiply(self.embed_y(yB), r2)
                for (fk, tk), cs in s.items():
                    for (ck, dk), cc in xf.cover(xe, r2=X.elem(fk)).items():
                        pieces.append((cy * cs * cc, tensor(self.pair(X.elem(ck), yA),
                                                            self.pair(X.elem(dk), self.Y.elem(tk)))))
            return self.finish_cover(accumulate(tb, pieces), l1, l2, r1, None)
        if r1 is not None:
            for cy, yA, yB in self._y_cop(yk):
                s = self.multiply(self.embed_y(yA), r1)
                for (fk, tk), cs in s.items():
                    for (ck, dk), cc in xf.cover(xe, r1=X.elem(fk)).items():
                        pieces.append((cy * cs * cc, tensor(self.pair(X.elem(ck), self.Y.elem(tk)),
                                                            self.pair(X.elem(dk), yB))))
            return self.finish_cover(accumulate(tb, pieces), l1, l2, None, None)
        side_elem, side = (l1, "l1") if l1 is not None else (l2, "l2")
        if side_elem is None:
            from .core import UncoveredError
            raise UncoveredError(f"Delta of {self.elem(k)} needs a covering element")
        for s in self.local_unit_indices(side_elem, "right"):
            e = X.local_unit(s)
            tx = xf.cover(xe, l1=e) if side == "l1" else xf.cover(xe, l2=e)
            for (ck, dk), cc in tx.items():
                for cy, yA, yB in self._y_cop(yk):
                    pieces.append((cc * cy, tensor(self.pair(X.elem(ck), yA), self.pair(X.elem(dk), yB))))
        t = accumulate(tb, pieces)
        if side == "l1":
            return self.finish_cover(t, l1=l1, l2=l2)
        return self.finish_cover(t, l2=l2)

    # -- windows and local units ---------------------------------------------------------
    def window(self, radius: int) -> list:
        xs = self.X.window(radius)
        ys = self.Y.window(radius)
        return [(a, b) for a in xs for b in ys if self.size((a, b)) <= radius]

    def size(self, key) -> int:
        x, y = key
        return max(self.X.size(x), self.Y.size(y))

    def local_unit(self, s) -> Elem:
        return self.embed_x(self.X.local_unit(s))

    def unit_candidates(self, z: Elem, side: str):
        m = self.unit_margin
        for (x, _y), _c in z.items():
            if x is None:
                continue
            for s in self.X.unit_candidates(self.X.elem(x), side):
                yield from range(s - m, s + m + 1)

    # -- grading and crossing (crossed double) ---------------------------------------------
    def degree(self, key):
        gc = self.bundle.crossing
        return gc.group.inv(gc.degree(key[1]))

    def conjugation(self, p, z: Elem) -> Elem:
        """The natural crossing pi'_p (x) pi_p."""
        gc, act = self.bundle.crossing, self.bundle.x_action
        pieces = []
        for (x, y), c in z.items():
            xe = None if x is None else act(p, self.X.elem(x))
            pieces.append((c, self.pair(xe, gc.apply(p, self.Y.elem(y)))))
        return accumulate(self.basis, pieces)

    def crossing(self) -> GradedCrossing:
        gc = self.bundle.crossing
        return GradedCrossing(self, gc.group, self.degree, self.conjugation, name="pi'(x)pi")


# -- constructors ------------------------------------------------------------------

def plain_double(bundle: PairingBundle, name: str) -> DoubleInstance:
    """X >< Y^cop: coproduct Delta_X(x) Delta^cop_Y(y)."""
    return DoubleInstance(bundle, bundle.X, CopInstance(bundle.Y), name)


def crossed_double(bundle: PairingBundle, name: str) -> DoubleInstance:
    """X^cop >< Y~: coproduct Delta^cop_X(x) Delta~_Y(y)."""
    if bundle.crossing is None:
        raise ValueError("a crossed double needs a crossing on the second factor")
    return DoubleInstance(bundle, CopInstance(bundle.X), DeformedInstance(bundle.Y, bundle.crossing), name)


def canonical_r(D: DoubleInstance, dual_key: Callable, label: str = "R_D",
                coeff: Callable | None = None) -> TwoLegMultiplier:
    """R = sum_i (x_i >< 1) (x) (1 >< y_i) for dual bases x_i of X and y_i = dual_key(x_i) of Y.

    Half covers are finite: R(z (x) 1) only involves x_i in the left support of
    z's X part, and (z (x) 1)R = (zE (x) 1)R for a certified local unit E.
    ``coeff(i)`` rescales the i-th term (negative controls only).
    """
    X, Y = D.X, D.Y
    mults: dict = {}

    def second(i):
        m = mults.get(i)
        if m is None:
            c = 1 if coeff is None else coeff(i)
            m = mults[i] = D.y_multiplier(Y.elem(dual_key(i), c))
        return m

    def half_left(k):
        x, _y = k
        out = []
        z = D.elem(k)
        idx = X.left_support(x) if x is not None else X.window(0)
        for i in idx:
            e = D.multiply(D.embed_x(X.elem(i)), z)
            if e:
                out.append((e, second(i)))
        return out

    def half_right(k):
        z = D.elem(k)
        out: dict = {}
        for s in D.local_unit_indices(z, "right"):
            for ek in X.local_unit(s).keys():
                for i in X.right_support(ek):
                    xe = X.multiply(X.local_unit(s), X.elem(i))
                    e = D.multiply(z, D.embed_x(xe))
                    if e:
                        out[i] = out[i] + e if i in out else e
        return [(e, second(i)) for i, e in out.items() if e]

    return TwoLegMultiplier(D, half_left, half_right, label=label)


def two_leg_from_tensor(inst: MhaInstance, t: Elem, label: str = "W") -> TwoLegMultiplier:
    """A finite tensor of a unital instance as a two-leg multiplier."""
    seconds = [(inst.elem(a), multiplier_from_elem(inst, inst.elem(b, c))) for (a, b), c in t.items()]

    def half_left(k):
        z = inst.elem(k)
        prods = [(inst.multiply(e1, z), m) for e1, m in seconds]
        return [(e, m) for e, m in prods if e]

    def half_right(k):
        z = inst.elem(k)
        prods = [(inst.multiply(z, e1), m) for e1, m in seconds]
        return [(e, m) for e, m in prods if e]

    return TwoLegMultiplier(inst, half_left, half_right, label=label)


def crossed_w(D: DoubleInstance, dual_key: Callable, drop=None, flip=None) -> Elem:
    """W = sum_i (1 >< b_i) (x) (a_i >< 1) as a finite tensor of the crossed double.

    b_i runs over the basis of Y and a_i = dual_key(b_i) over the dual basis of X.
    ``drop`` removes one term and ``flip`` negates one (negative controls).
    """
    pieces = []
    for b in D.Y.window(0):
        if b == drop:
            continue
        pieces.append((-1 if b == flip else 1, tensor(D.embed_y(D.Y.elem(b)), D.embed_x(D.X.elem(dual_key(b))))))
    return accumulate(D.tbasis(2), pieces)


# -- formal series of double elements (regression fixtures) ----------------------------

class FormalSeries:
    """A multiplier sum_p c_p f_p1 f_p2 ... given term by term.

    ``terms(p)`` returns a list of (coeff, [factors]) where each factor is an
    element of the double (possibly with None in the X slot).  Acting on a
    basis element with index q only the terms with |p - q| <= bound can
    contribute; this is certified by checking that the terms at distance
    bound + 1 and bound + 2 vanish.
    """

    def __init__(self, D: DoubleInstance, terms: Callable, index: Callable, bound: int = 3,
                 label: str = "series"):
        self.D = D
        self.terms = terms
        self.index = index
        self.bound = bound
        self.label = label

    def _act(self, z: Elem, p, side: str) -> Elem:
        D = self.D
        pieces = []
        for c, factors in self.terms(p):
            out = z
            if side == "left":
                for f in reversed(factors):
                    out = D.multiply(f, out)
            else:
                for f in factors:
                    out = D.multiply(out, f)
            pieces.append((c, out))
        return accumulate(D.basis, pieces)

    def _act_key(self, k, side: str) -> Elem:
        D = self.D
        q = self.index(k)
        z = D.elem(k)
        for d in (self.bound + 1, self.bound + 2):
            for p in (q - d, q + d):
                if self._act(z, p, side):
                    raise ArithmeticError(f"{self.label}: term {p} still acts on {z}; raise the bound")
        pieces = [(1, self._act(z, p, side)) for p in range(q - self.bound, q + self.bound + 1)]
        return accumulate(D.basis, pieces)

    def multiplier(self) -> Multiplier:
        return Multiplier(self.D, lambda k: self._act_key(k, "left"), lambda k: self._act_key(k, "right"),
                          label=self.label)
