"""The Ore extension A = (kC)_{2,-1,1} and its reduced dual.

A has basis a^m b^n (m in Z, n in {0,1}) with ab = -ba, b^2 = 0, a invertible,
Delta(a) = a(x)a, Delta(b) = a(x)b + b(x)1.  The dual has basis w[m,n], the
functional that is 1 on a^m b^n and 0 on every other basis element.  Its
coproduct is an infinite sum, so it is only ever used in covered form.

Keys are integer pairs (m, n) in both algebras.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Callable

from ..core import (
    ExpansionInstance,
    FiniteCoproductInstance,
    Multiplier,
    TwoLegMultiplier,
    diagonal_multiplier,
    multiplier_from_elem,
)
from ..linalg import Basis, Elem, accumulate, linear_functional, sign, tensor

CORRUPTIONS_DUAL = {
    "product-sign": "w[p,0]*w[q,1] = -delta(p-q,1) w[q,1] instead of +",
    "antipode-sign": "S(w[p,1]) = -(-1)^p w[-p-1,1] (and S^-1 adjusted so S^-1 S = id)",
    "coproduct-sign": "coproduct sign (-1)^(s(p-s)) instead of (-1)^(s(p-r))",
    "counit-shift": "counit(w[p,0]) = delta(p,1) instead of delta(p,0)",
}

CORRUPTIONS_ORE = {
    "antipode-sign": "S(a^m b) = (-1)^m a^(-m-1) b (sign flipped, S^-1 adjusted)",
    "product-sign": "b a^r = a^r b instead of (-1)^r a^r b",
}


def _fmt_ore(k) -> str:
    m, n = k
    if n == 0:
        return "1" if m == 0 else f"a^{m}"
    return "b" if m == 0 else f"a^{m}*b"


def _fmt_dual(k) -> str:
    return f"w[{k[0]},{k[1]}]"


ORE_BASIS = Basis("ore", _fmt_ore)
DUAL_BASIS = Basis("ore-dual", _fmt_dual)


class OreAlgebra(FiniteCoproductInstance):
    name = "ore"
    unital = True

    def __init__(self, corrupt: str | None = None):
        super().__init__(ORE_BASIS)
        if corrupt is not None and corrupt not in CORRUPTIONS_ORE:
            raise ValueError(f"unknown corruption {corrupt!r} for {self.name}")
        self.corrupt = corrupt

    def one(self) -> Elem:
        return self.elem((0, 0))

    def mul_keys(self, k1, k2) -> Elem:
        (m, n), (r, l) = k1, k2
        if n + l > 1:
            return self.zero()
        c = sign(n * r)
        if self.corrupt == "product-sign":
            c = 1
        return self.elem((m + r, n + l), c)

    def coproduct_key(self, k) -> Elem:
        m, n = k
        tb = self.tbasis(2)
        if n == 0:
            return Elem._raw(tb, {((m, 0), (m, 0)): 1})
        return Elem._raw(tb, {((m + 1, 0), (m, 1)): 1, ((m, 1), (m, 0)): 1})

    def counit_key(self, k):
        return 1 if k[1] == 0 else 0

    def antipode_key(self, k) -> Elem:
        m, n = k
        if n == 0:
            return self.elem((-m, 0))
        c = sign(m + 1)
        if self.corrupt == "antipode-sign":
            c = -c
        return self.elem((-m - 1, 1), c)

    def antipode_inv_key(self, k) -> Elem:
        m, n = k
        if n == 0:
            return self.elem((-m, 0))
        c = sign(m)
        if self.corrupt == "antipode-sign":
            c = -c
        return self.elem((-m - 1, 1), c)

    def window(self, radius: int) -> list:
        return [(m, n) for m in range(-radius, radius + 1) for n in (0, 1)]

    def size(self, key) -> int:
        return abs(key[0])

    # -- integrals and modular element -------------------------------------------
    def left_integral(self, x: Elem):
        """phi(a^-1 b) = 1, zero on every other basis element."""
        return x.coeff((-1, 1))

    def right_integral(self, x: Elem):
        """psi = phi o S."""
        return self.left_integral(self.antipode(x))

    def modular_element(self) -> Elem:
        return self.elem((-1, 0))


class OreDual(ExpansionInstance):
    """The reduced dual of the Ore extension; non-unital with local units w[s,0]."""

    name = "ore-dual"
    unital = False

    def __init__(self, corrupt: str | None = None):
        super().__init__(DUAL_BASIS)
        if corrupt is not None and corrupt not in CORRUPTIONS_DUAL:
            raise ValueError(f"unknown corruption {corrupt!r} for {self.name}")
        self.corrupt = corrupt

    # -- product ----------------------------------------------------------------
    def mul_keys(self, k1, k2) -> Elem:
        (p, n), (q, l) = k1, k2
        if n == 0 and l == 0:
            return self.elem(k1) if p == q else self.zero()
        if n == 0 and l == 1:
            if p - q != 1:
                return self.zero()
            return self.elem(k2, -1 if self.corrupt == "product-sign" else 1)
        if n == 1 and l == 0:
            return self.elem((q, 1)) if p == q else self.zero()
        return self.zero()

    # -- coproduct -----------------------------------------------------------------
    def _coeff(self, p, r, s, t) -> int:
        """Coefficient of w[r,s] (x) w[t,u] in Delta(w[p,n]) (with r + t = p)."""
        if self.corrupt == "coproduct-sign":
            return sign(s * (p - s))
        return sign(s * t)

    def first_part(self, ykey, j) -> Elem:
        (p, n), (t, u) = ykey, j
        s = n - u
        if s not in (0, 1):
            return self.zero()
        return self.elem((p - t, s), self._coeff(p, p - t, s, t))

    def second_part(self, ykey, i) -> Elem:
        (p, n), (r, s) = ykey, i
        u = n - s
        if u not in (0, 1):
            return self.zero()
        return self.elem((p - r, u), self._coeff(p, r, s, p - r))

    def _neighbours(self, k):
        q = k[0]
        return [(q + d, s) for d in (-1, 0, 1) for s in (0, 1)]

    def left_support(self, k):
        return [j for j in self._neighbours(k) if self._mul_cached(j, k)]

    def right_support(self, k):
        return [j for j in self._neighbours(k) if self._mul_cached(k, j)]

    # -- counit and antipode -------------------------------------------------------
    def counit_key(self, k):
        p, n = k
        if n == 1:
            return 0
        target = 1 if self.corrupt == "counit-shift" else 0
        return 1 if p == target else 0

    def antipode_key(self, k) -> Elem:
        p, n = k
        if n == 0:
            return self.elem((-p, 0))
        c = sign(p)
        if self.corrupt == "antipode-sign":
            c = -c
        return self.elem((-p - 1, 1), c)

    def antipode_inv_key(self, k) -> Elem:
        m, n = k
        if n == 0:
            return self.elem((-m, 0))
        c = sign(m + 1)
        if self.corrupt == "antipode-sign":
            c = -c
        return self.elem((-m - 1, 1), c)

    # -- windows and local units -----------------------------------------------------
    def window(self, radius: int) -> list:
        return [(p, k) for p in range(-radius, radius + 1) for k in (0, 1)]

    def size(self, key) -> int:
        return abs(key[0])

    def local_unit(self, s) -> Elem:
        return self.elem((s, 0))

    def unit_candidates(self, x: Elem, side: str):
        for (q, _k) in x.keys():
            yield from (q - 1, q, q + 1)

    # -- integral, cointegral, modular multiplier -------------------------------------
    def left_integral(self, f: Elem):
        """phi_hat(w[p,1]) = 1 for every p, zero on w[p,0]."""
        return sum((c for (p, n), c in f.items() if n == 1), 0)

    def cointegral(self) -> Elem:
        return self.elem((-1, 1))

    def delta_power(self, j: int) -> Multiplier:
        """delta_hat^j = sum_r (-1)^(j r) w[r,0] in closed form."""
        return diagonal_multiplier(
            self,
            lambda k: sign(j * (k[0] + k[1])),
            lambda k: sign(j * k[0]),
            label="delta_hat" if j == 1 else f"delta_hat^{j}",
        )

    def modular_multiplier(self) -> Multiplier:
        return self.delta_power(1)


class OrePairing:
    """The Kronecker pairing <w[m,n], a^p b^q> = delta_mp delta_nq."""

    def __init__(self, ore: OreAlgebra | None = None, dual: OreDual | None = None):
        self.ore = ore or OreAlgebra()
        self.dual = dual or OreDual()

    def pair(self, f: Elem, x: Elem):
        return sum((c * x.coeff(k) for k, c in f.items()), 0)

    def pair_keys(self, fk, xk):
        return 1 if fk == xk else 0

    def modular_pairing(self, x: Elem):
        """<delta_hat, x> = sum over basis a^m of (-1)^m times the coefficient."""
        return sum((sign(m) * c for (m, n), c in x.items() if n == 0), 0)

    def right_hit(self, x: Elem, functional: Callable[[Elem], object]) -> Elem:
        """x <| f = sum <f, x_(1)> x_(2) for x in A and a functional f on A."""
        pieces = []
        for k, c in x.items():
            for (k1, k2), c2 in self.ore.coproduct_key(k).items():
                v = functional(self.ore.elem(k1))
                if v:
                    pieces.append((c * c2 * v, self.ore.elem(k2)))
        return accumulate(self.ore.basis, pieces)

    def dual_right_hit(self, f: Elem, x: Elem) -> Elem:
        """f <| x = sum <f_(1), x> f_(2) for f in the dual and x in A."""
        pieces = []
        for fk, c in f.items():
            for xk, cx in x.items():
                g = self.dual.second_part(fk, xk)
                if g:
                    pieces.append((c * cx, g))
        return accumulate(self.dual.basis, pieces)

    def hit(self, fkey, c: Elem, d: Elem) -> Elem:
        """sum <f_(1), c> f_(2) <f_(3), d>, i.e. the functional w |-> <f, c w d>."""
        s, t = fkey
        pieces = []
        for (mc, nc), cc in c.items():
            for (md, nd), cd in d.items():
                wk = (s - mc - md, t - nc - nd)
                if wk[1] not in (0, 1):
                    continue
                prod = self.ore.product(self.ore.elem((mc, nc)), self.ore.elem(wk), self.ore.elem((md, nd)))
                v = prod.coeff(fkey)
                if v:
                    pieces.append((cc * cd * v, self.dual.elem(wk)))
        return accumulate(self.dual.basis, pieces)


def ore_dual_r(dual: OreDual, corrupt: str | None = None) -> TwoLegMultiplier:
    """R = sum_p delta_hat^p (x) w[p,0], through its half covers.

    R(w[k,l] (x) 1) = w[k,l] (x) delta_hat^(k+l) and (w[k,l] (x) 1)R = w[k,l] (x) delta_hat^k.
    With corrupt == "r-sign" the exponent k+l is replaced by k (a sign flip on w[k,1]).
    """
    powers: dict = {}

    def power(j):
        j %= 2
        if j not in powers:
            powers[j] = dual.delta_power(j)
        return powers[j]

    def half_left(k):
        e = k[0] if corrupt == "r-sign" else k[0] + k[1]
        return [(dual.elem(k), power(e))]

    def half_right(k):
        return [(dual.elem(k), power(k[0]))]

    return TwoLegMultiplier(dual, half_left, half_right, label="R")


def elem_multiplier(inst, g: Elem) -> Multiplier:
    return multiplier_from_elem(inst, g)


# -- structure checks for the Ore pair ------------------------------------------------

def check_cointegral_lemmas(dual: OreDual, pairing: OrePairing, keys: list, h: Elem | None = None,
                            name: str = "ore-dual") -> list:
    """Cointegral identities of the dual, whose own dual is A (modular element a^-1).

    h f = <f, a^-1> h;  (1 (x) f)Delta(h) = (S(f) (x) 1)Delta(h);
    Delta(h)(f (x) 1) = Delta(h)(1 (x) S(f <| a^-1));
    Delta(h)(f (x) 1) = <delta_hat, a^-1>^-1 sum S^2(h_(2)) f (x) h_(1) delta_hat.
    """
    from ..linalg import apply_to_leg, flip
    from ..report import compare

    h = dual.cointegral() if h is None else h
    d_inv = pairing.ore.elem((-1, 0))
    dhat = dual.modular_multiplier()
    scale = pairing.modular_pairing(d_inv)
    out = []
    for k in keys:
        f = dual.elem(k)
        out.append(compare("f h = eps(f) h", name, f, dual.multiply(f, h), h.scale(dual.counit(f))))
        out.append(compare("h f = <f, delta_A> h", name, f, dual.multiply(h, f), h.scale(pairing.pair(f, d_inv))))
        out.append(compare("(1(x)f)Delta(h) = (S(f)(x)1)Delta(h)", name, f,
                           dual.cover(h, l2=f), dual.cover(h, l1=dual.antipode(f))))
        hit = pairing.dual_right_hit(f, d_inv)
        out.append(compare("Delta(h)(f(x)1) = Delta(h)(1(x)S(f<|delta_A))", name, f,
                           dual.cover(h, r1=f), dual.cover(h, r2=dual.antipode(hit))))
        t = dual.cover(h, r2=dual.antipode_inv(dual.antipode_inv(f)))
        t = apply_to_leg(t, 1, lambda e: dual.antipode(dual.antipode(e)))
        rhs = apply_to_leg(flip(t), 1, dhat.right).scale(Fraction(1) / scale)
        out.append(compare("Delta(h)(f(x)1) = <delta_hat,delta_A>^-1 S^2(h2)f (x) h1 delta_hat", name, f,
                           dual.cover(h, r1=f), rhs))
    return out


def check_modular_data(ore: OreAlgebra, dual: OreDual, pairing: OrePairing, keys: list, pairs: list,
                       name: str = "ore") -> list:
    """Integrals, modular elements and their grouplike properties on a window."""
    from ..linalg import apply_to_leg
    from ..report import compare, verdict

    d = ore.modular_element()
    out = []
    partners = ore.window(max(ore.size(k) for k in keys) + 2)
    out.append(compare("Delta(delta_A) = delta_A (x) delta_A", name, d, ore.coproduct(d), tensor(d, d)))
    out.append(compare("eps(delta_A) = 1", name, d, ore.counit(d), 1))
    out.append(compare("S(delta_A) = delta_A^-1", name, d, ore.multiply(ore.antipode(d), d), ore.one()))
    for k in keys:
        x = ore.elem(k)
        out.append(compare("(id(x)phi)Delta(x) = phi(x)1", name, x,
                           accumulate(ore.basis, [(c * ore.left_integral(ore.elem(k2)), ore.elem(k1))
                                                  for (k1, k2), c in ore.coproduct(x).items()]),
                           ore.one().scale(ore.left_integral(x))))
        out.append(compare("psi(x) = phi(x delta_A)", name, x, ore.right_integral(x),
                           ore.left_integral(ore.multiply(x, d))))
        nonzero = any(ore.left_integral(ore.multiply(ore.elem(j), x)) for j in partners)
        out.append(verdict("phi faithful", name, x, nonzero, "phi(y x) != 0 for some window y", ""))
    for a, b in pairs:
        x, y = ore.elem(a), ore.elem(b)
        lhs = accumulate(ore.basis, [(c * ore.left_integral(ore.elem(k1)), ore.elem(k2))
                                     for (k1, k2), c in ore.cover(x, r2=y).items()])
        out.append(compare("(phi(x)id)(Delta(x)(1(x)y)) = phi(x) delta_A y", name, f"x={x}, y={y}",
                           lhs, ore.multiply(d, y).scale(ore.left_integral(x))))
    dhat = dual.modular_multiplier()
    for a, b in pairs:
        f, g = dual.elem(a), dual.elem(b)
        lhs = dual.cover(dhat.left(f), r2=g)
        rhs = apply_to_leg(apply_to_leg(dual.cover(f, r2=g), 0, dhat.left), 1, dhat.left)
        out.append(compare("delta_hat grouplike", "ore-dual", f"f={f}, g={g}", lhs, rhs))
        lhs = accumulate(dual.basis, [(c * dual.left_integral(dual.elem(k2)), dual.elem(k1))
                                      for (k1, k2), c in dual.cover(g, l1=f).items()])
        out.append(compare("(id(x)phi_hat)((f(x)1)Delta(g)) = phi_hat(g) f", "ore-dual", f"f={f}, g={g}",
                           lhs, f.scale(dual.left_integral(g))))
    return out
