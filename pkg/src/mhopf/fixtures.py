"""Named closed-form values for the Ore examples, used as regression fixtures.

The Ore double D = A_hat >< A^cop is written with elements w[p,k] >< a^r b^l.
Each fixture is a formal series over p, evaluated through ``FormalSeries``.
"""
from __future__ import annotations

from .core import Multiplier
from .double import DoubleInstance, FormalSeries, PairingBundle, plain_double
from .instances.ore import OreAlgebra, OreDual, OrePairing
from .linalg import Elem, sign


def build_ore_double() -> tuple[DoubleInstance, OreAlgebra, OreDual, OrePairing]:
    A, Ah = OreAlgebra(), OreDual()
    P = OrePairing(A, Ah)
    D = plain_double(PairingBundle(Ah, A, P.hit, name="ore"), "ore-double")
    return D, A, Ah, P


class OreDoubleFixtures:
    """u, u^-1, S(u)^-1 and g of the Ore double, in both orderings."""

    def __init__(self, D: DoubleInstance):
        self.D = D

    def w(self, p, k) -> Elem:
        return self.D.embed_x(self.D.X.elem((p, k)))

    def ab(self, r, l=0) -> Elem:
        return self.D.embed_y(self.D.Y.elem((r, l)))

    def _series(self, terms, label, bound=3) -> Multiplier:
        return FormalSeries(self.D, terms, lambda k: k[0][0] if k[0] is not None else 0, bound=bound,
                            label=label).multiplier()

    # u
    def u_raw(self):
        """sum a^-p w[p,0] + sum (-1)^p a^(-1-p) b w[p,1]"""
        return self._series(lambda p: [(1, [self.ab(-p), self.w(p, 0)]),
                                       (sign(p), [self.ab(-1 - p, 1), self.w(p, 1)])], "u (algebra side first)")

    def u(self):
        """sum (-1)^p w[p,0] a^(-p-1) + sum w[p,1] a^(-p-2) b"""
        return self._series(lambda p: [(sign(p), [self.w(p, 0), self.ab(-p - 1)]),
                                       (1, [self.w(p, 1), self.ab(-p - 2, 1)])], "u")

    # u^-1
    def u_inv_raw(self):
        """sum a^p w[p,0] - sum a^p b w[p,1]"""
        return self._series(lambda p: [(1, [self.ab(p), self.w(p, 0)]),
                                       (-1, [self.ab(p, 1), self.w(p, 1)])], "u^-1 (algebra side first)")

    def u_inv(self):
        """sum (-1)^p w[p,0] a^(p+1) + sum (-1)^p w[p-1,1] a^p b"""
        return self._series(lambda p: [(sign(p), [self.w(p, 0), self.ab(p + 1)]),
                                       (sign(p), [self.w(p - 1, 1), self.ab(p, 1)])], "u^-1")

    # S(u)^-1
    def s_u_inv_raw(self):
        """sum (-1)^p a^(-p-1) w[-p,0] - sum (-1)^p a^(-1-p) b w[-p,1]"""
        return self._series(lambda p: [(sign(p), [self.ab(p - 1), self.w(p, 0)]),
                                       (-sign(p), [self.ab(p - 1, 1), self.w(p, 1)])], "S(u)^-1 (algebra side first)")

    def s_u_inv(self):
        """sum w[p,0] a^p - sum w[p,1] a^p b"""
        return self._series(lambda p: [(1, [self.w(p, 0), self.ab(p)]),
                                       (-1, [self.w(p, 1), self.ab(p, 1)])], "S(u)^-1")

    # g
    def g_expanded(self) -> Multiplier:
        """The four-term expansion: the rewritten u times the rewritten S(u)^-1."""
        m = self.u() * self.s_u_inv()
        m.label = "u S(u)^-1 (expanded)"
        return m

    def g(self):
        """sum (-1)^p w[p,0] a^-1, i.e. delta_hat >< delta_A"""
        return self._series(lambda p: [(sign(p), [self.w(p, 0), self.ab(-1)])], "delta_hat >< delta_A")

    def all(self) -> dict:
        return {
            "u (algebra side first)": self.u_raw(),
            "u (rewritten)": self.u(),
            "u^-1 (algebra side first)": self.u_inv_raw(),
            "u^-1 (rewritten)": self.u_inv(),
            "S(u)^-1 (algebra side first)": self.s_u_inv_raw(),
            "S(u)^-1 (rewritten)": self.s_u_inv(),
            "g (expanded)": self.g_expanded(),
            "g": self.g(),
        }

    def relations(self, p: int) -> list[tuple[str, Elem, Elem]]:
        """The generator commutation rules at index p, as (name, lhs, rhs).

        Four cross relations between a, b and w[p,k], plus ab = -ba and b^2 = 0 inside D.
        """
        D, w, ab = self.D, self.w, self.ab
        mul = D.multiply
        a, b = ab(1), ab(0, 1)
        return [
            (f"a w[{p},0] = w[{p},0] a", mul(a, w(p, 0)), mul(w(p, 0), a)),
            (f"a w[{p},1] = -w[{p},1] a", mul(a, w(p, 1)), mul(w(p, 1), a).scale(-1)),
            (f"b w[{p},0] = w[{p - 1},0] b", mul(b, w(p, 0)), mul(w(p - 1, 0), b)),
            (f"b w[{p},1] = w[{p},0] - (-1)^{p} w[{p},0] a - w[{p - 1},1] b", mul(b, w(p, 1)),
             w(p, 0) - mul(w(p, 0), a).scale(sign(p)) - mul(w(p - 1, 1), b)),
            ("a b = -b a (in D)", mul(w(p, 0), mul(a, b)), mul(w(p, 0), mul(b, a)).scale(-1)),
            ("b b = 0 (in D)", mul(w(p, 0), mul(b, b)), D.zero()),
        ]
