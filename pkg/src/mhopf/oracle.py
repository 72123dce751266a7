"""Brute-force oracles that certify the hand-written structure tables.

The Ore oracles rebuild A from words in the generators (a, a^-1, b with
ba = -ab and b^2 = 0) and obtain every structure map of the dual by transport
through the Kronecker pairing.  Multiplier closed forms are compared with
truncated sums.  Finite groups are checked against dense function tables.
None of this reuses the tables being certified.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .linalg import Elem, accumulate, serialize, tensor
from .report import FAIL, INCONCLUSIVE, PASS


@dataclass
class OracleRecord:
    identity: str
    instance: str
    sample: str
    derived: str
    table: str
    status: str

    @property
    def match(self) -> bool:
        return self.status == PASS

    def as_dict(self) -> dict:
        return {"identity": self.identity, "instance": self.instance, "sample": self.sample,
                "derived": self.derived, "table": self.table, "status": self.status}


def _rec(identity, instance, sample, derived, table) -> OracleRecord:
    ok = derived == table
    return OracleRecord(identity, instance, str(sample), _s(derived), _s(table), PASS if ok else FAIL)


def _s(v) -> str:
    if isinstance(v, (Elem, int, Fraction)):
        return serialize(v)
    return str(v)


def _inconclusive(identity, instance, sample, why) -> OracleRecord:
    return OracleRecord(identity, instance, str(sample), why, "", INCONCLUSIVE)


@dataclass
class OracleReport:
    name: str
    sample_range: str
    records: list

    @property
    def mismatches(self) -> list:
        return [r for r in self.records if r.status == FAIL]

    @property
    def status(self) -> str:
        if self.mismatches:
            return FAIL
        if any(r.status == INCONCLUSIVE for r in self.records):
            return INCONCLUSIVE
        return PASS

    def as_dict(self) -> dict:
        counts = {PASS: 0, FAIL: 0, INCONCLUSIVE: 0}
        for r in self.records:
            counts[r.status] += 1
        return {"name": self.name, "range": self.sample_range, "status": self.status, "counts": counts,
                "mismatches": [r.as_dict() for r in self.mismatches]}


# -- the Ore algebra from generator words ---------------------------------------------------

def _word(key) -> str:
    m, n = key
    return ("a" * m if m >= 0 else "A" * -m) + "b" * n


def _normal(word: str):
    """Reduce a word in a, A = a^-1, b to (coeff, key) or None for zero."""
    if word.count("b") > 1:
        return None
    sign = 1
    if "b" in word:
        i = word.index("b")
        movers = len(word) - i - 1          # letters the b must pass to reach the end
        sign = -1 if movers % 2 else 1
    m = word.count("a") - word.count("A")
    return sign, (m, word.count("b"))


def naive_ore_product(k1, k2):
    r = _normal(_word(k1) + _word(k2))
    return {} if r is None else {r[1]: r[0]}


def _tensor_words_product(t1: dict, t2: dict) -> dict:
    out: dict = {}
    for (x1, y1), c1 in t1.items():
        for (x2, y2), c2 in t2.items():
            px, py = naive_ore_product(x1, x2), naive_ore_product(y1, y2)
            for kx, cx in px.items():
                for ky, cy in py.items():
                    out[(kx, ky)] = out.get((kx, ky), 0) + c1 * c2 * cx * cy
    return {k: c for k, c in out.items() if c}


def naive_ore_coproduct(key) -> dict:
    """Delta(a^m b^n) = Delta(a)^m Delta(b)^n from the generator images."""
    m, n = key
    g = ((1, 0), (1, 0)) if m >= 0 else ((-1, 0), (-1, 0))
    t = {((0, 0), (0, 0)): 1}
    for _ in range(abs(m)):
        t = _tensor_words_product(t, {g: 1})
    if n:
        t = _tensor_words_product(t, {((1, 0), (0, 1)): 1, ((0, 1), (0, 0)): 1})
    return t


def naive_ore_antipode(key) -> dict:
    """S(a^m b) = S(b) S(a)^m with S(a) = a^-1, S(b) = -a^-1 b."""
    m, n = key
    word = ""
    coeff = 1
    if n:
        word += "Ab"
        coeff = -1
    word += "A" * m if m >= 0 else "a" * -m
    r = _normal(word)
    return {} if r is None else {r[1]: coeff * r[0]}


def naive_ore_counit(key) -> int:
    return 1 if key[1] == 0 else 0


def _ore_keys(radius):
    return [(m, n) for m in range(-radius, radius + 1) for n in (0, 1)]


def ore_table_oracles(ore, radius: int = 8) -> OracleReport:
    """The Ore algebra's product, coproduct, counit and antipode against word rewriting."""
    recs = []
    keys = _ore_keys(radius)
    for k1 in keys:
        x = ore.elem(k1)
        recs.append(_rec("Delta from generators", ore.name, x,
                         Elem(ore.tbasis(2), naive_ore_coproduct(k1)), ore.coproduct(x)))
        recs.append(_rec("S from generators", ore.name, x, Elem(ore.basis, naive_ore_antipode(k1)), ore.antipode(x)))
        recs.append(_rec("eps from generators", ore.name, x, naive_ore_counit(k1), ore.counit(x)))
    small = _ore_keys(min(radius, 4))
    for k1, k2 in itertools.product(small, small):
        recs.append(_rec("product from generators", ore.name, f"{_word(k1) or '1'}*{_word(k2) or '1'}",
                         Elem(ore.basis, naive_ore_product(k1, k2)), ore.multiply(ore.elem(k1), ore.elem(k2))))
    return OracleReport("ore-generators", f"|m| <= {radius}", recs)


# -- the dual by duality transport ---------------------------------------------------------

def _pair(fkey, xdict) -> object:
    return xdict.get(fkey, 0)


def transported_product(fk, gk) -> dict:
    """(f g)(x) = <f (x) g, Delta(x)>, collected over the only x that can pair nonzero."""
    out = {}
    for m in range(fk[0] - 2, fk[0] + 3):
        for n in (0, 1):
            v = naive_ore_coproduct((m, n)).get((fk, gk), 0)
            if v:
                out[(m, n)] = v
    return out


def transported_cover_right(fk, gk) -> dict:
    """<Delta(f)(1 (x) g), x (x) y> = sum <f, x y_(1)> <g, y_(2)>."""
    out = {}
    for ym in range(gk[0] - 2, gk[0] + 3):
        for yn in (0, 1):
            dy = naive_ore_coproduct((ym, yn))
            for xm in range(fk[0] - ym - 3, fk[0] - ym + 4):
                for xn in (0, 1):
                    v = 0
                    for (y1, y2), c in dy.items():
                        if y2 == gk:
                            v += c * _pair(fk, naive_ore_product((xm, xn), y1))
                    if v:
                        out[((xm, xn), (ym, yn))] = v
    return out


def transported_cover_left(fk, gk) -> dict:
    """<(f (x) 1)Delta(g), x (x) y> = sum <f, x_(1)> <g, x_(2) y>."""
    out = {}
    for xm in range(fk[0] - 2, fk[0] + 3):
        for xn in (0, 1):
            dx = naive_ore_coproduct((xm, xn))
            for ym in range(gk[0] - xm - 3, gk[0] - xm + 4):
                for yn in (0, 1):
                    v = 0
                    for (x1, x2), c in dx.items():
                        if x1 == fk:
                            v += c * _pair(gk, naive_ore_product(x2, (ym, yn)))
                    if v:
                        out[((xm, xn), (ym, yn))] = v
    return out


def transported_antipode(fk) -> dict:
    """<S(f), x> = <f, S(x)>."""
    out = {}
    for m in range(-fk[0] - 3, -fk[0] + 4):
        for n in (0, 1):
            v = _pair(fk, naive_ore_antipode((m, n)))
            if v:
                out[(m, n)] = v
    return out


def transported_counit(fk) -> int:
    """eps(f) = <f, 1>."""
    return 1 if fk == (0, 0) else 0


def dual_product_oracle(dual, radius: int = 8) -> OracleReport:
    recs = []
    keys = _ore_keys(radius)
    for fk, gk in itertools.product(keys, keys):
        if abs(fk[0] - gk[0]) > 2:
            derived = Elem(dual.basis, transported_product(fk, gk))
            if derived:
                recs.append(_rec("product by transport", dual.name, f"w{list(fk)}*w{list(gk)}", derived, dual.zero()))
            continue
        recs.append(_rec("product by transport", dual.name, f"w{list(fk)}*w{list(gk)}",
                         Elem(dual.basis, transported_product(fk, gk)),
                         dual.multiply(dual.elem(fk), dual.elem(gk))))
    return OracleReport("dual-product", f"|p|,|q| <= {radius}", recs)


def dual_coproduct_oracle(dual, radius: int = 8, partner_radius: int = 3) -> OracleReport:
    recs = []
    tb = dual.tbasis(2)
    for fk in _ore_keys(radius):
        for gk in _ore_keys(partner_radius):
            f, g = dual.elem(fk), dual.elem(gk)
            recs.append(_rec("Delta(f)(1(x)g) by transport", dual.name, f"f={f}, g={g}",
                             Elem(tb, transported_cover_right(fk, gk)), dual.cover(f, r2=g)))
            recs.append(_rec("(g(x)1)Delta(f) by transport", dual.name, f"f={f}, g={g}",
                             Elem(tb, transported_cover_left(gk, fk)), dual.cover(f, l1=g)))
    return OracleReport("dual-coproduct", f"|p| <= {radius}, partner |q| <= {partner_radius}", recs)


def dual_antipode_oracle(dual, radius: int = 8) -> OracleReport:
    recs = []
    for fk in _ore_keys(radius):
        f = dual.elem(fk)
        recs.append(_rec("S by transport", dual.name, f, Elem(dual.basis, transported_antipode(fk)), dual.antipode(f)))
        recs.append(_rec("S^-1 S = id", dual.name, f, f, dual.antipode_inv(dual.antipode(f))))
        recs.append(_rec("eps by transport", dual.name, f, transported_counit(fk), dual.counit(f)))
    return OracleReport("dual-antipode-counit", f"|p| <= {radius}", recs)


def sign_convention_discrepancies(radius: int = 4) -> dict:
    """Count how far the alternative coproduct sign and counit are from the transported values."""
    from .instances.ore import OreDual

    out = {}
    lit = OreDual(corrupt="coproduct-sign")
    rep = dual_coproduct_oracle(lit, radius, 2)
    out["coproduct sign (-1)^(s(p-s))"] = len(rep.mismatches)
    lit = OreDual(corrupt="counit-shift")
    rep = dual_antipode_oracle(lit, radius)
    out["counit(w[p,0]) = delta(p,1)"] = len(rep.mismatches)
    return out


# -- partial sums for closed-form multipliers -------------------------------------------------

def _truncated_delta(dual, N: int) -> Elem:
    return accumulate(dual.basis, [((-1) ** (p % 2), dual.elem((p, 0))) for p in range(-N, N + 1)])


def _delta_power_act(dual, T: Elem, j: int, x: Elem, side: str) -> Elem:
    for _ in range(abs(j) if j >= 0 else abs(j)):
        x = dual.multiply(T, x) if side == "left" else dual.multiply(x, T)
    return x


def delta_partial_sum_oracle(dual, N: int = 10, radius: int = 8) -> OracleReport:
    """Truncated sum_{|p|<=N} (-1)^p w[p,0] and its powers against the closed-form sign actions.

    delta_hat^-1 is the truncation of sum (-1)^(-p) w[p,0], the same sum, so negative
    powers use it as well.
    """
    recs = []
    T = _truncated_delta(dual, N)
    for k in _ore_keys(radius):
        x = dual.elem(k)
        if abs(k[0]) + 1 > N:
            recs.append(_inconclusive("delta_hat partial sum", dual.name, x, f"radius {N} too small for {x}"))
            continue
        for j in (-2, -1, 1, 2, 3):
            m = dual.delta_power(j)
            recs.append(_rec(f"delta_hat^{j} x partial sum", dual.name, x, _delta_power_act(dual, T, j, x, "left"),
                             m.left(x)))
            recs.append(_rec(f"x delta_hat^{j} partial sum", dual.name, x, _delta_power_act(dual, T, j, x, "right"),
                             m.right(x)))
    return OracleReport("delta-partial-sums", f"truncation |p| <= {N}, window |q| <= {radius}", recs)


def r_partial_sum_oracle(dual, R, N: int = 10, radius: int = 6) -> OracleReport:
    """R = sum_{|p|<=N} delta_hat^p (x) w[p,0] applied to x (x) y versus the half covers."""
    recs = []
    T = _truncated_delta(dual, N)
    keys = _ore_keys(radius)
    for kx, ky in itertools.product(keys, keys):
        x, y = dual.elem(kx), dual.elem(ky)
        if max(abs(kx[0]), abs(ky[0])) + 1 > N:
            recs.append(_inconclusive("R partial sum", dual.name, f"{x} (x) {y}", f"radius {N} too small"))
            continue
        left = [(1, tensor(_delta_power_act(dual, T, p, x, "left"), dual.multiply(dual.elem((p, 0)), y)))
                for p in range(-N, N + 1)]
        right = [(1, tensor(_delta_power_act(dual, T, p, x, "right"), dual.multiply(y, dual.elem((p, 0)))))
                 for p in range(-N, N + 1)]
        t = tensor(x, y)
        recs.append(_rec("R(x(x)y) partial sum", dual.name, t, accumulate(t.basis, left), R.left(t)))
        recs.append(_rec("(x(x)y)R partial sum", dual.name, t, accumulate(t.basis, right), R.right(t)))
    return OracleReport("r-partial-sums", f"truncation |p| <= {N}, window |q| <= {radius}", recs)


def double_r_partial_sum_oracle(D, R, N: int = 8, radius: int = 2) -> OracleReport:
    """R_D = sum_{|p|<=N} (w[p,k] >< 1) (x) (1 >< a^p b^k) against the half covers of the double's R."""
    recs = []
    X, Y = D.X, D.Y
    keys = D.window(radius)
    terms = [(D.embed_x(X.elem((p, k))), D.embed_y(Y.elem((p, k)))) for p in range(-N, N + 1) for k in (0, 1)]
    for kz in keys:
        for ky in keys[:: max(1, len(keys) // 6)]:
            z, y = D.elem(kz), D.elem(ky)
            t = tensor(z, y)
            if D.size(kz) + 2 > N:
                recs.append(_inconclusive("R_D partial sum", D.name, t, f"radius {N} too small"))
                continue
            left = [(1, tensor(D.multiply(f, z), D.multiply(g, y))) for f, g in terms]
            right = [(1, tensor(D.multiply(z, f), D.multiply(y, g))) for f, g in terms]
            recs.append(_rec("R_D(z(x)y) partial sum", D.name, t, accumulate(t.basis, left), R.left(t)))
            recs.append(_rec("(z(x)y)R_D partial sum", D.name, t, accumulate(t.basis, right), R.right(t)))
    return OracleReport("double-r-partial-sums", f"truncation |p| <= {N}, window {radius}", recs)


# -- finite groups: dense tables -----------------------------------------------------------------

def group_function_oracle(G, K, kG) -> OracleReport:
    """K(G) and k[G] against functions on G and G x G, and the evaluation pairing."""
    recs = []
    els = list(G.elements)

    def fn(p):
        return {s: (1 if s == p else 0) for s in els}

    def to_elem(f):
        return Elem(K.basis, {s: v for s, v in f.items() if v})

    for p in els:
        f = fn(p)
        recs.append(_rec("S(f)(s) = f(s^-1)", K.name, f"d[{p}]", to_elem({s: f[G.inv(s)] for s in els}),
                         K.antipode(K.elem(p))))
        recs.append(_rec("eps(f) = f(e)", K.name, f"d[{p}]", f[G.e], K.counit(K.elem(p))))
        recs.append(_rec("u_p u_q table", kG.name, f"u[{p}]", kG.antipode(kG.elem(p)), kG.elem(G.inv(p))))
        for q in els:
            g = fn(q)
            recs.append(_rec("pointwise product", K.name, f"d[{p}] d[{q}]",
                             to_elem({s: f[s] * g[s] for s in els}), K.multiply(K.elem(p), K.elem(q))))
            # (Delta f)(s, t) = f(st), multiplied by 1 (x) g
            dense = {(s, t): f[G.mul(s, t)] * g[t] for s in els for t in els}
            recs.append(_rec("(Delta f)(s,t) = f(st)", K.name, f"Delta(d[{p}])(1(x)d[{q}])",
                             Elem(K.tbasis(2), {k: v for k, v in dense.items() if v}),
                             K.cover(K.elem(p), r2=K.elem(q))))
            recs.append(_rec("u_p u_q = u_pq", kG.name, f"u[{p}] u[{q}]", kG.elem(G.mul(p, q)),
                             kG.multiply(kG.elem(p), kG.elem(q))))
            conj = to_elem({s: g[G.mul(G.mul(G.inv(p), s), p)] for s in els})
            recs.append(_rec("(pi_p f)(s) = f(p^-1 s p)", K.name, f"pi_{p}(d[{q}])", conj, K.conjugation(p, K.elem(q))))
        recs.append(_rec("Delta(u_p) = u_p (x) u_p", kG.name, f"u[{p}]",
                         tensor(kG.elem(p), kG.elem(p)), kG.coproduct(kG.elem(p))))
    return OracleReport("group-dense", f"|G| = {len(els)}", recs)


def group_twist_oracle(D) -> OracleReport:
    """The crossed twist T(d_q (x) u_r) expanded over G^3 against the double's memoized twist."""
    recs = []
    G = D.bundle.crossing.group
    els = list(G.elements)
    X, Y = D.X, D.Y
    tb = None
    for q in els:
        for r in els:
            out = {}
            # Delta^2(d_q) = sum_{xyz = q} d_x (x) d_y (x) d_z; Delta^2(u_r) = u_r (x) u_r (x) u_r
            for x in els:
                for y in els:
                    z = G.mul(G.inv(G.mul(x, y)), q)
                    first = 1 if r == G.inv(z) else 0                                     # <u_r, S^-1(d_z)>
                    third = 1 if r == G.mul(G.mul(G.inv(q), x), q) else 0                # <u_r, pi_{q^-1}(d_x)>
                    if first and third:
                        out[(r, y)] = out.get((r, y), 0) + 1
            got = D.bundle.twist(q, r)
            tb = got.basis
            recs.append(_rec("crossed twist over G^3", D.name, f"T(d[{q}] (x) u[{r}])", Elem(tb, out), got))
    return OracleReport("group-twist", f"|G| = {len(els)}", recs)
