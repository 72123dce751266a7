"""Finite groups, the function algebra K(G), the group algebra k[G] and W.

Group elements are string labels.  Builtin groups: ``Zn`` (cyclic, labels
"0".."n-1") and ``S3`` (permutations of 123 in one-line notation, composed as
functions: (st)(i) = s(t(i))).
"""
from __future__ import annotations

import itertools
from pathlib import Path

from ..core import FiniteCoproductInstance, TwoLegMultiplier, multiplier_from_elem
from ..linalg import Basis, Elem, accumulate


class GroupLoadError(ValueError):
    pass


class FiniteGroup:
    def __init__(self, name: str, elements: list[str], table: dict[tuple[str, str], str]):
        self.name = name
        self.elements = list(elements)
        self.table = dict(table)
        self._validate()
        self.index = {g: i for i, g in enumerate(self.elements)}
        self.e = next(g for g in self.elements if all(self.table[g, h] == h for h in self.elements))
        self._inv = {g: next(h for h in self.elements if self.table[g, h] == self.e) for g in self.elements}

    def _validate(self):
        els = self.elements
        if len(set(els)) != len(els):
            raise GroupLoadError("duplicate element names")
        for g, h in itertools.product(els, els):
            if (g, h) not in self.table or self.table[g, h] not in els:
                raise GroupLoadError(f"product {g}*{h} missing or outside the set")
        for g, h, k in itertools.product(els, els, els):
            if self.table[self.table[g, h], k] != self.table[g, self.table[h, k]]:
                raise GroupLoadError(f"not associative at ({g}, {h}, {k})")
        units = [u for u in els if all(self.table[u, h] == h and self.table[h, u] == h for h in els)]
        if not units:
            raise GroupLoadError("no identity element")
        u = units[0]
        for g in els:
            if not any(self.table[g, h] == u and self.table[h, g] == u for h in els):
                raise GroupLoadError(f"{g} has no inverse")

    def mul(self, g: str, h: str) -> str:
        return self.table[g, h]

    def inv(self, g: str) -> str:
        return self._inv[g]

    def conj(self, p: str, q: str) -> str:
        """p q p^-1"""
        return self.mul(self.mul(p, q), self.inv(p))

    def is_abelian(self) -> bool:
        return all(self.mul(g, h) == self.mul(h, g) for g in self.elements for h in self.elements)

    def order_key(self, g: str):
        return self.index[g]

    def __len__(self):
        return len(self.elements)

    def __repr__(self):
        return f"FiniteGroup({self.name}, order {len(self)})"


def cyclic_group(n: int) -> FiniteGroup:
    if n < 1:
        raise GroupLoadError("cyclic group order must be positive")
    els = [str(i) for i in range(n)]
    table = {(str(i), str(j)): str((i + j) % n) for i in range(n) for j in range(n)}
    return FiniteGroup(f"Z{n}", els, table)


def symmetric_group_3() -> FiniteGroup:
    perms = sorted(itertools.permutations((1, 2, 3)))
    label = lambda p: "".join(map(str, p))
    table = {}
    for s in perms:
        for t in perms:
            st = tuple(s[t[i] - 1] for i in range(3))
            table[label(s), label(t)] = label(st)
    return FiniteGroup("S3", [label(p) for p in perms], table)


def trivial_group() -> FiniteGroup:
    return FiniteGroup("1", ["e"], {("e", "e"): "e"})


def parse_cayley_table(text: str, name: str = "G") -> FiniteGroup:
    """First line: n followed by the n element names; then n rows of products."""
    lines = [ln.split() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not lines:
        raise GroupLoadError("empty group file")
    head = lines[0]
    try:
        n = int(head[0])
    except ValueError as exc:
        raise GroupLoadError(f"first token must be the order, got {head[0]!r}") from exc
    els = head[1:]
    if len(els) != n:
        raise GroupLoadError(f"expected {n} element names, got {len(els)}")
    rows = lines[1:]
    if len(rows) != n or any(len(r) != n for r in rows):
        raise GroupLoadError(f"expected {n} rows of {n} entries")
    table = {(g, h): rows[i][j] for i, g in enumerate(els) for j, h in enumerate(els)}
    return FiniteGroup(name, els, table)


def load_group(spec: str) -> FiniteGroup:
    """Builtin name (Zn, S3) or path to a Cayley-table file."""
    if spec == "S3":
        return symmetric_group_3()
    if spec.startswith("Z") and spec[1:].isdigit():
        return cyclic_group(int(spec[1:]))
    path = Path(spec)
    if path.exists():
        return parse_cayley_table(path.read_text(), name=path.stem)
    raise GroupLoadError(f"unknown group {spec!r} (builtins: Zn, S3, or a Cayley-table file)")


CORRUPTIONS_FUNCTIONS = {
    "antipode-sign": "S(d[p]) = -d[p^-1] for p != e",
    "crossing-inverse": "pi_p(d[q]) = d[p^-1 q p] instead of d[p q p^-1]",
}


class FunctionAlgebra(FiniteCoproductInstance):
    """K(G): basis delta_p, pointwise product, (Delta f)(s,t) = f(st)."""

    name = "group-functions"
    unital = True

    def __init__(self, group: FiniteGroup, corrupt: str | None = None):
        if corrupt is not None and corrupt not in CORRUPTIONS_FUNCTIONS:
            raise ValueError(f"unknown corruption {corrupt!r} for {self.name}")
        super().__init__(Basis(f"K({group.name})", lambda k: f"d[{k}]", group.order_key))
        self.group = group
        self.corrupt = corrupt

    def one(self) -> Elem:
        return Elem._raw(self.basis, {g: 1 for g in self.group.elements})

    def mul_keys(self, k1, k2) -> Elem:
        return self.elem(k1) if k1 == k2 else self.zero()

    def coproduct_key(self, k) -> Elem:
        G = self.group
        terms = {}
        for t in G.elements:
            s = G.mul(k, G.inv(t))
            terms[(s, t)] = 1
        return Elem._raw(self.tbasis(2), terms)

    def counit_key(self, k):
        return 1 if k == self.group.e else 0

    def antipode_key(self, k) -> Elem:
        c = -1 if self.corrupt == "antipode-sign" and k != self.group.e else 1
        return self.elem(self.group.inv(k), c)

    def antipode_inv_key(self, k) -> Elem:
        c = -1 if self.corrupt == "antipode-sign" and k != self.group.e else 1
        return self.elem(self.group.inv(k), c)

    def window(self, radius: int) -> list:
        return list(self.group.elements)

    def degree(self, k) -> str:
        return k

    def conjugation(self, p: str, x: Elem) -> Elem:
        """The crossing pi_p(delta_q) = delta_{p q p^-1}."""
        G = self.group
        if self.corrupt == "crossing-inverse":
            return Elem._raw(self.basis, {G.conj(G.inv(p), k): c for k, c in x.items()})
        return Elem._raw(self.basis, {G.conj(p, k): c for k, c in x.items()})


class GroupAlgebra(FiniteCoproductInstance):
    """k[G]: basis u_p, u_p u_q = u_pq, Delta(u_p) = u_p (x) u_p."""

    name = "group-algebra"
    unital = True

    def __init__(self, group: FiniteGroup, corrupt: str | None = None):
        if corrupt is not None and corrupt != "antipode-sign":
            raise ValueError(f"unknown corruption {corrupt!r} for {self.name}")
        super().__init__(Basis(f"k[{group.name}]", lambda k: f"u[{k}]", group.order_key))
        self.group = group
        self.corrupt = corrupt

    def one(self) -> Elem:
        return self.elem(self.group.e)

    def mul_keys(self, k1, k2) -> Elem:
        return self.elem(self.group.mul(k1, k2))

    def coproduct_key(self, k) -> Elem:
        return Elem._raw(self.tbasis(2), {(k, k): 1})

    def counit_key(self, k):
        return 1

    def antipode_key(self, k) -> Elem:
        return self.elem(self.group.inv(k), -1 if self.corrupt == "antipode-sign" and k != self.group.e else 1)

    def antipode_inv_key(self, k) -> Elem:
        return self.elem(self.group.inv(k), -1 if self.corrupt == "antipode-sign" and k != self.group.e else 1)

    def window(self, radius: int) -> list:
        return list(self.group.elements)

    def degree(self, k) -> str:
        return k

    def conjugation(self, p: str, x: Elem) -> Elem:
        """pi'_p(u_r) = u_{p r p^-1}, characterised by <pi'_p(a), b> = <a, pi_{p^-1}(b)>."""
        G = self.group
        return Elem._raw(self.basis, {G.conj(p, k): c for k, c in x.items()})


class GroupPairing:
    """<u_p, delta_q> = [p = q] between k[G] and K(G)."""

    def __init__(self, group: FiniteGroup, functions: FunctionAlgebra | None = None,
                 algebra: GroupAlgebra | None = None):
        self.group = group
        self.functions = functions or FunctionAlgebra(group)
        self.algebra = algebra or GroupAlgebra(group)

    def pair(self, a: Elem, b: Elem):
        return sum((c * b.coeff(k) for k, c in a.items()), 0)

    def pair_keys(self, ak, bk):
        return 1 if ak == bk else 0

    def hit(self, akey, c: Elem, d: Elem) -> Elem:
        """sum <a_(1), c> a_(2) <a_(3), d> for a = u_akey: grouplike, so a scalar multiple."""
        return self.algebra.elem(akey, c.coeff(akey) * d.coeff(akey))


def canonical_w(pairing: GroupPairing, drop: str | None = None) -> TwoLegMultiplier:
    """W = sum_p delta_p (x) u_p in K(G) (x) k[G].

    ``drop`` removes the term of one group element (a negative control).
    """
    K, kG = pairing.functions, pairing.algebra

    def half(k):
        if k == drop:
            return []
        return [(K.elem(k), multiplier_from_elem(kG, kG.elem(k)))]

    return TwoLegMultiplier(K, half, half, label="W", inst2=kG)


def canonical_w_inverse(pairing: GroupPairing) -> TwoLegMultiplier:
    """W^-1 = (S (x) id)(W) = sum_p delta_{p^-1} (x) u_p."""
    K, kG, G = pairing.functions, pairing.algebra, pairing.group

    def half(k):
        return [(K.elem(k), multiplier_from_elem(kG, kG.elem(G.inv(k))))]

    return TwoLegMultiplier(K, half, half, label="W^-1", inst2=kG)


def w_as_tensor(pairing: GroupPairing) -> Elem:
    from ..linalg import tensor_basis

    tb = tensor_basis(pairing.functions.basis, pairing.algebra.basis)
    return Elem._raw(tb, {(p, p): 1 for p in pairing.group.elements})
