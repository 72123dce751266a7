"""Exact sparse linear algebra over the rationals.

Elements are finite linear combinations of basis keys.  Keys are hashable
tuples (or strings) owned by a ``Basis``, which knows how to print and order
them.  Tensors are elements whose basis is a tuple of bases and whose keys are
tuples of leg keys.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Callable, Iterable, Mapping


def scalar(value) -> int | Fraction:
    """Normalise ``value`` to an exact rational; integral values become ints."""
    if isinstance(value, bool):
        return int(value)
    if isinstance(value, int):
        return value
    if isinstance(value, Fraction):
        return value.numerator if value.denominator == 1 else value
    if isinstance(value, str):
        return scalar(Fraction(value))
    if isinstance(value, float):
        raise TypeError("floats are not exact scalars")
    return scalar(Fraction(value))


def sign(k: int) -> int:
    """(-1)**k for any integer k."""
    return -1 if k % 2 else 1


def format_scalar(c) -> str:
    c = scalar(c)
    if isinstance(c, Fraction):
        return f"{c.numerator}/{c.denominator}"
    return str(c)


class Basis:
    """A named basis: printing and canonical ordering of keys."""

    def __init__(self, name: str, fmt: Callable[[object], str], order: Callable[[object], object] | None = None):
        self.name = name
        self.fmt = fmt
        self.order = order or (lambda k: k)

    def __repr__(self):
        return f"Basis({self.name})"


class TensorBasis(Basis):
    def __init__(self, legs: tuple[Basis, ...]):
        self.legs = tuple(legs)
        super().__init__(
            " (x) ".join(b.name for b in self.legs),
            lambda key: " (x) ".join(b.fmt(k) for b, k in zip(self.legs, key)),
            lambda key: tuple(b.order(k) for b, k in zip(self.legs, key)),
        )

    def __eq__(self, other):
        return isinstance(other, TensorBasis) and self.legs == other.legs

    def __hash__(self):
        return hash(self.legs)


class Elem:
    """A finite sparse linear combination ``key -> nonzero coefficient``."""

    __slots__ = ("basis", "terms")

    def __init__(self, basis: Basis, terms: Mapping | Iterable | None = None):
        self.basis = basis
        out: dict = {}
        if terms:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for k, c in items:
                if c:
                    out[k] = out.get(k, 0) + c
        self.terms = {k: scalar(c) for k, c in out.items() if c}

    @classmethod
    def _raw(cls, basis, terms: dict):
        e = cls.__new__(cls)
        e.basis = basis
        e.terms = terms
        return e

    @classmethod
    def zero(cls, basis):
        return cls._raw(basis, {})

    @classmethod
    def of(cls, basis, key, coeff=1):
        return cls(basis, {key: coeff})

    # -- container protocol -------------------------------------------------
    def items(self):
        return self.terms.items()

    def keys(self):
        return self.terms.keys()

    def coeff(self, key):
        return self.terms.get(key, 0)

    def __iter__(self):
        return iter(self.terms.items())

    def __len__(self):
        return len(self.terms)

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self):
        return not self.terms

    # -- vector space -------------------------------------------------------
    def _check(self, other):
        if not isinstance(other, Elem):
            raise TypeError(f"cannot combine Elem with {type(other).__name__}")
        if other.basis is not self.basis and other.basis != self.basis and self.terms and other.terms:
            raise ValueError(f"basis mismatch: {self.basis.name} vs {other.basis.name}")

    def __add__(self, other):
        if isinstance(other, int) and other == 0:
            return self
        self._check(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            v = out.get(k, 0) + c
            if v:
                out[k] = v
            else:
                out.pop(k, None)
        return type(self)._raw(self.basis if self.terms else other.basis, out)

    __radd__ = __add__

    def __neg__(self):
        return type(self)._raw(self.basis, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        c = scalar(c)
        if not c:
            return type(self)._raw(self.basis, {})
        return type(self)._raw(self.basis, {k: scalar(v * c) for k, v in self.terms.items()})

    def __mul__(self, c):
        if isinstance(c, Elem):
            raise TypeError("use an instance to multiply elements")
        return self.scale(c)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return not self.terms
        if not isinstance(other, Elem):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def sorted_items(self):
        return sorted(self.terms.items(), key=lambda kv: self.basis.order(kv[0]))

    def __str__(self):
        return serialize(self)

    def __repr__(self):
        return f"<{self.basis.name}: {serialize(self)}>"

    # -- linear maps --------------------------------------------------------
    def map(self, fn: Callable[[object], "Elem"], basis: Basis | None = None) -> "Elem":
        """Extend a key-level map ``key -> Elem`` linearly."""
        return linear(fn, self, basis)

    def support_max(self, index: Callable[[object], int]) -> int:
        return max((abs(index(k)) for k in self.terms), default=0)


Tensor = Elem


def linear(fn: Callable[[object], Elem], x: Elem, basis: Basis | None = None) -> Elem:
    """Linear extension of ``fn`` (basis key -> Elem) evaluated at ``x``."""
    out: dict = {}
    out_basis = basis
    for k, c in x.terms.items():
        y = fn(k)
        if out_basis is None:
            out_basis = y.basis
        for k2, c2 in y.terms.items():
            v = out.get(k2, 0) + c * c2
            if v:
                out[k2] = v
            else:
                out.pop(k2, None)
    if out_basis is None:
        out_basis = x.basis
    return Elem._raw(out_basis, {k: scalar(v) for k, v in out.items()})


def linear_functional(fn: Callable[[object], object], x: Elem):
    return scalar(sum((c * fn(k) for k, c in x.terms.items()), 0))


def bilinear(fn: Callable[[object, object], Elem], x: Elem, y: Elem, basis: Basis | None = None) -> Elem:
    out: dict = {}
    out_basis = basis
    for k1, c1 in x.terms.items():
        for k2, c2 in y.terms.items():
            z = fn(k1, k2)
            if out_basis is None:
                out_basis = z.basis
            c = c1 * c2
            for k, c3 in z.terms.items():
                v = out.get(k, 0) + c * c3
                if v:
                    out[k] = v
                else:
                    out.pop(k, None)
    return Elem._raw(out_basis or x.basis, {k: scalar(v) for k, v in out.items()})


def accumulate(basis: Basis, pieces: Iterable[tuple[object, Elem]]) -> Elem:
    """Sum of ``c * e`` over pairs ``(c, e)``."""
    out: dict = {}
    for c, e in pieces:
        if not c:
            continue
        for k, v in e.terms.items():
            w = out.get(k, 0) + c * v
            if w:
                out[k] = w
            else:
                out.pop(k, None)
    return Elem._raw(basis, {k: scalar(v) for k, v in out.items()})


# -- tensors ----------------------------------------------------------------

def tensor_basis(*bases: Basis) -> TensorBasis:
    legs: list[Basis] = []
    for b in bases:
        legs.extend(b.legs if isinstance(b, TensorBasis) else (b,))
    return TensorBasis(tuple(legs))


def legs_of(basis: Basis) -> tuple[Basis, ...]:
    return basis.legs if isinstance(basis, TensorBasis) else (basis,)


def _as_key_tuple(basis: Basis, key):
    return key if isinstance(basis, TensorBasis) else (key,)


def tensor(*elems: Elem) -> Elem:
    """Tensor product of elements; tensors are flattened."""
    basis = tensor_basis(*(e.basis for e in elems))
    acc = {(): 1}
    for e in elems:
        nxt: dict = {}
        for k0, c0 in acc.items():
            for k, c in e.terms.items():
                nxt[k0 + _as_key_tuple(e.basis, k)] = c0 * c
        acc = nxt
    return Elem._raw(basis, {k: scalar(c) for k, c in acc.items() if c})


def simple_tensor(basis: TensorBasis, key: tuple, coeff=1) -> Elem:
    return Elem._raw(basis, {key: scalar(coeff)} if coeff else {})


def arity(t: Elem) -> int:
    return len(legs_of(t.basis))


def leg(t: Elem, i: int, key: tuple) -> Elem:
    """The single-key element sitting in leg ``i`` of ``key``."""
    return Elem._raw(legs_of(t.basis)[i], {key[i]: 1})


def apply_to_leg(t: Elem, i: int, fn: Callable[[Elem], object]) -> Elem:
    """Apply a linear map to leg ``i``.

    If ``fn`` returns an ``Elem`` the leg is replaced (the result may live in a
    different basis); if it returns a scalar the leg is contracted away.
    """
    legs = legs_of(t.basis)
    out: dict = {}
    new_basis = None
    contracted = False
    for key, c in t.terms.items():
        image = fn(Elem._raw(legs[i], {key[i]: 1}))
        if isinstance(image, Elem):
            if new_basis is None:
                new_basis = image.basis
            for k2, c2 in image.terms.items():
                nk = key[:i] + (k2,) + key[i + 1:]
                v = out.get(nk, 0) + c * c2
                if v:
                    out[nk] = v
                else:
                    out.pop(nk, None)
        else:
            contracted = True
            image = scalar(image)
            if image:
                nk = key[:i] + key[i + 1:]
                v = out.get(nk, 0) + c * image
                if v:
                    out[nk] = v
                else:
                    out.pop(nk, None)
    if contracted:
        rest = legs[:i] + legs[i + 1:]
        basis = rest[0] if len(rest) == 1 else TensorBasis(rest)
        if len(rest) == 1:
            out = {k[0]: v for k, v in out.items()}
        return Elem._raw(basis, {k: scalar(v) for k, v in out.items()})
    leg_basis = new_basis or legs[i]
    if isinstance(leg_basis, TensorBasis):
        # the leg became a tensor: splice its legs in place
        basis = TensorBasis(legs[:i] + leg_basis.legs + legs[i + 1:])
        out = {k[:i] + k[i] + k[i + 1:]: v for k, v in out.items()}
        return Elem._raw(basis, {k: scalar(v) for k, v in out.items()})
    basis = TensorBasis(legs[:i] + (leg_basis,) + legs[i + 1:])
    return Elem._raw(basis, {k: scalar(v) for k, v in out.items()})


def apply_to_legs(t: Elem, idx: tuple[int, ...], fn: Callable[[Elem], Elem]) -> Elem:
    """Apply a linear map on the sub-tensor formed by legs ``idx`` (in that order).

    ``fn`` receives a simple tensor over those legs and must return a tensor of
    the same arity; the legs are written back to the same positions.
    """
    legs = legs_of(t.basis)
    sub_basis = legs[idx[0]] if len(idx) == 1 else TensorBasis(tuple(legs[i] for i in idx))
    rest = [i for i in range(len(legs)) if i not in idx]
    out: dict = {}
    new_legs = list(legs)
    for key, c in t.terms.items():
        subkey = key[idx[0]] if len(idx) == 1 else tuple(key[i] for i in idx)
        image = fn(Elem._raw(sub_basis, {subkey: 1}))
        img_legs = legs_of(image.basis)
        for j, i in enumerate(idx):
            new_legs[i] = img_legs[j]
        for k2, c2 in image.terms.items():
            k2 = (k2,) if len(idx) == 1 else k2
            nk = [None] * len(legs)
            for j, i in enumerate(idx):
                nk[i] = k2[j]
            for i in rest:
                nk[i] = key[i]
            nk = tuple(nk)
            v = out.get(nk, 0) + c * c2
            if v:
                out[nk] = v
            else:
                out.pop(nk, None)
    return Elem._raw(TensorBasis(tuple(new_legs)), {k: scalar(v) for k, v in out.items()})


def permute_legs(t: Elem, perm: tuple[int, ...]) -> Elem:
    """Leg ``j`` of the result is leg ``perm[j]`` of ``t``."""
    legs = legs_of(t.basis)
    basis = TensorBasis(tuple(legs[p] for p in perm))
    return Elem._raw(basis, {tuple(k[p] for p in perm): c for k, c in t.terms.items()})


def flip(t: Elem) -> Elem:
    return permute_legs(t, (1, 0))


def split_terms(t: Elem):
    """Iterate ``(coeff, [leg elements])`` over the terms of a tensor."""
    legs = legs_of(t.basis)
    for key, c in t.terms.items():
        yield c, [Elem._raw(b, {k: 1}) for b, k in zip(legs, key)]


# -- canonical text ----------------------------------------------------------

def serialize(x) -> str:
    """Canonical text: terms ordered by basis order, exact coefficients."""
    if not isinstance(x, Elem):
        return format_scalar(x)
    if not x.terms:
        return "0"
    parts = []
    for i, (k, c) in enumerate(x.sorted_items()):
        body = x.basis.fmt(k)
        if i == 0:
            parts.append(f"{format_scalar(c)}*{body}")
        elif c < 0:
            parts.append(f" - {format_scalar(-c)}*{body}")
        else:
            parts.append(f" + {format_scalar(c)}*{body}")
    return "".join(parts)
