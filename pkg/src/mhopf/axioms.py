"""Multiplier Hopf algebra axioms, checked in covered form on samples."""
from __future__ import annotations

from typing import Iterable

from .core import MhaInstance, coproduct_op
from .linalg import apply_to_leg, flip
from .report import Record, compare, verdict


def _e(inst, k):
    return inst.elem(k)


def check_associativity(inst: MhaInstance, triples: Iterable) -> list[Record]:
    out = []
    for a, b, c in triples:
        x, y, z = _e(inst, a), _e(inst, b), _e(inst, c)
        out.append(compare("associativity", inst.name, f"{x} | {y} | {z}",
                           inst.multiply(inst.multiply(x, y), z), inst.multiply(x, inst.multiply(y, z))))
    return out


def check_coassociativity(inst: MhaInstance, triples: Iterable) -> list[Record]:
    """(x(x)1(x)1)(Delta(x)id)(Delta(y)(1(x)z)) = (id(x)Delta)((x(x)1)Delta(y))(1(x)1(x)z)."""
    out = []
    for a, b, c in triples:
        x, y, z = _e(inst, a), _e(inst, b), _e(inst, c)
        lhs = apply_to_leg(inst.cover(y, r2=z), 0, lambda e: inst.cover(e, l1=x))
        rhs = apply_to_leg(inst.cover(y, l1=x), 1, lambda e: inst.cover(e, r2=z))
        out.append(compare("coassociativity", inst.name, f"x={x}, y={y}, z={z}", lhs, rhs))
    return out


def check_counit(inst: MhaInstance, pairs: Iterable) -> list[Record]:
    out = []
    for a, b in pairs:
        x, y = _e(inst, a), _e(inst, b)
        xy = inst.multiply(x, y)
        lhs = apply_to_leg(inst.cover(x, r2=y), 0, inst.counit)
        out.append(compare("counit-left", inst.name, f"x={x}, y={y}", lhs, xy))
        rhs = apply_to_leg(inst.cover(y, l1=x), 1, inst.counit)
        out.append(compare("counit-right", inst.name, f"x={x}, y={y}", rhs, xy))
    return out


def _mult_out(inst, t):
    from .core import multiply_out
    return multiply_out(inst, t)


def check_antipode(inst: MhaInstance, pairs: Iterable) -> list[Record]:
    """m(S(x)id)(Delta(x)(1(x)y)) = eps(x)y and m(id(x)S)((x(x)1)Delta(y)) = eps(y)x."""
    out = []
    for a, b in pairs:
        x, y = _e(inst, a), _e(inst, b)
        lhs = _mult_out(inst, apply_to_leg(inst.cover(x, r2=y), 0, inst.antipode))
        out.append(compare("antipode-left", inst.name, f"x={x}, y={y}", lhs, y.scale(inst.counit(x))))
        rhs = _mult_out(inst, apply_to_leg(inst.cover(y, l1=x), 1, inst.antipode))
        out.append(compare("antipode-right", inst.name, f"x={x}, y={y}", rhs, x.scale(inst.counit(y))))
    return out


def check_antipode_structure(inst: MhaInstance, keys: Iterable, pairs: Iterable) -> list[Record]:
    """S^-1 S = id, S anti-multiplicative and anti-comultiplicative (covered)."""
    out = []
    for k in keys:
        x = _e(inst, k)
        out.append(compare("antipode-inverse", inst.name, x, inst.antipode_inv(inst.antipode(x)), x))
        out.append(compare("antipode-inverse", inst.name, x, inst.antipode(inst.antipode_inv(x)), x))
    for a, b in pairs:
        x, y = _e(inst, a), _e(inst, b)
        out.append(compare("antipode-anti-multiplicative", inst.name, f"x={x}, y={y}",
                           inst.antipode(inst.multiply(x, y)),
                           inst.multiply(inst.antipode(y), inst.antipode(x))))
        sx, sy = inst.antipode(x), inst.antipode(y)
        lhs = inst.cover(sx, r2=sy)
        rhs = flip(apply_to_leg(apply_to_leg(inst.cover(x, l1=y), 0, inst.antipode), 1, inst.antipode))
        out.append(compare("antipode-anti-comultiplicative", inst.name, f"x={x}, y={y}", lhs, rhs))
    return out


def check_coproduct_multiplicative(inst: MhaInstance, triples: Iterable) -> list[Record]:
    """Delta(xy)(1(x)z) = Delta(x)(Delta(y)(1(x)z)); eps(xy) = eps(x)eps(y)."""
    out = []
    for a, b, c in triples:
        x, y, z = _e(inst, a), _e(inst, b), _e(inst, c)
        lhs = inst.cover(inst.multiply(x, y), r2=z)
        rhs = coproduct_op(inst, x).left(inst.cover(y, r2=z))
        out.append(compare("coproduct-multiplicative", inst.name, f"x={x}, y={y}, z={z}", lhs, rhs))
        out.append(compare("counit-multiplicative", inst.name, f"x={x}, y={y}",
                           inst.counit(inst.multiply(x, y)), inst.counit(x) * inst.counit(y)))
    return out


def check_cover_consistency(inst: MhaInstance, triples: Iterable) -> list[Record]:
    """(x(x)1)Delta(y)(1(x)z) computed from the left cover and from the right cover."""
    out = []
    for a, b, c in triples:
        x, y, z = _e(inst, a), _e(inst, b), _e(inst, c)
        lhs = apply_to_leg(inst.cover(y, l1=x), 1, lambda e: inst.multiply(e, z))
        rhs = apply_to_leg(inst.cover(y, r2=z), 0, lambda e: inst.multiply(x, e))
        out.append(compare("cover-consistency", inst.name, f"x={x}, y={y}, z={z}", lhs, rhs))
        lhs = apply_to_leg(inst.cover(y, l2=x), 0, lambda e: inst.multiply(e, z))
        rhs = apply_to_leg(inst.cover(y, r1=z), 1, lambda e: inst.multiply(x, e))
        out.append(compare("cover-consistency-2", inst.name, f"x={x}, y={y}, z={z}", lhs, rhs))
    return out


def check_nondegeneracy(inst: MhaInstance, keys: list, partners: list) -> list[Record]:
    out = []
    for k in keys:
        x = _e(inst, k)
        left = any(inst.multiply(x, _e(inst, j)) for j in partners)
        right = any(inst.multiply(_e(inst, j), x) for j in partners)
        out.append(verdict("nondegenerate", inst.name, x, left and right,
                           f"x*y != 0 for some y: {left}", f"y*x != 0 for some y: {right}"))
    return out


def check_mha_axioms(inst: MhaInstance, keys: list, pairs: list, triples: list,
                     partners: list | None = None) -> list[Record]:
    out = []
    out += check_associativity(inst, triples)
    out += check_coassociativity(inst, triples)
    out += check_counit(inst, pairs)
    out += check_antipode(inst, pairs)
    out += check_antipode_structure(inst, keys, pairs)
    out += check_coproduct_multiplicative(inst, triples)
    out += check_cover_consistency(inst, triples)
    out += check_nondegeneracy(inst, keys, keys if partners is None else partners)
    return out
