"""Instance registry, seeded sampling, named suites and the oracle gate."""
from __future__ import annotations

import itertools
import random
import re
from dataclasses import dataclass, field
from typing import Callable

from .axioms import check_mha_axioms
from .cograded import GradedCrossing, crossing_violations, grading_violations
from .core import identity_multiplier
from .double import PairingBundle, canonical_r, crossed_double, plain_double
from .fixtures import OreDoubleFixtures
from .instances.group import (
    CORRUPTIONS_FUNCTIONS,
    FunctionAlgebra,
    GroupAlgebra,
    GroupPairing,
    cyclic_group,
    load_group,
)
from .instances.ore import (
    CORRUPTIONS_DUAL,
    CORRUPTIONS_ORE,
    OreAlgebra,
    OreDual,
    OrePairing,
    check_cointegral_lemmas,
    check_modular_data,
    ore_dual_r,
)
from .oracle import (
    delta_partial_sum_oracle,
    double_r_partial_sum_oracle,
    dual_antipode_oracle,
    dual_coproduct_oracle,
    dual_product_oracle,
    group_function_oracle,
    group_twist_oracle,
    ore_table_oracles,
    r_partial_sum_oracle,
)
from .piqt import (
    check_grouplike_tilde,
    check_intertwining_lemmas,
    check_matches_plain,
    check_theorem_w,
    check_u_tilde,
    crossed_qt,
    trivial_crossing_reduction,
    u_tilde_closed_form,
)
from .quasitri import (
    QTStructure,
    check_inner_s2,
    check_inner_s4,
    check_pi_yang_baxter,
    check_modular_formula,
    check_qt_axioms,
    check_r_self_inverse,
    check_yang_baxter,
    multiplier_equal_records,
)
from .report import FAIL, PASS, Record, SuiteResult, compare, verdict

ORACLE_RADIUS = 8
FINITE_TRIPLES = 600


class ConfigError(ValueError):
    pass


@dataclass
class Config:
    instance: str
    suites: list = field(default_factory=list)
    radius: int = 8
    group: str = "S3"
    seed: int = 0
    corrupt: str | None = None
    oracle_gate: bool = True

    def as_dict(self) -> dict:
        return {"instance": self.instance, "suites": list(self.suites), "radius": self.radius,
                "group": self.group if INSTANCES[self.instance].finite else None, "seed": self.seed,
                "corrupt": self.corrupt, "oracle_gate": self.oracle_gate}


@dataclass
class Setup:
    """Everything a suite needs for one instance."""
    name: str
    inst: object
    qt: QTStructure | None = None
    extra: dict = field(default_factory=dict)


# -- sampling ------------------------------------------------------------------------------

class Sampler:
    """Seeded samples over a window of the given radius plus the ring at radius + 1.

    Finite instances use their whole basis and every pair.  Infinite ones keep every key of
    window(1) and draw the rest at random; pairs and triples are drawn from the
    keys with the same generator, so equal seeds give equal samples.
    """

    def __init__(self, inst, radius: int, seed: int, finite: bool, max_keys: int = 80,
                 max_pairs: int = 400, max_triples: int = 120):
        rng = random.Random(seed)
        if finite:
            keys = list(inst.window(radius))
        else:
            core = list(inst.window(1))
            window = [k for k in inst.window(radius) if k not in set(core)]
            inner = set(inst.window(radius))
            ring = [k for k in inst.window(radius + 1) if k not in inner]
            n_ring = min(len(ring), max(2, max_keys // 8))
            rest = rng.sample(window, min(len(window), max(0, max_keys - len(core) - n_ring)))
            keys = core + sorted(rest, key=inst.basis.order) + sorted(rng.sample(ring, n_ring), key=inst.basis.order)
        self.keys = keys
        self.radius = radius
        if finite:
            # the whole basis for pairs; triples too when there are few enough
            self.pairs = list(itertools.product(keys, keys))
            n = len(keys) ** 3
            self.triples = (list(itertools.product(keys, keys, keys)) if n <= 4 * FINITE_TRIPLES else
                            [tuple(rng.choice(keys) for _ in range(3)) for _ in range(FINITE_TRIPLES)])
        else:
            self.pairs = [tuple(rng.choice(keys) for _ in range(2)) for _ in range(max_pairs)]
            self.triples = [tuple(rng.choice(keys) for _ in range(3)) for _ in range(max_triples)]


# -- instance builders ---------------------------------------------------------------------

def _ore(cfg: Config) -> Setup:
    A = OreAlgebra(corrupt=cfg.corrupt)
    Ah = OreDual()
    return Setup("ore", A, extra={"ore": A, "dual": Ah, "pairing": OrePairing(A, Ah)})


_DUAL_EXTRA = {"r-sign": "R(w[k,l] (x) 1) = w[k,l] (x) delta^k instead of delta^(k+l)",
               "modular-exponent": "delta_hat^0 in place of delta_hat^-1 in the modular formula for u S(u)^-1",
               "wrong-h": "w[0,1] in place of the cointegral w[-1,1]"}


def _ore_dual(cfg: Config) -> Setup:
    c = cfg.corrupt
    Ah = OreDual(corrupt=c if c in CORRUPTIONS_DUAL else None)
    A = OreAlgebra()
    R = ore_dual_r(Ah, corrupt="r-sign" if c == "r-sign" else None)
    qt = QTStructure(Ah, R, name="ore-dual")
    return Setup("ore-dual", Ah, qt, extra={"ore": A, "dual": Ah, "pairing": OrePairing(A, Ah)})


_DOUBLE_EXTRA = {"r-sign": "R_D = sum (-1)^k w[p,k] (x) a^p b^k (sign flipped on the b terms)",
                 "dual-product-sign": "the double built over the dual with the product-sign corruption",
                 "ore-product-sign": "the double built over A with the product-sign corruption",
                 "ore-antipode-sign": "the double built over A with the antipode-sign corruption"}


def _ore_double(cfg: Config) -> Setup:
    c = cfg.corrupt
    A = OreAlgebra(corrupt=c[4:] if c in ("ore-product-sign", "ore-antipode-sign") else None)
    Ah = OreDual(corrupt="product-sign" if c == "dual-product-sign" else None)
    P = OrePairing(A, Ah)
    D = plain_double(PairingBundle(Ah, A, P.hit, name="ore"), "ore-double")
    coeff = (lambda i: -1 if i[1] == 1 else 1) if c == "r-sign" else None
    qt = QTStructure(D, canonical_r(D, lambda i: i, coeff=coeff), name="ore-double")
    return Setup("ore-double", D, qt, extra={"ore": A, "dual": Ah, "pairing": P, "fixtures": OreDoubleFixtures(D)})


def _group_parts(cfg: Config, corrupt_k=None):
    G = load_group(cfg.group)
    K = FunctionAlgebra(G, corrupt=corrupt_k)
    kG = GroupAlgebra(G)
    return G, K, kG


def _group_functions(cfg: Config) -> Setup:
    G, K, kG = _group_parts(cfg, cfg.corrupt)
    gc = GradedCrossing(K, G, K.degree, K.conjugation, name="conjugation")
    return Setup("group-functions", K, extra={"group": G, "crossing": gc, "algebra": kG})


def _group_algebra(cfg: Config) -> Setup:
    G = load_group(cfg.group)
    kG = GroupAlgebra(G, corrupt=cfg.corrupt)
    return Setup("group-algebra", kG, extra={"group": G, "functions": FunctionAlgebra(G)})


_GROUP_DOUBLE_EXTRA = {
    "w-drop": "W with the term (1 >< d[q]) (x) (u[q] >< 1) removed for the second element q",
    "w-sign": "the W term (1 >< d[q]) (x) (u[q] >< 1) negated for the second element q",
    "w-inverse-key": "W = sum (1 >< d[p]) (x) (u[p^-1] >< 1)",
    "wrong-index": "the intertwining lemmas conjugate by pi_q instead of pi_(q^-1)",
}


def build_group_double(G, corrupt: str | None = None, name: str = "group-double"):
    kc = corrupt if corrupt in CORRUPTIONS_FUNCTIONS else None
    K, kG = FunctionAlgebra(G, corrupt=kc), GroupAlgebra(G)
    gc = GradedCrossing(K, G, K.degree, K.conjugation, name="conjugation")
    pw = GroupPairing(G, K, kG)
    Dp = crossed_double(PairingBundle(kG, K, pw.hit, crossing=gc, x_action=kG.conjugation, name="grp"), name)
    key = G.inv if corrupt == "w-inverse-key" else (lambda b: b)
    drop = G.elements[1] if corrupt == "w-drop" else None
    flip = G.elements[1] if corrupt == "w-sign" else None
    qt = crossed_qt(Dp, key, drop=drop, name=name, flip=flip)
    return Dp, qt, K, kG, pw


def _group_double(cfg: Config) -> Setup:
    G = load_group(cfg.group)
    Dp, qt, K, kG, pw = build_group_double(G, cfg.corrupt)
    return Setup("group-double", Dp, qt, extra={"group": G, "functions": K, "algebra": kG, "pairing": pw})


# -- suites -----------------------------------------------------------------------------------

def _mha(setup: Setup, s: Sampler, cfg: Config) -> list[Record]:
    partners = setup.inst.window(s.radius + 2)
    out = check_mha_axioms(setup.inst, s.keys, s.pairs, s.triples, partners)
    if setup.name == "group-functions":
        gc = setup.extra["crossing"]
        viol = grading_violations(gc, s.keys) + crossing_violations(gc, s.keys, s.pairs)
        out.append(verdict("grading and crossing", setup.name, "all basis elements", not viol,
                           "; ".join(viol[:5]) or "no violations", ""))
    return out


def _qt_axioms(setup: Setup, s: Sampler, cfg: Config) -> list[Record]:
    out = check_qt_axioms(setup.qt, s.pairs, s.triples)
    if setup.name == "ore-dual":
        out += check_r_self_inverse(setup.qt, s.pairs)
    return out


def _yang_baxter(setup: Setup, s: Sampler, cfg: Config) -> list[Record]:
    return check_yang_baxter(setup.qt, s.triples)


def _inner_s2(setup: Setup, s: Sampler, cfg: Config) -> list[Record]:
    qt, inst = setup.qt, setup.inst
    out = check_inner_s2(qt, s.keys, s.pairs)
    if setup.name == "ore-dual":
        d = inst.modular_multiplier()
        out += multiplier_equal_records(qt.name, inst, qt.u(), d, s.keys, "fixture: u = delta_hat")
        out += multiplier_equal_records(qt.name, inst, qt.u_inv(), d, s.keys, "fixture: u^-1 = delta_hat")
    if setup.name == "ore-double":
        F = setup.extra["fixtures"]
        keys = _fixture_keys(setup, s)
        fx = F.all()
        computed = {"u": qt.u(), "u^-1": qt.u_inv(), "S(u)^-1": qt.s_u_inv()}
        for name, m in fx.items():
            base = name.split(" (")[0]
            if base in computed:
                out += multiplier_equal_records(qt.name, inst, computed[base], m, keys,
                                                f"fixture: computed {base} = {name}")
    return out


def _fixture_keys(setup: Setup, s: Sampler) -> list:
    # the closed-form series are summed term by term, so a smaller key set keeps this fast
    small = set(setup.inst.window(2))
    return [k for k in s.keys if k in small] or s.keys[:10]


def _inner_s4(setup: Setup, s: Sampler, cfg: Config) -> list[Record]:
    qt, inst = setup.qt, setup.inst
    out = check_inner_s4(qt, s.keys, s.pairs)
    if setup.name == "ore-dual":
        out += multiplier_equal_records(qt.name, inst, qt.g(), identity_multiplier(inst), s.keys, "fixture: u S(u)^-1 = 1")
    if setup.name == "ore-double":
        F = setup.extra["fixtures"]
        keys = _fixture_keys(setup, s)
        out += multiplier_equal_records(qt.name, inst, qt.g(), F.g_expanded(), keys, "fixture: g = u S(u)^-1 (expanded)")
        out += multiplier_equal_records(qt.name, inst, qt.g(), F.g(), keys,
                                        "fixture: g = sum (-1)^p w[p,0] a^-1 = delta_hat >< delta_A")
    return out


def _modular_formula(setup: Setup, s: Sampler, cfg: Config) -> list[Record]:
    qt, Ah, A, P = setup.qt, setup.inst, setup.extra["ore"], setup.extra["pairing"]
    exponent = 0 if cfg.corrupt == "modular-exponent" else -1
    chi = lambda f: P.pair(f, A.elem((1, 0)))  # pairing with delta_A^-1 = a
    rhs_label = "delta_hat^-1 (id (x) <., delta_A^-1>)(R)"
    out = check_modular_formula(qt, Ah.delta_power(exponent), chi, [(1, 0)], s.keys, rhs_label)
    rhs = Ah.delta_power(exponent) * qt.first_leg_of(chi, [(1, 0)])
    out += multiplier_equal_records(qt.name, Ah, rhs, identity_multiplier(Ah), s.keys, f"fixture: {rhs_label} = 1")
    return out


def _cointegral(setup: Setup, s: Sampler, cfg: Config) -> list[Record]:
    A, Ah, P = setup.extra["ore"], setup.extra["dual"], setup.extra["pairing"]
    h = Ah.elem((0, 1)) if cfg.corrupt == "wrong-h" else None
    # keys are integer pairs on both sides, so the sampled keys serve A and its dual alike
    other = (Ah if setup.name == "ore" else A).window(min(s.radius, 4))
    dkeys, okeys = (other, s.keys) if setup.name == "ore" else (s.keys, other)
    out = check_cointegral_lemmas(Ah, P, dkeys, h=h)
    out += check_modular_data(A, Ah, P, okeys, s.pairs, "ore")
    return out


def _relations(setup: Setup, s: Sampler, cfg: Config) -> list[Record]:
    F = setup.extra["fixtures"]
    out = []
    for p in range(-s.radius, s.radius + 1):
        for name, lhs, rhs in F.relations(p):
            out.append(compare(name, setup.name, f"p={p}", lhs, rhs))
    return out


def _pi_qt(setup: Setup, s: Sampler, cfg: Config) -> list[Record]:
    return check_qt_axioms(setup.qt, s.pairs, s.triples)


def _pi_yb(setup: Setup, s: Sampler, cfg: Config) -> list[Record]:
    return check_pi_yang_baxter(setup.qt, s.triples)


def _u_tilde(setup: Setup, s: Sampler, cfg: Config) -> list[Record]:
    qt, D = setup.qt, setup.inst
    out = check_u_tilde(qt, s.keys, s.pairs)
    out += multiplier_equal_records(qt.name, D, qt.u(), u_tilde_closed_form(D), s.keys,
                                    "fixture: u~ = sum u[p^-1] >< d[p]")
    return out


def _lemmas(setup: Setup, s: Sampler, cfg: Config) -> list[Record]:
    return check_intertwining_lemmas(setup.qt, s.pairs, wrong_index=cfg.corrupt == "wrong-index")


def _grouplike_tilde(setup: Setup, s: Sampler, cfg: Config) -> list[Record]:
    qt, D = setup.qt, setup.inst
    out = check_grouplike_tilde(qt, s.keys, s.pairs)
    out += multiplier_equal_records(qt.name, D, qt.g(), identity_multiplier(D), s.keys, "fixture: u~ S(u~)^-1 = 1")
    return out


def _theorem_w(setup: Setup, s: Sampler, cfg: Config) -> list[Record]:
    return check_theorem_w(setup.qt, s.pairs, s.triples)


def _reduction(setup: Setup, s: Sampler, cfg: Config) -> list[Record]:
    """Crossed machinery with a trivially acting crossing against the plain machinery."""
    G = setup.extra["group"]
    if not G.is_abelian():
        G = cyclic_group(len(G))
    Dp, qt_pi, _K, kG, pw = build_group_double(G, cfg.corrupt, name="group-double")
    _Dc, qt_clean, _, _, _ = build_group_double(G, None, name="group-double")
    qt_plain = QTStructure(Dp, qt_clean.R, name="group-double (plain)")
    plain = plain_double(PairingBundle(kG, _K, pw.hit, name="grp"), "group-double (plain)")
    keys = Dp.window(0)
    rng = random.Random(cfg.seed)
    pairs = list(itertools.product(keys, keys))
    triples = [tuple(rng.choice(keys) for _ in range(3)) for _ in range(len(s.triples))]
    out = check_matches_plain(Dp, plain, keys)
    out += trivial_crossing_reduction(qt_pi, qt_plain, keys, pairs, triples)
    return out


@dataclass
class SuiteSpec:
    name: str
    run: Callable
    description: str
    control: tuple  # (instance, corruption) that must make this suite fail


SUITES = {
    "mha-axioms": SuiteSpec("mha-axioms", _mha, "associativity, coassociativity, counit, antipode, covered coproduct",
                            ("ore", "product-sign")),
    "qt-axioms": SuiteSpec("qt-axioms", _qt_axioms, "R Delta = Delta^cop R, coproduct and counit legs, R^-1 formulas, (S(x)S)R = R",
                           ("ore-dual", "r-sign")),
    "yang-baxter": SuiteSpec("yang-baxter", _yang_baxter, "R12 R13 R23 = R23 R13 R12 on sampled triples",
                             ("ore-double", "r-sign")),
    "inner-s2": SuiteSpec("inner-s2", _inner_s2, "u, u^-1, S(u) and S^2 = conjugation by u",
                          ("ore-dual", "r-sign")),
    "inner-s4": SuiteSpec("inner-s4", _inner_s4, "g = u S(u)^-1 grouplike, S^4 = conjugation by g",
                          ("ore-double", "r-sign")),
    "prop-2-9": SuiteSpec("prop-2-9", _modular_formula, "u S(u)^-1 against the modular elements",
                          ("ore-dual", "modular-exponent")),
    "cointegral": SuiteSpec("cointegral", _cointegral, "cointegral identities and modular data",
                            ("ore-dual", "wrong-h")),
    "relations": SuiteSpec("relations", _relations, "generator commutation rules of the Ore double",
                           ("ore-double", "ore-antipode-sign")),
    "pi-qt-axioms": SuiteSpec("pi-qt-axioms", _pi_qt, "pi-quasitriangular axioms including pi-invariance of R",
                              ("group-double", "w-sign")),
    "pi-yang-baxter": SuiteSpec("pi-yang-baxter", _pi_yb, "both pi-Yang-Baxter forms on sampled triples",
                                ("group-double", "w-sign")),
    "u-tilde": SuiteSpec("u-tilde", _u_tilde, "u~ constructions, pi-invariance, S^2 forms, closed form",
                         ("group-double", "w-sign")),
    "lemma-3-7-9": SuiteSpec("lemma-3-7-9", _lemmas, "sigma(R) R intertwining identities",
                             ("group-double", "wrong-index")),
    "grouplike-tilde": SuiteSpec("grouplike-tilde", _grouplike_tilde, "g~ grouplike, S^4 = conjugation by g~, g~ = 1",
                                 ("group-double", "w-inverse-key")),
    "thm-3-11-1": SuiteSpec("thm-3-11-1", _theorem_w, "crossing invariance, coproduct legs and intertwining of W",
                            ("group-double", "w-inverse-key")),
    "reduction": SuiteSpec("reduction", _reduction, "trivially acting crossing reproduces the plain results",
                           ("group-double", "w-sign")),
}


@dataclass
class InstanceSpec:
    name: str
    build: Callable
    suites: list
    corruptions: dict
    oracles: Callable
    finite: bool = False
    description: str = ""


def _oracles_ore(setup: Setup, cfg: Config) -> list:
    return [ore_table_oracles(setup.extra["ore"], ORACLE_RADIUS)]


def _oracles_pair(setup: Setup) -> list:
    Ah = setup.extra["dual"]
    return [ore_table_oracles(setup.extra["ore"], ORACLE_RADIUS),
            dual_product_oracle(Ah, ORACLE_RADIUS), dual_coproduct_oracle(Ah, ORACLE_RADIUS),
            dual_antipode_oracle(Ah, ORACLE_RADIUS), delta_partial_sum_oracle(Ah, radius=ORACLE_RADIUS)]


def _oracles_dual(setup: Setup, cfg: Config) -> list:
    return _oracles_pair(setup) + [r_partial_sum_oracle(setup.inst, setup.qt.R)]


def _oracles_double(setup: Setup, cfg: Config) -> list:
    return _oracles_pair(setup) + [double_r_partial_sum_oracle(setup.inst, setup.qt.R)]


def _oracles_group(setup: Setup, cfg: Config) -> list:
    G = setup.extra["group"]
    K = setup.extra.get("functions") or setup.inst
    kG = setup.extra.get("algebra") or setup.inst
    out = [group_function_oracle(G, K, kG)]
    if setup.name == "group-double":
        out.append(group_twist_oracle(setup.inst))
    return out


INSTANCES = {
    "ore": InstanceSpec("ore", _ore, ["mha-axioms", "cointegral"], dict(CORRUPTIONS_ORE), _oracles_ore,
                        description="the Ore extension A: a^m b^n, ab = -ba, b^2 = 0"),
    "ore-dual": InstanceSpec("ore-dual", _ore_dual,
                             ["mha-axioms", "qt-axioms", "yang-baxter", "inner-s2", "inner-s4", "prop-2-9",
                              "cointegral"],
                             {**CORRUPTIONS_DUAL, **_DUAL_EXTRA}, _oracles_dual,
                             description="the reduced dual of A with R(w[k,l] (x) 1) = w[k,l] (x) delta^(k+l)"),
    "ore-double": InstanceSpec("ore-double", _ore_double,
                               ["mha-axioms", "qt-axioms", "yang-baxter", "inner-s2", "inner-s4", "relations"],
                               _DOUBLE_EXTRA, _oracles_double,
                               description="the Drinfel'd double of the Ore pair with its canonical R"),
    "group-functions": InstanceSpec("group-functions", _group_functions, ["mha-axioms"],
                                    dict(CORRUPTIONS_FUNCTIONS), _oracles_group, finite=True,
                                    description="K(G) with the conjugation crossing"),
    "group-algebra": InstanceSpec("group-algebra", _group_algebra, ["mha-axioms"],
                                  {"antipode-sign": "S(u[p]) = -u[p^-1] for p != e"}, _oracles_group, finite=True,
                                  description="the group algebra k[G]"),
    "group-double": InstanceSpec("group-double", _group_double,
                                 ["mha-axioms", "pi-qt-axioms", "pi-yang-baxter", "u-tilde", "lemma-3-7-9",
                                  "grouplike-tilde", "thm-3-11-1", "reduction"],
                                 {**_GROUP_DOUBLE_EXTRA, **{f"{k}": v for k, v in CORRUPTIONS_FUNCTIONS.items()}},
                                 _oracles_group, finite=True,
                                 description="the crossed double k[G]^cop >< K(G)~ with canonical W"),
}


def validate(cfg: Config) -> None:
    if cfg.instance not in INSTANCES:
        raise ConfigError(f"unknown instance {cfg.instance!r}; known: {', '.join(INSTANCES)}")
    spec = INSTANCES[cfg.instance]
    if cfg.radius < 1:
        raise ConfigError("radius must be at least 1")
    for name in cfg.suites:
        if name not in SUITES:
            raise ConfigError(f"unknown suite {name!r}; known: {', '.join(SUITES)}")
        if name not in spec.suites:
            raise ConfigError(f"suite {name!r} does not apply to {cfg.instance} (available: {', '.join(spec.suites)})")
    if cfg.corrupt is not None and cfg.corrupt not in spec.corruptions:
        raise ConfigError(f"unknown corruption {cfg.corrupt!r} for {cfg.instance}; known: {', '.join(spec.corruptions)}")


@dataclass
class RunResult:
    config: Config
    oracles: list
    suites: list
    blocked: bool

    @property
    def ok(self) -> bool:
        return not self.blocked and all(r.status != FAIL for r in self.suites)

    def summary(self) -> dict:
        out = {PASS: 0, FAIL: 0, "inconclusive": 0}
        for s in self.suites:
            for k, v in s.counts().items():
                out[k] += v
        return out

    def as_dict(self, version: str) -> dict:
        gate = "blocked" if self.blocked else ("pass" if self.config.oracle_gate else "skipped")
        suites = []
        for s in self.suites:
            d = s.as_dict()
            for sample in d["samples"]:
                sample["radius"] = self.config.radius
                sample["oracle_gate"] = gate
            suites.append(d)
        return {
            "version": version,
            "config": self.config.as_dict(),
            "oracles": [o.as_dict() for o in self.oracles],
            "oracle_gate": gate,
            "suites": suites,
            "summary": self.summary(),
        }


def fixture_notes(res: SuiteResult) -> list:
    """One line per named fixture: 'fixture <name>: pass (n samples)'."""
    groups: dict = {}
    for r in res.records:
        if r.axiom.startswith("fixture: "):
            name = re.sub(r" \((left|right)\)$", "", r.axiom[len("fixture: "):])
            groups.setdefault(name, []).append(r.status)
    return [f"fixture {name}: {FAIL if FAIL in sts else PASS} ({len(sts)} samples)" for name, sts in groups.items()]


def build(cfg: Config) -> Setup:
    validate(cfg)
    return INSTANCES[cfg.instance].build(cfg)


def run(cfg: Config) -> RunResult:
    """Oracles first; suites only run if every oracle matched (or the gate is off)."""
    spec = INSTANCES[cfg.instance]
    validate(cfg)
    setup = spec.build(cfg)
    oracles = spec.oracles(setup, cfg)
    blocked = cfg.oracle_gate and any(o.mismatches for o in oracles)
    results = []
    if not blocked:
        sampler = Sampler(setup.inst, cfg.radius, cfg.seed, spec.finite)
        for name in cfg.suites or spec.suites:
            res = SuiteResult(name, SUITES[name].run(setup, sampler, cfg))
            res.notes.extend(fixture_notes(res))
            res.notes.append(f"window radius {cfg.radius} plus ring {cfg.radius + 1}, {len(sampler.keys)} keys, "
                             f"{len(sampler.pairs)} pairs, {len(sampler.triples)} triples, seed {cfg.seed}")
            results.append(res)
    return RunResult(cfg, oracles, results, blocked)
