"""Command line: verify suites, evaluate expressions, list what is available."""
from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .instances.group import GroupLoadError
from .linalg import accumulate, serialize, tensor_basis
from .parse import ParseError, parse_element
from .suites import INSTANCES, SUITES, Config, ConfigError, build, run

OPS = {
    "product": 2,
    "coproduct-cov": 2,
    "antipode": 1,
    "counit": 1,
    "pairing": 2,
    "twist": 2,
}


def _split_suites(text: str | None) -> list:
    if not text:
        return []
    return [s.strip() for s in text.split(",") if s.strip()]


def _config(args) -> Config:
    return Config(
        instance=args.instance,
        suites=_split_suites(getattr(args, "suite", None)),
        radius=args.radius,
        group=args.group,
        seed=getattr(args, "seed", 0),
        corrupt=getattr(args, "corrupt", None),
        oracle_gate=not getattr(args, "no_oracle_gate", False),
    )


def _text_report(result) -> str:
    cfg = result.config
    lines = [f"instance {cfg.instance}  radius {cfg.radius}  seed {cfg.seed}"
             + (f"  group {cfg.group}" if INSTANCES[cfg.instance].finite else "")
             + (f"  corrupt {cfg.corrupt}" if cfg.corrupt else "")]
    for o in result.oracles:
        d = o.as_dict()
        lines.append(f"oracle {d['name']:28} {d['status']:12} {d['counts']['pass']} matched, "
                     f"{d['counts']['fail']} mismatched  [{d['range']}]")
        for m in d["mismatches"][:3]:
            lines.append(f"    {m['identity']} at {m['sample']}: derived {m['derived']}, table {m['table']}")
    if result.blocked:
        lines.append("oracle gate: mismatches found, suites not run")
    elif not cfg.oracle_gate:
        lines.append("oracle gate: disabled")
    for s in result.suites:
        c = s.counts()
        lines.append(f"suite {s.name:18} {s.status:12} pass {c['pass']}  fail {c['fail']}  "
                     f"inconclusive {c['inconclusive']}")
        for note in s.notes:
            if note.startswith("fixture "):
                lines.append(f"    {note}")
        for r in s.failures()[:5]:
            lines.append(f"    FAIL {r.axiom} [{r.sample}]: {r.lhs} != {r.rhs}")
    summ = result.summary()
    lines.append(f"summary: pass {summ['pass']}  fail {summ['fail']}  inconclusive {summ['inconclusive']}"
                 f"  -> {'OK' if result.ok else 'FAILED'}")
    return "\n".join(lines)


def cmd_verify(args) -> int:
    cfg = _config(args)
    result = run(cfg)
    if args.format == "json":
        out = json.dumps(result.as_dict(__version__), indent=2, sort_keys=True)
    else:
        out = _text_report(result)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(out + "\n")
    else:
        print(out)
    return 0 if result.ok else 1


def _pairing_parts(setup):
    """(first instance, second instance, pairing function) for the pairing operation."""
    name, ex = setup.name, setup.extra
    if name in ("ore", "ore-dual"):
        return ex["dual"], ex["ore"], ex["pairing"].pair
    if name in ("group-functions", "group-algebra"):
        from .instances.group import GroupPairing
        G = ex["group"]
        K = setup.inst if name == "group-functions" else ex["functions"]
        kG = setup.inst if name == "group-algebra" else ex["algebra"]
        return kG, K, GroupPairing(G, K, kG).pair
    raise ConfigError(f"pairing is not defined for {name}; use ore, ore-dual, group-functions or group-algebra")


def evaluate_op(setup, op: str, exprs: list):
    inst = setup.inst
    if op not in OPS:
        raise ConfigError(f"unknown operation {op!r}; known: {', '.join(OPS)}")
    if len(exprs) != OPS[op]:
        raise ConfigError(f"{op} takes {OPS[op]} expression(s), got {len(exprs)}")
    if op == "pairing":
        first, second, pair = _pairing_parts(setup)
        return pair(parse_element(exprs[0], first), parse_element(exprs[1], second))
    if op == "twist":
        from .double import DoubleInstance
        if not isinstance(inst, DoubleInstance):
            raise ConfigError("twist needs a double instance (ore-double or group-double)")
        y, x = parse_element(exprs[0], inst.Y), parse_element(exprs[1], inst.X)
        tb = tensor_basis(inst.X.basis, inst.Y.basis)
        return accumulate(tb, [(c * d, inst.bundle.twist(yk, xk)) for yk, c in y.items() for xk, d in x.items()])
    xs = [parse_element(e, inst) for e in exprs]
    if op == "product":
        return inst.multiply(*xs)
    if op == "coproduct-cov":
        return inst.cover(xs[0], r2=xs[1])
    if op == "antipode":
        return inst.antipode(xs[0])
    return inst.counit(xs[0])


def cmd_eval(args) -> int:
    setup = build(_config(args))
    value = evaluate_op(setup, args.op, args.expr)
    print(serialize(value))
    return 0


def cmd_list_suites(args) -> int:
    for name, spec in SUITES.items():
        owners = [i for i, s in INSTANCES.items() if name in s.suites]
        ci, cc = spec.control
        print(f"{name:16} {spec.description}")
        print(f"{'':16} instances: {', '.join(owners)}; negative control: --instance {ci} --corrupt {cc}")
    return 0


def cmd_list_instances(args) -> int:
    for name, spec in INSTANCES.items():
        print(f"{name:16} {spec.description}")
        print(f"{'':16} suites: {', '.join(spec.suites)}")
        print(f"{'':16} corruptions: {', '.join(spec.corruptions)}")
    return 0


def make_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="mhopf", description="Exact checks for multiplier Hopf algebra examples.")
    p.add_argument("--version", action="version", version=f"mhopf {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, default_instance):
        sp.add_argument("--instance", default=default_instance, choices=list(INSTANCES))
        sp.add_argument("--radius", type=int, default=8, help="window radius for Z-indexed bases (default 8)")
        sp.add_argument("--group", default="S3", help="Zn, S3 or a Cayley-table file (group instances)")
        sp.add_argument("--corrupt", default=None, help="inject a named corruption (negative control)")

    v = sub.add_parser("verify", help="run oracles, then suites")
    common(v, "ore-dual")
    v.add_argument("--suite", default=None, help="comma-separated suite names (default: all for the instance)")
    v.add_argument("--format", choices=["text", "json"], default="text")
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--out", default=None, help="write the report to this file")
    v.add_argument("--no-oracle-gate", action="store_true", help="run suites even if an oracle mismatches")
    v.set_defaults(func=cmd_verify)

    e = sub.add_parser("eval", help="evaluate an operation on element expressions")
    common(e, "ore")
    e.add_argument("--op", required=True, choices=list(OPS))
    e.add_argument("expr", nargs="+")
    e.set_defaults(func=cmd_eval)

    sub.add_parser("list-suites", help="list suites and their negative controls").set_defaults(func=cmd_list_suites)
    sub.add_parser("list-instances", help="list instances").set_defaults(func=cmd_list_instances)
    return p


def main(argv: list | None = None) -> int:
    args = make_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ConfigError, ParseError, GroupLoadError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
