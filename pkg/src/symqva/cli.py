"""Command-line front end: ``symqva {poly,vertex,braiding,sigma,verify} ...``.

Exit codes: 0 when everything passed, 1 when a check failed, 2 on usage or
configuration errors. JSON output uses sorted keys so identical invocations
print identical bytes.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from .bicharacter import SigmaBicharacter, VElement, braiding_R, sigma_build, simple_braiding_factor
from .orthopoly import DegenerateNormError, ExistenceError, family
from .partitions import make_partition
from .qva_checks import SUITES, run_suite
from .symfunc import preset
from .vertexop import phi_product

MAX_WEIGHT = 10
MAX_ORDER = 12

DEFAULTS = {
    "preset": "hall_littlewood",
    "order": 6,
    "weight_cap": 5,
    "zmin": -4,
    "zmax": 3,
    "output": "json",
    "seed": 0,
}

_PAIR_NAMES = {"1": ((), 0), "h": ((1,), 0), "h2": ((2,), 0), "e": ((), 1), "e^-1": ((), -1)}


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class RunConfig:
    preset: str
    weight_cap: int
    param_order: int
    z_window: tuple
    output: str
    seed: int

    def __post_init__(self):
        if not 0 <= self.weight_cap <= MAX_WEIGHT:
            raise UsageError(f"--weight-cap must lie in [0, {MAX_WEIGHT}]")
        if not 0 <= self.param_order <= MAX_ORDER:
            raise UsageError(f"--order must lie in [0, {MAX_ORDER}]")
        if self.z_window[0] > self.z_window[1]:
            raise UsageError("--zmin must not exceed --zmax")
        if self.output not in ("json", "text"):
            raise UsageError("--output is json or text")

    def as_suite_config(self):
        return {"order": self.param_order, "weight_cap": self.weight_cap,
                "zmin": self.z_window[0], "zmax": self.z_window[1], "seed": self.seed}


def _global_flags():
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--preset", help="schur, hall_littlewood (hl) or macdonald (mac)")
    p.add_argument("--order", type=int, help=f"parameter truncation order (<= {MAX_ORDER})")
    p.add_argument("--weight-cap", dest="weight_cap", type=int, help=f"weight cap (<= {MAX_WEIGHT})")
    p.add_argument("--zmin", type=int)
    p.add_argument("--zmax", type=int)
    p.add_argument("--output", choices=("json", "text"))
    p.add_argument("--config", help="JSON file whose keys mirror the flags; flags win")
    p.add_argument("--seed", type=int)
    return p


def build_parser():
    common = _global_flags()
    parser = argparse.ArgumentParser(prog="symqva", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    p = sub.add_parser("poly", parents=[common], help="P_lam and Q_lam of a family")
    p.add_argument("--partition", required=True)
    p.add_argument("--basis", choices=("p", "m"), default="p")
    p = sub.add_parser("vertex", parents=[common], help="Phi_{lam_1}...Phi_{lam_k} 1")
    p.add_argument("--partition", required=True)
    p = sub.add_parser("braiding", parents=[common], help="R(a (x) b) for generator names")
    p.add_argument("--pair", required=True, help="two of " + ", ".join(_PAIR_NAMES) + ", comma separated")
    sub.add_parser("sigma", parents=[common], help="the generating value sigma(z, w)")
    p = sub.add_parser("verify", parents=[common], help="run a verification suite")
    p.add_argument("suite", choices=sorted(SUITES) + ["all"])
    return parser


def _load_config(path):
    if path is None:
        return {}
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read config {path}: {exc}") from None
    if not isinstance(data, dict):
        raise UsageError("config must be a JSON object")
    unknown = set(data) - set(DEFAULTS)
    if unknown:
        raise UsageError(f"unknown config keys: {sorted(unknown)}")
    return data


def resolve_config(args):
    merged = dict(DEFAULTS)
    merged.update(_load_config(args.config))
    for key in DEFAULTS:
        val = getattr(args, key, None)
        if val is not None:
            merged[key] = val
    try:
        name = preset(merged["preset"]).name
    except (KeyError, ValueError) as exc:
        raise UsageError(str(exc)) from None
    try:
        return RunConfig(name, int(merged["weight_cap"]), int(merged["order"]),
                         (int(merged["zmin"]), int(merged["zmax"])), merged["output"], int(merged["seed"]))
    except (TypeError, ValueError) as exc:
        raise UsageError(f"bad config value: {exc}") from None


def _parse_partition(text):
    try:
        lam = make_partition(int(x) for x in text.split(",") if x.strip())
    except ValueError as exc:
        raise UsageError(f"bad partition {text!r}: {exc}") from None
    if sum(lam) > MAX_WEIGHT:
        raise UsageError(f"partition weight exceeds {MAX_WEIGHT}")
    return lam


def _symfunc_out(f, basis):
    return f.to_json(basis)


def cmd_poly(cfg, args):
    lam = _parse_partition(args.partition)
    v = preset(cfg.preset)
    fam = family(v, sum(lam)) if lam else None
    if fam is None:
        raise UsageError("empty partition")
    return {"preset": v.name, "partition": list(lam), "basis": args.basis,
            "P": _symfunc_out(fam.P[lam], args.basis), "Q": _symfunc_out(fam.Q[lam], args.basis)}


def cmd_vertex(cfg, args):
    lam = _parse_partition(args.partition)
    v = preset(cfg.preset)
    return {"preset": v.name, "partition": list(lam), "phi_product": phi_product(lam, v).to_json("p")}


def cmd_braiding(cfg, args):
    names = [x.strip() for x in args.pair.split(",")]
    if len(names) != 2 or any(n not in _PAIR_NAMES for n in names):
        raise UsageError(f"--pair takes two of {sorted(_PAIR_NAMES)}")
    v = preset(cfg.preset)
    bc = SigmaBicharacter(v, cfg.param_order)
    a, b = (VElement.basis(*_PAIR_NAMES[n]) for n in names)
    R = braiding_R(a, b, bc)
    out = {"preset": v.name, "pair": names, "order": cfg.param_order,
           "terms": [{"left": {"h": list(la[0]), "charge": la[1]},
                      "right": {"h": list(lb[0]), "charge": lb[1]},
                      "coeff": k.to_json()} for (la, lb), k in R.items()]}
    if names == ["e", "e"]:
        out["scalar_factor"] = simple_braiding_factor(v, cfg.param_order).to_json()
    return out


def cmd_sigma(cfg, args):
    v = preset(cfg.preset)
    return {"preset": v.name, "sigma": sigma_build(v, cfg.param_order).to_json()}


def cmd_verify(cfg, args):
    return run_suite(args.suite, preset(cfg.preset), cfg.as_suite_config())


_COMMANDS = {"poly": cmd_poly, "vertex": cmd_vertex, "braiding": cmd_braiding,
             "sigma": cmd_sigma, "verify": cmd_verify}


def _text(obj, indent=0):
    pad = "  " * indent
    if isinstance(obj, dict):
        lines = []
        for k, v in obj.items():
            if isinstance(v, (dict, list)) and v:
                lines.append(f"{pad}{k}:")
                lines.append(_text(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {v}")
        return "\n".join(lines)
    if isinstance(obj, list):
        lines = []
        for x in obj:
            if isinstance(x, (dict, list)):
                body = _text(x, indent + 1).lstrip()
                lines.append(f"{pad}- {body}")
            else:
                lines.append(f"{pad}- {x}")
        return "\n".join(lines)
    return f"{pad}{obj}"


def main(argv=None, out=None):
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = resolve_config(args)
        result = _COMMANDS[args.command](cfg, args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"symqva: error: {exc}", file=sys.stderr)
        return 2
    except (ExistenceError, DegenerateNormError) as exc:
        print(f"symqva: no orthogonal family: {exc}", file=sys.stderr)
        return 1
    if args.command == "verify":
        for rep in result:
            print(rep.to_json() if cfg.output == "json" else rep.line(), file=out)
        return 0 if all(rep.passed for rep in result) else 1
    if cfg.output == "json":
        print(json.dumps(result, sort_keys=True), file=out)
    else:
        print(_text(result), file=out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
