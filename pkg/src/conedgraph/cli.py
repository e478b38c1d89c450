"""Command line front end.

Every command prints (or writes with --output) a JSON report:

    {"schema_version": 1, "command": ..., "config": {...},
     "results": {...}, "witnesses": [...], "wall_clock_seconds": ...}

Exit codes: 0 all asserted bounds hold, 1 a bound was violated,
2 invalid input or flags, 3 enumeration budget exhausted.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import os
import sys
import time
from pathlib import Path

from . import acceptance, acylindricity, geometry
from .aperiodic import WordSchedule
from .woracle import WOracleConfig, w_word_witness
from .words import WordParseError, invert, multiply, parse
from .ydist import power_lengths, y_factorization

SCHEMA_VERSION = 1
WORKERS_ENV = "CONEDGRAPH_WORKERS"

# config-file keys and built-in defaults; flags override the file
DEFAULTS = {
    "base_length": 1,
    "seed": 0,
    "workers": 1,
    "samples": 100,
    "length": 100,
    "min_length": 1,
    "format": "json",
    "output": None,
}

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


class UsageError(Exception):
    pass


class BudgetExhausted(Exception):
    def __init__(self, partial: dict):
        super().__init__("enumeration budget exhausted")
        self.partial = partial


def load_config_file(path: str | None) -> dict:
    """Flatten a JSON config file; ``{"schedule": {"base_length": 2}}`` becomes base_length=2."""
    if not path:
        return {}
    try:
        data = json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as err:
        raise UsageError(f"cannot read config {path}: {err}") from err
    flat = {}
    for key, value in data.items():
        if isinstance(value, dict):
            for sub, v in value.items():
                flat[sub if key == "schedule" else f"{key}_{sub}"] = v
        else:
            flat[key] = value
    unknown = set(flat) - set(DEFAULTS)
    if unknown:
        raise UsageError(f"unknown config keys: {sorted(unknown)}")
    return flat


def resolve(args: argparse.Namespace) -> dict:
    file_conf = load_config_file(args.config)
    conf = {}
    for key, default in DEFAULTS.items():
        if key == "workers":
            default = int(os.environ.get(WORKERS_ENV, default))
        flag = getattr(args, key, None)
        conf[key] = flag if flag is not None else file_conf.get(key, default)
    return conf


def word_arg(text: str) -> str:
    return parse(text)


# commands return (results, witnesses, ok, csv rows or None)


def cmd_gen_words(args, conf):
    sched = WordSchedule(conf["base_length"])
    words = sched.words(args.count)
    rows = [{"n": n, "word": w} for n, w in enumerate(words, 1)]
    return {"words": words}, [], True, rows


def cmd_is_wword(args, conf):
    z = word_arg(args.word)
    if not z:
        raise UsageError("W-words are nontrivial")
    wit = w_word_witness(z, WOracleConfig.with_base_length(conf["base_length"]))
    results = {
        "word": z,
        "is_w_word": wit is not None,
        "witness": None if wit is None else {"n": wit.n, "m": wit.m},
    }
    return results, [], True, None


def cmd_ydist(args, conf):
    x, y = word_arg(args.x), word_arg(args.y)
    config = WOracleConfig.with_base_length(conf["base_length"])
    fac = y_factorization(x, y, config)
    results = {
        "x": x,
        "y": y,
        "x_inv_y": multiply(invert(x), y),
        "distance": fac.length,
        "factorization": list(fac.factors),
    }
    return results, [], True, None


def cmd_translation_length(args, conf):
    g = word_arg(args.g)
    if not g:
        raise UsageError("translation length of the identity is not sampled")
    est = power_lengths(g, args.max_power, WOracleConfig.with_base_length(conf["base_length"]))
    ok = not est.power_bound_violations and (est.lower is None or est.lower <= est.upper)
    rows = [{"n": n, "y_length": k} for n, k in est.samples]
    return est.as_dict(), [{"n": n} for n in est.power_bound_violations], ok, rows


def cmd_hausdorff(args, conf):
    config = WOracleConfig.with_base_length(conf["base_length"])
    rep = geometry.hausdorff_experiment(conf["samples"], conf["min_length"], conf["length"], conf["seed"], config)
    return rep.as_dict(), [list(rep.witness or ())], True, None


def cmd_delta(args, conf):
    config = WOracleConfig.with_base_length(conf["base_length"])
    rep = geometry.delta_experiment(conf["samples"], conf["length"], conf["seed"], config)
    return rep.as_dict(), [list(rep.witness or ())], True, None


def cmd_qc_probe(args, conf):
    config = WOracleConfig.with_base_length(conf["base_length"])
    rep = geometry.qc_experiment(conf["samples"], conf["length"], conf["seed"], config)
    ok = args.c_hat is None or rep.estimate <= args.c_hat + 1
    return rep.as_dict(), [list(rep.witness or ())], ok, None


def cmd_acyl_census(args, conf):
    x, y = word_arg(args.x), word_arg(args.y)
    config = WOracleConfig.with_base_length(conf["base_length"])
    try:
        rep = acylindricity.census(
            x, y, args.radius, args.cap, args.c_hat, config, budget=args.budget, workers=conf["workers"]
        )
        acylindricity.check_census(rep)
    except acylindricity.AcylindricityViolation as err:
        return {"violation": str(err)}, [err.details], False, None
    if not rep.complete:
        raise BudgetExhausted(rep.as_dict())
    return rep.as_dict(), [m["g"] for m in rep.members], True, None


def cmd_verify_all(args, conf):
    def echo(r):
        print(r.line(), file=sys.stderr, flush=True)

    results = acceptance.run_all(conf["seed"], args.scale, conf["base_length"], callback=echo)
    ok = all(r.passed for r in results)
    return {"criteria": [r.as_dict() for r in results], "passed": ok}, [], ok, None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--base-length", type=int, dest="base_length", help="length of v_1 (default 1)")
    common.add_argument("--seed", type=int)
    common.add_argument("--workers", type=int, help=f"worker processes (default ${WORKERS_ENV} or 1)")
    common.add_argument("--config", help="JSON config file; flags take precedence")
    common.add_argument("--output", "-o", help="write the report here instead of stdout")
    common.add_argument("--format", choices=["json", "csv"])
    sampling = argparse.ArgumentParser(add_help=False)
    sampling.add_argument("--samples", type=int)
    sampling.add_argument("--length", type=int, help="maximum word length")
    sampling.add_argument("--min-length", type=int, dest="min_length")

    parser = argparse.ArgumentParser(prog="conedgraph", description="Experiments on the coned-off graph Y of F(a,b,c).")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen-words", parents=[common], help="list v_1..v_N")
    p.add_argument("--count", type=int, required=True)
    p.set_defaults(func=cmd_gen_words)

    p = sub.add_parser("is-wword", parents=[common], help="decide W-word membership")
    p.add_argument("word")
    p.set_defaults(func=cmd_is_wword)

    p = sub.add_parser("ydist", parents=[common], help="d_Y(x, y) with a geodesic factorization")
    p.add_argument("x")
    p.add_argument("y")
    p.set_defaults(func=cmd_ydist)

    p = sub.add_parser("translation-length", parents=[common], help="sample |g^n|_Y")
    p.add_argument("g")
    p.add_argument("--max-power", type=int, default=49, dest="max_power")
    p.set_defaults(func=cmd_translation_length)

    for name, func, text in [
        ("hausdorff", cmd_hausdorff, "Hausdorff distance of X- and Y-geodesics"),
        ("delta", cmd_delta, "four-point delta estimate"),
        ("qc-probe", cmd_qc_probe, "quasiconvexity of the F(a,b) orbit"),
    ]:
        p = sub.add_parser(name, parents=[common, sampling], help=text)
        if name == "qc-probe":
            p.add_argument("--c-hat", type=int, dest="c_hat", help="assert probe <= c_hat + 1")
        p.set_defaults(func=func)

    p = sub.add_parser("acyl-census", parents=[common], help="enumerate a coarse stabilizer")
    p.add_argument("--x", required=True)
    p.add_argument("--y", required=True)
    p.add_argument("--radius", type=int, required=True)
    p.add_argument("--cap", type=int, required=True)
    p.add_argument("--c-hat", type=int, default=1, dest="c_hat")
    p.add_argument("--budget", type=int, default=acylindricity.DEFAULT_BUDGET)
    p.set_defaults(func=cmd_acyl_census)

    p = sub.add_parser("verify-all", parents=[common], help="run every acceptance check")
    p.add_argument("--scale", type=float, default=1.0, help="sample-size multiplier (1.0 = full)")
    p.set_defaults(func=cmd_verify_all)
    return parser


def render_csv(rows: list[dict]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=list(rows[0]) if rows else ["empty"], lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    return buf.getvalue()


def error_report(command: str, kind: str, message: str, **extra) -> dict:
    return {"schema_version": SCHEMA_VERSION, "command": command, "error": {"type": kind, "message": message, **extra}}


def emit(text: str, output: str | None) -> None:
    if output:
        Path(output).write_text(text)
    else:
        sys.stdout.write(text)


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    started = time.perf_counter()
    output = getattr(args, "output", None)
    try:
        conf = resolve(args)
        output = conf["output"]
        results, witnesses, ok, rows = args.func(args, conf)
    except WordParseError as err:
        emit(json.dumps(error_report(args.command, "parse_error", str(err), position=err.position), indent=2) + "\n", output)
        return EXIT_USAGE
    except (UsageError, ValueError) as err:
        emit(json.dumps(error_report(args.command, "usage_error", str(err)), indent=2) + "\n", output)
        return EXIT_USAGE
    except BudgetExhausted as err:
        emit(json.dumps(error_report(args.command, "budget_exhausted", str(err), partial=err.partial), indent=2) + "\n", output)
        return EXIT_BUDGET

    if conf["format"] == "csv":
        if rows is None:
            emit(json.dumps(error_report(args.command, "usage_error", "csv output is only available for table-like reports"), indent=2) + "\n", output)
            return EXIT_USAGE
        emit(render_csv(rows), output)
    else:
        extra = {k: v for k, v in vars(args).items() if k not in DEFAULTS and k not in ("func", "config", "command")}
        report = {
            "schema_version": SCHEMA_VERSION,
            "command": args.command,
            "config": {**conf, **extra},
            "results": results,
            "witnesses": witnesses,
            "wall_clock_seconds": round(time.perf_counter() - started, 3),
        }
        emit(json.dumps(report, indent=2, sort_keys=True) + "\n", output)
    return EXIT_OK if ok else EXIT_VIOLATION


def main() -> None:
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s %(name)s: %(message)s")
    sys.exit(run())


if __name__ == "__main__":
    main()
