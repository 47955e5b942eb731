"""Command-line front end.

Exit codes: 0 when a verdict (or other result) was produced, 2 when the input
is outside the scope of the decision procedure, 1 on any error.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from pathlib import Path
from typing import Any, Sequence

from .config import Settings, load_settings
from .errors import KleinianError
from .geometry import MIN_DISTANCE_TABLE, min_distance
from .moebius import MoebiusMap, ParamTriple, construct_generators, params_of
from .oracle import CLAUSE_TEXT, Status, check_theorem_a, decide
from .orbifold353 import verify_353
from .table import enumerate_row, get_row
from .witnesses import build_witnesses, check_hypothesis, relation_residuals

EXIT_OK, EXIT_ERROR, EXIT_OUT_OF_SCOPE = 0, 1, 2
SIG_DIGITS = 12


def round_sig(obj: Any, digits: int = SIG_DIGITS) -> Any:
    """Round every float inside a JSON-like structure to `digits` significant digits."""
    if isinstance(obj, float):
        return float(f"{obj:.{digits}g}") if math.isfinite(obj) else str(obj)
    if isinstance(obj, dict):
        return {k: round_sig(v, digits) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [round_sig(v, digits) for v in obj]
    return obj


def dumps(obj: Any) -> str:
    return json.dumps(round_sig(obj))


# -- input helpers ----------------------------------------------------------------------


def _triple(args) -> ParamTriple:
    missing = [n for n in ("beta", "beta_prime", "gamma") if getattr(args, n) is None]
    if missing:
        raise KleinianError("missing " + ", ".join("--" + m.replace("_", "-") for m in missing))
    return ParamTriple(args.beta, args.beta_prime, args.gamma)


def read_matrix_file(path: str | Path) -> tuple[MoebiusMap, MoebiusMap]:
    """JSON object with keys "f" and "g", each four [re, im] pairs in row-major order."""
    data = json.loads(Path(path).read_text())
    try:
        return MoebiusMap.from_json(data["f"]), MoebiusMap.from_json(data["g"])
    except (KeyError, TypeError) as exc:
        raise KleinianError(f"{path}: expected keys 'f' and 'g' with 2x2 complex entries") from exc


def _pair(args, settings: Settings) -> tuple[MoebiusMap, MoebiusMap]:
    if getattr(args, "matrix_file", None):
        return read_matrix_file(args.matrix_file)
    return tuple(construct_generators(_triple(args), settings.tolerances))


# -- subcommands ------------------------------------------------------------------------


def _verdict_lines(v) -> list[str]:
    lines = [f"status: {v.status.value}",
             f"space class: {v.space.kind.value} (k = {v.space.k}; {v.space.reason})"]
    if v.normalized is not None:
        lines.append("normalized triple: " + ", ".join(f"{k} = {x:.12g}" for k, x in v.normalized.to_dict().items()))
    for m in v.matched_rows:
        params = ", ".join(f"{k} = {x}" for k, x in m.params.items()) or "no free integers"
        side = " (generators exchanged)" if m.swapped else ""
        lines.append(f"row {m.row}{side}: {params}")
        lines.append(f"    {get_row(m.row).describe()}")
    if v.theorem_a is not None:
        c = v.theorem_a.clause
        lines.append(f"witness clause: {c or 'none'}" + (f"  [{CLAUSE_TEXT[c]}]" if c else ""))
        lines.append(f"agreement: {v.agreement}")
    if v.delegate:
        lines.append(f"delegate: {v.delegate}")
    lines += [f"note: {n}" for n in v.notes]
    return lines


def _emit_verdict(v, settings: Settings) -> int:
    if settings.output == "human":
        print("\n".join(_verdict_lines(v)))
    else:
        print(dumps(v.to_dict()))
    return EXIT_OUT_OF_SCOPE if v.status is Status.OUT_OF_SCOPE else EXIT_OK


def cmd_classify(args, settings: Settings) -> int:
    return _emit_verdict(decide(_triple(args), settings.tolerances, settings.caps), settings)


def cmd_decide(args, settings: Settings) -> int:
    data = read_matrix_file(args.matrix_file) if args.matrix_file else _triple(args)
    return _emit_verdict(decide(data, settings.tolerances, settings.caps), settings)


def cmd_construct(args, settings: Settings) -> int:
    pair = construct_generators(_triple(args), settings.tolerances)
    out = {"f": pair.f.to_json(), "g": pair.g.to_json(),
           "c": [pair.c.real, pair.c.imag], "c_other": [pair.c_other.real, pair.c_other.imag],
           "round_trip": params_of(pair.f, pair.g, settings.tolerances).to_dict()}
    if settings.output == "human":
        for name in ("f", "g"):
            a, b, c, d = getattr(pair, name).entries
            print(f"{name} = [[{a:.12g}, {b:.12g}], [{c:.12g}, {d:.12g}]]")
    else:
        print(dumps(out))
    return EXIT_OK


def cmd_witnesses(args, settings: Settings) -> int:
    tol = settings.tolerances
    f, g = _pair(args, settings)
    check_hypothesis(f, g, tol)
    W = build_witnesses(f, g, tol)
    res = relation_residuals(f, g, W, tol)
    clause = check_theorem_a(f, g, W, tol)
    out = {"n": W.n, "witnesses": {}, "residuals": res, "skipped": W.skipped,
           "clause": clause.clause}
    for name, M in W.elements().items():
        out["witnesses"][name] = {"trace": [M.trace.real, M.trace.imag], **W.classes[name].to_dict()}
    if settings.output == "human":
        print(f"n = {W.n}")
        for name, d in out["witnesses"].items():
            extra = f", order {d['order']}, primitive {d['primitive']}" if d["kind"] == "elliptic" else ""
            print(f"{name}: {d['kind']}{extra}")
        for name, why in W.skipped.items():
            print(f"{name}: not defined ({why})")
        for rel, r in res.items():
            print(f"residual {rel}: {r:.3e}")
        print(f"clause: {clause.clause or 'none'}")
    else:
        print(dumps(out))
    return EXIT_OK


def cmd_enumerate(args, settings: Settings) -> int:
    caps = settings.caps if args.cap is None else type(settings.caps).uniform(args.cap)
    rows = enumerate_row(args.row, caps, variant=args.variant)
    lines = [dumps(r.to_dict()) for r in rows]
    if args.out:
        Path(args.out).write_text("".join(line + "\n" for line in lines))
        print(f"{len(lines)} triples written to {args.out}", file=sys.stderr)
    else:
        for line in lines:
            print(line)
    return EXIT_OK


def cmd_mindist(args, settings: Settings) -> int:
    c = min_distance(args.p, args.q)
    out = {"p": args.p, "q": args.q, "cosh_rho_min": c, "rho_min": math.acosh(c),
           "source": "formula" if max(args.p, args.q) >= 7 else "table"}
    if (args.p, args.q) in MIN_DISTANCE_TABLE:
        out["printed"] = MIN_DISTANCE_TABLE[(args.p, args.q)]
    if settings.output == "human":
        print(f"cosh rho_min({args.p}, {args.q}) = {c:.12g}, rho_min = {out['rho_min']:.12g} [{out['source']}]")
    else:
        print(dumps(out))
    return EXIT_OK


def cmd_verify_353(args, settings: Settings) -> int:
    report = verify_353(settings.tolerances)
    if settings.output == "human":
        t = report.triple
        print(f"triple: beta = {t.beta:.12g}, beta' = {t.beta_prime:.12g}, gamma = {t.gamma:.12g}")
        print(f"|tr e| = {abs(report.e_trace):.3e}")
        for name, ok in report.checks().items():
            print(f"{'ok  ' if ok else 'FAIL'} {name}")
    else:
        print(dumps(report.to_dict()))
    return EXIT_OK if report.ok else EXIT_ERROR


# -- parser ----------------------------------------------------------------------------


def _add_triple(p: argparse.ArgumentParser, required: bool = False) -> None:
    p.add_argument("--beta", type=float, required=required, help="tr^2 f - 4")
    p.add_argument("--beta-prime", type=float, required=required, help="tr^2 g - 4")
    p.add_argument("--gamma", type=float, required=required, help="tr[f,g] - 2")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="JSON config file (default: $KLEINIAN_RP_CONFIG)")
    common.add_argument("--json", action="store_const", const="json", dest="output",
                        help="print JSON instead of text")
    common.add_argument("--output", choices=("human", "json", "jsonl"))
    for name in ("eps", "eps_det", "eps_axis", "eps_match"):
        common.add_argument("--" + name.replace("_", "-"), type=float, dest=name)
    common.add_argument("--max-denominator", type=int, dest="max_denominator")
    common.add_argument("--renorm-period", type=int, dest="renorm_period")
    for name in ("n", "m", "p", "k"):
        common.add_argument(f"--cap-{name}", type=int, dest=f"cap_{name}", help=f"cap on the parameter {name}")

    parser = argparse.ArgumentParser(prog="kleinian-rp", description="Discreteness of RP groups.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", parents=[common], help="decide a parameter triple")
    _add_triple(p, required=True)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("decide", parents=[common], help="decide a generator pair or triple")
    p.add_argument("--matrix-file", help="JSON file with matrices f and g")
    _add_triple(p)
    p.set_defaults(func=cmd_decide)

    p = sub.add_parser("construct", parents=[common], help="normalized generators for a triple")
    _add_triple(p, required=True)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("witnesses", parents=[common], help="build h1..h4 and their classes")
    p.add_argument("--matrix-file")
    _add_triple(p)
    p.set_defaults(func=cmd_witnesses)

    p = sub.add_parser("enumerate", parents=[common], help="instances of one table row as JSON lines")
    p.add_argument("--row", type=int, required=True)
    p.add_argument("--cap", type=int, help="uniform cap on all integer parameters")
    p.add_argument("--out", help="write JSON lines here instead of stdout")
    p.add_argument("--variant", choices=("corrected", "printed"), default="corrected")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("mindist", parents=[common], help="minimal distance between elliptic axes")
    p.add_argument("p", type=int)
    p.add_argument("q", type=int)
    p.set_defaults(func=cmd_mindist)

    p = sub.add_parser("verify-353", parents=[common], help="check the 3-5-3 orbifold word")
    p.set_defaults(func=cmd_verify_353)
    return parser


# argparse dest -> settings key
SETTING_KEYS = {k: k for k in ("eps", "eps_det", "eps_axis", "eps_match", "max_denominator",
                                "renorm_period", "output")}
SETTING_KEYS.update({f"cap_{k}": k for k in "nmpk"})


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_ERROR
    try:
        overrides = {key: getattr(args, dest, None) for dest, key in SETTING_KEYS.items()}
        settings = load_settings(args.config, overrides)
        return args.func(args, settings)
    except (KleinianError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


def main() -> None:
    sys.exit(run())
