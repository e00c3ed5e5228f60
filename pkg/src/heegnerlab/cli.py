"""Command-line front end: reproducible batch commands with JSON/CSV output.

Exit codes: 0 success, 1 verification failure, 2 usage or precondition error.
Payloads contain no timestamps, so identical invocations are byte-identical;
`--meta` wraps the payload in a separate metadata envelope.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from datetime import datetime, timezone
from fractions import Fraction

from . import __version__
from .bounds import (
    admissibility_report,
    growth_exponent_estimate,
    irr_bound_certificate,
    sandwich_check,
)
from .cycles import (
    cubic_heegner_index,
    embed_k3_lattice,
    gm_heegner_index,
    gm_residue_vector,
    hk_heegner_index,
)
from .discriminant import discriminant_group
from .lattices import build_named_lattice, gram_determinant
from .weil import build_weil_rep, relations_pass, verify_sl2_relations

ENV_CAP = "HEEGNER_LAB_CAP"


class UsageError(ValueError):
    pass


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv"), default="json")
    common.add_argument("--out", default=None, help="write output to a file instead of stdout")
    common.add_argument("--meta", action="store_true", help="wrap the payload in a metadata envelope")

    parser = argparse.ArgumentParser(prog="heegnerlab", parents=[common])
    sub = parser.add_subparsers(dest="command", required=True)

    lattice = sub.add_parser("lattice").add_subparsers(dest="subcommand", required=True)
    info = lattice.add_parser("info", parents=[common])
    info.add_argument("--name", required=True)
    info.add_argument("--d", type=int, default=None)
    info.add_argument("--n", type=int, default=None)
    info.add_argument("--delta", type=int, default=None)

    weil = sub.add_parser("weil").add_subparsers(dest="subcommand", required=True)
    check = weil.add_parser("check", parents=[common])
    check.add_argument("--name", required=True)
    check.add_argument("--d", type=int, default=None)
    check.add_argument("--n", type=int, default=None)
    check.add_argument("--delta", type=int, default=None)
    check.add_argument("--tol", type=float, default=1e-9)

    heegner = sub.add_parser("heegner").add_subparsers(dest="subcommand", required=True)
    cubic = heegner.add_parser("cubic", parents=[common])
    cubic.add_argument("--d", type=int, required=True)
    gm = heegner.add_parser("gm", parents=[common])
    gm.add_argument("--d", type=int, required=True)
    hk = heegner.add_parser("hk", parents=[common])
    hk.add_argument("--n", type=int, required=True)
    hk.add_argument("--delta", type=int, required=True)
    hk.add_argument("--d", type=int, required=True)

    embed = sub.add_parser("embed", parents=[common])
    embed.add_argument("--d", type=int, required=True)

    admissible = sub.add_parser("admissible", parents=[common])
    admissible.add_argument("--d", type=int, default=None)
    admissible.add_argument("--g", type=int, default=None)
    admissible.add_argument("--g-range", dest="g_range", default=None)
    admissible.add_argument("--n-max", dest="n_max", type=int, default=10)

    bound = sub.add_parser("bound", parents=[common])
    bound.add_argument("--g", type=int, default=None)
    bound.add_argument("--g-range", dest="g_range", default=None)
    bound.add_argument("--n-max", dest="n_max", type=int, default=10)

    growth = sub.add_parser("growth").add_subparsers(dest="subcommand", required=True)
    sandwich = growth.add_parser("sandwich", parents=[common])
    sandwich.add_argument("--k", type=int, required=True)
    sandwich.add_argument("--m-max", dest="m_max", type=int, required=True)
    sandwich.add_argument("--m-min", dest="m_min", type=int, default=1)
    estimate = growth.add_parser("estimate", parents=[common])
    estimate.add_argument("--series-file", dest="series_file", default=None)
    return parser


def _named_lattice_from_args(args) -> "IntegerLattice":
    name = args.name
    params = []
    if name in ("rank1", "Lambda_d"):
        if args.d is None:
            raise UsageError(f"{name} requires --d")
        params = [args.d]
    elif name == "Lambda_HK_prim":
        if args.n is None or args.delta is None:
            raise UsageError("Lambda_HK_prim requires --n and --delta")
        params = [args.n, args.delta]
    return build_named_lattice(name, *params)


def _hard_cap() -> int | None:
    raw = os.environ.get(ENV_CAP)
    if raw is None:
        return None
    try:
        return int(raw)
    except ValueError as exc:
        raise UsageError(f"{ENV_CAP} must be an integer, got {raw!r}") from exc


def _parse_range(text: str) -> range:
    try:
        lo, hi = (int(x) for x in text.split(":"))
    except ValueError as exc:
        raise UsageError(f"range must look like A:B, got {text!r}") from exc
    if lo > hi:
        raise UsageError(f"empty range {text!r}")
    return range(lo, hi + 1)


def run_lattice_info(args) -> tuple[dict, int]:
    lattice = _named_lattice_from_args(args)
    group = discriminant_group(lattice, hard_cap=_hard_cap())
    doc = lattice.to_jsonable()
    doc["det"] = gram_determinant(lattice)
    doc["disc_group"] = group.to_jsonable()
    doc["disc_group"]["mode"] = group.q_mode
    doc["level"] = group.level
    return doc, 0


def run_weil_check(args) -> tuple[dict, int]:
    lattice = _named_lattice_from_args(args)
    p, q = lattice.signature
    if q != 2 or p % 2 != 0:
        raise UsageError(
            f"weil check needs signature (m, 2) with m even; {lattice.name} has {lattice.signature}"
        )
    group = discriminant_group(lattice, hard_cap=_hard_cap())
    rep = build_weil_rep(group, p)
    checks = verify_sl2_relations(rep, tol=args.tol)
    doc = {
        "name": lattice.name,
        "m": p,
        "weight": rep.weight,
        "level": rep.level,
        "dim": rep.dim,
        "tol": args.tol,
        "relations": [c.to_jsonable() for c in checks],
        "pass": relations_pass(checks),
    }
    return doc, 0 if relations_pass(checks) else 1


def run_heegner(args) -> tuple[dict, int]:
    if args.subcommand == "cubic":
        return {"d": args.d, "index": cubic_heegner_index(args.d).to_jsonable()}, 0
    if args.subcommand == "gm":
        return {
            "d": args.d,
            "indices": [i.to_jsonable() for i in gm_heegner_index(args.d)],
            "labellings": [w.to_jsonable() for w in gm_residue_vector(args.d)],
        }, 0
    family = hk_heegner_index(args.n, args.delta, args.d)
    return family.to_jsonable(), 0


def run_embed(args) -> tuple[dict, int]:
    witness = embed_k3_lattice(args.d)
    return witness.to_jsonable(), 0 if witness.det_check_passed and witness.image_primitive else 1


def run_admissible(args) -> tuple[object, int]:
    if args.d is not None:
        return admissibility_report(args.d, args.n_max), 0
    if args.g is not None:
        return admissibility_report(2 * args.g - 2, args.n_max), 0
    if args.g_range is not None:
        reports = [admissibility_report(2 * g - 2, args.n_max) for g in _parse_range(args.g_range)]
        return reports, 0
    raise UsageError("admissible requires one of --d, --g, --g-range")


def run_bound(args) -> tuple[object, int]:
    if args.g is not None:
        return irr_bound_certificate(args.g, args.n_max), 0
    if args.g_range is not None:
        certs = [irr_bound_certificate(g, args.n_max) for g in _parse_range(args.g_range)]
        return certs, 0
    raise UsageError("bound requires --g or --g-range")


def run_growth(args) -> tuple[object, int]:
    if args.subcommand == "sandwich":
        report = sandwich_check(args.k, (args.m_min, args.m_max))
        return report, 0 if report.passed else 1
    raw = sys.stdin.read() if args.series_file is None else open(args.series_file).read()
    series = [(Fraction(str(i)), float(v)) for i, v in json.loads(raw)]
    slope = growth_exponent_estimate(series)
    return {"count": len(series), "slope": slope}, 0


def _jsonable(obj):
    return obj.to_jsonable() if hasattr(obj, "to_jsonable") else obj


def _render(payload, args) -> str:
    if args.format == "csv":
        items = payload if isinstance(payload, list) else [payload]
        if not all(hasattr(x, "rows") for x in items):
            raise UsageError("csv output is only available for flat reports (admissible, growth sandwich)")
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(("input", "clause", "pass"))
        for item in items:
            for row in item.rows():
                writer.writerow(row)
        return buf.getvalue()
    if isinstance(payload, list):
        body = "\n".join(json.dumps(_jsonable(x), sort_keys=False) for x in payload)
    else:
        body = json.dumps(_jsonable(payload), indent=2, sort_keys=False)
    if args.meta:
        envelope = {
            "payload": json.loads(body) if not isinstance(payload, list) else [json.loads(l) for l in body.splitlines()],
            "meta": {
                "tool": "heegnerlab",
                "version": __version__,
                "generated_at": datetime.now(timezone.utc).isoformat(),
            },
        }
        body = json.dumps(envelope, indent=2, sort_keys=False)
    return body + "\n"


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "lattice": run_lattice_info,
        "weil": run_weil_check,
        "heegner": run_heegner,
        "embed": run_embed,
        "admissible": run_admissible,
        "bound": run_bound,
        "growth": run_growth,
    }
    try:
        payload, code = handlers[args.command](args)
        text = _render(payload, args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
