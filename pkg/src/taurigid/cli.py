"""Batch command-line front end.

Subcommands: model, enumerate, classify, delta, verify, algebra, report.
All output is byte-deterministic for fixed flags.  Exit status: 0 on
success (and on a fully passing verify run), 1 when verification finds
counterexamples, 2 on usage errors (bad flags, malformed objects,
unsupported rank, a non-tilting --T).
"""

from __future__ import annotations

import argparse
import json
import sys

from . import algebra as alg
from . import bridge, cyclic
from .cyclic import ModelError


def _add_common(p: argparse.ArgumentParser, with_T: bool = False, with_out: bool = True):
    p.add_argument("--n", type=int, required=True, help="type-A rank")
    p.add_argument("--d", type=int, required=True, help="dimension")
    p.add_argument("--format", choices=("tsv", "json"), default="tsv")
    if with_out:
        p.add_argument("--out", help="write output to this path instead of stdout")
    if with_T:
        p.add_argument("--T", default="canonical",
                       help='tilting object, e.g. "1357+1358+1368+1468" (default: canonical)')


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="taurigid")
    sub = p.add_subparsers(dest="command", required=True)

    _add_common(sub.add_parser("model", help="print the object list and crossing table"))
    _add_common(sub.add_parser("enumerate", help="print maximal rigid objects with flags"))

    cls = sub.add_parser("classify", help="classification flags of one object sum")
    _add_common(cls)
    cls.add_argument("--object", required=True, help='object sum, e.g. "1357+1468"')

    dlt = sub.add_parser("delta", help="object-to-pair table, or one pair with --object")
    _add_common(dlt, with_T=True)
    dlt.add_argument("--object", help="single object sum to map")

    ver = sub.add_parser("verify", help="run the verification suite")
    _add_common(ver, with_T=True)
    ver.add_argument("--check", default="all", help="check id or 'all'")
    ver.add_argument("--seed", type=int, default=0, help="seed for the sampled checks")

    _add_common(sub.add_parser("algebra", help="print the module catalog of the context algebra"))

    rep = sub.add_parser("report", help="write tables and figures to a directory")
    _add_common(rep, with_T=True, with_out=False)
    rep.add_argument("--out", required=True,
                     help="output directory for tables and figures")

    return p


def _emit(text: str, out: str | None):
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _context(model, t_text: str):
    if t_text == "canonical":
        return bridge.build_context(model, bridge.canonical_T(model))
    return bridge.build_context(model, cyclic.parse_sum(t_text, model.m))


def _cmd_model(args) -> int:
    model = cyclic.build_model(args.n, args.d)
    if args.format == "json":
        _emit(cyclic.model_to_json(model) + "\n", args.out)
    else:
        from . import report
        _emit(report.objects_tsv(model), args.out)
    return 0


def _cmd_enumerate(args) -> int:
    model = cyclic.build_model(args.n, args.d)
    if args.format == "json":
        rows = []
        for s in cyclic.enumerate_maximal_rigid(model):
            f = cyclic.classify(model, s)
            rows.append({
                "object": cyclic.format_sum(s, model.m),
                "rigid": f.rigid,
                "maximal_rigid": f.maximal_rigid,
                "self_perpendicular": f.self_perpendicular,
                "cluster_tilting_by_cardinality": f.cluster_tilting,
            })
        _emit(json.dumps({"schema": "taurigid.enumerate", "version": 1, "rows": rows},
                         indent=2, sort_keys=True) + "\n", args.out)
    else:
        from . import report
        _emit(report.maximal_rigid_tsv(model), args.out)
    return 0


def _cmd_classify(args) -> int:
    model = cyclic.build_model(args.n, args.d)
    s = cyclic.parse_sum(args.object, model.m)
    f = cyclic.classify(model, s)
    payload = {
        "object": cyclic.format_sum(s, model.m),
        "rigid": f.rigid,
        "maximal_rigid": f.maximal_rigid,
        "self_perpendicular": f.self_perpendicular,
        "cluster_tilting_by_cardinality": f.cluster_tilting,
    }
    if args.format == "json":
        _emit(json.dumps({"schema": "taurigid.classify", "version": 1, **payload},
                         indent=2, sort_keys=True) + "\n", args.out)
    else:
        lines = [f"{k}\t{str(v).lower() if isinstance(v, bool) else v}" for k, v in payload.items()]
        _emit("\n".join(lines) + "\n", args.out)
    return 0


def _cmd_delta(args) -> int:
    model = cyclic.build_model(args.n, args.d)
    ctx = _context(model, args.T)
    if args.object is not None:
        pair = bridge.delta(ctx, cyclic.parse_sum(args.object, model.m))
        if args.format == "json":
            doc = {
                "schema": "taurigid.delta", "version": 1,
                "object": args.object,
                "module_part": list(pair.m_part.entries),
                "projective_part": list(pair.p_part.entries),
            }
            _emit(json.dumps(doc, indent=2, sort_keys=True) + "\n", args.out)
        else:
            _emit(bridge.format_pair(ctx, pair) + "\n", args.out)
        return 0
    if args.format == "json":
        rows = [
            {
                "object": cyclic.format_sum(X, model.m),
                "module_part": list(pair.m_part.entries),
                "projective_part": list(pair.p_part.entries),
            }
            for X, pair in bridge.delta_table(ctx)
        ]
        _emit(json.dumps({"schema": "taurigid.delta", "version": 1, "rows": rows},
                         indent=2, sort_keys=True) + "\n", args.out)
    else:
        from . import report
        _emit(report.delta_table_tsv(ctx), args.out)
    return 0


def _cmd_verify(args) -> int:
    model = cyclic.build_model(args.n, args.d)
    ctx = _context(model, args.T)
    reports = bridge.verify(ctx, args.check, seed=args.seed)
    if not isinstance(reports, list):
        reports = [reports]
    if args.format == "json":
        doc = {
            "schema": "taurigid.verify",
            "version": 1,
            "params": {"n": model.n, "d": model.d, "seed": args.seed},
            "T": cyclic.format_sum(ctx.T, model.m),
            "checks": [
                {
                    "check": r.check,
                    "status": "pass" if r.passed else "fail",
                    "checked": r.checked,
                    "counterexamples": r.counterexamples,
                }
                for r in reports
            ],
        }
        _emit(json.dumps(doc, indent=2, sort_keys=True) + "\n", args.out)
    else:
        lines = [
            f"{r.check}\t{'pass' if r.passed else 'fail'}\t{r.checked}" for r in reports
        ]
        _emit("\n".join(lines) + "\n", args.out)
    failed = [r for r in reports if not r.passed]
    for r in failed:
        for c in r.counterexamples:
            print(f"{r.check}: {c}", file=sys.stderr)
    return 1 if failed else 0


def _cmd_algebra(args) -> int:
    model = cyclic.build_model(args.n, args.d)
    gamma = alg.build_linear_radsq(model.d + 1)
    rows = []
    for name in gamma.catalog_names():
        mod = gamma.catalog_module(name)
        tau = alg.decompose(alg.tau_d(mod, model.d))
        tau_names = sorted(tau.elements(), key=gamma.catalog_sort_key)
        rows.append((name, mod.dims, tau_names))
    if args.format == "json":
        doc = {
            "schema": "taurigid.algebra",
            "version": 1,
            "vertices": gamma.nvert,
            "dimension": gamma.dimension,
            "catalog": [
                {"name": n, "dims": list(d), "tau_d": t} for n, d, t in rows
            ],
        }
        _emit(json.dumps(doc, indent=2, sort_keys=True) + "\n", args.out)
    else:
        lines = [f"vertices\t{gamma.nvert}", f"dimension\t{gamma.dimension}",
                 f"entry\tdims\ttau{model.d}"]
        for n, d, t in rows:
            lines.append(f"{n}\t{','.join(map(str, d))}\t{'+'.join(t) if t else '0'}")
        _emit("\n".join(lines) + "\n", args.out)
    return 0


def _cmd_report(args) -> int:
    from . import report as report_mod
    model = cyclic.build_model(args.n, args.d)
    T = None
    if model.n == 2:
        T = bridge.canonical_T(model) if args.T == "canonical" else cyclic.parse_sum(args.T, model.m)
    written = report_mod.write_report(model, args.out, T=T)
    for p in written:
        print(f"wrote {p}")
    return 0


_COMMANDS = {
    "model": _cmd_model,
    "enumerate": _cmd_enumerate,
    "classify": _cmd_classify,
    "delta": _cmd_delta,
    "verify": _cmd_verify,
    "algebra": _cmd_algebra,
    "report": _cmd_report,
}


def run(argv=None) -> int:
    args = _parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except (ModelError, bridge.BridgeError, alg.AlgebraError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main(argv=None) -> int:
    return run(argv)


if __name__ == "__main__":
    sys.exit(main())
