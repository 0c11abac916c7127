"""Command-line entry point: run, verify, transpile, render, catalog.

Exit codes: 0 success, 1 verification or construction failure, 2 usage error.
Results go to standard output; diagnostics to standard error.
"""

import argparse
import json
import os
import sys
import time

from .geom import GeometryError, Point
from .program import dsl
from .program import executor as X
from .program.ir import CatalogError, count_steps
from .program.render import EmptyTrace, render_svg


def _binding(text):
    name, sep, coords = text.partition("=")
    parts = coords.split(",")
    if not sep or not name or len(parts) != 2:
        raise argparse.ArgumentTypeError(f"expected NAME=X,Y, got {text!r}")
    try:
        return name.strip(), Point(float(parts[0]), float(parts[1]))
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad coordinates in {text!r}") from None


def _load(path):
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    return dsl.parse(text, ruler=path.endswith(".edc-rc"))


def _tol():
    v = os.environ.get("EDC_TOL")
    return float(v) if v else 1e-9


def _fmt(v):
    return repr(float(v))


def cmd_run(args, out):
    prog = _load(args.file)
    trace = X.execute(prog, dict(args.bind or []))
    for name, v in trace.points().items():
        if not name.startswith("_"):
            out.write(f"{name} = ({_fmt(v.x)}, {_fmt(v.y)})\n")
    return 0


def cmd_render(args, out):
    prog = _load(args.file)
    trace = X.execute(prog, dict(args.bind or []))
    data = render_svg(trace)
    with open(args.output, "wb") as fh:
        fh.write(data)
    return 0


def cmd_transpile(args, out):
    from .transpiler import compile as compile_rc
    prog = _load(args.file)
    cp = compile_rc(prog, dict(args.bind or []))
    text = dsl.format(cp)
    if args.output == "-":
        out.write(text)
    else:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    before = prog.ruler_step_count()
    after = count_steps(cp.steps).as_dict()
    print(f"ruler steps {before} -> 0; compass steps {len(prog.steps) - before} -> "
          f"{after['circles'] + after['intersections']}", file=sys.stderr)
    return 0


def cmd_verify(args, out):
    from . import verify as V
    t0 = time.perf_counter()
    reports, summary = V.verify_all(args.n, args.seed, args.tol, _tol(), args.jobs, args.prop)
    for r in reports:
        out.write(r.record() + "\n")
    for line in V.table(reports, summary):
        out.write(line + "\n")
    print(f"verified {len(reports)} reports in {time.perf_counter() - t0:.1f} s",
          file=sys.stderr)
    return 0 if summary["ok"] else 1


def cmd_catalog(args, out):
    from .propositions import catalog as C
    for e in C.entries():
        rec = {"id": e.id, "title": e.title, "inputs": list(e.inputs),
               "outputs": list(e.outputs), "variants": list(e.variants),
               "status": e.status, "reconstructed": e.reconstructed}
        if e.reason:
            rec["reason"] = e.reason
        if e.unsupported_variants:
            rec["unsupported_variants"] = {str(k): v for k, v in e.unsupported_variants.items()}
        if e.status != C.UNSUPPORTED:
            pts, hints = e.reference()
            rec["step_metrics"] = {}
            for v in e.variants:
                if v in e.unsupported_variants:
                    continue
                b, _ = C.construct(f"{e.id}.{v}", pts, hints)
                rec["step_metrics"][str(v)] = count_steps(b.steps).as_dict()
        out.write(json.dumps(rec, sort_keys=True) + "\n")
    return 0


def build_parser():
    p = argparse.ArgumentParser(prog="edc", description="Compass-only construction engine.")
    sub = p.add_subparsers(dest="command", required=True)

    r = sub.add_parser("run", help="execute a program and print its named points")
    r.add_argument("file")
    r.add_argument("--bind", action="append", type=_binding, metavar="NAME=X,Y")
    r.set_defaults(fn=cmd_run)

    v = sub.add_parser("verify", help="check catalog entries against their oracles")
    v.add_argument("--prop", action="append", metavar="ID",
                   help="proposition id such as P1.15 or P1.15.2 (repeatable); "
                        "'transpiler' runs the differential suite")
    v.add_argument("--n", type=int, default=1000)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--tol", type=float, default=1e-6, help="relative error threshold")
    v.add_argument("--jobs", type=int, default=None, help="worker processes (default: cores)")
    v.set_defaults(fn=cmd_verify)

    t = sub.add_parser("transpile", help="compile a ruler program (.edc-rc) to compass steps")
    t.add_argument("file")
    t.add_argument("-o", "--output", required=True)
    t.add_argument("--bind", action="append", type=_binding, metavar="NAME=X,Y")
    t.set_defaults(fn=cmd_transpile)

    s = sub.add_parser("render", help="execute a program and draw it as SVG")
    s.add_argument("file")
    s.add_argument("-o", "--output", required=True)
    s.add_argument("--bind", action="append", type=_binding, metavar="NAME=X,Y")
    s.set_defaults(fn=cmd_render)

    c = sub.add_parser("catalog", help="list all propositions as JSON lines")
    c.set_defaults(fn=cmd_catalog)
    return p


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    if args.command == "verify" and args.n < 1:
        print("edc: --n must be positive", file=sys.stderr)
        return 2
    try:
        return args.fn(args, sys.stdout)
    except (OSError, dsl.DslError) as e:
        print(f"edc: {e}", file=sys.stderr)
        return 2
    except (GeometryError, X.StepError, X.UnboundInput, X.AssertionFailed, CatalogError,
            EmptyTrace, ValueError) as e:
        print(f"edc: {type(e).__name__}: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
