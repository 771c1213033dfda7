"""The ``lgw`` command line.

Output is compact JSON on stdout with rationals as strings.  Failures print
``{"error": code, "detail": ...}`` on stderr and exit with 1 (computation)
or 2 (usage / bad input).
"""
from __future__ import annotations

import argparse
import contextlib
import io
import json
import logging
import sys
from fractions import Fraction
from pathlib import Path

from . import acceptance, chow, degeneration, scattering, svg, toric, tropical

EXIT_OK, EXIT_COMPUTE, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    def __init__(self, code: str, detail):
        super().__init__(detail)
        self.code = code
        self.detail = detail


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError("usage", message)


def _dump(obj) -> str:
    return json.dumps(obj, separators=(",", ":"), sort_keys=False)


def _frac(x: Fraction) -> str:
    return str(Fraction(x))


def _read_json(path: str, what: str):
    try:
        text = sys.stdin.read() if path == "-" else Path(path).read_text()
        return json.loads(text)
    except OSError as exc:
        raise UsageError("io", f"cannot read {what} {path!r}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise UsageError("bad_json", f"{what} {path!r}: {exc}") from exc


def _parse_input(builder, obj, what: str):
    try:
        return builder(obj)
    except (KeyError, TypeError, ValueError, IndexError) as exc:
        raise UsageError("bad_input", f"invalid {what}: {exc!r}") from exc


def _write(path: str | None, text: str):
    if path is None:
        return
    try:
        Path(path).write_text(text)
    except OSError as exc:
        raise UsageError("io", f"cannot write {path!r}: {exc.strerror}") from exc


def _positive(name):
    def conv(s):
        try:
            v = int(s)
        except ValueError:
            raise argparse.ArgumentTypeError(f"{name} must be an integer, got {s!r}") from None
        if v < 1:
            raise argparse.ArgumentTypeError(f"{name} must be at least 1, got {v}")
        return v
    return conv


def _int_list(s: str) -> list[int]:
    try:
        return [int(x) for x in s.replace(" ", "").split(",") if x]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {s!r}") from None


# -- commands ---------------------------------------------------------------------

def cmd_scatter(args) -> object:
    obj = _read_json(args.input, "diagram")
    diagram = _parse_input(scattering.ScatteringDiagram.from_json, obj, "diagram")
    if diagram.has_duplicate_directions():
        raise UsageError("bad_input", "initial walls must have distinct directions")
    done = scattering.complete(diagram, args.order)
    out = done.to_json()
    out["consistent"] = scattering.loop_product(done).is_identity()
    text = _dump(out)
    if args.output:
        _write(args.output, text + "\n")
    _write(args.svg, svg.diagram_svg(done))
    return None if args.output else out


def cmd_toric_p2(args):
    if args.degree is not None:
        return {"d": args.degree, "N": _frac(tropical.count_p2_toric(args.degree, args.seed))}
    return [{"d": d, "N": _frac(tropical.count_p2_toric(d, args.seed))}
            for d in range(1, args.max_degree + 1)]


def cmd_line_conic(args):
    n_f2 = None
    out = []
    for d in range(1, args.max_degree + 1):
        if args.use_tropical:
            n_f2 = lambda m, d=d: tropical.count_f2(d, m, args.seed)  # noqa: E731
        out.append({"d": d, "N": _frac(degeneration.line_conic_invariant(d, n_f2))})
    return out


def cmd_nodal_cubic(args):
    inv = scattering.nodal_cubic_invariants(args.max_degree)
    return [{"d": d, "N": _frac(n)} for d, n in enumerate(inv, start=1)]


def _leaf(obj) -> tropical.Leaf:
    return tropical.Leaf(tuple(obj["dir"]), int(obj.get("w", 1)), bool(obj.get("fixed", False)))


def _curve_json(curve: tropical.TropicalCurve, mult: Fraction) -> dict:
    t = curve.type
    return {
        "multiplicity": _frac(mult),
        "vertices": {str(v): [_frac(c) for c in curve.positions[v]] for v in t.vertices},
        "edges": [
            {"ends": list(e), "weight": w,
             **({"leaf": min(e)} if t.is_leaf_edge(k) else {"length": _frac(curve.edge_length(k))})}
            for k, (e, w) in enumerate(zip(t.edges, t.weights))
        ],
        "point_edges": list(t.point_marks),
    }


def cmd_tropical_count(args):
    cfg = _read_json(args.config, "config")

    def build(cfg):
        leaves = tuple(_leaf(l) for l in cfg["leaves"])
        if "point_coords" in cfg:
            pts = tuple((Fraction(str(x)), Fraction(str(y))) for x, y in cfg["point_coords"])
            offsets = tuple(Fraction(str(c)) for c in cfg.get("line_offsets", ()))
            return tropical.DegreeData(leaves, pts, offsets), None
        return leaves, int(cfg["points"])

    a, b = _parse_input(build, cfg, "tropical config")
    if b is None:
        deg, curves = a, tropical.enumerate_curves(a)
    else:
        deg, curves = tropical.enumerate_generic(a, b, args.seed)
    total = sum((m for _, m in curves), Fraction(0))
    _write(args.svg, svg.curves_svg([c for c, _ in curves], deg.points))
    return {
        "total": _frac(total),
        "points": [[_frac(c) for c in p] for p in deg.points],
        "line_offsets": [_frac(c) for c in deg.line_offsets],
        "curves": [_curve_json(c, m) for c, m in curves],
    }


def _load_fan(args) -> toric.Fan:
    return _parse_input(toric.Fan.from_json, _read_json(args.fan, "fan"), "fan")


def _fan_out(args, f: toric.Fan) -> dict:
    _write(args.svg, svg.fan_svg(f))
    return {**f.to_json(), "self_intersections": toric.self_intersections(f)}


def cmd_fan(args):
    op = args.fan_command
    if op == "from-selfint":
        return _fan_out(args, toric.fan_from_self_intersections(args.values))
    f = _load_fan(args)
    if op == "selfint":
        _write(args.svg, svg.fan_svg(f))
        return {"self_intersections": toric.self_intersections(f)}
    if op == "blowup":
        return _fan_out(args, toric.blow_up(f, args.corner, args.label))
    if op == "blowdown":
        return _fan_out(args, toric.blow_down(f, args.ray))
    if op == "sl2":
        m = args.matrix
        if len(m) != 4:
            raise UsageError("usage", "--matrix takes four integers a,b,c,d")
        return _fan_out(args, toric.apply_sl2(f, ((m[0], m[1]), (m[2], m[3]))))
    raise UsageError("usage", f"unknown fan command {op!r}")


def _report(checks: dict) -> dict:
    return {name: {"computed": repr(got) if not isinstance(got, (int, bool)) else got,
                   "expected": repr(want) if not isinstance(want, (int, bool)) else want,
                   "pass": ok}
            for name, (got, want, ok) in checks.items()}


def cmd_chow_verify(args):
    rel = chow.chow_verify_blowup_plane()
    pre = chow.prelog_report()
    ok = all(c[2] for c in rel.values()) and all(c[2] for c in pre.values())
    return {"pass": ok, "relations": _report(rel), "prelog": _report(pre)}


def cmd_acceptance(args):
    results = acceptance.run_all(args.seed, args.order)
    if not args.quiet:
        for r in results:
            print(r.line(), file=sys.stderr)
    return {"pass": all(r.passed for r in results), "criteria": [r.to_json() for r in results]}


# -- parser -----------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="lgw", description="Log Gromov-Witten invariants of plane pairs.")
    p.add_argument("--seed", type=int, default=None,
                   help="genericity seed (default: $LGW_SEED or %d)" % tropical.DEFAULT_SEED)
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("scatter", help="complete a scattering diagram")
    s.add_argument("--input", required=True)
    s.add_argument("--order", type=_positive("order"), default=None)
    s.add_argument("--output")
    s.add_argument("--svg")
    s.set_defaults(func=cmd_scatter)

    inv = sub.add_parser("invariants").add_subparsers(dest="which", required=True,
                                                     parser_class=_Parser)
    t = inv.add_parser("toric-p2")
    g = t.add_mutually_exclusive_group(required=True)
    g.add_argument("--degree", type=_positive("degree"))
    g.add_argument("--max-degree", type=_positive("max-degree"))
    t.set_defaults(func=cmd_toric_p2)
    lc = inv.add_parser("line-conic")
    lc.add_argument("--max-degree", type=_positive("max-degree"), required=True)
    lc.add_argument("--use-tropical", action="store_true")
    lc.set_defaults(func=cmd_line_conic)
    nc = inv.add_parser("nodal-cubic")
    nc.add_argument("--max-degree", type=_positive("max-degree"), required=True)
    nc.set_defaults(func=cmd_nodal_cubic)

    tr = sub.add_parser("tropical").add_subparsers(dest="which", required=True,
                                                  parser_class=_Parser)
    c = tr.add_parser("count")
    c.add_argument("--config", required=True)
    c.add_argument("--svg")
    c.set_defaults(func=cmd_tropical_count)

    fan = sub.add_parser("fan").add_subparsers(dest="fan_command", required=True,
                                              parser_class=_Parser)
    for name in ("selfint", "blowup", "blowdown", "sl2"):
        fp = fan.add_parser(name)
        fp.add_argument("fan", help="fan JSON file, or - for stdin")
        fp.add_argument("--svg")
        fp.set_defaults(func=cmd_fan)
    fan.choices["blowup"].add_argument("--corner", type=int, required=True,
                                       help="blow up between rays corner and corner+1")
    fan.choices["blowup"].add_argument("--label", default="E")
    fan.choices["blowdown"].add_argument("--ray", type=int, required=True)
    fan.choices["sl2"].add_argument("--matrix", type=_int_list, required=True,
                                    help="a,b,c,d for the matrix ((a,b),(c,d))")
    fs = fan.add_parser("from-selfint")
    fs.add_argument("values", type=_int_list, help="comma-separated, e.g. 0,-2,0,2")
    fs.add_argument("--svg")
    fs.set_defaults(func=cmd_fan)

    ch = sub.add_parser("chow").add_subparsers(dest="which", required=True, parser_class=_Parser)
    ch.add_parser("verify").set_defaults(func=cmd_chow_verify)

    a = sub.add_parser("acceptance", help="run every acceptance criterion")
    a.add_argument("--order", type=_positive("order"), default=8)
    a.add_argument("--quiet", action="store_true")
    a.set_defaults(func=cmd_acceptance)
    return p


_COMPUTE_ERRORS = (
    scattering.ScatteringError, tropical.DegenerateConfiguration, tropical.BoundsExceeded,
    toric.FanError, ValueError, ArithmeticError,
)


def _error(code: str, detail) -> int:
    print(_dump({"error": code, "detail": str(detail)}), file=sys.stderr)
    return EXIT_USAGE if code in ("usage", "bad_json", "bad_input", "io") else EXIT_COMPUTE


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        return _error(exc.code, exc.detail)
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(name)s: %(message)s")
    if args.seed is None:
        args.seed = tropical.default_seed()
    try:
        result = args.func(args)
    except UsageError as exc:
        return _error(exc.code, exc.detail)
    except tropical.DegenerateConfiguration as exc:
        return _error("degenerate", exc)
    except tropical.BoundsExceeded as exc:
        return _error("bounds_exceeded", exc)
    except _COMPUTE_ERRORS as exc:
        return _error(type(exc).__name__, exc)
    if result is not None:
        print(_dump(result))
    if args.command == "acceptance" and not result["pass"]:
        return EXIT_COMPUTE
    return EXIT_OK


def run_capture(argv) -> tuple[int, str, str]:
    """Run ``main`` in-process, returning (exit code, stdout, stderr)."""
    out, err = io.StringIO(), io.StringIO()
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
        code = main(list(argv))
    return code, out.getvalue(), err.getvalue()


if __name__ == "__main__":
    sys.exit(main())
