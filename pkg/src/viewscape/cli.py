"""Command-line interface.

Three subcommands:

* ``evaluate`` — select the view for one viewport and report constraint results
* ``landscape`` — rasterize the view landscape to PNG, SVG, or JSON, optionally
  diffing against a baseline JSON landscape
* ``serve`` — run the HTTP service

Exit codes: 0 success, 1 diff tolerance exceeded, 2 validation error,
3 I/O error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from .core import Viewport
from .data import DataError
from .datasets import load_dataset_file
from .jsonio import canonical_json
from .landscape import (
    compute_landscape,
    diff_landscape,
    landscape_from_dict,
    landscape_to_dict,
)
from .render import render_landscape
from .selector import SelectionError, select_view
from .spec import LandscapeRegion, SpecError, parse_spec, validate_spec

EXIT_OK = 0
EXIT_DIFF = 1
EXIT_VALIDATION = 2
EXIT_IO = 3

_MODES = {"full": "full_scan", "fast": "monotone_fast"}


class _CliError(Exception):
    def __init__(self, message, code):
        super().__init__(message)
        self.code = code


def _load_inputs(spec_path: str, data_path: str):
    try:
        spec_text = Path(spec_path).read_text(encoding="utf-8")
    except OSError as e:
        raise _CliError(f"cannot read spec: {e}", EXIT_IO) from e
    try:
        spec = parse_spec(spec_text)
    except SpecError as e:
        raise _CliError(str(e), EXIT_VALIDATION) from e
    try:
        data = load_dataset_file(data_path)
    except OSError as e:
        raise _CliError(f"cannot read data: {e}", EXIT_IO) from e
    except DataError as e:
        raise _CliError(str(e), EXIT_VALIDATION) from e
    errors = [d for d in validate_spec(spec, data) if d.severity == "error"]
    if errors:
        lines = "; ".join(f"{d.view_id}: {d.message}" for d in errors)
        raise _CliError(f"spec does not match dataset: {lines}", EXIT_VALIDATION)
    return spec, data


def _cmd_evaluate(args) -> int:
    spec, data = _load_inputs(args.spec, args.data)
    try:
        sel = select_view(spec, data, Viewport(float(args.width), float(args.height)),
                          evaluate_all=args.evaluate_all)
    except SelectionError as e:
        raise _CliError(str(e), EXIT_VALIDATION) from e
    if args.json:
        print(canonical_json(sel.to_dict()))
    else:
        tag = " (fallback)" if sel.fallback_used else ""
        print(f"selected: {sel.selected_view_id}{tag}")
        for vid, r in sel.results:
            status = "pass" if r.passed else "FAIL"
            print(f"  {vid:<24} {r.kind.value:<24} {status}  "
                  f"measured={r.measured:.6g} threshold={r.threshold:.6g}")
    return EXIT_OK


def _cmd_landscape(args) -> int:
    spec, data = _load_inputs(args.spec, args.data)
    region = spec.landscape_region
    if args.step is not None:
        region = LandscapeRegion(region.w_min, region.w_max, region.h_min,
                                 region.h_max, float(args.step))
    land = compute_landscape(spec, data, region=region, mode=_MODES[args.mode])

    out = Path(args.out)
    try:
        if args.format == "json":
            out.write_text(canonical_json(landscape_to_dict(land)) + "\n", encoding="utf-8")
        else:
            out.write_bytes(render_landscape(land, format=args.format))
    except OSError as e:
        raise _CliError(f"cannot write output: {e}", EXIT_IO) from e

    if args.diff is None:
        return EXIT_OK
    try:
        baseline = landscape_from_dict(json.loads(Path(args.diff).read_text(encoding="utf-8")))
    except OSError as e:
        raise _CliError(f"cannot read baseline: {e}", EXIT_IO) from e
    except (ValueError, KeyError) as e:
        raise _CliError(f"invalid baseline landscape: {e}", EXIT_VALIDATION) from e
    try:
        report = diff_landscape(baseline, land)
    except ValueError as e:
        raise _CliError(str(e), EXIT_VALIDATION) from e
    diff_out = out.with_name(out.name + ".diff.json")
    diff_out.write_text(canonical_json(report.to_dict()) + "\n", encoding="utf-8")
    print(f"changed_fraction: {report.changed_fraction:.6g}")
    if report.changed_fraction > args.tolerance:
        print(f"diff exceeds tolerance {args.tolerance:g}", file=sys.stderr)
        return EXIT_DIFF
    return EXIT_OK


def _cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app

    spec, data = _load_inputs(args.spec, args.data)
    app = create_app(spec, data, spec_path=args.spec, data_path=args.data,
                     watch=args.watch)
    uvicorn.run(app, host=args.host, port=args.port, log_level="warning")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="viewscape",
                                description="Constraint-driven responsive view selection")
    sub = p.add_subparsers(dest="command", required=True)

    ev = sub.add_parser("evaluate", help="select the view for one viewport")
    ev.add_argument("--spec", required=True)
    ev.add_argument("--data", required=True)
    ev.add_argument("--width", required=True, type=float)
    ev.add_argument("--height", required=True, type=float)
    ev.add_argument("--evaluate-all", action="store_true",
                    help="report every constraint of every view")
    ev.add_argument("--json", action="store_true", help="print Selection JSON")
    ev.set_defaults(func=_cmd_evaluate)

    ls = sub.add_parser("landscape", help="rasterize the view landscape")
    ls.add_argument("--spec", required=True)
    ls.add_argument("--data", required=True)
    ls.add_argument("--out", required=True)
    ls.add_argument("--format", choices=("png", "svg", "json"), default="png")
    ls.add_argument("--step", type=float, default=None)
    ls.add_argument("--mode", choices=("full", "fast"), default="fast")
    ls.add_argument("--diff", default=None, metavar="BASELINE",
                    help="baseline landscape JSON to diff against")
    ls.add_argument("--tolerance", type=float, default=0.0,
                    help="max changed_fraction before exit 1")
    ls.set_defaults(func=_cmd_landscape)

    sv = sub.add_parser("serve", help="run the HTTP service")
    sv.add_argument("--spec", required=True)
    sv.add_argument("--data", required=True)
    sv.add_argument("--host", default="127.0.0.1")
    sv.add_argument("--port", type=int,
                    default=int(os.environ.get("VIEWSCAPE_PORT", "8000")))
    sv.add_argument("--watch", action="store_true",
                    help="reload spec/data when the files change")
    sv.set_defaults(func=_cmd_serve)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except _CliError as e:
        print(f"error: {e}", file=sys.stderr)
        return e.code


if __name__ == "__main__":
    sys.exit(main())
