"""Command-line front end: ``sulva construct|run|report|units|triples|ops``.

Exit status is 0 on success, 1 for usage errors (bad flags, unknown names,
malformed scripts) and 2 when a construction itself fails.

``SULVA_PRECISION`` sets the default number of significant digits printed
by ``construct`` and ``run``, and is read once per invocation.
"""
from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path
from typing import Optional, Sequence

from . import analysis
from .constructions import triple_catalog
from .errors import (ArityMismatch, ConstructionError, ScriptError, ScriptRuntimeError,
                     SulvaError, UnknownUnit)
from .registry import REGISTRY, describe
from .render import RenderSpec, render_svg
from .scalar import parse_scalar
from .script import parse_script, run_script
from .units import quantity, unit_convert

PRECISION_ENV = "SULVA_PRECISION"
DEFAULT_DIGITS = 7

EXIT_OK, EXIT_USAGE, EXIT_CONSTRUCTION = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _default_digits() -> int:
    raw = os.environ.get(PRECISION_ENV)
    if raw is None or raw == "":
        return DEFAULT_DIGITS
    try:
        value = int(raw)
    except ValueError:
        raise UsageError(f"{PRECISION_ENV} must be a positive integer, got {raw!r}") from None
    if value < 1:
        raise UsageError(f"{PRECISION_ENV} must be a positive integer, got {raw!r}")
    return value


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    return value


def build_parser(digits: int) -> argparse.ArgumentParser:
    p = _Parser(prog="sulva", description="Exact cord-and-peg constructions and error reports.")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    c = sub.add_parser("construct", help="run one registered operation",
                       description="Run one operation; pass its parameters as --name value.")
    c.add_argument("name")
    c.add_argument("--svg", type=Path, help="write a drawing of the construction")
    c.add_argument("--trace", type=Path, help="write the step trace as JSON")
    c.add_argument("--precision", type=_positive_int, default=digits)

    r = sub.add_parser("run", help="run a script file")
    r.add_argument("script", type=Path)
    r.add_argument("--svg-dir", type=Path)
    r.add_argument("--precision", type=_positive_int, default=digits)

    rep = sub.add_parser("report", help="error table for the built-in approximations")
    rep.add_argument("--format", choices=("text", "json", "csv"), default="text")
    rep.add_argument("--precision", type=_positive_int, default=analysis.DEFAULT_PRECISION)

    u = sub.add_parser("units", help="length units")
    usub = u.add_subparsers(dest="units_command", parser_class=_Parser)
    usub.required = True
    conv = usub.add_parser("convert", help="convert a length")
    conv.add_argument("quantity")
    conv.add_argument("source")
    conv.add_argument("target")
    usub.add_parser("list", help="list known units")

    t = sub.add_parser("triples", help="primitive triples with attestation")
    t.add_argument("--limit", type=_positive_int, default=100)

    sub.add_parser("ops", help="list registered operations")
    return p


def _construct_source(name: str, extras: Sequence[str]) -> str:
    op = REGISTRY.get(name)
    if op is None:
        raise UsageError(f"unknown operation {name!r}; see 'sulva ops'")
    args = []
    i = 0
    while i < len(extras):
        flag = extras[i]
        if not flag.startswith("--") or len(flag) == 2:
            raise UsageError(f"unexpected argument {flag!r}")
        key = flag[2:]
        if "=" in key:
            key, value = key.split("=", 1)
            i += 1
        else:
            if i + 1 >= len(extras):
                raise UsageError(f"missing value for {flag}")
            value = extras[i + 1]
            i += 2
        key = key.replace("-", "_")
        param = op.param(key)
        if param is None:
            raise UsageError(f"{name} has no parameter {key!r}")
        if param.kind in ("text", "method") and not value.startswith('"'):
            if '"' in value or "\n" in value:
                raise UsageError(f"bad value for {flag}")
            value = f'"{value}"'
        args.append(f"{key}: {value}")
    return f"let result = {name}({', '.join(args)})\n"


def _cmd_construct(ns, extras, out) -> int:
    source = _construct_source(ns.name, extras)
    result = run_script(parse_script(source), ns.precision)
    res = result.environment["result"]
    for line in describe(ns.name, res, ns.precision):
        print(line, file=out)
    if (ns.svg or ns.trace) and res.trace is None:
        raise UsageError(f"{ns.name} has no figure to draw or trace")
    if ns.svg:
        ns.svg.write_text(render_svg([res.trace], RenderSpec(precision=ns.precision)),
                          encoding="utf-8")
    if ns.trace:
        ns.trace.write_text(res.trace.to_json(ns.precision) + "\n", encoding="utf-8")
    return EXIT_OK


def svg_outputs(script, result, precision: int) -> dict:
    """File name -> SVG text for each render directive of a finished script.

    Without render directives every binding that has a figure is drawn on
    its own.
    """
    groups = [st.names for st in script.renders]
    if not groups:
        groups = [(name,) for name, _ in result.traces]
    files = {}
    spec = RenderSpec(precision=precision)
    for names in groups:
        traces = [result.environment[n].trace for n in names]
        if any(t is None for t in traces):
            bad = [n for n, t in zip(names, traces) if t is None]
            raise ArityMismatch(f"nothing to draw for {', '.join(bad)}")
        files["_".join(names) + ".svg"] = render_svg(traces, spec)
    return files


def _cmd_run(ns, out) -> int:
    try:
        source = ns.script.read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read {ns.script}: {exc.strerror}") from None
    script = parse_script(source)
    result = run_script(script, ns.precision)
    lines = result.reports
    if not script.reports:
        lines = [line for name, res in result.environment.items()
                 for line in describe(name, res, ns.precision)]
    for line in lines:
        print(line, file=out)
    if ns.svg_dir:
        files = svg_outputs(script, result, ns.precision)
        ns.svg_dir.mkdir(parents=True, exist_ok=True)
        for fname, text in files.items():
            (ns.svg_dir / fname).write_text(text, encoding="utf-8")
    return EXIT_OK


def _cmd_report(ns, out) -> int:
    records = analysis.builtin_catalog() + analysis.comparison_records()
    out.write(analysis.emit_error_table(records, ns.precision, ns.format))
    return EXIT_OK


def _cmd_units(ns, out) -> int:
    from .units import DEFAULT_TABLE
    if ns.units_command == "list":
        for u in DEFAULT_TABLE:
            tags = ",".join(sorted(u.attested_in)) or "-"
            print(f"{u.name}\t{u.display}\t{u.ratio_to_angula}\t{tags}", file=out)
        return EXIT_OK
    try:
        magnitude = parse_scalar(ns.quantity)
        q = quantity(magnitude, ns.source)
        print(unit_convert(q, ns.target), file=out)
    except (UnknownUnit, ScriptError) as exc:
        raise UsageError(str(exc)) from None
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    return EXIT_OK


def _cmd_triples(ns, out) -> int:
    tags = {t.as_tuple(): t.attested_in for t in triple_catalog()}
    for t in analysis.generate_triples(ns.limit):
        attested = ",".join(sorted(tags.get(t.as_tuple(), ()))) or "-"
        print(f"{t.a} {t.b} {t.c}\t{attested}", file=out)
    return EXIT_OK


def _cmd_ops(out) -> int:
    for name in sorted(REGISTRY):
        op = REGISTRY[name]
        params = ", ".join(p.name if p.required else f"{p.name}?" for p in op.params)
        print(f"{name}({params})\t{op.summary}", file=out)
    return EXIT_OK


def cli_main(argv: Optional[Sequence[str]] = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        parser = build_parser(_default_digits())
        ns, extras = parser.parse_known_args(argv)
        if extras and ns.command != "construct":
            raise UsageError(f"unrecognized arguments: {' '.join(extras)}")
        if ns.command == "construct":
            return _cmd_construct(ns, extras, out)
        if ns.command == "run":
            return _cmd_run(ns, out)
        if ns.command == "report":
            return _cmd_report(ns, out)
        if ns.command == "units":
            return _cmd_units(ns, out)
        if ns.command == "triples":
            return _cmd_triples(ns, out)
        return _cmd_ops(out)
    except UsageError as exc:
        print(f"error: {exc}", file=err)
        return EXIT_USAGE
    except ScriptRuntimeError as exc:
        print(f"error: {exc}", file=err)
        return EXIT_CONSTRUCTION
    except ScriptError as exc:
        print(f"error: {exc}", file=err)
        return EXIT_USAGE
    except (ConstructionError, SulvaError, ValueError, ArithmeticError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=err)
        return EXIT_CONSTRUCTION


def main() -> None:
    sys.exit(cli_main())


if __name__ == "__main__":
    main()
