"""CLI entrypoint for sympolar decompositions and channel operations.

Usage:
    python -m sympolar decompose X.json --variant ms [--factors-dir out/] [--jobs 4]
    python -m sympolar verify X.json --variant ms --factors X.0-M.json X.1-S.json
    python -m sympolar channel {validate,classify,normal-form} C.json
    python -m sympolar channel compose C2.json C1.json
    python -m sympolar generate symplectic --n 2 --seed 42

Exit codes: 0 ok, 1 I/O or parse failure, 2 violated precondition,
3 defective eigenstructure or non-convergence, 4 failed verification.
"""

import argparse
import json
import logging
import sys
from importlib.metadata import PackageNotFoundError, version
from pathlib import Path
from typing import Any, Optional, Sequence

from pydantic import BaseModel

from sympolar.analytics.report import (
    ReportDocument,
    classification_report,
    composition_report,
    factorization_report,
    normal_form_report,
    stamp,
    validity_report,
)
from sympolar.batch import decompose_batch, exit_code_for, run_operation
from sympolar.channels.gaussian import classify_channel, compose, normal_form, validate_channel
from sympolar.configuration import RunSettings, choices, iter_definition_dicts, load_settings_from_json
from sympolar.core.enums import ChannelCase, GeneratorKind, Variant
from sympolar.core.logging import configure_logging, log_report
from sympolar.data.documents import MatrixFile, dump_document, load_matrix_file
from sympolar.data.generators import generate
from sympolar.decompositions.polar import factorization_from_factors, verify
from sympolar.errors import SympolarError

logger = logging.getLogger("sympolar.cli")

try:
    _SYMPOLAR_VERSION = version("sympolar")
except PackageNotFoundError:
    _SYMPOLAR_VERSION = "0.0.0"

_CASE_ALIASES = {
    "auto": ChannelCase.AUTO,
    "dr": ChannelCase.DR_FORM,
    "a": ChannelCase.A_FORM,
    "da": ChannelCase.DA_FORM,
}


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _cmd_decompose(args: argparse.Namespace, settings: RunSettings) -> list[ReportDocument]:
    variant = Variant(args.variant.upper()).value
    return decompose_batch(
        [str(path) for path in args.inputs],
        variant,
        settings.tolerance,
        jobs=settings.jobs,
        factors_dir=None if args.factors_dir is None else str(args.factors_dir),
    )


def _cmd_verify(args: argparse.Namespace, settings: RunSettings) -> list[ReportDocument]:
    tol = settings.tolerance
    variant = Variant(args.variant.upper()).value

    def body() -> ReportDocument:
        X = load_matrix_file(args.input).matrix()
        factors = [load_matrix_file(path).matrix() for path in args.factors]
        report = verify(X, factorization_from_factors(variant, factors), tol)
        return factorization_report("verify", report, variant, tol, input=str(args.input))

    return [run_operation("verify", tol, body, input=str(args.input), variant=variant)]


def _cmd_channel(args: argparse.Namespace, settings: RunSettings) -> list[ReportDocument]:
    tol = settings.tolerance
    operation = f"channel {args.channel_command}"
    inputs = [str(path) for path in args.inputs]
    label = ", ".join(inputs)

    def body() -> ReportDocument:
        documents = [load_matrix_file(path) for path in inputs]
        if args.channel_command == "classify":
            return classification_report(classify_channel(documents[0].matrix(), tol), tol, input=label)
        channels = [document.channel() for document in documents]
        if args.channel_command == "validate":
            return validity_report(validate_channel(channels[0], tol), tol, input=label)
        if args.channel_command == "compose":
            return composition_report(compose(channels[0], channels[1]), tol, inputs=inputs)
        form = normal_form(channels[0], _CASE_ALIASES[args.case], tol)
        return normal_form_report(form, tol, input=label)

    return [run_operation(operation, tol, body, input=label)]


def _cmd_generate(args: argparse.Namespace) -> tuple[str, int]:
    kind = GeneratorKind(args.kind)
    instance = generate(kind, args.n, args.seed)
    metadata = {"label": f"{kind.value} n={args.n} seed={args.seed}", "kind": kind.value, "seed": args.seed}
    if kind is GeneratorKind.VALID_CHANNEL:
        document = MatrixFile.from_channel(instance, **metadata)  # type: ignore[arg-type]
    else:
        document = MatrixFile.from_matrix(instance, **metadata)  # type: ignore[arg-type]
    return dump_document(document), 0


def _emit(text: str, out: Optional[Path]) -> None:
    if out is None:
        sys.stdout.write(text)
        return
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text(text, encoding="utf-8")


def _render(reports: Sequence[BaseModel], *, batch: bool) -> str:
    payload: Any = [r.model_dump(exclude_none=True) for r in reports]
    if not batch:
        payload = payload[0]
    return json.dumps(payload, indent=2) + "\n"


def build_parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(
        prog="sympolar",
        description="Symplectic polar decompositions and Gaussian channel canonical forms.",
    )
    parser.add_argument("--config", type=Path, help="Path to JSON/JSONC run settings")
    parser.add_argument("--log-level", default=None, help="Logging level (default: INFO)")
    parser.add_argument("--json-logs", action="store_true", help="Emit JSON log lines")
    parser.add_argument("--tol", type=float, default=None, help="Relative tolerance (default: 1e-9)")
    parser.add_argument("--imag-tol", type=float, default=None, help="Realness tolerance (default: 1e-9)")
    parser.add_argument("--jobs", type=int, default=None, help="Worker processes for batch decompose")
    parser.add_argument("--no-timestamp", action="store_true", help="Omit the report timestamp")
    parser.add_argument("--out", type=Path, default=None, help="Write output here instead of stdout")
    parser.add_argument(
        "--list-definitions",
        action="store_true",
        help="Print supported variants, channel cases and generators, then exit",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {_SYMPOLAR_VERSION}")

    commands = parser.add_subparsers(dest="command")

    dec = commands.add_parser("decompose", help="Factor one or more matrices")
    dec.add_argument("inputs", nargs="+", type=Path)
    dec.add_argument("--variant", required=True, type=str.lower, choices=choices("decomposition"))
    dec.add_argument("--factors-dir", type=Path, default=None, help="Write one file per factor here")

    ver = commands.add_parser("verify", help="Recompute residuals of stored factors")
    ver.add_argument("input", type=Path)
    ver.add_argument("--variant", required=True, type=str.lower, choices=choices("decomposition"))
    ver.add_argument("--factors", required=True, nargs="+", type=Path)

    chan = commands.add_parser("channel", help="Gaussian channel operations")
    chan_commands = chan.add_subparsers(dest="channel_command", required=True)
    for name, arity, help_text in (
        ("validate", 1, "Check the channel non-negativity condition"),
        ("classify", 1, "Spectrum flags of -K^T J K J and admissible cases"),
        ("normal-form", 1, "Canonical form under symplectic transformations"),
        ("compose", 2, "Product of two channels: LEFT after RIGHT's K"),
    ):
        sub = chan_commands.add_parser(name, help=help_text)
        sub.add_argument("inputs", nargs=arity, type=Path)
        if name == "normal-form":
            sub.add_argument("--case", default="auto", type=str.lower, choices=sorted(_CASE_ALIASES))

    gen = commands.add_parser("generate", help="Seeded random instance")
    gen.add_argument("kind", choices=choices("generator"))
    gen.add_argument("--n", type=int, required=True)
    gen.add_argument("--seed", type=int, required=True)
    return parser


def _settings(args: argparse.Namespace) -> RunSettings:
    settings = load_settings_from_json(args.config) if args.config is not None else RunSettings()
    return settings.with_overrides(
        rel_tol=args.tol,
        imag_tol=args.imag_tol,
        jobs=args.jobs,
        timestamp=False if args.no_timestamp else None,
    )


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    try:
        settings = _settings(args)
    except (ValueError, OSError) as exc:
        print(f"sympolar: error: {exc}", file=sys.stderr)
        return 1
    configure_logging(
        level=args.log_level or settings.log_level,
        json_format=args.json_logs or settings.json_logs,
    )

    if args.list_definitions:
        _emit(json.dumps(list(iter_definition_dicts()), indent=2) + "\n", args.out)
        return 0
    if args.command is None:
        parser.print_usage(sys.stderr)
        print("sympolar: error: a command is required", file=sys.stderr)
        return 1

    if args.command == "generate":
        try:
            text, code = _cmd_generate(args)
        except (SympolarError, ValueError) as exc:
            print(f"sympolar: error: {exc}", file=sys.stderr)
            return exit_code_for(exc)
        _emit(text, args.out)
        return code

    handlers = {"decompose": _cmd_decompose, "verify": _cmd_verify, "channel": _cmd_channel}
    reports = [stamp(report, settings.timestamp) for report in handlers[args.command](args, settings)]
    for report in reports:
        log_report(logger, report, level="INFO" if report.verdict == "ok" else "WARNING")
        if report.message:
            print(f"sympolar: {report.operation}: {report.message}", file=sys.stderr)
    batch = args.command == "decompose" and len(args.inputs) > 1
    _emit(_render(reports, batch=batch), args.out)
    return max(report.exit_code for report in reports)


if __name__ == "__main__":
    sys.exit(main())
