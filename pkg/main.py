"""Command-line entry point: ``python main.py <command> FILE ...``."""
from __future__ import annotations

import argparse
import json
import logging
import sys
from logging.handlers import RotatingFileHandler
from pathlib import Path
from typing import Callable, Dict, List, Optional, Sequence

from config import OUTPUT_FORMATS, settings
from models.program import LabelledProgram
from services import cg, dot, report, wfs, wnp
from services.errors import EcjError, ProgramSyntaxError, ResourceLimitError, UnknownAtomError
from services.printer import format_value
from services.program_parser import parse_program, validate

SCHEMA_PATH = Path(__file__).resolve().parent / "schema" / "output.schema.json"

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_PROGRAM = 2
EXIT_RESOURCE = 3

logger = logging.getLogger("ecj")


class UsageError(Exception):
    pass


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        raise UsageError(message)


# logs go to stderr and to a rotating file under LOG_DIR
def configure_logging(level: Optional[str] = None) -> None:
    log_dir = settings.LOG_DIR
    log_dir.mkdir(parents=True, exist_ok=True)

    logging.basicConfig(
        level=level or settings.LOG_LEVEL,
        format="%(asctime)s | %(name)s | %(levelname)s | %(message)s",
        handlers=[
            logging.StreamHandler(),
            RotatingFileHandler(
                log_dir / "ecj.log",
                maxBytes=5 * 1024 * 1024,
                backupCount=3,
                encoding="utf-8",
            ),
        ],
        force=True,
    )


def build_parser() -> argparse.ArgumentParser:
    common = _ArgumentParser(add_help=False)
    common.add_argument("--format", choices=OUTPUT_FORMATS, default=None)
    common.add_argument("--max-addends", type=int, default=None)
    common.add_argument(
        "--max-atoms-enum",
        type=int,
        default=None,
        help="limit on atoms left undefined by the well-founded model when enumerating CG models",
    )
    common.add_argument("--allow-shared-labels", action="store_true", default=None)
    verbosity = common.add_mutually_exclusive_group()
    verbosity.add_argument("-v", "--verbose", action="store_true")
    verbosity.add_argument("-q", "--quiet", action="store_true")

    parser = _ArgumentParser(
        prog="ecj",
        description="Causal well-founded models of labelled logic programs.",
    )
    commands = parser.add_subparsers(dest="command", required=True, parser_class=_ArgumentParser)

    wfm_parser = commands.add_parser("wfm", parents=[common], help="least and greatest fixpoint per atom")
    wfm_parser.add_argument("file")

    why_parser = commands.add_parser("why", parents=[common], help="causal value of a literal")
    why_parser.add_argument("file")
    why_parser.add_argument("-l", "--literal", required=True)

    wnp_parser = commands.add_parser("wnp", parents=[common], help="why-not provenance of a literal")
    wnp_parser.add_argument("file")
    wnp_parser.add_argument("-l", "--literal", required=True)

    models_parser = commands.add_parser("cg-models", parents=[common], help="causal-graph stable models")
    models_parser.add_argument("file")

    just_parser = commands.add_parser("cg-just", parents=[common], help="causal-graph justifications of an atom")
    just_parser.add_argument("file")
    just_parser.add_argument("-a", "--atom", required=True)
    just_parser.add_argument("--dot", dest="dot_path", default=None)

    check_parser = commands.add_parser("check", parents=[common], help="validate a program")
    check_parser.add_argument("file")

    commands.add_parser("schema", parents=[common], help="print the JSON output schema")
    return parser


def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except UnicodeDecodeError as exc:
        raise ProgramSyntaxError(f"{path} is not UTF-8 text: invalid byte at offset {exc.start}") from exc


def _load(path: str) -> LabelledProgram:
    return parse_program(_read(path))


def _emit_json(command: str, records: Sequence[dict]) -> None:
    print(json.dumps(report.document(command, records), indent=2, ensure_ascii=False))


def _cmd_wfm(args: argparse.Namespace) -> int:
    model = wfs.causal_wfm(_load(args.file))
    if settings.OUTPUT_FORMAT == "json":
        _emit_json("wfm", report.wfm_records(model))
        return EXIT_OK
    for atom in sorted(model.atoms):
        print(f"{atom}: lfp = {format_value(model.lfp[atom])}; gfp = {format_value(model.gfp[atom])}")
    return EXIT_OK


def _cmd_why(args: argparse.Namespace) -> int:
    literal = wfs.parse_literal(args.literal)
    value = wfs.query(wfs.causal_wfm(_load(args.file)), literal)
    record = report.OutputRecord.of(literal, value)
    if settings.OUTPUT_FORMAT == "json":
        _emit_json("why", [record.to_dict()])
        return EXIT_OK
    print(f"{record.literal} = {record.value}")
    for addend in record.addends:
        status = "enabled" if addend.enabled else "inhibited"
        print(f"  [{status}] {addend.term}")
        print(
            f"    causes: {', '.join(addend.causes) or '-'}; "
            f"enablers: {', '.join(addend.enablers) or '-'}; "
            f"inhibitors: {', '.join(addend.inhibitors) or '-'}"
        )
    return EXIT_OK


def _cmd_wnp(args: argparse.Namespace) -> int:
    literal = wfs.parse_literal(args.literal)
    value = wnp.why(_load(args.file), literal)
    record = report.provenance_record(literal, value)
    if settings.OUTPUT_FORMAT == "json":
        _emit_json("wnp", [record])
        return EXIT_OK
    print(f"{record['literal']} = {record['provenance']}")
    for conjunction in record["conjunctions"]:
        tag = " (hypothetical)" if conjunction["hypothetical"] else ""
        print(f"  {conjunction['text']}{tag}")
    return EXIT_OK


def _cmd_cg_models(args: argparse.Namespace) -> int:
    models = cg.cg_stable_models(_load(args.file))
    if settings.OUTPUT_FORMAT == "json":
        _emit_json("cg-models", [report.model_record(i, m) for i, m in enumerate(models)])
    elif settings.OUTPUT_FORMAT == "dot":
        print("\n".join(dot.model_to_dot(model, name=f"M{index}") for index, model in enumerate(models)))
    else:
        for index, model in enumerate(models):
            print(f"model {index}:")
            for atom in sorted(model.atoms):
                print(f"  {atom}: {format_value(model[atom])}")
    return EXIT_OK


def _cmd_cg_just(args: argparse.Namespace) -> int:
    program = _load(args.file)
    if args.atom not in program.atoms:
        raise UnknownAtomError(args.atom)
    models = cg.cg_stable_models(program)
    found = [cg.cg_justifications(model, args.atom) for model in models]
    graphs = [graph for graphs in found for graph in graphs]
    if args.dot_path:
        text = "\n".join(dot.to_dot(graph, name=f"G{index}") for index, graph in enumerate(graphs))
        Path(args.dot_path).write_text(text + "\n", encoding="utf-8")
        logger.info("Wrote %d graphs to %s", len(graphs), args.dot_path)

    if settings.OUTPUT_FORMAT == "json":
        _emit_json("cg-just", [report.justifications_record(args.atom, g) for g in found])
    elif settings.OUTPUT_FORMAT == "dot":
        print("\n".join(dot.to_dot(graph, name=f"G{index}") for index, graph in enumerate(graphs)))
    else:
        for index, model_graphs in enumerate(found):
            print(f"model {index}:")
            for graph in model_graphs:
                print(f"  {format_value(cg.term_of_graph(graph))}")
    return EXIT_OK


def _cmd_check(args: argparse.Namespace) -> int:
    program = parse_program(_read(args.file), allow_shared_labels=True)
    diagnostics = validate(program)
    if settings.OUTPUT_FORMAT == "json":
        _emit_json("check", [report.diagnostic_record(item) for item in diagnostics])
    else:
        for item in diagnostics:
            print(str(item))
        if not diagnostics:
            print(f"ok: {len(program.rules)} rules, {len(program.atoms)} atoms")
    return EXIT_PROGRAM if diagnostics else EXIT_OK


def _cmd_schema(_args: argparse.Namespace) -> int:
    print(SCHEMA_PATH.read_text(encoding="utf-8"), end="")
    return EXIT_OK


COMMANDS: Dict[str, Callable[[argparse.Namespace], int]] = {
    "wfm": _cmd_wfm,
    "why": _cmd_why,
    "wnp": _cmd_wnp,
    "cg-models": _cmd_cg_models,
    "cg-just": _cmd_cg_just,
    "check": _cmd_check,
    "schema": _cmd_schema,
}
DOT_COMMANDS = {"cg-models", "cg-just"}


def run(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        settings.reload()
        settings.override(
            max_addends=args.max_addends,
            max_atoms_enum=args.max_atoms_enum,
            allow_shared_labels=args.allow_shared_labels,
            output_format=args.format,
        )
        if settings.OUTPUT_FORMAT == "dot" and args.command not in DOT_COMMANDS:
            raise UsageError(f"--format dot is not available for {args.command}")
    except SystemExit as exc:
        # --help
        return int(exc.code or 0)
    except (UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE

    level = "DEBUG" if args.verbose else "ERROR" if args.quiet else None
    configure_logging(level)
    logger.debug("Running %s with %s", args.command, vars(args))

    try:
        return COMMANDS[args.command](args)
    except ResourceLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        logger.debug("Resource limit", exc_info=True)
        return EXIT_RESOURCE
    except (EcjError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        logger.debug("Program error", exc_info=True)
        return EXIT_PROGRAM


if __name__ == "__main__":
    sys.exit(run())
