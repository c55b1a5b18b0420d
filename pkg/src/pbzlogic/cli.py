"""Command-line front end: decision-table ingestion and reports.

Subcommands:

* ``classify``       seven-valued (plus derived-logic) classification of a CSV
                     decision table
* ``verify``         run the axiom suite against a table or synthetic sweeps
* ``validate-logic`` check a logic spec for disjointness and coverage
* ``list-logics``    show the built-in logics

Exit status: 0 on success, 1 on data errors, 2 when an axiom or logic
check fails or stays undecided.
"""

from __future__ import annotations

import argparse
import csv
import hashlib
import json
import sys
from dataclasses import dataclass
from pathlib import Path

from . import axioms
from .logics import (
    LogicSpec,
    builtin_logic,
    builtin_logics,
    evaluate_logic,
    validate_logic,
)
from .orthopair import Orthopair
from .sevenvalued import TruthValue, classify, seven_partition
from .sweep import all_knowledge_bases, default_universe
from .universe import KnowledgeBase, Universe

SCHEMA_VERSION = 1

EXIT_OK = 0
EXIT_DATA_ERROR = 1
EXIT_CHECK_FAILED = 2

DEFAULT_POSITIVE = ("1", "yes", "true", "positive")
DEFAULT_NEGATIVE = ("0", "no", "false", "negative")
DEFAULT_UNKNOWN = ("?", "unknown", "")


class DataError(ValueError):
    """Unusable input data; reported with file location where possible."""


@dataclass
class TableConfig:
    attributes: tuple[str, ...] | None = None  # None: all condition columns
    decision_column: str | None = None  # None: last column
    positive_tokens: tuple[str, ...] = DEFAULT_POSITIVE
    negative_tokens: tuple[str, ...] = DEFAULT_NEGATIVE
    unknown_tokens: tuple[str, ...] = DEFAULT_UNKNOWN

    def echo(self) -> dict:
        return {
            "attributes": list(self.attributes) if self.attributes else "all",
            "decision_column": self.decision_column or "last",
            "positive_tokens": sorted(self.positive_tokens),
            "negative_tokens": sorted(self.negative_tokens),
            "unknown_tokens": sorted(self.unknown_tokens),
        }


def load_table(
    path: str | Path, config: TableConfig | None = None
) -> tuple[Universe, KnowledgeBase, Orthopair]:
    """Read a CSV decision table into a universe, partition and concept.

    First column holds object ids; the decision column (default: last)
    maps to positive/negative/unknown through the configured token sets.
    """
    config = config or TableConfig()
    text = Path(path).read_text(encoding="utf-8")
    rows = [row for row in csv.reader(text.splitlines()) if row]
    if len(rows) < 2:
        raise DataError(f"{path}: expected a header row and at least one data row")
    header = [cell.strip() for cell in rows[0]]
    if len(header) < 2:
        raise DataError(f"{path}: need an id column and at least one more column")
    id_column = header[0]
    decision = config.decision_column or header[-1]
    if decision not in header[1:]:
        raise DataError(f"{path}: decision column {decision!r} not found")
    condition_columns = [c for c in header[1:] if c != decision]
    attributes = config.attributes or tuple(condition_columns)
    for name in attributes:
        if name not in condition_columns:
            raise DataError(f"{path}: condition attribute {name!r} not found")

    positive = {t.lower() for t in config.positive_tokens}
    negative = {t.lower() for t in config.negative_tokens}
    unknown = {t.lower() for t in config.unknown_tokens}

    ids: list[str] = []
    vectors: dict[str, tuple[str, ...]] = {}
    labels: dict[str, str] = {}
    for lineno, row in enumerate(rows[1:], start=2):
        if len(row) != len(header):
            raise DataError(
                f"{path}:{lineno}: row has {len(row)} cells, header has {len(header)}"
            )
        cells = dict(zip(header, (cell.strip() for cell in row)))
        oid = row[0].strip()
        if not oid:
            raise DataError(f"{path}:{lineno}: empty object id")
        if oid in vectors:
            raise DataError(f"{path}:{lineno}: duplicate object id {oid!r}")
        ids.append(oid)
        vectors[oid] = tuple(cells[a] for a in attributes)
        token = cells[decision].lower()
        if token in positive:
            labels[oid] = "positive"
        elif token in negative:
            labels[oid] = "negative"
        elif token in unknown:
            labels[oid] = "unknown"
        else:
            raise DataError(
                f"{path}:{lineno}: decision token {cells[decision]!r} is not mapped"
            )

    universe = Universe(tuple(ids))
    kb = KnowledgeBase.from_attributes(universe, vectors)
    pair = Orthopair.from_names(
        universe,
        (oid for oid in ids if labels[oid] == "positive"),
        (oid for oid in ids if labels[oid] == "negative"),
    )
    return universe, kb, pair


def _resolve_logic(name_or_path: str) -> LogicSpec | None:
    """A built-in name, a spec file path, or None for the bare seven values."""
    if name_or_path == "seven":
        return None
    try:
        return builtin_logic(name_or_path)
    except KeyError:
        pass
    path = Path(name_or_path)
    if not path.exists():
        raise DataError(
            f"unknown logic {name_or_path!r}: not a built-in and not a file"
        )
    try:
        return LogicSpec.from_json(path.read_text(encoding="utf-8"))
    except (json.JSONDecodeError, KeyError, ValueError) as exc:
        raise DataError(f"{path}: bad logic spec: {exc}") from exc


def build_classification_report(
    kb: KnowledgeBase,
    pair: Orthopair,
    spec: LogicSpec | None,
    input_sha256: str,
    config_echo: dict,
) -> dict:
    universe = kb.universe
    partition = seven_partition(kb, pair)
    assignment = evaluate_logic(kb, pair, spec) if spec is not None else None

    objects = []
    derived_counts: dict[str, int] = {}
    for name in universe:
        seven = classify(kb, pair, name).symbol
        assert seven == partition.value_of(name).symbol
        derived = seven if assignment is None else assignment.value_of(name)
        derived_counts[derived] = derived_counts.get(derived, 0) + 1
        objects.append({"id": name, "seven": seven, "derived": derived})

    derived_order = (
        [v.symbol for v in TruthValue] if spec is None else list(spec.labels())
    )
    return {
        "schema_version": SCHEMA_VERSION,
        "logic": spec.name if spec is not None else "seven",
        "provenance": {"input_sha256": input_sha256, "config": config_echo},
        "objects": objects,
        "summary": {
            "seven": partition.counts(),
            "derived": {label: derived_counts.get(label, 0) for label in derived_order},
        },
    }


def render_json(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=True) + "\n"


def render_classification_text(report: dict) -> str:
    lines = [f"logic: {report['logic']}"]
    width = max(6, max(len(entry["id"]) for entry in report["objects"]))
    lines.append(f"{'object':<{width + 2}}{'seven':<7}derived")
    for entry in report["objects"]:
        lines.append(f"{entry['id']:<{width + 2}}{entry['seven']:<7}{entry['derived']}")
    for kind in ("seven", "derived"):
        counts = report["summary"][kind]
        lines.append(
            f"{kind} counts: " + " ".join(f"{k}={v}" for k, v in counts.items())
        )
    return "\n".join(lines) + "\n"


def _sha256_of(path: str | Path) -> str:
    return hashlib.sha256(Path(path).read_bytes()).hexdigest()


def _table_config(args: argparse.Namespace) -> TableConfig:
    def tokens(value: str | None, default: tuple[str, ...]) -> tuple[str, ...]:
        if value is None:
            return default
        return tuple(t.strip() for t in value.split(","))

    return TableConfig(
        attributes=tuple(args.attributes.split(",")) if args.attributes else None,
        decision_column=args.decision_column,
        positive_tokens=tokens(args.positive_tokens, DEFAULT_POSITIVE),
        negative_tokens=tokens(args.negative_tokens, DEFAULT_NEGATIVE),
        unknown_tokens=tokens(args.unknown_tokens, DEFAULT_UNKNOWN),
    )


def _add_table_options(sub: argparse.ArgumentParser, required: bool) -> None:
    sub.add_argument("--input", required=required, help="CSV decision table")
    sub.add_argument(
        "--attributes", help="comma-separated condition attributes (default: all)"
    )
    sub.add_argument("--decision-column", help="decision column name (default: last)")
    sub.add_argument("--positive-tokens", help="comma-separated positive decision tokens")
    sub.add_argument("--negative-tokens", help="comma-separated negative decision tokens")
    sub.add_argument("--unknown-tokens", help="comma-separated unknown decision tokens")


def cmd_classify(args: argparse.Namespace) -> int:
    config = _table_config(args)
    _, kb, pair = load_table(args.input, config)
    spec = _resolve_logic(args.logic)
    report = build_classification_report(
        kb, pair, spec, _sha256_of(args.input), config.echo()
    )
    if args.format == "json":
        sys.stdout.write(render_json(report))
    else:
        sys.stdout.write(render_classification_text(report))
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    runs: list[tuple[str, KnowledgeBase]] = []
    if args.input:
        _, kb, _ = load_table(args.input, _table_config(args))
        runs.append((f"table {args.input}", kb))
    else:
        sizes = [int(s) for s in (args.sizes or "1,2,3,4").split(",")]
        for size in sizes:
            for i, kb in enumerate(all_knowledge_bases(default_universe(size))):
                runs.append((f"size {size} partition {i}", kb))

    results = []
    failed = False
    for label, kb in runs:
        if args.mutate:
            reports = axioms.run_mutation(kb, args.mutate, budget=args.budget)
        else:
            reports = axioms.check_all(kb, budget=args.budget)
        ok = axioms.certified(reports)
        failed = failed or not ok
        results.append({"kb": label, "certified": ok,
                        "axioms": [r.to_dict() for r in reports]})

    if args.format == "json":
        sys.stdout.write(render_json({"schema_version": SCHEMA_VERSION, "runs": results}))
    else:
        for run in results:
            verdict = "PBZ-certified" if run["certified"] else "FAILED"
            sys.stdout.write(f"{run['kb']}: {verdict}\n")
            for rep in run["axioms"]:
                if rep["status"] != "holds":
                    sys.stdout.write(
                        f"  {rep['axiom']}: {rep['status']}"
                        f" (cases checked: {rep['cases_checked']})"
                    )
                    if "witness" in rep:
                        sys.stdout.write(f" witness: {rep['witness']}")
                    sys.stdout.write("\n")
    return EXIT_CHECK_FAILED if failed else EXIT_OK


def cmd_validate_logic(args: argparse.Namespace) -> int:
    spec = _resolve_logic(args.logic)
    if spec is None:
        raise DataError("the base seven-valued assignment needs no validation")
    kbs: list[KnowledgeBase]
    if args.input:
        _, kb, _ = load_table(args.input, _table_config(args))
        kbs = [kb]
    else:
        kbs = list(all_knowledge_bases(default_universe(args.size)))
    failed = False
    reports = []
    for kb in kbs:
        result = validate_logic(kb, spec, budget=args.budget)
        failed = failed or result.status != "valid"
        reports.append(result.to_dict())
    if args.format == "json":
        sys.stdout.write(
            render_json({"schema_version": SCHEMA_VERSION, "results": reports})
        )
    else:
        for rep in reports:
            sys.stdout.write(
                f"{rep['logic']}: {rep['status']}"
                f" (checked {rep['checked']} concepts"
                f"{', exhaustive' if rep['exhaustive'] else ''})\n"
            )
            if "overlap" in rep:
                sys.stdout.write(
                    f"  overlap between {rep['overlap'][0]} and {rep['overlap'][1]}"
                    f" on {rep['overlap'][2]}\n"
                )
            if "uncovered" in rep:
                sys.stdout.write(f"  uncovered objects: {rep['uncovered']}\n")
            if "witness" in rep:
                sys.stdout.write(f"  witness concept: {rep['witness']}\n")
    return EXIT_CHECK_FAILED if failed else EXIT_OK


def cmd_list_logics(args: argparse.Namespace) -> int:
    for spec in builtin_logics():
        labels = ", ".join(spec.labels())
        sys.stdout.write(f"{spec.name}: {labels}\n")
    sys.stdout.write("seven: the unaggregated seven-valued classification\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pbzlogic",
        description="Seven-valued rough-set classification of decision tables",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="classify every object of a decision table")
    _add_table_options(p, required=True)
    p.add_argument("--logic", default="seven",
                   help="built-in logic name, spec file path, or 'seven'")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("verify", help="run the lattice axiom suite")
    _add_table_options(p, required=False)
    p.add_argument("--sizes", help="synthetic universe sizes, e.g. 3,4 (default 1,2,3,4)")
    p.add_argument("--budget", type=int, default=axioms.DEFAULT_BUDGET,
                   help="maximum evaluated tuples per axiom")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--mutate", help=argparse.SUPPRESS)  # test harness only
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("validate-logic", help="check a logic spec for partition laws")
    _add_table_options(p, required=False)
    p.add_argument("--logic", required=True, help="built-in logic name or spec file path")
    p.add_argument("--size", type=int, default=4,
                   help="synthetic universe size when no input table is given")
    p.add_argument("--budget", type=int, default=None,
                   help="maximum concepts to check per knowledge base")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_validate_logic)

    p = sub.add_parser("list-logics", help="list the built-in logics")
    p.set_defaults(func=cmd_list_logics)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (DataError, OSError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_DATA_ERROR
    except ValueError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_DATA_ERROR


if __name__ == "__main__":
    sys.exit(main())
