"""Sol Sapphire command line interface"""
import argparse
import json
import logging
import sys
from itertools import product
from typing import Sequence

from .covers import all_double_covers, check_cover_homology, hom_equivalence_classes
from .errors import MatrixParseError, SolSapphireError
from .intlinalg import Mat2Z, parse_matrix
from .involutions import (
    InvolutionCount,
    borsuk_ulam,
    borsuk_ulam_table,
    classify_involutions,
)
from .presentations import SapphireMatrix, h1_of_presentation
from .sapphire import canonical_form, h1_sapphire, homeomorphic, morimoto_orbit
from .schemas import (
    AtlasRecord,
    BURecord,
    CoverRecord,
    H1Record,
    InvolutionRecord,
    hom_partition_records,
)
from .writers import CsvWriter, JsonWriter, TableWriter

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_INVARIANT = 3
EXIT_CHECK_FAILED = 4
EXIT_IO = 5


def read_sapphire(text: str) -> SapphireMatrix:
    """
    Parse matrix text into a sapphire gluing matrix.

    Args:
        text: ``"r s; t u"`` or ``[[r, s], [t, u]]``

    Returns:
        Validated gluing matrix
    """
    return SapphireMatrix(parse_matrix(text))


def _print_json(data) -> None:
    print(json.dumps(data, indent=2))


def cmd_canon(args: argparse.Namespace) -> int:
    """Print the canonical form and the orbit size"""
    sapphire = read_sapphire(args.matrix)
    canonical = canonical_form(sapphire)
    orbit_size = len(morimoto_orbit(sapphire))
    if args.format == "json":
        _print_json(
            {
                "matrix": sapphire.matrix.rows(),
                "canonical": canonical.matrix.rows(),
                "orbit_size": orbit_size,
            }
        )
    else:
        print(canonical)
        print(f"orbit size: {orbit_size}")
    return EXIT_OK


def cmd_covers(args: argparse.Namespace) -> int:
    """Print every double cover of the canonical form and the hom classes"""
    sapphire = read_sapphire(args.matrix)
    canonical = canonical_form(sapphire)
    covers = [CoverRecord.of(cover) for cover in all_double_covers(canonical)]
    classes = hom_partition_records(hom_equivalence_classes(canonical))
    if args.format == "json":
        _print_json(
            {
                "canonical": canonical.matrix.rows(),
                "covers": [c.model_dump(mode="json") for c in covers],
                "hom_partition": [c.model_dump(mode="json") for c in classes],
            }
        )
        return EXIT_OK

    print(f"canonical: {canonical}")
    with TableWriter(sys.stdout) as writer:
        for cover in covers:
            writer.write_row(
                {
                    "case": cover.case,
                    "hom (a b c)": f"{cover.hom.a} {cover.hom.b} {cover.hom.c}",
                    "kind": cover.kind,
                    "matrix": str(Mat2Z.from_rows(cover.matrix)),
                    "H1": _format_h1(cover.h1),
                }
            )
    for hom_class in classes:
        print(f"class {{{', '.join(hom_class.cases)}}}: {hom_class.status}")
    return EXIT_OK


def _format_h1(record: H1Record) -> str:
    terms = ["Z"] * record.free_rank + [f"Z_{d}" for d in record.invariant_factors]
    return " + ".join(terms) if terms else "0"


def cmd_involutions(args: argparse.Namespace) -> int:
    """Print the free involution classification"""
    report = classify_involutions(read_sapphire(args.matrix))
    if args.format == "json":
        _print_json(InvolutionRecord.of(report).model_dump(mode="json"))
        return EXIT_OK
    if report.count is InvolutionCount.NONE:
        print("no free involutions")
        return EXIT_OK
    print(report.count.value)
    for quotient, canonical in zip(report.quotients, report.canonical_quotients):
        print(f"  quotient {quotient}  (canonical {canonical})")
    for note in report.notes:
        print(f"  note: {note}")
    return EXIT_OK


def cmd_bu(args: argparse.Namespace) -> int:
    """Print Borsuk-Ulam verdicts, for one n or for the whole table"""
    sapphire = read_sapphire(args.matrix)
    if args.n is not None:
        verdict = borsuk_ulam(sapphire, args.n)
        if args.format == "json":
            _print_json(BURecord.of(verdict).model_dump(mode="json"))
        else:
            print(verdict.outcome.name)
        return EXIT_OK

    table = borsuk_ulam_table(sapphire)
    if args.format == "json":
        _print_json({key: BURecord.of(v).model_dump(mode="json") for key, v in table.items()})
        return EXIT_OK
    with TableWriter(sys.stdout) as writer:
        for key, verdict in table.items():
            writer.write_row(
                {"n": key, "verdict": verdict.outcome.name, "rationale": verdict.rationale}
            )
    return EXIT_OK


def cmd_homeo(args: argparse.Namespace) -> int:
    """Print whether two sapphires are homeomorphic"""
    first, second = read_sapphire(args.first), read_sapphire(args.second)
    print("homeomorphic" if homeomorphic(first, second) else "not homeomorphic")
    return EXIT_OK


def cmd_h1(args: argparse.Namespace) -> int:
    """Print the first homology"""
    sapphire = read_sapphire(args.matrix)
    if args.from_presentation:
        print(h1_of_presentation(sapphire.presentation()))
    else:
        print(h1_sapphire(sapphire))
    return EXIT_OK


def enumerate_canonical(max_entry: int) -> list[SapphireMatrix]:
    """
    Canonical sapphires with entries in 1..max_entry.

    Args:
        max_entry: Largest entry

    Returns:
        Matrices with det +-1 equal to their own canonical form, sorted
        lexicographically by (r, s, t, u)
    """
    found = []
    for entries in product(range(1, max_entry + 1), repeat=4):
        r, s, t, u = entries
        if r > u or r * u - s * t not in (1, -1):
            continue
        sapphire = SapphireMatrix.of(*entries)
        if canonical_form(sapphire).matrix == sapphire.matrix:
            found.append(sapphire)
    return sorted(found, key=lambda m: m.matrix.entries)


def atlas_record(sapphire: SapphireMatrix) -> AtlasRecord:
    """
    Build the atlas row of one sapphire.

    Args:
        sapphire: Gluing matrix

    Returns:
        Validated atlas record
    """
    canonical = canonical_form(sapphire)
    return AtlasRecord(
        matrix=sapphire.matrix.rows(),
        canonical=canonical.matrix.rows(),
        det=sapphire.matrix.det,
        h1=H1Record.of(h1_sapphire(sapphire)),
        covers=[CoverRecord.of(cover) for cover in all_double_covers(canonical)],
        hom_partition=hom_partition_records(hom_equivalence_classes(sapphire)),
        involutions=InvolutionRecord.of(classify_involutions(sapphire)),
        bu={key: BURecord.of(v) for key, v in borsuk_ulam_table(sapphire).items()},
    )


def flatten_record(record: AtlasRecord) -> dict[str, str | int]:
    """Flat CSV row; JSON output keeps the full record"""
    row: dict[str, str | int] = {
        "matrix": str(Mat2Z.from_rows(record.matrix)),
        "canonical": str(Mat2Z.from_rows(record.canonical)),
        "det": record.det,
        "h1": record.h1.flat(),
        "covers": " ".join(f"{c.case}:{c.kind}" for c in record.covers),
        "involutions": record.involutions.count,
    }
    for key, verdict in record.bu.items():
        row[f"bu_{key}"] = verdict.verdict
    return row


def cmd_atlas(args: argparse.Namespace) -> int:
    """Write one record per canonical sapphire with entries up to --max-entry"""
    sapphires = enumerate_canonical(args.max_entry)
    if args.check:
        for sapphire in sapphires:
            mismatches = check_cover_homology(sapphire)
            if mismatches:
                print(f"error: check failed for {sapphire}: {mismatches[0]}", file=sys.stderr)
                return EXIT_CHECK_FAILED
        logger.info("Cover homology check passed for %d rows", len(sapphires))

    records = []
    for sapphire in sapphires:
        logger.debug("Atlas row %s", sapphire)
        records.append(atlas_record(sapphire))

    logger.info("Writing atlas: %d rows", len(records))
    try:
        stream = sys.stdout if args.out == "-" else open(args.out, "w", encoding="utf-8")
        try:
            if args.format == "csv":
                with CsvWriter(stream) as writer:
                    for record in records:
                        writer.write_row(flatten_record(record))
            else:
                with JsonWriter(stream) as writer:
                    for record in records:
                        writer.write_row(record.model_dump(mode="json"))
        finally:
            if stream is not sys.stdout:
                stream.close()
    except OSError as e:
        print(f"error: cannot write {args.out}: {e}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK


def cmd_schema(args: argparse.Namespace) -> int:
    """Print the JSON schema of atlas records"""
    _print_json(AtlasRecord.model_json_schema())
    return EXIT_OK


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be at least 1, got {value}")
    return value


def log_level(verbose: int) -> int:
    """WARNING by default, INFO for -v, DEBUG for -vv"""
    if verbose >= 2:
        return logging.DEBUG
    if verbose == 1:
        return logging.INFO
    return logging.WARNING


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sol-sapphire",
        description="Sapphire Sol manifolds: canonical forms, covers, involutions, Borsuk-Ulam",
    )
    parser.add_argument(
        "-v", "--verbose", action="count", default=0, help="-v logs progress, -vv debug output"
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    canon = subparsers.add_parser("canon", help="Canonical form and orbit size")
    canon.add_argument("matrix", help='Gluing matrix, e.g. "1 1; 1 2"')
    canon.add_argument("--format", choices=["text", "json"], default="text")
    canon.set_defaults(func=cmd_canon)

    covers = subparsers.add_parser("covers", help="All double covers and hom classes")
    covers.add_argument("matrix", help="Gluing matrix")
    covers.add_argument("--format", choices=["table", "json"], default="table")
    covers.set_defaults(func=cmd_covers)

    involutions = subparsers.add_parser("involutions", help="Free involution classification")
    involutions.add_argument("matrix", help="Gluing matrix")
    involutions.add_argument("--format", choices=["text", "json"], default="text")
    involutions.set_defaults(func=cmd_involutions)

    bu = subparsers.add_parser("bu", help="Borsuk-Ulam property for maps into R^n")
    bu.add_argument("matrix", help="Gluing matrix")
    bu.add_argument("-n", type=int, help="Dimension n (default: table for n = 1, 2, 3, >= 4)")
    bu.add_argument("--format", choices=["text", "json"], default="text")
    bu.set_defaults(func=cmd_bu)

    homeo = subparsers.add_parser("homeo", help="Homeomorphism test for two sapphires")
    homeo.add_argument("first", help="Gluing matrix")
    homeo.add_argument("second", help="Gluing matrix")
    homeo.set_defaults(func=cmd_homeo)

    h1 = subparsers.add_parser("h1", help="First homology")
    h1.add_argument("matrix", help="Gluing matrix")
    h1.add_argument(
        "--from-presentation",
        action="store_true",
        help="Compute by Smith normal form of the presentation instead of the closed formula",
    )
    h1.set_defaults(func=cmd_h1)

    atlas = subparsers.add_parser("atlas", help="Records for all canonical sapphires")
    atlas.add_argument(
        "--max-entry", type=_positive_int, required=True, help="Largest matrix entry (>= 1)"
    )
    atlas.add_argument("--out", default="-", help="Output file (default: - for stdout)")
    atlas.add_argument("--format", choices=["json", "csv"], default="json")
    atlas.add_argument(
        "--check", action="store_true", help="Verify cover homology against presentations"
    )
    atlas.set_defaults(func=cmd_atlas)

    schema = subparsers.add_parser("schema", help="JSON schema of atlas records")
    schema.set_defaults(func=cmd_schema)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    """
    Main entry point.

    Args:
        argv: Arguments without the program name (default: sys.argv[1:])

    Returns:
        Exit code: 0 ok, 2 usage or parse error, 3 invariant or precondition
        violated, 4 atlas check failed, 5 output not writable
    """
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        level=log_level(args.verbose),
        format="%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )
    try:
        return args.func(args)
    except MatrixParseError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except SolSapphireError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INVARIANT


if __name__ == "__main__":
    sys.exit(main())
