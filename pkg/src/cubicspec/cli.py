"""Command-line surface: graph6 in, JSON out, composable over pipes.

Exit codes: 0 success, 1 property-check failure, 2 usage error, 3 I/O
error.  All diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import __version__
from .coloring import (
    chromatic_index,
    chromatic_number_cubic,
    chromatic_number_small,
)
from .enumeration import enumerate_cubic
from .errors import (
    BudgetExceededError,
    CertificationError,
    CubicspecError,
    GraphFormatError,
    StructureError,
)
from .graphs import catalog, catalog_names
from .graph6 import parse_graph6, write_graph6
from .hamiltonicity import is_hamiltonian
from .matchings import perfect_matching_certificate
from .spectral import char_poly, eigenvalues
from .truncation import (
    family_pairs,
    recognize_truncation,
    truncate_full_traced,
    truncate_set,
)
from .verify import SCAN_INVARIANTS, cospectral_scan, verify_all

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_IO = 3


def _emit(payload, plain_text, plain):
    if plain:
        print(plain_text)
    else:
        print(json.dumps(payload, sort_keys=True))


def _read_graphs(source):
    """Parse graph6 lines from a path or '-' (stdin).

    Returns (graphs, skipped): malformed lines are skipped with a warning
    on stderr and counted.
    """
    if source == "-":
        lines = sys.stdin.read().splitlines()
    else:
        with open(source, "r", encoding="ascii") as handle:
            lines = handle.read().splitlines()
    graphs = []
    skipped = 0
    for lineno, line in enumerate(lines, start=1):
        line = line.strip()
        if not line:
            continue
        try:
            graphs.append(parse_graph6(line))
        except GraphFormatError as exc:
            skipped += 1
            print(f"warning: line {lineno}: {exc}", file=sys.stderr)
    return graphs, skipped


def _spectrum_plain(spec):
    return " ".join(
        f"{value:.12g}" if count == 1 else f"{value:.12g}^{count}"
        for value, count in spec.groups()
    )


def _cmd_spectrum(args):
    for g in _input_graphs(args):
        spec = eigenvalues(g)
        _emit({"order": g.n, "spectrum": spec.to_json()},
              _spectrum_plain(spec), args.plain)
    return EXIT_OK


def _cmd_charpoly(args):
    for g in _input_graphs(args):
        text = char_poly(g).to_text()
        _emit({"order": g.n, "char_poly": text}, text, args.plain)
    return EXIT_OK


def _cmd_truncate(args):
    if args.full == (args.vertices is not None):
        raise StructureError("choose exactly one of --full / --vertices")
    for g in _input_graphs(args):
        if args.full:
            truncated, trace = truncate_full_traced(g)
        else:
            vertices = _parse_vertex_list(args.vertices)
            truncated, trace = truncate_set(g, vertices)
        _emit({"graph6": write_graph6(truncated), "trace": trace.to_json()},
              write_graph6(truncated), args.plain)
    return EXIT_OK


def _parse_vertex_list(text):
    try:
        return [int(part) for part in text.replace(",", " ").split()]
    except ValueError:
        raise StructureError(f"bad vertex list {text!r}") from None


def _cmd_recognize(args):
    for g in _input_graphs(args):
        pre = recognize_truncation(g)
        payload = {
            "recognized": pre is not None,
            "preimage": write_graph6(pre) if pre is not None else None,
        }
        _emit(payload, payload["preimage"] or "-", args.plain)
    return EXIT_OK


def _cmd_chromatic_index(args):
    for g in _input_graphs(args):
        result = chromatic_index(g)
        _emit(result.to_json(), str(result.value), args.plain)
    return EXIT_OK


def _cmd_matching(args):
    for g in _input_graphs(args):
        cert = perfect_matching_certificate(g)
        _emit(cert.to_json(), cert.kind, args.plain)
    return EXIT_OK


def _cmd_hamilton(args):
    for g in _input_graphs(args):
        value = is_hamiltonian(g)
        _emit({"hamiltonian": value}, str(value).lower(), args.plain)
    return EXIT_OK


def _cmd_chromatic_number(args):
    for g in _input_graphs(args):
        value = chromatic_number_cubic(g) if g.is_cubic() \
            else chromatic_number_small(g)
        _emit({"chromatic_number": value}, str(value), args.plain)
    return EXIT_OK


def _cmd_scan(args):
    graphs, skipped = _read_graphs(args.input)
    invariants = SCAN_INVARIANTS if args.invariants is None else tuple(
        part.strip() for part in args.invariants.split(",") if part.strip())
    unknown = set(invariants) - set(SCAN_INVARIANTS)
    if unknown:
        raise StructureError(f"unknown invariants: {', '.join(sorted(unknown))}")
    jobs = args.jobs or int(os.environ.get("CUBICSPEC_JOBS", "1"))
    report = cospectral_scan(graphs, invariants=invariants, dedupe=True,
                             jobs=jobs, skipped_lines=skipped)
    print(json.dumps(report.to_json(), sort_keys=True))
    return EXIT_OK


def _cmd_family(args):
    graphs, _ = _read_graphs(args.input)
    if len(graphs) != 2:
        raise StructureError(
            f"family needs exactly two input graphs, got {len(graphs)}")
    pairs = family_pairs(graphs[0], graphs[1], args.k)
    payload = [
        {"iteration": i + 1, "order": a.n,
         "graphs": [write_graph6(a), write_graph6(b)]}
        for i, (a, b) in enumerate(pairs)
    ]
    if args.plain:
        for entry in payload:
            print(" ".join(entry["graphs"]))
    else:
        print(json.dumps(payload, sort_keys=True))
    return EXIT_OK


def _cmd_catalog(args):
    print(write_graph6(catalog(args.name)))
    return EXIT_OK


def _cmd_enumerate(args):
    for g in enumerate_cubic(args.n):
        print(write_graph6(g))
    return EXIT_OK


def _cmd_verify_paper(args):
    report = verify_all()
    print(json.dumps(report.to_json(), sort_keys=True))
    for result in report.results:
        mark = "ok" if result.status == "pass" else "FAIL"
        print(f"{mark:4s} {result.claim}", file=sys.stderr)
    return EXIT_OK if report.passed else EXIT_CHECK_FAILED


def _input_graphs(args):
    graphs, skipped = _read_graphs(args.input)
    if skipped:
        raise GraphFormatError(f"{skipped} malformed graph6 line(s)")
    return graphs


def build_parser():
    parser = argparse.ArgumentParser(
        prog="cubicspec",
        description="Spectral toolkit for cubic graphs: truncation, "
                    "cospectral pairs, colorings, matchings.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, needs_input=True, help=None):
        p = sub.add_parser(name, help=help)
        p.set_defaults(func=func)
        if needs_input:
            p.add_argument("input", nargs="?", default="-",
                           help="graph6 file, or - for stdin")
            p.add_argument("--plain", action="store_true",
                           help="plain text instead of JSON")
        return p

    add("spectrum", _cmd_spectrum, help="adjacency eigenvalues")
    add("charpoly", _cmd_charpoly, help="exact characteristic polynomial")
    p = add("truncate", _cmd_truncate, help="replace vertices by triangles")
    p.add_argument("--full", action="store_true",
                   help="truncate every vertex (cubic input)")
    p.add_argument("--vertices", help="comma-separated vertices to truncate")
    add("recognize", _cmd_recognize,
        help="invert a full truncation when the spectral shape matches")
    add("chromatic-index", _cmd_chromatic_index,
        help="exact chromatic index of a cubic graph")
    add("matching", _cmd_matching,
        help="perfect matching or a no-matching witness set")
    add("hamilton", _cmd_hamilton, help="exact Hamiltonicity decision")
    add("chromatic-number", _cmd_chromatic_number,
        help="chromatic number (cubic rule, exact search otherwise)")
    p = add("scan", _cmd_scan, help="cospectral bucket scan of a corpus")
    p.add_argument("--invariants",
                   help="comma-separated subset of: " + ", ".join(SCAN_INVARIANTS))
    p.add_argument("--jobs", type=int, default=None,
                   help="parallel workers (default $CUBICSPEC_JOBS or 1)")
    p = add("family", _cmd_family,
            help="iterated-truncation cospectral family from a pair")
    p.add_argument("--k", type=int, required=True, help="iterations (1..3)")
    p = add("catalog", _cmd_catalog, needs_input=False,
            help="emit a named graph as graph6")
    p.add_argument("name", choices=catalog_names())
    p = add("enumerate", _cmd_enumerate, needs_input=False,
            help="connected cubic graphs of a given order")
    p.add_argument("n", type=int)
    add("verify-paper", _cmd_verify_paper, needs_input=False,
        help="re-verify every published claim; exit 0 iff all pass")
    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if exc.code is not None else EXIT_USAGE
    try:
        return args.func(args)
    except GraphFormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except CertificationError as exc:
        print(f"certification failure: {exc}", file=sys.stderr)
        return EXIT_CHECK_FAILED
    except (BudgetExceededError, StructureError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CubicspecError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CHECK_FAILED


if __name__ == "__main__":
    sys.exit(main())
