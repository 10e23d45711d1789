#!/usr/bin/env python3
"""
Command-line frontend for the multicompositions library

    python -m multicomp enumerate --k 2 --n 3 --form zeros
    python -m multicomp triangle --k 3 --stat zeros --rows 5
    python -m multicomp sequence --name codd --k 2 --terms 8
    python -m multicomp verify --suite all
    python -m multicomp cluster --g 2 --n 3 --emit coefficients

Exit status: 0 success, 1 verification failure, 2 usage or domain error.
"""

import argparse
import logging
import sys
from typing import List, Optional, TextIO

from ..cluster import (
    closed_form_cg,
    cluster_coefficients,
    decompose_b,
    identity_sum,
    observed_sign,
)
from ..config.settings import Settings, configure_logging, get_settings
from ..core import CompositionForm, enumerate_compositions, zero_count
from ..counting import count_total, triangle
from ..errors import DomainError, MulticompError
from ..restricted import Restriction, as_restriction, count_restricted, enumerate_restricted
from ..sequences import jacobsthal_k, pell_k
from ..series import Family, gf_coefficients
from .output import (
    OutputFormat,
    cluster_document,
    polynomial_document,
    verify_report,
    write_cluster,
    write_compositions,
    write_polynomial,
    write_sequence,
    write_triangle,
    write_verify,
)
from .schemas import SequenceDocument
from .verify import SUITES, Bounds, run_verify

logger = logging.getLogger('multicomp.cli')

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2

STAT_ALIASES = {
    "all": "all_parts",
    "all_parts": "all_parts",
    "positive": "positive_parts",
    "positive_parts": "positive_parts",
    "zeros": "zeros",
}

# name -> (first index, restriction or None, generating function family)
SEQUENCES = {
    "total": (1, Restriction.NONE, Family.TOTAL),
    "c12": (1, Restriction.ONE_TWO, Family.ONE_TWO),
    "codd": (1, Restriction.ODD, Family.ODD),
    "cnoones": (1, Restriction.NO_ONES, Family.NO_ONES),
    "jacobsthal": (0, None, Family.JACOBSTHAL),
    "pell": (0, None, Family.PELL),
}


class UsageError(MulticompError):
    """Flags that are well-formed but rejected by a cost guard or bound"""


# Sequences

def _by_recurrence(name: str, k: int, n: int) -> int:
    if name == "jacobsthal":
        return jacobsthal_k(k, n)
    if name == "pell":
        return pell_k(k, n)
    _, restriction, _ = SEQUENCES[name]
    if restriction is Restriction.NONE:
        return count_total(k, n)
    return count_restricted(k, n, restriction)


def _by_enumeration(name: str, k: int, n: int) -> int:
    if name == "jacobsthal":
        # positive-part diagonal: compositions of n+1-i with i parts
        return sum(
            1
            for i in range(1, n + 1)
            for c in enumerate_compositions(k, n + 1 - i)
            if c.positive_count == i
        )
    if name == "pell":
        if k < 2:
            raise DomainError(f"the k-Pell sequence needs k >= 2, got {k}")
        # zero-count diagonal: compositions of n-i with i zeros
        return sum(
            1
            for i in range(n)
            for c in enumerate_compositions(k, n - i)
            if zero_count(c) == i
        )
    _, restriction, _ = SEQUENCES[name]
    return sum(1 for _ in enumerate_restricted(k, n, restriction))


def sequence_values(name: str, k: int, terms: int, via: str, settings: Settings) -> SequenceDocument:
    """First `terms` values of a named sequence, computed the requested way"""
    if terms < 1:
        raise UsageError(f"--terms must be positive, got {terms}")
    start, _, family = SEQUENCES[name]
    indices = range(start, start + terms)
    if via == "gf":
        series = gf_coefficients(family, k, start + terms).as_integers()
        values = series[start:]
    elif via == "enumeration":
        if indices[-1] > settings.sequence_enumeration_cap:
            raise UsageError(
                f"--via enumeration is limited to index {settings.sequence_enumeration_cap}, "
                f"asked for {indices[-1]}"
            )
        values = [_by_enumeration(name, k, n) if n else 0 for n in indices]
    else:
        values = [_by_recurrence(name, k, n) for n in indices]
    return SequenceDocument(name=name, k=k, via=via, start=start, values=values)


# Subcommands

def cmd_enumerate(args, settings: Settings, out: TextIO) -> int:
    size = (args.k + 1) ** (args.n - 1) if args.k > 0 and args.n > 0 else 0
    if size > settings.enumeration_cap:
        raise UsageError(
            f"k={args.k}, n={args.n} has {size} compositions, above the cap of {settings.enumeration_cap}"
        )
    restriction = as_restriction(args.restrict.replace("-", "_"))
    stream = enumerate_restricted(args.k, args.n, restriction)
    count = write_compositions(out, stream, CompositionForm(args.form), OutputFormat(args.format))
    logger.debug(f"Wrote {count} compositions")
    return EXIT_OK


def cmd_triangle(args, settings: Settings, out: TextIO) -> int:
    built = triangle(args.k, STAT_ALIASES[args.stat], args.rows)
    write_triangle(out, built, OutputFormat(args.format))
    return EXIT_OK


def cmd_sequence(args, settings: Settings, out: TextIO) -> int:
    document = sequence_values(args.name, args.k, args.terms, args.via, settings)
    write_sequence(out, document, OutputFormat(args.format))
    return EXIT_OK


def cmd_verify(args, settings: Settings, out: TextIO) -> int:
    max_n = args.max_n if args.max_n is not None else settings.verify_max_n
    max_k = args.max_k if args.max_k is not None else settings.verify_max_k
    if max_n < 1 or max_k < 1:
        raise UsageError("--max-n and --max-k must be positive")
    bounds = Bounds(
        max_n=max_n,
        max_k=max_k,
        cap=settings.enumeration_cap,
        extra_states=settings.cluster_extra_states,
    )
    outcomes = run_verify(args.suite, bounds, jobs=args.jobs or settings.verify_jobs)
    report = verify_report(outcomes, max_n, max_k)
    write_verify(out, report, OutputFormat(args.format))
    return EXIT_OK if report.passed else EXIT_VERIFY_FAILED


def cmd_cluster(args, settings: Settings, out: TextIO) -> int:
    fmt = OutputFormat(args.format)
    if args.emit == "identity":
        document = cluster_document(args.g, args.n, identity=identity_sum(args.g, args.n))
        write_cluster(out, document, fmt)
        return EXIT_OK
    q = args.q if args.q is not None else args.g * args.n + settings.cluster_extra_states
    if args.emit == "b":
        b = cluster_coefficients(args.g, args.n, q)[args.n - 1]
        write_polynomial(out, polynomial_document(args.g, args.n, b), fmt)
        return EXIT_OK
    decomposition = decompose_b(args.g, args.n, q)
    document = cluster_document(
        args.g,
        args.n,
        q=q,
        decomposition=decomposition,
        closed_forms={c: closed_form_cg(args.g, c) for c in decomposition},
        sign=observed_sign(decomposition.values()),
        identity=identity_sum(args.g, args.n),
    )
    write_cluster(out, document, fmt)
    return EXIT_OK


COMMANDS = {
    "enumerate": cmd_enumerate,
    "triangle": cmd_triangle,
    "sequence": cmd_sequence,
    "verify": cmd_verify,
    "cluster": cmd_cluster,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="multicomp",
        description="Enumerate, count and verify multicompositions",
    )
    parser.add_argument('--log-level', default=None, help='Logging level (default from settings)')
    parser.add_argument('--log-format', choices=['text', 'json'], default=None, help='Log record format')

    formats = [item.value for item in OutputFormat]
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--format', choices=formats, default='text', help='Output format')

    sub = parser.add_subparsers(dest="command", required=True)

    enumerate_parser = sub.add_parser('enumerate', parents=[common], help='List the k-compositions of n')
    enumerate_parser.add_argument('--k', type=int, required=True, help='Number of colors')
    enumerate_parser.add_argument('--n', type=int, required=True, help='Total')
    enumerate_parser.add_argument('--form', choices=[f.value for f in CompositionForm], default='colored')
    enumerate_parser.add_argument(
        '--restrict',
        choices=['none', 'one_two', 'one-two', 'odd', 'no_ones', 'no-ones'],
        default='none',
        help='Keep only compositions whose parts satisfy the restriction',
    )

    triangle_parser = sub.add_parser('triangle', parents=[common], help='Counting triangle by a part statistic')
    triangle_parser.add_argument('--k', type=int, required=True, help='Number of colors')
    triangle_parser.add_argument('--stat', choices=sorted(STAT_ALIASES), required=True, help='Part statistic')
    triangle_parser.add_argument('--rows', type=int, required=True, help='Number of rows')

    sequence_parser = sub.add_parser('sequence', parents=[common], help='First terms of a counting sequence')
    sequence_parser.add_argument('--name', choices=list(SEQUENCES), required=True)
    sequence_parser.add_argument('--k', type=int, required=True, help='Number of colors')
    sequence_parser.add_argument('--terms', type=int, required=True, help='How many terms')
    sequence_parser.add_argument('--via', choices=['recurrence', 'gf', 'enumeration'], default='recurrence')

    verify_parser = sub.add_parser('verify', parents=[common], help='Run verification suites')
    verify_parser.add_argument('--suite', choices=list(SUITES) + ['all'], default='all')
    verify_parser.add_argument('--max-n', type=int, default=None, help='Largest n checked')
    verify_parser.add_argument('--max-k', type=int, default=None, help='Largest k checked')
    verify_parser.add_argument('--jobs', type=int, default=None, help='Parallel suite workers')

    cluster_parser = sub.add_parser('cluster', parents=[common], help='Cluster coefficients for g-exclusion')
    cluster_parser.add_argument('--g', type=int, required=True, help='Exclusion parameter (g >= 2)')
    cluster_parser.add_argument('--n', type=int, required=True, help='Cluster order')
    cluster_parser.add_argument('--q', type=int, default=None, help='Number of one-body states (default g*n + extra)')
    cluster_parser.add_argument('--emit', choices=['coefficients', 'identity', 'b'], default='coefficients')

    return parser


def main(argv: Optional[List[str]] = None, out: Optional[TextIO] = None) -> int:
    """Main entry point"""
    parser = build_parser()
    args = parser.parse_args(argv)
    out = out or sys.stdout

    settings = get_settings()
    overrides = {}
    if args.log_level:
        overrides["log_level"] = args.log_level.upper()
    if args.log_format:
        overrides["log_format"] = args.log_format
    if overrides:
        settings = settings.model_copy(update=overrides)

    try:
        configure_logging(settings)
    except ValueError as e:
        print(f"multicomp: bad logging configuration: {e}", file=sys.stderr)
        return EXIT_USAGE

    try:
        return COMMANDS[args.command](args, settings, out)
    except MulticompError as e:
        print(f"multicomp {args.command}: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
