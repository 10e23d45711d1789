"""
Formatters for the command-line frontend: text, csv and json
Everything is written to the given stream; numbers are exact
"""

import csv
import json
from enum import Enum
from fractions import Fraction
from typing import Dict, Iterable, List, TextIO

from ..cluster import GComposition, StatePolynomial, render_monomial
from ..core import ColoredComposition, CompositionForm, render, to_json_dict, to_markers, to_zero_form
from ..counting import Triangle
from .schemas import (
    CheckRecord,
    ClusterDocument,
    CoefficientEntry,
    IdentityEntry,
    PolynomialDocument,
    PolynomialTerm,
    SequenceDocument,
    TriangleDocument,
    VerifyReport,
    rational,
)
from .verify import SuiteOutcome


class OutputFormat(str, Enum):
    TEXT = "text"
    CSV = "csv"
    JSON = "json"


def _in_form(c: ColoredComposition, form: CompositionForm):
    if form is CompositionForm.ZEROS:
        return to_zero_form(c)
    if form is CompositionForm.MARKERS:
        return to_markers(c)
    return c


def write_compositions(
    stream: TextIO,
    compositions: Iterable[ColoredComposition],
    form: CompositionForm,
    fmt: OutputFormat,
) -> int:
    """Stream compositions without holding them in memory; returns how many were written"""
    count = 0
    if fmt is OutputFormat.CSV:
        writer = csv.writer(stream, lineterminator="\n")
        writer.writerow(["colored", "zeros", "markers"])
        for c in compositions:
            writer.writerow([render(c), render(to_zero_form(c)), render(to_markers(c))])
            count += 1
    elif fmt is OutputFormat.JSON:
        stream.write("[")
        for c in compositions:
            stream.write(("," if count else "") + json.dumps(to_json_dict(_in_form(c, form))))
            count += 1
        stream.write("]\n")
    else:
        for c in compositions:
            stream.write(render(_in_form(c, form)) + "\n")
            count += 1
    return count


def write_triangle(stream: TextIO, built: Triangle, fmt: OutputFormat) -> None:
    if fmt is OutputFormat.CSV:
        writer = csv.writer(stream, lineterminator="\n")
        writer.writerow(["n", "l", "count"])
        for n, row in enumerate(built.rows, start=1):
            for offset, value in enumerate(row):
                writer.writerow([n, built.first_index + offset, value])
    elif fmt is OutputFormat.JSON:
        document = TriangleDocument(
            k=built.k,
            statistic=built.statistic.value,
            first_index=built.first_index,
            rows=[list(row) for row in built.rows],
        )
        stream.write(document.model_dump_json() + "\n")
    else:
        for row in built.rows:
            stream.write(" ".join(str(value) for value in row) + "\n")


def write_sequence(stream: TextIO, document: SequenceDocument, fmt: OutputFormat) -> None:
    if fmt is OutputFormat.CSV:
        writer = csv.writer(stream, lineterminator="\n")
        writer.writerow(["index", "value"])
        for offset, value in enumerate(document.values):
            writer.writerow([document.start + offset, value])
    elif fmt is OutputFormat.JSON:
        stream.write(document.model_dump_json() + "\n")
    else:
        stream.write(" ".join(str(value) for value in document.values) + "\n")


def cluster_document(
    g: int,
    n: int,
    q: int = None,
    decomposition: Dict[GComposition, Fraction] = None,
    closed_forms: Dict[GComposition, Fraction] = None,
    sign: int = None,
    identity=None,
) -> ClusterDocument:
    coefficients = None
    if decomposition is not None:
        coefficients = [
            CoefficientEntry(
                composition=list(composition.parts),
                value=rational(value),
                closed_form=rational(closed_forms[composition]),
            )
            for composition, value in decomposition.items()
        ]
    return ClusterDocument(
        g=g,
        n=n,
        q=q,
        sign=sign,
        coefficients=coefficients,
        identity=IdentityEntry(lhs=rational(identity[0]), rhs=rational(identity[1])) if identity else None,
    )


def write_cluster(stream: TextIO, document: ClusterDocument, fmt: OutputFormat) -> None:
    if fmt is OutputFormat.JSON:
        stream.write(document.model_dump_json(exclude_none=True) + "\n")
        return
    if fmt is OutputFormat.CSV:
        writer = csv.writer(stream, lineterminator="\n")
        if document.coefficients is not None:
            writer.writerow(["composition", "value", "closed_form"])
            for entry in document.coefficients:
                writer.writerow(["+".join(map(str, entry.composition)), entry.value, entry.closed_form])
        if document.identity is not None:
            writer.writerow(["lhs", "rhs"])
            writer.writerow([document.identity.lhs, document.identity.rhs])
        return
    if document.coefficients is not None:
        for entry in document.coefficients:
            composition = "+".join(map(str, entry.composition))
            stream.write(f"{composition}\t{entry.value}\t{entry.closed_form}\n")
        if document.sign is not None:
            stream.write(f"sign\t{document.sign:+d}\n")
    if document.identity is not None:
        stream.write(f"lhs\t{document.identity.lhs}\n")
        stream.write(f"rhs\t{document.identity.rhs}\n")


def polynomial_document(g: int, n: int, b: StatePolynomial) -> PolynomialDocument:
    terms = [
        PolynomialTerm(monomial=render_monomial(monomial), coefficient=rational(b.coefficient(monomial)))
        for monomial in b.monomials()
    ]
    return PolynomialDocument(g=g, n=n, q=b.q, text=b.render(), terms=terms)


def write_polynomial(stream: TextIO, document: PolynomialDocument, fmt: OutputFormat) -> None:
    if fmt is OutputFormat.JSON:
        stream.write(document.model_dump_json() + "\n")
    elif fmt is OutputFormat.CSV:
        writer = csv.writer(stream, lineterminator="\n")
        writer.writerow(["monomial", "coefficient"])
        for term in document.terms:
            writer.writerow([term.monomial, term.coefficient])
    else:
        for term in document.terms:
            stream.write(f"{term.coefficient}\t{term.monomial}\n")


def verify_report(outcomes: List[SuiteOutcome], max_n: int, max_k: int) -> VerifyReport:
    return VerifyReport(
        suites=[outcome.suite for outcome in outcomes],
        max_n=max_n,
        max_k=max_k,
        passed=all(outcome.passed for outcome in outcomes),
        checks=[
            CheckRecord(suite=c.suite, name=c.name, passed=c.passed, detail=c.detail)
            for outcome in outcomes
            for c in outcome.checks
        ],
        notes=[note for outcome in outcomes for note in outcome.notes],
        tables={outcome.suite: outcome.table for outcome in outcomes if outcome.table},
    )


def write_verify(stream: TextIO, report: VerifyReport, fmt: OutputFormat) -> None:
    if fmt is OutputFormat.JSON:
        stream.write(report.model_dump_json() + "\n")
        return
    if fmt is OutputFormat.CSV:
        writer = csv.writer(stream, lineterminator="\n")
        writer.writerow(["suite", "check", "status", "detail"])
        for check in report.checks:
            writer.writerow([check.suite, check.name, "pass" if check.passed else "fail", check.detail])
        return
    for check in report.checks:
        status = "PASS" if check.passed else "FAIL"
        line = f"{status}  {check.suite}: {check.name}"
        stream.write(line + (f"  ({check.detail})" if check.detail else "") + "\n")
    for suite, rows in report.tables.items():
        stream.write(f"\n{suite} identity table\n")
        stream.write("g\tn\tlhs\trhs\n")
        for row in rows:
            stream.write(f"{row['g']}\t{row['n']}\t{row['lhs']}\t{row['rhs']}\n")
    if report.notes:
        stream.write("\nnotes\n")
        for note in report.notes:
            stream.write(f"- {note}\n")
    stream.write(f"\n{'passed' if report.passed else 'FAILED'}\n")
