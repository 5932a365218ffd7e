"""Command line verifier for monomial curve torsion identities.

Exit codes separate the three failure channels: 0 means every checked
identity held, 2 means at least one identity was violated (a
counterexample), and 1 means the tool could not complete the check
(usage error, invalid input, or an oracle that caught itself computing
nonsense).  Output for a fixed command line is byte-identical across
runs; machine formats keep stdout pure and push summaries to stderr.
"""

from __future__ import annotations

import csv
import json
import sys

import click

from .campaign import CampaignConfig, ChainResult, build_chain, run_campaign
from .errors import FormulaNotApplicable, OracleError
from .formulas import CurveReport, full_report
from .ideals import IdealError, kaehler_different
from .presentation import (PresentationError, blowup_presentation,
                           presentation_of)
from .semigroup import SemigroupError, enumerate_by_genus, from_generators

_DOMAIN_ERRORS = (SemigroupError, PresentationError, IdealError, OracleError,
                  FormulaNotApplicable)

_FORMAT_OPTION = click.option(
    "--format", "fmt", type=click.Choice(["human", "jsonl", "csv"]),
    default="human", show_default=True,
    help="Human-readable report, one JSON record per line, or CSV rows.")

_TIEBREAK_OPTION = click.option(
    "--reverse-tiebreak", is_flag=True,
    help="Pick relation representatives from the opposite end of each "
         "tie; all reported lengths must be unchanged.")


@click.group()
def cli() -> None:
    """Verify torsion and length identities for monomial curves.

    Curves are given by the minimal generators of their value semigroup,
    for example: analyze 4 6 7.
    """


def _check_mark(value: bool | None) -> str:
    if value is None:
        return "n/a "
    return "pass" if value else "FAIL"


def _curve_label(generators) -> str:
    return "<" + ",".join(str(g) for g in generators) + ">"


def _render_human(report: CurveReport, reverse_tiebreak: bool) -> None:
    r = report
    echo = click.echo
    echo(f"curve {_curve_label(r.generators)}")
    echo(f"  multiplicity {r.multiplicity}, embedding dimension "
         f"{r.embedding_dimension}, genus {r.genus}")
    echo(f"  frobenius {r.frobenius}, conductor {r.conductor}, "
         f"symmetric {'yes' if r.symmetric else 'no'}")
    echo(f"  classification: {r.classification} "
         f"(deviation {r.deviation} -> {r.blowup_deviation})")
    echo(f"  transform {_curve_label(r.blowup_generators)}, "
         f"colength {r.colength}")
    S = from_generators(r.generators)
    if r.embedding_dimension > 1:
        pres = presentation_of(S, reverse_tiebreak)
        bpres = blowup_presentation(S, reverse_tiebreak)
        echo(f"  relations: {pres.mu} of degrees "
             f"{' '.join(str(d) for d in pres.betti_degrees)}; "
             f"transform tuple needs {bpres.mu}")
        echo(f"  derivative different {kaehler_different(S, pres)}, "
             f"inverse different gap {r.different_inverse_gap}")
    echo(f"  torsion length {r.torsion_length}, after transform "
         f"{r.blowup_torsion_length}, drop {r.torsion_drop}")
    echo(f"  differential dims over parameter line: {r.differential_total} "
         f"here, {r.blowup_differential_total} after transform")
    if r.blowup_over_rescaled is not None:
        echo(f"  module lengths: blowup/rescaled {r.blowup_over_rescaled}, "
             f"blowup/lifted {r.blowup_over_lifted}, lifted/rescaled "
             f"{r.lifted_over_rescaled}, rescaled/original "
             f"{r.rescaled_over_original}")
    echo("  checks:")
    for name, value in r.checks.items():
        echo(f"    {_check_mark(value)} {name}")
    echo(f"result: {'PASS' if r.all_pass else 'FAIL'}")


def _render_jsonl(report: CurveReport) -> None:
    click.echo(json.dumps(report.to_dict(), separators=(", ", ": ")))


_CSV_HEADER = ("generators", "classification", "check", "result")


def _csv_writer():
    return csv.writer(sys.stdout, lineterminator="\n")


def _render_csv_rows(writer, report: CurveReport) -> None:
    gens = " ".join(str(g) for g in report.generators)
    for name, value in report.checks.items():
        result = "na" if value is None else ("pass" if value else "fail")
        writer.writerow((gens, report.classification, name, result))


def _summary_lines(summary) -> list[str]:
    lines = [
        f"curves examined: {summary.curves_examined}",
        f"identity violations: {len(summary.violations)}",
        f"oracle errors: {len(summary.oracle_errors)}",
    ]
    for genus, count in summary.counts_by_genus:
        lines.append(f"genus {genus}: {count} curves")
    for label, count in summary.counts_by_classification:
        lines.append(f"class {label}: {count} curves")
    if summary.min_singular_torsion is not None:
        lines.append(f"least torsion among singular curves: "
                     f"{summary.min_singular_torsion}")
    if summary.min_ci_drop_excess is not None:
        lines.append(f"least complete-intersection drop excess: "
                     f"{summary.min_ci_drop_excess}")
    for generators, failed in summary.violations:
        lines.append(f"violated by {_curve_label(generators)}: "
                     + " ".join(failed))
    for generators, message in summary.oracle_errors:
        lines.append(f"oracle error on {_curve_label(generators)}: {message}")
    return lines


@cli.command()
@click.argument("generators", nargs=-1, type=click.IntRange(min=1),
                required=True)
@_FORMAT_OPTION
@_TIEBREAK_OPTION
@click.pass_context
def analyze(ctx, generators: tuple[int, ...], fmt: str,
            reverse_tiebreak: bool) -> None:
    """Verify every applicable identity for one curve."""
    S = from_generators(generators)
    report = full_report(S, reverse_tiebreak)
    if fmt == "human":
        _render_human(report, reverse_tiebreak)
    elif fmt == "jsonl":
        _render_jsonl(report)
    else:
        writer = _csv_writer()
        writer.writerow(_CSV_HEADER)
        _render_csv_rows(writer, report)
    if not report.all_pass:
        ctx.exit(2)


@cli.command()
@click.option("--max-genus", type=click.IntRange(min=0), required=True,
              help="Verify every curve with at most this many gaps.")
@click.option("--max-multiplicity", type=click.IntRange(min=1), default=None,
              help="Skip curves of larger multiplicity.")
@click.option("--jobs", type=click.IntRange(min=1), default=1,
              show_default=True, help="Worker processes.")
@click.option("--fail-fast", is_flag=True,
              help="Stop at the first violation or oracle error.")
@_FORMAT_OPTION
@_TIEBREAK_OPTION
@click.pass_context
def verify(ctx, max_genus: int, max_multiplicity: int | None, jobs: int,
           fail_fast: bool, fmt: str, reverse_tiebreak: bool) -> None:
    """Verify the whole corpus up to a genus bound."""
    config = CampaignConfig(max_genus=max_genus,
                            max_multiplicity=max_multiplicity,
                            jobs=jobs, fail_fast=fail_fast,
                            reverse_tiebreak=reverse_tiebreak)
    summary, reports = run_campaign(config)
    if fmt == "human":
        for report in reports:
            status = "PASS" if report.all_pass else "FAIL"
            line = (f"{status} {_curve_label(report.generators)} "
                    f"genus {report.genus} {report.classification} "
                    f"torsion {report.torsion_length} "
                    f"drop {report.torsion_drop}")
            failed = [n for n, ok in report.checks.items() if ok is False]
            if failed:
                line += " [" + " ".join(failed) + "]"
            click.echo(line)
        for line in _summary_lines(summary):
            click.echo(line)
    elif fmt == "jsonl":
        for report in reports:
            _render_jsonl(report)
        for line in _summary_lines(summary):
            click.echo(line, err=True)
    else:
        writer = _csv_writer()
        writer.writerow(_CSV_HEADER)
        for report in reports:
            _render_csv_rows(writer, report)
        for line in _summary_lines(summary):
            click.echo(line, err=True)
    if summary.oracle_errors:
        ctx.exit(1)
    if summary.violations:
        ctx.exit(2)


@cli.command("enumerate")
@click.option("--max-genus", type=click.IntRange(min=0), required=True,
              help="List every curve with at most this many gaps.")
@click.option("--max-multiplicity", type=click.IntRange(min=1), default=None,
              help="Skip curves of larger multiplicity.")
@_FORMAT_OPTION
def enumerate_cmd(max_genus: int, max_multiplicity: int | None,
                  fmt: str) -> None:
    """List the corpus of curves up to a genus bound."""
    counts: dict[int, int] = {}
    writer = None
    if fmt == "csv":
        writer = _csv_writer()
        writer.writerow(("generators", "genus", "multiplicity",
                         "embedding_dimension", "symmetric"))
    for S in enumerate_by_genus(max_genus):
        if max_multiplicity is not None and S.multiplicity > max_multiplicity:
            continue
        counts[S.genus] = counts.get(S.genus, 0) + 1
        if fmt == "human":
            click.echo(f"{_curve_label(S.min_generators)} genus {S.genus} "
                       f"multiplicity {S.multiplicity} embdim {S.embdim}"
                       + (" symmetric" if S.is_symmetric else ""))
        elif fmt == "jsonl":
            click.echo(json.dumps({
                "generators": list(S.min_generators),
                "genus": S.genus,
                "multiplicity": S.multiplicity,
                "embedding_dimension": S.embdim,
                "symmetric": S.is_symmetric,
            }, separators=(", ", ": ")))
        else:
            writer.writerow((" ".join(str(g) for g in S.min_generators),
                             S.genus, S.multiplicity, S.embdim,
                             "yes" if S.is_symmetric else "no"))
    lines = [f"genus {g}: {c} curves" for g, c in sorted(counts.items())]
    lines.append(f"total: {sum(counts.values())} curves")
    for line in lines:
        click.echo(line, err=fmt != "human")


@cli.command()
@click.argument("generators", nargs=-1, type=click.IntRange(min=1),
                required=True)
@_FORMAT_OPTION
@_TIEBREAK_OPTION
@click.pass_context
def chain(ctx, generators: tuple[int, ...], fmt: str,
          reverse_tiebreak: bool) -> None:
    """Transform down to a regular curve, telescoping the formula drops."""
    S = from_generators(generators)
    result: ChainResult = build_chain(S, reverse_tiebreak)
    if fmt == "human":
        for step in result.steps:
            click.echo(f"{_curve_label(step.generators)} "
                       f"{step.classification}: {step.formula_name} "
                       f"predicts drop {step.formula_drop}")
        click.echo(f"telescoped drops: {result.telescoped_total}")
        click.echo(f"torsion length at start: {result.start_torsion}")
        click.echo("telescopes: "
                   + ("yes" if result.telescopes else "NO"))
    elif fmt == "jsonl":
        for step in result.steps:
            click.echo(json.dumps({
                "generators": list(step.generators),
                "classification": step.classification,
                "formula": step.formula_name,
                "drop": step.formula_drop,
            }, separators=(", ", ": ")))
        click.echo(f"telescoped drops: {result.telescoped_total}", err=True)
        click.echo(f"torsion length at start: {result.start_torsion}",
                   err=True)
    else:
        writer = _csv_writer()
        writer.writerow(("generators", "classification", "formula", "drop"))
        for step in result.steps:
            writer.writerow((" ".join(str(g) for g in step.generators),
                             step.classification, step.formula_name,
                             step.formula_drop))
        click.echo(f"telescoped drops: {result.telescoped_total}", err=True)
        click.echo(f"torsion length at start: {result.start_torsion}",
                   err=True)
    if not result.telescopes:
        ctx.exit(2)


def main(argv=None) -> None:
    """Entry point mapping every failure to the documented exit codes.

    Violations exit 2; anything that keeps the tool from finishing the
    check (bad usage, invalid curve, oracle failure) exits 1.  Click's
    own usage handling would exit 2, so it is remapped here.
    """
    try:
        code = cli.main(args=argv, standalone_mode=False)
    except click.exceptions.Abort:
        click.echo("error: aborted", err=True)
        sys.exit(1)
    except click.ClickException as exc:
        click.echo(f"error: {exc.format_message()}", err=True)
        sys.exit(1)
    except _DOMAIN_ERRORS as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(1)
    sys.exit(code if isinstance(code, int) else 0)
