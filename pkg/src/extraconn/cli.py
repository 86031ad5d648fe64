"""Command-line front end.

Subcommands expose every computation and emit the value tables, profile
CSVs, ratio CSVs and adjacency bitmaps as files. Exit codes: 0 success,
1 domain or I/O error, 2 usage error, 3 verification failure. All output
is deterministic given the flags (plus the seed, where one applies).
"""

from __future__ import annotations

import functools
import json
import sys
from pathlib import Path

import click

from .concentration import (
    breakpoints,
    concentration_report,
    lambda_at,
    lambda_profile,
    ratio_table,
    table2_breakpoints,
)
from .errors import DomainError, ResourceLimitError, VerificationError
from .extremal import Family, xi
from .graphs import GraphSpec, adjacency_bitmap, pbm_text
from .oracle import sample_cuts, xi_bruteforce_sweep

_FAMILY_KINDS = {"qn": None, "fqn": 1, "q2": 2}


def _handle_errors(fn):
    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except VerificationError as exc:
            click.echo(f"verification failure: {exc}", err=True)
            sys.exit(3)
        except (DomainError, ResourceLimitError, OSError) as exc:
            click.echo(f"error: {exc}", err=True)
            sys.exit(1)

    return wrapper


def _resolve_k(family: str | None, k: int | None) -> int | None:
    """Combine --family and --k into one complement parameter."""
    if k is not None:
        if family is not None and _FAMILY_KINDS.get(family, k) != k:
            raise click.UsageError(f"--family {family} conflicts with --k {k}")
        return k
    return _FAMILY_KINDS[family or "q2"]


def _closed_form_family(n: int, family: str | None, k: int | None) -> Family:
    resolved = _resolve_k(family, k)
    if resolved is None:
        return Family.hypercube(n)
    if resolved == 2:
        return Family.enhanced(n)
    raise DomainError(
        f"no closed form for k={resolved}; supported families are qn (plain) and q2 (k=2)"
    )


def _graph_spec(n: int, family: str | None, k: int | None) -> GraphSpec:
    return GraphSpec(n, _resolve_k(family, k))


def _write_output(out: str, text: str) -> None:
    if out == "-":
        click.echo(text, nl=False)
    else:
        Path(out).write_text(text)


_n_option = click.option("--n", "n", type=int, required=True, help="Dimension.")
_family_option = click.option(
    "--family",
    type=click.Choice(sorted(_FAMILY_KINDS)),
    default=None,
    help="Graph family: qn (plain), fqn (k=1), q2 (k=2). Default q2.",
)
_k_option = click.option("--k", "k", type=int, default=None, help="Complement parameter.")
_out_option = click.option("--out", default="-", help="Output path ('-' for stdout).")


@click.group()
def main():
    """Edge-connectivity reliability profiles for hypercube-family networks."""


@main.command("xi")
@_n_option
@_family_option
@_k_option
@click.option("--m", "m", type=int, required=True, help="Subset cardinality.")
@_handle_errors
def xi_cmd(n, family, k, m):
    """Minimum boundary over size-m sets with both sides connected."""
    click.echo(str(xi(_closed_form_family(n, family, k), m)))


@main.command("ex")
@_n_option
@_family_option
@_k_option
@click.option("--m", "m", type=int, required=True, help="Subset cardinality.")
@_handle_errors
def ex_cmd(n, family, k, m):
    """Twice the maximum induced edge count over size-m sets."""
    click.echo(str(_closed_form_family(n, family, k).ex(m)))


@main.command("lambda")
@_n_option
@_family_option
@_k_option
@click.option("--h", "h", type=int, required=True, help="Minimum component size.")
@_handle_errors
def lambda_cmd(n, family, k, h):
    """Minimum cut leaving two connected components of at least h vertices."""
    click.echo(str(lambda_at(_closed_form_family(n, family, k), h)))


def _profile_csv(profile) -> str:
    lines = ["h,xi,lambda,optimal"]
    for h in range(1, profile.half + 1):
        x = profile.xi_at(h)
        lam = profile.lambda_at(h)
        lines.append(f"{h},{x},{lam},{1 if x == lam else 0}")
    return "\n".join(lines) + "\n"


def _profile_json(profile) -> str:
    rows = [
        {
            "h": h,
            "xi": profile.xi_at(h),
            "lambda": profile.lambda_at(h),
            "optimal": profile.xi_at(h) == profile.lambda_at(h),
        }
        for h in range(1, profile.half + 1)
    ]
    return json.dumps({"n": profile.family.n, "family": profile.family.kind, "rows": rows}) + "\n"


@main.command("profile")
@_n_option
@_family_option
@_k_option
@_out_option
@click.option("--format", "fmt", type=click.Choice(["csv", "json"]), default="csv")
@_handle_errors
def profile_cmd(n, family, k, out, fmt):
    """Full xi/lambda profile for 1 <= h <= 2^(n-1)."""
    profile = lambda_profile(_closed_form_family(n, family, k))
    text = _profile_csv(profile) if fmt == "csv" else _profile_json(profile)
    _write_output(out, text)


@main.command("breakpoints")
@_n_option
@_handle_errors
def breakpoints_cmd(n):
    """The h values where lambda is optimal inside the constant interval."""
    points = table2_breakpoints(n) if 4 <= n <= 8 else breakpoints(n)
    click.echo(" ".join(str(v) for v in points.values))


@main.command("concentration")
@_n_option
@_handle_errors
def concentration_cmd(n):
    """Verify and print the constant-lambda interval report (n >= 9)."""
    report = concentration_report(n)
    click.echo(f"n: {report.n}")
    click.echo(f"interval: [{report.h_min}, {report.h_max}]")
    click.echo(f"constant: {report.constant}")
    click.echo("breakpoints: " + " ".join(str(v) for v in report.breakpoints))
    click.echo("optimal_h: " + " ".join(str(v) for v in report.optimal_h))
    click.echo(f"lambda_below: {report.lambda_below} (gap {report.gap})")


@main.command("ratio")
@click.option("--n-min", type=int, default=4, show_default=True)
@click.option("--n-max", type=int, default=31, show_default=True)
@_out_option
@_handle_errors
def ratio_cmd(n_min, n_max, out):
    """CSV of g(n) and the truncated percentage g(n)/2^(n-1)."""
    rows = ratio_table(n_min, n_max)
    text = "n,g,R_percent\n" + "".join(f"{r.n},{r.g},{r.display}\n" for r in rows)
    _write_output(out, text)


@main.command("bitmap")
@_n_option
@_family_option
@_k_option
@_out_option
@_handle_errors
def bitmap_cmd(n, family, k, out):
    """Adjacency matrix as a plain-text portable bitmap (P1)."""
    spec = _graph_spec(n, family, k)
    _write_output(out, pbm_text(adjacency_bitmap(spec)))


@main.command("verify")
@_n_option
@_family_option
@_k_option
@click.option("--mode", type=click.Choice(["exact", "sample"]), default="exact", show_default=True)
@click.option("--samples", type=int, default=10000, show_default=True)
@click.option("--seed", type=int, default=0, show_default=True)
@_handle_errors
def verify_cmd(n, family, k, mode, samples, seed):
    """Check the closed forms against graph-level ground truth.

    exact: exhaustive minima for every m (n <= 5). sample: seeded random
    cuts checked against the xi lower bound (n <= 12).
    """
    fam = _closed_form_family(n, family, k)
    spec = fam.graph_spec()
    if mode == "exact":
        half = fam.half
        results = xi_bruteforce_sweep(spec, half)
        suffix = [r.xi_exact for r in results]
        for i in range(half - 2, -1, -1):
            suffix[i] = min(suffix[i], suffix[i + 1])
        profile = lambda_profile(fam)
        passed = 0
        for m in range(1, half + 1):
            ok = (
                results[m - 1].xi_exact == profile.xi_at(m)
                and suffix[m - 1] == profile.lambda_at(m)
            )
            passed += ok
            click.echo(
                f"m={m} xi_exact={results[m - 1].xi_exact} xi={profile.xi_at(m)} "
                f"lambda_exact={suffix[m - 1]} lambda={profile.lambda_at(m)} "
                f"{'PASS' if ok else 'FAIL'}"
            )
        click.echo(f"{passed}/{half} PASS")
        if passed != half:
            sys.exit(3)
    else:
        violations = 0
        for cut in sample_cuts(spec, samples, seed):
            if cut.cut_size < xi(fam, cut.h):
                violations += 1
        click.echo(f"violations: {violations}")
        if violations:
            sys.exit(3)


if __name__ == "__main__":
    main()
