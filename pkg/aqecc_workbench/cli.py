"""
Command line interface for the workbench.

Commands print JSON (or CSV for tables) on stdout and log to stderr. Exit
codes: 0 verified, 2 bound only or over budget, 3 hypothesis failed, 1 refuted
or error.
"""

from __future__ import annotations

import json
import sys
import time
from collections.abc import Callable
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Any

import click
from loguru import logger

from .css import (
    ClaimStatus,
    CssPair,
    Derivation,
    TheoremClaim,
    derive,
    direct_sum_aqecc,
    expand_aqecc,
    extend_aqecc,
    puncture_aqecc,
    require_puncture_coordinate,
    uuv_aqecc,
)
from .errors import (
    BudgetExceededError,
    HypothesisFailedError,
    InvalidParameterError,
    WorkbenchError,
)
from .families import (
    bch,
    bch_designed_aqecc,
    bch_designed_shapes,
    bch_nested_aqecc,
    character_aqecc,
    character_code,
    character_dimension,
    character_distance,
    grm,
    grm_aqecc,
    qr,
    qr_aqecc,
)
from .field import BASIS_KINDS, basis_by_name, field_of_order, make_tower
from .lincode import LinearCode, min_distance
from .settings import current_settings, using_settings
from .suites import SUITES, SuiteOptions, run_suites
from .symplectic import (
    AdditiveCode,
    AdditiveDerivation,
    direct_sum_additive,
    expand_additive,
    puncture_additive,
    stabilizer_params,
    symplectic_distance,
)
from .tables import TABLE_FAMILIES, TableCaps, TableRow, rows_to_csv, table_rows

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_BOUND_ONLY = 2
EXIT_HYPOTHESIS_FAILED = 3

STATUS_EXIT_CODES = {
    ClaimStatus.VERIFIED_EXACT: EXIT_OK,
    ClaimStatus.VERIFIED_BOUND: EXIT_BOUND_ONLY,
    ClaimStatus.BUDGET_EXCEEDED: EXIT_BOUND_ONLY,
    ClaimStatus.HYPOTHESIS_FAILED: EXIT_HYPOTHESIS_FAILED,
    ClaimStatus.REFUTED: EXIT_ERROR,
}


@dataclass
class RunManifest:
    """Everything needed to replay a command, plus what it produced."""

    command: str
    inputs: dict[str, Any]
    seed: int
    budget: dict[str, int]
    outputs: Any = None
    exit_code: int = EXIT_OK
    wall_clock: float = 0.0

    def to_dict(self) -> dict[str, Any]:
        return asdict(self)


@dataclass
class RunContext:
    manifest_path: str | None
    started: float = field(default_factory=time.perf_counter)


def to_json(data: Any) -> str:
    return json.dumps(data, indent=2, sort_keys=True)


def load_json(path: str) -> dict[str, Any]:
    try:
        with open(path) as f:
            return json.load(f)
    except FileNotFoundError as e:
        raise click.ClickException(f"File {path} not found") from e
    except json.JSONDecodeError as e:
        raise click.ClickException(f"Error parsing JSON in {path}: {e}") from e


def load_pair(path: str) -> CssPair:
    data = load_json(path)
    try:
        return CssPair.from_dict(data)
    except KeyError as e:
        raise click.ClickException(f"Missing required field in {path}: {e}") from e


def load_code(path: str) -> LinearCode:
    data = load_json(path)
    try:
        return LinearCode.from_dict(data)
    except KeyError as e:
        raise click.ClickException(f"Missing required field in {path}: {e}") from e


def load_additive(path: str) -> AdditiveCode:
    data = load_json(path)
    try:
        return AdditiveCode.from_dict(data)
    except KeyError as e:
        raise click.ClickException(f"Missing required field in {path}: {e}") from e


def finish(ctx: click.Context, outputs: Any, exit_code: int, *, text: str | None = None) -> None:
    """Print the outputs, write the manifest if one was asked for, and exit."""
    run: RunContext = ctx.find_root().obj
    click.echo(text if text is not None else to_json(outputs), nl=text is None)
    if run.manifest_path:
        settings = current_settings()
        manifest = RunManifest(
            command=ctx.command_path,
            inputs={key: value for key, value in ctx.params.items()},
            seed=settings.seed,
            budget={
                "max_codewords": settings.max_codewords,
                "max_field_order": settings.max_field_order,
                "threads": settings.threads,
            },
            outputs=outputs,
            exit_code=exit_code,
            wall_clock=round(time.perf_counter() - run.started, 6),
        )
        Path(run.manifest_path).write_text(to_json(manifest.to_dict()) + "\n")
    ctx.exit(exit_code)


def guarded(action: Callable[[], tuple[Any, int]]) -> tuple[Any, int]:
    """Run `action`, turning workbench errors into an error payload and exit code."""
    try:
        return action()
    except HypothesisFailedError as e:
        logger.warning("hypothesis failed: {}", e)
        return {"error": str(e), "tag": e.tag, "status": "hypothesis-failed"}, (
            EXIT_HYPOTHESIS_FAILED
        )
    except BudgetExceededError as e:
        logger.warning("over budget: {}", e)
        return {"error": str(e), "status": "budget-exceeded"}, EXIT_BOUND_ONLY
    except (WorkbenchError, ValueError) as e:
        click.echo(f"Error: {e}", err=True)
        return {"error": str(e)}, EXIT_ERROR


def distance_report(code: LinearCode) -> dict[str, Any] | None:
    if code.k == 0:
        return None
    try:
        return min_distance(code).to_dict()
    except BudgetExceededError as e:
        logger.warning("{}", e)
        return None


def claim_output(claim: TheoremClaim) -> tuple[dict[str, Any], int]:
    return {"claim": claim.to_dict()}, STATUS_EXIT_CODES[claim.status]


def derivation_output(derivation: Derivation | AdditiveDerivation) -> tuple[dict[str, Any], int]:
    outputs, code = claim_output(derivation.claim)
    built = derivation.pair if isinstance(derivation, Derivation) else derivation.code
    outputs["result"] = built.to_dict() if built is not None else None
    return outputs, code


@click.group()
@click.option("--budget", type=click.IntRange(min=1), help="Maximum codewords per enumeration")
@click.option("--max-field", type=click.IntRange(min=2), help="Largest field order to build")
@click.option("--threads", type=click.IntRange(min=1), help="Worker threads for enumeration")
@click.option("--seed", type=int, help="Seed for randomized verification suites")
@click.option("--manifest", type=click.Path(dir_okay=False), help="Write a run manifest here")
@click.option("--verbose", "-v", is_flag=True, help="Verbose output")
@click.pass_context
def main(
    ctx: click.Context,
    budget: int | None,
    max_field: int | None,
    threads: int | None,
    seed: int | None,
    manifest: str | None,
    verbose: bool,
) -> None:
    """Asymmetric quantum code workbench."""
    logger.remove()
    sink = logger.add(sys.stderr, level="DEBUG" if verbose else "WARNING")
    ctx.call_on_close(lambda: logger.remove(sink))

    changes = {
        name: value
        for name, value in (
            ("max_codewords", budget),
            ("max_field_order", max_field),
            ("threads", threads),
            ("seed", seed),
        )
        if value is not None
    }
    ctx.with_resource(using_settings(**changes))
    ctx.obj = RunContext(manifest)


# code


@main.group()
def code() -> None:
    """Build a classical code and report its parameters."""


@code.command("grm")
@click.option("--q", "q", type=int, required=True)
@click.option("--m", "m", type=int, required=True)
@click.option("--alpha", type=int, required=True)
@click.pass_context
def code_grm(ctx: click.Context, q: int, m: int, alpha: int) -> None:
    """Generalized Reed-Muller code R_q(alpha, m)."""

    def action() -> tuple[Any, int]:
        built, spec = grm(q, m, alpha)
        report = distance_report(built)
        outputs = {"code": built.to_dict(), "predicted": spec.to_dict(), "distance": report}
        return outputs, EXIT_OK if report else EXIT_BOUND_ONLY

    finish(ctx, *guarded(action))


@code.command("bch")
@click.option("--q", "q", type=int, required=True)
@click.option("--n", "n", type=int, required=True)
@click.option("--b", "b", type=int, default=1, show_default=True)
@click.option("--delta", type=int, required=True)
@click.pass_context
def code_bch(ctx: click.Context, q: int, n: int, b: int, delta: int) -> None:
    """BCH code of length n with designed distance delta."""

    def action() -> tuple[Any, int]:
        built, spec = bch(q, n, b, delta)
        report = distance_report(built)
        outputs = {"code": built.to_dict(), "spec": spec.to_dict(), "distance": report}
        return outputs, EXIT_OK if report or built.k == 0 else EXIT_BOUND_ONLY

    finish(ctx, *guarded(action))


@code.command("qr")
@click.option("--p", "p", type=int, required=True)
@click.option("--q", "q", type=int, required=True)
@click.pass_context
def code_qr(ctx: click.Context, p: int, q: int) -> None:
    """The four quadratic residue codes of length p over GF(q)."""

    def action() -> tuple[Any, int]:
        spec = qr(p, q)
        codes = {
            name: {"code": built.to_dict(), "distance": distance_report(built)}
            for name, built in spec.codes().items()
        }
        complete = all(entry["distance"] is not None for entry in codes.values())
        outputs = {"p": p, "q": q, "squares": list(spec.squares), "codes": codes}
        return outputs, EXIT_OK if complete else EXIT_BOUND_ONLY

    finish(ctx, *guarded(action))


@code.command("character")
@click.option("--q", "q", type=int, required=True)
@click.option("--r", "r", type=int, required=True)
@click.option("--m", "m", type=int, required=True)
@click.pass_context
def code_character(ctx: click.Context, q: int, r: int, m: int) -> None:
    """Character code C_q(r, m) of Z_2^m."""

    def action() -> tuple[Any, int]:
        built = character_code(q, r, m)
        report = distance_report(built)
        predicted = {"dimension": character_dimension(r, m), "distance": character_distance(r, m)}
        outputs = {"code": built.to_dict(), "predicted": predicted, "distance": report}
        return outputs, EXIT_OK if report else EXIT_BOUND_ONLY

    finish(ctx, *guarded(action))


# aqecc


@main.group()
def aqecc() -> None:
    """Derive asymmetric quantum codes and check construction claims."""


@aqecc.command("css")
@click.option("--pair", "pair_path", type=click.Path(dir_okay=False), help="Pair file {c1, c2}")
@click.option("--c1", "c1_path", type=click.Path(dir_okay=False), help="Outer code file")
@click.option("--c2", "c2_path", type=click.Path(dir_okay=False), help="Inner code file")
@click.pass_context
def aqecc_css(
    ctx: click.Context, pair_path: str | None, c1_path: str | None, c2_path: str | None
) -> None:
    """Parameters of the CSS code of a nested pair."""
    if pair_path is None and (c1_path is None or c2_path is None):
        raise click.UsageError("give --pair, or both --c1 and --c2")

    def action() -> tuple[Any, int]:
        if pair_path is not None:
            pair = load_pair(pair_path)
        else:
            pair = CssPair(load_code(str(c1_path)), load_code(str(c2_path)))
        params = derive(pair)
        return {"params": params.to_dict()}, EXIT_OK if params.exact else EXIT_BOUND_ONLY

    finish(ctx, *guarded(action))


@aqecc.command("expand")
@click.option("--pair", "pair_path", type=click.Path(dir_okay=False), required=True)
@click.option(
    "--basis",
    type=click.Choice(BASIS_KINDS),
    default="polynomial",
    show_default=True,
)
@click.option("--over", type=int, help="Order of the subfield to expand over (default: prime)")
@click.pass_context
def aqecc_expand(ctx: click.Context, pair_path: str, basis: str, over: int | None) -> None:
    """Expand a pair over a subfield with a basis."""

    def action() -> tuple[Any, int]:
        pair = load_pair(pair_path)
        bottom = field_of_order(over if over is not None else pair.field.p)
        chosen = basis_by_name(make_tower(bottom, pair.field), basis)
        return derivation_output(expand_aqecc(pair, chosen))

    finish(ctx, *guarded(action))


@aqecc.command("direct-sum")
@click.option("--pair-a", "a_path", type=click.Path(dir_okay=False), required=True)
@click.option("--pair-b", "b_path", type=click.Path(dir_okay=False), required=True)
@click.pass_context
def aqecc_direct_sum(ctx: click.Context, a_path: str, b_path: str) -> None:
    """Direct sum of two pairs."""
    finish(
        ctx,
        *guarded(lambda: derivation_output(direct_sum_aqecc(load_pair(a_path), load_pair(b_path)))),
    )


@aqecc.command("puncture")
@click.option("--pair", "pair_path", type=click.Path(dir_okay=False), required=True)
@click.option("--coordinate", type=int, help="0-indexed coordinate (default: first admissible)")
@click.pass_context
def aqecc_puncture(ctx: click.Context, pair_path: str, coordinate: int | None) -> None:
    """Puncture both codes of a pair at one coordinate."""

    def action() -> tuple[Any, int]:
        pair = load_pair(pair_path)
        i = coordinate if coordinate is not None else require_puncture_coordinate(pair)
        return derivation_output(puncture_aqecc(pair, i))

    finish(ctx, *guarded(action))


@aqecc.command("extend")
@click.option("--pair", "pair_path", type=click.Path(dir_okay=False), required=True)
@click.pass_context
def aqecc_extend(ctx: click.Context, pair_path: str) -> None:
    """Extend both codes of a pair by a parity coordinate."""
    finish(ctx, *guarded(lambda: derivation_output(extend_aqecc(load_pair(pair_path)))))


@aqecc.command("uuv")
@click.option("--pair-a", "a_path", type=click.Path(dir_okay=False), required=True)
@click.option("--pair-b", "b_path", type=click.Path(dir_okay=False), required=True)
@click.pass_context
def aqecc_uuv(ctx: click.Context, a_path: str, b_path: str) -> None:
    """(u|u+v) of two pairs of the same length."""
    finish(
        ctx, *guarded(lambda: derivation_output(uuv_aqecc(load_pair(a_path), load_pair(b_path))))
    )


@aqecc.command("stabilizer")
@click.option("--code", "code_path", type=click.Path(dir_okay=False), required=True)
@click.pass_context
def aqecc_stabilizer(ctx: click.Context, code_path: str) -> None:
    """Asymmetric and symplectic distances of an additive code."""

    def action() -> tuple[Any, int]:
        additive = load_additive(code_path)
        params = stabilizer_params(additive)
        outputs = {"params": params.to_dict(), "symplectic_distance": symplectic_distance(additive)}
        return outputs, EXIT_OK

    finish(ctx, *guarded(action))


@aqecc.command("additive-expand")
@click.option("--code", "code_path", type=click.Path(dir_okay=False), required=True)
@click.option(
    "--basis",
    type=click.Choice(BASIS_KINDS),
    default="polynomial",
    show_default=True,
)
@click.pass_context
def aqecc_additive_expand(ctx: click.Context, code_path: str, basis: str) -> None:
    """Expand an additive code over its prime field with phi_B."""

    def action() -> tuple[Any, int]:
        additive = load_additive(code_path)
        bottom = field_of_order(additive.field.p)
        chosen = basis_by_name(make_tower(bottom, additive.field), basis)
        return derivation_output(expand_additive(additive, chosen))

    finish(ctx, *guarded(action))


@aqecc.command("additive-puncture")
@click.option("--code", "code_path", type=click.Path(dir_okay=False), required=True)
@click.option("--coordinate", type=int, default=0, show_default=True)
@click.pass_context
def aqecc_additive_puncture(ctx: click.Context, code_path: str, coordinate: int) -> None:
    """Puncture a pure additive code at one coordinate."""
    finish(
        ctx,
        *guarded(
            lambda: derivation_output(puncture_additive(load_additive(code_path), coordinate))
        ),
    )


@aqecc.command("additive-direct-sum")
@click.option("--code-a", "a_path", type=click.Path(dir_okay=False), required=True)
@click.option("--code-b", "b_path", type=click.Path(dir_okay=False), required=True)
@click.pass_context
def aqecc_additive_direct_sum(ctx: click.Context, a_path: str, b_path: str) -> None:
    """Direct sum of two additive codes."""
    finish(
        ctx,
        *guarded(
            lambda: derivation_output(
                direct_sum_additive(load_additive(a_path), load_additive(b_path))
            )
        ),
    )


@aqecc.command("grm")
@click.option("--q", "q", type=int, required=True)
@click.option("--m", "m", type=int, required=True)
@click.option("--alpha1", type=int, required=True)
@click.option("--alpha2", type=int, required=True)
@click.option("--basis", type=click.Choice(BASIS_KINDS), default="polynomial")
@click.pass_context
def aqecc_grm(
    ctx: click.Context, q: int, m: int, alpha1: int, alpha2: int, basis: str
) -> None:
    """Nested generalized Reed-Muller pair R(alpha1) < R(alpha2)."""
    finish(
        ctx, *guarded(lambda: claim_output(grm_aqecc(q, m, alpha1, alpha2, basis_kind=basis)))
    )


@aqecc.command("character")
@click.option("--q", "q", type=int, required=True)
@click.option("--r1", type=int, required=True)
@click.option("--r2", type=int, required=True)
@click.option("--m", "m", type=int, required=True)
@click.option("--basis", type=click.Choice(BASIS_KINDS), default="polynomial")
@click.pass_context
def aqecc_character(ctx: click.Context, q: int, r1: int, r2: int, m: int, basis: str) -> None:
    """Nested character codes C(r1) < C(r2)."""
    finish(
        ctx, *guarded(lambda: claim_output(character_aqecc(q, r1, r2, m, basis_kind=basis)))
    )


@aqecc.command("bch-nested")
@click.option("--q", "q", type=int, required=True)
@click.option("--n", "n", type=int, required=True)
@click.option("--delta1", type=int, required=True)
@click.option("--delta2", type=int, required=True)
@click.option("--basis", type=click.Choice(BASIS_KINDS), default="polynomial")
@click.pass_context
def aqecc_bch_nested(
    ctx: click.Context, q: int, n: int, delta1: int, delta2: int, basis: str
) -> None:
    """Nested narrow-sense BCH codes with designed distances delta1 < delta2."""
    finish(
        ctx,
        *guarded(lambda: claim_output(bch_nested_aqecc(q, n, delta1, delta2, basis_kind=basis))),
    )


@aqecc.command("bch-designed")
@click.option("--q", "q", type=int, required=True)
@click.option("--m", "m", type=int, required=True)
@click.option("--shape", "label", required=True, help="Shape label, e.g. 4q-c-5(c=1)")
@click.option("--basis", type=click.Choice(BASIS_KINDS), default="polynomial")
@click.pass_context
def aqecc_bch_designed(ctx: click.Context, q: int, m: int, label: str, basis: str) -> None:
    """One designed-distance BCH shape at length q^m - 1."""

    def action() -> tuple[Any, int]:
        shapes = {shape.label: shape for shape in bch_designed_shapes(q)}
        if label not in shapes:
            raise InvalidParameterError(
                f"unknown shape {label!r} for q={q}; choose from {', '.join(shapes)}"
            )
        return claim_output(bch_designed_aqecc(q, m, shapes[label], basis_kind=basis))

    finish(ctx, *guarded(action))


@aqecc.command("qr")
@click.option("--p", "p", type=int, required=True)
@click.option("--q", "q", type=int, required=True)
@click.option("--basis", type=click.Choice(BASIS_KINDS), default="polynomial")
@click.pass_context
def aqecc_qr(ctx: click.Context, p: int, q: int, basis: str) -> None:
    """Quadratic residue codes of length p over GF(q)."""
    finish(ctx, *guarded(lambda: claim_output(qr_aqecc(p, q, basis_kind=basis))))


# table and verify


@main.command()
@click.option("--family", type=click.Choice(list(TABLE_FAMILIES)), required=True)
@click.option("--q", "q", type=int, help="Alphabet size (default depends on the family)")
@click.option("--max-m", type=int, help="Largest m")
@click.option("--max-n", type=int, help="Largest length for BCH families")
@click.option("--max-p", type=int, default=13, show_default=True, help="Largest QR length")
@click.option("--max-q", type=int, default=16, show_default=True, help="Largest QR alphabet")
@click.option("--basis", type=click.Choice(BASIS_KINDS), default="polynomial")
@click.option("--format", "fmt", type=click.Choice(["csv", "json"]), default="csv")
@click.pass_context
def table(
    ctx: click.Context,
    family: str,
    q: int | None,
    max_m: int | None,
    max_n: int | None,
    max_p: int,
    max_q: int,
    basis: str,
    fmt: str,
) -> None:
    """Rows of one code family with their claims and oracle status."""
    caps = TableCaps(q=q, max_m=max_m, max_n=max_n, max_p=max_p, max_q=max_q, basis=basis)

    rows: list[TableRow] = []

    def action() -> tuple[Any, int]:
        rows.extend(table_rows(family, caps))
        return [row.to_dict() for row in rows], EXIT_OK

    outputs, exit_code = guarded(action)
    text = rows_to_csv(rows) if fmt == "csv" and exit_code == EXIT_OK else None
    finish(ctx, outputs, exit_code, text=text)


@main.command()
@click.argument("suite", type=click.Choice(["all", *SUITES]))
@click.option("--max-q", type=int, default=16, show_default=True)
@click.option("--max-p", type=int, default=13, show_default=True)
@click.option("--samples", type=int, default=20, show_default=True)
@click.pass_context
def verify(ctx: click.Context, suite: str, max_q: int, max_p: int, samples: int) -> None:
    """Run a verification suite (or all of them)."""

    def action() -> tuple[Any, int]:
        options = SuiteOptions(
            seed=current_settings().seed, max_q=max_q, max_p=max_p, samples=samples
        )
        reports = run_suites(suite, options)
        passed = all(report.passed for report in reports)
        for report in reports:
            click.echo(f"{'✅' if report.passed else '❌'} {report.name}", err=True)
        return [report.to_dict() for report in reports], EXIT_OK if passed else EXIT_ERROR

    finish(ctx, *guarded(action))


if __name__ == "__main__":
    main()
