"""Command-line front end.

Subcommands mirror the analysis pipeline: ``weights`` derives criterion
weights, ``eval`` scores and ranks alternatives, ``benchmarks`` runs the
reference methods next to the main evaluation, ``sweep`` traces rankings
across compensation-reduction levels and group subsets, and ``corr``
compares two rankings.

Exit codes: 0 success, 2 input error, 3 numerical error, 4 inconsistent
pairwise judgments under --strict-cr.
"""

from __future__ import annotations

import functools
import sys
from pathlib import Path

import click
import numpy as np

from . import io as sio
from .benchmarks import DEFAULT_TAU, run_all
from .core import WeightVector
from .correlation import pearson, weighted_spearman
from .errors import InconsistentJudgmentsError, InputError, NumericalError
from .evaluation import evaluate, evaluate_with_group_s
from .sensitivity import (
    SweepSpec,
    default_s_grid,
    enumerate_group_subsets,
    run_sweep,
    subset_label,
)
from .weighting import (
    CR_THRESHOLD,
    aggregate_pairwise,
    ahp_weights,
    critic_weights,
    distribute_weights,
    entropy_weights,
)

FORMATS = ("table", "csv", "json")


def _handled(fn):
    """Map domain errors onto the documented exit codes."""

    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except InconsistentJudgmentsError as exc:
            click.echo(f"error: {exc}", err=True)
            sys.exit(4)
        except InputError as exc:
            click.echo(f"input error: {exc}", err=True)
            sys.exit(2)
        except NumericalError as exc:
            click.echo(f"numerical error: {exc}", err=True)
            sys.exit(3)

    return wrapper


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        click.echo(text, nl=False)


def _table(headers, rows) -> str:
    widths = [len(h) for h in headers]
    for row in rows:
        for i, cell in enumerate(row):
            widths[i] = max(widths[i], len(cell))
    lines = ["  ".join(h.ljust(widths[i]) for i, h in enumerate(headers)).rstrip()]
    for row in rows:
        lines.append(
            "  ".join(cell.ljust(widths[i]) for i, cell in enumerate(row)).rstrip()
        )
    return "\n".join(lines) + "\n"


def _f4(v: float) -> str:
    return f"{v:.4f}"


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise InputError(message)


def _parse_groups(text: str | None):
    if text is None:
        return None
    return tuple(g.strip() for g in text.split(",") if g.strip())


def _load_inputs(matrix_path, hierarchy_path):
    _require(hierarchy_path is not None, "--hierarchy is required")
    hierarchy = sio.load_hierarchy(hierarchy_path)
    _require(matrix_path is not None, "--matrix is required")
    matrix = sio.load_decision_matrix(matrix_path, hierarchy)
    return matrix, hierarchy


def _ahp_from_path(pairwise_path, hierarchy=None, strict_cr=False):
    """Weights from a pairwise CSV (or directory of expert CSVs).

    Multiple matrices are combined by geometric mean before the eigen
    solve, so the consistency gate applies to the consensus matrix. When a
    hierarchy is supplied, unlabeled matrices adopt its dimension ids (or
    criterion ids, when the matrix compares criteria directly).
    """
    path = Path(pairwise_path)
    if path.is_dir():
        pm = aggregate_pairwise(sio.load_pairwise_batch(path))
    else:
        pm = sio.load_pairwise(path)
    if hierarchy is not None and pm.labels is None:
        dims = hierarchy.dimension_ids()
        crits = hierarchy.criterion_ids()
        if pm.n == len(dims):
            pm = type(pm)(pm.values, labels=dims)
        elif pm.n == len(crits):
            pm = type(pm)(pm.values, labels=crits)
    weights, report = ahp_weights(pm)
    if strict_cr and report.cr > CR_THRESHOLD:
        raise InconsistentJudgmentsError(
            f"consistency ratio {report.cr:.4f} exceeds {CR_THRESHOLD}"
        )
    return weights, report


def _criterion_weights(method, matrix, hierarchy, pairwise, weights_file, strict_cr):
    """Resolve the weight vector for evaluation-style commands."""
    if method == "ahp":
        _require(pairwise is not None, "--weights-method ahp requires --pairwise")
        dim_weights, report = _ahp_from_path(pairwise, hierarchy, strict_cr)
        if set(dim_weights.criterion_ids) == set(hierarchy.dimension_ids()):
            return distribute_weights(dim_weights, hierarchy), report
        return dim_weights, report
    if method == "entropy":
        return entropy_weights(matrix), None
    if method == "critic":
        return critic_weights(matrix), None
    if method == "file":
        _require(weights_file is not None, "--weights-method file requires --weights-file")
        return sio.load_weights(weights_file, hierarchy), None
    raise InputError(f"unknown weighting method '{method}'")


def _weights_payload(weights: WeightVector, report, dim_weights=None) -> dict:
    payload: dict = {"weights": weights.as_dict()}
    if dim_weights is not None:
        payload["dimension_weights"] = dim_weights.as_dict()
    if report is not None:
        payload["consistency"] = {
            "lambda_max": report.lambda_max,
            "ci": report.ci,
            "cr": report.cr,
            "acceptable": report.acceptable,
        }
    return payload


@click.group()
@click.version_option(package_name="sspahp")
def main():
    """Multi-criteria evaluation with tunable criteria-compensation reduction."""


@main.command("weights")
@click.option(
    "--weights-method",
    "--method",
    "method",
    type=click.Choice(["ahp", "entropy", "critic", "file"]),
    required=True,
    help="How to derive the weights.",
)
@click.option("--pairwise", type=click.Path(), help="Pairwise CSV or directory of expert CSVs (ahp).")
@click.option("--matrix", "matrix_path", type=click.Path(), help="Decision matrix CSV (entropy/critic).")
@click.option("--hierarchy", "hierarchy_path", type=click.Path(), help="Criteria hierarchy JSON.")
@click.option("--weights-file", type=click.Path(), help="Weights CSV (file method).")
@click.option("--strict-cr", is_flag=True, help="Fail (exit 4) when CR exceeds 0.1.")
@click.option("--format", "fmt", type=click.Choice(FORMATS), default="table", show_default=True)
@click.option("--out", type=click.Path(), help="Write output to a file instead of stdout.")
@_handled
def weights_cmd(method, pairwise, matrix_path, hierarchy_path, weights_file, strict_cr, fmt, out):
    """Derive criterion weights and (for ahp) report judgment consistency."""
    hierarchy = sio.load_hierarchy(hierarchy_path) if hierarchy_path else None
    report = None
    dim_weights = None

    if method == "ahp":
        _require(pairwise is not None, "--weights-method ahp requires --pairwise")
        w, report = _ahp_from_path(pairwise, hierarchy, strict_cr)
        if hierarchy is not None and set(w.criterion_ids) == set(hierarchy.dimension_ids()):
            dim_weights = w
            w = distribute_weights(dim_weights, hierarchy)
    elif method in ("entropy", "critic"):
        _require(
            matrix_path is not None and hierarchy_path is not None,
            f"--weights-method {method} requires --matrix and --hierarchy",
        )
        matrix, hierarchy = _load_inputs(matrix_path, hierarchy_path)
        w = entropy_weights(matrix) if method == "entropy" else critic_weights(matrix)
    else:
        _require(weights_file is not None, "--weights-method file requires --weights-file")
        w = sio.load_weights(weights_file, hierarchy)

    if fmt == "json":
        text = sio.records_to_json(_weights_payload(w, report, dim_weights))
    elif fmt == "csv":
        recs = [{"criterion_id": c, "weight": float(v)} for c, v in w.as_dict().items()]
        text = sio.records_to_csv(recs, ["criterion_id", "weight"])
    else:
        sections = []
        if dim_weights is not None:
            sections.append(
                _table(
                    ["dimension", "weight"],
                    [[c, _f4(v)] for c, v in dim_weights.as_dict().items()],
                )
            )
        sections.append(
            _table(
                ["criterion", "weight"],
                [[c, _f4(v)] for c, v in w.as_dict().items()],
            )
        )
        if report is not None:
            sections.append(f"CR = {report.cr:.2f}\n")
        text = "\n".join(sections)
    _emit(text, out)


_shared_eval_options = [
    click.option("--matrix", "matrix_path", type=click.Path(), required=True, help="Decision matrix CSV."),
    click.option("--hierarchy", "hierarchy_path", type=click.Path(), required=True, help="Criteria hierarchy JSON."),
    click.option(
        "--weights-method",
        "method",
        type=click.Choice(["ahp", "entropy", "critic", "file"]),
        required=True,
        help="How to derive criterion weights.",
    ),
    click.option("--pairwise", type=click.Path(), help="Pairwise CSV or directory (ahp)."),
    click.option("--weights-file", type=click.Path(), help="Weights CSV (file method)."),
    click.option("--strict-cr", is_flag=True, help="Fail (exit 4) when CR exceeds 0.1."),
    click.option("--format", "fmt", type=click.Choice(FORMATS), default="table", show_default=True),
    click.option("--out", type=click.Path(), help="Write output to a file instead of stdout."),
]


def _with_options(options):
    def deco(fn):
        for opt in reversed(options):
            fn = opt(fn)
        return fn

    return deco


@main.command("eval")
@_with_options(_shared_eval_options)
@click.option("--s", "s_value", type=float, default=0.0, show_default=True, help="Compensation-reduction coefficient in [0, 1].")
@click.option("--groups", help="Comma-separated dimension ids the coefficient applies to (default: all criteria).")
@_handled
def eval_cmd(matrix_path, hierarchy_path, method, pairwise, weights_file, strict_cr, fmt, out, s_value, groups):
    """Score and rank the alternatives."""
    matrix, hierarchy = _load_inputs(matrix_path, hierarchy_path)
    w, _ = _criterion_weights(method, matrix, hierarchy, pairwise, weights_file, strict_cr)
    _require(0.0 <= s_value <= 1.0, f"--s must lie in [0, 1], got {s_value}")
    group_ids = _parse_groups(groups)
    if group_ids is None:
        result = evaluate(matrix, w, s_value)
    else:
        result = evaluate_with_group_s(matrix, w, hierarchy, group_ids, s_value)

    if fmt == "json":
        text = sio.records_to_json(
            {
                "alternatives": list(result.alternative_ids),
                "utilities": result.utilities.tolist(),
                "ranking": result.ranking.tolist(),
                "has_ties": result.has_ties,
            }
        )
    elif fmt == "csv":
        recs = [
            {"alternative": a, "utility": float(u), "rank": int(r)}
            for a, u, r in zip(result.alternative_ids, result.utilities, result.ranking)
        ]
        text = sio.records_to_csv(recs, ["alternative", "utility", "rank"])
    else:
        rows = [
            [a, _f4(u), str(int(r))]
            for a, u, r in zip(result.alternative_ids, result.utilities, result.ranking)
        ]
        text = _table(["alternative", "utility", "rank"], rows)
    _emit(text, out)


@main.command("benchmarks")
@_with_options(_shared_eval_options)
@click.option("--tau", type=float, default=DEFAULT_TAU, show_default=True, help="CODAS threshold parameter.")
@click.option("--bounds", "bounds_path", type=click.Path(), help="SPOTIS bounds CSV (criterion_id,min,max); defaults to column extremes.")
@click.option("--corr", "with_corr", is_flag=True, help="Also report each method's rank correlation with the main evaluation (table/json formats).")
@_handled
def benchmarks_cmd(matrix_path, hierarchy_path, method, pairwise, weights_file, strict_cr, fmt, out, tau, bounds_path, with_corr):
    """Run the reference methods next to the plain (s = 0) evaluation."""
    matrix, hierarchy = _load_inputs(matrix_path, hierarchy_path)
    w, _ = _criterion_weights(method, matrix, hierarchy, pairwise, weights_file, strict_cr)
    bounds = sio.load_bounds(bounds_path, hierarchy) if bounds_path else None
    if with_corr and fmt == "csv":
        raise InputError(
            "--corr is not representable in the long csv; use table or json, "
            "or run the corr subcommand on exported rankings"
        )

    base = evaluate(matrix, w, 0.0)
    scores = run_all(matrix, w, tau=tau, bounds=bounds)
    columns = [("sspahp", base.utilities, base.ranking)]
    columns += [(name, sc.values, sc.ranking) for name, sc in scores.items()]
    correlations = None
    if with_corr:
        ref = base.ranking.astype(float)
        correlations = {
            name: (
                weighted_spearman(ref, ranks.astype(float)),
                pearson(ref, ranks.astype(float)),
            )
            for name, _, ranks in columns[1:]
        }

    if fmt == "json":
        payload = {
            name: {
                "values": dict(zip(matrix.alternative_ids, vals.tolist())),
                "ranking": dict(zip(matrix.alternative_ids, ranks.tolist())),
            }
            for name, vals, ranks in columns
        }
        if correlations is not None:
            payload["correlation_with_sspahp"] = {
                name: {"r_w": rw, "pearson": pr}
                for name, (rw, pr) in correlations.items()
            }
        text = sio.records_to_json(payload)
    elif fmt == "csv":
        recs = [
            {"method": name, "alternative": a, "value": float(v), "rank": int(r)}
            for name, vals, ranks in columns
            for a, v, r in zip(matrix.alternative_ids, vals, ranks)
        ]
        text = sio.records_to_csv(recs, ["method", "alternative", "value", "rank"])
    else:
        headers = ["alternative"] + [name for name, _, _ in columns]
        value_rows = [
            [alt] + [_f4(vals[i]) for _, vals, _ in columns]
            for i, alt in enumerate(matrix.alternative_ids)
        ]
        rank_rows = [
            [alt] + [str(int(ranks[i])) for _, _, ranks in columns]
            for i, alt in enumerate(matrix.alternative_ids)
        ]
        text = (
            "values\n"
            + _table(headers, value_rows)
            + "\nrankings\n"
            + _table(headers, rank_rows)
        )
        if correlations is not None:
            corr_rows = [
                [name, _f4(rw), _f4(pr)]
                for name, (rw, pr) in correlations.items()
            ]
            text += "\ncorrelation with sspahp\n" + _table(
                ["method", "r_w", "pearson"], corr_rows
            )
    _emit(text, out)


@main.command("sweep")
@_with_options(_shared_eval_options)
@click.option("--groups", default="all", show_default=True, help="'all' for every dimension subset, or a comma list naming one subset.")
@click.option("--step", type=float, default=0.05, show_default=True, help="Grid step for the coefficient sweep.")
@_handled
def sweep_cmd(matrix_path, hierarchy_path, method, pairwise, weights_file, strict_cr, fmt, out, groups, step):
    """Trace rankings across compensation-reduction levels and group subsets."""
    matrix, hierarchy = _load_inputs(matrix_path, hierarchy_path)
    w, _ = _criterion_weights(method, matrix, hierarchy, pairwise, weights_file, strict_cr)

    if groups.strip().lower() == "all":
        subsets = enumerate_group_subsets(hierarchy.dimension_ids())
    else:
        subsets = (_parse_groups(groups),)
    spec = SweepSpec(
        matrix=matrix,
        hierarchy=hierarchy,
        weights=w,
        s_grid=default_s_grid(step),
        group_subsets=subsets,
    )
    result = run_sweep(spec)

    if fmt == "json":
        text = sio.records_to_json(
            {
                "s_grid": result.s_grid.tolist(),
                "subsets": [list(s) for s in result.subsets],
                "records": result.to_records(),
            }
        )
    elif fmt == "csv":
        text = sio.records_to_csv(
            result.to_records(), ["subset", "s", "alternative", "utility", "rank"]
        )
    else:
        final = result.final_rankings()
        headers = ["subset", *result.alternative_ids]
        rows = [
            [subset_label(sub) or "(none)"] + [str(int(r)) for r in final[sub]]
            for sub in result.subsets
        ]
        text = _table(headers, rows)
    _emit(text, out)


@main.command("corr")
@click.argument("file_a", type=click.Path())
@click.argument("file_b", type=click.Path())
@click.option("--format", "fmt", type=click.Choice(FORMATS), default="table", show_default=True)
@click.option("--out", type=click.Path(), help="Write output to a file instead of stdout.")
@_handled
def corr_cmd(file_a, file_b, fmt, out):
    """Correlation (weighted Spearman, Pearson) between two ranking files.

    Accepts plain ranking CSVs (alternative, rank) or sweep exports; sweep
    exports are compared subset by subset at the deepest grid point.
    """
    kind_a, data_a = sio.load_ranking_file(file_a)
    kind_b, data_b = sio.load_ranking_file(file_b)
    _require(kind_a == kind_b, "cannot mix a plain ranking file with a sweep export")

    if kind_a == "simple":
        pairs = {"": (data_a, data_b)}
    else:
        _require(
            list(data_a) == list(data_b),
            "subset lists differ between the two sweep exports",
        )
        pairs = {sub: (data_a[sub], data_b[sub]) for sub in data_a}

    records = []
    for label, (ra, rb) in pairs.items():
        _require(
            set(ra) == set(rb),
            f"alternative ids differ{f' in subset {label}' if label else ''}",
        )
        alts = list(ra)
        x = np.array([ra[a] for a in alts])
        y = np.array([rb[a] for a in alts])
        records.append(
            {
                "subset": label,
                "r_w": weighted_spearman(x, y),
                "pearson": pearson(x, y),
            }
        )

    if fmt == "json":
        text = sio.records_to_json(records)
    elif fmt == "csv":
        text = sio.records_to_csv(records, ["subset", "r_w", "pearson"])
    else:
        rows = [
            [r["subset"] or "(none)", _f4(r["r_w"]), _f4(r["pearson"])]
            for r in records
        ]
        text = _table(["subset", "r_w", "pearson"], rows)
    _emit(text, out)


if __name__ == "__main__":
    main()
