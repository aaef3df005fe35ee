"""Compensation-reduction sweeps over criteria-group subsets.

A sweep evaluates the decision problem for every combination of (dimension
subset, coefficient value) on a grid, tracking how each alternative's rank
evolves as compensation is progressively reduced inside the selected
groups. Cells are independent pure computations; they are evaluated in a
fixed order so that serialized results are byte-stable across runs.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import CriteriaHierarchy, DecisionMatrix, WeightVector
from .correlation import pearson, weighted_spearman
from .errors import InputError, SspahpError
from .evaluation import EvaluationResult, evaluate_with_group_s

DEFAULT_STEP = 0.05


def default_s_grid(step: float = DEFAULT_STEP) -> np.ndarray:
    """Evenly spaced grid over [0, 1] starting at 0 with the given step.

    When the step divides 1 the grid ends exactly at 1 (21 points for the
    default 0.05); otherwise it stops at the last multiple below 1.
    """
    if not 0.0 < step <= 1.0:
        raise InputError(f"step must lie in (0, 1], got {step}")
    n_steps = round(1.0 / step)
    if abs(n_steps * step - 1.0) < 1e-9:
        return np.linspace(0.0, 1.0, n_steps + 1)
    count = int(np.floor(1.0 / step + 1e-9)) + 1
    return np.round(np.arange(count) * step, 12)


def enumerate_group_subsets(dimension_ids) -> tuple[tuple[str, ...], ...]:
    """All subsets of the dimensions in binary-counter order.

    The first dimension acts as the most significant bit, so for (G1..G5)
    the order runs (), (G5,), (G4,), (G4, G5), (G3,), ... up to the full
    set. Members of each subset keep the hierarchy order.
    """
    ids = tuple(dimension_ids)
    k = len(ids)
    out = []
    for mask in range(2**k):
        out.append(tuple(ids[i] for i in range(k) if mask >> (k - 1 - i) & 1))
    return tuple(out)


def subset_label(subset) -> str:
    """Stable text key for a subset; the empty subset is the empty string."""
    return "+".join(subset)


@dataclass(frozen=True)
class SweepSpec:
    """Everything a sweep needs: data bindings, grid, and subset list."""

    matrix: DecisionMatrix
    hierarchy: CriteriaHierarchy
    weights: WeightVector
    s_grid: np.ndarray = None
    group_subsets: tuple[tuple[str, ...], ...] = None

    def __post_init__(self):
        grid = self.s_grid
        if grid is None:
            grid = default_s_grid()
        grid = np.asarray(grid, dtype=float)
        if grid.ndim != 1 or grid.size == 0:
            raise InputError("s grid must be a non-empty vector")
        if grid.min() < 0.0 or grid.max() > 1.0:
            raise InputError("s grid values must lie in [0, 1]")
        if (np.diff(grid) <= 0).any():
            raise InputError("s grid must increase strictly")
        grid.setflags(write=False)
        object.__setattr__(self, "s_grid", grid)

        subsets = self.group_subsets
        if subsets is None:
            subsets = enumerate_group_subsets(self.hierarchy.dimension_ids())
        subsets = tuple(tuple(s) for s in subsets)
        if len(set(subsets)) != len(subsets):
            raise InputError("group subsets must be unique")
        object.__setattr__(self, "group_subsets", subsets)


@dataclass(frozen=True)
class SweepResult:
    """Evaluation results for every (subset, s) cell of a sweep."""

    alternative_ids: tuple[str, ...]
    subsets: tuple[tuple[str, ...], ...]
    s_grid: np.ndarray
    cells: tuple[tuple[EvaluationResult, ...], ...]  # [subset][s]

    def baseline(self) -> EvaluationResult:
        """The evaluation at the first grid point of the first subset."""
        return self.cells[0][0]

    def final_rankings(self) -> dict[tuple[str, ...], np.ndarray]:
        """Per subset, the ranking at the last (deepest) grid point."""
        return {sub: self.cells[i][-1].ranking for i, sub in enumerate(self.subsets)}

    def rank_trajectory(self, alternative_id: str, subset) -> np.ndarray:
        """Rank of one alternative along the grid for one subset."""
        subset = tuple(subset)
        try:
            si = self.subsets.index(subset)
        except ValueError:
            raise InputError(f"subset {subset_label(subset) or '()'} not in sweep")
        ai = self.alternative_ids.index(alternative_id)
        return np.array([cell.ranking[ai] for cell in self.cells[si]])

    def to_records(self) -> list[dict]:
        """Long-format rows: subset, s, alternative, utility, rank."""
        rows = []
        for si, sub in enumerate(self.subsets):
            label = subset_label(sub)
            for gi, s in enumerate(self.s_grid):
                cell = self.cells[si][gi]
                for ai, alt in enumerate(self.alternative_ids):
                    rows.append(
                        {
                            "subset": label,
                            "s": float(s),
                            "alternative": alt,
                            "utility": float(cell.utilities[ai]),
                            "rank": int(cell.ranking[ai]),
                        }
                    )
        return rows


def run_sweep(spec: SweepSpec) -> SweepResult:
    """Evaluate every (subset, s) cell of the spec, in deterministic order."""
    all_cells = []
    for subset in spec.group_subsets:
        row = []
        for s in spec.s_grid:
            try:
                row.append(
                    evaluate_with_group_s(
                        spec.matrix, spec.weights, spec.hierarchy, subset, float(s)
                    )
                )
            except SspahpError as exc:
                raise type(exc)(
                    f"sweep cell (subset={subset_label(subset) or '()'}, "
                    f"s={float(s):g}): {exc}"
                ) from exc
        all_cells.append(tuple(row))
    return SweepResult(
        alternative_ids=spec.matrix.alternative_ids,
        subsets=spec.group_subsets,
        s_grid=spec.s_grid,
        cells=tuple(all_cells),
    )


def _as_subset_rankings(result) -> dict[tuple[str, ...], np.ndarray]:
    if isinstance(result, SweepResult):
        return result.final_rankings()
    return {tuple(k): np.asarray(v) for k, v in dict(result).items()}


def compare_rankings(result_a, result_b) -> dict[tuple[str, ...], tuple[float, float]]:
    """Per-subset (weighted Spearman, Pearson) between two sweeps' rankings.

    Accepts SweepResult objects (their full-reduction rankings are compared)
    or plain mappings of subset -> ranking vector. Subset lists must match.
    """
    a = _as_subset_rankings(result_a)
    b = _as_subset_rankings(result_b)
    if list(a) != list(b):
        raise InputError("subset lists differ between the two results")
    out = {}
    for subset in a:
        x, y = a[subset], b[subset]
        if x.shape != y.shape:
            raise InputError(
                f"ranking lengths differ for subset {subset_label(subset) or '()'}"
            )
        out[subset] = (weighted_spearman(x, y), pearson(x, y))
    return out


def stability_report(result: SweepResult) -> dict[str, dict]:
    """Summary of each alternative's rank movement across the whole sweep.

    span is the max minus min rank over every cell; alternatives with
    span <= 1 are flagged stable. The direction label classifies the rank
    trajectory along the grid for the last (most inclusive) subset:
    improving ranks move toward 1, declining away, flat never moves, mixed
    does both.
    """
    report = {}
    deepest = result.subsets[-1]
    for alt in result.alternative_ids:
        ai = result.alternative_ids.index(alt)
        ranks = np.array(
            [cell.ranking[ai] for row in result.cells for cell in row]
        )
        trajectory = result.rank_trajectory(alt, deepest)
        deltas = np.diff(trajectory)
        if (deltas == 0).all():
            direction = "flat"
        elif (deltas <= 0).all():
            direction = "improving"
        elif (deltas >= 0).all():
            direction = "declining"
        else:
            direction = "mixed"
        span = int(ranks.max() - ranks.min())
        report[alt] = {
            "min_rank": int(ranks.min()),
            "max_rank": int(ranks.max()),
            "span": span,
            "stable": span <= 1,
            "monotone_direction": direction,
        }
    return report
