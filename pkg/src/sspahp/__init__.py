"""Multi-criteria decision engine with tunable criteria-compensation reduction.

Evaluation follows a weighted-sum core whose normalized scores can be pushed
toward their column means by per-criterion coefficients in [0, 1], limiting
how far strength on one criterion can offset weakness on another. Criterion
weights come from pairwise judgments (principal eigenvector), entropy, or
CRITIC; five reference MCDA methods, rank-correlation measures, and a
group-subset sensitivity sweep support validation of the results.
"""

from .benchmarks import (
    BenchmarkScore,
    codas,
    mabac,
    promethee2,
    run_all,
    spotis,
    topsis,
)
from .core import (
    CriteriaHierarchy,
    DecisionMatrix,
    Dimension,
    NormalizedMatrix,
    SubDimension,
    ValidationReport,
    WeightVector,
    flatten_hierarchy,
    normalize_minmax,
    validate_matrix,
)
from .correlation import pearson, rank_from_scores, weighted_spearman
from .errors import (
    ConvergenceError,
    DegenerateWeightsError,
    InconsistentJudgmentsError,
    InputError,
    NumericalError,
    SspahpError,
)
from .evaluation import (
    EvaluationResult,
    SustainabilityCoefficients,
    evaluate,
    evaluate_with_group_s,
    mad_transform,
)
from .sensitivity import (
    SweepResult,
    SweepSpec,
    compare_rankings,
    default_s_grid,
    enumerate_group_subsets,
    run_sweep,
    stability_report,
)
from .weighting import (
    ConsistencyReport,
    PairwiseMatrix,
    RANDOM_INDEX,
    aggregate_pairwise,
    ahp_weights,
    consistency,
    critic_weights,
    distribute_weights,
    entropy_weights,
)

__version__ = "0.1.0"

__all__ = [
    "BenchmarkScore",
    "ConsistencyReport",
    "ConvergenceError",
    "CriteriaHierarchy",
    "DecisionMatrix",
    "DegenerateWeightsError",
    "Dimension",
    "EvaluationResult",
    "InconsistentJudgmentsError",
    "InputError",
    "NormalizedMatrix",
    "NumericalError",
    "PairwiseMatrix",
    "RANDOM_INDEX",
    "SspahpError",
    "SubDimension",
    "SustainabilityCoefficients",
    "SweepResult",
    "SweepSpec",
    "ValidationReport",
    "WeightVector",
    "aggregate_pairwise",
    "ahp_weights",
    "codas",
    "compare_rankings",
    "consistency",
    "critic_weights",
    "default_s_grid",
    "distribute_weights",
    "entropy_weights",
    "enumerate_group_subsets",
    "evaluate",
    "evaluate_with_group_s",
    "flatten_hierarchy",
    "mabac",
    "mad_transform",
    "normalize_minmax",
    "pearson",
    "promethee2",
    "rank_from_scores",
    "run_all",
    "run_sweep",
    "spotis",
    "stability_report",
    "topsis",
    "validate_matrix",
    "weighted_spearman",
]
