"""Bundled synthetic demonstration dataset.

The hierarchy mirrors a five-dimension health-system assessment model
(equity, quality of care, responsiveness, financial coverage, adaptability)
with 25 criteria split across sub-dimensions. The performance values are
SYNTHETIC: drawn from a seeded generator, useful for demos and tests, and
not measurements of any real country or system.
"""

from __future__ import annotations

from pathlib import Path

import numpy as np

from .core import CriteriaHierarchy, DecisionMatrix, Dimension, SubDimension
from .io import write_hierarchy_json, write_matrix_csv

SAMPLE_SEED = 42

#: directory holding the pre-generated copies shipped with the package
DATA_DIR = Path(__file__).parent / "data"

_STRUCTURE = [
    (
        "G1",
        "Equity",
        [
            ("Service access", ["C1", "C2"]),
            ("Workforce availability", ["C3", "C4"]),
            ("Infrastructure availability", ["C5", "C6", "C7"]),
        ],
    ),
    (
        "G2",
        "Quality of care",
        [
            ("Treatment effectiveness", ["C8", "C9", "C10", "C11"]),
            ("Patient safety", ["C12"]),
            ("Health outcomes", ["C13", "C14"]),
        ],
    ),
    (
        "G3",
        "Responsiveness",
        [
            ("Economic burden", ["C15"]),
            ("Non-economic burden", ["C16", "C17"]),
        ],
    ),
    (
        "G4",
        "Financial coverage",
        [
            ("Risk protection", ["C18"]),
            ("Financial contribution", ["C19", "C20"]),
        ],
    ),
    (
        "G5",
        "Adaptability",
        [
            ("Public health investment", ["C21", "C22"]),
            ("Human resources investment", ["C23", "C24"]),
            ("Technology uptake", ["C25"]),
        ],
    ),
]

#: criteria where smaller raw values are better
_COST_CRITERIA = {"C8", "C11", "C12", "C14", "C15", "C16", "C17"}


def sample_hierarchy() -> CriteriaHierarchy:
    """The five-dimension, 25-criterion hierarchy used by the sample data."""
    dimensions = tuple(
        Dimension(
            id=did,
            name=name,
            sub_dimensions=tuple(
                SubDimension(name=sub_name, criterion_ids=tuple(cids))
                for sub_name, cids in subs
            ),
        )
        for did, name, subs in _STRUCTURE
    )
    objectives = {}
    for _, _, subs in _STRUCTURE:
        for _, cids in subs:
            for cid in cids:
                objectives[cid] = "min" if cid in _COST_CRITERIA else "max"
    return CriteriaHierarchy(dimensions=dimensions, objectives=objectives)


def sample_matrix(
    m: int = 16, seed: int = SAMPLE_SEED, hierarchy: CriteriaHierarchy | None = None
) -> DecisionMatrix:
    """Synthetic positive performance table for ``m`` alternatives.

    Each criterion gets its own scale (drawn once from the seeded
    generator) so that columns differ in magnitude the way mixed-unit
    indicators do. Deterministic for a fixed seed.
    """
    h = hierarchy or sample_hierarchy()
    cids = h.criterion_ids()
    rng = np.random.default_rng(seed)
    scale = rng.uniform(1.0, 200.0, size=len(cids))
    base = rng.uniform(0.2, 1.0, size=len(cids))
    values = rng.uniform(base, 1.0, size=(m, len(cids))) * scale
    alt_ids = tuple(f"A{i + 1:02d}" for i in range(m))
    return DecisionMatrix(
        alternative_ids=alt_ids,
        criterion_ids=cids,
        values=values,
        objectives=tuple(h.objective_for(c) for c in cids),
    )


def write_sample(directory) -> tuple[Path, Path]:
    """Write sample_matrix.csv and sample_hierarchy.json into a directory."""
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    matrix_path = directory / "sample_matrix.csv"
    hierarchy_path = directory / "sample_hierarchy.json"
    h = sample_hierarchy()
    write_matrix_csv(sample_matrix(hierarchy=h), matrix_path)
    write_hierarchy_json(h, hierarchy_path)
    return matrix_path, hierarchy_path
