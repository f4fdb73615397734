"""Cluster-customized adaptive distance metric clustering for categorical and mixed data."""

from ._core import (
    Dataset,
    ablation_json,
    clustering_accuracy,
    experiment_json,
    generate_synthetic,
    load,
    load_file,
    run,
)

__all__ = [
    "Dataset",
    "ablation_json",
    "clustering_accuracy",
    "experiment_json",
    "generate_synthetic",
    "load",
    "load_file",
    "run",
]
