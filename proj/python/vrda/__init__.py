"""Sparse online linear classification with voted dual averaging."""

from ._vrda import (
    BoundReport,
    Dataset,
    FormatError,
    Metrics,
    MistakeIndex,
    PredictorSnapshot,
    SparseVector,
    TrainingRun,
    check_separability,
    data_radius,
    estimate_expected_mistakes,
    evaluate,
    generate,
    make_bound_report,
    online_to_batch_bound,
    optimal_eta,
    quadratic_bound,
    rda_update,
    read_svmlight,
    read_weights,
    regret_bound,
    replay_on_subsequence,
    shrink,
    mistake_bound,
    train,
    train_perceptron,
    train_truncated_gradient,
    vote_average_agreement,
    write_svmlight,
    write_weights,
)

__all__ = [
    "BoundReport",
    "Dataset",
    "FormatError",
    "Metrics",
    "MistakeIndex",
    "PredictorSnapshot",
    "SparseVector",
    "TrainingRun",
    "check_separability",
    "data_radius",
    "estimate_expected_mistakes",
    "evaluate",
    "generate",
    "make_bound_report",
    "online_to_batch_bound",
    "optimal_eta",
    "quadratic_bound",
    "rda_update",
    "read_svmlight",
    "read_weights",
    "regret_bound",
    "replay_on_subsequence",
    "shrink",
    "mistake_bound",
    "train",
    "train_perceptron",
    "train_truncated_gradient",
    "vote_average_agreement",
    "write_svmlight",
    "write_weights",
]
