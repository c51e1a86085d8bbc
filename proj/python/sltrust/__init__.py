"""Dataset trust quantification with subjective logic."""

from sltrust._core import (
    BiasConfig,
    ClassDistribution,
    EntropyVerdict,
    Evidence,
    Method1Result,
    Method2Result,
    Opinion,
    Proposition,
    SltrustError,
    SweepPoint,
    ToleranceEvidence,
    __version__,
    assess_method1,
    assess_method2,
    conjunction,
    dataset_uncertainty,
    discount,
    disjunction,
    entropy,
    entropy_threshold,
    fuse,
    fuse_averaging,
    fuse_constraint,
    fuse_cumulative,
    fuse_weighted,
    load_class_counts,
    merge,
    negate,
    parse_proposition,
    quantify_baseline,
    quantify_constant_u,
    quantify_weighted,
    remove_classes,
    run_sweep,
    sample_complexity,
    split_stratified,
    sweep_eta,
    to_evidence,
    tolerance_evidence,
    vacuous_opinion,
)

__all__ = [
    "BiasConfig",
    "ClassDistribution",
    "EntropyVerdict",
    "Evidence",
    "Method1Result",
    "Method2Result",
    "Opinion",
    "Proposition",
    "SltrustError",
    "SweepPoint",
    "ToleranceEvidence",
    "__version__",
    "assess_method1",
    "assess_method2",
    "conjunction",
    "dataset_uncertainty",
    "discount",
    "disjunction",
    "entropy",
    "entropy_threshold",
    "fuse",
    "fuse_averaging",
    "fuse_constraint",
    "fuse_cumulative",
    "fuse_weighted",
    "load_class_counts",
    "merge",
    "negate",
    "parse_proposition",
    "quantify_baseline",
    "quantify_constant_u",
    "quantify_weighted",
    "remove_classes",
    "run_sweep",
    "sample_complexity",
    "split_stratified",
    "sweep_eta",
    "to_evidence",
    "tolerance_evidence",
    "vacuous_opinion",
]
