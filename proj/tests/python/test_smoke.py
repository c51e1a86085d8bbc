import math
import os

import pytest

import sltrust


def data_path(name: str) -> str:
    root = os.environ.get(
        "SLTRUST_DATA_DIR",
        os.path.join(os.path.dirname(__file__), "..", "..", "data"),
    )
    return os.path.join(root, name)


def test_quantify_baseline():
    op = sltrust.quantify_baseline(8, 2, prior_weight=2.0)
    assert op.belief == pytest.approx(2 / 3, abs=1e-12)
    assert op.disbelief == pytest.approx(1 / 6, abs=1e-12)
    assert op.uncertainty == pytest.approx(1 / 6, abs=1e-12)


def test_opinion_validation():
    with pytest.raises(sltrust.SltrustError):
        sltrust.Opinion(0.5, 0.5, 0.5, 0.5)


def test_conjunction_projected_probability():
    x = sltrust.Opinion(0.6, 0.2, 0.2, 0.5)
    y = sltrust.Opinion(0.3, 0.4, 0.3, 0.5)
    out = sltrust.conjunction(x, y)
    assert out.projected_probability == pytest.approx(
        x.projected_probability * y.projected_probability, abs=1e-12
    )


def test_cumulative_fusion_adds_evidence():
    p = sltrust.quantify_baseline(3, 1)
    q = sltrust.quantify_baseline(5, 1)
    fused = sltrust.fuse_cumulative(p, q)
    direct = sltrust.quantify_baseline(8, 2)
    assert fused.belief == pytest.approx(direct.belief, abs=1e-12)


def test_method1_on_fixture():
    dist = sltrust.load_class_counts(data_path("gtsrb_train_counts.csv"))
    assert dist.total == 39209
    cfg = sltrust.BiasConfig(min_uncertainty=0.39, max_uncertainty=0.39)
    res = sltrust.assess_method1(dist, cfg)
    assert res.evidence.in_zone == 35
    assert abs(res.opinion.belief - 0.5) <= 0.03
    assert abs(res.opinion.disbelief - 0.11) <= 0.03
    assert res.opinion.uncertainty == pytest.approx(0.39)


def test_entropy_and_threshold():
    uniform = sltrust.ClassDistribution([str(i) for i in range(43)], [10] * 43)
    assert sltrust.entropy(uniform) == pytest.approx(math.log(43), abs=1e-12)
    threshold, edge = sltrust.entropy_threshold(43, 0.02)
    assert len(edge) == 43
    assert threshold < math.log(43)


def test_method2_federated_parts():
    base = sltrust.ClassDistribution([str(i) for i in range(6)], [600] * 6)
    parts = sltrust.split_stratified(base, 10, seed=7)
    res = sltrust.assess_method2(parts)
    assert res.positive == 10
    assert res.opinion.uncertainty == pytest.approx(2 / 12, abs=1e-12)


def test_proposition_round_trip():
    expr = sltrust.parse_proposition("A AND (R OR NOT A)")
    assert str(expr) == "A AND (R OR NOT A)"
    assert expr.variables() == ["A", "R"]
    out = expr.evaluate(
        {
            "A": sltrust.Opinion(0.9, 0.1, 0.0, 0.5),
            "R": sltrust.Opinion(0.8, 0.2, 0.0, 0.5),
        }
    )
    assert 0.0 <= out.belief <= 1.0


def test_parse_error():
    with pytest.raises(sltrust.SltrustError):
        sltrust.parse_proposition("A AND")


def test_run_sweep_linearity():
    base = sltrust.ClassDistribution([str(i) for i in range(6)], [600] * 6)
    points = sltrust.run_sweep(
        base,
        n_oems=10,
        imbalance_class_ids=["0"],
        k_values=list(range(11)),
        seed=7,
    )
    assert [p.method2.belief for p in points] == [
        pytest.approx((10 - k) / 12, abs=1e-12) for k in range(11)
    ]
