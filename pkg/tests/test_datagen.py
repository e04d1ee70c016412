import numpy as np
import pytest

from sesched import GenParams, ParameterError, generate
from sesched.datagen import first_fit_count
from sesched.io import dumps
from sesched.solvers import solve_alg

SMALL = dict(k=10, num_users=40)


def test_defaults_follow_the_parameter_grid():
    d = GenParams().resolved()
    assert (d["k"], d["num_events"], d["num_intervals"], d["num_users"]) == (100, 200, 150, 50000)
    assert d["num_locations"] == 25 and d["theta"] == 20.0
    assert d["xi_range"] == pytest.approx((1.0, 20 / 3))
    assert d["competing_range"] == (1, 16)
    assert d["interest_dist"] == d["activity_dist"] == "uniform"


def test_same_seed_same_instance():
    a = generate(GenParams(seed=3, **SMALL))
    b = generate(GenParams(seed=3, **SMALL))
    c = generate(GenParams(seed=4, **SMALL))
    assert dumps(a) == dumps(b)
    assert dumps(a) != dumps(c)


def test_shapes_and_ranges():
    inst = generate(GenParams(k=6, num_users=25, interest_dist="normal", activity_dist="normal"))
    assert inst.summary() == (6, 12, 9, 25)
    for a in (inst.activity, inst.event_interest, inst.competing_interest):
        assert a.min() >= 0 and a.max() <= 1
    assert (inst.event_resources >= 1).all() and (inst.event_resources <= 20 / 3).all()
    assert inst.event_location.max() < 25
    counts = np.bincount(inst.competing_interval, minlength=9)
    assert counts.min() >= 1 and counts.max() <= 16


def test_mean_competing_count_per_interval():
    inst = generate(GenParams(num_intervals=1000, num_users=1))
    mean = inst.num_competing / inst.num_intervals
    assert 8.0 <= mean <= 9.0


def test_normal_interest_is_clipped_around_half():
    mu = generate(GenParams(k=50, num_users=1000, interest_dist="normal")).event_interest
    assert mu.mean() == pytest.approx(0.5, abs=0.01)
    assert (mu == 0).any() and (mu == 1).any()


def test_zipf_top_class_is_most_frequent():
    mu = generate(GenParams(k=50, num_users=1000, interest_dist="zipf", zipf_exponent=2)).event_interest
    values, counts = np.unique(mu, return_counts=True)
    freq = dict(zip(np.round(values, 10), counts))
    assert mu.size == 10**5
    assert freq[1.0] >= freq[0.99] >= freq[0.98]
    assert freq[1.0] / mu.size == pytest.approx(1 / sum(r**-2 for r in range(1, 101)), rel=0.02)


def test_generated_instances_admit_k_assignments():
    for seed in range(5):
        inst = generate(GenParams(k=20, num_users=10, seed=seed))
        assert first_fit_count(inst.event_location, inst.event_resources,
                               inst.num_intervals, inst.theta, inst.k) == inst.k
        assert len(solve_alg(inst)[0]) == 20


def test_unplaceable_parameters_warn_then_fail():
    p = GenParams(k=3, num_events=3, num_intervals=2, num_locations=1, num_users=2)
    with pytest.warns(UserWarning, match="redrawing"), pytest.raises(ParameterError):
        generate(p)


@pytest.mark.parametrize("kwargs", [
    dict(k=100, num_events=50),
    dict(k=0),
    dict(num_locations=0),
    dict(theta=0),
    dict(xi_range=(3, 1)),
    dict(competing_range=(4, 2)),
    dict(interest_dist="pareto"),
    dict(activity_dist="zipf"),
    dict(interest_dist="zipf", zipf_exponent=0),
])
def test_inconsistent_parameters(kwargs):
    with pytest.raises(ParameterError):
        generate(GenParams(**{"num_users": 2, **kwargs}))
