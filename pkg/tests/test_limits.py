import math

import pytest

from stratmod.limits import DEFAULT_EPS, limit_check
from stratmod.poly import TriplePars

P22 = TriplePars(2, 2)


@pytest.mark.parametrize("lam, s", [((1, 1), None), ((1, 0), None), ((2, 0), None), ((2, 1), 1), ((2, 1), 2)])
def test_first_order_convergence(lam, s):
    rep = limit_check(lam, P22, seed=0, N=4, s=s)
    devs = rep.deviations
    assert all(a > b for a, b in zip(devs, devs[1:]))
    assert all(5 <= f <= 20 for f in rep.decade_factors)
    assert all(abs(o - 1) < 0.3 for o in rep.observed_orders)


def test_report_shape():
    rep = limit_check((1, 1), P22, seed=0, N=3)
    data = rep.to_json()
    assert data["eps"] == list(DEFAULT_EPS)
    assert len(data["decade_factors"]) == len(DEFAULT_EPS) - 1
    assert math.isfinite(rep.tail_bound) and rep.tail_bound < 1e-2


def test_limit_check_validation():
    with pytest.raises(ValueError):
        limit_check((1, 0, 0), P22, seed=0)
    with pytest.raises(ValueError):
        limit_check((1, 1), P22, seed=0, s=2)
