import json

import pytest

from chowmod.algebra import GF
from chowmod.chow import CapExceeded, ChowComputationConfig, compute_ch0, generators, render_table, witt_table

# (field, m, D, H) -> order; the order stabilizes at q^m from the listed H on
FIXTURES = [("F2", 1, 2, 3, 2), ("F2", 2, 3, 4, 4), ("F3", 1, 2, 3, 3)]


def order_or_inf(report):
    return float("inf") if report.order is None else report.order


@pytest.mark.parametrize("field,m,D,H,order", FIXTURES)
def test_fixtures(field, m, D, H, order):
    r = compute_ch0(ChowComputationConfig(field, m, D, H))
    assert r.order == order == r.expected_order
    assert r.relations_map_to_identity and r.surjective and r.isomorphism
    assert r.ok


@pytest.mark.parametrize("field,m,D,heights", [("F2", 1, 2, (1, 2, 3)), ("F2", 2, 3, (2, 3, 4))])
def test_order_non_increasing_in_height(field, m, D, heights):
    orders = [order_or_inf(compute_ch0(ChowComputationConfig(field, m, D, H))) for H in heights]
    assert orders == sorted(orders, reverse=True)
    assert orders[-1] == 2**m


def test_generators_avoid_zero():
    gens = generators(GF(2), 3)
    # monic irreducibles of degree <= 3 over F2 except u: 1 + 1 + 2
    assert len(gens) == 4
    assert all(g[0] != 0 for g in gens)


def test_report_json(tmp_path):
    out = tmp_path / "r.json"
    r = compute_ch0(ChowComputationConfig("F2", 1, 2, 2, out=str(out)))
    data = json.loads(out.read_text())
    assert data["order"] == r.order == 2
    assert data["invariant_factors"] == [2]
    assert "generators" in data and "witnesses" in data


def test_cap():
    with pytest.raises(CapExceeded):
        compute_ch0(ChowComputationConfig("F2", 1, 2, 3, cap=3))


@pytest.mark.parametrize("kwargs", [dict(m=0), dict(deg_bound=0), dict(height=0)])
def test_config_validation(kwargs):
    args = dict(field="F2", m=1, deg_bound=1, height=1)
    args.update(kwargs)
    with pytest.raises(ValueError):
        ChowComputationConfig(**args)


def test_config_rejects_infinite_field():
    with pytest.raises(ValueError):
        ChowComputationConfig("Q", 1, 1, 1)


class TestWittTable:
    def test_w1_f2(self):
        t = witt_table("F2", 1)
        assert len(t["elements"]) == 2 and t["unit_order"] == 2
        assert all(v is not False for v in t["checks"].values())

    def test_w2_f2_is_cyclic(self):
        t = witt_table("F2", 2)
        assert t["unit_order"] == 4 and t["exponent"] == 4
        assert "W_2(F2)" in render_table(t)

    def test_w1_f3(self):
        assert witt_table("F3", 1)["unit_order"] == 3

    def test_cap(self):
        with pytest.raises(CapExceeded):
            witt_table("F3", 9)
