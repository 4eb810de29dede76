import math

import pytest

import macroatlas as ma


def test_default_short_run():
    s = ma.short_run(ma.Params())
    assert s.Y == pytest.approx(2343.76, abs=0.01)
    assert s.P == pytest.approx(0.95408, abs=1e-5)
    assert s.i == pytest.approx(1.116, abs=1e-3)
    assert s.Y < s.Ybar


def test_long_run_sits_on_potential():
    p = ma.Params()
    s = ma.long_run(p)
    assert s.Y == s.Ybar
    assert s.P == pytest.approx(0.8397937, rel=1e-6)


def test_residuals_vanish():
    p = ma.Params(G=340, Ms=1150)
    s = ma.short_run(p)
    res = ma.residuals(s, p)
    for name in ("goods", "money", "supply", "labor"):
        assert abs(getattr(res, name)) < 1e-6, name


def test_money_is_neutral_in_the_long_run():
    base = ma.long_run(ma.Params())
    doubled = ma.long_run(ma.Params(Ms=2000))
    assert doubled.P / base.P == pytest.approx(2.0, rel=1e-9)
    assert doubled.Y == pytest.approx(base.Y, rel=1e-12)


def test_params_round_trip_and_fields():
    p = ma.Params(alpha=0.4)
    assert p.alpha == 0.4
    assert ma.Params.from_dict(p.to_dict()) == p
    assert ma.Params.from_config(p.to_config()) == p
    assert "Ms" in ma.Params.fields()
    q = p.copy()
    q.G = 500
    assert p.G == 300


def test_validation_error_names_field():
    with pytest.raises(ma.ValidationError) as info:
        ma.short_run(ma.Params(c1=1.2))
    assert info.value.field == "c1"
    with pytest.raises(ma.ValidationError):
        ma.Params(nope=1)


def test_solver_error_kind():
    with pytest.raises(ma.SolverError) as info:
        ma.labor_market(ma.Params(m=1e12))
    assert info.value.kind == "NoCrossing"


def test_solow_and_labor_market():
    sol = ma.solow(ma.Params())
    assert sol.k_star == pytest.approx(4.0, rel=1e-12)
    assert sol.k_gold == pytest.approx(25.0, rel=1e-12)
    lm = ma.labor_market(ma.Params())
    assert lm.wage == pytest.approx(2.035357, abs=1e-6)
    assert lm.labor == pytest.approx(603.474, abs=1e-3)


def test_graph_queries():
    g = ma.graph()
    assert len(g["nodes"]) == 27
    assert len(g["edges"]) == 31
    plan = ma.propagate(["Ms"])
    assert plan["dirty"] == [16, 17, 24, 19, 14, 20]
    order = ma.topological_order()
    assert sorted(order) == list(range(1, 28))
    for path in ma.provenance_paths(16, 14):
        assert path[0] == 16 and path[-1] == 14
    assert ma.export_dot().startswith("digraph")


def test_panel_and_svg():
    p = ma.Params()
    q = ma.Params(Ms=1100)
    panel = ma.panel(24, q, baseline=p, overlay="both")
    assert len(panel["curves"]) == 4
    svg = ma.render_svg(20, p)
    assert svg.startswith("<svg") or svg.startswith("<?xml")
    assert ">U</text>" in svg
    with pytest.raises(ma.NotFoundError):
        ma.panel(99, p)


def test_scenario_store(tmp_path):
    store = ma.ScenarioStore(str(tmp_path))
    sc = store.create(ma.Params())
    out = store.apply_shock(sc["id"], "G", 320)
    assert out["plan"]["dirty"][0] == 27
    assert out["scenario"]["current"]["Y"] > sc["current"]["Y"]
    assert store.list() == [sc["id"]]
    deltas = {d["field"]: d for d in store.compare(sc["id"], sc["id"])}
    assert all(math.isclose(d["delta"], 0.0) for d in deltas.values())
    with pytest.raises(ma.NotFoundError):
        store.get("missing")
