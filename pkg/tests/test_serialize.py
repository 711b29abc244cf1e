"""JSON schema validation and object loading."""

import pytest

from ordrel import ConfigError, Exponential, GridSpec, Lomax
from ordrel.serialize import (
    load_case,
    load_dist,
    load_dist_or_system,
    load_generator,
    load_grid,
    load_scan_config,
    load_system,
    read_json_file,
)


class TestDistLoading:
    def test_valid(self):
        d = load_dist({"family": "exponential", "params": {"rate": 2.0}})
        assert d == Exponential(2.0)

    def test_lomax_default_scale(self):
        d = load_dist({"family": "lomax", "params": {"shape": 2.0}})
        assert d == Lomax(2.0, 1.0)

    def test_nested_reflection(self):
        d = load_dist({"family": "reflected_dfr",
                       "params": {"inner": {"family": "lomax",
                                            "params": {"shape": 1.5}}}})
        assert d.inner == Lomax(1.5, 1.0)

    def test_unknown_family(self):
        with pytest.raises(ConfigError):
            load_dist({"family": "gamma", "params": {"shape": 1.0}})

    def test_unknown_field_rejected(self):
        with pytest.raises(ConfigError):
            load_dist({"family": "exponential", "params": {"rate": 1.0},
                       "extra": True})

    def test_nonpositive_parameter_rejected(self):
        with pytest.raises(ConfigError):
            load_dist({"family": "exponential", "params": {"rate": -1.0}})


class TestSystemLoading:
    def test_valid(self):
        s = load_system({"kind": "series_phr", "components": [
            {"baseline": {"family": "exponential", "params": {"rate": 1.0}},
             "prop": 2.0}]})
        assert s.kind == "series_phr" and s.props == (2.0,)

    def test_autodetect(self):
        d = load_dist_or_system({"family": "exponential", "params": {"rate": 1.0}})
        assert d == Exponential(1.0)
        o = load_dist_or_system({"kind": "series_phr", "components": [
            {"baseline": {"family": "exponential", "params": {"rate": 1.0}},
             "prop": 1.0}]})
        assert o.sf(1.0) == pytest.approx(Exponential(1.0).sf(1.0))

    def test_bad_kind(self):
        with pytest.raises(ConfigError):
            load_system({"kind": "bridge", "components": []})


class TestGeneratorLoading:
    def test_independence_needs_no_theta(self):
        g = load_generator({"family": "independence"})
        assert g.family == "independence"

    def test_clayton_requires_theta(self):
        with pytest.raises(ConfigError):
            load_generator({"family": "clayton"})

    def test_dim(self):
        g = load_generator({"family": "frank", "theta": 2.0, "dim": 3})
        assert g.dim == 3


class TestGridLoading:
    def test_defaults(self):
        g = load_grid({})
        assert g == GridSpec()

    def test_u_grid(self):
        g = load_grid({"kind": "u", "eps": 0.01, "n": 64})
        assert g.kind == "u" and g.n == 64

    def test_too_few_points(self):
        with pytest.raises(ConfigError):
            load_grid({"n": 10})


class TestCaseLoading:
    def test_t6(self):
        case = load_case({"id": "T6", "scenario": {
            "theta": 1.0, "alphas": [1.0, 2.0], "alphas_star": [0.5, 2.0]}})
        assert case.id == "T6"

    def test_unknown_scenario_field(self):
        with pytest.raises(ConfigError):
            load_case({"id": "T6", "scenario": {
                "theta": 1.0, "alphas": [1.0], "alphas_star": [1.0],
                "gamma": 2.0}})

    def test_missing_scenario_field(self):
        with pytest.raises(ConfigError):
            load_case({"id": "T6", "scenario": {"theta": 1.0}})

    def test_examples_take_defaults(self):
        case = load_case({"id": "Ex1", "scenario": {}})
        assert case.scenario == {}

    def test_nested_objects_are_constructed(self):
        case = load_case({"id": "T7", "scenario": {
            "generator_x": {"family": "clayton", "theta": 2.0},
            "generator_y": {"family": "clayton", "theta": 1.0},
            "baseline_x": {"family": "exponential", "params": {"rate": 1.0}},
            "baseline_y": {"family": "exponential", "params": {"rate": 1.5}},
            "shifts_x": [0.2, 0.5],
            "shifts_y": [0.5, 0.8]}})
        assert case.scenario["generator_x"].theta == 2.0
        assert case.scenario["baseline_y"] == Exponential(1.5)

    def test_bad_id(self):
        with pytest.raises(ConfigError):
            load_case({"id": "T99", "scenario": {}})


class TestScanConfig:
    def test_defaults(self):
        cfg = load_scan_config({"id": "T1", "budget": 10})
        assert cfg == {"theorem_id": "T1", "budget": 10, "strategy": "random",
                       "seed": 0, "grid_n": 96, "box": None}

    def test_box(self):
        cfg = load_scan_config({"id": "T1", "budget": 5,
                                "box": {"f_shape": [1.0, 2.0]}})
        assert cfg["box"] == {"f_shape": (1.0, 2.0)}

    def test_example_ids_not_scannable(self):
        with pytest.raises(ConfigError):
            load_scan_config({"id": "Ex1", "budget": 5})


class TestFiles:
    def test_read_json_file(self, tmp_path):
        p = tmp_path / "d.json"
        p.write_text('{"family": "exponential", "params": {"rate": 1.0}}')
        assert read_json_file(p)["family"] == "exponential"

    def test_missing_file(self, tmp_path):
        with pytest.raises(ConfigError):
            read_json_file(tmp_path / "nope.json")

    def test_malformed_json(self, tmp_path):
        p = tmp_path / "bad.json"
        p.write_text("{not json")
        with pytest.raises(ConfigError):
            read_json_file(p)
