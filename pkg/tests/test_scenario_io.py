import json
from fractions import Fraction

import pytest

from flexmarket.scenario import (
    DuplicatePlantIdError,
    InvalidNumberError,
    ScenarioParseError,
    UnknownMeasureError,
    load_scenario,
    scenario_to_json,
    toy_grid,
)


def write(tmp_path, name, doc):
    path = tmp_path / name
    path.write_text(json.dumps(doc) if isinstance(doc, dict) else doc)
    return path


def minimal_doc(**overrides):
    doc = {
        "plants": [
            {"id": "a", "start_up_time_h": 1, "marginal_cost_eur_per_mwh": 10,
             "capacity_mw": 5},
            {"id": "b", "start_up_time_h": 2, "marginal_cost_eur_per_mwh": 20,
             "capacity_mw": 5},
        ],
        "market": {"p0_eur_per_mwh": 10, "demand_mw": 7},
    }
    doc.update(overrides)
    return doc


class TestLoadScenario:
    def test_bundled_toy_grid(self, toy_grid_path):
        scenario = load_scenario(toy_grid_path)
        assert len(scenario.plants) == 8
        assert scenario.market.demand == 25
        assert scenario.market.reference_price_p0 == 10
        # file and in-code builder agree
        assert scenario.plants == toy_grid().plants

    def test_inf_start_up_time(self, toy_grid_path):
        scenario = load_scenario(toy_grid_path)
        wind = next(p for p in scenario.plants if p.id == "wind")
        assert wind.start_up_time.is_unbounded

    def test_duplicate_id(self, tmp_path):
        doc = minimal_doc()
        doc["plants"][1]["id"] = "a"
        with pytest.raises(DuplicatePlantIdError):
            load_scenario(write(tmp_path, "dup.json", doc))

    def test_unknown_measure(self, tmp_path):
        with pytest.raises(UnknownMeasureError):
            load_scenario(write(tmp_path, "m.json", minimal_doc(measure="cubic")))

    def test_negative_marginal_cost(self, tmp_path):
        doc = minimal_doc()
        doc["plants"][0]["marginal_cost_eur_per_mwh"] = -1
        with pytest.raises(InvalidNumberError, match="marginal_cost"):
            load_scenario(write(tmp_path, "neg.json", doc))

    def test_parse_error(self, tmp_path):
        with pytest.raises(ScenarioParseError):
            load_scenario(write(tmp_path, "broken.json", "{not json"))

    def test_unknown_participant(self, tmp_path):
        doc = minimal_doc(capacity={"participants": ["ghost"]})
        with pytest.raises(ScenarioParseError, match="ghost"):
            load_scenario(write(tmp_path, "p.json", doc))

    def test_decimal_fields_parse_exactly(self, tmp_path):
        doc = minimal_doc()
        doc["plants"][0]["start_up_time_h"] = 0.12
        scenario = load_scenario(write(tmp_path, "d.json", doc))
        assert scenario.plants[0].start_up_time.hours == Fraction(3, 25)

    def test_p0_grid(self, tmp_path):
        doc = minimal_doc(market={"p0_grid": [0, 10, 20], "demand_mw": 7})
        scenario = load_scenario(write(tmp_path, "g.json", doc))
        assert scenario.p0_grid == (0, 10, 20)
        assert scenario.market.reference_price_p0 == 0

    def test_csv_plant_table(self, tmp_path):
        csv_text = (
            "id,start_up_time_h,marginal_cost_eur_per_mwh,capacity_mw\n"
            "fast,0.1,30,5\n"
            "slow,inf,1,10\n"
        )
        scenario = load_scenario(write(tmp_path, "plants.csv", csv_text))
        assert len(scenario.plants) == 2
        assert scenario.plants[1].start_up_time.is_unbounded

    def test_csv_missing_column(self, tmp_path):
        with pytest.raises(ScenarioParseError):
            load_scenario(write(tmp_path, "bad.csv", "id,capacity_mw\na,5\n"))


class TestRoundTrip:
    def test_json_round_trip(self, tmp_path):
        scenario = toy_grid("12.5", 25)
        path = tmp_path / "rt.json"
        path.write_bytes(scenario_to_json(scenario))
        assert load_scenario(path) == scenario

    def test_round_trip_is_stable(self, tmp_path):
        scenario = toy_grid(10, 25)
        assert scenario_to_json(scenario) == scenario_to_json(scenario)
