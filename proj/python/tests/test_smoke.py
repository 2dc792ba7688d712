import json
import os
from pathlib import Path

import pytest

import poollines as pl

DATA = Path(os.environ.get("POOLLINES_DATA_DIR", Path(__file__).parents[2] / "data"))


@pytest.fixture(scope="module")
def city():
    return pl.parse_gtfs(DATA / "synthetic_city", 20220720)


def test_geo_and_times():
    # one degree of latitude
    assert pl.haversine_km((45.0, -122.0), (46.0, -122.0)) == pytest.approx(111.195, abs=1e-3)
    assert pl.parse_gtfs_time("25:01:02") == 90062
    assert pl.format_gtfs_time(90062) == "25:01:02"
    assert pl.agent_count(8.3, 662.47) == 5499


def test_parse_and_round_trip(city, tmp_path):
    assert city.num_stops == 341
    assert city.num_trips == 1364
    assert city.service_date == 20220720
    assert city == pl.synthetic_city()
    city.write(tmp_path)
    assert pl.parse_gtfs(tmp_path, 20220720) == city
    assert pl.parse_gtfs_files(city.files(), 20220720) == city


def test_errors(tmp_path):
    with pytest.raises(pl.DataError):
        pl.parse_gtfs(tmp_path / "missing")
    with pytest.raises(ValueError):
        pl.Network(pl.synthetic_city()).plan((45.5, -122.7), (45.5, -122.6), 36000, "CAR")


def test_injection_and_planning(city):
    s = pl.generate_scenario(city, seed=3, driver_count=40, rider_count=10)
    assert (s.num_drivers, s.num_riders) == (40, 10)
    assert s.agents_csv().startswith("kind,id,")
    augmented = pl.inject_poollines(s)
    assert augmented.num_trips == city.num_trips + 40
    assert augmented.has_trip("116223870039")
    assert augmented.has_stop("DRIVER_origin_0")

    net = pl.Network(augmented)
    its = net.plan((45.45, -122.70), (45.52, -122.62), 37800)
    assert its and its[0]["arrive"] >= 37800
    assert its == sorted(its, key=lambda i: i["arrive"])
    first = net.earliest_arrival((45.45, -122.70), (45.52, -122.62), 37800)
    assert first["arrive"] == its[0]["arrive"]
    walk = net.plan((45.45, -122.70), (45.452, -122.70), 37800, "WALK")
    assert [leg["kind"] for leg in walk[0]["legs"]] == ["walk"]


def test_simulate(city, tmp_path):
    s = pl.generate_scenario(city, seed=2, driver_count=60, rider_count=120)
    res = pl.simulate(s, enforce_capacity=False, threads=1, output_dir=tmp_path)
    assert list(res) == ["no_carpooling", "current", "integrated"]
    served = [res[v]["served"] for v in res]
    assert served == sorted(served)
    for v in res.values():
        assert sum(v["modal_split_percent"].values()) == pytest.approx(100.0)
        assert sum(v["occupancy_hist"]) == 60
    assert res["integrated"]["vkt_saved_km"] is not None
    summary = json.loads((tmp_path / "summary.json").read_text())
    assert summary["variants"]["integrated"]["served"] == res["integrated"]["served"]


def test_simulate_config(tmp_path):
    res = pl.simulate_config(
        DATA / "synthetic_quarter.json",
        ["scenario.driver_count=20", "scenario.rider_count=30", "threads=1",
         f"output_dir={json.dumps(str(tmp_path))}"],
    )
    assert set(res) == {"no_carpooling", "current", "integrated"}
    assert (tmp_path / "outcomes_integrated.csv").exists()
    with pytest.raises(pl.ConfigError):
        pl.simulate_config(DATA / "synthetic_quarter.json", ["bogus=1"])
