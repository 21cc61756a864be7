import pytest

from corpus_gen.datasets import SAMPLES, sample


def test_same_seed_reproduces_rows():
    for name in SAMPLES:
        assert sample(name, 7) == sample(name, 7)


def test_different_seed_changes_rows():
    _, a = sample("engines", 1)
    _, b = sample("engines", 2)
    assert a != b


def test_engines_has_thirty_rows():
    fields, rows = sample("engines", 1)
    assert len(rows) == 30
    assert [f["name"] for f in fields] == ["power", "efficiency"]


def test_weather_covers_all_conditions():
    fields, rows = sample("weather", 11)
    ci = [f["name"] for f in fields].index("weather")
    assert {r[ci] for r in rows} == {"sun", "rain", "fog", "snow", "drizzle"}


def test_weather_dry_days_have_zero_precipitation():
    fields, rows = sample("weather", 11)
    names = [f["name"] for f in fields]
    pi, ci = names.index("precipitation"), names.index("weather")
    for r in rows:
        if r[ci] in ("sun", "fog"):
            assert r[pi] == 0.0
        else:
            assert r[pi] > 0.0


def test_flights_carriers_balanced():
    fields, rows = sample("flights", 13)
    ci = [f["name"] for f in fields].index("carrier")
    for carrier in ("aria", "borea", "corvid", "dune"):
        assert sum(1 for r in rows if r[ci] == carrier) == 30


def test_flights_delay_clamped():
    fields, rows = sample("flights", 13)
    di = [f["name"] for f in fields].index("delay")
    assert all(-20.0 <= r[di] <= 60.0 for r in rows)


def test_unknown_sample_rejected():
    with pytest.raises(KeyError):
        sample("nope", 1)
