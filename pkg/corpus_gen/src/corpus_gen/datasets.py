"""Named sample datasets, fully determined by a seed.

Every sample is a function seed -> (fields, rows) built on random.Random,
so regenerating a fixture with the same seed reproduces the same data
byte for byte. Fields use the same {"name", "type"} shape the sidecars
record; types are "number", "text", or "date".
"""

from __future__ import annotations

import datetime
import random


def _field(name: str, type_: str) -> dict:
    return {"name": name, "type": type_}


def _spread(rng: random.Random, labels: list[str], total: int) -> list[str]:
    """An even split of total over labels, shuffled.

    Guarantees every label appears, so grouped aggregates never see an
    empty or singleton group by accident.
    """
    base, extra = divmod(total, len(labels))
    out = []
    for i, label in enumerate(labels):
        out.extend([label] * (base + (1 if i < extra else 0)))
    rng.shuffle(out)
    return out


def engines(seed: int):
    """Scatter sample: engine power against fuel efficiency, 30 rows."""
    rng = random.Random(seed)
    rows = []
    for _ in range(30):
        power = round(rng.uniform(60.0, 220.0), 1)
        efficiency = round(70.0 - 0.25 * power + rng.gauss(0.0, 6.0), 1)
        rows.append([power, efficiency])
    return [_field("power", "number"), _field("efficiency", "number")], rows


def traffic(seed: int):
    """Line sample: hourly visits over one day, a bounded random walk."""
    rng = random.Random(seed)
    rows = []
    visits = 120.0
    for hour in range(24):
        visits = max(10.0, visits + rng.uniform(-25.0, 30.0))
        rows.append([hour, round(visits, 1)])
    return [_field("hour", "number"), _field("visits", "number")], rows


def channels(seed: int):
    """Multi-line sample: visits per acquisition channel, 3 series."""
    rng = random.Random(seed)
    rows = []
    for channel, base in [("email", 40.0), ("search", 90.0), ("social", 60.0)]:
        level = base
        for day in range(1, 17):
            level = max(5.0, level + rng.uniform(-12.0, 14.0))
            rows.append([day, channel, round(level, 1)])
    fields = [_field("day", "number"), _field("channel", "text"),
              _field("visits", "number")]
    return fields, rows


def regions(seed: int):
    """Bar sample: sales per region, 6 categories."""
    rng = random.Random(seed)
    names = ["north", "south", "east", "west", "central", "coast"]
    rows = [[name, round(rng.uniform(40.0, 160.0), 1)] for name in names]
    return [_field("region", "text"), _field("sales", "number")], rows


def quarters(seed: int):
    """Stacked-bar sample: revenue per product per quarter, tidy."""
    rng = random.Random(seed)
    rows = []
    for product in ["anvils", "brooms", "crates"]:
        for quarter in ["Q1", "Q2", "Q3", "Q4"]:
            rows.append([quarter, product, round(rng.uniform(10.0, 60.0), 1)])
    fields = [_field("quarter", "text"), _field("product", "text"),
              _field("revenue", "number")]
    return fields, rows


def rainfall(seed: int):
    """Grouped-bar sample: rainfall per season for 5 cities, tidy."""
    rng = random.Random(seed)
    rows = []
    for season in ["spring", "summer", "autumn"]:
        for city in ["asra", "brint", "corow", "delf", "esten"]:
            rows.append([city, season, round(rng.uniform(20.0, 140.0), 1)])
    fields = [_field("city", "text"), _field("season", "text"),
              _field("rainfall", "number")]
    return fields, rows


def volume(seed: int):
    """Area sample: weekly volume, 20 points."""
    rng = random.Random(seed)
    rows = []
    level = 50.0
    for week in range(1, 21):
        level = max(5.0, level + rng.uniform(-10.0, 12.0))
        rows.append([week, round(level, 1)])
    return [_field("week", "number"), _field("volume", "number")], rows


def segments(seed: int):
    """Stacked-area sample: users per plan segment, 3 series."""
    rng = random.Random(seed)
    rows = []
    for segment, base in [("free", 80.0), ("pro", 40.0), ("team", 20.0)]:
        level = base
        for month in range(1, 15):
            level = max(2.0, level + rng.uniform(-6.0, 9.0))
            rows.append([month, segment, round(level, 1)])
    fields = [_field("month", "number"), _field("segment", "text"),
              _field("users", "number")]
    return fields, rows


def durations(seed: int):
    """Histogram sample: 80 task durations in seconds, clamped to 0..600."""
    rng = random.Random(seed)
    rows = []
    for _ in range(80):
        value = min(600.0, max(0.0, rng.gauss(300.0, 110.0)))
        rows.append([round(value, 1)])
    return [_field("duration", "number")], rows


def weather(seed: int):
    """Daily weather sample: 60 days with a categorical condition."""
    rng = random.Random(seed)
    kinds = _spread(rng, ["sun", "rain", "fog", "snow", "drizzle"], 60)
    start = datetime.date(2012, 1, 1)
    rows = []
    for i, kind in enumerate(kinds):
        day = start + datetime.timedelta(days=i)
        wet = kind in ("rain", "drizzle", "snow")
        precipitation = round(rng.uniform(1.0, 24.0), 1) if wet else 0.0
        temp_max = round(rng.uniform(-4.0, 14.0) +
                         (8.0 if kind == "sun" else 0.0), 1)
        wind = round(rng.uniform(0.5, 9.5), 1)
        rows.append([day.isoformat(), precipitation, temp_max, wind, kind])
    fields = [_field("date", "date"), _field("precipitation", "number"),
              _field("temp_max", "number"), _field("wind", "number"),
              _field("weather", "text")]
    return fields, rows


def sensors(seed: int):
    """Station readings: 8 numeric fields for scatter pairs, 40 rows."""
    rng = random.Random(seed)
    spans = [("temp", 15.0, 35.0), ("humidity", 30.0, 90.0),
             ("pressure", 980.0, 1040.0), ("wind", 0.0, 20.0),
             ("solar", 200.0, 900.0), ("dust", 0.0, 50.0),
             ("noise", 60.0, 100.0), ("co2", 350.0, 600.0)]
    rows = []
    for _ in range(40):
        rows.append([round(rng.uniform(lo, hi), 1) for _, lo, hi in spans])
    return [_field(name, "number") for name, _, _ in spans], rows


def flights(seed: int):
    """Flight records: distance, delay, carrier; 120 rows, 4 carriers."""
    rng = random.Random(seed)
    carriers = _spread(rng, ["aria", "borea", "corvid", "dune"], 120)
    rows = []
    for carrier in carriers:
        distance = float(round(rng.uniform(30.0, 970.0)))
        delay = round(min(60.0, max(-20.0, rng.gauss(12.0, 18.0))), 1)
        rows.append([distance, delay, carrier])
    fields = [_field("distance", "number"), _field("delay", "number"),
              _field("carrier", "text")]
    return fields, rows


SAMPLES = {
    "engines": engines,
    "traffic": traffic,
    "channels": channels,
    "regions": regions,
    "quarters": quarters,
    "rainfall": rainfall,
    "volume": volume,
    "segments": segments,
    "durations": durations,
    "weather": weather,
    "sensors": sensors,
    "flights": flights,
}


def sample(name: str, seed: int):
    """Look up a named sample and build it for the given seed."""
    try:
        build = SAMPLES[name]
    except KeyError:
        raise KeyError("unknown sample %r" % name) from None
    return build(seed)
