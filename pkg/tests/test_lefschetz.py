"""Table-driven local monodromy against the transcribed golden tables."""

import time

import pytest

from braidforge.braid import delta_squared
from braidforge.data import golden_json, golden_names
from braidforge.lefschetz import (LefschetzTable, golden_check,
                                  monodromy_from_table, pair_half_twists,
                                  two_sided_monodromy)

TABLES = golden_names("tables")


def test_table_inventory():
    # six 6-row conic tables and two 20-row staged hyperbola tables
    assert len(TABLES) == 8
    assert sum(1 for n in TABLES if "hyperbola" in n) == 2


@pytest.mark.parametrize("name", TABLES)
def test_golden_rows_match(name):
    rows = golden_check(golden_json(f"tables/{name}.json"))
    bad = [desc for desc, ok in rows if not ok]
    assert not bad, f"mismatched rows: {bad}"


def test_total_row_count_and_runtime():
    t0 = time.monotonic()
    total = sum(len(golden_check(golden_json(f"tables/{n}.json")))
                for n in TABLES)
    assert total == 76
    assert time.monotonic() - t0 < 10


@pytest.mark.parametrize("name", [n for n in TABLES if "conic" in n])
def test_conic_monodromy_degree(name):
    obj = golden_json(f"tables/{name}.json")
    fz = monodromy_from_table(LefschetzTable.from_json(obj))
    # two branch points, one tangency or equivalent block content per table
    assert len(fz) == len(obj["rows"])
    assert all(f.braid().degree == f.degree for f in fz)


def test_two_sided_factor_count():
    name = next(n for n in TABLES if "hyperbola" in n)
    obj = golden_json(f"tables/{name}.json")
    front = LefschetzTable.from_json(obj)
    back = LefschetzTable.from_json(
        {"strands": obj["strands"], "labels": obj["labels"],
         "rows": obj["back_rows"]})
    rho = pair_half_twists(front, obj["rho"])
    fz = two_sided_monodromy(front, back, rho)
    assert len(fz) == len(obj["rows"]) + len(obj["back_rows"])


def test_bad_table_rejected():
    with pytest.raises(ValueError):
        LefschetzTable(3, ["1", "2"], [])
