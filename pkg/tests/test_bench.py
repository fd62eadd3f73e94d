import csv
import io
import math

import pytest

from burning.bench import CSV_COLUMNS, RunReport, forest_corpus, gadget_check, run_bench
from burning.graph import is_forest
from burning.instances import path


def rows_of(res, timing=False):
    return list(csv.DictReader(io.StringIO(res.csv(timing))))


def test_paths_suite():
    res = run_bench("paths")
    rows = rows_of(res)
    assert list(rows[0]) == CSV_COLUMNS and len(rows) == 17
    for n, row in enumerate(rows, start=1):
        assert int(row["b_exact"]) == int(row["b_star"]) == math.ceil(math.sqrt(n))
        assert row["time_ms"] == ""
        assert int(row["b_exact"]) <= int(row["r_random"]) <= int(row["r_greedy"]) <= 3 * int(row["b_exact"])


def test_small_trees_suite():
    res = run_bench("small-trees", count=15)
    assert res.complete
    for row in res.rows:
        assert row.b_star == row.b_exact
        assert row.extra["b_star_a2"] <= row.b_exact <= row.extra["b_star_a2"] + 1


def test_gadget_check_small():
    info = gadget_check(path(2), 1)
    assert info["gamma"] == 1 and info["forward_ok"] and info["extracted_dominates"] and info["size_ok"]


def test_corpus_is_seeded_forests():
    a, b = forest_corpus(20, 3), forest_corpus(20, 3)
    assert a == b and all(is_forest(g) and g.vertex_count <= 14 for _, g in a)
    assert forest_corpus(20, 4) != a


def test_report_rejects_inverted_interval():
    with pytest.raises(ValueError):
        RunReport("x", {}, {"lower": 3, "upper": 2})


def test_unknown_suite():
    with pytest.raises(ValueError):
        run_bench("nope")
