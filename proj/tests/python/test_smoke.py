import json
from fractions import Fraction

import pytest

import hirz


def test_h0_matches_monomial_count():
    assert hirz.h0(2, 1, 2) == 4
    assert hirz.h0(0, 2, 3) == 12


def test_intersection_and_canonical():
    ctx = hirz.SurfaceContext.hirzebruch(1, 2)
    k = hirz.canonical_class(ctx)
    assert hirz.self_intersection(ctx, k) == 8 - 2
    e1 = hirz.DivisorClass(0, 0, [-1, 0])
    assert hirz.self_intersection(ctx, e1) == -1
    assert hirz.intersect(ctx, k, e1) == -1


def test_seshadri_b_branch_is_fractional():
    res = hirz.seshadri(2, 6, 13, [3, 3, 3, 3, 3])
    assert res["epsilon"] == Fraction(11, 2)
    assert isinstance(res["epsilon"], Fraction)
    assert res["argmin_classes"]


def test_error_mapping():
    with pytest.raises(hirz.UnsupportedRangeError):
        hirz.seshadri(1, 3, 8, [1, 1])
    with pytest.raises(hirz.HypothesisError):
        hirz.seshadri(1, 3, 8, [1, 1, 1], very_general=False)
    with pytest.raises(hirz.HirzError):
        hirz.enumerate_classes(1, 3, target=-3)


def test_enumerate_contains_exceptional_curves():
    rows = hirz.enumerate_classes(1, 3, -1)
    assert all(r["self_intersection"] == -1 for r in rows)
    assert any(r["family"] == "exceptional" for r in rows)


def test_ruled_and_bound():
    res = hirz.seshadri_ruled(1, 6, 2, 15, [1], case=6, point_index=1)
    assert res["epsilon"] == 1
    assert hirz.wbnc_bound(1, hirz.DivisorClass(0, 0, [-1])) is None


def test_run_job_json_schema():
    code, out, err = hirz.run_job(json.dumps({"command": "hzero", "e": 2, "a": 1, "b": 2}))
    assert code == 0 and err == ""
    doc = json.loads(out)
    assert doc["schema_version"] == hirz.SCHEMA_VERSION
    assert doc["h0"] == 4


def test_quick_check_passes():
    assert hirz.run_check(1)["passed"]
