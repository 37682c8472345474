import pytest

import _nico


def test_nu_exact():
    assert _nico.nu("[1..2000]") == "0"
    assert _nico.nu("{1, 2, 2, 4}") == "0"
    assert _nico.nu("shift(family(sigma_m, 7), 1)") == "-18"


def test_parse_error_is_value_error():
    with pytest.raises(ValueError):
        _nico.nu("1..19]")
    with pytest.raises(ValueError):
        _nico.nu("omit([1..5], 9)")


def test_format_round_trip():
    canon = _nico.format_expr("  shift( [1..3] ,2)")
    assert canon == "shift([1..3], 2)"
    assert _nico.format_expr(canon) == canon


def test_eval_sequence_sorted_strings():
    assert _nico.eval_sequence("omit([1..5], 3)") == ["1", "2", "4", "5"]
    assert _nico.eval_sequence("{(1+2*sqrt(3))/4}") == ["(1+2*sqrt(3))/4"]


def test_translate_poly_shape():
    out = _nico.poly("translate", "[1..4]")
    assert out["poly"]["var"] == "t"
    assert out["poly"]["coeffs"] == ["0", "-10", "-14", "-4"]
    roots = [r for r, _ in out["roots"]["rational_roots"]]
    assert "0" in roots and "-1" in roots


def test_subset_poly_needs_selector():
    out = _nico.poly("subset", "[1..19]", "{6,13}")
    assert ("5/2", 1) in [tuple(r) for r in out["roots"]["rational_roots"]]


def test_adjoin_two_pairs():
    assert _nico.initial_segment_pairs(16) == [
        ("2", "18"),
        ("9", "20"),
        ("12", "20"),
        ("17", "18"),
    ]
    assert _nico.adjoin_two("[1..5]", bound=50) == [("2", "7"), ("6", "7")]


def test_pell_solutions():
    out = _nico.pell("35", 3)
    assert out["D"] == "35"
    assert out["solutions"][2] == ("846", "143")


def test_repetition_family():
    fam = _nico.repetition_family(6, 3)
    assert fam[2]["n"] == "143"
    assert fam[2]["t_neg"] == "-66"
    assert fam[2]["x"] == "846"


def test_gap_family():
    out = _nico.gap_family(3)
    assert [row["j"] for row in out["gap_family"]] == ["2", "7", "94"]
    assert out["gap_family"][2]["m"] == "228"


def test_family_registry():
    names = {fam["name"] for fam in _nico.family_list()}
    assert {"classical", "sigma_m", "golden", "omit_adjoin"} <= names
    rep = _nico.family_verify("sigma_m", [7])
    assert rep["pass"] and rep["nu"] == "0"


def test_omit_adjoin_schema():
    pair = _nico.omit_adjoin(2, 1)
    assert set(pair) == {"n", "m", "a", "b", "nu"}
    assert pair["nu"] == "0"


def test_trend_report_schema():
    rep = _nico.difference_limit(2, 200, 30, "1/100")
    assert rep["pass"] is True
    assert {"k", "value", "error"} <= set(rep["samples"][0])


def test_integer_points():
    pts = _nico.integer_points(8, 20)
    assert len(pts) == 20
    assert (9, 11, "branch") in pts


def test_curve_sample_exact_roots():
    rows = _nico.curve_sample(8, "0", "0", "1", 20)
    assert [row["exact"] for row in rows] == ["-7", "-2", "10"]


def test_verify_single_area():
    results = _nico.verify(only=["exact"])
    assert len(results) == 1
    assert results[0]["status"] == "pass"
    assert results[0]["check_id"] == "classical-identity"
