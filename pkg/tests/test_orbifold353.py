import math

import pytest

from kleinian_rp import ParamTriple, construct_generators, evaluate_word, match_table, verify_353
from kleinian_rp.geometry import act_on_point, axis_of, foot_on, point_distance
from kleinian_rp.orbifold353 import E_WORD, parameters

SQ5 = math.sqrt(5)


@pytest.fixture(scope="module")
def report():
    return verify_353()


def test_parameters_are_row_37():
    t = parameters()
    want = ParamTriple((SQ5 - 5) / 2, SQ5, (SQ5 - 1) / 2)
    assert max(abs(a - b) for a, b in zip(t, want)) < 1e-12
    assert [m.row for m in match_table(t)] == [37]


def test_all_checks_pass(report):
    assert report.ok, [k for k, v in report.checks().items() if not v]
    assert report.matched_rows == (37,)


def test_half_turn(report):
    assert abs(report.e_trace) <= 1e-8
    assert report.e_square_residual <= 1e-8
    assert abs(report.angle_e_f - math.pi / 2) <= 1e-7
    assert abs(report.angle_e_g - math.pi / 2) <= 1e-7
    assert report.common_point_residual <= 1e-7
    assert report.max_imag_parameter <= 1e-10


def test_witness_orders(report):
    assert report.h1_fourth_residual <= 1e-8
    assert report.h2_cube_residual <= 1e-8
    assert report.z_cube_residual <= 1e-8
    assert report.e_from_e1_residual <= 1e-8


def test_renormalization(report):
    assert report.renorm_residuals[4] <= report.renorm_residuals[16] + 1e-10


def test_common_point_check_detects_motion():
    """Negative control: the residual is large for an element that moves the point."""
    f, g = construct_generators(parameters())
    P = foot_on(axis_of(f), axis_of(g))
    assert point_distance(act_on_point(g, P), P) > 0.1
    e = evaluate_word(E_WORD, {"f": f, "g": g})
    assert point_distance(act_on_point(e, P), P) < 1e-7


def test_wrong_word_is_not_a_half_turn():
    f, g = construct_generators(parameters())
    e = evaluate_word(E_WORD.replace("g f^2", "g f^3", 1), {"f": f, "g": g})
    assert abs(e.trace) > 1e-3


def test_report_json(report):
    d = report.to_dict()
    assert d["ok"] is True and all(d["checks"].values())
