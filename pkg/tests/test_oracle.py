import json
import math
from fractions import Fraction

import pytest

from conftest import ROW34, SQ5, random_sl2
from kleinian_rp import (
    ParamTriple,
    Status,
    check_theorem_a,
    construct_generators,
    decide,
    enumerate_row,
)
from kleinian_rp.config import EnumCaps
from kleinian_rp.oracle import SPORADIC_NML, admissible_nml, boundary_margin
from kleinian_rp.witnesses import build_witnesses

CAPS = EnumCaps(n=9, m=12, p=12, k=12)
C7 = 2 * math.cos(2 * math.pi / 7)


def clause_of(t):
    f, g = construct_generators(t)
    return check_theorem_a(f, g)


def first(row, pred=lambda r: True):
    return next(r for r in enumerate_row(row, CAPS) if pred(r))


def test_clause_i():
    r = first(21, lambda r: r.params["n"] == 3)
    res = clause_of(r.triple)
    assert res.clause == "i" and res.discrete
    assert res.classes["h1"].order == r.params["m"]


def test_clause_ii_sporadic():
    t = ParamTriple((SQ5 - 5) / 2, 3 * (SQ5 + 1) / 2, (SQ5 - 1) / 2)
    res = clause_of(t)
    assert res.clause == "ii"
    assert res.classes["h1"].pi_over() == 2 and res.classes["h2"].pi_over() == Fraction(5, 2)


def test_clause_v():
    # m = 5 is excluded: 1/3 + 1/5 > 1/2
    assert not [r for r in enumerate_row(26, CAPS) if r.params["n"] == 3 and r.params["m"] == 5]
    r = first(26, lambda r: r.params["n"] == 3 and r.params["m"] == 7)
    res = clause_of(r.triple)
    assert res.clause == "v" and res.classes["h1"].order == 7


def test_clause_v_parabolic_h3():
    hits = [r for r in enumerate_row(26, CAPS) if r.params["n"] == 3
            and clause_of(r.triple).classes["h3"].kind.value == "parabolic"]
    assert hits


def test_clause_vi():
    gamma = C7 - 1
    res = clause_of(ParamTriple(-3.0, 2 * (gamma ** 2 + 2 * gamma + 3) / gamma, gamma))
    assert res.clause == "vi"


def test_clause_iii_row33():
    res = clause_of(ParamTriple(-3.0, 2 * C7, C7))
    assert res.clause == "iii"


def test_no_clause_for_generic_triple():
    res = clause_of(ParamTriple(-3.0, 1.0, 0.7))
    assert res.clause is None and not res.discrete and res.satisfied == ()
    assert set(res.notes) == {"i", "ii", "iii", "iv", "v", "vi", "vii"}


def test_admissible_nml():
    assert all(admissible_nml(*x) for x in SPORADIC_NML)
    assert admissible_nml(3, Fraction(7), Fraction(7, 3))
    assert admissible_nml(7, Fraction(3), Fraction(7, 3))
    assert not admissible_nml(3, Fraction(6), Fraction(2))
    assert not admissible_nml(9, Fraction(3), Fraction(3))


def test_boundary_margin_zero_on_rational_rotations():
    f, g = construct_generators(ROW34)
    assert boundary_margin(build_witnesses(f, g)) < 1e-9
    f, g = construct_generators(ParamTriple(-3.0, 1.0, 0.7))
    assert boundary_margin(build_witnesses(f, g)) > 1e-6


# -- decide -------------------------------------------------------------------------


def test_decide_row33():
    v = decide(ParamTriple(-3.0, 2 * C7, C7))
    assert v.status is Status.DISCRETE and v.theorem_a_clause == "iii" and v.agreement is True
    assert [m.row for m in v.matched_rows] == [33]


def test_decide_row34_matrix_input():
    f, g = construct_generators(ROW34)
    v = decide((f, g))
    assert v.status is Status.DISCRETE and [m.row for m in v.matched_rows] == [34]
    assert v.agreement is True


def test_decide_not_discrete():
    v = decide(ParamTriple(-3.0, 1.0, 0.7))
    assert v.status is Status.NOT_DISCRETE and v.matched_rows == () and v.agreement is True


def test_decide_out_of_scope():
    v = decide(ParamTriple(-3, 1, 0))
    assert v.status is Status.OUT_OF_SCOPE and v.delegate
    v = decide(ParamTriple(-4, 2, 0.5))
    assert v.status is Status.OUT_OF_SCOPE and "order-2" in v.delegate
    # beta = -1 is an order-6 rotation, but -beta beta'/4 = 1/4 < 1/2: invariant plane
    v = decide(ParamTriple(-1, 1, 0.5))
    assert v.status is Status.OUT_OF_SCOPE and v.space.kind.value == "invariant_plane"
    v = decide(ParamTriple(-5, -6, -8))
    assert v.status is Status.OUT_OF_SCOPE and v.space.k == 2


def test_decide_non_primitive_generator():
    """f rotating through 4 pi/5 generates the same group as its primitive power."""
    t = enumerate_row(37, CAPS)[0].triple
    b = -4 * math.sin(2 * math.pi / 5) ** 2
    v = decide(ParamTriple(b, t.beta_prime, t.gamma * b / t.beta))
    assert v.status is Status.DISCRETE and v.normalized is not None
    assert [m.row for m in v.matched_rows] == [37]


def test_decide_rows_1_to_20_parameter_only():
    t = enumerate_row(1, CAPS)[0].triple
    v = decide(t)
    assert v.status is Status.DISCRETE and v.theorem_a is None and v.agreement is None


def test_decide_swapped_order():
    v = decide(ROW34.swapped())
    assert v.status is Status.DISCRETE
    assert [(m.row, m.swapped) for m in v.matched_rows] == [(34, True)]
    assert v.theorem_a_clause == "iii" and v.agreement


def test_verdict_json():
    d = json.loads(json.dumps(decide(ROW34).to_dict()))
    assert d["status"] == "discrete" and d["theorem_a_clause"] == "iii"
    assert ParamTriple.from_dict(d["triple"]) == ROW34


def test_agreement_over_odd_rows(rng):
    for row in range(21, 42):
        for r in enumerate_row(row, EnumCaps(n=7, m=8, p=8, k=8))[:5]:
            f, g = construct_generators(r.triple)
            W = random_sl2(rng)
            v = decide((f.conjugate_by(W), g.conjugate_by(W)))
            assert v.status is Status.DISCRETE and v.agreement is True, (row, r.params)
