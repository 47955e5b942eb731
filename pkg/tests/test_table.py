import math

import pytest
from hypothesis import given, settings, strategies as st

from conftest import ROW34, SQ5
from kleinian_rp import ParamTriple, enumerate_row, get_row, is_truly_spatial, match_table
from kleinian_rp.config import EnumCaps
from kleinian_rp.errors import InvalidRow
from kleinian_rp.table import (
    CORRECTIONS,
    ODD_ROWS,
    PRINTED_ROWS,
    ROWS,
    V,
    V_printed,
    in_theorem_a_region,
)

SMALL = EnumCaps(n=9, m=12, p=12, k=12)
ROW41_PRINTED = ParamTriple((SQ5 - 5) / 2, (5 * SQ5 + 9) / 2, SQ5 + 2)
ROW41 = ParamTriple((SQ5 - 5) / 2, (7 * SQ5 + 9) / 2, SQ5 + 2)


def rows_of(t, **kw):
    return sorted({m.row for m in match_table(t, **kw)})


def test_table_shape():
    assert [r.index for r in ROWS] == list(range(1, 42))
    assert [r.index for r in PRINTED_ROWS] == list(range(1, 42))
    assert set(CORRECTIONS) == {27, 28, 31, 41}
    with pytest.raises(InvalidRow):
        get_row(42)
    assert "sqrt5" in get_row(34).describe()


def test_match_row34():
    assert rows_of(ROW34) == [34]


def test_row41_corrected_and_printed():
    assert rows_of(ROW41) == [41]
    # the printed surd is not truly spatial, so only the printed table lists it
    assert not is_truly_spatial(ROW41_PRINTED)
    assert rows_of(ROW41_PRINTED) == []
    assert rows_of(ROW41_PRINTED, variant="printed") == [41]


def test_commuting_pair_matches_nothing():
    assert match_table(ParamTriple(-3, -3, 0)) == []


def test_row27_feed_back():
    n, p = 7, 5
    beta = -4 * math.sin(math.pi / n) ** 2
    ctx = {"n": n, "beta": beta, "gamma": (beta + 4) * (beta + 1)}
    A = 2 * (beta + 2) ** 2 / (beta + 1)
    beta_p = A * math.cos(math.pi / p) + V(ctx)
    matches = [m for m in match_table(ParamTriple(beta, beta_p, ctx["gamma"])) if m.row == 27]
    assert len(matches) == 1 and matches[0].params == {"n": 7, "p": 5}


def test_row27_V_correction():
    """The printed V puts every n = 7 instance outside the truly-spatial region."""
    beta = -4 * math.sin(math.pi / 7) ** 2
    ctx = {"n": 7, "beta": beta, "gamma": (beta + 4) * (beta + 1)}
    assert V(ctx) != pytest.approx(V_printed(ctx))
    assert enumerate_row(27, SMALL, variant="corrected")
    assert not [r for r in enumerate_row(27, SMALL, variant="printed") if r.params["n"] == 7]


def test_enumerate_row34_single():
    inst = enumerate_row(34, SMALL)
    assert len(inst) == 1 and inst[0].params == {}


def test_enumerate_row29():
    inst = enumerate_row(29, EnumCaps(n=11, m=11, p=11, k=11))
    ns = sorted(r.params["n"] for r in inst)
    assert ns == [5, 7, 11]
    for r in inst:
        assert r.triple.gamma == pytest.approx(r.triple.beta + 3, abs=1e-12)


def test_enumerate_row21_in_region():
    inst = enumerate_row(21, EnumCaps(n=5, m=6, p=4, k=4))
    assert inst
    for r in inst:
        t = r.triple
        assert 0 < t.gamma < -t.beta * t.beta_prime / 4


def test_enumeration_sorted_and_deterministic():
    a = enumerate_row(22, SMALL)
    assert a == enumerate_row(22, SMALL)
    assert [r.sort_key() for r in a] == sorted(r.sort_key() for r in a)


@pytest.mark.parametrize("row", range(1, 42))
def test_enumerated_triples_truly_spatial_and_found(row):
    inst = enumerate_row(row, SMALL)
    for r in inst:
        assert is_truly_spatial(r.triple)
        assert row in rows_of(r.triple, caps=SMALL)
        if row in ODD_ROWS:
            assert in_theorem_a_region(r.triple)


@settings(max_examples=25)
@given(st.sampled_from(range(21, 42)), st.integers(0, 10**6), st.integers(3, 12))
def test_match_monotone_in_caps(row, seed, cap):
    inst = enumerate_row(row, EnumCaps(n=9, m=12, p=12, k=12))
    if not inst:
        return
    t = inst[seed % len(inst)].triple
    small = {(m.row, tuple(m.params.items())) for m in match_table(t, EnumCaps.uniform(cap))}
    large = {(m.row, tuple(m.params.items())) for m in match_table(t, EnumCaps.uniform(cap + 20))}
    assert small <= large
