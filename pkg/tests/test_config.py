import json

import pytest

from kleinian_rp.config import CONFIG_ENV_VAR, EnumCaps, Settings, Tolerances, load_settings


def test_defaults():
    s = load_settings()
    assert s.tolerances == Tolerances() and s.caps == EnumCaps() and s.output == "human"
    assert s.tolerances.eps == 1e-9 and s.tolerances.eps_axis == 1e-7


@pytest.mark.parametrize("kw", [{"eps": 0}, {"eps_match": -1}, {"max_denominator": 5}, {"renorm_period": 0}])
def test_invalid_tolerances(kw):
    with pytest.raises(ValueError):
        Tolerances(**kw)


def test_invalid_caps():
    with pytest.raises(ValueError):
        EnumCaps(n=1)
    assert EnumCaps.uniform(7) == EnumCaps(7, 7, 7, 7)
    assert EnumCaps(n=3, m=4, p=5, k=6).cap_for("k") == 6


def test_file_and_overrides(tmp_path, monkeypatch):
    path = tmp_path / "cfg.json"
    path.write_text(json.dumps({"tolerances": {"eps": 1e-8}, "caps": {"n": 15}, "output": "json"}))
    s = load_settings(path, {"eps_match": 1e-7, "m": 30, "eps_axis": None})
    assert s.tolerances.eps == 1e-8 and s.tolerances.eps_match == 1e-7 and s.tolerances.eps_axis == 1e-7
    assert s.caps.n == 15 and s.caps.m == 30 and s.output == "json"
    monkeypatch.setenv(CONFIG_ENV_VAR, str(path))
    assert load_settings().caps.n == 15
    assert Settings().to_dict()["caps"]["n"] == 200


def test_bad_config(tmp_path):
    path = tmp_path / "cfg.json"
    path.write_text(json.dumps({"tolerance": {}}))
    with pytest.raises(ValueError):
        load_settings(path)
    with pytest.raises(ValueError):
        load_settings(None, {"nonsense": 1})
    with pytest.raises(ValueError):
        load_settings(None, {"output": "xml"})
