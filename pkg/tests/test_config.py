import warnings

import pytest

from qtcmodel import ConfigError, load_config, paper_config_path
from qtcmodel.config import parse_config
from qtcmodel.layerstack import thermal_resistance

PAPER_TEXT = paper_config_path().read_text()


def test_paper_config_loads():
    cfg = load_config(paper_config_path())
    assert thermal_resistance(cfg.stack) == pytest.approx(56570, rel=0.01)
    assert cfg.x_over_l == 0.9674
    assert cfg.sim.harmonics == (1, 2, 4, 6)
    m = cfg.device_model()
    assert m.alpha_lambda == pytest.approx(0.00177)
    assert m.n_couples == 12


@pytest.mark.parametrize("variant", ["paper_device", "paper_device_linear", "paper_device_kmeas",
                                     "paper_device_ladder"])
def test_bundled_configs_load(variant):
    load_config(paper_config_path(variant)).device_model()


def test_missing_device_section():
    start = PAPER_TEXT.index("[device]")
    end = PAPER_TEXT.index("[sim]")
    with pytest.raises(ConfigError, match=r"\[device\]"):
        parse_config(PAPER_TEXT[:start] + PAPER_TEXT[end:])


def test_unknown_key_named():
    with pytest.raises(ConfigError, match="bogus_key"):
        parse_config(PAPER_TEXT.replace("[device]", "[device]\nbogus_key = 1"))


def test_unknown_section_named():
    with pytest.raises(ConfigError, match="extras"):
        parse_config(PAPER_TEXT + "\n[extras]\na = 1\n")


def test_missing_key_named():
    with pytest.raises(ConfigError, match="alpha_s"):
        parse_config(PAPER_TEXT.replace("alpha_s = 0.00113", ""))


def test_parse_error_reports_line():
    with pytest.raises(ConfigError, match="line 3"):
        parse_config("[device]\nr_heater_ohm = 1\nthis line is broken\n")


def test_bad_number_named():
    with pytest.raises(ConfigError, match="r_heater_ohm"):
        parse_config(PAPER_TEXT.replace("r_heater_ohm = 670.01", "r_heater_ohm = abc"))


def test_missing_file(tmp_path):
    with pytest.raises(ConfigError, match="not found"):
        load_config(tmp_path / "nope.ini")


def test_ladder_override_used_verbatim_and_layers_ignored():
    ladder = ("[ladder]\ncapacitance_j_per_k = 29.2e-9, 44.6e-9\n"
              "resistance_k_per_w = 18310, 32550\nalpha_lambda = 0.00177\n")
    with pytest.warns(UserWarning, match="ignored"):
        cfg = parse_config(PAPER_TEXT + "\n" + ladder)
    lad = cfg.device_model().ladder
    assert list(lad.resistances) == [18310, 32550]
    assert list(lad.capacitances) == [29.2e-9, 44.6e-9]


def test_ladder_only_config_has_no_warning():
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        cfg = load_config(paper_config_path("paper_device_ladder"))
    assert cfg.stack is None
    assert cfg.device_model().ladder.dc_resistance == 50860


def test_invalid_value_becomes_config_error():
    with pytest.raises(ConfigError, match="thickness"):
        parse_config(PAPER_TEXT.replace("thickness_um = 0.6", "thickness_um = -0.6"))
