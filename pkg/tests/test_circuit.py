import math
from dataclasses import replace

import numpy as np
import pytest
from hypothesis import given, strategies as st

from qtcmodel import (
    CauerLadder,
    DeviceModel,
    DriveSpec,
    InvalidInputError,
    ModelRangeError,
    cauer_impedance,
    dc_operating_point,
    heater_resistance,
    input_power,
    output_voltage,
    step_response,
    transient,
)
from qtcmodel.analysis import harmonic_report, simulate_spectrum
from qtcmodel.circuit import max_time_step, steady_heat_outflow


def test_heater_resistance(printed_linear_model):
    m = printed_linear_model
    assert heater_resistance(m, 37.0) == m.r_heater0
    hot = replace(m, alpha_r=0.00105, ambient_offset=80.0)
    assert heater_resistance(hot, 0.0) == pytest.approx(726.3, rel=1e-3)
    m2 = replace(m, r_heater0=100.0, alpha_r=0.001)
    assert heater_resistance(m2, 10.0) == pytest.approx(101.0)


def test_heater_range_error(printed_linear_model):
    with pytest.raises(ModelRangeError):
        heater_resistance(replace(printed_linear_model, alpha_r=0.01), -200.0)


def test_input_power(printed_linear_model):
    m = printed_linear_model
    assert input_power(m, 0.0, 0.0) == 0.0
    assert input_power(m, 0.5, 0.0) == pytest.approx(0.25 / 670.01)
    assert input_power(m, 0.5, 0.0) == pytest.approx(3.7313e-4, rel=1e-4)
    assert input_power(m, -0.7, 3.0) == input_power(m, 0.7, 3.0)


def test_output_voltage(printed_linear_model):
    m = printed_linear_model
    assert output_voltage(m, 0.0, 0.0) == 0.0
    # 12 * 9.803e-5 * 18.978 = 22.325e-3
    assert output_voltage(m, 18.978, 0.3) == pytest.approx(22.33e-3, rel=1e-3)
    coupled = replace(m, coupling=0.01)
    assert output_voltage(coupled, 0.0, 1.0) == pytest.approx(0.01)


def test_dc_point_linear_closed_form(printed_linear_model):
    m = printed_linear_model
    assert dc_operating_point(m, 0.0) == (0.0, 0.0)
    u_h, u_out = dc_operating_point(m, 0.5)
    assert u_h == pytest.approx(0.25 / 670.01 * 50860, rel=1e-12)
    assert u_h == pytest.approx(18.98, abs=0.01)
    assert u_out == pytest.approx(22.33e-3, rel=1e-3)
    assert u_out / 0.25 == pytest.approx(0.0893, rel=1e-3)


def test_dc_point_nonlinear_is_fixed_point(paper_model):
    u_h, u_out = dc_operating_point(paper_model, 0.9)
    r_sum = paper_model.ladder.dc_resistance
    scale = 1 - paper_model.alpha_lambda * u_h
    assert u_h == pytest.approx(input_power(paper_model, 0.9, u_h) * r_sum / scale, rel=1e-13)
    assert u_out == pytest.approx(output_voltage(paper_model, u_h, 0.9), rel=1e-14)


def test_dc_point_range_error(paper_model):
    with pytest.raises(ModelRangeError):
        dc_operating_point(replace(paper_model, alpha_lambda=0.05), 1.25)


@given(st.floats(0.01, 1.5))
def test_linear_quadratic_law(u):
    ladder = CauerLadder.from_values([29.2e-9, 44.6e-9], [18310.0, 32550.0])
    m = DeviceModel(670.01, 12, 9.803e-5, ladder)
    assert dc_operating_point(m, u)[1] / u**2 == pytest.approx(m.conversion_constant, rel=1e-12)


@given(st.floats(0.01, 1.3), st.floats(0.0, 0.05))
def test_even_symmetry_and_coupling(u, kappa):
    ladder = CauerLadder.from_values([29.2e-9, 44.6e-9], [18310.0, 32550.0])
    m = DeviceModel(670.01, 12, 9.803e-5, ladder, alpha_r=0.00105, alpha_s=0.00113,
                    alpha_lambda=0.00177)
    assert dc_operating_point(m, -u)[1] == pytest.approx(dc_operating_point(m, u)[1], rel=1e-12)
    c = replace(m, coupling=kappa)
    diff = dc_operating_point(c, -u)[1] - dc_operating_point(c, u)[1]
    assert diff == pytest.approx(-2 * kappa * u, abs=1e-12)


def test_zero_drive_gives_zero(paper_model):
    res = transient(paper_model, DriveSpec("sine", 0.0, 70.0), 1e-5, 0.01)
    assert np.all(res.output.samples == 0)
    assert np.all(res.hot_point.samples == 0)


def test_step_bound_enforced(paper_model):
    with pytest.raises(InvalidInputError):
        transient(paper_model, DriveSpec("dc", 0.5), max_time_step(paper_model) * 1.01, 0.01)
    assert max_time_step(paper_model) == pytest.approx(0.2955e-3 / 20, rel=0.01)


def test_dc_transient_settles_after_ten_tau(paper_model):
    t1 = paper_model.ladder.time_constants()[0]
    dt = max_time_step(paper_model)
    res = transient(paper_model, DriveSpec("dc", 0.5), dt, 10 * t1)
    u_h, _ = dc_operating_point(paper_model, 0.5)
    assert res.hot_point.samples[-1] == pytest.approx(u_h, rel=1e-3)


def test_step_response_final_value_and_tail(printed_ladder):
    m = DeviceModel(670.01, 12, 9.803e-5, printed_ladder)
    dt = max_time_step(m)
    assert np.all(step_response(m, 0.0, dt, 0.01).samples == 0)
    wave = step_response(m, 1e-3, dt, 0.06)
    assert wave.samples[-1] == pytest.approx(50.86, rel=1e-3)
    # log-slope of the approach to the final value over 5..15 ms
    t = wave.time
    sel = (t > 5e-3) & (t < 15e-3)
    slope = np.polyfit(t[sel], np.log(1e-3 * 50860 - wave.samples[sel]), 1)[0]
    assert -1 / slope == pytest.approx(2.664e-3, rel=0.05)


def test_energy_balance_at_steady_state(linear_model):
    t1 = linear_model.ladder.time_constants()[0]
    res = transient(linear_model, DriveSpec("dc", 0.4), max_time_step(linear_model), 30 * t1)
    p = input_power(linear_model, 0.4, 0.0)
    assert steady_heat_outflow(linear_model, res.final_state) == pytest.approx(p, rel=1e-3)


def test_rk4_order(printed_ladder):
    m = DeviceModel(670.01, 12, 9.803e-5, printed_ladder, alpha_r=0.00105, alpha_lambda=0.00177)
    dt = max_time_step(m)
    t_end = 200 * dt  # exact multiple of every step size used
    finals = [transient(m, DriveSpec("dc", 1.0), h, t_end).hot_point.samples[-1]
              for h in (dt, dt / 2, dt / 4)]
    ratio = abs(finals[0] - finals[1]) / abs(finals[1] - finals[2])
    assert 12 <= ratio <= 20


def test_rk4_steady_state_insensitive_to_step(paper_model):
    t1 = paper_model.ladder.time_constants()[0]
    dt = max_time_step(paper_model)
    a = transient(paper_model, DriveSpec("dc", 0.6), dt, 20 * t1).hot_point.samples[-1]
    b = transient(paper_model, DriveSpec("dc", 0.6), dt / 2, 20 * t1).hot_point.samples[-1]
    assert abs(a - b) / a < 1e-8


def test_frequency_doubling_matches_analytic(linear_model):
    f, amp = 70.0, 1.25
    spec = simulate_spectrum(linear_model, amp, f, "hamming", signal="hot_point")
    second = harmonic_report(spec, f, [2]).magnitude(2)
    p_hat = amp**2 / (2 * linear_model.r_heater0)
    analytic = p_hat * abs(cauer_impedance(linear_model.ladder, 2j * math.pi * 2 * f))
    assert second == pytest.approx(analytic, rel=0.01)
    mean = harmonic_report(spec, f, [2]).magnitude(0)
    assert mean == pytest.approx(p_hat * linear_model.ladder.dc_resistance, rel=1e-3)


def test_drive_validation():
    with pytest.raises(InvalidInputError):
        DriveSpec("sine", 1.0, 0.0)
    with pytest.raises(InvalidInputError):
        DriveSpec("square", 1.0, 1.0)
    assert DriveSpec("dc", 0.3, offset=0.1)(5.0) == pytest.approx(0.4)
