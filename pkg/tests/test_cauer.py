import numpy as np
import pytest
from hypothesis import assume, given, settings, strategies as st

from qtcmodel import (
    CauerLadder,
    FosterNetwork,
    FosterStage,
    InvalidInputError,
    SynthesisError,
    cauer_impedance,
    foster_impedance,
    foster_network,
    foster_to_cauer,
    rational_from_foster,
)


def test_rational_printed_two_stage(printed_foster):
    # (R1 (1 + s t2) + R2 (1 + s t1)) / ((1 + s t1)(1 + s t2)) with the printed values:
    # num = [45800 + 5050, 45800*0.296e-3 + 5050*2.664e-3] = [50850, 27.0100]
    # den = [1, 2.664e-3 + 0.296e-3, 2.664e-3*0.296e-3] = [1, 2.960e-3, 7.88544e-7]
    z = rational_from_foster(printed_foster)
    assert z.numerator == pytest.approx([50850, 27.01], rel=1e-3)
    assert z.denominator == pytest.approx([1, 2.960e-3, 7.885e-7], rel=1e-3)


def test_rational_single_stage():
    z = rational_from_foster(FosterNetwork([FosterStage(123.0, 4e-3)]))
    assert z.numerator == (123.0,)
    assert z.denominator == (1.0, 4e-3)


def test_rational_matches_direct_evaluation():
    rng = np.random.default_rng(3)
    net = FosterNetwork([FosterStage(r, t) for r, t in zip(rng.uniform(1, 1e3, 4), [1e-1, 1e-2, 3e-3, 1e-4])])
    z = rational_from_foster(net)
    for s in rng.normal(size=20) * 300 + 1j * rng.normal(size=20) * 300:
        assert z(s) == pytest.approx(foster_impedance(net, s), rel=1e-9)


def test_duplicate_time_constants_rejected():
    net = FosterNetwork([FosterStage(1.0, 1e-3), FosterStage(2.0, 1e-3)])
    with pytest.raises(InvalidInputError):
        rational_from_foster(net)


def test_printed_foster_to_cauer(printed_foster):
    ladder = foster_to_cauer(printed_foster)
    (c1, r1), (c2, r2) = [(s.shunt_capacitance, s.series_resistance) for s in ladder.stages]
    assert r1 == pytest.approx(18310, rel=0.02)
    assert c1 == pytest.approx(29.2e-9, rel=0.02)
    assert r2 == pytest.approx(32550, rel=0.02)
    assert c2 == pytest.approx(44.6e-9, rel=0.02)
    # hand derivation from the same inputs
    assert c1 == pytest.approx(29.19e-9, rel=1e-3)
    assert r1 == pytest.approx(18303, rel=1e-3)
    assert c2 == pytest.approx(45.3e-9, rel=2e-3)
    assert r2 == pytest.approx(32547, rel=1e-3)


def test_single_stage_is_parallel_rc():
    ladder = foster_to_cauer(FosterNetwork([FosterStage(200.0, 2e-3)]))
    assert len(ladder) == 1
    assert ladder.stages[0].shunt_capacitance == pytest.approx(1e-5)
    assert ladder.stages[0].series_resistance == pytest.approx(200.0)


def test_negative_stage_named(paper_line):
    net = FosterNetwork([FosterStage(100.0, 1e-2), FosterStage(-5.0, 1e-3)])
    with pytest.raises(SynthesisError, match="stage 2"):
        foster_to_cauer(net)
    # x/L = 0.5 makes the second term of the series negative
    from qtcmodel import DistributedLine

    with pytest.raises(SynthesisError):
        foster_to_cauer(foster_network(DistributedLine(1e3, 1e-6, 0.5), 3))


def test_printed_ladder_dc(printed_ladder):
    assert cauer_impedance(printed_ladder, 0) == pytest.approx(50860)
    assert cauer_impedance(printed_ladder, 0) == pytest.approx(50850, rel=1e-3)


def test_ladder_shorts_at_high_frequency():
    ladder = CauerLadder.from_values([1e-6], [1e3])
    assert abs(cauer_impedance(ladder, 1e12j)) < 1e-3


def test_ladder_time_constants_match_foster(printed_foster):
    ladder = foster_to_cauer(printed_foster)
    assert ladder.time_constants() == pytest.approx([2.664e-3, 0.296e-3], rel=1e-9)


def test_ladder_recursion_against_rational():
    # brute-force nodal solve of the ladder as an independent oracle
    rng = np.random.default_rng(11)
    for _ in range(10):
        n = rng.integers(1, 5)
        c = rng.uniform(1e-9, 1e-6, n)
        r = rng.uniform(10, 1e4, n)
        ladder = CauerLadder.from_values(c, r)
        s = complex(rng.normal() * 1e3, abs(rng.normal()) * 1e4)
        y = np.zeros((n, n), complex)
        for k in range(n):
            y[k, k] += s * c[k] + 1 / r[k]
            if k + 1 < n:
                y[k + 1, k + 1] += 1 / r[k]
                y[k, k + 1] -= 1 / r[k]
                y[k + 1, k] -= 1 / r[k]
        rhs = np.zeros(n, complex)
        rhs[0] = 1
        v = np.linalg.solve(y, rhs)
        assert cauer_impedance(ladder, s) == pytest.approx(v[0], rel=1e-10)


@st.composite
def positive_foster(draw, n_stages=3):
    log_taus = draw(st.lists(st.floats(-6, 0), min_size=n_stages, max_size=n_stages))
    taus = sorted({10**x for x in log_taus}, reverse=True)
    assume(len(taus) == n_stages)
    assume(all(a / b > 1.001 for a, b in zip(taus, taus[1:])))
    rs = draw(st.lists(st.floats(1.0, 1e5), min_size=n_stages, max_size=n_stages))
    return FosterNetwork([FosterStage(r, t) for r, t in zip(rs, taus)])


def max_rel_error(net, ladder, points=50):
    taus = [st.time_constant for st in net.stages]
    w = np.logspace(np.log10(1 / max(taus) / 100), np.log10(100 / min(taus)), points)
    err = 0.0
    for s in 1j * w:
        ref = foster_impedance(net, s)
        err = max(err, abs(cauer_impedance(ladder, s) - ref) / abs(ref))
    return err


@settings(max_examples=100, deadline=None)
@given(positive_foster())
def test_impedance_equivalence_three_stage(net):
    ladder = foster_to_cauer(net)
    assert len(ladder) == 3
    assert all(s.shunt_capacitance > 0 and s.series_resistance > 0 for s in ladder.stages)
    assert ladder.dc_resistance == pytest.approx(net.dc_resistance, rel=1e-9)
    assert max_rel_error(net, ladder) < 1e-6


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 6).flatmap(lambda n: positive_foster(n)))
def test_equivalence_up_to_six_stages(net):
    ladder = foster_to_cauer(net)
    assert len(ladder) == len(net)
    assert ladder.dc_resistance == pytest.approx(net.dc_resistance, rel=1e-9)
    assert max_rel_error(net, ladder) < 1e-6
