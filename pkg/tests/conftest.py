from dataclasses import replace

import pytest

from qtcmodel import (
    CauerLadder,
    DeviceModel,
    DistributedLine,
    FosterNetwork,
    FosterStage,
    load_config,
    paper_config_path,
)

# Values printed for the published device.
PAPER_R_TH = 56570.0
PAPER_C_TH = 11.6e-8
PAPER_X_OVER_L = 0.9674
PAPER_R_HEATER = 670.01
PAPER_S0 = 9.803e-5
PAPER_ALPHAS = dict(alpha_r=0.00105, alpha_s=0.00113, alpha_lambda=0.00177)


@pytest.fixture
def paper_line():
    return DistributedLine(PAPER_R_TH, PAPER_C_TH, PAPER_X_OVER_L)


@pytest.fixture
def printed_foster():
    """Two-stage Foster network exactly as printed (rounded values)."""
    return FosterNetwork([FosterStage(45800.0, 2.664e-3), FosterStage(5050.0, 0.296e-3)])


@pytest.fixture
def printed_ladder():
    return CauerLadder.from_values([29.2e-9, 44.6e-9], [18310.0, 32550.0])


@pytest.fixture
def printed_linear_model(printed_ladder):
    return DeviceModel(PAPER_R_HEATER, 12, PAPER_S0, printed_ladder)


@pytest.fixture(scope="session")
def paper_model():
    """Nonlinear model from the bundled calibrated config."""
    return load_config(paper_config_path()).device_model()


@pytest.fixture(scope="session")
def linear_model(paper_model):
    return paper_model.linearized()


@pytest.fixture(scope="session")
def nonlinear_no_coupling(paper_model):
    return replace(paper_model, coupling=0.0)
