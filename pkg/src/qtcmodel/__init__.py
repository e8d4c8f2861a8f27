"""Compact electro-thermal models of Seebeck-driven quadratic transfer elements."""

__version__ = "0.1.0"

from .errors import *  # noqa: F401,F403
from .layerstack import (  # noqa: E402
    Layer,
    LayerStack,
    effective_conductivity,
    effective_lambda_tcc,
    thermal_capacitance,
    thermal_resistance,
)
from .rcline import (  # noqa: E402
    DistributedLine,
    FosterNetwork,
    FosterStage,
    foster_impedance,
    foster_network,
    foster_stage,
    impedance,
    pole,
)
from .cauer import (  # noqa: E402
    CauerLadder,
    CauerStage,
    RationalImpedance,
    cauer_impedance,
    foster_to_cauer,
    rational_from_foster,
)
from .waveform import Waveform  # noqa: E402
from .circuit import (  # noqa: E402
    DeviceModel,
    DriveSpec,
    ThermalState,
    dc_operating_point,
    heater_resistance,
    input_power,
    output_voltage,
    step_response,
    transient,
)
from .analysis import (  # noqa: E402
    HarmonicReport,
    Spectrum,
    apply_window,
    calibrate_coupling,
    dc_sweep,
    fit_conversion_constant,
    harmonic_report,
    heater_tcc_two_point,
    seebeck_tcc_from_balance,
    simulate_spectrum,
    spectrum,
    temperature_sweep,
)
from .netlist import emit_subcircuit  # noqa: E402
from .config import ProjectConfig, load_config, paper_config_path  # noqa: E402
