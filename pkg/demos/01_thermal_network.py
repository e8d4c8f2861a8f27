"""
From layer stack to Cauer ladder
================================

Effective thermal parameters of the calibrated cantilever, the poles of its
distributed RC line, the two-stage Foster expansion and the Cauer ladder the
simulator runs on.
"""

import numpy as np

from qtcmodel import (
    cauer_impedance,
    effective_lambda_tcc,
    foster_impedance,
    foster_network,
    foster_to_cauer,
    impedance,
    load_config,
    paper_config_path,
    pole,
    thermal_capacitance,
    thermal_resistance,
)

cfg = load_config(paper_config_path())
stack = cfg.stack
print(f"R_th = {thermal_resistance(stack):.0f} K/W")
print(f"C_th = {thermal_capacitance(stack):.4g} J/K")
print(f"alpha_lambda = {effective_lambda_tcc(stack):.5f} 1/K")

# %%
# Poles of the line. Only the first two matter; the third is 25x faster.
line = cfg.line()
for n in (1, 2, 3):
    p, tau = pole(line, n)
    print(f"pole {n}: {p:8.1f} 1/s  tau = {tau * 1e3:.4f} ms")

# %%
# Two-stage Foster network at the hot point, then the Cauer ladder.
foster = foster_network(line, 2)
for n, st in enumerate(foster.stages, 1):
    print(f"R_F{n} = {st.resistance:7.0f} K/W  C_F{n} = {st.capacitance * 1e9:.1f} nJ/K")

ladder = foster_to_cauer(foster)
for k, st in enumerate(ladder.stages, 1):
    print(f"R_C{k} = {st.series_resistance:7.0f} K/W  C_C{k} = {st.shunt_capacitance * 1e9:.1f} nJ/K")

# %%
# How well do two and ten Foster stages track the distributed line?
ten = foster_network(line, 10)
print("\n  f [Hz]   |Z_line|   2-stage err   10-stage err")
for f in np.logspace(0, 3, 7):
    s = 2j * np.pi * f
    z = impedance(line, s)
    e2 = abs(cauer_impedance(ladder, s) - z) / abs(z)
    e10 = abs(foster_impedance(ten, s) - z) / abs(z)
    print(f"{f:8.1f} {abs(z):10.0f} {e2:12.2%} {e10:13.3%}")
