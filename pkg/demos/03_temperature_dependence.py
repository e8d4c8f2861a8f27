"""
Temperature coefficients and the sign of dK/dT
==============================================

Extract the heater coefficient from two resistance readings, close the
coefficient balance for the Seebeck drift, and confirm with the simulator
that the conversion constant falls as the substrate warms.
"""

from dataclasses import replace

from qtcmodel import (
    heater_tcc_two_point,
    load_config,
    paper_config_path,
    seebeck_tcc_from_balance,
    temperature_sweep,
)

alpha_r = heater_tcc_two_point(670.01, 10, 726.18, 90)
print(f"alpha_R = {alpha_r:.5f} 1/K")

model = replace(load_config(paper_config_path()).device_model(), coupling=0.0)
alpha_k = model.alpha_lambda - model.alpha_r - model.alpha_s
print(f"alpha_K = {alpha_k:+.5f} 1/K")
print(f"alpha_S recovered = {seebeck_tcc_from_balance(alpha_k, model.alpha_lambda, model.alpha_r):.5f} 1/K")

# %%
# Small-signal sweep of the substrate temperature (0.1 V keeps U_H below 1 K).
rows = temperature_sweep(model, range(-20, 61, 10), 0.1)
k0 = dict(rows)[0]
for offset, k in rows:
    print(f"T - T0 = {offset:+5.0f} K   K = {k:.5f} 1/V   ({(k / k0 - 1) * 100:+.2f} %)")
