"""
Square-law DC transfer and the conversion constant
==================================================

Sweep the heater voltage up to 0.6 V, fit u_out = K * u_in**e, and compare the
simulated and measured calibrations.
"""

import numpy as np

from qtcmodel import dc_sweep, fit_conversion_constant, load_config, paper_config_path

u = np.linspace(0.1, 0.6, 6)
for variant in ("paper_device_linear", "paper_device_kmeas", "paper_device"):
    model = load_config(paper_config_path(variant)).device_model()
    rows = dc_sweep(model, u)
    fit = fit_conversion_constant([(a, c) for a, _, c in rows])
    print(f"\n{variant}: K = {fit.k:.4f} 1/V, exponent = {fit.exponent:.4f}")
    for u_in, u_h, u_out in rows:
        print(f"  {u_in:.1f} V  U_H = {u_h:6.2f} K  u_out = {u_out * 1e3:7.3f} mV")

# %%
# The full model includes the input feed-through, which adds a term linear in
# u_in; at small inputs it dominates u_out / u_in**2, hence the lower exponent.
