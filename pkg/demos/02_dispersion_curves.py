"""Tabulate the drift-wave dispersion relation for three healing lengths.

Frequencies are negative throughout: the waves propagate against the
condensate rotation.  The zero-pressure branch peaks at |omega| = v_r/2 at
k_theta = 1/r0; quantum pressure (xi > 0) deepens and shifts the branch.
Writes dispersion.csv next to this script's working directory.
"""

import numpy as np

from rossbybec import ModelParams, WaveVector, dispersion_scan, group_velocity, omega
from rossbybec.csvio import write_csv
from rossbybec.dispersion import SCAN_COLUMNS

v_r = 0.1
k_thetas = np.linspace(0.0, 5.0, 51)

print(f"v_r = {v_r} c_s; omega in c_s/r0 units\n")
print("k_theta     xi=0        xi=0.7      xi=1.3")
for kt in np.linspace(0.0, 3.0, 13):
    row = [omega(WaveVector(0.0, kt), ModelParams(v_r=v_r, xi=xi))
           for xi in (0.0, 0.7, 1.3)]
    print(f"{kt:7.2f}  {row[0]:+10.5f} {row[1]:+10.5f} {row[2]:+10.5f}")

rows = []
for xi in (0.0, 0.7, 1.3):
    m = ModelParams(v_r=v_r, xi=xi)
    for r in dispersion_scan([WaveVector(0.0, kt) for kt in k_thetas], m):
        rows.append(r + (xi,))
write_csv("dispersion.csv", SCAN_COLUMNS + ("xi",), rows)
print(f"\nwrote dispersion.csv ({len(rows)} rows)")

m0 = ModelParams(v_r=v_r, xi=0.0)
cg = group_velocity(WaveVector(0.0, 0.01), m0)[1]
print(f"zonal-flow limit: d(omega)/dk_theta -> {cg:+.5f} ~ -v_r as k -> 0")
