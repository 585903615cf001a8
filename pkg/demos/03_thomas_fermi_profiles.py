"""Thomas-Fermi equilibria across the disk/annulus transition.

In the overcritical trap (Omega = 2.4 omega_perp, beta = 1.6) the sign of
the chemical potential decides the topology: mu > 0 keeps a filled disk,
mu = 0 is the transition, mu < 0 opens a hole of radius R_-.
"""

import numpy as np

from rossbybec import log_density_gradient, tf_profile, tf_radii
from rossbybec.equilibrium import peak_density

for mu in (0.2, 0.0, -0.2):
    eq = tf_radii(mu, 2.4, 1.6)
    kind = "annulus" if eq.is_annulus else "disk"
    inner = f"R- = {eq.r_inner:.4f}" if eq.is_annulus else "no hole"
    print(f"mu = {mu:+.1f}: {kind:7s}  R+ = {eq.r_outer:.4f} a_ho, {inner}, "
          f"max n/n_inf = {peak_density(eq):.4f}")

print("\nradial profiles, n/n_inf on [0, R+]:")
eq_disk = tf_radii(0.2, 2.4, 1.6)
eq_ann = tf_radii(-0.2, 2.4, 1.6)
for r in np.linspace(0.0, 1.7, 18):
    nd = tf_profile(r, eq_disk)
    na = tf_profile(r, eq_ann)
    print(f"  r = {r:5.2f}   disk {nd:6.3f} {'*' * int(8 * nd):10s}"
          f"   annulus {na:6.3f} {'*' * int(8 * na)}")

print("\nlog-density slope feeding the drift speed (disk case):")
for r in (0.3, 0.8, 1.3):
    g = log_density_gradient(r, eq_disk)
    print(f"  r = {r:.1f}: d(ln n)/dr = {g:+.4f} /a_ho "
          f"-> v_R/c_s = {-0.72 * g:+.4f} at Ro = 0.72")
