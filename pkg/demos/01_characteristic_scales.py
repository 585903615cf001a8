"""Derive the characteristic scales of a rapidly rotating condensate.

A transverse trap at 65 Hz with a 1.7 um oscillator length and a sound speed
of 1 mm/s puts the Rossby radius near 1.2 um, i.e. below the cloud size:
rotation dominates, and the gas behaves like a low-pressure atmosphere.
"""

import math

import numpy as np

from rossbybec import PhysicalParams, derive_scales, effective_potential

omega_perp = 2 * math.pi * 65.0
p = PhysicalParams.from_trap_scales(
    omega_perp=omega_perp, a_ho=1.7e-6, sound_speed=1e-3, Omega=omega_perp)
s = derive_scales(p)

print("input trap:   omega_perp = 2*pi*65 rad/s, Omega = omega_perp")
print(f"a_ho   = {s.a_ho * 1e6:8.4f} um   (oscillator length)")
print(f"c_s    = {s.c_s * 1e3:8.4f} mm/s (sound speed)")
print(f"xi     = {s.xi * 1e6:8.4f} um   (healing length)")
print(f"r0     = {s.r0 * 1e6:8.4f} um   (Rossby radius c_s/2Omega)")
print(f"Ro     = {s.rossby:8.4f}      (Rossby number r0/a_ho)")
print(f"xi/r0  = {s.xi_over_r0:8.4f}      (quantum-pressure parameter)")

print("\neffective trap potential at Omega/omega_perp = 2.4, beta = 1.6")
p_over = PhysicalParams(omega_perp=1.0, Omega=2.4, beta=1.6,
                        g_int=p.g_int, mass=p.mass)
for r in np.linspace(0.0, 2.0, 9):
    v = effective_potential(r, p_over)
    bar = "#" * max(0, int(20 + 8 * v))
    print(f"  r = {r:4.2f} a_ho   V = {v:+8.4f} hbar*omega_perp  {bar}")
print("the minimum away from r = 0 is what carves out the annulus")
