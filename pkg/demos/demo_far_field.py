"""
Transverse momentum after a line of slits
=========================================

The far-field tool on its own: a packet is built directly with the two
transverse momentum combs a periodic line produces with and without
semifluxons, and the gauge-fixed spectrum recovers the orders.

Real diffraction runs live in the ``grating`` experiment
(``abtopo run configs/grating.yaml``); they take several minutes.
"""

import math

import numpy as np

from abtopo.analysis import far_field_spectrum, peak_angles
from abtopo.dynamics import Region, WaveField
from abtopo.lattice_gauge import FluxLine, Rectangle, build_grid, link_phases, snap_flux

Lp, lam = 8.0, 2.0
p = 2 * math.pi / lam
grid = build_grid(Rectangle(16, 128, (0, -64)), 0.25)
x, y = grid.node_coordinates()
env = np.exp(-((x - 8) ** 2) / 8 - y**2 / (2 * 32**2))

for shift, name in ((0.0, "integer orders"), (0.5, "half orders")):
    ky = [2 * math.pi * (n + shift) / Lp for n in range(-2, 2 + (shift == 0))]
    psi = WaveField(grid, env * sum(np.exp(1j * k * y) for k in ky)).normalize()
    spec = far_field_spectrum(psi, link_phases(grid, []), Region(2, 14), metadata={"period": Lp})
    peaks = peak_angles(spec, p)
    print(name, [o for o, _ in peaks], "sin(theta):", [round(s, 4) for _, s in peaks])
    print(f"  Parseval: {abs(spec.total - spec.metadata['probability']):.1e}")

# a string through the region does not change the spectrum once the gauge is fixed
f = snap_flux(grid, FluxLine((1.0, 0.0), 0.5, 0.0))
flipped = WaveField(grid, np.where((x > f.position[0]) & (y > f.position[1]), -1.0, 1.0) * psi.values)
a = far_field_spectrum(psi, link_phases(grid, []), Region(2, 14))
b = far_field_spectrum(flipped, link_phases(grid, [f]), Region(2, 14))
print(f"string through the window, max intensity change: {np.max(np.abs(a.intensity - b.intensity)):.1e}")
