"""
Strings are a gauge choice
==========================

Two semifluxons in a box. Moving their strings changes the link signs but
not the spectrum or the probability densities; only the enclosed flux
matters, and a full flux quantum is invisible.
"""

import math

import numpy as np

from abtopo.lattice_gauge import FluxLine, Rectangle, build_grid, link_phases, plaquette_flux, rotate_string, snap_flux
from abtopo.spectral import assemble, lowest_eigenpairs

grid = build_grid(Rectangle(3, 2), 1 / 24)
a = snap_flux(grid, FluxLine((1.0, 1.0), 0.5, 0.0))
b = snap_flux(grid, FluxLine((2.0, 1.0), 0.5, math.pi))

# the holonomy of the plaquette holding a solenoid is -1 whatever the strings do
links = link_phases(grid, [a, b])
print("plaquette holonomy at a:", plaquette_flux(links, grid.locate_plaquette(*a.position)))

rng = np.random.default_rng(1)
base = lowest_eigenpairs(assemble(grid, links), 6, tol=1e-12)
for trial in range(3):
    moved = [rotate_string(f, rng.uniform(0, 2 * math.pi), grid) for f in (a, b)]
    s = lowest_eigenpairs(assemble(grid, link_phases(grid, moved)), 6, tol=1e-12)
    rel = np.max(np.abs(s.eigenvalues - base.eigenvalues) / base.eigenvalues)
    print(f"random strings #{trial}: max relative eigenvalue change {rel:.1e}")

# f and f + 1 give identical link phases
for f in (0.3, 1.3, -0.7):
    s = lowest_eigenpairs(assemble(grid, link_phases(grid, [snap_flux(grid, FluxLine((1.5, 1.0), f))])), 2)
    print(f"flux {f:+.1f}: E0 = {s.eigenvalues[0]:.10f}")
