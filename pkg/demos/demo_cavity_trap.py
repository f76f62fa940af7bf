"""
Two semifluxons in a channel
============================

A long strip of height d with two semifluxons on its axis. Between them
the lowest states are forced into the odd transverse channel outside, which
is closed below 2 pi^2 / d^2, so they decay exponentially into the open
channel arms. Without flux the same states spread over the whole strip.
"""

import math

from abtopo.analysis import confinement_summary
from abtopo.dynamics import Region
from abtopo.lattice_gauge import FluxLine, Rectangle, build_grid, link_phases, snap_flux
from abtopo.spectral import assemble, lowest_eigenpairs

h, D, d, L = 1 / 16, 16.0, 1.0, 4.0
xl, xr = D / 2 - L / 2, D / 2 + L / 2
grid = build_grid(Rectangle(D, d), h)

# strings point at each other so the channel outside stays string free
fl = [snap_flux(grid, FluxLine((xl, d / 2), 0.5, 0.0)),
      snap_flux(grid, FluxLine((xr, d / 2), 0.5, math.pi))]
links = link_phases(grid, fl)
xl, xr = fl[0].position[0], fl[1].position[0]
threshold = 2 * math.pi**2 / d**2

spec = lowest_eigenpairs(assemble(grid, links), 12, tol=1e-12)
rows = confinement_summary(spec, Region(xl, xr), threshold, inside_cut=0.9,
                           tail_window=(xr + 0.5, xr + 2.5), links=links, tail_parity="odd")
# the outer arms carry their own standing waves too; they show up as "exterior"
print(f"threshold {threshold:.3f}")
for r in rows:
    print(f"E={r['energy']:8.4f}  inside={r['inside_probability']:.3f}  "
          f"kappa={r['kappa']:.3f} (predicted {r['kappa_predicted']:.3f})  {r['classification']}")

# control: no flux, same region
free = lowest_eigenpairs(assemble(grid, link_phases(grid, [])), 12, tol=1e-12)
ctrl = confinement_summary(free, Region(xl, xr), threshold)
print("empty strip, inside probabilities:", [round(r["inside_probability"], 3) for r in ctrl])
print(f"L/D = {L / D:.3f}")
