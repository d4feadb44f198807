"""
Periodogram of a quasiperiodic attractor
========================================

At a=-1.755 the integer-order map settles on one of two six-fold
quasiperiodic attractors.  Its x component has a handful of sharp spectral
lines standing far above the floor.
"""

from pathlib import Path

import numpy as np

import fracsym as fs

spec = fs.dihedral_d3().replace(a=-1.755)
orbit = fs.iterate_io(spec, 0.05 + 0.1j, 2000 + 8192, discard=2000)

p = fs.psd(orbit.x[2000:])
out = Path(__file__).with_name("output")
out.mkdir(exist_ok=True)
p.to_csv(out / "q1_psd.csv")

top = np.argsort(p.power)[::-1][:6]
floor = np.median(p.power)
for k in sorted(top, key=lambda k: p.freqs[k]):
    print(f"f = {p.freqs[k]:.4f}   {10 * np.log10(p.power[k] / floor):5.1f} dB above median")

print(fs.classify(orbit))

# for comparison, the chaotic attractor at a=-1.804
print(fs.classify(fs.iterate_io(fs.dihedral_d3(), 0.05 + 0.1j, 2000 + 8192, discard=2000)))
