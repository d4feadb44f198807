"""
Losing the reflections: a C4 attractor
======================================

Adding the term c*i*z to a D4 map keeps the four rotations but not the four
reflections.  We check it on the map and then on the attractor.
"""

from pathlib import Path

import numpy as np

import fracsym as fs
from fracsym.raster import PALETTE, scatter_image, write_png

spec = fs.cyclic_c4()

for rep in fs.equivariance_suite(spec):
    print(f"{rep.element.label}: max |f(gz) - g f(z)| = {rep.defect:.2e}")

orbit = fs.iterate_io(spec, 0.05 + 0.1j, 100_000, discard=1000)
pts = orbit.post_transient()

# a point of the attractor, its quarter turn and its mirror image
a = -0.085522 - 0.9266j
for g in (fs.GroupElement(4, 0), fs.GroupElement(4, 1), fs.GroupElement(4, 0, True)):
    p = g(a)
    print(f"{g.label}(A) = {p:.4f}  nearest orbit point {np.min(np.abs(pts - p)):.4f}")

out = Path(__file__).with_name("output")
out.mkdir(exist_ok=True)
mirror = fs.GroupElement(4, 0, True)(pts)
img = scatter_image([(mirror.real, mirror.imag, PALETTE[0]), (pts.real, pts.imag, PALETTE[3])])
write_png(out / "c4_and_mirror.png", img)
