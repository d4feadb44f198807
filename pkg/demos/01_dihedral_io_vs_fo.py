"""
A D3 attractor and its fractional-order counterpart
===================================================

The cubic map with coefficients a=-1.804, b=1, d=0.5 commutes with the six
symmetries of the triangle, and its chaotic attractor inherits them.  The
same map iterated in Caputo fractional form with q=0.03 looks similar but
is no longer invariant under rotation by 2*pi/3.
"""

from pathlib import Path

import fracsym as fs
from fracsym.maps import format_polynomial
from fracsym.raster import PALETTE, scatter_image, write_png

out = Path(__file__).with_name("output")
out.mkdir(exist_ok=True)

spec = fs.dihedral_d3()
print(format_polynomial(fs.cartesian_terms(spec)[0]))

# integer order: 10^5 iterations, first 1000 dropped
io = fs.iterate_io(spec, 0.05 + 0.1j, 100_000, discard=1000)

# fractional order: the whole history enters every step, so this one takes a few seconds
fo = fs.iterate_fo(spec, 0.05 + 0.1j, 0.03, 100_000, discard=1000)

for name, orbit in (("io", io), ("fo", fo)):
    pts = orbit.post_transient()
    write_png(out / f"d3_{name}.png", scatter_image([(pts.real, pts.imag, PALETTE[3])], bounds=(-1.6, 1.6, -1.6, 1.6)))

# mean distance from the rotated cloud back to the cloud
for g in fs.elements(3):
    io_defect = fs.orbit_symmetry_defect(io, g).defect
    fo_defect = fs.orbit_symmetry_defect(fo, g).defect
    print(f"{g.label}: IO {io_defect:.4f}   FO {fo_defect:.4f}")

# the rotated image of a point on the IO attractor is on it too
b = fs.GroupElement(3, 1)(0.8703)
print("R1(0.8703, 0) =", b, "on attractor:", fs.point_membership_test(io, b))
