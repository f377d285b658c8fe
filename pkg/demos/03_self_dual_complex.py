# The complex C_w, its dual, and the comparison maps between them.

from cypot.catalog import example
from cypot.complexes import (PotentialComplex, complex_matrices, duality_maps, exactness_report,
                             hochschild_dims)
from cypot.grading import graded_quotient
from cypot.ncpoly import NcPoly

w, spec = example("sklyanin", 1, 1, 1)
gq = graded_quotient(w, 3, 6)
pc = PotentialComplex(w, 3)

# matrix shapes in degree 4: (AcA)_4 -> (ARA)_4 -> (AVA)_4 -> (AkA)_4
dc = complex_matrices(w, gq, 4, pc)
print("space dims in degree 4:", dc.dims)
print("M3", dc.M3.shape, "M2", dc.M2.shape, "M1", dc.M1.shape)

ex = exactness_report(w, gq, 6, pc)
print("homology table (rows = degree, columns = position):")
for d, row in enumerate(ex.table()):
    print("  ", d, row)

print("all squares commute:", all(duality_maps(w, gq, d, pc).all_commute for d in range(7)))

hh = hochschild_dims(w, gq, 6, pc)
print("HH_0 dims:", [hh.homology[(0, d)] for d in range(7)])
print("shift duality by N+1:", hh.shifted_duality_holds())

# x1^3 in two variables: dim R < n, so only the central square survives
x = NcPoly.gen(0)
gq2 = graded_quotient(x ** 3, 2, 4)
pc2 = PotentialComplex(x ** 3, 2)
for d in range(5):
    dm = duality_maps(x ** 3, gq2, d, pc2)
    print("degree %d: left %-5s central %-5s right %s" % (d, dm.left, dm.central, dm.right))
