# Quadrics, the twist sigma and the potential u z.

from fractions import Fraction

from cypot.catalog import example
from cypot.quadric import gamma_complex_check, nakayama_check, ore_check, quadric_algebra, sigma_of

U = [[0, 1], [-2, 0]]       # u = x1 x2 - 2 x2 x1
q = quadric_algebra(U, 5)
print("Gamma dims", q.dims, "series", q.target)
print("sigma matrix", [[str(a) for a in r] for r in sigma_of(U).S])

nk = nakayama_check(U, 4)
print("U + U^T S = 0:", nk.x_vanishes, " S^T U S = U:", nk.sigma_preserves_u)
print("ker mu = im d2* by degree:", nk.kernel_equals_image)

gc = gamma_complex_check(U, 5)
print("Koszul complex of Gamma exact:", gc.koszul_exact)

w, spec = example("quadric_uz", U)
ore = ore_check(w, 2, 5)
print("A(uz) dims", ore.hilbert, "prefix sums of Gamma", ore.prefix_sums)
print("z x_i = sigma(x_i) z holds:", ore.ore_relations_hold, " verdict", ore.criterion.verdict)

# the Fano plane gives a cubic potential in 7 variables with z = x7
w, spec = example("steiner_fano")
ore = ore_check(w, 6, 3)
print("Fano:", ore.hilbert, "=", ore.prefix_sums, ore.criterion.verdict)
