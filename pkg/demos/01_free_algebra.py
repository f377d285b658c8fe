# Derivatives of noncommutative polynomials and the identities they satisfy.

from cypot.ncpoly import (GenSet, NcPoly, cyclic_derivative, cyclic_sum, flip, hessian,
                          partial_derivative)

g = GenSet(["x", "y", "z"])
x, y, z = (NcPoly.gen(i) for i in range(3))

w = x * y * z - y * x * z  # the polynomial-algebra potential
print("w       =", w.format(g))
print("c(w)    =", cyclic_sum(w).format(g))

# cyclic derivatives are the relations of A(w): here the commutators
for i, name in enumerate(g.names):
    print("d_%s(w)  = %s" % (name, cyclic_derivative(w, i).format(g)))

# the ordinary derivative splits each occurrence as u (x) v
print("d(xyx)/dx =", partial_derivative(x * y * x, 0).format(g))

# Euler relation: sum_i d_i(w) x_i recovers the cyclic sum
euler = sum((cyclic_derivative(w, i) * NcPoly.gen(i) for i in range(3)), NcPoly.zero())
print("Euler relation holds:", euler == cyclic_sum(w))

# Hessian symmetry: flipping entry (i, j) gives entry (j, i)
H = hessian(w, 3)
print("H[x][y] =", H[0][1].format(g), "  H[y][x] =", H[1][0].format(g))
print("flip symmetric:", all(flip(H[i][j]) == H[j][i] for i in range(3) for j in range(3)))
