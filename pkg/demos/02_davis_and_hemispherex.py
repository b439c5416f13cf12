# The cube-of-a-flag-complex construction and hemispherexes.
#
# For a finite flag complex K on S vertices, Y(K) is the subcomplex of
# the |S|-cube spanned by the faces whose direction sets are simplices of
# K; every vertex link of Y(K) is isomorphic to K.  Halving all
# coordinates gives X(K), which is a finite FCC whenever K is foldable,
# dimensionally homogeneous and has no boundary.  Hemispherexes are the
# flag complexes that make X(K) rank one.

from foldcc.core import is_flag, link, simplicial_isomorphic, validate_fcc
from foldcc.folding import fold_simplicial
from foldcc.generators import (davis_X, davis_Y, hemispherex,
                               standard_sphere, subdivide_half)

# ============================================================
# Standard spheres and their equators
# ============================================================

octahedron = standard_sphere(2)
print("octahedron:", octahedron)
print("flag:", is_flag(octahedron)[0])

# ============================================================
# A hemispherex: sphere + at least one hemisphere per equator
# ============================================================

hx = hemispherex(2, (1, 1, 1))
K = hx.complex
print("octahedral hemispherex:", K)
print("poles (vertex, equator):", hx.poles)
print("flag:", is_flag(K)[0],
      " homogeneous:", K.is_dimensionally_homogeneous(),
      " no boundary:", K.has_no_boundary())
print("simplicial folding (vertex colors):", fold_simplicial(K))

# ============================================================
# Y(K): every vertex link is a copy of K
# ============================================================

double_arc = hemispherex(1, (1, 1), allow_dim1=True).complex
Y = davis_Y(double_arc)
print("Y(double-arc) cells:", Y.cell_counts())

for v in (0, 17, 63):
    assert simplicial_isomorphic(link(Y, v).complex, double_arc)
print("links at vertices 0, 17, 63 are isomorphic to the double arc")

# ============================================================
# X(K): the half subdivision is a finite FCC
# ============================================================

sub = subdivide_half(Y)
X = sub.complex
print("X(double-arc) cells:", X.cell_counts(),
      "euler:", X.euler_characteristic())
print(validate_fcc(X).render())

big = davis_X(K)
print("X(octahedral hemispherex) cells:", big.complex.cell_counts())
