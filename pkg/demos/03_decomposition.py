# Graph-of-spaces decompositions.
#
# Fixing one color i of a folded FCC, the complex decomposes as a graph
# of spaces: vertex spaces are the components of the subcomplex avoiding
# color i, edge spaces are the components of the hyperplane complex H_i
# (midcubes of the color-i edges), and each edge space attaches to the
# one or two vertex spaces its product neighborhood touches.

from foldcc.core import validate_fcc
from foldcc.decomposition import (count_identity_holds, graph_of_spaces,
                                  hyperplanes, is_covering, subcomplex_XT)
from foldcc.folding import coloring_from, find_folding
from foldcc.generators import davis_X, hemispherex, torus_grid

# ============================================================
# The 2-torus: everything is a circle and every map is a covering
# ============================================================

torus = torus_grid((4, 4))
coloring = coloring_from(find_folding(torus))

xt = subcomplex_XT(torus, coloring, {1})
print("X_{1} components:", [p.complex.cell_counts() for p in xt.components()])

for h in hyperplanes(torus, coloring, 1):
    print("hyperplane component:", h.complex.cell_counts())

gos = graph_of_spaces(torus, coloring, 1)
print("base graph: %d vertices, edges %r, connected %s"
      % (len(gos.vertex_spaces), gos.base_edges, gos.base_graph_connected()))
for j, (g0, g1) in enumerate(gos.attaching):
    print("  edge space %d coverings: %s %s"
          % (j, is_covering(g0).is_covering, is_covering(g1).is_covering))

# every k-cube is either inside X_{T_i} or crossed by one midcube
for color in (1, 2):
    assert count_identity_holds(torus, coloring, color)
print("count identity holds for both colors")

# ============================================================
# X(H): vertex and edge spaces are 2-dimensional FCCs, and some
# attaching map per color fails to be a covering (no product split)
# ============================================================

hx = hemispherex(2, (1, 1, 1))
X = davis_X(hx.complex).complex
colX = coloring_from(find_folding(X))

gos = graph_of_spaces(X, colX, 1)
print("X(H) color 1: %d vertex spaces, %d edge spaces"
      % (len(gos.vertex_spaces), len(gos.edge_spaces)))

piece = gos.vertex_spaces[0]
print("first vertex space:", piece.complex.cell_counts(),
      "is 2-dim FCC:", validate_fcc(piece.complex).is_fcc)

non_coverings = [g for g0, g1 in gos.attaching for g in (g0, g1)
                 if not is_covering(g).is_covering]
print("non-covering attaching maps:", len(non_coverings))
witness = is_covering(non_coverings[0])
print("first witness: edge-space vertex %d misses edge %r"
      % (witness.vertex, witness.missed_edge))
