# The dimension-3 rank dichotomy.
#
# A finite 3-dimensional FCC either admits a color bipartition certifying
# that its universal cover splits as a product, or contains a closed rank
# one geodesic in its 1-skeleton.  detect_rank3 decides which and emits a
# machine-checkable witness either way.

from foldcc.generators import (cycle_graph, davis_X, hemispherex, product,
                               torus_grid)
from foldcc.geodesic import rank_one_certificate
from foldcc.rank import detect_rank3, detect_rank_general

# ============================================================
# Higher rank: the 3-torus splits every way
# ============================================================

report = detect_rank3(torus_grid((4, 4, 4)))
print("torus(4,4,4):", report.verdict,
      "bipartitions:", report.all_bipartitions)

# ============================================================
# A product with one rank-one factor still splits
# ============================================================

double_arc = hemispherex(1, (1, 1), allow_dim1=True).complex
Xda = davis_X(double_arc).complex
prod = product(Xda, cycle_graph(4))
report = detect_rank3(prod)
print("X(double-arc) x C4:", report.verdict,
      "bipartition:", report.bipartition)

# ============================================================
# Rank one: the octahedral hemispherex quotient
# ============================================================

XH = davis_X(hemispherex(2, (1, 1, 1)).complex).complex
report = detect_rank3(XH)
print("X(H):", report.verdict, "certificate:", report.certificate,
      "witness length:", len(report.witness_path))
assert rank_one_certificate(XH, report.coloring, report.witness_path)
print(report.render())

# ============================================================
# Lower dimensions through the general entry point
# ============================================================

print("C6:", detect_rank_general(cycle_graph(6)).verdict)
print("X(double-arc):", detect_rank_general(Xda).verdict)
print("torus(4,4):", detect_rank_general(torus_grid((4, 4))).verdict)
