# Validating the FCC axioms and constructing foldings.
#
# A foldable cubical complex admits a combinatorial map onto a single
# n-cube that is injective on every cube; the map colors the edges by
# coordinate direction.  This script checks the axioms on a few small
# complexes and shows what a foldability failure looks like.

from foldcc.core import load_complex, serialize_complex, validate_fcc
from foldcc.folding import (NotFoldable, coloring_from, find_folding,
                            parallel_classes, serialize_folding)
from foldcc.generators import torus_grid

# ============================================================
# A 3-torus grid: the model citizen
# ============================================================

torus = torus_grid((4, 4, 4))
print("torus(4,4,4) cells per dimension:", torus.cell_counts())

report = validate_fcc(torus)
print(report.render())

folding = find_folding(torus)
classes = parallel_classes(torus)
print("parallel classes:", classes.class_count)
print("directions used:", sorted(set(folding.direction_of)))

coloring = coloring_from(folding)
print("edges per color:", coloring.counts())

# ============================================================
# A single square has boundary: not geodesically complete
# ============================================================

square = load_complex("cubical-complex v1\nvertices 4\ncube 2 0 1 2 3\n")
print(validate_fcc(square).render())

# ============================================================
# torus(5,4): valid complex, but not foldable
# ============================================================
# Going around the odd direction crosses one family of parallel edges
# five times, so no assignment of directions can flip a cube coordinate
# consistently.  The witness is the odd cycle itself.

odd = torus_grid((5, 4))
result = find_folding(odd)
assert isinstance(result, NotFoldable)
print("torus(5,4):", result.reason, "witness cycle:", result.cycle)

# ============================================================
# Foldings serialize to a small text format
# ============================================================

print(serialize_folding(find_folding(torus_grid((4, 4)))))
print(serialize_complex(torus_grid((4, 4))))
