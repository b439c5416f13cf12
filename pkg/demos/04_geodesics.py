# Link distances and closed geodesics in the 1-skeleton.
#
# In an all right flag link, two directions are at distance pi/2 iff they
# span a square, at exactly pi iff they are non-adjacent with a common
# link neighbor, and beyond pi otherwise.  An edge path is a local
# geodesic when every junction turns by at least pi; a closed local
# geodesic using every color certifies a rank one geodesic.

from foldcc.folding import coloring_from, find_folding
from foldcc.generators import (davis_X, hemispherex, origin_direction)
from foldcc.geodesic import (DistanceClass, OrientedEdge,
                             build_all_color_geodesic,
                             build_strict_pi_geodesic, distance_class,
                             is_local_geodesic, rank_one_certificate,
                             sim_v_classes, transfer)

# ============================================================
# The double arc: pole directions sit at distance 3*pi/2
# ============================================================

hx = hemispherex(1, (1, 1), allow_dim1=True)
sub = davis_X(hx.complex)
X = sub.complex
coloring = coloring_from(find_folding(X))

p1, p2 = (origin_direction(sub, p) for p in hx.pole_vertices)
print("pole directions at the origin:", p1, p2,
      "colors:", coloring.of_pair(0, p1), coloring.of_pair(0, p2))
print("distance class:", distance_class(X, 0, p1, p2))
assert distance_class(X, 0, p1, p2) is DistanceClass.MORE_THAN_PI

path = build_strict_pi_geodesic(X, coloring, 0, p1, p2)
print("strict-pi geodesic: length %d, local geodesic %s, rank-one %s"
      % (len(path), is_local_geodesic(X, path)[0],
         rank_one_certificate(X, coloring, path)))

# ============================================================
# Transfer maps: perpendicular directions move across an edge
# ============================================================

e = OrientedEdge(*X.cubes[1][0])
D = transfer(X, e)
back = transfer(X, e.reverse)
print("transfer across %r: %r" % (tuple(e), D.vertex_map))
assert all(back.vertex_map[y] == x for x, y in D.vertex_map.items())

# ============================================================
# The sim_v relation at the origin of X(H) merges all three colors
# ============================================================

hx3 = hemispherex(2, (1, 1, 1))
X3 = davis_X(hx3.complex).complex
col3 = coloring_from(find_folding(X3))

simv = sim_v_classes(X3, col3, 0)
print("sim_v classes at the origin of X(H):",
      [sorted(p) for p in simv.partition])

path3 = build_all_color_geodesic(X3, col3, 0, {1, 2, 3})
print("all-color geodesic: length %d, certificate %s"
      % (len(path3), rank_one_certificate(X3, col3, path3)))
print("first few vertices:", path3.vertices()[:12], "...")
