"""Independent oracles used to freeze expected values.

These deliberately avoid the library code paths they check: clique
enumeration is brute force, link metrics come from plain BFS over the
link 1-skeleton, and cell counts are recomputed from first principles.
"""

import itertools
from collections import deque

from foldcc.core import link


def brute_force_nonspanning_clique(K):
    """Smallest vertex set pairwise joined by edges that spans no simplex,
    by exhaustive enumeration (small complexes only)."""
    edges = {frozenset(e) for e in (K.simplices[1] if K.dim >= 1 else ())}
    for size in range(3, K.vertex_count + 1):
        for sub in itertools.combinations(range(K.vertex_count), size):
            if all(frozenset(p) in edges
                   for p in itertools.combinations(sub, 2)):
                if not K.has(sub):
                    return tuple(sub)
    return None


def link_graph_distances(cplx, v):
    """Exact edge-count distances between all directions at v, from BFS on
    the link 1-skeleton (only meaningful when the link is a graph).

    Returns {(a, b): k} with k in edges (pi/2 units); missing pairs are
    disconnected (distance beyond every threshold).
    """
    lnk = link(cplx, v)
    assert lnk.complex.dim <= 1, "oracle needs a 1-dimensional link"
    nbrs = {j: set() for j in range(len(lnk.directions))}
    if lnk.complex.dim == 1:
        for a, b in lnk.complex.simplices[1]:
            nbrs[a].add(b)
            nbrs[b].add(a)
    out = {}
    for start in range(len(lnk.directions)):
        dist = {start: 0}
        queue = deque([start])
        while queue:
            x = queue.popleft()
            for y in nbrs[x]:
                if y not in dist:
                    dist[y] = dist[x] + 1
                    queue.append(y)
        for j, d in dist.items():
            out[(lnk.directions[start], lnk.directions[j])] = d
    return out


def davis_face_count(K, k):
    """#k-faces of Y(K) by the direct formula sum over k-simplices of
    2^(|S| - k)."""
    S = K.vertex_count
    if k == 0:
        return 1 << S
    return K.n_simplices(k - 1) * (1 << (S - k))


def all_corpus_edges(cplx):
    for e in range(cplx.n_cubes(1)):
        yield cplx.cubes[1][e]
