"""Link-distance predicates and closed-geodesic constructions.

Directions at a vertex v are identified with the neighbor the oriented
edge points to.  In an all right flag link, two distinct directions are at
distance pi/2 iff they span a square, at distance exactly pi iff they are
not adjacent but share a link neighbor, and beyond pi otherwise; the
classifier below is validated against the exact path metric on
1-dimensional links by the test suite.

An edge path is a chain of oriented edges; it is a local geodesic when
every junction (including the closing one of a closed path) turns by at
least pi, i.e. the incoming-reversed and outgoing directions are neither
equal nor sides of a common square.
"""

from collections import deque
from dataclasses import dataclass
from enum import Enum
from typing import NamedTuple

from .errors import (
    ConstructionFailed,
    IsCircle,
    MismatchedBase,
    NotClosed,
    NotConnected,
    NotSingleClass,
    PreconditionFailed,
    UnknownVertex,
)


class DistanceClass(Enum):
    ZERO = "zero"
    QUARTER = "quarter"        # pi/2
    PI = "pi"
    MORE_THAN_PI = "more-than-pi"


class OrientedEdge(NamedTuple):
    tail: int
    head: int

    @property
    def reverse(self):
        return OrientedEdge(self.head, self.tail)


@dataclass(frozen=True)
class EdgePath:
    """A walk in the 1-skeleton, stored by oriented edges."""
    base: int
    steps: tuple
    closed: bool

    def __post_init__(self):
        at = self.base
        for s in self.steps:
            if s.tail != at:
                raise ValueError("broken step chain at %r" % (s,))
            at = s.head
        if self.closed and self.steps and at != self.base:
            raise ValueError("closed path does not return to its base")

    def __len__(self):
        return len(self.steps)

    def vertices(self):
        out = [self.base]
        out.extend(s.head for s in self.steps)
        return out

    def reversed(self):
        end = self.steps[-1].head if self.steps else self.base
        return EdgePath(end, tuple(s.reverse for s in reversed(self.steps)),
                        self.closed)

    def rotated(self, i):
        if not self.closed:
            raise NotClosed("only closed paths rotate")
        steps = self.steps[i:] + self.steps[:i]
        return EdgePath(steps[0].tail if steps else self.base, steps, True)

    def color_set(self, coloring):
        return {coloring.of_pair(s.tail, s.head) for s in self.steps}


def serialize_path(path):
    lines = ["path v1", "base %d" % path.base,
             "closed %d" % (1 if path.closed else 0)]
    for s in path.steps:
        lines.append("edge %d %d" % (s.tail, s.head))
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# distance classification

def distance_class(cplx, v, a, b):
    """Four-way classification of the link distance between two directions.

    `a` and `b` are neighbors of `v` naming the oriented edges v->a, v->b.
    """
    if not (0 <= v < cplx.vertex_count):
        raise UnknownVertex("vertex %d" % v)
    nbrs = cplx.neighbors(v)
    if a not in nbrs or b not in nbrs:
        raise MismatchedBase("directions must be neighbors of %d" % v)
    if a == b:
        return DistanceClass.ZERO
    ladj = cplx.link_adj(v)
    if b in ladj.get(a, ()):
        return DistanceClass.QUARTER
    if ladj.get(a) and ladj.get(b) and ladj[a] & ladj[b]:
        return DistanceClass.PI
    return DistanceClass.MORE_THAN_PI


def is_local_geodesic(cplx, path):
    """No backtracking and no square shortcut at any junction.

    Returns (True, None) or (False, j) where step j is the outgoing step of
    the first failing junction (j = 0 names the closing junction).
    """
    steps = path.steps
    bad = (DistanceClass.ZERO, DistanceClass.QUARTER)
    for t in range(1, len(steps)):
        if distance_class(cplx, steps[t].tail,
                          steps[t - 1].tail, steps[t].head) in bad:
            return False, t
    if path.closed and steps:
        if distance_class(cplx, path.base,
                          steps[-1].tail, steps[0].head) in bad:
            return False, 0
    return True, None


# ---------------------------------------------------------------------------
# perpendicular sets and transfer maps

@dataclass
class TransferMap:
    """Direction bijection across an edge via the squares containing it.

    The direction of e' at tail(e) (square s containing e and e') maps to
    the direction at head(e) of the side of s opposite e'.
    """
    edge: OrientedEdge
    vertex_map: dict

    def __call__(self, direction):
        return self.vertex_map[direction]


def perpendicular_set(cplx, e):
    """Directions at tail(e) at distance pi/2 from e, sorted."""
    return tuple(sorted(cplx.link_adj(e.tail).get(e.head, ())))


def transfer(cplx, e):
    """The isometry P_e -> P_{reverse(e)} on perpendicular directions."""
    v, w = e
    mapping = {}
    for k, i, pos, axis in cplx.cubes_with_edge(v, w):
        if k != 2:
            continue
        square = cplx.cubes[2][i]
        other = 1 - axis
        x = square[pos ^ (1 << other)]
        mapping[x] = square[pos ^ (1 << axis) ^ (1 << other)]
    return TransferMap(OrientedEdge(v, w), mapping)


# ---------------------------------------------------------------------------
# non-backtracking search in multigraphs

def _adjacency(edge_list):
    adj = {}
    for idx, (u, w) in enumerate(edge_list):
        adj.setdefault(u, []).append((idx, 0))
        adj.setdefault(w, []).append((idx, 1))
    for v in adj:
        adj[v].sort(key=lambda r: (_head(edge_list, r), r[0]))
    return adj


def _head(edge_list, ref):
    idx, flip = ref
    return edge_list[idx][1 - flip]


def _tail(edge_list, ref):
    idx, flip = ref
    return edge_list[idx][flip]


def _check_graph(edge_list, require_not_circle=True):
    adj = _adjacency(edge_list)
    if adj:
        seen = set()
        start = min(adj)
        queue = [start]
        seen.add(start)
        while queue:
            u = queue.pop()
            for ref in adj[u]:
                w = _head(edge_list, ref)
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
        if len(seen) != len(adj):
            raise NotConnected("graph is not connected")
        if require_not_circle and all(len(refs) == 2 for refs in adj.values()):
            raise IsCircle("graph is a circle")
    return adj


def connector_walk(edge_list, e1, e2):
    """Lemma-backed connector in a multigraph.

    Edges are (u, w) pairs; an oriented ref is (edge index, flip) with
    flip = 1 traversing w->u.  Returns the shortest walk c from the head of
    e1 to the head of e2 such that reverse(e2) * c * e1 is non-backtracking
    at every junction; ties break on canonical edge order.
    """
    adj = _check_graph(edge_list)
    start_v = _head(edge_list, e1)
    goal_v = _head(edge_list, e2)
    rev1 = (e1[0], 1 - e1[1])
    if start_v == goal_v and e1 != e2:
        return []
    prev = {}
    queue = deque()
    for ref in adj.get(start_v, ()):
        if ref != rev1:
            prev[ref] = None
            queue.append(ref)
    while queue:
        ref = queue.popleft()
        if _head(edge_list, ref) == goal_v and ref != e2:
            walk = []
            cur = ref
            while cur is not None:
                walk.append(cur)
                cur = prev[cur]
            walk.reverse()
            return walk
        h = _head(edge_list, ref)
        rev = (ref[0], 1 - ref[1])
        for nxt in adj.get(h, ()):
            if nxt != rev and nxt not in prev:
                prev[nxt] = ref
                queue.append(nxt)
    raise ConstructionFailed("no connector walk exists (valence-1 vertex?)")


def loop_at_vertex(edge_list, v):
    """Shortest non-backtracking closed walk based at v, with a legal
    closing junction (first step is not the reverse of the last)."""
    adj = _check_graph(edge_list, require_not_circle=False)
    if v not in adj:
        raise ConstructionFailed("vertex %d has no edges" % v)
    best = None
    for start in adj[v]:
        rev_start = (start[0], 1 - start[1])
        prev = {start: None}
        queue = deque([start])
        found = None
        while queue:
            ref = queue.popleft()
            if _head(edge_list, ref) == v and ref != rev_start:
                found = ref
                break
            h = _head(edge_list, ref)
            rev = (ref[0], 1 - ref[1])
            for nxt in adj.get(h, ()):
                if nxt != rev and nxt not in prev:
                    prev[nxt] = ref
                    queue.append(nxt)
        if found is not None:
            walk = []
            cur = found
            while cur is not None:
                walk.append(cur)
                cur = prev[cur]
            walk.reverse()
            if best is None or len(walk) < len(best):
                best = walk
    if best is None:
        raise ConstructionFailed("no closed loop through vertex %d" % v)
    return best


def _walk_to_path(edge_list, walk, base, closed):
    steps = []
    for ref in walk:
        steps.append(OrientedEdge(_tail(edge_list, ref), _head(edge_list, ref)))
    return EdgePath(base, tuple(steps), closed)


def graph_connector(graph, e1, e2):
    """Connector in a 1-dimensional cubical complex, as an EdgePath.

    e1, e2 are OrientedEdges of `graph`; the result runs from head(e1) to
    head(e2) and concatenates with e1 and reverse(e2) without backtracking
    (the e1 = e2 form gives the probe loop of the Lemma).
    """
    if graph.dim > 1:
        raise PreconditionFailed("graph_connector needs a 1-complex")
    edge_list = list(graph.cubes[1])
    index = {}
    for i, (u, w) in enumerate(edge_list):
        index[(u, w)] = (i, 0)
        index[(w, u)] = (i, 1)
    try:
        r1, r2 = index[tuple(e1)], index[tuple(e2)]
    except KeyError:
        raise PreconditionFailed("edge not in graph")
    walk = connector_walk(edge_list, r1, r2)
    return _walk_to_path(edge_list, walk, e1.head, closed=False)


# ---------------------------------------------------------------------------
# color subgraphs of a complex

def color_component_edges(cplx, coloring, v, color):
    """Edges of the color subgraph component X_{color, v}, in parent ids."""
    edges = {}
    adj = {}
    for e in coloring.edges_of_color(color):
        u, w = cplx.cubes[1][e]
        adj.setdefault(u, []).append((w, e))
        adj.setdefault(w, []).append((u, e))
    if v not in adj:
        raise PreconditionFailed("no color-%d edge at vertex %d" % (color, v))
    seen = {v}
    queue = [v]
    while queue:
        u = queue.pop()
        for w, e in adj[u]:
            edges[e] = cplx.cubes[1][e]
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return [edges[e] for e in sorted(edges)]


def _probe_loop(cplx, edge_list, e):
    # the geodesic segment e * loop * reverse(e) inside a color subgraph
    index = {}
    for i, (u, w) in enumerate(edge_list):
        index[(u, w)] = (i, 0)
        index[(w, u)] = (i, 1)
    ref = index[tuple(e)]
    walk = connector_walk(edge_list, ref, ref)
    inner = _walk_to_path(edge_list, walk, e.head, closed=False)
    return EdgePath(e.tail, (e,) + inner.steps + (e.reverse,), closed=False)


# ---------------------------------------------------------------------------
# certificates and the sim_v relation

def rank_one_certificate(cplx, coloring, path):
    """True iff the closed path is a local geodesic whose edge colors cover
    {1..n}; such a path certifies a closed rank one geodesic."""
    if not path.closed:
        raise NotClosed("certificate needs a closed path")
    ok, _ = is_local_geodesic(cplx, path)
    if not ok:
        return False
    return path.color_set(coloring) == set(range(1, coloring.n + 1))


@dataclass
class SimVClasses:
    """The equivalence generated at a vertex by pairs of directions at link
    distance >= pi, projected to colors.

    `partition` is a tuple of frozensets covering {1..n} (reflexivity is
    free: colors with no witnessed relation stay singletons).  `witnesses`
    maps a sorted color pair (i, j), including i = j, to the first
    direction pair realizing it, with the direction of color i first.
    """
    at: int
    partition: tuple
    witnesses: dict


def sim_v_classes(cplx, coloring, v):
    n = coloring.n
    parent = list(range(n + 1))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    witnesses = {}
    nbrs = cplx.neighbors(v)
    far = (DistanceClass.PI, DistanceClass.MORE_THAN_PI)
    for ai in range(len(nbrs)):
        for bi in range(ai + 1, len(nbrs)):
            a, b = nbrs[ai], nbrs[bi]
            i = coloring.of_pair(v, a)
            j = coloring.of_pair(v, b)
            key = (min(i, j), max(i, j))
            if key in witnesses:
                continue
            if distance_class(cplx, v, a, b) in far:
                witnesses[key] = (a, b) if i <= j else (b, a)
                ra, rb = find(i), find(j)
                if ra != rb:
                    parent[max(ra, rb)] = min(ra, rb)
    groups = {}
    for i in range(1, n + 1):
        groups.setdefault(find(i), []).append(i)
    partition = tuple(frozenset(groups[r]) for r in sorted(groups))
    return SimVClasses(v, partition, witnesses)


# ---------------------------------------------------------------------------
# closed geodesic builders

def _rotate_to_color_at(cplx, coloring, path, v, color):
    # reparametrize a closed path to start at v along an edge of the color
    for t, s in enumerate(path.steps):
        if s.tail == v and coloring.of_pair(s.tail, s.head) == color:
            return path.rotated(t), s
    rev = path.reversed()
    for t, s in enumerate(rev.steps):
        if s.tail == v and coloring.of_pair(s.tail, s.head) == color:
            return rev.rotated(t), s
    raise ConstructionFailed(
        "path has no color-%d edge at vertex %d" % (color, v))


def build_all_color_geodesic(cplx, coloring, v, T):
    """Closed local geodesic through v covering every color of T.

    T must be a single equivalence class of the sim_v relation at v.  The
    construction chains probe loops through the color subgraphs following
    the inductive proof; the output is re-verified before returning.
    """
    simv = sim_v_classes(cplx, coloring, v)
    T = frozenset(T)
    if T not in simv.partition:
        raise NotSingleClass("%r is not a sim_v class at %d" % (sorted(T), v))

    order = [min(T)]
    remaining = sorted(T - set(order))
    while remaining:
        nxt = None
        for c in remaining:
            if any((min(c, o), max(c, o)) in simv.witnesses for o in order):
                nxt = c
                break
        if nxt is None:
            raise NotSingleClass("class %r is not chained at %d" % (sorted(T), v))
        order.append(nxt)
        remaining.remove(nxt)

    graphs = {}

    def graph_of(color):
        if color not in graphs:
            graphs[color] = color_component_edges(cplx, coloring, v, color)
        return graphs[color]

    base_walk = loop_at_vertex(graph_of(order[0]), v)
    path = _walk_to_path(graph_of(order[0]), base_walk, v, closed=True)

    for t in range(1, len(order)):
        ck = order[t]
        cj = None
        for o in order[:t]:
            if (min(ck, o), max(ck, o)) in simv.witnesses:
                cj = o
                break
        pair = simv.witnesses[(min(ck, cj), max(ck, cj))]
        d_j, d_k = pair if cj <= ck else (pair[1], pair[0])
        e_jp = OrientedEdge(v, d_j)
        e_k = OrientedEdge(v, d_k)
        c1 = _probe_loop(cplx, graph_of(ck), e_k)
        c2 = _probe_loop(cplx, graph_of(cj), e_jp)
        path, e_j = _rotate_to_color_at(cplx, coloring, path, v, cj)
        if e_jp != e_j:
            c3 = _probe_loop(cplx, graph_of(cj), e_j)
            steps = c1.steps + c2.steps + path.steps + c3.steps + c2.steps
        else:
            steps = path.steps + c2.steps + c1.steps
        path = EdgePath(v, steps, closed=True)

    ok, where = is_local_geodesic(cplx, path)
    if not ok:
        raise ConstructionFailed("junction check failed at step %d" % where)
    if not (T <= path.color_set(coloring)):
        raise ConstructionFailed("constructed path misses a color of %r"
                                 % sorted(T))
    return path


def build_strict_pi_geodesic(cplx, coloring, v, a, b):
    """Closed local geodesic from a cross-color direction pair strictly
    beyond pi: the two probe loops concatenate legally at v."""
    i = coloring.of_pair(v, a)
    j = coloring.of_pair(v, b)
    if i == j:
        raise PreconditionFailed("directions must have different colors")
    if distance_class(cplx, v, a, b) is not DistanceClass.MORE_THAN_PI:
        raise PreconditionFailed("directions are not strictly beyond pi")
    c1 = _probe_loop(cplx, color_component_edges(cplx, coloring, v, i),
                     OrientedEdge(v, a))
    c2 = _probe_loop(cplx, color_component_edges(cplx, coloring, v, j),
                     OrientedEdge(v, b))
    path = EdgePath(v, c1.steps + c2.steps, closed=True)
    ok, where = is_local_geodesic(cplx, path)
    if not ok:
        raise ConstructionFailed("junction check failed at step %d" % where)
    return path
