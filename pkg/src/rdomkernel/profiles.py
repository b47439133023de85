"""Distance profiles, projections, complexity counters, and VC-dimension.

The radius-r distance profile of u on a target set A records, for every
a in A within distance r, that exact distance; unreachable targets are
omitted (read: infinity). A projection replaces plain distance by the
length of a shortest A-avoiding path, i.e. a path whose only A-vertex is
its final endpoint. Profiles are canonical sorted (vertex, value) tuples
so they hash in O(size) and compare in O(1) after hashing, which is what
the equivalence-classing stages of the kernel pipeline rely on.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .graphs import INF, Graph, SizeCapError, bfs_within


@dataclass(frozen=True)
class DistanceProfile:
    """Canonical map a -> dist(u, a) for targets within the radius."""

    entries: tuple[tuple[int, int], ...]
    r: int = field(compare=False)

    def value(self, v: int):
        for a, d in self.entries:
            if a == v:
                return d
        return INF

    def as_dict(self) -> dict[int, int]:
        return dict(self.entries)


@dataclass(frozen=True)
class ProjectionProfile:
    """Canonical map a -> length of a shortest A-avoiding path, within radius."""

    entries: tuple[tuple[int, int], ...]
    r: int = field(compare=False)

    def value(self, v: int):
        for a, d in self.entries:
            if a == v:
                return d
        return INF

    def as_dict(self) -> dict[int, int]:
        return dict(self.entries)

    def keys(self) -> set[int]:
        return {a for a, _ in self.entries}


@dataclass(frozen=True)
class SetFamily:
    """A deduplicated family of subsets of the ground set 0..ground_size-1."""

    ground_size: int
    members: tuple[frozenset[int], ...]

    @classmethod
    def from_sets(cls, ground_size: int, sets) -> "SetFamily":
        canon = {frozenset(s) for s in sets}
        for s in canon:
            for x in s:
                if not 0 <= x < ground_size:
                    raise ValueError(f"element {x} outside ground set of size {ground_size}")
        ordered = tuple(sorted(canon, key=lambda s: (len(s), sorted(s))))
        return cls(ground_size, ordered)

    def __len__(self):
        return len(self.members)


def distance_profile(g: Graph, u: int, a, r: int) -> DistanceProfile:
    targets = set(a)
    dist = bfs_within(g, u, r)
    entries = tuple(sorted((v, dist[v]) for v in targets if v in dist))
    return DistanceProfile(entries, r)


def _avoiding_distances(g: Graph, u: int, a: set, r: int) -> dict[int, int]:
    # BFS that records vertices of `a` when reached but never expands them,
    # which is exactly the shortest-A-avoiding-path metric.
    if u in a:
        raise ValueError(f"projection source {u} must lie outside the target set")
    adj = g.adj
    dist = {u: 0}
    frontier = [u]
    reached: dict[int, int] = {}
    d = 0
    while frontier and d < r:
        d += 1
        nxt = []
        for x in frontier:
            for w in adj[x]:
                if w in dist:
                    continue
                dist[w] = d
                if w in a:
                    reached[w] = d
                else:
                    nxt.append(w)
        frontier = nxt
    return reached


def projection(g: Graph, u: int, a, r: int) -> set[int]:
    """Vertices of a reachable from u by an A-avoiding path of length <= r."""
    return set(_avoiding_distances(g, u, set(a), r))


def projection_profile(g: Graph, u: int, a, r: int) -> ProjectionProfile:
    reached = _avoiding_distances(g, u, set(a), r)
    return ProjectionProfile(tuple(sorted(reached.items())), r)


def _check_cap(count: int, cap: int | None):
    if cap is not None and count > cap:
        raise SizeCapError(f"distinct-profile count exceeded cap {cap}")


def nu_r(g: Graph, a, r: int, cap: int | None = None) -> int:
    """Number of distinct sets ball(v, r) & A over all vertices v."""
    targets = frozenset(a)
    distinct: set[frozenset[int]] = set()
    for v in range(g.n):
        distinct.add(targets.intersection(bfs_within(g, v, r)))
        _check_cap(len(distinct), cap)
    return len(distinct)


def nu_hat_r(g: Graph, a, r: int, cap: int | None = None) -> int:
    """Number of distinct radius-r distance profiles on A over all vertices."""
    targets = set(a)
    distinct: set[tuple] = set()
    for v in range(g.n):
        distinct.add(distance_profile(g, v, targets, r).entries)
        _check_cap(len(distinct), cap)
    return len(distinct)


def mu_r(g: Graph, a, r: int, cap: int | None = None) -> int:
    """Number of distinct radius-r projections on A, over vertices outside A."""
    targets = set(a)
    distinct: set[frozenset[int]] = set()
    for v in range(g.n):
        if v in targets:
            continue
        distinct.add(frozenset(_avoiding_distances(g, v, targets, r)))
        _check_cap(len(distinct), cap)
    return len(distinct)


def mu_hat_r(g: Graph, a, r: int, cap: int | None = None) -> int:
    """Number of distinct radius-r projection profiles on A, outside A."""
    targets = set(a)
    distinct: set[tuple] = set()
    for v in range(g.n):
        if v in targets:
            continue
        distinct.add(tuple(sorted(_avoiding_distances(g, v, targets, r).items())))
        _check_cap(len(distinct), cap)
    return len(distinct)


def layered_graph(g: Graph, a, r: int) -> tuple[Graph, frozenset[int]]:
    """Layered expansion on (r+1) copies of V; copy (u, i) has id i*n + u.

    For each edge {u, v} of g and each layer step i in 1..r there is an edge
    {(u, i-1), (v, i)} exactly when u is outside A, so walks across layers
    are the A-avoiding walks of g. Returns the expansion and the target set
    B = A x {0..r}.
    """
    targets = set(a)
    n = g.n
    edges = []
    for u in range(n):
        if u in targets:
            continue
        for w in g.adj[u]:
            for i in range(1, r + 1):
                edges.append(((i - 1) * n + u, i * n + w))
    b = frozenset(i * n + v for v in targets for i in range(r + 1))
    return Graph((r + 1) * n, edges), b


def decode_projection_via_layers(g: Graph, a, r: int, u: int) -> ProjectionProfile:
    """Projection profile of u recovered from distance profiles in the
    layered expansion; exists as a cross-check of that encoding."""
    targets = set(a)
    if u in targets:
        raise ValueError(f"projection source {u} must lie outside the target set")
    h, _ = layered_graph(g, targets, r)
    dist = bfs_within(h, u, r)  # (u, 0) has id u
    n = g.n
    entries = []
    for v in sorted(targets):
        for i in range(1, r + 1):
            if dist.get(i * n + v) == i:
                entries.append((v, i))
                break
    return ProjectionProfile(tuple(entries), r)


def _is_shattered(x: frozenset[int], members) -> bool:
    want = 1 << len(x)
    seen: set[frozenset[int]] = set()
    for f in members:
        seen.add(x & f)
        if len(seen) == want:
            return True
    return len(seen) == want


def vc_dimension(family: SetFamily, cap: int = 12) -> int:
    """Largest size of a set shattered by the family, searched by
    increasing size.

    A candidate is only tested when all its proper subsets were shattered
    (shattering is downward closed). Returns the exact dimension when it
    is at most ``cap``; a return of cap + 1 means "at least cap + 1", the
    search stops there. The empty family shatters nothing, not even the
    empty set, and reports -1.
    """
    if cap > 12:
        raise ValueError("vc_dimension search cap limited to 12")
    members = family.members
    if not members:
        return -1
    ground = range(family.ground_size)
    level: list[frozenset[int]] = [frozenset()]
    dim = 0
    while dim <= cap:
        prev = set(level)
        nxt = []
        tried: set[frozenset[int]] = set()
        for s in level:
            hi = max(s) if s else -1
            for e in ground:
                if e <= hi:
                    continue
                cand = s | {e}
                if cand in tried:
                    continue
                tried.add(cand)
                if any(cand - {y} not in prev for y in cand):
                    continue
                if _is_shattered(cand, members):
                    nxt.append(cand)
        if not nxt:
            return dim
        dim += 1
        level = nxt
    return cap + 1


def sauer_shelah_bound(n: int, d: int) -> int:
    """Sum of binomials C(n, i) for i = 0..d; the maximum size of a family
    of VC-dimension d over an n-element ground set. Equals 2**n once d >= n."""
    if n < 0:
        raise ValueError("ground size must be non-negative")
    return sum(math.comb(n, i) for i in range(0, min(d, n) + 1))
