"""Structural subroutines: scattered-set extraction behind a small
separator, projection-bounded closure, and distance-preserving closure.

Each routine promises a hard postcondition (checkable on any run) while
its output size is heuristic: how large the scattered set gets, or how
many hub vertices the closure absorbs, depends on the instance.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .graphs import Graph, bfs_within
from .profiles import projection


@dataclass(frozen=True)
class QwResult:
    """Separator S plus a subset of the targets that is r-independent once
    S is deleted. ``ok`` records whether the requested size was reached."""

    separator: frozenset[int]
    scattered: frozenset[int]
    rounds: int
    ok: bool


@dataclass(frozen=True)
class ClosureResult:
    """Closure Y of X: outside Y, every radius-r projection onto Y is
    smaller than the threshold. ``added`` lists hub vertices in pick order."""

    closure: frozenset[int]
    threshold: int
    added: tuple[int, ...]


def _bfs_avoiding(g: Graph, source: int, r: int, blocked: set) -> dict[int, int]:
    # Plain bounded BFS in g minus the blocked set.
    adj = g.adj
    dist = {source: 0}
    frontier = [source]
    d = 0
    while frontier and d < r:
        d += 1
        nxt = []
        for u in frontier:
            for w in adj[u]:
                if w in dist or w in blocked:
                    continue
                dist[w] = d
                nxt.append(w)
        frontier = nxt
    return dist


def _greedy_scattered(g: Graph, candidates: list[int], r: int, blocked: set) -> list[int]:
    # Ascending-id greedy: picking v excludes its whole r-ball in g - blocked,
    # so picks end up pairwise farther than r there.
    excluded: set[int] = set()
    chosen = []
    for v in candidates:
        if v in excluded:
            continue
        chosen.append(v)
        excluded.update(_bfs_avoiding(g, v, r, blocked))
    return chosen


def quasi_wide_extract(g: Graph, a, r: int, m: int, s_max: int | None = None) -> QwResult:
    """Find a separator S (at most s_max vertices) and a subset B of A - S,
    of size at least m, that is r-independent in g - S.

    Greedy loop: build a maximal scattered subset of A - S; while it is too
    small, move the vertex covering most of A - S within radius ceil(r/2)
    of g - S into the separator and retry. On a exhausted separator budget
    the result carries the best (S, B) seen and ok=False.
    """
    targets = set(a)
    for v in targets:
        if not 0 <= v < g.n:
            raise IndexError(f"vertex {v} out of range for n={g.n}")
    if m < 1:
        raise ValueError("target size must be at least 1")
    if s_max is None:
        s_max = 10 * r
    half = (r + 1) // 2
    separator: set[int] = set()
    best_b: list[int] = []
    best_s: set[int] = set()
    rounds = 0
    while True:
        rounds += 1
        live = sorted(targets - separator)
        b = _greedy_scattered(g, live, r, separator)
        if len(b) > len(best_b):
            best_b, best_s = b, set(separator)
        if len(b) >= m:
            return QwResult(frozenset(separator), frozenset(b), rounds, True)
        if len(separator) >= s_max or len(live) < m:
            return QwResult(frozenset(best_s), frozenset(best_b), rounds, False)
        score = [0] * g.n
        for v in live:
            for x in _bfs_avoiding(g, v, half, separator):
                score[x] += 1
        hub = -1
        hub_score = 0
        for x in range(g.n):
            if x in separator:
                continue
            if score[x] > hub_score:
                hub, hub_score = x, score[x]
        if hub < 0:
            return QwResult(frozenset(best_s), frozenset(best_b), rounds, False)
        separator.add(hub)


def default_closure_threshold(g: Graph) -> int:
    """Projection threshold tied to the measured edge density."""
    density = math.ceil(g.m / g.n) if g.n else 0
    return max(4, 4 * density + 2)


def r_closure(g: Graph, x, r: int, t: int) -> ClosureResult:
    """Grow X into Y until every outside vertex projects onto Y with fewer
    than t targets.

    While some u outside Y has a radius-r projection of size at least t,
    the u with the largest projection (lowest id on ties) becomes a hub
    and joins Y. Terminates because Y only grows; worst case Y = V.
    """
    if t < 2:
        raise ValueError("closure threshold must be at least 2")
    y = set(x)
    for v in y:
        if not 0 <= v < g.n:
            raise IndexError(f"vertex {v} out of range for n={g.n}")
    added = []
    while True:
        pick = -1
        pick_size = 0
        for u in range(g.n):
            if u in y:
                continue
            size = len(projection(g, u, y, r))
            if size >= t and size > pick_size:
                pick, pick_size = u, size
        if pick < 0:
            break
        y.add(pick)
        added.append(pick)
    return ClosureResult(frozenset(y), t, tuple(added))


def short_paths_closure(g: Graph, x, r: int) -> set[int]:
    """Superset of X inside which all pairwise X-distances up to r survive
    induction exactly.

    For every pair of X at distance at most r (pairs in ascending id
    order), the deterministic shortest path between them is added; induced
    distances can only shrink to the true value, never below it.
    """
    xs = sorted(set(x))
    if xs and not (0 <= xs[0] and xs[-1] < g.n):
        bad = xs[0] if xs[0] < 0 else xs[-1]
        raise IndexError(f"vertex {bad} out of range for n={g.n}")
    closed = set(xs)
    for i, u in enumerate(xs):
        dist = bfs_within(g, u, r)
        for v in xs[i + 1 :]:
            if v not in dist:
                continue
            w = v
            while w != u:
                closed.add(w)
                dw = dist[w]
                w = min(p for p in g.adj[w] if dist.get(p) == dw - 1)
    return closed
