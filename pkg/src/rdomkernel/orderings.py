"""Vertex orderings, weak reachability, and weak coloring numbers.

A vertex u is weakly r-reachable from v under a linear order L when some
path of length at most r from v to u has u as its L-least vertex. The
weak r-coloring number of a fixed order is the largest such set over all
vertices; the graph invariant minimizes that over all n! orders, which
is only feasible on tiny graphs. At scale the smallest-last degeneracy
order serves as the upper-bound witness.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import Graph, SizeCapError


@dataclass(frozen=True)
class Ordering:
    """A linear order given by ranks: position[v] is the rank of vertex v."""

    position: tuple[int, ...]

    def __post_init__(self):
        n = len(self.position)
        if sorted(self.position) != list(range(n)):
            raise ValueError("position must be a permutation of 0..n-1")

    @classmethod
    def from_sequence(cls, seq) -> "Ordering":
        """Build from the order sequence (vertex at rank 0, rank 1, ...)."""
        seq = list(seq)
        pos = [0] * len(seq)
        for rank, v in enumerate(seq):
            pos[v] = rank
        return cls(tuple(pos))

    def sequence(self) -> tuple[int, ...]:
        seq = [0] * len(self.position)
        for v, rank in enumerate(self.position):
            seq[rank] = v
        return tuple(seq)

    def rank(self, v: int) -> int:
        return self.position[v]

    def __len__(self):
        return len(self.position)


def wreach(g: Graph, order: Ordering, v: int, r: int) -> set[int]:
    """Exact weak-r-reachability set of v under the given order.

    Depth-bounded search over walks from v, memoized per (vertex, budget)
    on the best walk-minimum seen; a state is re-expanded only when its
    path minimum strictly improves. Exponential in r only.
    """
    pos = order.position
    found = {v}
    best: dict[tuple[int, int], int] = {(v, r): pos[v]}
    stack = [(v, r, pos[v])]
    adj = g.adj
    while stack:
        x, budget, mn = stack.pop()
        if pos[x] == mn:
            found.add(x)
        if budget == 0:
            continue
        for w in adj[x]:
            nm = mn if mn < pos[w] else pos[w]
            key = (w, budget - 1)
            if best.get(key, -1) >= nm:
                continue
            best[key] = nm
            stack.append((w, budget - 1, nm))
    return found


def wreach_all(g: Graph, order: Ordering, r: int) -> list[set[int]]:
    """All weak-r-reachability sets at once.

    For each u, a BFS restricted to vertices ranked above u finds exactly
    the vertices that weakly r-reach u; one BFS per vertex total.
    """
    pos = order.position
    result: list[set[int]] = [{v} for v in range(g.n)]
    adj = g.adj
    for u in range(g.n):
        pu = pos[u]
        dist = {u: 0}
        frontier = [u]
        d = 0
        while frontier and d < r:
            d += 1
            nxt = []
            for x in frontier:
                for w in adj[x]:
                    if w in dist or pos[w] <= pu:
                        continue
                    dist[w] = d
                    nxt.append(w)
            frontier = nxt
        for x in dist:
            result[x].add(u)
    return result


def wcol_of_order(g: Graph, order: Ordering, r: int) -> int:
    """Largest weak-r-reachability set size under a fixed order."""
    if g.n == 0:
        return 0
    return max(len(s) for s in wreach_all(g, order, r))


def degeneracy_order(g: Graph) -> Ordering:
    """Smallest-last order: repeatedly delete a minimum-degree vertex
    (lowest id on ties); vertices removed last come first in the order."""
    n = g.n
    deg = [g.degree(v) for v in range(n)]
    removed = [False] * n
    removal = []
    for _ in range(n):
        v = min((u for u in range(n) if not removed[u]), key=lambda u: (deg[u], u))
        removed[v] = True
        removal.append(v)
        for w in g.adj[v]:
            if not removed[w]:
                deg[w] -= 1
    return Ordering.from_sequence(reversed(removal))


def wcol_exact(g: Graph, r: int, cap: int = 9) -> tuple[int, Ordering]:
    """Minimum over all vertex orders of the largest weak-reachability set,
    with a witnessing order.

    Branch and bound over order prefixes; placing u next contributes +1 to
    everything u reaches through the not-yet-placed vertices, and those
    counts only grow, so any prefix whose running maximum meets the best
    known value is dead. Factorial worst case, guarded by ``cap``. The
    witness is the lexicographically first optimal order sequence.
    """
    if g.n > cap:
        raise SizeCapError(f"wcol_exact limited to n <= {cap}, got n={g.n}")
    n = g.n
    if n == 0:
        return 0, Ordering(())
    heuristic = wcol_of_order(g, degeneracy_order(g), r)
    if heuristic == 1:
        # one is the floor (every vertex reaches itself), so any order wins
        return 1, Ordering.from_sequence(range(n))
    adj = g.adj
    placed = [False] * n
    counts = [0] * n

    def reach_unplaced(u: int) -> list[int]:
        dist = {u: 0}
        frontier = [u]
        d = 0
        while frontier and d < r:
            d += 1
            nxt = []
            for x in frontier:
                for w in adj[x]:
                    if w in dist or placed[w]:
                        continue
                    dist[w] = d
                    nxt.append(w)
            frontier = nxt
        return list(dist)

    best = heuristic

    def search(depth: int, cur_max: int):
        nonlocal best
        if depth == n:
            best = cur_max
            return
        for u in range(n):
            if placed[u]:
                continue
            bumped = reach_unplaced(u)
            new_max = cur_max
            for x in bumped:
                counts[x] += 1
                if counts[x] > new_max:
                    new_max = counts[x]
            if new_max < best:
                placed[u] = True
                search(depth + 1, new_max)
                placed[u] = False
            for x in bumped:
                counts[x] -= 1

    search(0, 0)
    value = best

    seq: list[int] = []

    def witness(depth: int, cur_max: int) -> bool:
        if depth == n:
            return True
        for u in range(n):
            if placed[u]:
                continue
            bumped = reach_unplaced(u)
            new_max = cur_max
            for x in bumped:
                counts[x] += 1
                if counts[x] > new_max:
                    new_max = counts[x]
            if new_max <= value:
                placed[u] = True
                seq.append(u)
                if witness(depth + 1, new_max):
                    return True
                seq.pop()
                placed[u] = False
            for x in bumped:
                counts[x] -= 1
        return False

    witness(0, 0)
    return value, Ordering.from_sequence(seq)
