"""Exact bottleneck distance between persistence diagrams.

The distance between finite diagram parts is the smallest threshold t such
that the diagonal-augmented matching instance admits a perfect matching using
only point pairs at L-infinity cost <= t. Because the optimum is always one of
finitely many candidate costs (a cross-pair cost or a point's half-persistence
distance to the diagonal), binary search over the sorted candidates with a
maximum-matching feasibility test computes it exactly, with no geometric
tolerance.
"""

from __future__ import annotations

import itertools
import math
from collections import deque

import numpy as np

from .errors import DomainError
from .persistence import PersistenceDiagram


def bottleneck_distance(x: PersistenceDiagram, y: PersistenceDiagram,
                        include_essential: bool = False) -> float:
    """Bottleneck distance between the finite parts of two diagrams.

    With include_essential=True, essential births are compared separately
    (optimal sorted-order matching of the birth values; +inf when the counts
    differ) and combined with the finite part by max.
    """
    finite_part = _finite_bottleneck(x.finite, y.finite)
    if not include_essential:
        return finite_part
    ex, ey = x.essential, y.essential
    if ex.size != ey.size:
        return math.inf
    # essential arrays are stored sorted; sorted-order matching minimizes the
    # max absolute difference for 1-d point sets
    essential_part = float(np.max(np.abs(ex - ey))) if ex.size else 0.0
    return max(finite_part, essential_part)


def bottleneck_distance_bruteforce(x: PersistenceDiagram, y: PersistenceDiagram) -> float:
    """Minimum over all bijections of the augmented instance, by enumeration.

    Guarded to diagrams with at most 6 finite points in total; serves as an
    independent oracle for bottleneck_distance.
    """
    a, b = x.finite, y.finite
    na, nb = len(a), len(b)
    if na + nb > 6:
        raise DomainError(f"bruteforce bottleneck limited to 6 total points, got {na + nb}")
    if na + nb == 0:
        return 0.0
    inst = _MatchingInstance(a, b)
    size = na + nb
    cost = np.zeros((size, size))
    cost[:na, :nb] = inst.cross
    cost[:na, nb:] = inst.diag_a[:, None]
    cost[na:, :nb] = inst.diag_b[None, :]
    best = math.inf
    for perm in itertools.permutations(range(size)):
        worst = 0.0
        for i, j in enumerate(perm):
            c = cost[i, j]
            if c > worst:
                worst = c
        if worst < best:
            best = worst
    return float(best)


def _finite_bottleneck(a: np.ndarray, b: np.ndarray) -> float:
    na, nb = len(a), len(b)
    if na == 0 and nb == 0:
        return 0.0
    inst = _MatchingInstance(a, b)
    candidates = inst.candidate_costs()
    lo, hi = 0, len(candidates) - 1
    while lo < hi:
        mid = (lo + hi) // 2
        if inst.feasible(candidates[mid]):
            hi = mid
        else:
            lo = mid + 1
    return float(candidates[lo])


class _MatchingInstance:
    """Diagonal-augmented bottleneck matching instance for two finite parts.

    Left side: points of A plus one diagonal slot per point of B; right side:
    points of B plus one diagonal slot per point of A (a square instance).
    Real-real cost is the L-infinity distance, real-diagonal cost is the
    point's half-persistence, diagonal-diagonal cost is zero.
    """

    def __init__(self, a: np.ndarray, b: np.ndarray):
        self.n_a = len(a)
        self.n_b = len(b)
        self.diag_a = (a[:, 1] - a[:, 0]) / 2.0
        self.diag_b = (b[:, 1] - b[:, 0]) / 2.0
        if self.n_a and self.n_b:
            self.cross = np.maximum(np.abs(a[:, 0, None] - b[None, :, 0]),
                                    np.abs(a[:, 1, None] - b[None, :, 1]))
        else:
            self.cross = np.zeros((self.n_a, self.n_b))

    def candidate_costs(self) -> np.ndarray:
        return np.unique(np.concatenate(
            [self.cross.ravel(), self.diag_a, self.diag_b, [0.0]]))

    def feasible(self, t: float) -> bool:
        """Does the instance admit a perfect matching with every cost <= t?

        Diagonal slots are interchangeable and cost nothing among themselves,
        so a perfect matching exists iff the points too far from the diagonal
        on each side can be saturated through real-real edges of cost <= t.
        Saturating matchings for both sides combine into one matching that
        saturates both (Mendelsohn-Dulmage), and everything unmatched goes to
        the diagonal.
        """
        forced_a = np.nonzero(self.diag_a > t)[0]
        forced_b = np.nonzero(self.diag_b > t)[0]
        if forced_a.size > self.n_b or forced_b.size > self.n_a:
            return False
        if forced_a.size:
            adj = [np.nonzero(self.cross[i] <= t)[0] for i in forced_a]
            if _matching_size(adj, self.n_b) < forced_a.size:
                return False
        if forced_b.size:
            adj = [np.nonzero(self.cross[:, j] <= t)[0] for j in forced_b]
            if _matching_size(adj, self.n_a) < forced_b.size:
                return False
        return True


def _matching_size(adj: list[np.ndarray], n_right: int) -> int:
    """Maximum bipartite matching size via Hopcroft-Karp.

    adj[i] lists the right-side neighbors of left vertex i. The depth-first
    phase is iterative, so deep augmenting paths cannot overflow the stack.
    """
    n_left = len(adj)
    match_l = [-1] * n_left
    match_r = [-1] * n_right
    dist = [0] * n_left
    size = 0
    while True:
        queue: deque[int] = deque()
        for u in range(n_left):
            if match_l[u] == -1:
                dist[u] = 0
                queue.append(u)
            else:
                dist[u] = -1
        dist_free = -1
        while queue:
            u = queue.popleft()
            if dist_free != -1 and dist[u] >= dist_free:
                continue
            for v in adj[u]:
                w = match_r[v]
                if w == -1:
                    if dist_free == -1:
                        dist_free = dist[u] + 1
                elif dist[w] == -1:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        if dist_free == -1:
            return size
        ptr = [0] * n_left
        for u0 in range(n_left):
            if match_l[u0] != -1:
                continue
            stack = [u0]
            chosen: dict[int, int] = {}
            while stack:
                u = stack[-1]
                advanced = False
                while ptr[u] < len(adj[u]):
                    v = adj[u][ptr[u]]
                    ptr[u] += 1
                    w = match_r[v]
                    if w == -1:
                        if dist[u] + 1 == dist_free:
                            chosen[u] = v
                            for s in stack:
                                sv = chosen[s]
                                match_l[s] = sv
                                match_r[sv] = s
                            size += 1
                            stack = []
                            advanced = True
                            break
                    elif dist[w] == dist[u] + 1:
                        chosen[u] = v
                        stack.append(w)
                        advanced = True
                        break
                if not advanced and stack:
                    dist[stack.pop()] = -1
