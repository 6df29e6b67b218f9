"""Hot numeric kernels with two interchangeable backends.

The default backend compiles the sequential loops below with numba's
``@njit``. Setting the environment variable ``PRPD_DISABLE_NUMBA=1`` (or
running without numba installed) selects the fallback backend: a vectorized
numpy power iteration plus plain-Python union-find loops. Both backends
accumulate PageRank neighbor sums in ascending neighbor order, so results
agree to float rounding; the union-find loops are byte-for-byte the same
code and produce identical output.

``prpd bench --compare-backends`` times the two side by side.
"""

import os

import numpy as np

_TRUTHY = {"1", "true", "yes", "on"}


def _numba_disabled() -> bool:
    return os.environ.get("PRPD_DISABLE_NUMBA", "").strip().lower() in _TRUTHY


# --------------------------------------------------------------------------
# PageRank power iteration.
#
# CSR adjacency (indptr, indices) with neighbor lists sorted ascending;
# inv_degree[v] = 1/deg(v) for deg > 0, else 0. Mass sitting on degree-0
# vertices is redistributed uniformly over all vertices each iteration, so
# the iterate stays a probability distribution. Iteration stops when the L1
# change drops below tol.


def _pagerank_loop(indptr, indices, inv_degree, damping, tol, max_iter):
    n = indptr.size - 1
    x = np.full(n, 1.0 / n)
    base = (1.0 - damping) / n
    for it in range(1, max_iter + 1):
        dangling_mass = 0.0
        for v in range(n):
            if indptr[v] == indptr[v + 1]:
                dangling_mass += x[v]
        shift = base + damping * dangling_mass / n
        contrib = x * inv_degree
        x_new = np.empty(n)
        delta = 0.0
        for v in range(n):
            s = 0.0
            for k in range(indptr[v], indptr[v + 1]):
                s += contrib[indices[k]]
            xv = shift + damping * s
            x_new[v] = xv
            delta += abs(xv - x[v])
        x = x_new
        if delta < tol:
            return x, it, True
    return x, max_iter, False


def pagerank_power_numpy(indptr, indices, inv_degree, damping, tol, max_iter):
    """Vectorized power iteration; same update as the compiled loop.

    np.bincount accumulates each row's contributions in CSR order, matching
    the sequential kernel's summation order.
    """
    n = indptr.size - 1
    counts = np.diff(indptr)
    row = np.repeat(np.arange(n), counts)
    dangling = counts == 0
    has_dangling = bool(dangling.any())
    x = np.full(n, 1.0 / n)
    base = (1.0 - damping) / n
    for it in range(1, max_iter + 1):
        dangling_mass = float(x[dangling].sum()) if has_dangling else 0.0
        shift = base + damping * dangling_mass / n
        contrib = x * inv_degree
        sums = np.bincount(row, weights=contrib[indices], minlength=n)
        x_new = shift + damping * sums
        delta = float(np.abs(x_new - x).sum())
        x = x_new
        if delta < tol:
            return x, it, True
    return x, max_iter, False


# --------------------------------------------------------------------------
# Union-find passes. Path compression only: the elder-rule merge below must
# keep the root with the smaller (value, id) rank, which is incompatible
# with union by rank/size.


def _merge_loop(eu, ev, edge_death, rank, values, parent, births, deaths):
    """Process edges (already in ascending filtration order) and emit pairs.

    On each union the root later in the vertex total order dies; its value is
    the birth, the edge value the death. Pairs with birth == death are
    skipped. Returns the number of pairs written; afterwards parent[v] == v
    exactly for component representatives.
    """
    count = 0
    for i in range(eu.size):
        u = eu[i]
        v = ev[i]
        ru = u
        while parent[ru] != ru:
            ru = parent[ru]
        while parent[u] != ru:
            nxt = parent[u]
            parent[u] = ru
            u = nxt
        rv = v
        while parent[rv] != rv:
            rv = parent[rv]
        while parent[v] != rv:
            nxt = parent[v]
            parent[v] = rv
            v = nxt
        if ru == rv:
            continue
        if rank[ru] < rank[rv]:
            elder, younger = ru, rv
        else:
            elder, younger = rv, ru
        parent[younger] = elder
        birth = values[younger]
        death = edge_death[i]
        if birth != death:
            births[count] = birth
            deaths[count] = death
            count += 1
    for w0 in range(parent.size):
        r = w0
        while parent[r] != r:
            r = parent[r]
        w = w0
        while parent[w] != r:
            nxt = parent[w]
            parent[w] = r
            w = nxt
    return count


def _union_min_loop(eu, ev, parent):
    """Union all edges keeping the smaller vertex id as root, then compress."""
    for i in range(eu.size):
        u = eu[i]
        v = ev[i]
        ru = u
        while parent[ru] != ru:
            ru = parent[ru]
        while parent[u] != ru:
            nxt = parent[u]
            parent[u] = ru
            u = nxt
        rv = v
        while parent[rv] != rv:
            rv = parent[rv]
        while parent[v] != rv:
            nxt = parent[v]
            parent[v] = rv
            v = nxt
        if ru != rv:
            if ru < rv:
                parent[rv] = ru
            else:
                parent[ru] = rv
    for w0 in range(parent.size):
        r = w0
        while parent[r] != r:
            r = parent[r]
        w = w0
        while parent[w] != r:
            nxt = parent[w]
            parent[w] = r
            w = nxt


merge_pairs_python = _merge_loop
union_min_roots_python = _union_min_loop

NUMBA_AVAILABLE = False
if not _numba_disabled():
    try:
        import numba

        NUMBA_AVAILABLE = True
    except ImportError:
        NUMBA_AVAILABLE = False

if NUMBA_AVAILABLE:
    _njit = numba.njit(cache=True)
    pagerank_power_numba = _njit(_pagerank_loop)
    merge_pairs_numba = _njit(_merge_loop)
    union_min_roots_numba = _njit(_union_min_loop)
    BACKEND = "numba"
    pagerank_power = pagerank_power_numba
    merge_pairs = merge_pairs_numba
    union_min_roots = union_min_roots_numba
else:
    pagerank_power_numba = None
    merge_pairs_numba = None
    union_min_roots_numba = None
    BACKEND = "numpy"
    pagerank_power = pagerank_power_numpy
    merge_pairs = merge_pairs_python
    union_min_roots = union_min_roots_python


def warmup() -> None:
    """Trigger JIT compilation (a no-op on the numpy backend)."""
    indptr = np.array([0, 1, 2], dtype=np.int64)
    indices = np.array([1, 0], dtype=np.int64)
    inv_deg = np.ones(2)
    pagerank_power(indptr, indices, inv_deg, 0.85, 1e-10, 5)
    eu = np.array([0], dtype=np.int64)
    ev = np.array([1], dtype=np.int64)
    parent = np.arange(2, dtype=np.int64)
    merge_pairs(eu, ev, np.array([1.0]), np.array([0, 1], dtype=np.int64),
                np.array([0.0, 1.0]), parent, np.empty(1), np.empty(1))
    union_min_roots(eu, ev, np.arange(2, dtype=np.int64))
