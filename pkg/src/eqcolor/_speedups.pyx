# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled backtracking kernel for equitable k-colorability.

Mirrors _search_py.search step for step (same candidate scan, same
symmetry rule, same node accounting) so the two backends return identical
results and node counts.  Adjacency arrives as a flat n*n 0/1 byte
matrix; per-class neighbor membership is tracked with conflict counters
instead of bitmasks, which changes nothing about the tree shape.
"""

from libc.stdlib cimport calloc, free
from libc.string cimport memcpy

FEASIBLE = 1
INFEASIBLE = 0
BUDGET_EXCEEDED = 2


cdef struct SearchState:
    int n
    int k
    const unsigned char *adj
    const int *caps
    const int *order
    int *used
    int *conflicts      # conflicts[c*n + v]: neighbors of v already in class c
    int *assignment     # class index per vertex, -1 unassigned
    long long nodes
    long long budget    # <= 0: unlimited
    bint out_of_budget


cdef bint _dfs(SearchState *st, int pos) noexcept:
    cdef int v, c, u, uc, last_empty_cap, n, k
    cdef const unsigned char *row
    cdef int *conf

    st.nodes += 1
    if 0 < st.budget < st.nodes:
        st.out_of_budget = True
        return False
    n = st.n
    k = st.k
    if pos == n:
        return True
    v = st.order[pos]
    row = st.adj + v * n
    last_empty_cap = -1
    for c in range(k):
        uc = st.used[c]
        if uc == st.caps[c]:
            continue
        if uc == 0:
            if st.caps[c] == last_empty_cap:
                continue
            last_empty_cap = st.caps[c]
        conf = st.conflicts + c * n
        if conf[v] != 0:
            continue
        st.used[c] = uc + 1
        st.assignment[v] = c
        for u in range(n):
            if row[u]:
                conf[u] += 1
        if _dfs(st, pos + 1):
            return True
        for u in range(n):
            if row[u]:
                conf[u] -= 1
        st.used[c] = uc
        st.assignment[v] = -1
        if st.out_of_budget:
            return False
    return False


def search(int n, const unsigned char[::1] adj, int k, int[::1] caps,
           int[::1] order, long long budget):
    """Same contract as _search_py.search; adj is the flat byte matrix."""
    cdef SearchState st
    cdef bint found
    cdef int v

    if adj.shape[0] != n * n:
        raise ValueError("adjacency matrix has wrong shape")
    if caps.shape[0] != k or order.shape[0] != n:
        raise ValueError("caps/order have wrong length")

    st.n = n
    st.k = k
    st.adj = &adj[0]
    st.caps = &caps[0]
    st.order = &order[0]
    st.nodes = 0
    st.budget = budget
    st.out_of_budget = False
    st.used = <int *> calloc(k, sizeof(int))
    st.conflicts = <int *> calloc(<size_t> k * n, sizeof(int))
    st.assignment = <int *> calloc(n, sizeof(int))
    if st.used == NULL or st.conflicts == NULL or st.assignment == NULL:
        free(st.used)
        free(st.conflicts)
        free(st.assignment)
        raise MemoryError()
    for v in range(n):
        st.assignment[v] = -1

    try:
        found = _dfs(&st, 0)
        if st.out_of_budget:
            return BUDGET_EXCEEDED, None, st.nodes
        if found:
            return FEASIBLE, [st.assignment[v] for v in range(n)], st.nodes
        return INFEASIBLE, None, st.nodes
    finally:
        free(st.used)
        free(st.conflicts)
        free(st.assignment)
