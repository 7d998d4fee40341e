"""Joining disjoint vertex cycles into one Hamiltonian cycle.

Two vertices r and s are a complementary pair when r + s = 2^n - 1;
such vertices share the same pair of predecessors, so two disjoint
cycles through r and s can be spliced into one cycle by exchanging the
predecessors.  The join graph of a decomposition has one node per
cycle and one edge per cross-cycle complementary pair; every spanning
tree of that graph yields one joined Hamiltonian cycle, and the number
of spanning trees is counted exactly by the classic matrix-tree
cofactor (computed with fraction-free integer elimination).

Because two different spanning trees occasionally splice their way to
the same cycle, the per-tree stream is emitted as-is (tagged with the
pairs used) and any deduplication under rotation is left to the
caller.  Exhaustive tree enumeration is brute force over edge subsets
and is guarded above MAX_EXHAUSTIVE_EDGES edges.
"""

import itertools
import warnings

from .gamma import GuardRefusal, HamCycle

#: Edge-count ceiling for brute-force spanning tree enumeration.
MAX_EXHAUSTIVE_EDGES = 24


class JoinGraph:
    """Multigraph over a decomposition's cycles.

    Edges are (i, k, r, s) with 1-based cycle indices i < k: vertex r
    of cycle i and vertex s of cycle k satisfy r + s = 2^n - 1.
    """

    __slots__ = ('n', 'node_count', 'edges')

    def __init__(self, n, node_count, edges):
        size = (1 << n) - 1
        edges = tuple(tuple(e) for e in edges)
        for i, k, r, s in edges:
            if not 1 <= i < k <= node_count:
                raise ValueError(f'bad edge endpoints ({i}, {k})')
            if r + s != size:
                raise ValueError(f'({r}, {s}) is not a complementary pair')
        object.__setattr__(self, 'n', n)
        object.__setattr__(self, 'node_count', node_count)
        object.__setattr__(self, 'edges', edges)

    def __setattr__(self, name, v):
        raise AttributeError('JoinGraph is immutable')

    def __repr__(self):
        return (f'JoinGraph(n={self.n}, nodes={self.node_count}, '
                f'edges={self.edges})')


class JoinMatrix:
    """Symmetric integer matrix of a join graph.

    Diagonal entries count the edges at each node, off-diagonal entries
    are minus the number of edges between the pair; every row sums to
    zero, and any first cofactor counts the spanning trees.
    """

    __slots__ = ('entries',)

    def __init__(self, entries):
        entries = tuple(tuple(row) for row in entries)
        object.__setattr__(self, 'entries', entries)

    def __setattr__(self, name, v):
        raise AttributeError('JoinMatrix is immutable')

    def cofactor(self):
        """Determinant of the matrix with row 0 and column 0 removed."""
        minor = [list(row[1:]) for row in self.entries[1:]]
        return _det(minor)

    def __repr__(self):
        return f'JoinMatrix({self.entries})'


def _det(m):
    """Exact integer determinant by fraction-free (Bareiss) elimination."""
    size = len(m)
    if size == 0:
        return 1
    m = [row[:] for row in m]
    sign = 1
    denom = 1
    for k in range(size - 1):
        if m[k][k] == 0:
            for i in range(k + 1, size):
                if m[i][k]:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // denom
            m[i][k] = 0
        denom = m[k][k]
    return sign * m[-1][-1]


def complement_pairs(dec):
    """Join graph of a decomposition.

    Cycle pairs are scanned in index order and, within a pair, edges
    appear in the position order of r inside the lower-indexed cycle,
    so the edge list is deterministic.
    """
    size = (1 << dec.n) - 1
    edges = []
    for i, k in itertools.combinations(range(len(dec.cycles)), 2):
        targets = set(dec.cycles[k])
        for r in dec.cycles[i]:
            s = size - r
            if s in targets:
                edges.append((i + 1, k + 1, r, s))
    return JoinGraph(dec.n, len(dec.cycles), edges)


def join_matrix(graph):
    """Matrix-tree matrix of a join graph."""
    j = graph.node_count
    entries = [[0] * j for _ in range(j)]
    for i, k, _, _ in graph.edges:
        entries[i - 1][i - 1] += 1
        entries[k - 1][k - 1] += 1
        entries[i - 1][k - 1] -= 1
        entries[k - 1][i - 1] -= 1
    return JoinMatrix(entries)


def best_count(graph):
    """Number of spanning trees of the join graph (0 when disconnected)."""
    return join_matrix(graph).cofactor()


def spanning_trees(graph):
    """All spanning trees as tuples of edge indices, by brute force.

    Subsets of node_count - 1 edges are tested with a union-find for
    acyclicity (which on that many edges is the same as spanning).
    Graphs with more than MAX_EXHAUSTIVE_EDGES edges are refused.
    """
    if len(graph.edges) > MAX_EXHAUSTIVE_EDGES:
        raise GuardRefusal(
            f'{len(graph.edges)} edges exceed the exhaustive spanning-tree '
            f'ceiling of {MAX_EXHAUSTIVE_EDGES}')
    j = graph.node_count
    trees = []
    for combo in itertools.combinations(range(len(graph.edges)), j - 1):
        parent = list(range(j + 1))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        ok = True
        for idx in combo:
            i, k = graph.edges[idx][0], graph.edges[idx][1]
            ri, rk = find(i), find(k)
            if ri == rk:
                ok = False
                break
            parent[ri] = rk
        if ok:
            trees.append(combo)
    return trees


def join_pair(cycle_a, cycle_b, r, s):
    """Splice two disjoint cycles at the complementary pair (r, s).

    r must lie on cycle_a and s on cycle_b.  The predecessors of r and
    s are exchanged, which threads cycle_b into cycle_a: the result
    runs cycle_a up to r's position, takes cycle_b from s all the way
    around, and finishes cycle_a from r.
    """
    a, b = list(cycle_a), list(cycle_b)
    total = r + s
    n = total.bit_length()
    if total != (1 << n) - 1:
        raise ValueError(f'({r}, {s}) is not a complementary pair')
    if r not in a:
        raise ValueError(f'vertex {r} is not on the first cycle')
    if s not in b:
        raise ValueError(f'vertex {s} is not on the second cycle')
    if set(a) & set(b):
        raise ValueError('cycles are not disjoint')
    ia, ib = a.index(r), b.index(s)
    return a[:ia] + b[ib:] + b[:ib] + a[ia:]


def _merge_tree(dec, graph, tree):
    """Apply one spanning tree's joins and rotate to a fixed start."""
    parts = [list(c) for c in dec.cycles]
    locate = {v: i for i, c in enumerate(parts) for v in c}
    for idx in tree:
        _, _, r, s = graph.edges[idx]
        ia, ib = locate[r], locate[s]
        merged = join_pair(parts[ia], parts[ib], r, s)
        parts[ia] = merged
        parts[ib] = []
        for v in merged:
            locate[v] = ia
    final = next(p for p in parts if p)
    start = final.index(dec.cycles[0][0])
    return HamCycle(final[start:] + final[:start], dec.n)


def enumerate_joined_cycles(dec):
    """One joined cycle per spanning tree of the decomposition's graph.

    Yields (pairs, cycle) where pairs are the (r, s) joins of the tree
    in application order.  The merge result is independent of the
    order the tree edges are applied in; each cycle is rotated to start
    at the decomposition's first vertex.  A decomposition whose join
    graph is disconnected yields nothing (with a warning), which cannot
    happen for decompositions produced by a full greedy sweep.
    """
    graph = complement_pairs(dec)
    trees = spanning_trees(graph)
    if not trees:
        warnings.warn('join graph is disconnected; nothing to join',
                      RuntimeWarning, stacklevel=2)

    def _stream():
        for tree in trees:
            pairs = tuple(graph.edges[idx][2:] for idx in tree)
            yield pairs, _merge_tree(dec, graph, tree)

    return _stream()


def join_all(dec):
    """Join a whole decomposition into one cycle, lowest pair first.

    At each round the smallest vertex r whose complement lies on a
    different current cycle is joined; the result is rotated to start
    at the decomposition's first vertex.
    """
    size = (1 << dec.n) - 1
    parts = [list(c) for c in dec.cycles]
    while len(parts) > 1:
        locate = {v: i for i, c in enumerate(parts) for v in c}
        for r in range(1, size + 1):
            s = size - r
            ia = locate.get(r)
            ib = locate.get(s)
            if ia is not None and ib is not None and ia != ib:
                break
        else:
            raise ValueError('cycles admit no cross complementary pair')
        merged = join_pair(parts[ia], parts[ib], r, s)
        parts = [p for j, p in enumerate(parts) if j not in (ia, ib)]
        parts.append(merged)
    final = parts[0]
    start = final.index(dec.cycles[0][0])
    return HamCycle(final[start:] + final[:start], dec.n)
