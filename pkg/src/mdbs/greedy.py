"""Greedy walks and cycle decompositions on the arc-labeled digraph.

Two preference rules grow a walk from a chosen initial vertex, at each
step moving to an unvisited successor until both are exhausted:

* prefer-complement takes the complement arc whenever its target is
  unvisited, falling back to the double arc;
* modified prefer-double takes the double arc whenever it exists and
  its target is unvisited, falling back to the complement arc.

A walk that visits every vertex and whose last vertex arcs back to the
first is a Hamiltonian cycle; other outcomes are returned as plain
paths and flagged by is_hamiltonian rather than treated as errors.

Running the prefer-complement rule over a whole visit order of the
vertex set partitions it into closed cycles: repeatedly start a cycle
at the first unexplored vertex of the order, grow it greedily against
the set of all vertices used so far, and close it when stuck (the rule
guarantees the stuck vertex arcs back to its cycle's start).  The
resulting PsiDecomposition is the raw material for cycle joining.
"""

import random

from .gamma import successors, _check_order, _check_vertex


def _grow(path, used, n, prefer_double):
    """Extend path greedily until both successors are exhausted."""
    while True:
        d, c = successors(path[-1], n)
        if prefer_double:
            first, second = d, c
        else:
            first, second = c, d
        if first is not None and first not in used:
            nxt = first
        elif second is not None and second not in used:
            nxt = second
        else:
            return
        used.add(nxt)
        path.append(nxt)


def prefer_complement(n, v_init):
    """Walk of the prefer-complement rule from v_init.

    Returns the full vertex path; use is_hamiltonian to test whether it
    closed into a Hamiltonian cycle.
    """
    _check_order(n)
    _check_vertex(v_init, n)
    path = [v_init]
    _grow(path, {v_init}, n, prefer_double=False)
    return path


def modified_prefer_double(n, v_init):
    """Walk of the modified prefer-double rule from v_init."""
    _check_order(n)
    _check_vertex(v_init, n)
    path = [v_init]
    _grow(path, {v_init}, n, prefer_double=True)
    return path


def is_hamiltonian(path, n):
    """True when path visits every vertex once and closes into a cycle."""
    if len(path) != (1 << n) - 1 or len(set(path)) != len(path):
        return False
    return path[0] in successors(path[-1], n)


def hamiltonian_inits_prefer_complement(n):
    """Initial vertices from which prefer-complement closes a cycle."""
    _check_order(n, minimum=4)
    return {v for v in range(1, 1 << n)
            if is_hamiltonian(prefer_complement(n, v), n)}


class PsiDecomposition:
    """Disjoint closed cycles produced by a full greedy sweep.

    `cycles` holds the cycles in discovery order; each cycle starts at
    its start element and ends at its terminating element (the vertex
    whose preferred moves were exhausted, and which arcs back to the
    start).  `order` is the visit order that produced the sweep and
    `seed` the text form of the shuffle seed, if one was used.
    """

    __slots__ = ('n', 'cycles', 'order', 'seed')

    def __init__(self, n, cycles, order=None, seed=None):
        _check_order(n)
        cycles = tuple(tuple(c) for c in cycles)
        if not cycles or any(not c for c in cycles):
            raise ValueError('decomposition needs nonempty cycles')
        seen = set()
        for c in cycles:
            for v in c:
                _check_vertex(v, n)
                if v in seen:
                    raise ValueError(f'vertex {v} appears in two cycles')
                seen.add(v)
        object.__setattr__(self, 'n', n)
        object.__setattr__(self, 'cycles', cycles)
        object.__setattr__(self, 'order',
                           None if order is None else tuple(order))
        object.__setattr__(self, 'seed', seed)

    def __setattr__(self, name, v):
        raise AttributeError('PsiDecomposition is immutable')

    def __len__(self):
        return len(self.cycles)

    def __iter__(self):
        return iter(self.cycles)

    @property
    def start_elements(self):
        return tuple(c[0] for c in self.cycles)

    @property
    def terminating_elements(self):
        return tuple(c[-1] for c in self.cycles)

    def __repr__(self):
        return f'PsiDecomposition(n={self.n}, cycles={self.cycles})'


def psi_decompose(n, visit_order=None, seed=None):
    """Partition all vertices into greedy cycles along a visit order.

    The order may be given as a duplicate-free sequence of vertices
    (completed with the remaining vertices in ascending order),
    produced by shuffling with `seed`, or left as the natural ascending
    order.  Each sweep starts a cycle at the first unused vertex of the
    order and grows it by the prefer-complement rule against the global
    used set.
    """
    _check_order(n)
    size = (1 << n) - 1
    if visit_order is not None:
        given = tuple(visit_order)
        for v in given:
            _check_vertex(v, n)
        if len(set(given)) != len(given):
            raise ValueError('visit order repeats a vertex')
        rest = sorted(set(range(1, size + 1)) - set(given))
        order = given + tuple(rest)
        seed_text = None
    elif seed is not None:
        order = list(range(1, size + 1))
        random.Random(str(seed)).shuffle(order)
        order = tuple(order)
        seed_text = str(seed)
    else:
        order = tuple(range(1, size + 1))
        seed_text = None
    used = set()
    cycles = []
    for v in order:
        if v in used:
            continue
        cycle = [v]
        used.add(v)
        _grow(cycle, used, n, prefer_double=False)
        d, c = successors(cycle[-1], n)
        if cycle[0] not in (d, c):
            raise AssertionError(
                'internal error: greedy cycle failed to close')
        cycles.append(tuple(cycle))
    return PsiDecomposition(n, cycles, order=order, seed=seed_text)
