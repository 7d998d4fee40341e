"""Arc-labeled digraph whose Hamiltonian cycles are window-complete walks.

For order n the vertex set is the integers 1 .. 2^n - 1, read as the
nonzero binary words of length n (bit i of the vertex is coefficient i
of the corresponding polynomial).  Every vertex A carries up to two
out-arcs:

* a "double" arc A -> 2A mod 2^n, labeled 0 and drawn blue; it is
  absent exactly when the doubling wraps to 0, i.e. at A = 2^(n-1);
* a "complement" arc A -> (2^n - 1) - (2A mod 2^n), labeled 1 and
  drawn red.

Reading off the arc labels around a Hamiltonian cycle yields a binary
sequence of period 2^n - 1 in which every nonzero n-bit window occurs
exactly once, and conversely each such sequence traces a Hamiltonian
cycle.  Exhaustive cycle enumeration is exponential and therefore sits
behind a guard: orders above the configured ceiling (environment
variable MDBS_EXHAUSTIVE_MAX, default 6) are refused unless explicitly
overridden.
"""

import os

from .seqkit import BitSequence

#: Environment variable holding the exhaustive-enumeration ceiling.
EXHAUSTIVE_MAX_ENV = 'MDBS_EXHAUSTIVE_MAX'
DEFAULT_EXHAUSTIVE_MAX = 6

Vertex = int


class GuardRefusal(RuntimeError):
    """Raised when an exponential enumeration exceeds the guard ceiling."""


def exhaustive_limit():
    """Current ceiling for exhaustive enumeration."""
    raw = os.environ.get(EXHAUSTIVE_MAX_ENV, '')
    try:
        return int(raw)
    except ValueError:
        return DEFAULT_EXHAUSTIVE_MAX


def _check_order(n, minimum=2):
    if not isinstance(n, int) or n < minimum:
        raise ValueError(f'order n must be an integer >= {minimum}')


def _check_vertex(v, n):
    if not isinstance(v, int) or not 1 <= v <= (1 << n) - 1:
        raise ValueError(f'vertex {v!r} outside 1..{(1 << n) - 1}')


def successors(a, n):
    """Successor pair (double, complement) of vertex a; double may be None."""
    _check_order(n)
    _check_vertex(a, n)
    d = (2 * a) % (1 << n)
    return (d if d else None, (1 << n) - 1 - d)


class GammaGraph:
    """The full digraph of some order n, with arc lookup tables.

    `double[a]` and `comp[a]` give the arc targets of vertex a (index 0
    is padding); a missing double arc is stored as None.
    """

    __slots__ = ('n', 'double', 'comp')

    def __init__(self, n):
        _check_order(n, minimum=3)
        size = 1 << n
        double = [None] * size
        comp = [None] * size
        for a in range(1, size):
            double[a], comp[a] = successors(a, n)
        object.__setattr__(self, 'n', n)
        object.__setattr__(self, 'double', tuple(double))
        object.__setattr__(self, 'comp', tuple(comp))

    def __setattr__(self, name, v):
        raise AttributeError('GammaGraph is immutable')

    @property
    def vertices(self):
        return range(1, 1 << self.n)

    def arcs(self):
        """All arcs as (source, target, label) with label 0 = double."""
        for a in self.vertices:
            if self.double[a] is not None:
                yield (a, self.double[a], 0)
            yield (a, self.comp[a], 1)

    @property
    def arc_count(self):
        return 2 * ((1 << self.n) - 1) - 1

    def loop_vertex(self):
        """The vertex carrying a self-loop, or None if there is none."""
        for a in self.vertices:
            if self.double[a] == a or self.comp[a] == a:
                return a
        return None

    def __repr__(self):
        return f'GammaGraph(n={self.n})'


def build(n):
    """Construct the graph of order n >= 3."""
    return GammaGraph(n)


class HamCycle:
    """A Hamiltonian cycle, stored in a fixed rotation.

    Construction validates length, distinctness, and that every
    consecutive pair (including the wrap-around) is an arc.  Equality
    and hashing are rotation-invariant; `canonical()` returns the
    rotation starting at the all-ones vertex 2^n - 1.
    """

    __slots__ = ('vertices', 'n', '_canon')

    def __init__(self, vertices, n=None):
        vertices = tuple(vertices)
        if n is None:
            n = (len(vertices) + 1).bit_length() - 1
        _check_order(n, minimum=2)
        size = (1 << n) - 1
        if len(vertices) != size:
            raise ValueError(
                f'cycle length {len(vertices)} != {size} for order {n}')
        if len(set(vertices)) != size:
            raise ValueError('cycle vertices are not distinct')
        for i, a in enumerate(vertices):
            _check_vertex(a, n)
            b = vertices[(i + 1) % size]
            if b not in successors(a, n):
                raise ValueError(f'({a}, {b}) is not an arc at order {n}')
        top = vertices.index(size)
        object.__setattr__(self, 'vertices', vertices)
        object.__setattr__(self, 'n', n)
        object.__setattr__(self, '_canon', vertices[top:] + vertices[:top])

    def __setattr__(self, name, v):
        raise AttributeError('HamCycle is immutable')

    def canonical(self):
        """The same cycle rotated to start at the all-ones vertex."""
        if self.vertices == self._canon:
            return self
        return HamCycle(self._canon, self.n)

    def __len__(self):
        return len(self.vertices)

    def __iter__(self):
        return iter(self.vertices)

    def __eq__(self, other):
        if isinstance(other, HamCycle):
            return self.n == other.n and self._canon == other._canon
        return NotImplemented

    def __hash__(self):
        return hash((self.n, self._canon))

    def __repr__(self):
        return f'HamCycle({self.vertices})'


def walk_of_generator(g, n):
    """Vertex walk of a generator polynomial g.

    Step i is (x^i * g mod F) mod x^n read as a vertex, for
    i = 0 .. 2^n - 2, where F is the all-ones polynomial of degree
    2^n - 2.  Consecutive steps are always joined by an arc; the walk
    is a Hamiltonian cycle exactly for valid cycle generators.
    """
    from . import gf2poly

    _check_order(n)
    f = int(gf2poly.build_F(n))
    w = gf2poly._mod(gf2poly._val(g), f)
    if w == 0:
        raise ValueError('generator reduces to zero')
    size = (1 << n) - 1
    mask = (1 << n) - 1
    top = f.bit_length() - 1
    walk = []
    for _ in range(size):
        v = w & mask
        if v == 0:
            raise ValueError('walk leaves the nonzero vertex set')
        walk.append(v)
        w <<= 1
        if w >> top:
            w ^= f
    return walk


def cycle_to_sequence(cycle):
    """Arc labels around a cycle, starting from its stored first vertex."""
    n = cycle.n
    verts = cycle.vertices
    bits = []
    for i, a in enumerate(verts):
        b = verts[(i + 1) % len(verts)]
        d, c = successors(a, n)
        if b == d:
            bits.append(0)
        elif b == c:
            bits.append(1)
        else:
            raise ValueError(f'({a}, {b}) is not an arc at order {n}')
    return BitSequence(bits)


def cycle_from_sequence(s, n=None):
    """Rebuild the Hamiltonian cycle whose arc labels are s.

    Inverse of cycle_to_sequence: vertex i is the XOR of the masks
    ((2^n - 1) << k) mod 2^n selected by the n labels preceding
    position i, so the first vertex emits label s[0].
    """
    s = BitSequence(s) if not isinstance(s, BitSequence) else s
    if n is None:
        n = (s.period + 1).bit_length() - 1
    _check_order(n)
    size = (1 << n) - 1
    if s.period != size:
        raise ValueError(f'period {s.period} != {size} for order {n}')
    masks = [(size << k) % (1 << n) for k in range(n)]
    verts = []
    for i in range(size):
        v = 0
        for k in range(n):
            if s.bits[(i - 1 - k) % size]:
                v ^= masks[k]
        verts.append(v)
    return HamCycle(verts, n)


def enumerate_hamiltonian(n, limit=None, override_guard=False):
    """All Hamiltonian cycles of order n, canonically rotated.

    Depth-first search from the all-ones start vertex, exploring the
    double arc before the complement arc, so the stream order is
    deterministic.  `limit` truncates the stream.  Orders above the
    exhaustive guard (see exhaustive_limit) raise GuardRefusal unless
    `override_guard` is set.
    """
    _check_order(n, minimum=3)
    ceiling = exhaustive_limit()
    if n > ceiling and not override_guard:
        raise GuardRefusal(
            f'exhaustive enumeration at order {n} exceeds the guard '
            f'ceiling {ceiling}; raise {EXHAUSTIVE_MAX_ENV} or override '
            f'to accept the exponential run time')
    graph = build(n)
    size = (1 << n) - 1
    start = size

    def _stream():
        remaining = limit
        if remaining is not None and remaining <= 0:
            return
        double, comp = graph.double, graph.comp
        used = bytearray(size + 1)
        used[start] = 1
        path = [start]

        def _rec():
            a = path[-1]
            if len(path) == size:
                if comp[a] == start or double[a] == start:
                    yield HamCycle(tuple(path), n)
                return
            for b in (double[a], comp[a]):
                if b and not used[b]:
                    used[b] = 1
                    path.append(b)
                    yield from _rec()
                    path.pop()
                    used[b] = 0

        for cycle in _rec():
            yield cycle
            if remaining is not None:
                remaining -= 1
                if remaining <= 0:
                    return

    return _stream()


def dot_export(graph, highlight=None):
    """Graphviz text for the graph; arcs of `highlight` are bolded.

    Double arcs come out as blue with label 0, complement arcs red
    with label 1.  `highlight` may be a HamCycle or an ordered vertex
    sequence; its arcs (including the wrap-around) get style="bold".
    """
    bold = set()
    if highlight is not None:
        verts = tuple(highlight)
        for i, a in enumerate(verts):
            bold.add((a, verts[(i + 1) % len(verts)]))
    lines = [f'digraph gamma_{graph.n} {{']
    for a, b, label in graph.arcs():
        color = 'blue' if label == 0 else 'red'
        attrs = f'label="{label}", color="{color}"'
        if (a, b) in bold:
            attrs += ', style="bold"'
        lines.append(f'  {a} -> {b} [{attrs}];')
    lines.append('}')
    return '\n'.join(lines) + '\n'
