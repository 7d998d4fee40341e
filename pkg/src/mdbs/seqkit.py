"""Binary sequence utilities for periodic and window-complete sequences.

A BitSequence is one period of a periodic binary sequence.  The tools
here recognize de Bruijn sequences of order n (period 2^n, every
length-n window exactly once) and their modified counterparts (period
2^n - 1, every nonzero window exactly once), convert between the two by
removing or restoring one zero inside the longest zero run, measure
linear complexity with the Berlekamp-Massey algorithm, and run the
matching linear feedback shift register.

Minimal polynomials follow the characteristic convention: a sequence s
is annihilated by f(x) = x^m + f_(m-1) x^(m-1) + ... + f_0 in the sense
that s_(k+m) = sum(f_i * s_(k+i)), so deg(f) equals the linear
complexity and f(0) = 1 for any periodic sequence.
"""

from typing import NamedTuple

from . import gf2poly
from .gf2poly import Gf2Poly


class BitSequence:
    """One period of a binary sequence, stored as a tuple of 0/1 ints."""

    __slots__ = ('bits',)

    def __init__(self, bits):
        if isinstance(bits, str):
            bits = _parse_bits(bits)
        bits = tuple(bits)
        if not bits:
            raise ValueError('a sequence needs at least one bit')
        if any(b not in (0, 1) for b in bits):
            raise ValueError('sequence bits must be 0 or 1')
        object.__setattr__(self, 'bits', bits)

    def __setattr__(self, name, v):
        raise AttributeError('BitSequence is immutable')

    @property
    def period(self):
        return len(self.bits)

    def __len__(self):
        return len(self.bits)

    def __iter__(self):
        return iter(self.bits)

    def __getitem__(self, i):
        return self.bits[i]

    def __eq__(self, other):
        if isinstance(other, BitSequence):
            return self.bits == other.bits
        if isinstance(other, tuple):
            return self.bits == other
        return NotImplemented

    def __hash__(self):
        return hash(self.bits)

    def to_text(self, fmt='compact'):
        """Render as '0101...' (compact) or '(0,1,0,1,...)' (tuple)."""
        if fmt == 'compact':
            return ''.join(str(b) for b in self.bits)
        if fmt == 'tuple':
            return '(' + ','.join(str(b) for b in self.bits) + ')'
        raise ValueError(f'unknown sequence format {fmt!r}')

    def __repr__(self):
        return f"BitSequence('{self.to_text()}')"


class BmResult(NamedTuple):
    """Outcome of Berlekamp-Massey: complexity and minimal polynomial."""

    linear_complexity: int
    minimal_polynomial: Gf2Poly


def _parse_bits(text):
    s = ''.join(text.split())
    if s.startswith('(') and s.endswith(')'):
        s = s[1:-1]
    if ',' in s:
        parts = [p for p in s.split(',') if p]
    else:
        parts = list(s)
    try:
        return tuple(int(p) for p in parts)
    except ValueError:
        raise ValueError(f'bad sequence text {text!r}') from None


def parse_sequence(text):
    """Parse '0101...' or '(0,1,0,1,...)' into a BitSequence."""
    return BitSequence(_parse_bits(text))


def shift(s, k):
    """Left-rotate one period of s by k positions."""
    s = BitSequence(s) if not isinstance(s, BitSequence) else s
    k %= s.period
    return BitSequence(s.bits[k:] + s.bits[:k])


def canonical_rotation(s):
    """Lexicographically least rotation of s, for rotation-blind tests."""
    s = BitSequence(s) if not isinstance(s, BitSequence) else s
    best = min(s.bits[k:] + s.bits[:k] for k in range(s.period))
    return BitSequence(best)


def same_cycle(a, b):
    """True when a and b are rotations of each other."""
    a = BitSequence(a) if not isinstance(a, BitSequence) else a
    b = BitSequence(b) if not isinstance(b, BitSequence) else b
    return (a.period == b.period
            and canonical_rotation(a).bits == canonical_rotation(b).bits)


def berlekamp_massey(s):
    """Linear complexity and minimal polynomial of the periodic s.

    Two periods are processed, which pins down the shortest LFSR for
    any sequence of linear complexity at most the period.  The
    connection polynomial is built with the classic discrepancy update
    and then coefficient-reversed into the monic characteristic form.
    """
    s = BitSequence(s) if not isinstance(s, BitSequence) else s
    bits = s.bits + s.bits
    c, b = 1, 1  # connection polynomials, bit j = coefficient of D^j
    length, m = 0, 1
    for i, bit in enumerate(bits):
        d = bit
        for j in range(1, length + 1):
            d ^= ((c >> j) & 1) & bits[i - j]
        if d == 0:
            m += 1
        elif 2 * length <= i:
            c, b = c ^ (b << m), c
            length = i + 1 - length
            m = 1
        else:
            c ^= b << m
            m += 1
    poly = 0
    for j in range(length + 1):
        if (c >> j) & 1:
            poly |= 1 << (length - j)
    return BmResult(length, Gf2Poly(poly))


def lfsr_generate(charpoly, seed, count):
    """First `count` bits of the LFSR run with the given recursion.

    charpoly is the characteristic polynomial (degree m >= 1, constant
    term 1) and seed supplies the first m bits.
    """
    f = gf2poly._val(charpoly)
    m = f.bit_length() - 1
    if m < 1:
        raise ValueError('charpoly must have degree at least 1')
    if not f & 1:
        raise ValueError('charpoly must have constant term 1')
    seed = BitSequence(seed) if not isinstance(seed, BitSequence) else seed
    if seed.period != m:
        raise ValueError(f'seed length {seed.period} != degree {m}')
    if count < 1:
        raise ValueError('count must be positive')
    bits = list(seed.bits)
    taps = [i for i in range(m) if (f >> i) & 1]
    for k in range(count - m):
        nxt = 0
        for i in taps:
            nxt ^= bits[k + i]
        bits.append(nxt)
    return BitSequence(bits[:count])


def _windows(bits, n):
    """All cyclic length-n windows as integers, first bit most significant."""
    period = len(bits)
    doubled = bits + bits[:n]
    out = []
    for i in range(period):
        w = 0
        for j in range(n):
            w = (w << 1) | doubled[i + j]
        out.append(w)
    return out


def is_de_bruijn(s, n):
    """True when s has period 2^n and every n-window appears exactly once."""
    if n < 2:
        raise ValueError('window order must be at least 2')
    s = BitSequence(s) if not isinstance(s, BitSequence) else s
    if s.period != 1 << n:
        return False
    return len(set(_windows(list(s.bits), n))) == s.period


def is_modified_de_bruijn(s, n):
    """True when s has period 2^n - 1 and every nonzero n-window appears once."""
    if n < 2:
        raise ValueError('window order must be at least 2')
    s = BitSequence(s) if not isinstance(s, BitSequence) else s
    if s.period != (1 << n) - 1:
        return False
    windows = _windows(list(s.bits), n)
    return 0 not in windows and len(set(windows)) == s.period


def _zero_run_start(bits, run):
    """Start index of the unique cyclic run of exactly `run` zeros."""
    period = len(bits)
    for q in range(period):
        if (bits[q - 1] == 1
                and all(bits[(q + j) % period] == 0 for j in range(run))):
            return q
    raise ValueError('required zero run not found')


def modify(s, n):
    """Drop one zero from the longest zero run of a de Bruijn sequence.

    The period is first rotated so the longest zero run (length exactly
    n) starts the period; the result keeps that rotation and is the
    modified sequence of period 2^n - 1.
    """
    s = BitSequence(s) if not isinstance(s, BitSequence) else s
    if not is_de_bruijn(s, n):
        raise ValueError(f'input is not a de Bruijn sequence of order {n}')
    q = _zero_run_start(list(s.bits), n)
    rotated = shift(s, q)
    return BitSequence(rotated.bits[1:])


def debruijnize(s, n):
    """Restore the dropped zero of a modified de Bruijn sequence.

    Inverse of modify up to rotation: the longest zero run (length
    n - 1) is rotated to the front and one zero is prepended.
    """
    s = BitSequence(s) if not isinstance(s, BitSequence) else s
    if not is_modified_de_bruijn(s, n):
        raise ValueError(
            f'input is not a modified de Bruijn sequence of order {n}')
    q = _zero_run_start(list(s.bits), n - 1)
    rotated = shift(s, q)
    return BitSequence((0,) + rotated.bits)


def possible_spans(n):
    """Achievable degree sums of products of irreducible factors.

    Every count a_d of degree-d irreducible polynomials with d | n,
    d != 1, may range from 0 to the number available, contributing
    a_d * d to the total; the set of all reachable totals is returned
    (0 comes from the empty product, 2^n - 2 from taking everything).
    """
    if n < 2:
        raise ValueError('possible_spans requires n >= 2')
    divisors = [d for d in range(2, n + 1) if n % d == 0]
    spans = {0}
    for d in divisors:
        count = gf2poly.irreducible_count(d)
        spans = {s + a * d for s in spans for a in range(count + 1)}
    return spans


def check_de_bruijn_span_form(s, n):
    """Check the minimal-polynomial shape of a de Bruijn sequence.

    For a de Bruijn sequence of order n >= 3 the minimal polynomial
    must be (x + 1)^z with 2^(n-1) + 1 <= z <= 2^n.  Returns whether
    that holds for s; s failing to be de Bruijn is a ValueError.
    """
    if n < 3:
        raise ValueError('span-form check requires n >= 3')
    s = BitSequence(s) if not isinstance(s, BitSequence) else s
    if not is_de_bruijn(s, n):
        raise ValueError(f'input is not a de Bruijn sequence of order {n}')
    result = berlekamp_massey(s)
    z = result.linear_complexity
    if not (1 << (n - 1)) + 1 <= z <= (1 << n):
        return False
    binomial = Gf2Poly(1)
    for _ in range(z):
        binomial = binomial * 3  # multiply by x + 1
    return result.minimal_polynomial == binomial
