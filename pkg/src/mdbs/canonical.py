"""Canonical generators and minimal polynomials of Hamiltonian cycles.

Every Hamiltonian cycle H of order n is traced by exactly one
generator polynomial c_H with constant term 1 and degree 2^n - n - 2:
the walk (x^i * c_H mod F) mod x^n visits the cycle's vertices in
order, where F is the all-ones polynomial of degree 2^n - 2.  The
generator is recovered by anchoring the all-ones vertex: its window is
forced, and each later step of the walk exposes exactly one unknown
coefficient, because only the top power x^(2^n - 2) folds back onto
the low window when reduced mod F.  The recovery loop doubles as
verification, checking every remaining window of the regenerated walk
against the cycle.

The minimal polynomial of the cycle's label sequence follows from the
reduced fraction c_H / F: with d = gcd(c_H, F) and f = F / d, the
label sequence read around the cycle is annihilated by f, and the
series expansion of c_H / F is annihilated by the reciprocal f*.  The
linear complexity ("span") is deg(f), and an independent
Berlekamp-Massey pass is carried in every report as a cross-check.
"""

from collections import Counter
from typing import NamedTuple

from . import gf2poly
from .gf2poly import Gf2Poly, build_F
from .gamma import cycle_to_sequence, enumerate_hamiltonian
from .seqkit import berlekamp_massey


class MinPolyReport(NamedTuple):
    """Everything derived from one cycle's canonical generator."""

    c_h: Gf2Poly
    d: Gf2Poly
    f: Gf2Poly
    f_star: Gf2Poly
    span: int
    bm_check: Gf2Poly


def generator_shift(g, k, n):
    """x^k * g mod F: the generator of the same cycle rotated k steps."""
    if gf2poly._val(g) == 0:
        raise ValueError('generator must be nonzero')
    if k < 0:
        raise ValueError('shift must be nonnegative')
    f = build_F(n)
    return gf2poly.mul_mod(gf2poly.pow_mod(2, k, f), g, f)


def canonical_generator(cycle):
    """The unique generator with constant term 1 of a Hamiltonian cycle.

    Walk position of the all-ones vertex anchors the alignment; one
    unknown coefficient is then read off per step, after which the
    remaining steps verify the fully regenerated walk.  Returns a
    polynomial of degree 2^n - n - 2 with constant term 1.
    """
    n = cycle.n
    size = (1 << n) - 1      # vertex count, also the all-ones vertex
    f = int(build_F(n))
    deg_f = size - 1
    deg_c = size - n - 1
    verts = cycle.vertices
    anchor = verts.index(size)
    c = (1 << deg_c) | 1
    topstep = (1 << deg_f) - 1   # x^deg_f mod F = 1 + x + ... + x^(deg_f-1)
    mask = (1 << n) - 1
    w = gf2poly._mod(c << n, f)  # x^(n+k) * (known part of c) mod F at k=0
    for k in range(1, size):
        w <<= 1
        if w >> deg_f:
            w ^= f
        target = verts[(anchor + k) % size]
        low = w & mask
        i = deg_c - k
        if 1 <= i < deg_c:
            # Coefficient i is exposed now: if set, it contributes
            # x^deg_f, which reduces to the all-ones pattern.
            if low ^ mask == target:
                c |= 1 << i
                w ^= topstep
            elif low != target:
                raise RuntimeError(
                    'internal error: generator recovery lost the walk')
        elif low != target:
            raise RuntimeError(
                'internal error: regenerated walk disagrees with the cycle')
    return Gf2Poly(c)


def minimal_polynomial_of_cycle(cycle):
    """Full minimal-polynomial report for one Hamiltonian cycle.

    d divides out the common factor of the canonical generator and F,
    f = F / d annihilates the cycle's label sequence, and f* (the
    reciprocal) annihilates the series expansion of c_H / F.  bm_check
    is the Berlekamp-Massey minimal polynomial of the label sequence,
    which must equal f.
    """
    n = cycle.n
    c_h = canonical_generator(cycle)
    f = build_F(n)
    d = gf2poly.gcd(c_h, f)
    quotient, rem = gf2poly.div_rem(f, d)
    if rem != 0:
        raise RuntimeError('internal error: gcd does not divide F')
    bm = berlekamp_massey(cycle_to_sequence(cycle))
    return MinPolyReport(
        c_h=c_h,
        d=d,
        f=quotient,
        f_star=gf2poly.reciprocal(quotient),
        span=quotient.degree,
        bm_check=bm.minimal_polynomial,
    )


def spans_of_all_cycles(n, override_guard=False):
    """Multiset of spans over every Hamiltonian cycle of order n.

    Returns a Counter mapping span -> number of cycles.  Subject to the
    same exhaustive guard as cycle enumeration.
    """
    f = build_F(n)
    deg_f = f.degree
    counts = Counter()
    for cycle in enumerate_hamiltonian(n, override_guard=override_guard):
        c_h = canonical_generator(cycle)
        d = gf2poly.gcd(c_h, f)
        counts[deg_f - d.degree] += 1
    return counts
