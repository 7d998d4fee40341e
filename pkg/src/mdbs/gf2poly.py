"""Exact arithmetic for polynomials over GF(2).

A polynomial a_d x^d + ... + a_1 x + a_0 is stored bit-packed in a
nonnegative Python integer: bit i holds the coefficient of x^i, so the
polynomial equals the integer A = sum(a_i * 2**i).  Addition is XOR,
and every nonzero polynomial is monic, which keeps gcd normalization
trivial.

Three interchangeable text forms are supported:

* symbolic   -- "x^10+x^8+x^5+x+1"
* binary     -- coefficient string, most significant first: "10100100011"
* hex        -- the integer encoding with an 0x prefix: "0x523"

The module also builds the all-ones polynomial of degree 2**n - 2 (the
product of every irreducible binary polynomial whose degree divides n
and exceeds 1), expands rational power series, computes multiplicative
orders, and counts irreducible polynomials by degree.
"""

import math

#: Trial-division effort allowed while factoring order multiples.  The
#: default comfortably handles factor degrees up to about 20.
DEFAULT_FACTOR_BUDGET = 1 << 20


class OrderUndeterminedError(ArithmeticError):
    """Raised when order() exhausts its factoring budget.

    The computation refuses to guess: either the exact order is
    returned or this error is raised.
    """


def _val(a):
    """Coerce a Gf2Poly or a nonnegative int to the packed int form."""
    if isinstance(a, Gf2Poly):
        return a.value
    if isinstance(a, int):
        if a < 0:
            raise ValueError('negative integer is not a GF(2) polynomial')
        return a
    raise TypeError(f'expected Gf2Poly or int, got {type(a).__name__}')


def _degree(a):
    return a.bit_length() - 1


def _mul(a, b):
    if a < b:
        a, b = b, a
    c = 0
    while b:
        if b & 1:
            c ^= a
        a <<= 1
        b >>= 1
    return c


def _divmod(a, b):
    if b == 0:
        raise ZeroDivisionError('division by zero polynomial')
    m = _degree(a)
    n = _degree(b)
    if m < n:
        return 0, a
    q = 0
    b <<= m - n
    for i in range(m - n + 1):
        q <<= 1
        if (a >> (m - i)) & 1:
            a ^= b
            q ^= 1
        b >>= 1
    return q, a


def _mod(a, b):
    return _divmod(a, b)[1]


def _gcd(a, b):
    while b:
        a, b = b, _mod(a, b)
    return a


def _powmod(a, e, m):
    if m == 0:
        raise ZeroDivisionError('zero modulus')
    if e < 0:
        raise ValueError('negative exponent')
    r = 1
    a = _mod(a, m)
    while e:
        if e & 1:
            r = _mod(_mul(r, a), m)
        a = _mod(_mul(a, a), m)
        e >>= 1
    return r


def _derivative(a):
    """Formal derivative: keep odd-exponent terms, drop one power of x."""
    d = 0
    i = 1
    while (1 << i) <= a:
        if (a >> i) & 1:
            d |= 1 << (i - 1)
        i += 2
    return d


class Gf2Poly:
    """Immutable polynomial over GF(2), packed into an int.

    The degree of the zero polynomial is reported as -1, the usual
    "minus infinity" marker collapsed onto an int.
    """

    __slots__ = ('value',)

    def __init__(self, value=0):
        if isinstance(value, str):
            value = _parse(value)
        else:
            value = _val(value)
        object.__setattr__(self, 'value', value)

    def __setattr__(self, name, v):
        raise AttributeError('Gf2Poly is immutable')

    @property
    def degree(self):
        """Degree of the polynomial (-1 for the zero polynomial)."""
        return _degree(self.value)

    def coefficient(self, i):
        """Coefficient of x^i as 0 or 1."""
        return (self.value >> i) & 1 if i >= 0 else 0

    def __int__(self):
        return self.value

    def __index__(self):
        return self.value

    def __bool__(self):
        return bool(self.value)

    def __eq__(self, other):
        if isinstance(other, Gf2Poly):
            return self.value == other.value
        if isinstance(other, int):
            return self.value == other
        return NotImplemented

    def __hash__(self):
        return hash(self.value)

    def __add__(self, other):
        return Gf2Poly(self.value ^ _val(other))

    __radd__ = __add__
    __sub__ = __add__
    __rsub__ = __add__

    def __mul__(self, other):
        return Gf2Poly(_mul(self.value, _val(other)))

    __rmul__ = __mul__

    def __mod__(self, other):
        return Gf2Poly(_mod(self.value, _val(other)))

    def __floordiv__(self, other):
        return Gf2Poly(_divmod(self.value, _val(other))[0])

    def __divmod__(self, other):
        q, r = _divmod(self.value, _val(other))
        return Gf2Poly(q), Gf2Poly(r)

    def __repr__(self):
        return _to_symbolic(self.value)


def add(a, b):
    """Sum of polynomials a and b (coefficientwise XOR)."""
    return Gf2Poly(_val(a) ^ _val(b))


def mul(a, b):
    """Product of polynomials a and b (shift-and-xor schoolbook)."""
    return Gf2Poly(_mul(_val(a), _val(b)))


def mul_mod(a, b, m):
    """Product of a and b reduced modulo the nonzero polynomial m."""
    m = _val(m)
    if m == 0:
        raise ZeroDivisionError('zero modulus')
    return Gf2Poly(_mod(_mul(_val(a), _val(b)), m))


def pow_mod(a, e, m):
    """a raised to the integer power e, modulo the nonzero polynomial m."""
    return Gf2Poly(_powmod(_val(a), e, _val(m)))


def div_rem(a, b):
    """Quotient and remainder of a divided by the nonzero polynomial b."""
    q, r = _divmod(_val(a), _val(b))
    return Gf2Poly(q), Gf2Poly(r)


def gcd(a, b):
    """Greatest common divisor of a and b; gcd(a, 0) = a.

    Over GF(2) every nonzero polynomial is monic, so no normalization
    step is needed.  Both arguments zero is rejected.
    """
    a, b = _val(a), _val(b)
    if a == 0 and b == 0:
        raise ValueError('gcd(0, 0) is undefined')
    return Gf2Poly(_gcd(a, b))


def derivative(a):
    """Formal derivative of a."""
    return Gf2Poly(_derivative(_val(a)))


def reciprocal(a):
    """Coefficient-reversed polynomial x^deg(a) * a(1/x).

    Requires a(0) = 1 so that the degree is preserved and the
    operation is an involution.
    """
    a = _val(a)
    if not a & 1:
        raise ValueError('reciprocal requires a nonzero constant term')
    d = _degree(a)
    r = 0
    for i in range(d + 1):
        if (a >> i) & 1:
            r |= 1 << (d - i)
    return Gf2Poly(r)


def build_F(n):
    """All-ones polynomial 1 + x + ... + x^(2^n - 2) for n >= 2.

    Equals (x^(2^n) + x) / (x * (x + 1)), i.e. the product of every
    irreducible binary polynomial whose degree divides n and is not 1.
    It is self-reciprocal and squarefree.
    """
    if n < 2:
        raise ValueError('build_F requires n >= 2')
    return Gf2Poly((1 << ((1 << n) - 1)) - 1)


def expand_series(g, f, count):
    """First `count` coefficients of the power series g(x)/f(x).

    Requires f(0) = 1 and deg(g) < deg(f).  Computed by long division
    from the constant term up: the next series bit is the current
    remainder's constant term, after which f is subtracted and one
    power of x is peeled off.
    """
    from .seqkit import BitSequence

    g, f = _val(g), _val(f)
    if not f & 1:
        raise ValueError('series expansion requires f(0) = 1')
    if _degree(g) >= _degree(f):
        raise ValueError('series expansion requires deg(g) < deg(f)')
    if count < 1:
        raise ValueError('count must be positive')
    bits = []
    r = g
    for _ in range(count):
        bit = r & 1
        bits.append(bit)
        if bit:
            r ^= f
        r >>= 1
    return BitSequence(bits)


def _distinct_factor_degrees(a):
    """Degrees d for which a has an irreducible factor of degree d.

    Uses the splitting of x^(2^d) - x: its gcd with a collects every
    distinct factor of degree dividing d, so a fresh degree shows up
    as a nontrivial gcd at its own d.
    """
    degrees = []
    seen = 1
    xq = 2  # the polynomial x
    for d in range(1, _degree(a) + 1):
        xq = _powmod(xq, 2, a)
        g = _gcd(a, xq ^ 2)
        if _degree(_divmod(g, _gcd(g, seen))[0]) > 0:
            degrees.append(d)
            seen = _mul(_divmod(seen, _gcd(seen, g))[0], g)
        if sum(degrees) >= _degree(a):
            break
    return degrees


def _factor_int(m, budget):
    """Prime factorization of m by trial division, within budget tries."""
    factors = {}
    tried = 0
    c = 2
    while m > 1:
        if c * c > m:
            factors[m] = factors.get(m, 0) + 1
            break
        if tried >= budget:
            raise OrderUndeterminedError(
                f'order undetermined: factoring budget of {budget} trial '
                f'divisors exhausted with cofactor {m} remaining')
        tried += 1
        while m % c == 0:
            factors[c] = factors.get(c, 0) + 1
            m //= c
        c += 1 if c == 2 else 2
    return factors


def order(a, factor_budget=DEFAULT_FACTOR_BUDGET):
    """Least lambda >= 1 such that a(x) divides x^lambda - 1.

    Requires a(0) = 1.  A multiple of the order is assembled from the
    degrees of a's irreducible factors (each contributes 2^d - 1) and a
    power of two covering repeated factors; that multiple is factored
    by trial division and reduced prime by prime.  If the integer
    factorization exceeds `factor_budget` trial divisors, the explicit
    OrderUndeterminedError is raised rather than a wrong answer
    returned.
    """
    a = _val(a)
    if not a & 1:
        raise ValueError('order requires a nonzero constant term')
    if a == 1:
        return 1
    m = 1
    for d in _distinct_factor_degrees(a):
        m = math.lcm(m, (1 << d) - 1)
    # Repeated factors multiply the order by the next power of two at
    # or above the multiplicity; a power covering deg(a) is enough and
    # any excess twos are stripped in the descent below.
    m <<= max(0, _degree(a) - 1).bit_length()
    if _powmod(2, m, a) != 1:
        raise ArithmeticError('internal error: order multiple is wrong')
    for q in _factor_int(m, factor_budget):
        while m % q == 0 and _powmod(2, m // q, a) == 1:
            m //= q
    return m


def _mobius(n):
    """Moebius function of a positive integer."""
    mu = 1
    c = 2
    while c * c <= n:
        if n % c == 0:
            n //= c
            if n % c == 0:
                return 0
            mu = -mu
        c += 1 if c == 2 else 2
    if n > 1:
        mu = -mu
    return mu


def irreducible_count(n):
    """Number of irreducible binary polynomials of degree n.

    The classical count (1/n) * sum over j | n of mu(j) * 2^(n/j).
    """
    if n < 1:
        raise ValueError('irreducible_count requires n >= 1')
    total = sum(_mobius(j) * (1 << (n // j)) for j in range(1, n + 1)
                if n % j == 0)
    return total // n


def _parse(text):
    """Parse any of the three text forms into the packed int."""
    s = ''.join(text.split())
    if not s:
        raise ValueError('empty polynomial text')
    if s[:2] in ('0x', '0X'):
        return int(s[2:], 16)
    if set(s) <= {'0', '1'}:
        return int(s, 2)  # binary form, most significant coefficient first
    a = 0
    for term in s.split('+'):
        if term == '0':
            t = 0
        elif term == '1':
            t = 1
        elif term == 'x':
            t = 2
        elif term.startswith('x^'):
            t = 1 << int(term[2:])
        else:
            raise ValueError(f'bad polynomial term {term!r}')
        if a & t:
            raise ValueError(f'repeated polynomial term {term!r}')
        a ^= t
    return a


def parse(text):
    """Parse symbolic, msb-first binary, or 0x-prefixed hex text."""
    return Gf2Poly(_parse(text))


def _to_symbolic(a):
    if a == 0:
        return '0'
    terms = []
    for i in range(_degree(a), -1, -1):
        if (a >> i) & 1:
            terms.append('1' if i == 0 else 'x' if i == 1 else f'x^{i}')
    return '+'.join(terms)


def to_text(a, fmt='symbolic'):
    """Render a in the requested text form (symbolic, binary, or hex)."""
    a = _val(a)
    if fmt == 'symbolic':
        return _to_symbolic(a)
    if fmt == 'binary':
        return format(a, 'b') if a else '0'
    if fmt == 'hex':
        return format(a, '#x')
    raise ValueError(f'unknown polynomial format {fmt!r}')
