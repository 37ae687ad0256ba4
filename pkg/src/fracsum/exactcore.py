"""Exact reference evaluators for fractional-part sums.

Everything in this module is exact: inputs are Python ints (arbitrary
precision), results are ints or `fractions.Fraction` in canonical form.
These are the definition-level implementations; the sublinear evaluators
in `fastsum` are tested for exact equality against them.

No floating point is used anywhere, including for upper summation limits
like floor(n^(1/beta)), which go through `introot`.
"""

import enum
from fractions import Fraction

from .errors import DomainError

__all__ = [
    "SumKind",
    "frac",
    "frac_diff",
    "interval_count",
    "in_boundary",
    "f_s_naive",
    "phi_s_naive",
    "phi_partial",
    "poussin_sum",
    "pillichshammer_sum",
    "harmonic",
    "introot",
]


class SumKind(enum.Enum):
    """The sum families handled by this package, keyed by CLI name.

    FRAC_POWER         f_s(n)   = sum_{x=1..n} {n/x} x^s
    TRANSFORM          Phi_s(n) = sum_{x=1..n-1} [{n/x} - {n/(x+1)}] x^s
    DIVISOR_WEIGHTED   T_s(n)   = sum_{x=1..n} floor(n/x) x^s
    POUSSIN            sum_{x=1..floor((n-1)/w)} {n/(wx+1)}
    PILLICHSHAMMER     sum_{x=1..floor(n^(1/beta))} {n/x^beta}
    """

    FRAC_POWER = "f"
    TRANSFORM = "phi"
    DIVISOR_WEIGHTED = "t"
    POUSSIN = "poussin"
    PILLICHSHAMMER = "pillichshammer"


def _check_n(n: int) -> None:
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")


def _check_s(s: int) -> None:
    if s < 0:
        raise DomainError(f"s must be a non-negative integer, got {s}")


def frac(n: int, x: int) -> Fraction:
    """Fractional part {n/x} = (n mod x)/x, exactly. Requires x >= 1."""
    if x < 1:
        raise DomainError(f"x must be >= 1 (x=0 divides by zero), got {x}")
    if n < 0:
        raise DomainError(f"n must be >= 0, got {n}")
    return Fraction(n % x, x)


def frac_diff(n: int, x: int) -> Fraction:
    """{n/x} - {n/(x+1)}; equals n/(x(x+1)) - interval_count(n, x)."""
    return frac(n, x) - frac(n, x + 1)


def interval_count(n: int, x: int) -> int:
    """Number of integers in the half-open interval (n/(x+1), n/x].

    This is floor(n/x) - floor(n/(x+1)). The half-open convention (rather
    than the closed interval) is what makes the identity
    frac_diff(n, x) == n/(x(x+1)) - interval_count(n, x) hold for every
    input, including when x+1 divides n.
    """
    if x < 1:
        raise DomainError(f"x must be >= 1, got {x}")
    if n < 0:
        raise DomainError(f"n must be >= 0, got {n}")
    return n // x - n // (x + 1)


def in_boundary(n: int, x: int) -> bool:
    """True iff (n/(x+1), n/x] contains an integer, i.e. the quotient drops at x."""
    return interval_count(n, x) >= 1


def _sum_exact(terms) -> Fraction:
    # Chunked left fold. Same terms, same exact value; grouping additions
    # keeps the growing common denominator out of the per-term gcd path.
    total = Fraction(0)
    chunk = Fraction(0)
    k = 0
    for t in terms:
        chunk = chunk + t
        k += 1
        if k == 64:
            total += chunk
            chunk = Fraction(0)
            k = 0
    return total + chunk


def f_s_naive(n: int, s: int) -> Fraction:
    """f_s(n) = sum_{x=1..n} {n/x} x^s, exactly, in O(n) operations.

    For s >= 1 each term {n/x} x^s = (n mod x) x^(s-1) is an integer, so
    the result is an integer (returned as a Fraction with denominator 1).
    """
    _check_n(n)
    _check_s(s)
    if s == 0:
        return _sum_exact(Fraction(n % x, x) for x in range(1, n + 1))
    return Fraction(sum((n % x) * x ** (s - 1) for x in range(1, n + 1)))


def phi_s_naive(n: int, s: int) -> Fraction:
    """Phi_s(n) = sum_{x=1..n-1} [{n/x} - {n/(x+1)}] x^s, exactly, in O(n)."""
    _check_n(n)
    _check_s(s)

    def terms():
        prev = Fraction(0)  # {n/1} = 0
        for x in range(1, n):
            cur = Fraction(n % (x + 1), x + 1)
            yield (prev - cur) * x**s
            prev = cur

    return _sum_exact(terms())


def phi_partial(n: int, w: int, s: int) -> Fraction:
    """Partial transform sum_{x=1..w} [{n/x} - {n/(x+1)}] x^s for 0 <= w <= n-1.

    For s = 1 this is bounded by w in absolute value (the partial sums
    telescope against sum_{x<=w} {n/x}, which lies in [0, w]).
    """
    _check_n(n)
    _check_s(s)
    if w < 0 or w >= n:
        raise DomainError(f"w must satisfy 0 <= w <= n-1, got w={w}, n={n}")

    def terms():
        prev = Fraction(0)
        for x in range(1, w + 1):
            cur = Fraction(n % (x + 1), x + 1)
            yield (prev - cur) * x**s
            prev = cur

    return _sum_exact(terms())


def poussin_sum(n: int, w: int) -> Fraction:
    """sum {n/(wx+1)} over x = 1..floor((n-1)/w), exactly.

    The summation runs over the arithmetic progression wx+1; its average
    tends to the same (1 - gamma) limit for every w.
    """
    _check_n(n)
    if w < 1:
        raise DomainError(f"w must be >= 1, got {w}")
    top = (n - 1) // w
    return _sum_exact(Fraction(n % (w * x + 1), w * x + 1) for x in range(1, top + 1))


def pillichshammer_sum(n: int, beta: int) -> Fraction:
    """sum {n/x^beta} over x = 1..floor(n^(1/beta)), exactly, for integer beta >= 2.

    The upper limit uses the exact integer root, never a floating-point
    power. Non-integer beta has no exact pathway; use the real-valued
    evaluators for that.
    """
    _check_n(n)
    if beta < 2:
        raise DomainError(f"beta must be an integer >= 2, got {beta}")
    r = introot(n, beta)
    return _sum_exact(Fraction(n % x**beta, x**beta) for x in range(1, r + 1))


def harmonic(n: int) -> Fraction:
    """Exact harmonic number H_n = sum_{x=1..n} 1/x via binary splitting.

    The reduced denominator has ~0.43*n digits, so this is only sensible
    for moderate n (the final gcd dominates beyond ~10^5); large-n callers
    want the certified real pathway in fastsum instead.
    """
    _check_n(n)
    return Fraction(*_harmonic_split(1, n))


def _harmonic_split(a: int, b: int) -> tuple[int, int]:
    if a == b:
        return 1, a
    m = (a + b) // 2
    p1, q1 = _harmonic_split(a, m)
    p2, q2 = _harmonic_split(m + 1, b)
    return p1 * q2 + p2 * q1, q1 * q2


def introot(n: int, k: int) -> int:
    """Largest r with r^k <= n, by integer Newton iteration plus a correction walk.

    Floating-point roots misclassify near-perfect powers; this never
    touches floats.
    """
    if n < 0:
        raise DomainError(f"n must be >= 0, got {n}")
    if k < 1:
        raise DomainError(f"k must be >= 1, got {k}")
    if n < 2 or k == 1:
        return n
    # start from a power of two >= n^(1/k), then Newton descends monotonically
    r = 1 << (n.bit_length() // k + 1)
    while True:
        nr = ((k - 1) * r + n // r ** (k - 1)) // k
        if nr >= r:
            break
        r = nr
    while r**k > n:
        r -= 1
    while (r + 1) ** k <= n:
        r += 1
    return r
