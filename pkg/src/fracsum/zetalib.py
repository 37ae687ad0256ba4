"""High-precision constants: Bernoulli numbers, zeta(s) on the real line,
the Euler-Mascheroni constant and its generalization, and the limiting
constants of the fractional-part sum laws.

Real values are `mpmath.mpf`. Every function takes `precision`, the number
of decimal digits guaranteed correct; computation runs with guard digits
on top of that, and truncated Euler-Maclaurin tails are estimated by the
first omitted term with a 4x safety factor. A result that fails its
internal doubling check raises PrecisionError instead of degrading
silently.

Bernoulli numbers use the B_1 = +1/2 convention (so sum_{j<=m} C(m+1,j) B_j
= m+1). Most references use B_1 = -1/2; only the k = 1 value differs.
"""

import math
import os
import threading
from fractions import Fraction

from mpmath import mp, mpf

from .errors import DomainError, PrecisionError
from .exactcore import SumKind, harmonic

__all__ = [
    "bernoulli",
    "zeta_em",
    "euler_gamma",
    "gen_gamma",
    "theorem_constant",
    "required_precision",
    "max_precision",
]

_DEFAULT_MAX_PRECISION = 1000


def max_precision() -> int:
    """Precision cap in digits; override with FRACSUM_MAX_PRECISION."""
    raw = os.environ.get("FRACSUM_MAX_PRECISION", "")
    try:
        return int(raw) if raw else _DEFAULT_MAX_PRECISION
    except ValueError:
        raise PrecisionError(f"FRACSUM_MAX_PRECISION is not an integer: {raw!r}")


def _check_precision(precision: int) -> None:
    if precision < 1:
        raise DomainError(f"precision must be >= 1 digit, got {precision}")
    cap = max_precision()
    if precision > cap:
        raise PrecisionError(
            f"precision {precision} exceeds the configured cap {cap} "
            "(raise FRACSUM_MAX_PRECISION to allow more)"
        )


# ---------------------------------------------------------------------------
# Bernoulli numbers
# ---------------------------------------------------------------------------

_bern: list[Fraction] = [Fraction(1), Fraction(1, 2)]
_bern_lock = threading.Lock()


def bernoulli(k: int) -> Fraction:
    """Exact Bernoulli number B_k, with B_1 = +1/2.

    Computed by the recurrence sum_{j=0..m} C(m+1, j) B_j = m+1 and cached;
    the cache only ever grows, so concurrent readers are safe once a value
    exists.
    """
    if k < 0:
        raise DomainError(f"k must be >= 0, got {k}")
    if k >= len(_bern):
        with _bern_lock:
            while len(_bern) <= k:
                m = len(_bern)
                acc = sum(math.comb(m + 1, j) * _bern[j] for j in range(m))
                _bern.append(Fraction(m + 1 - acc, m + 1))
    return _bern[k]


# ---------------------------------------------------------------------------
# zeta via Euler-Maclaurin
# ---------------------------------------------------------------------------


def _as_mpf(x) -> mpf:
    if isinstance(x, Fraction):
        return mpf(x.numerator) / x.denominator
    return mpf(x)


def _zeta_em_raw(s: mpf, w: int, m: int) -> tuple[mpf, mpf]:
    """One Euler-Maclaurin evaluation; returns (value, first-omitted-term size).

    zeta(s) ~ sum_{x<=w} x^-s + w^(1-s)/(s-1) - w^-s/2
              + sum_{k=1..m} B_2k/(2k)! * s(s+1)...(s+2k-2) * w^(-s-2k+1)
    """
    total = mpf(0)
    for x in range(w, 0, -1):  # small terms first
        total += mpf(x) ** (-s)
    total += w ** (1 - s) / (s - 1) - w ** (-s) / 2
    rising = s  # s(s+1)...(s+2k-2), built incrementally
    wpow = mpf(w) ** (-s - 1)
    inv_w2 = mpf(1) / (w * w)
    term = mpf(0)
    for k in range(1, m + 1):
        b = bernoulli(2 * k)
        term = (mpf(b.numerator) / b.denominator) / math.factorial(2 * k) * rising * wpow
        total += term
        rising *= (s + 2 * k - 1) * (s + 2 * k)
        wpow *= inv_w2
    b_next = bernoulli(2 * m + 2)
    omitted = abs(mpf(b_next.numerator) / b_next.denominator) / math.factorial(2 * m + 2) * abs(rising) * wpow
    return total, omitted


def zeta_em(s, w: int | None = None, m: int | None = None, precision: int = 50) -> mpf:
    """zeta(s) for real s > 0, s != 1, to `precision` correct digits.

    `w` is the direct-summation cutoff and `m` the number of Bernoulli
    correction terms; both default from `precision` and are raised
    automatically whenever the first-omitted-term estimate (x4 safety)
    misses 10^-precision. The returned value must also agree with a
    doubled-w evaluation, else PrecisionError.
    """
    _check_precision(precision)
    sv = _as_mpf(s)
    if sv <= 0:
        raise DomainError(f"zeta_em requires s > 0, got {s}")
    if sv == 1:
        raise DomainError("zeta has a pole at s = 1")

    if w is None:
        w = max(10, int(0.4 * (precision + 10)) + 2)
    elif w < 2:
        raise DomainError(f"w must be >= 2, got {w}")
    if m is None:
        m = max(4, precision // 3)
    elif m < 1:
        raise DomainError(f"m must be >= 1, got {m}")

    with mp.workdps(precision + 12):
        target = mpf(10) ** (-(precision + 1))
        rounds = 0
        while True:
            val, omitted = _zeta_em_raw(sv, w, m)
            if 4 * omitted <= target:
                break
            rounds += 1
            if rounds > 60:
                raise PrecisionError(
                    f"zeta_em cannot reach {precision} digits for s={s} "
                    f"within configured growth caps (w={w}, m={m})"
                )
            # the correction series converges while 2m << 2*pi*w; prefer
            # deepening it, otherwise push the cutoff out
            if 2 * (m + 4) < 5 * w:
                m += 4
            else:
                w *= 2
        check, _ = _zeta_em_raw(sv, 2 * w, m)
        if abs(val - check) > mpf(10) ** (-precision):
            raise PrecisionError(
                f"zeta_em doubling check failed for s={s} at precision {precision}"
            )
        return check


# ---------------------------------------------------------------------------
# Euler-Mascheroni constant and the gamma_a family
# ---------------------------------------------------------------------------


def _gamma_em(n: int, eps: mpf) -> mpf:
    # gamma = H_n - ln n - 1/(2n) + sum_{k>=1} B_2k/(2k n^2k), truncated
    # once terms drop below eps (they eventually diverge; n is chosen so
    # the floor of the series sits far below eps).
    h = harmonic(n)
    acc = mpf(h.numerator) / h.denominator - mp.ln(n) - mpf(1) / (2 * n)
    inv_n2 = mpf(1) / (n * n)
    npow = inv_n2
    prev = None
    for k in range(1, 600):
        b = bernoulli(2 * k)
        term = (mpf(b.numerator) / b.denominator) / (2 * k) * npow
        if abs(term) < eps:
            return acc + term
        if prev is not None and abs(term) > prev:
            raise PrecisionError(
                f"harmonic-number series for gamma bottomed out above the "
                f"requested accuracy at n={n}"
            )
        acc += term
        prev = abs(term)
        npow *= inv_n2
    raise PrecisionError(f"gamma series did not converge at n={n}")


_gamma_cache: dict[int, mpf] = {}
_gamma_lock = threading.Lock()


def euler_gamma(precision: int = 50) -> mpf:
    """The Euler-Mascheroni constant 0.5772... to `precision` digits.

    Runs the harmonic-number Euler-Maclaurin formula at two working sizes
    (n and 2n) and requires agreement to 10^-precision before returning.
    """
    _check_precision(precision)
    cached = _gamma_cache.get(precision)
    if cached is not None:
        return cached
    with mp.workdps(precision + 15):
        eps = mpf(10) ** (-(precision + 8))
        n = max(30, precision)
        v1 = _gamma_em(n, eps)
        v2 = _gamma_em(2 * n, eps)
        if abs(v1 - v2) > mpf(10) ** (-precision):
            raise PrecisionError(
                f"two-size gamma runs disagree at precision {precision}"
            )
    with _gamma_lock:
        _gamma_cache.setdefault(precision, v2)
    return _gamma_cache[precision]


def gen_gamma(a, precision: int = 50) -> mpf:
    """Generalized Euler constant gamma_a = lim (sum_{k<=n} k^-a - int_1^n t^-a dt).

    For 0 < a < 1 this equals zeta(a) + 1/(1-a); at a = 1 it is the
    Euler-Mascheroni constant, which the zeta form approaches continuously
    as a -> 1. Requires 0 < a <= 1.
    """
    _check_precision(precision)
    av = _as_mpf(a)
    if av <= 0 or av > 1:
        raise DomainError(f"gen_gamma requires 0 < a <= 1, got {a}")
    if av == 1:
        return euler_gamma(precision)
    with mp.workdps(precision + 12):
        return zeta_em(av, precision=precision + 2) + 1 / (1 - av)


# ---------------------------------------------------------------------------
# Limiting constants of the sum laws
# ---------------------------------------------------------------------------


def theorem_constant(kind: SumKind, s: int, precision: int = 50) -> mpf:
    """The limiting constant of the normalized sum for the given family.

    FRAC_POWER, s >= 1:     1/s - zeta(s+1)/(s+1)      (normalizer n^(s+1))
    FRAC_POWER, s = 0:      1 - gamma                  (normalizer n)
    TRANSFORM,  s >= 2:     1/(s-1) - 1 + zeta(s)      (normalizer n^s)
    TRANSFORM,  s = 1:      1 - gamma   (the s -> 1 limit; same law as s=0
                            FRAC_POWER since Phi_1 = f_0)
    POUSSIN:                1 - gamma, independent of the progression w
    PILLICHSHAMMER, beta:   1 - gamma_{1/beta}          (normalizer n^(1/beta))
    """
    _check_precision(precision)
    with mp.workdps(precision + 10):
        if kind is SumKind.FRAC_POWER:
            if s < 0:
                raise DomainError(f"s must be >= 0, got {s}")
            if s == 0:
                return 1 - euler_gamma(precision)
            return mpf(1) / s - zeta_em(s + 1, precision=precision) / (s + 1)
        if kind is SumKind.TRANSFORM:
            if s < 1:
                raise DomainError(
                    "the transform law needs s >= 1 (no limiting constant at s = 0)"
                )
            if s == 1:
                return 1 - euler_gamma(precision)
            return mpf(1) / (s - 1) - 1 + zeta_em(s, precision=precision)
        if kind is SumKind.POUSSIN:
            return 1 - euler_gamma(precision)
        if kind is SumKind.PILLICHSHAMMER:
            if s < 2:
                raise DomainError(f"beta must be an integer >= 2, got {s}")
            return 1 - gen_gamma(mpf(1) / s, precision)
    raise DomainError(f"no limiting-constant law for {kind}")


def required_precision(n: int, power: float) -> int:
    """Digits needed so a residual against a law of size n^power keeps
    >= 15 correct digits after cancellation."""
    if n < 2:
        return 16
    return max(1, math.ceil(power * math.log10(n))) + 15
