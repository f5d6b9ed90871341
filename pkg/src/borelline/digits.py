"""Base-p digit combinatorics.

Digit expansions, digit sums, binomial coefficients mod p via the digitwise
product rule, power sums over finite fields, and the digit-class growth
law for residues m' = m mod (p^r - 1). All arithmetic is exact.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import polyfp


class ArgumentError(ValueError):
    """Malformed input to a combinatorial routine."""


def require_prime(p) -> int:
    if not isinstance(p, int) or p < 2:
        raise ArgumentError(f"p must be a prime, got {p!r}")
    d = 2
    while d * d <= p:
        if p % d == 0:
            raise ArgumentError(f"p must be a prime, got {p}")
        d += 1
    return p


def prime_power_base(q) -> tuple[int, int]:
    """Split a prime power q as (p, r) with q = p**r."""
    if not isinstance(q, int) or q < 2:
        raise ArgumentError(f"q must be a prime power, got {q!r}")
    p = 2
    while p * p <= q:
        if q % p == 0:
            break
        p += 1
    else:
        p = q
    r = 0
    n = q
    while n % p == 0:
        n //= p
        r += 1
    if n != 1:
        raise ArgumentError(f"q must be a prime power, got {q}")
    return p, r


@dataclass(frozen=True)
class DigitExpansion:
    """Base-p digits of a nonnegative integer, least significant first."""

    p: int
    digits: tuple[int, ...]

    def __post_init__(self):
        require_prime(self.p)
        object.__setattr__(self, "digits", tuple(self.digits))
        for d in self.digits:
            if not 0 <= d < self.p:
                raise ArgumentError(f"{d} is not a base-{self.p} digit")
        if self.digits and self.digits[-1] == 0:
            raise ArgumentError("digit expansions carry no trailing zeros")

    @property
    def value(self) -> int:
        v = 0
        for d in reversed(self.digits):
            v = v * self.p + d
        return v


def expand(n, p) -> DigitExpansion:
    require_prime(p)
    if n < 0:
        raise ArgumentError(f"digit expansion needs n >= 0, got {n}")
    digits = []
    while n:
        n, d = divmod(n, p)
        digits.append(d)
    return DigitExpansion(p, tuple(digits))


def digit_sum(n, p) -> int:
    """f(n): the sum of the base-p digits of n."""
    return sum(expand(n, p).digits)


def nonzero_digit_count(n, p) -> int:
    """M_n: how many base-p digits of n are nonzero."""
    return sum(1 for d in expand(n, p).digits if d)


def _small_binom(a, b) -> int:
    # a, b < p, so this stays tiny
    if b < 0 or b > a:
        return 0
    num = 1
    den = 1
    for i in range(b):
        num *= a - i
        den *= i + 1
    return num // den


def lucas_binom(m, n, p) -> int:
    """binom(m, n) mod p as the digitwise product of small binomials."""
    require_prime(p)
    if m < 0 or n < 0:
        raise ArgumentError("binomial arguments must be nonnegative")
    out = 1
    while m or n:
        out = (out * _small_binom(m % p, n % p)) % p
        if out == 0:
            return 0
        m //= p
        n //= p
    return out


def power_sum(q, k, include_zero=True) -> int:
    """Sum of t**k over F_q (or its units), as a residue mod p.

    Closed form: the sum over units is -1 exactly when (q-1) | k, else 0.
    Including zero only changes k = 0, where the full sum is q = 0 in F_p.
    """
    p, _ = prime_power_base(q)
    if k < 0:
        raise ArgumentError("power sums need k >= 0")
    if include_zero and k == 0:
        return 0
    return (p - 1) if k % (q - 1) == 0 else 0


def power_sum_direct(q, k, include_zero=True) -> int:
    """Brute-force oracle for power_sum: enumerate F_q and add t**k.

    Builds F_q as F_p[x]/(f) for the first irreducible f of the right degree,
    independently of the closed form above.
    """
    p, r = prime_power_base(q)
    if k < 0:
        raise ArgumentError("power sums need k >= 0")
    f = polyfp.least_irreducible(p, r)
    total = ()
    elems = [()]
    for _ in range(r):
        elems = [e + (c,) for e in elems for c in range(p)]
    for coords in elems:
        t = polyfp.trim(coords)
        if not t and not include_zero:
            continue
        tk = polyfp.pow_mod(t, k, f, p) if (t or k == 0) else ()
        total = polyfp.add(total, tk, p)
    # the sum is Galois invariant, so it must sit in the prime field
    if polyfp.degree(total) > 0:
        raise RuntimeError("power sum escaped the prime field")
    return total[0] if total else 0


def digit_class_sums(m, p, r) -> tuple[int, ...]:
    """Position-class digit sums: entry i adds the digits of m sitting in
    positions congruent to i mod r."""
    require_prime(p)
    if r < 1:
        raise ArgumentError("need r >= 1")
    sums = [0] * r
    for pos, d in enumerate(expand(m, p).digits):
        sums[pos % r] += d
    return tuple(sums)


@dataclass(frozen=True)
class DigitLemmaVerdict:
    """Which clauses of the digit growth law hold for (m, m')."""

    p: int
    r: int
    m: int
    m_prime: int
    f_m: int
    f_m_prime: int
    m_digits: tuple[int, ...]
    class_sums: tuple[int, ...]
    monotone: bool            # f(m') >= f(m)
    equality: bool            # f(m') == f(m)
    classes_match: bool       # class sums of m' reproduce the digits of m
    equality_iff_classes: bool
    count_growth: bool        # equality forces M_{m'} >= M_m

    @property
    def all_hold(self) -> bool:
        return self.monotone and self.equality_iff_classes and self.count_growth


def check_digit_lemma(m, m_prime, p, r) -> DigitLemmaVerdict:
    """Check the three digit-class clauses for 0 <= m <= p^r - 1 and
    m' = m mod (p^r - 1)."""
    require_prime(p)
    if r <= 1:
        raise ArgumentError("the digit-class law needs r > 1")
    q = p ** r
    if not 0 <= m <= q - 1:
        raise ArgumentError(f"m must lie in [0, {q - 1}], got {m}")
    if m_prime < 0 or (m_prime - m) % (q - 1) != 0:
        raise ArgumentError(f"m' must be congruent to m mod {q - 1}")

    f_m = digit_sum(m, p)
    f_mp = digit_sum(m_prime, p)
    m_digits = expand(m, p).digits
    m_digits = m_digits + (0,) * (r - len(m_digits))
    sums = digit_class_sums(m_prime, p, r)
    classes_match = sums == m_digits
    equality = f_mp == f_m
    return DigitLemmaVerdict(
        p=p,
        r=r,
        m=m,
        m_prime=m_prime,
        f_m=f_m,
        f_m_prime=f_mp,
        m_digits=m_digits,
        class_sums=sums,
        monotone=f_mp >= f_m,
        equality=equality,
        classes_match=classes_match,
        equality_iff_classes=equality == classes_match,
        count_growth=(not equality)
        or nonzero_digit_count(m_prime, p) >= nonzero_digit_count(m, p),
    )
