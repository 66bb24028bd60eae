"""p-adic valuation sequences built by duplicate-concatenate-increment.

The generator in this module never divides: each sequence grows by list
copying plus a single increment per round.  The division-based functions
(`valuation_oracle`, `odd_even_parts`, the trial-division helpers) are the
independent reference side used to cross-check the division-free
construction, so keep the two halves separate.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

def _overshoot_limit(m: int) -> int:
    # Rounds whose full overshoot would exceed this are truncated to the
    # requested length instead of materialized; the incremented final term
    # then sits beyond the stored prefix and is never observable.
    return max(4 * m, 1024)


@dataclass(frozen=True)
class ValuationSequence:
    """A 1-indexed prefix of the valuation sequence for base ``p``.

    ``terms`` exposes exactly ``m`` values; the generator may retain a
    longer internal prefix (up to the next power of p) so a later,
    longer request can reuse the work.
    """

    p: int
    m: int
    _full: tuple[int, ...] = field(repr=False)

    def __post_init__(self) -> None:
        if self.p < 2:
            raise ValueError(f"base must be at least 2, got {self.p}")
        if self.m < 1:
            raise ValueError(f"length must be at least 1, got {self.m}")
        if len(self._full) < self.m:
            raise ValueError("internal prefix shorter than requested length")

    @property
    def terms(self) -> list[int]:
        """The exposed terms, as a fresh list of length ``m``."""
        return list(self._full[: self.m])

    def term(self, n: int) -> int:
        """The term at 1-based index ``n``."""
        if not 1 <= n <= self.m:
            raise IndexError(f"index {n} outside 1..{self.m}")
        return self._full[n - 1]

    def __len__(self) -> int:
        return self.m

    def with_length(self, m: int) -> "ValuationSequence":
        """A view of length ``m``, reusing the retained prefix if it covers m."""
        if m <= len(self._full):
            return ValuationSequence(self.p, m, self._full)
        return generate_dci(self.p, m)


def generate_dci(p: int, m: int) -> ValuationSequence:
    """Build the valuation sequence for ``p`` by duplicate-concatenate-increment.

    Start from <0>; each round appends p-1 copies of the current sequence
    end-to-end and increments the final term; stop once at least ``m`` terms
    exist.  No division or modulo anywhere.
    """
    if p < 2:
        raise ValueError(f"base must be at least 2, got {p}")
    if m < 1:
        raise ValueError(f"length must be at least 1, got {m}")
    seq = [0]
    limit = _overshoot_limit(m)
    while len(seq) < m:
        if len(seq) * p <= limit:
            seq = seq * p  # p-1 copies appended end-to-end
            seq[-1] += 1
        else:
            # Final round would overshoot far past m: keep only the first m
            # terms of the concatenation.  The increment lands at index
            # len(seq)*p > m, outside the exposed view.
            while len(seq) < m:
                seq.extend(seq[: m - len(seq)])
    return ValuationSequence(p, m, tuple(seq))


def valuation_oracle(p: int, n: int) -> int:
    """Largest k such that p**k divides n, by repeated division.

    This is deliberately the thing the generator avoids; it exists as the
    independent check.
    """
    if p < 2:
        raise ValueError(f"base must be at least 2, got {p}")
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    k = 0
    while n % p == 0:
        n //= p
        k += 1
    return k


@dataclass(frozen=True)
class OddEvenDecomposition:
    """n split as even_part * odd_part with even_part = 2**v2(n)."""

    n: int
    even_part: int
    odd_part: int


def odd_even_parts(n: int) -> OddEvenDecomposition:
    """Split n into its even part (largest power of 2 dividing n) and odd part."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    even = n & -n  # lowest set bit = 2**v2(n)
    return OddEvenDecomposition(n, even, n // even)


def odd_part_mod4(n: int) -> int:
    """Odd part of n, modulo 4.  Always 1 or 3."""
    return odd_even_parts(n).odd_part % 4


def primes_by_trial_division(limit: int) -> list[int]:
    """All primes <= limit, by trial division against earlier primes."""
    primes: list[int] = []
    for n in range(2, limit + 1):
        r = math.isqrt(n)
        is_prime = True
        for q in primes:
            if q > r:
                break
            if n % q == 0:
                is_prime = False
                break
        if is_prime:
            primes.append(n)
    return primes


def trial_division_factor(n: int) -> list[tuple[int, int]]:
    """Prime factorization of n by trial division, as (prime, exponent) pairs."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    factors: list[tuple[int, int]] = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            factors.append((d, e))
        d += 1 if d == 2 else 2
    if n > 1:
        factors.append((n, 1))
    return factors
