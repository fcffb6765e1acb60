"""Arbitrary-precision integer utilities: primality, factoring, divisors.

Primality is strong-pseudoprime (Miller-Rabin) testing.  Below the
verified threshold 3.3 * 10**24 a fixed deterministic witness schedule is
used, so answers in that range are exact; above it the fixed witnesses are
supplemented with caller-controlled random rounds and the composite error
probability is at most 4**(-rounds).

Factoring is trial division up to a configurable bound followed by
Pollard rho with Brent cycle detection.  This is deliberately cheap: the
numbers this package meets are smooth times at most one large prime
cofactor.  When the budget runs out the result carries the unfactored
composite cofactor explicitly instead of failing silently.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass

# Strong-pseudoprime witness schedule.  Each entry (bound, witnesses) is a
# proven-deterministic set for n < bound; the last entry covers n up to
# 3.317e24 with the first 13 primes.
_DETERMINISTIC_WITNESSES: tuple[tuple[int, tuple[int, ...]], ...] = (
    (2047, (2,)),
    (1373653, (2, 3)),
    (9080191, (31, 73)),
    (25326001, (2, 3, 5)),
    (3215031751, (2, 3, 5, 7)),
    (3474749660383, (2, 3, 5, 7, 11, 13)),
    (341550071728321, (2, 3, 5, 7, 11, 13, 17)),
    (3825123056546413051, (2, 3, 5, 7, 11, 13, 17, 19, 23)),
    (318665857834031151167461, (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31)),
    (3317044064679887385961981, (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)),
)

DETERMINISTIC_LIMIT = _DETERMINISTIC_WITNESSES[-1][0]

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


class BudgetExceeded(Exception):
    """Factoring budget ran out.  Carries the partial factorization."""

    def __init__(self, partial: "Factorization"):
        super().__init__(f"factoring budget exceeded, cofactor {partial.cofactor}")
        self.partial = partial


@dataclass(frozen=True)
class Factorization:
    """Factored form value = prod(p**e) * cofactor.

    ``factors`` is sorted by prime, exponents are >= 1, and every listed
    prime has passed the primality test.  ``cofactor`` is 1 for a complete
    factorization, otherwise the unfactored composite remainder.
    """

    factors: tuple[tuple[int, int], ...]
    cofactor: int = 1

    def __post_init__(self) -> None:
        primes = [p for p, _ in self.factors]
        if primes != sorted(primes) or len(set(primes)) != len(primes):
            raise ValueError("factors must be sorted by strictly increasing prime")
        if any(e < 1 for _, e in self.factors) or any(p < 2 for p, _ in self.factors):
            raise ValueError("primes must be >= 2 and exponents >= 1")
        if self.cofactor < 1:
            raise ValueError("cofactor must be >= 1")

    @property
    def is_complete(self) -> bool:
        return self.cofactor == 1

    def value(self) -> int:
        n = self.cofactor
        for p, e in self.factors:
            n *= p**e
        return n

    def exponent(self, prime: int) -> int:
        for p, e in self.factors:
            if p == prime:
                return e
        return 0

    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)

    def as_dict(self) -> dict[int, int]:
        return dict(self.factors)


def is_probable_prime(n: int, rounds: int = 24, rng: random.Random | None = None) -> bool:
    """Strong-pseudoprime test.

    Deterministic (exact) for n < 3.317e24 via fixed witness sets; above
    that, the fixed 13-prime base set plus ``rounds`` random witnesses,
    for a composite escape probability <= 4**(-rounds).  ``rng`` supplies
    the random witnesses; by default a generator seeded from n is used so
    results are reproducible.
    """
    if rounds < 1:
        raise ValueError("rounds must be >= 1")
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n == p:
            return True
        if n % p == 0:
            return False

    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1

    def witness_passes(a: int) -> bool:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            return True
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                return True
        return False

    for bound, witnesses in _DETERMINISTIC_WITNESSES:
        if n < bound:
            return all(witness_passes(a) for a in witnesses)

    if not all(witness_passes(a) for a in _DETERMINISTIC_WITNESSES[-1][1]):
        return False
    if rng is None:
        rng = random.Random(n)
    return all(witness_passes(rng.randrange(2, n - 1)) for _ in range(rounds))


def _brent_rho(n: int, rng: random.Random, max_iters: int) -> int:
    """Find a nontrivial factor of odd composite n, or 0 within budget.

    Brent's cycle-detection variant with batched gcds.
    """
    if n % 2 == 0:
        return 2
    spent = 0
    while spent < max_iters:
        y = rng.randrange(1, n)
        c = rng.randrange(1, n)
        m = 128
        g = r = q = 1
        x = ys = y
        while g == 1 and spent < max_iters:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            spent += r
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if 1 < g < n:
            return g
        # cycle degenerated, retry with a new polynomial
    return 0


def factorize(
    n: int,
    trial_limit: int = 10**6,
    rho_iters: int = 2_000_000,
    strict: bool = False,
    seed: int = 0,
) -> Factorization:
    """Factor n >= 1 by trial division then Brent rho.

    Returns a complete factorization when every cofactor yields within
    budget, otherwise a partial one whose ``cofactor`` marks the surviving
    composite.  With ``strict=True`` the partial case raises
    BudgetExceeded instead (the exception carries the partial result).
    """
    if n < 1:
        raise ValueError("factorize requires n >= 1")
    found: dict[int, int] = {}
    if n == 1:
        return Factorization(())

    m = n
    # trial division; stop early once the remaining cofactor must be prime
    d = 2
    while d <= trial_limit and d * d <= m:
        if m % d == 0:
            e = 0
            while m % d == 0:
                m //= d
                e += 1
            found[d] = e
        d += 1 if d == 2 else 2

    rng = random.Random((n << 16) ^ seed)
    pending = [m] if m > 1 else []
    budget_hit = False
    composite_leftover = 1
    while pending:
        c = pending.pop()
        if c == 1:
            continue
        if c <= trial_limit * trial_limit or is_probable_prime(c):
            # survivors have no factor below the trial wall, so anything
            # under its square is prime outright
            found[c] = found.get(c, 0) + _extract(c, pending)
            continue
        g = _brent_rho(c, rng, rho_iters)
        if g == 0:
            budget_hit = True
            composite_leftover *= c
            continue
        pending.append(g)
        pending.append(c // g)

    factors = tuple(sorted(found.items()))
    result = Factorization(factors, composite_leftover)
    if budget_hit and strict:
        raise BudgetExceeded(result)
    return result


def _extract(p: int, pending: list[int]) -> int:
    """Pull every power of prime p out of the pending composites."""
    e = 1
    for i, c in enumerate(pending):
        while c % p == 0:
            c //= p
            e += 1
        pending[i] = c
    return e


def divisors(f: Factorization) -> list[int]:
    """All divisors of the factored value, ascending.

    Requires a complete factorization; the divisor count is
    prod(e_i + 1).
    """
    if not f.is_complete:
        raise ValueError("cannot enumerate divisors of a partial factorization")
    out = [1]
    for p, e in f.factors:
        powers = [p**k for k in range(e + 1)]
        out = [d * q for d in out for q in powers]
    out.sort()
    return out
