"""Search for omega in the quartic order whose complex norm is prime.

The search picks a coprime pair (c3, c4), solves the vanishing of the
xi-component of omega * conj(omega) by a divisor choice, and tests the
resulting rational norm for primality:

  D = 2, 3 (mod 4):  the xi-component is 2*c1*c2 - 2n with
      2n = -2*c3*c4*a - c3^2*b - c4^2*b*D, so (c3, c4) must make 2n even
      and then c1 runs over divisors of n with c2 = n/c1.

  D = 1 (mod 4):  with S8 = 4*c3^2*b + 8*c3*c4*(a+b) + c4^2*(b*(D+3) + 4a)
      the component vanishes iff c2*(2*c1 + c2) = m where m = -S8/4, so
      4 | S8 is required and c2 runs over divisors of m with m/c2 = c2
      (mod 2).  Every accepted solution is re-verified by exact ring
      multiplication; the closed forms never get the final word.

Divisors are tried in seeded pseudo-random order (both signs), and the
divisors of one pair are exhausted before the next pair is sampled, so a
fixed (field, config) always reproduces the same certificate.  Shared odd
factors of (c3, c4) are never emitted; shared powers of two are allowed.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass

from .cmfield import FieldCase, ValidatedField
from .integerkit import divisors, factorize, is_probable_prime
from .quartic import QuarticInt, conj_complex, mul, norm_residual


class SearchExhausted(RuntimeError):
    """No acceptable prime found within the iteration budget."""


class NoIntegralSolution(Exception):
    """A (c3, c4) pair admits no integer (c1, c2); resample."""


class InvalidOmega(ValueError):
    """Coordinates whose complex norm is not rational, or a bad gcd."""


class CompositeP(ValueError):
    """The rational norm is not an (odd) probable prime."""


@dataclass(frozen=True)
class GenConfig:
    target_bits: int
    seed: int = 0
    max_iters: int = 10_000
    coefficient_bound: int = 0  # bit budget for |c3|, |c4|; 0 derives it

    def __post_init__(self) -> None:
        if self.target_bits < 4:
            raise ValueError("target_bits must be >= 4")
        if self.max_iters < 1:
            raise ValueError("max_iters must be >= 1")


@dataclass(frozen=True)
class OmegaCertificate:
    """A verified (field, omega, p) triple.

    Guarantees: omega * conj(omega) = (p, 0, 0, 0) exactly, p is an odd
    probable prime, and gcd(c3, c4) has trivial odd part.
    """

    field: ValidatedField
    c: tuple[int, int, int, int]
    p: int
    gcd34: int


def odd_part(n: int) -> int:
    n = abs(n)
    while n and n % 2 == 0:
        n //= 2
    return n


def make_certificate(
    field: ValidatedField, c: tuple[int, int, int, int], rounds: int = 24
) -> OmegaCertificate:
    """Validate coordinates into a certificate.

    Raises InvalidOmega when the norm has a nonzero xi-component or the
    pair (c3, c4) shares an odd factor, CompositeP when the norm is even
    or fails the primality test.
    """
    p, residual = norm_residual(c, field)
    if residual != 0:
        raise InvalidOmega(f"norm of {c} is irrational (xi-component {residual})")
    g34 = math.gcd(c[2], c[3])
    if odd_part(g34) != 1:
        raise InvalidOmega(f"gcd(c3, c4) = {g34} has a nontrivial odd part")
    if p <= 2 or p % 2 == 0 or not is_probable_prime(p, rounds):
        raise CompositeP(f"norm {p} is not an odd prime")
    # exact ring confirmation, independent of the closed forms
    u = QuarticInt(*c)
    assert mul(u, conj_complex(u), field).coords() == (p, 0, 0, 0)
    return OmegaCertificate(field, c, p, g34)


def negate(cert: OmegaCertificate) -> OmegaCertificate:
    """Certificate of -omega: same prime, quadratic-twist Frobenius."""
    c1, c2, c3, c4 = cert.c
    return OmegaCertificate(cert.field, (-c1, -c2, -c3, -c4), cert.p, cert.gcd34)


def pair_admissible_23(field: ValidatedField, c3: int, c4: int) -> bool:
    """gcd(c3, c4) = 1 and the divisor equation has an integer right side."""
    if math.gcd(c3, c4) != 1:
        return False
    return (c3 * c3 * field.b + c4 * c4 * field.b * field.D) % 2 == 0


def solve_divisor_equation_23(
    field: ValidatedField, c3: int, c4: int, trial_limit: int = 10**4, rho_iters: int = 200_000
) -> list[tuple[int, int]]:
    """All (c1, c2) with c1*c2 = n for the pair, in deterministic order.

    Raises NoIntegralSolution when the pair fails the parity condition,
    n is zero, or n cannot be factored within budget.
    """
    if not pair_admissible_23(field, c3, c4):
        raise NoIntegralSolution(f"pair ({c3}, {c4}) fails gcd or parity")
    two_n = -2 * c3 * c4 * field.a - c3 * c3 * field.b - c4 * c4 * field.b * field.D
    n = two_n // 2
    if n == 0:
        raise NoIntegralSolution("degenerate pair with n = 0")
    fact = factorize(abs(n), trial_limit=trial_limit, rho_iters=rho_iters)
    if not fact.is_complete:
        raise NoIntegralSolution(f"could not factor n = {n} within budget")
    out = []
    for d in divisors(fact):
        for c1 in (d, -d):
            out.append((c1, n // c1))
    return out


def solve_divisor_equation_1(
    field: ValidatedField, c3: int, c4: int, trial_limit: int = 10**4, rho_iters: int = 200_000
) -> list[tuple[int, int]]:
    """All (c1, c2) with c2*(2*c1 + c2) = m for the pair.

    The odd parts of c3 and c4 must be coprime.  Raises NoIntegralSolution
    when 4 does not divide S8, no divisor of m has the parity that makes
    c1 integral, m is zero, or factoring fails within budget.
    """
    if math.gcd(odd_part(c3), odd_part(c4)) != 1:
        raise NoIntegralSolution(f"pair ({c3}, {c4}) shares an odd factor")
    a, b, D = field.a, field.b, field.D
    s8 = 4 * c3 * c3 * b + 8 * c3 * c4 * (a + b) + c4 * c4 * (b * (D + 3) + 4 * a)
    if s8 % 4:
        raise NoIntegralSolution(f"4 does not divide S8 = {s8}")
    m = -s8 // 4
    if m == 0:
        raise NoIntegralSolution("degenerate pair with m = 0")
    fact = factorize(abs(m), trial_limit=trial_limit, rho_iters=rho_iters)
    if not fact.is_complete:
        raise NoIntegralSolution(f"could not factor m = {m} within budget")
    out = []
    for d in divisors(fact):
        for c2 in (d, -d):
            q = m // c2
            if (q - c2) % 2:
                continue
            out.append(((q - c2) // 2, c2))
    if not out:
        raise NoIntegralSolution(f"every divisor pair of m = {m} has mixed parity")
    return out


def _pair_bit_range(field: ValidatedField, cfg: GenConfig) -> tuple[int, int]:
    """Magnitude range for |c3|, |c4|.

    Pairs near (target - scale)/2 bits reach the target through balanced
    divisor splits c1 ~ c2 ~ sqrt(n); pairs near a quarter of the target
    reach it through lopsided splits (c2 a small divisor, c1 ~ n), whose
    n is half as long and therefore much easier to factor.  Sampling the
    whole range covers both regimes.
    """
    if cfg.coefficient_bound:
        return cfg.coefficient_bound, cfg.coefficient_bound
    scale = (field.a * (1 + field.D)).bit_length()
    hi = max(2, (cfg.target_bits - scale) // 2)
    lo = max(2, (cfg.target_bits - scale) // 4)
    return lo, hi


def _sample_pair(rng: random.Random, lo_bits: int, hi_bits: int) -> tuple[int, int]:
    hi = 1 << rng.randint(lo_bits, hi_bits)
    c3 = rng.randrange(1, hi) * rng.choice((1, -1))
    c4 = rng.randrange(1, hi) * rng.choice((1, -1))
    return c3, c4


def _search(field: ValidatedField, cfg: GenConfig, case1: bool) -> OmegaCertificate:
    rng = random.Random(cfg.seed)
    lo_bits, hi_bits = _pair_bit_range(field, cfg)
    solver = solve_divisor_equation_1 if case1 else solve_divisor_equation_23
    tested = 0
    pair_cap = max(1000, 50 * cfg.max_iters)
    for _ in range(pair_cap):
        c3, c4 = _sample_pair(rng, lo_bits, hi_bits)
        try:
            solutions = solver(field, c3, c4)
        except NoIntegralSolution:
            continue
        rng.shuffle(solutions)
        for c1, c2 in solutions:
            c = (c1, c2, c3, c4)
            p, residual = norm_residual(c, field)
            if residual != 0:  # solver guarantees this; keep the oracle armed
                raise AssertionError(f"solver produced irrational norm at {c}")
            if p <= 2 or p % 2 == 0:
                continue
            if abs(p.bit_length() - cfg.target_bits) > 2:
                continue
            tested += 1
            if is_probable_prime(p):
                return make_certificate(field, c)
            if tested >= cfg.max_iters:
                raise SearchExhausted(f"no prime after {tested} candidates")
    raise SearchExhausted(f"no candidate with {cfg.target_bits}-bit norm after {pair_cap} pairs")


def gen_omega_23(field: ValidatedField, cfg: GenConfig) -> OmegaCertificate:
    """Elementary-method search for D = 2, 3 (mod 4)."""
    if field.case is not FieldCase.CASE23:
        raise ValueError("field has D = 1 (mod 4); use gen_omega_1")
    return _search(field, cfg, case1=False)


def gen_omega_1(field: ValidatedField, cfg: GenConfig) -> OmegaCertificate:
    """Elementary-method search for D = 1 (mod 4)."""
    if field.case is not FieldCase.CASE1:
        raise ValueError("field has D = 2, 3 (mod 4); use gen_omega_23")
    return _search(field, cfg, case1=True)


def search_prime(field: ValidatedField, cfg: GenConfig) -> OmegaCertificate:
    """Dispatch on the residue of D; deterministic for a fixed seed."""
    if field.case is FieldCase.CASE1:
        return gen_omega_1(field, cfg)
    return gen_omega_23(field, cfg)
