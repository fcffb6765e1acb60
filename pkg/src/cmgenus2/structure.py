"""Admissible group structures (n1, n2, n3, n4) of the Jacobian.

The group of rational points decomposes as a product of four cyclic
groups Z/n1 x Z/n2 x Z/n3 x Z/n4 with n1 | n2 | n3 | n4 and n2 | p - 1.
An odd prime ell can divide n2 only if

    ell^3 | N,  ell | p - 1,  ell != p,

and, unless ell divides gcd(c3, c4), the bound ell <= Q holds, with the
extra congruences c1 = 1 and c2 = 0 (mod ell) forced when ell > D.

``enumerate_structures`` lists every tuple compatible with these
necessary conditions, working prime by prime over exponent chains
e1 <= e2 <= e3 <= e4 summing to the multiplicity of the prime in N.  The
output is a superset guarantee: the true structure is among the
candidates, but candidates are not certified realizable (that would
require the curve itself).  The minimum n4 over all candidates is then a
certified lower bound on the largest cyclic subgroup.

The power of two in n2 is constrained only by divisibility and
n2 | p - 1; the odd-prime filter above does not apply to 2.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field as dataclass_field

from .integerkit import Factorization
from .primegen import OmegaCertificate


class IncompleteFactorization(ValueError):
    """The factorization of N must be complete to enumerate structures."""


class CombinatorialBlowup(RuntimeError):
    """More candidates than the configured cap."""


@dataclass(frozen=True, order=True)
class StructureCandidate:
    n1: int
    n2: int
    n3: int
    n4: int

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.n1, self.n2, self.n3, self.n4)

    def __post_init__(self) -> None:
        if self.n2 % self.n1 or self.n3 % self.n2 or self.n4 % self.n3:
            raise ValueError(f"{self.as_tuple()} is not a divisor chain")


@dataclass(frozen=True)
class StructureReport:
    candidates: tuple[StructureCandidate, ...]
    admissible_odd_primes: frozenset[int]
    Q: int
    guaranteed_cyclic: int
    warnings: tuple[str, ...] = ()
    exclusions: dict[int, tuple[str, ...]] = dataclass_field(default_factory=dict)


def admissible_odd_primes_from(
    n_fact: Factorization,
    p: int,
    pm1_fact: Factorization,
    Q: int,
    D: int,
    c1: int,
    c2: int,
    gcd34: int,
) -> tuple[set[int], dict[int, tuple[str, ...]]]:
    """The filter on odd primes, from raw congruence data.

    Returns the surviving primes together with, for every odd prime whose
    cube divides N but which was excluded, the list of conditions that
    excluded it.
    """
    if not n_fact.is_complete:
        raise IncompleteFactorization("N has an unfactored cofactor")
    pm1_primes = set(pm1_fact.primes())
    admissible: set[int] = set()
    exclusions: dict[int, tuple[str, ...]] = {}
    for ell, v in n_fact.factors:
        if ell == 2 or v < 3:
            continue
        reasons = []
        if ell not in pm1_primes:
            reasons.append(f"{ell} does not divide p - 1")
        if ell == p:
            reasons.append(f"{ell} equals the field characteristic")
        if gcd34 % ell != 0:
            # the bound and congruences apply
            if ell > Q:
                reasons.append(f"{ell} exceeds the bound Q = {Q}")
            elif ell > D and (c1 % ell != 1 or c2 % ell != 0):
                reasons.append(
                    f"(c1, c2) = ({c1 % ell}, {c2 % ell}) (mod {ell}) is not (1, 0)"
                )
        if reasons:
            exclusions[ell] = tuple(reasons)
        else:
            admissible.add(ell)
    return admissible, exclusions


def admissible_ell(
    cert: OmegaCertificate, n_fact: Factorization, pm1_fact: Factorization
) -> set[int]:
    """Odd primes not excluded from dividing n2, for this certificate."""
    admissible, _ = admissible_odd_primes_from(
        n_fact,
        cert.p,
        pm1_fact,
        cert.field.Q,
        cert.field.D,
        cert.c[0],
        cert.c[1],
        cert.gcd34,
    )
    return admissible


def exponent_chains(v: int, e2_cap: int) -> list[tuple[int, int, int, int]]:
    """Nondecreasing exponent 4-tuples summing to v with e2 <= e2_cap."""
    chains = []
    for e1 in range(v // 4 + 1):
        for e2 in range(e1, min(e2_cap, (v - e1) // 3) + 1):
            rest = v - e1 - e2
            for e3 in range(e2, rest // 2 + 1):
                e4 = rest - e3
                if e4 >= e3:
                    chains.append((e1, e2, e3, e4))
    return chains


def enumerate_structures(
    cert: OmegaCertificate,
    n_fact: Factorization,
    pm1_fact: Factorization,
    admissible: set[int],
    cap: int = 10**6,
) -> StructureReport:
    """All candidate tuples for this certificate's Jacobian order.

    ``n_fact`` must be complete.  A partial ``pm1_fact`` restricts n2 to
    its factored part and attaches a warning (an unfactored cofactor
    cannot witness divisibility).
    """
    _, exclusions = admissible_odd_primes_from(
        n_fact, cert.p, pm1_fact, cert.field.Q, cert.field.D,
        cert.c[0], cert.c[1], cert.gcd34,
    )
    warnings: list[str] = []
    if not pm1_fact.is_complete:
        warnings.append(
            "p - 1 not fully factored; n2 restricted to the factored part "
            f"(composite cofactor {pm1_fact.cofactor})"
        )
    candidates = _enumerate_from_factorization(n_fact, pm1_fact, admissible, cap)
    guaranteed = min(c.n4 for c in candidates)
    for c in candidates:
        assert c.n4 % guaranteed == 0
    return StructureReport(
        candidates=candidates,
        admissible_odd_primes=frozenset(admissible),
        Q=cert.field.Q,
        guaranteed_cyclic=guaranteed,
        warnings=tuple(warnings),
        exclusions=exclusions,
    )


def _enumerate_from_factorization(
    n_fact: Factorization,
    pm1_fact: Factorization,
    admissible: set[int],
    cap: int,
) -> tuple[StructureCandidate, ...]:
    if not n_fact.is_complete:
        raise IncompleteFactorization("N has an unfactored cofactor")
    per_prime: list[list[tuple[int, int, int, int]]] = []
    total = 1
    for q, v in n_fact.factors:
        e2_cap = pm1_fact.exponent(q)
        if q != 2 and q not in admissible:
            e2_cap = 0
        chains = exponent_chains(v, e2_cap)
        powers = [tuple(q**e for e in chain) for chain in chains]
        per_prime.append(powers)
        total *= len(powers)
        if total > cap:
            raise CombinatorialBlowup(f"more than {cap} candidate structures")
    out = []
    for combo in itertools.product(*per_prime):
        n = [1, 1, 1, 1]
        for part in combo:
            for i in range(4):
                n[i] *= part[i]
        out.append(StructureCandidate(*n))
    return tuple(sorted(out, key=StructureCandidate.as_tuple))


def guaranteed_cyclic(report: StructureReport) -> int:
    """Order of a cyclic subgroup present in every admissible structure."""
    return report.guaranteed_cyclic
