"""Quartic CM field parameters, validation, primitivity, and the bound Q.

The field is K = Q(i*sqrt(a + b*xi)) over the real quadratic subfield
K0 = Q(sqrt(D)), where xi = (1 + sqrt(D))/2 when D = 1 (mod 4) and
xi = sqrt(D) otherwise.  All parameters (D, a, b) are integers with
(a, b) expressed on the xi-basis, and a + b*xi must be totally positive.

K is primitive (its genus-2 CM Jacobians are irreducible) unless it is
Galois biquadratic, which happens exactly when the relative norm of
a + b*xi down to Q is a perfect square.  That norm is also one of the
ingredients of the bound Q on odd primes that can divide the second
invariant factor of the Jacobian group.

Only class-number-one real subfields are supported, enforced through an
explicit allowlist of D values.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

# real quadratic fields Q(sqrt(D)) of class number one used here
SUPPORTED_D = frozenset({2, 3, 5, 6, 7, 11, 13, 17, 19, 21, 29, 33, 37, 41, 57, 73})


class FieldError(ValueError):
    """Invalid CM field parameters."""


class NotSquarefree(FieldError):
    pass


class WrongResidue(FieldError):
    """D = 0 (mod 4) can never be a squarefree radicand."""


class NotTotallyPositive(FieldError):
    """a + b*xi is not positive under both real embeddings."""


class UnsupportedD(FieldError):
    """D is not on the class-number-one allowlist."""


class NotPrimitive(FieldError):
    """K is Galois biquadratic; its CM Jacobians are reducible."""


class NonIntegralConversion(FieldError):
    """Coordinate change would need half-integers."""


class FieldCase(enum.Enum):
    CASE23 = "2,3 mod 4"
    CASE1 = "1 mod 4"


class Basis(enum.Enum):
    XI = "xi"
    SQRT_D = "sqrtD"


@dataclass(frozen=True)
class CMFieldParams:
    """The triple (D, a, b) with a, b on the xi-basis."""

    D: int
    a: int
    b: int

    @property
    def case(self) -> FieldCase:
        return FieldCase.CASE1 if self.D % 4 == 1 else FieldCase.CASE23

    def radicand_norm(self) -> int:
        """Norm of a + b*xi from K0 down to Q (an integer in both cases)."""
        if self.case is FieldCase.CASE23:
            return self.a * self.a - self.b * self.b * self.D
        return self.a * self.a + self.a * self.b + self.b * self.b * (1 - self.D) // 4


@dataclass(frozen=True)
class ValidatedField:
    params: CMFieldParams
    Q: int
    primitive: bool

    @property
    def D(self) -> int:
        return self.params.D

    @property
    def a(self) -> int:
        return self.params.a

    @property
    def b(self) -> int:
        return self.params.b

    @property
    def case(self) -> FieldCase:
        return self.params.case


def _is_square(n: int) -> bool:
    if n < 0:
        return False
    r = math.isqrt(n)
    return r * r == n


def _is_squarefree(n: int) -> bool:
    d = 2
    while d * d <= n:
        if n % (d * d) == 0:
            return False
        d += 1
    return True


def validate(D: int, a: int, b: int) -> ValidatedField:
    """Check all field invariants and attach Q and the primitivity flag.

    Raises a FieldError subclass on structurally invalid input.  A valid
    but non-primitive field is returned with primitive=False; rejecting
    those is the caller's policy (generation refuses them, analysis only
    warns).
    """
    if D % 4 == 0:
        raise WrongResidue(f"D={D} is divisible by 4")
    if D < 2:
        raise UnsupportedD(f"D={D} must be >= 2")
    if D > 10**6:
        # the allowlist tops out at 73; skip the O(sqrt(D)) scan
        raise UnsupportedD(f"D={D} is not on the class-number-one allowlist")
    if not _is_squarefree(D):
        raise NotSquarefree(f"D={D} has a square factor")
    if D not in SUPPORTED_D:
        raise UnsupportedD(f"D={D} is not on the class-number-one allowlist")

    params = CMFieldParams(D, a, b)
    if params.case is FieldCase.CASE23:
        positive = a > 0 and a * a > b * b * D
    else:
        s = 2 * a + b
        positive = s > 0 and s * s > b * b * D
    if not positive:
        raise NotTotallyPositive(f"a + b*xi with (D,a,b)=({D},{a},{b}) is not totally positive")

    return ValidatedField(params, compute_Q(params), is_primitive(params))


def require_primitive(field: ValidatedField) -> ValidatedField:
    if not field.primitive:
        raise NotPrimitive(
            f"(D,a,b)=({field.D},{field.a},{field.b}) is biquadratic: "
            f"norm {field.params.radicand_norm()} is a perfect square"
        )
    return field


def is_primitive(params: CMFieldParams) -> bool:
    """True unless K is Galois with group Z/2 x Z/2.

    K is biquadratic exactly when the norm of -eta^2 = a + b*xi to Q is a
    rational square; the non-square cases (cyclic Galois or non-Galois)
    are the primitive ones.
    """
    return not _is_square(params.radicand_norm())


def compute_Q(params: CMFieldParams) -> int:
    """The largest odd prime bound from the field constants."""
    D, a, b = params.D, params.a, params.b
    if params.case is FieldCase.CASE23:
        return max(a, D, a * a - b * b * D)
    return max(a, D, 4 * a * (a + b) - b * b * (D - 1), a * D + 2 * b * (D - 1))


def basis_convert(
    coeffs: tuple[int, int, int, int],
    frm: Basis,
    to: Basis,
    params: CMFieldParams,
) -> tuple[int, int, int, int]:
    """Convert element coordinates between the xi- and sqrt(D)-bases.

    Coordinates are (c1, c2, c3, c4) for c1 + c2*w + (c3 + c4*w)*eta with
    w the basis generator.  For D = 2, 3 (mod 4) the two bases coincide.
    For D = 1 (mod 4): u1 + u2*sqrt(D) = (u1 - u2) + 2*u2*xi, applied to
    the real and eta parts separately; the reverse direction requires the
    xi-coefficients to be even.
    """
    if len(coeffs) != 4:
        raise ValueError("expected 4 coordinates")
    if frm == to or params.case is FieldCase.CASE23:
        return tuple(coeffs)  # type: ignore[return-value]
    c1, c2, c3, c4 = coeffs
    if frm is Basis.SQRT_D:
        return (c1 - c2, 2 * c2, c3 - c4, 2 * c4)
    if c2 % 2 or c4 % 2:
        raise NonIntegralConversion(
            f"xi-coefficients ({c2}, {c4}) must be even to move to the sqrt(D)-basis"
        )
    return (c1 + c2 // 2, c2 // 2, c3 + c4 // 2, c4 // 2)


def field_params_from_basis(D: int, a: int, b: int, basis: Basis) -> tuple[int, int]:
    """Interpret (a, b) given in ``basis`` and return them on the xi-basis."""
    if basis is Basis.XI or D % 4 != 1:
        return a, b
    return a - b, 2 * b


def field_params_to_sqrtd(params: CMFieldParams) -> tuple[int, int] | None:
    """(a', b') with a + b*xi = a' + b'*sqrt(D), or None when non-integral."""
    if params.case is FieldCase.CASE23:
        return params.a, params.b
    if params.b % 2:
        return None
    return params.a + params.b // 2, params.b // 2
