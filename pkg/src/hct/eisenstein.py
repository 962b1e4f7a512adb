"""Eisenstein-integer arithmetic and the three-way classification of squared diameters.

The ring is Z[omega] with omega = -1/2 + (sqrt(3)/2)i.  Elements are stored as
a - b*omega, whose norm is the quadratic form a^2 + ab + b^2, so squared lattice
distances are exactly the norms (the Loeschian numbers, OEIS A003136).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import NotAttainable, NotDecomposable, ZeroElement

CASE1 = "Case1"
CASE2 = "Case2"
CASE3 = "Case3"


def _is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, valid for all n < 3.3e24 (covers 64-bit)."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def factorint(n: int) -> dict[int, int]:
    """Prime factorization by trial division with a Miller-Rabin shortcut."""
    if n < 1:
        raise ValueError("factorint needs a positive integer")
    out: dict[int, int] = {}
    for p in (2, 3):
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    p = 5
    while p * p <= n:
        if _is_prime(n):
            break
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 2 if p % 3 == 2 else 4  # skip multiples of 2 and 3
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


@dataclass(frozen=True)
class EisensteinInteger:
    """The element a - b*omega."""

    a: int
    b: int

    @property
    def norm(self) -> int:
        return self.a * self.a + self.a * self.b + self.b * self.b

    def conjugate(self) -> "EisensteinInteger":
        # conj(a - b*omega) = a - b*omega^2 = (a + b) + b*omega
        return EisensteinInteger(self.a + self.b, -self.b)

    def __mul__(self, other: "EisensteinInteger") -> "EisensteinInteger":
        # (a - b w)(c - d w) with w^2 = -1 - w
        a, b, c, d = self.a, self.b, other.a, other.b
        return EisensteinInteger(a * c - b * d, a * d + b * c + b * d)

    def __neg__(self) -> "EisensteinInteger":
        return EisensteinInteger(-self.a, -self.b)

    def divide_exact(self, other: "EisensteinInteger") -> "EisensteinInteger | None":
        """self / other if it is an Eisenstein integer, else None."""
        nw = other.norm
        if nw == 0:
            raise ZeroDivisionError
        z = self * other.conjugate()
        if z.a % nw or z.b % nw:
            return None
        return EisensteinInteger(z.a // nw, z.b // nw)


ONE = EisensteinInteger(1, 0)
# units in a - b*omega form: 1, -1, -omega, omega, -omega^2, omega^2
UNITS = (
    EisensteinInteger(1, 0),
    EisensteinInteger(-1, 0),
    EisensteinInteger(0, 1),
    EisensteinInteger(0, -1),
    EisensteinInteger(1, -1),
    EisensteinInteger(-1, 1),
)

RAMIFIED = EisensteinInteger(1, 1)  # 1 - omega, norm 3


@dataclass(frozen=True)
class EisensteinFactorization:
    """unit * (1-omega)^alpha * prod p_j^beta_j * prod pi_k^gamma_k.

    Each pi_k is a canonical Eisenstein prime a - b*omega (conjugate=False)
    or a - b*omega^2 (conjugate=True) with a > b >= 1 and prime norm.
    """

    unit: EisensteinInteger
    alpha: int
    rational_primes: tuple[tuple[int, int], ...]
    eisenstein_primes: tuple[tuple[int, int, int, bool], ...]

    def recompose(self) -> EisensteinInteger:
        z = self.unit
        for _ in range(self.alpha):
            z = z * RAMIFIED
        for p, beta in self.rational_primes:
            z = z * EisensteinInteger(p ** beta, 0)
        for a, b, gamma, conj in self.eisenstein_primes:
            pi = EisensteinInteger(a, b)
            if conj:
                pi = pi.conjugate()
            for _ in range(gamma):
                z = z * pi
        return z


def is_attainable(n: int) -> bool:
    """True iff n = a^2 + ab + b^2 for integers a >= b >= 0."""
    if n < 1:
        raise ValueError("n must be a positive integer")
    for p, e in factorint(n).items():
        if p % 3 == 2 and e % 2 == 1:
            return False
    return True


def loeschian_representations(n: int) -> list[tuple[int, int]]:
    """All (a, b) with a >= b >= 0 and a^2 + ab + b^2 = n, by descending a."""
    if n < 1:
        raise ValueError("n must be a positive integer")
    reps = []
    for b in range(math.isqrt(n // 3) + 1):
        disc = 4 * n - 3 * b * b
        r = math.isqrt(disc)
        if r * r != disc:
            continue
        if (r - b) % 2 == 0:
            a = (r - b) // 2
            if a >= b:
                reps.append((a, b))
    reps.sort(key=lambda ab: -ab[0])
    return reps


def _is_trivial(rep: tuple[int, int]) -> bool:
    a, b = rep
    return b == 0 or a == b


@dataclass(frozen=True)
class DiameterClass:
    n: int
    attainable: bool
    case: str
    representations: tuple[tuple[int, int], ...] = field(default=())


def classify_diameter(n: int) -> DiameterClass:
    """Case1/Case2/Case3 split of an attainable squared diameter.

    Case1: no prime 1 mod 3 divides n.  Case2: exactly one, to the first
    power.  Case3: everything else attainable.
    """
    if not is_attainable(n):
        raise NotAttainable(f"{n} is not a Loeschian number")
    split = [(p, e) for p, e in factorint(n).items() if p % 3 == 1]
    if not split:
        case = CASE1
    elif len(split) == 1 and split[0][1] == 1:
        case = CASE2
    else:
        case = CASE3
    return DiameterClass(n, True, case, tuple(loeschian_representations(n)))


def case_lists(count: int = 50, start: int = 1) -> dict[str, list[int]]:
    """The first `count` attainable squared diameters in each case."""
    out: dict[str, list[int]] = {CASE1: [], CASE2: [], CASE3: []}
    n = start
    while any(len(v) < count for v in out.values()):
        if is_attainable(n):
            bucket = out[classify_diameter(n).case]
            if len(bucket) < count:
                bucket.append(n)
        n += 1
    return out


def factor_rational_prime(p: int) -> tuple[int, int]:
    """The unique a > b >= 1 with a^2 + ab + b^2 = p, for a prime p = 1 mod 3."""
    if p == 3 or p % 3 != 1 or not _is_prime(p):
        raise NotDecomposable(f"{p} does not split into conjugate Eisenstein primes")
    for b in range(1, math.isqrt(p // 3) + 1):
        disc = 4 * p - 3 * b * b
        r = math.isqrt(disc)
        if r * r == disc and (r - b) % 2 == 0:
            a = (r - b) // 2
            if a > b:
                return (a, b)
    raise NotDecomposable(f"no representation found for {p}")  # unreachable for valid p


def factor_eisenstein(z: EisensteinInteger) -> EisensteinFactorization:
    """Unique prime decomposition, by trial division ordered by norm."""
    if z.norm == 0:
        raise ZeroElement("zero has no factorization")
    alpha = 0
    rational: list[tuple[int, int]] = []
    eps: list[tuple[int, int, int, bool]] = []
    for p in sorted(factorint(z.norm)):
        if p == 3:
            while True:
                q = z.divide_exact(RAMIFIED)
                if q is None:
                    break
                z = q
                alpha += 1
        elif p % 3 == 2:
            beta = 0
            while True:
                q = z.divide_exact(EisensteinInteger(p, 0))
                if q is None:
                    break
                z = q
                beta += 1
            if beta:
                rational.append((p, beta))
        else:
            a, b = factor_rational_prime(p)
            for conj in (False, True):
                pi = EisensteinInteger(a, b)
                if conj:
                    pi = pi.conjugate()
                gamma = 0
                while True:
                    q = z.divide_exact(pi)
                    if q is None:
                        break
                    z = q
                    gamma += 1
                if gamma:
                    eps.append((a, b, gamma, conj))
    if z not in UNITS:
        raise ZeroElement(f"factorization left a non-unit remainder {z}")  # defensive
    return EisensteinFactorization(z, alpha, tuple(rational), tuple(eps))


def ground_state_count(n: int) -> int:
    """Number of dense-packing configurations: n per trivial class, 2n per chiral."""
    if not is_attainable(n):
        raise NotAttainable(f"{n} is not a Loeschian number")
    return sum(n if _is_trivial(rep) else 2 * n for rep in loeschian_representations(n))
