"""Base field parameters and the filtered unit quotients o^x / U(m).

Only the abstract group structure is modelled. For an unramified extension
of Q_p with p odd the quotient o^x / U(m), m >= 1, splits as

    C_(q-1) x (C_(p^(m-1)))^f

with the image of U(l) equal to {0} in the first factor and to the multiples
of p^(l-1) in each p-power factor.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from math import prod


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def prime_power_base(q: int) -> tuple[int, int] | None:
    """Return (p, f) with q == p**f, or None if q is not a prime power."""
    if q < 2:
        return None
    p = next(d for d in range(2, q + 1) if q % d == 0)
    f, r = 0, q
    while r % p == 0:
        r //= p
        f += 1
    return (p, f) if r == 1 else None


def vp(n: int, p: int) -> int | None:
    """p-adic valuation of an integer; None for n == 0."""
    if n == 0:
        return None
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def ceil_div(m: int, n: int) -> int:
    return -(-m // n)


@dataclass(frozen=True)
class LocalFieldParams:
    p: int
    f: int = 1

    def __post_init__(self) -> None:
        if not isinstance(self.p, int) or not isinstance(self.f, int):
            raise ValueError("p and f must be integers")
        if self.p == 2 or not is_prime(self.p):
            raise ValueError(f"p not an odd prime: {self.p}")
        if self.f < 1:
            raise ValueError(f"f must be >= 1, got {self.f}")

    @property
    def q(self) -> int:
        return self.p**self.f

    def __str__(self) -> str:
        return f"F(p={self.p}, f={self.f}, q={self.q})"


def make_field(p: int, f: int = 1) -> LocalFieldParams:
    return LocalFieldParams(p, f)


@dataclass(frozen=True)
class UnitQuotientGroup:
    """The finite abelian group o^x / U(m), written additively.

    Elements are tuples of residues, one per entry of `invariant_factors`.
    """

    field: LocalFieldParams
    level: int

    def __post_init__(self) -> None:
        if self.level < 0:
            raise ValueError(f"level must be >= 0, got {self.level}")

    @cached_property
    def invariant_factors(self) -> tuple[int, ...]:
        if self.level == 0:
            return ()
        return (self.field.q - 1,) + (self.field.p ** (self.level - 1),) * self.field.f

    @property
    def order(self) -> int:
        return prod(self.invariant_factors)

    def filtration_generators(self, l: int) -> list[tuple[int, ...]]:
        """Generators of the image of U(l) in this quotient (0 <= l <= level)."""
        if not 0 <= l <= self.level:
            raise ValueError(f"filtration index {l} outside 0..{self.level}")
        factors = self.invariant_factors
        if l == 0:
            starts = range(len(factors))
            step = [1] * len(factors)
        else:
            starts = range(1, len(factors))
            step = [0] + [self.field.p ** (l - 1)] * self.field.f
        gens = []
        for i in starts:
            g = [0] * len(factors)
            g[i] = step[i] % factors[i]
            gens.append(tuple(g))
        return gens

    def filtration_order(self, l: int) -> int:
        if not 0 <= l <= self.level:
            raise ValueError(f"filtration index {l} outside 0..{self.level}")
        if l == 0:
            return self.order
        return self.field.q ** (self.level - l)

    def filtration_subgroup(self, l: int) -> set[tuple[int, ...]]:
        """All elements of the image of U(l), by closure under addition of its generators."""
        factors = self.invariant_factors
        zero = tuple(0 for _ in factors)
        seen = {zero}
        frontier = [zero]
        gens = self.filtration_generators(l)
        while frontier:
            x = frontier.pop()
            for g in gens:
                y = tuple((a + b) % n for a, b, n in zip(x, g, factors))
                if y not in seen:
                    seen.add(y)
                    frontier.append(y)
        return seen

    def elements(self):
        from itertools import product

        return product(*(range(n) for n in self.invariant_factors))


def unit_quotient_group(field: LocalFieldParams, m: int) -> UnitQuotientGroup:
    return UnitQuotientGroup(field, m)


def nrd_image_level(m: int, n: int) -> int:
    """Level l with Nrd(U_D(m)) = U_D(m) cap F^x = U_F(l), i.e. ceil(m / n)."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if m < 0:
        raise ValueError(f"m must be >= 0, got {m}")
    return ceil_div(m, n)
