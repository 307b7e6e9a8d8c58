"""Characters of o^x, i.e. the group X of characters of F^x trivial on the uniformizer.

A character of o^x / U(m) with invariant factors [q-1, p^(m-1) x f] is the
exponent vector e, acting as x -> exp(2 pi i sum_i e_i x_i / n_i). Every
character is stored at its exact conductor level, which makes structural
equality the same as equality of characters.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterator, Sequence

from .localfield import LocalFieldParams, UnitQuotientGroup, vp

DEFAULT_LIMIT = 10**7


class FieldMismatch(ValueError):
    pass


class ResourceLimitExceeded(RuntimeError):
    pass


class InvalidCharacter(ValueError):
    """Well-formed character data that does not describe the stated character."""


def _factors(field: LocalFieldParams, level: int) -> tuple[int, ...]:
    return UnitQuotientGroup(field, level).invariant_factors


def _exact_conductor(field: LocalFieldParams, level: int, exps: Sequence[int]) -> int:
    if not any(exps):
        return 0
    a = 1 if exps[0] else 0
    for e in exps[1:]:
        if e:
            a = max(a, level - vp(e, field.p))
    return a


def lift_exponents(
    field: LocalFieldParams, exps: Sequence[int], src: int, dst: int
) -> tuple[int, ...]:
    """Re-express a character of o^x/U(src) as one of o^x/U(dst), dst >= src."""
    if dst < src:
        raise ValueError(f"cannot lift from level {src} down to {dst}")
    if dst == 0:
        return ()
    if src == 0:
        return (0,) * (1 + field.f)
    scale = field.p ** (dst - src)
    return (exps[0],) + tuple(e * scale for e in exps[1:])


@dataclass(frozen=True)
class CharacterX:
    field: LocalFieldParams
    conductor: int
    exponents: tuple[int, ...]

    def __post_init__(self) -> None:
        factors = _factors(self.field, self.conductor)
        if len(self.exponents) != len(factors):
            raise ValueError(
                f"expected {len(factors)} exponents at level {self.conductor}, "
                f"got {len(self.exponents)}"
            )
        if any(not 0 <= e < n for e, n in zip(self.exponents, factors)):
            raise ValueError(f"exponents {self.exponents} not reduced mod {factors}")
        if _exact_conductor(self.field, self.conductor, self.exponents) != self.conductor:
            raise ValueError("character is not stored at its conductor level")

    def __mul__(self, other: CharacterX) -> CharacterX:
        return multiply(self, other)

    def __pow__(self, n: int) -> CharacterX:
        return power(self, n)

    @property
    def is_trivial(self) -> bool:
        return self.conductor == 0

    def exponents_at(self, level: int) -> tuple[int, ...]:
        return lift_exponents(self.field, self.exponents, self.conductor, level)

    def to_json(self) -> dict:
        return {"conductor": self.conductor, "exponents": list(self.exponents)}

    def __repr__(self) -> str:
        return f"CharacterX(q={self.field.q}, a={self.conductor}, e={list(self.exponents)})"


def trivial_character(field: LocalFieldParams) -> CharacterX:
    return CharacterX(field, 0, ())


def from_exponents(field: LocalFieldParams, level: int, exponents: Sequence[int]) -> CharacterX:
    """Build the character of o^x/U(level) with the given raw exponents, canonicalized."""
    factors = _factors(field, level)
    if len(exponents) != len(factors):
        raise ValueError(
            f"exponent list has length {len(exponents)}, level {level} needs {len(factors)}"
        )
    exps = tuple(int(e) % n for e, n in zip(exponents, factors))
    a = _exact_conductor(field, level, exps)
    if a == 0:
        return CharacterX(field, 0, ())
    scale = field.p ** (level - a)
    return CharacterX(field, a, (exps[0],) + tuple(e // scale for e in exps[1:]))


def from_cyclic_exponent(field: LocalFieldParams, level: int, e: int) -> CharacterX:
    """Character x -> exp(2 pi i e x / N) of the cyclic group o^x/U(level), N = (q-1) p^(level-1).

    Only meaningful for f == 1, where the quotient is cyclic. The generator is
    matched to the factor form through the CRT splitting N = (q-1) * p^(level-1).
    """
    if field.f != 1:
        raise ValueError("cyclic exponent form needs f == 1")
    if level == 0:
        return trivial_character(field)
    m1, m2 = field.q - 1, field.p ** (level - 1)
    e0 = e * pow(m2, -1, m1) % m1 if m1 > 1 else 0
    e1 = e * pow(m1, -1, m2) % m2 if m2 > 1 else 0
    return from_exponents(field, level, (e0, e1))


def to_cyclic_exponent(chi: CharacterX, level: int | None = None) -> int:
    """Inverse of `from_cyclic_exponent` at the given level (default: the conductor)."""
    if chi.field.f != 1:
        raise ValueError("cyclic exponent form needs f == 1")
    level = chi.conductor if level is None else level
    if level == 0:
        return 0
    e0, e1 = chi.exponents_at(level)
    m1, m2 = chi.field.q - 1, chi.field.p ** (level - 1)
    return (e0 * m2 + e1 * m1) % (m1 * m2)


def _check_same_field(a: CharacterX, b: CharacterX) -> None:
    if a.field != b.field:
        raise FieldMismatch(f"characters over different fields: {a.field} vs {b.field}")


def multiply(chi1: CharacterX, chi2: CharacterX) -> CharacterX:
    _check_same_field(chi1, chi2)
    level = max(chi1.conductor, chi2.conductor)
    e1, e2 = chi1.exponents_at(level), chi2.exponents_at(level)
    return from_exponents(chi1.field, level, [a + b for a, b in zip(e1, e2)])


def inverse(chi: CharacterX) -> CharacterX:
    return from_exponents(chi.field, chi.conductor, [-e for e in chi.exponents])


def power(chi: CharacterX, n: int) -> CharacterX:
    return from_exponents(chi.field, chi.conductor, [n * e for e in chi.exponents])


def _guard(size: int, limit: int | None) -> None:
    limit = DEFAULT_LIMIT if limit is None else limit
    if size > limit:
        raise ResourceLimitExceeded(f"enumeration of {size} characters exceeds limit {limit}")


def iter_X(field: LocalFieldParams, k: int, limit: int | None = None) -> Iterator[CharacterX]:
    """All characters with conductor <= k, lexicographic in the level-k exponent vector."""
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    group = UnitQuotientGroup(field, k)
    _guard(group.order, limit)
    for exps in product(*(range(n) for n in group.invariant_factors)):
        yield from_exponents(field, k, exps)


def enumerate_X(field: LocalFieldParams, k: int, limit: int | None = None) -> list[CharacterX]:
    return list(iter_X(field, k, limit))


def enumerate_Xprime(field: LocalFieldParams, k: int, limit: int | None = None) -> list[CharacterX]:
    return [chi for chi in iter_X(field, k, limit) if chi.conductor == k]


def character_from_json(field: LocalFieldParams, data: dict) -> CharacterX:
    """Parse {"conductor": k, "exponents": [...]}.

    The exponents are read at level `conductor` in the factor order
    [q-1, p^(k-1) x f]. For f == 1 a single exponent is also accepted and read
    in the cyclic form of `from_cyclic_exponent`. The result must have exactly
    the stated conductor.
    """
    if not isinstance(data, dict):
        raise ValueError(f"character must be a JSON object, got {type(data).__name__}")
    unknown = set(data) - {"conductor", "exponents"}
    if unknown:
        raise ValueError(f"unknown character keys: {sorted(unknown)}")
    try:
        k = data["conductor"]
        exps = data["exponents"]
    except KeyError as exc:
        raise ValueError(f"character missing key {exc}") from None
    if not isinstance(k, int) or k < 0 or not isinstance(exps, list):
        raise ValueError("conductor must be a non-negative integer and exponents a list")
    if any(not isinstance(e, int) for e in exps):
        raise ValueError("exponents must be integers")
    n_factors = len(_factors(field, k))
    if len(exps) == n_factors:
        chi = from_exponents(field, k, exps)
    elif field.f == 1 and k >= 1 and len(exps) == 1:
        chi = from_cyclic_exponent(field, k, exps[0])
    else:
        raise ValueError(f"level {k} needs {n_factors} exponents, got {len(exps)}")
    if chi.conductor != k:
        raise InvalidCharacter(f"stated conductor {k} but character has conductor {chi.conductor}")
    return chi
