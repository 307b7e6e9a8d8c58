"""Closed-form counts and bounds for characters and twist-fixing sets.

Notation: X(k) are the characters of conductor <= k, X'(k) those of conductor
exactly k, and X'_pi(k, j) those chi in X'(k) with a(chi pi) = j.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .characters import CharacterX, multiply
from .localfield import prime_power_base
from .reps import QuasiSquareIntegrable, Representation, bh_bound, conductor_bounds

EXACT = "exact"
UPPER = "upper-bound"
EMPTY = "empty-set"


def _check_q(q: int) -> None:
    if not isinstance(q, int) or prime_power_base(q) is None:
        raise ValueError(f"q must be a prime power >= 2, got {q}")


def count_X(q: int, k: int) -> int:
    _check_q(q)
    if k < 0:
        return 0
    if k == 0:
        return 1
    return q ** (k - 1) * (q - 1)


def count_Xprime(q: int, k: int) -> int:
    _check_q(q)
    if k < 0:
        return 0
    if k == 0:
        return 1
    if k == 1:
        return q - 2
    return q ** (k - 2) * (q - 1) ** 2


@dataclass(frozen=True)
class CountReport:
    kind: str
    value: int
    source: str

    def __post_init__(self) -> None:
        if self.kind not in (EXACT, UPPER, EMPTY):
            raise ValueError(f"unknown report kind {self.kind!r}")
        if self.kind == EMPTY and self.value != 0:
            raise ValueError("empty-set reports carry value 0")

    def to_json(self) -> dict:
        return {"kind": self.kind, "value": self.value, "source": self.source}


def _empty(source: str) -> CountReport:
    return CountReport(EMPTY, 0, source)


def interfering_components(pi: Representation, k: int) -> tuple[int, ...]:
    """Indices i with pi_i not twist minimal and a(pi_i) = n_i k.

    Every other component has a(chi pi_i) = max(a(pi_i), n_i k) for all chi in X'(k).
    """
    return tuple(
        i
        for i, c in enumerate(pi.components)
        if not c.is_twist_minimal and c.conductor == c.n * k
    )


def twist_fixing_bound(pi: Representation, k: int, j: int) -> CountReport:
    """Sharpest certified statement about #X'_pi(k, j).

    Returns `exact` when no component can interfere, `empty-set` when j is out
    of reach, and otherwise the smallest upper bound among those valid for the
    number of interfering components.
    """
    if k < 0 or j < 0:
        raise ValueError("k and j must be non-negative")
    q = pi.field.q
    lower, upper = conductor_bounds(pi, k)
    if not lower <= j <= min(upper, bh_bound(pi.conductor, k, pi.n)):
        return _empty("conductor sandwich")

    phi = interfering_components(pi, k)
    fixed = sum(max(c.conductor, c.n * k) for i, c in enumerate(pi.components) if i not in phi)
    if not phi:
        if j == fixed:
            return CountReport(EXACT, count_Xprime(q, k), "no interference: a(chi pi) constant on X'(k)")
        return _empty("no interference: a(chi pi) constant on X'(k)")

    comps = [pi.components[i] for i in phi]
    lo = fixed + sum(c.a_min for c in comps)
    hi = fixed + sum(c.conductor for c in comps)
    if not lo <= j <= hi:
        return _empty("interfering summands lie in [a_min_i, n_i k]")

    candidates = [
        (count_Xprime(q, k), "#X'(k)"),
        (
            max(count_X(q, max(c.a_min // c.n, j // c.n)) for c in comps),
            "per-component bound #X(max(floor(a_min_i/n_i), floor(j/n_i)))",
        ),
    ]
    if len(phi) == 1:
        (c,) = comps
        ell = c.conductor - (j - fixed)
        candidates.append((count_X(q, k - ell // c.n), "single-component bound #X(k - floor(ell/n_i))"))
        candidates.append((count_X(q, j // pi.n), "rank-averaged bound #X(floor(j/n))"))
    value, source = min(candidates)
    return CountReport(UPPER, value, source)


def exists_an_ell_bound(pi: Representation, j: int) -> int:
    """#X(floor(j/n)), the rank-averaged bound, valid when at most one component interferes."""
    return count_X(pi.field.q, j // pi.n)


def twist_fixing_sq_bound(atom: QuasiSquareIntegrable, k: int, j: int) -> int | None:
    """#X(k - floor(ell/n)) for j = max(a(pi), n k) - ell; None when j is outside the stated range."""
    top = max(atom.conductor, atom.n * k)
    if not atom.a_min <= j <= top:
        return None
    return count_X(atom.field.q, k - (top - j) // atom.n)


class Interference(enum.Enum):
    IMPOSSIBLE_BY_DIVISIBILITY = "ImpossibleByDivisibility"
    ZERO_BY_CONDUCTOR_MISMATCH = "ZeroByConductorMismatch"
    ZERO_BY_PRODUCT_CONDUCTOR = "ZeroByProductConductor"
    POSSIBLE = "Possible"


_PART = {
    Interference.IMPOSSIBLE_BY_DIVISIBILITY: 1,
    Interference.ZERO_BY_CONDUCTOR_MISMATCH: 2,
    Interference.ZERO_BY_PRODUCT_CONDUCTOR: 3,
    Interference.POSSIBLE: 3,
}


@dataclass(frozen=True)
class InterferenceStatus:
    tags: tuple[Interference, ...]

    @property
    def parts(self) -> tuple[int, ...]:
        return tuple(_PART[t] for t in self.tags)

    @property
    def delta_vanishes(self) -> bool:
        return Interference.POSSIBLE not in self.tags

    def to_json(self) -> list[dict]:
        return [{"status": t.value, "part": _PART[t]} for t in self.tags]


def _atom_status(atom: QuasiSquareIntegrable, a_chi: int) -> Interference:
    if atom.conductor % atom.n:
        return Interference.IMPOSSIBLE_BY_DIVISIBILITY
    if atom.conductor != atom.n * a_chi:
        return Interference.ZERO_BY_CONDUCTOR_MISMATCH
    return Interference.POSSIBLE


def interference_predicate(pi: Representation, a_chi: int) -> InterferenceStatus:
    return InterferenceStatus(tuple(_atom_status(c, a_chi) for c in pi.components))


def interference_refine(pi: Representation, chi: CharacterX) -> InterferenceStatus:
    """As `interference_predicate`, then settle the remaining cases with a(chi mu_i) = a(chi)."""
    tags = []
    for c in pi.components:
        t = _atom_status(c, chi.conductor)
        if t is Interference.POSSIBLE and multiply(chi, c.mu).conductor == chi.conductor:
            t = Interference.ZERO_BY_PRODUCT_CONDUCTOR
        tags.append(t)
    return InterferenceStatus(tuple(tags))


QUANT_SOURCE = "quantitative interference count, as stated; not asserted exact (see verification report)"


def stated_delta_count(atom: QuasiSquareIntegrable, j: int) -> CountReport:
    """#X((a(pi_i) - j)/n_i), claimed to count chi with delta_chi(pi_i) = a(pi_i) - j.

    Range: 0 < j <= a(pi_i) - a_min and j = a(pi_i) mod n_i; otherwise empty-set.
    """
    a = atom.conductor
    if not 0 < j <= a - atom.a_min or (a - j) % atom.n:
        return _empty("outside 0 < j <= a(pi_i) - a(pi_i^min), j = a(pi_i) mod n_i")
    return CountReport(UPPER, count_X(atom.field.q, (a - j) // atom.n), QUANT_SOURCE)


def stated_full_delta_count(atom: QuasiSquareIntegrable) -> CountReport:
    """(q - 2) #X(a(pi_i)/n_i - 1), claimed to count chi with delta_chi(pi_i) = a(pi_i)."""
    if atom.is_twist_minimal:
        return _empty("twist-minimal component never interferes")
    k = atom.conductor // atom.n
    q = atom.field.q
    return CountReport(UPPER, (q - 2) * count_X(q, k - 1), QUANT_SOURCE)


def dominant_conductor(pi: Representation, a_chi: int) -> int:
    return sum(max(c.conductor, c.n * a_chi) for c in pi.components)
