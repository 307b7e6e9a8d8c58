"""Representations as Langlands sums of quasi-square-integrable atoms, and their twisted conductors.

An atom is stored as mu * pi_min: the rank n, an opaque label for the twist-minimal
class pi_min, its conductor a_min, the twisting character mu and optionally the
central character of pi_min. Everything numeric about a twist follows from

    a(chi pi_i) = max(a_min_i, n_i a(chi mu_i)),

summed over the components.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field as dc_field, replace
from functools import reduce
from typing import Iterable

from .characters import (
    CharacterX,
    FieldMismatch,
    character_from_json,
    multiply,
    power,
    trivial_character,
)
from .localfield import LocalFieldParams, make_field

TRIVIAL_LABEL = "trivial"


class InvalidRepresentation(ValueError):
    """A representation spec violates one of the structural constraints."""


@dataclass(frozen=True)
class QuasiSquareIntegrable:
    n: int
    minimal_label: str
    a_min: int
    mu: CharacterX
    omega_min: CharacterX | None = dc_field(default=None, compare=False)

    def __post_init__(self) -> None:
        if self.n < 1:
            raise InvalidRepresentation(f"rank n must be >= 1, got {self.n}")
        if self.a_min < 0:
            raise InvalidRepresentation(f"a_min must be >= 0, got {self.a_min}")
        if self.n >= 2 and self.a_min < self.n - 1:
            raise InvalidRepresentation(
                f"a_min={self.a_min} below the minimal conductor n-1={self.n - 1} for n={self.n}"
            )
        if self.n == 1 and (self.a_min != 0 or self.minimal_label != TRIVIAL_LABEL):
            raise InvalidRepresentation(
                "GL(1) atoms must be stored as mu * trivial (a_min=0, label 'trivial')"
            )
        if self.omega_min is not None:
            if self.omega_min.field != self.mu.field:
                raise FieldMismatch("omega_min and mu over different fields")
            if self.n * self.omega_min.conductor > self.a_min:
                raise InvalidRepresentation(
                    f"central character bound violated: {self.n}*{self.omega_min.conductor} > {self.a_min}"
                )

    @property
    def field(self) -> LocalFieldParams:
        return self.mu.field

    @property
    def conductor(self) -> int:
        return max(self.a_min, self.n * self.mu.conductor)

    @property
    def is_twist_minimal(self) -> bool:
        return self.n * self.mu.conductor <= self.a_min

    def minimal(self) -> QuasiSquareIntegrable:
        return replace(self, mu=trivial_character(self.field))

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "label": self.minimal_label,
            "a_min": self.a_min,
            "mu": self.mu.to_json(),
            "omega_min": None if self.omega_min is None else self.omega_min.to_json(),
        }


def character_atom(mu: CharacterX) -> QuasiSquareIntegrable:
    """The GL(1) atom given by the character mu itself."""
    return QuasiSquareIntegrable(1, TRIVIAL_LABEL, 0, mu, trivial_character(mu.field))


def _atom_key(atom: QuasiSquareIntegrable):
    return (
        atom.n,
        atom.minimal_label,
        atom.a_min,
        atom.mu.conductor,
        atom.mu.exponents,
        (-1, ()) if atom.omega_min is None else (atom.omega_min.conductor, atom.omega_min.exponents),
    )


@dataclass(frozen=True)
class Representation:
    """A Langlands sum pi_1 + ... + pi_r; component order is not significant."""

    components: tuple[QuasiSquareIntegrable, ...]

    def __post_init__(self) -> None:
        if not self.components:
            raise InvalidRepresentation("a representation needs at least one component")
        fields = {c.field for c in self.components}
        if len(fields) != 1:
            raise FieldMismatch(f"components over several fields: {sorted(map(str, fields))}")
        object.__setattr__(self, "components", tuple(sorted(self.components, key=_atom_key)))

    @classmethod
    def of(cls, *atoms: QuasiSquareIntegrable) -> Representation:
        return cls(tuple(atoms))

    def __add__(self, other: Representation) -> Representation:
        return Representation(self.components + other.components)

    @property
    def field(self) -> LocalFieldParams:
        return self.components[0].field

    @property
    def n(self) -> int:
        return sum(c.n for c in self.components)

    @property
    def conductor(self) -> int:
        return sum(c.conductor for c in self.components)

    def multiset(self) -> Counter:
        return Counter(self.components)

    def to_json(self) -> dict:
        return {
            "field": {"p": self.field.p, "f": self.field.f},
            "components": [c.to_json() for c in self.components],
        }


_REP_KEYS = {"field", "components"}
_ATOM_KEYS = {"n", "label", "a_min", "mu", "omega_min"}


def representation_from_json(data: dict) -> Representation:
    """Parse the JSON representation spec; unknown keys are rejected.

    Raises ValueError for malformed input and InvalidRepresentation for a
    well-formed spec that breaks a structural constraint.
    """
    if not isinstance(data, dict):
        raise ValueError("representation spec must be a JSON object")
    unknown = set(data) - _REP_KEYS
    if unknown:
        raise ValueError(f"unknown representation keys: {sorted(unknown)}")
    fd = data.get("field")
    if not isinstance(fd, dict) or set(fd) - {"p", "f"} or "p" not in fd:
        raise ValueError('field must be an object {"p": int, "f": int}')
    try:
        F = make_field(fd["p"], fd.get("f", 1))
    except ValueError as exc:
        raise InvalidRepresentation(str(exc)) from None
    comps = data.get("components")
    if not isinstance(comps, list) or not comps:
        raise ValueError("components must be a non-empty list")
    atoms = []
    for c in comps:
        if not isinstance(c, dict):
            raise ValueError("each component must be a JSON object")
        unknown = set(c) - _ATOM_KEYS
        if unknown:
            raise ValueError(f"unknown component keys: {sorted(unknown)}")
        missing = {"n", "a_min", "mu"} - set(c)
        if missing:
            raise ValueError(f"component missing keys: {sorted(missing)}")
        n, a_min = c["n"], c["a_min"]
        if not isinstance(n, int) or not isinstance(a_min, int):
            raise ValueError("n and a_min must be integers")
        label = c.get("label", TRIVIAL_LABEL if n == 1 else None)
        if not isinstance(label, str):
            raise ValueError("label must be a string")
        mu = character_from_json(F, c["mu"])
        om = c.get("omega_min")
        omega = None if om is None else character_from_json(F, om)
        atoms.append(QuasiSquareIntegrable(n, label, a_min, mu, omega))
    return Representation(tuple(atoms))


@dataclass(frozen=True)
class ComponentTwist:
    atom: QuasiSquareIntegrable
    twisted_conductor: int
    Delta: int
    delta: int
    in_Omega: bool


@dataclass(frozen=True)
class TwistBreakdown:
    a_pi: int
    a_chi: int
    components: tuple[ComponentTwist, ...]
    twisted_conductor: int = dc_field(init=False)
    Delta: int = dc_field(init=False)
    delta: int = dc_field(init=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "twisted_conductor", sum(c.twisted_conductor for c in self.components))
        object.__setattr__(self, "Delta", sum(c.Delta for c in self.components))
        object.__setattr__(self, "delta", sum(c.delta for c in self.components))

    @property
    def Omega(self) -> tuple[int, ...]:
        return tuple(i for i, c in enumerate(self.components) if c.in_Omega)

    def to_json(self) -> dict:
        return {
            "a_pi": self.a_pi,
            "a_chi": self.a_chi,
            "a_chi_pi": self.twisted_conductor,
            "Delta": self.Delta,
            "delta": self.delta,
            "Omega": list(self.Omega),
            "components": [
                {
                    "index": i,
                    "n": c.atom.n,
                    "label": c.atom.minimal_label,
                    "a_pi_i": c.atom.conductor,
                    "a_mu_i": c.atom.mu.conductor,
                    "a_chi_pi_i": c.twisted_conductor,
                    "Delta": c.Delta,
                    "delta": c.delta,
                    "in_Omega": c.in_Omega,
                }
                for i, c in enumerate(self.components)
            ],
        }


def _same_field(pi_field: LocalFieldParams, chi: CharacterX) -> None:
    if pi_field != chi.field:
        raise FieldMismatch(f"representation over {pi_field}, character over {chi.field}")


def twisted_qsi_conductor(atom: QuasiSquareIntegrable, chi: CharacterX) -> int:
    _same_field(atom.field, chi)
    return max(atom.a_min, atom.n * multiply(chi, atom.mu).conductor)


def twisted_conductor(pi: Representation, chi: CharacterX) -> int:
    return sum(twisted_qsi_conductor(c, chi) for c in pi.components)


def _component_terms(atom: QuasiSquareIntegrable, chi: CharacterX) -> tuple[int, int]:
    a_chi, a_pi = chi.conductor, atom.conductor
    if a_chi != atom.mu.conductor:
        return max(atom.n * a_chi - a_pi, 0), 0
    chi_mu = multiply(chi, atom.mu).conductor
    return 0, a_pi - max(atom.a_min, atom.n * chi_mu)


def delta_terms(pi: Representation, chi: CharacterX) -> TwistBreakdown:
    """Dominant and interference terms of a(chi pi) = a(pi) + Delta - delta, per component.

    The total is checked against the direct sum of max(a_min, n a(chi mu))
    and an AssertionError is raised if the two disagree.
    """
    _same_field(pi.field, chi)
    a_chi = chi.conductor
    rows = []
    for atom in pi.components:
        Delta, delta = _component_terms(atom, chi)
        rows.append(
            ComponentTwist(
                atom,
                atom.conductor + Delta - delta,
                Delta,
                delta,
                atom.conductor > atom.n * a_chi,
            )
        )
    out = TwistBreakdown(pi.conductor, a_chi, tuple(rows))
    direct = twisted_conductor(pi, chi)
    if out.twisted_conductor != direct:
        raise AssertionError(
            f"a(pi)+Delta-delta={out.twisted_conductor} but direct twist gives {direct} for {pi}, {chi}"
        )
    return out


def total_minimal(pi: Representation) -> Representation:
    return Representation(tuple(c.minimal() for c in pi.components))


def omega_set(pi: Representation, a_chi: int) -> tuple[int, ...]:
    return tuple(i for i, c in enumerate(pi.components) if c.conductor > c.n * a_chi)


def conductor_bounds(pi: Representation, a_chi: int) -> tuple[int, int]:
    """(lower, upper) with a(pi_min) <= a(chi pi) <= a(pi) + a(chi) (n - sum_{i in Omega} n_i)."""
    lower = sum(c.a_min for c in pi.components)
    omega_rank = sum(pi.components[i].n for i in omega_set(pi, a_chi))
    return lower, pi.conductor + a_chi * (pi.n - omega_rank)


def bh_bound(a_pi: int, a_chi: int, n: int) -> int:
    return max(a_pi, a_chi) + (n - 1) * a_chi


def level_from_conductor(a: int, n: int) -> int:
    if n < 1 or a < n - 1:
        raise ValueError(f"conductor {a} below n-1 for n={n}")
    return a - n + 1


def conductor_from_level(l: int, n: int) -> int:
    if n < 1 or l < 0:
        raise ValueError(f"invalid level {l} or rank {n}")
    return l + n - 1


def norm_pullback_level(a_chi: int, n: int) -> int:
    """Level of chi o Nrd on D^x for [D:F] = n^2; 0 for unramified chi."""
    if a_chi < 0 or n < 1:
        raise ValueError(f"invalid a_chi={a_chi} or n={n}")
    if a_chi == 0:
        return 0
    return n * a_chi - n + 1


def twisted_level(l_pi: int, l_chi_nrd: int, is_twist_minimal: bool) -> tuple[int, bool]:
    """Upper bound max(l_pi, l_chi_nrd) for the twisted level, and whether it is attained."""
    return max(l_pi, l_chi_nrd), is_twist_minimal or l_pi != l_chi_nrd


def epsilon_exponent(pi: Representation, n_psi: int) -> int:
    """Exponent a(pi) - n(psi) n of q^(1/2 - s) in the epsilon factor."""
    return pi.conductor - n_psi * pi.n


def central_character(pi: Representation) -> CharacterX:
    parts = []
    for c in pi.components:
        if c.omega_min is None:
            raise InvalidRepresentation(f"component {c.minimal_label!r} has no omega_min")
        parts.append(multiply(power(c.mu, c.n), c.omega_min))
    return reduce(multiply, parts)


def langlands_sum(reps: Iterable[Representation]) -> Representation:
    return reduce(lambda a, b: a + b, reps)
