"""Conductors of character twists of admissible representations of GL(n) over a p-adic field."""

from .characters import (
    CharacterX,
    enumerate_X,
    enumerate_Xprime,
    from_cyclic_exponent,
    from_exponents,
    inverse,
    multiply,
    power,
    trivial_character,
)
from .counting import count_X, count_Xprime, dominant_conductor, twist_fixing_bound
from .localfield import LocalFieldParams, UnitQuotientGroup, make_field, unit_quotient_group
from .reps import (
    QuasiSquareIntegrable,
    Representation,
    character_atom,
    delta_terms,
    twisted_conductor,
    twisted_qsi_conductor,
)

__version__ = "0.1.0"
