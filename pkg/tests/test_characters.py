import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from brute import all_vectors, cyclic_conductor, vector_conductor
from twistcond.characters import (
    CharacterX,
    FieldMismatch,
    InvalidCharacter,
    ResourceLimitExceeded,
    character_from_json,
    enumerate_X,
    enumerate_Xprime,
    from_cyclic_exponent,
    from_exponents,
    inverse,
    multiply,
    power,
    to_cyclic_exponent,
    trivial_character,
)
from twistcond.localfield import make_field, unit_quotient_group

Q5 = make_field(5)
Q3 = make_field(3)


def test_trivial_character():
    one = trivial_character(Q5)
    assert one.conductor == 0 and one.exponents == ()
    assert inverse(trivial_character(Q3)) == trivial_character(Q3)
    for chi in enumerate_X(Q5, 2):
        assert multiply(one, chi) == chi


def test_cyclic_examples_against_direct_subgroup_evaluation():
    # o^x / U(2) for Q_5 is C_20; its U(1)-image is <4> = {0, 4, 8, 12, 16}
    assert cyclic_conductor(5, 20, 5) == 1
    assert cyclic_conductor(4, 20, 5) == 2
    assert from_cyclic_exponent(Q5, 2, 5).conductor == 1
    assert from_cyclic_exponent(Q5, 2, 4).conductor == 2


def test_all_zero_exponents():
    for level in range(4):
        n = len(unit_quotient_group(Q5, level).invariant_factors)
        assert from_exponents(Q5, level, [0] * n).conductor == 0


def test_c20_multiplication():
    chi4 = from_cyclic_exponent(Q5, 2, 4)
    chi16 = from_cyclic_exponent(Q5, 2, 16)
    chi5 = from_cyclic_exponent(Q5, 2, 5)
    assert multiply(chi4, chi16).conductor == 0
    # 4 + 5 = 9 in C_20
    assert cyclic_conductor(9, 20, 5) == 2
    assert multiply(chi4, chi5).conductor == 2
    assert multiply(chi4, chi5) == from_cyclic_exponent(Q5, 2, 9)


@pytest.mark.parametrize("level", [1, 2, 3])
def test_cyclic_form_is_a_group_isomorphism(level):
    N = 4 * 5 ** (level - 1)
    for e in range(N):
        chi = from_cyclic_exponent(Q5, level, e)
        assert chi.conductor == cyclic_conductor(e, N, 5)
        assert to_cyclic_exponent(chi, level) == e
    for e1 in range(0, N, 3):
        for e2 in range(0, N, 7):
            got = multiply(from_cyclic_exponent(Q5, level, e1), from_cyclic_exponent(Q5, level, e2))
            assert got == from_cyclic_exponent(Q5, level, e1 + e2)


@pytest.mark.parametrize("p,f,level", [(5, 1, 3), (3, 1, 4), (3, 2, 2), (7, 1, 2)])
def test_conductor_rule_matches_subgroup_evaluation(p, f, level):
    F = make_field(p, f)
    G = unit_quotient_group(F, level)
    for exps in all_vectors(G.invariant_factors):
        assert from_exponents(F, level, exps).conductor == vector_conductor(G, exps)


def test_lifting_preserves_character():
    # a character stored at its conductor k and the same character read at level m
    F = make_field(3)
    G3 = unit_quotient_group(F, 3)
    for chi in enumerate_X(F, 2):
        lifted = chi.exponents_at(3)
        assert from_exponents(F, 3, lifted) == chi
        assert vector_conductor(G3, lifted) == chi.conductor


def test_product_conductor_exhaustive():
    chars = enumerate_X(Q5, 2)
    for x in chars:
        for y in chars:
            a = multiply(x, y).conductor
            assert a <= max(x.conductor, y.conductor)
            if x.conductor != y.conductor:
                assert a == max(x.conductor, y.conductor)


@pytest.mark.parametrize("p,f", [(3, 1), (5, 1), (7, 1), (3, 2)])
def test_enumeration_sizes(p, f):
    F = make_field(p, f)
    q = F.q
    assert enumerate_X(F, 0) == [trivial_character(F)]
    for k in range(1, 4):
        X = enumerate_X(F, k)
        assert len(X) == len(set(X)) == q ** (k - 1) * (q - 1)
        assert len(enumerate_Xprime(F, k)) == len(X) - len(enumerate_X(F, k - 1))


def test_enumeration_q5_k1():
    assert len(enumerate_X(Q5, 1)) == 4
    assert len(enumerate_Xprime(Q5, 1)) == 3


def test_enumeration_is_lexicographic():
    level = 2
    X = enumerate_X(Q5, level)
    assert [c.exponents_at(level) for c in X] == sorted(c.exponents_at(level) for c in X)


def test_resource_guard():
    with pytest.raises(ResourceLimitExceeded):
        enumerate_X(Q5, 3, limit=50)


def test_field_mismatch():
    with pytest.raises(FieldMismatch):
        multiply(from_cyclic_exponent(Q5, 1, 1), from_cyclic_exponent(Q3, 1, 1))


def test_from_exponents_length_mismatch():
    with pytest.raises(ValueError):
        from_exponents(Q5, 2, [1])


def test_noncanonical_direct_construction_rejected():
    with pytest.raises(ValueError):
        CharacterX(Q5, 2, (1, 0))


def test_json_round_trip_and_cyclic_form():
    for chi in enumerate_X(Q5, 2):
        assert character_from_json(Q5, chi.to_json()) == chi
    assert character_from_json(Q5, {"conductor": 2, "exponents": [4]}) == from_cyclic_exponent(Q5, 2, 4)
    with pytest.raises(InvalidCharacter):
        character_from_json(Q5, {"conductor": 2, "exponents": [5]})
    with pytest.raises(ValueError):
        character_from_json(Q5, {"conductor": 1, "exponents": [1, 0], "extra": 1})


F_STRATEGY = st.sampled_from([make_field(3), make_field(5), make_field(3, 2)])


@st.composite
def characters(draw, field=None, max_level=3):
    F = field or draw(F_STRATEGY)
    level = draw(st.integers(0, max_level))
    factors = unit_quotient_group(F, level).invariant_factors
    exps = [draw(st.integers(0, n - 1)) for n in factors]
    return from_exponents(F, level, exps)


@st.composite
def triples(draw):
    F = draw(F_STRATEGY)
    return tuple(draw(characters(field=F)) for _ in range(3))


@settings(max_examples=200)
@given(triples())
def test_group_laws(t):
    a, b, c = t
    assert multiply(multiply(a, b), c) == multiply(a, multiply(b, c))
    assert multiply(a, b) == multiply(b, a)
    assert multiply(a, inverse(a)) == trivial_character(a.field)
    assert inverse(inverse(a)) == a


@given(characters(), st.integers(-6, 6))
def test_power_laws(chi, n):
    expected = trivial_character(chi.field)
    step = chi if n >= 0 else inverse(chi)
    for _ in range(abs(n)):
        expected = multiply(expected, step)
    assert power(chi, n) == expected
    assert power(chi, n).conductor <= chi.conductor


@given(characters())
def test_canonical_form_is_stable(chi):
    assert from_exponents(chi.field, chi.conductor, chi.exponents) == chi
    for extra in range(3):
        assert from_exponents(chi.field, chi.conductor + extra, chi.exponents_at(chi.conductor + extra)) == chi
