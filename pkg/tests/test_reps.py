import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from brute import cyclic_conductor
from twistcond.characters import (
    FieldMismatch,
    enumerate_X,
    from_cyclic_exponent,
    inverse,
    multiply,
    power,
    trivial_character,
)
from twistcond.localfield import make_field
from twistcond.reps import (
    InvalidRepresentation,
    QuasiSquareIntegrable,
    Representation,
    bh_bound,
    central_character,
    character_atom,
    conductor_bounds,
    conductor_from_level,
    delta_terms,
    epsilon_exponent,
    level_from_conductor,
    norm_pullback_level,
    representation_from_json,
    total_minimal,
    twisted_conductor,
    twisted_level,
    twisted_qsi_conductor,
)

Q5 = make_field(5)
ONE = trivial_character(Q5)
X3 = enumerate_X(Q5, 3)


def cyc(e, level=2):
    return from_cyclic_exponent(Q5, level, e)


def steinberg(mu=ONE):
    return QuasiSquareIntegrable(2, "St", 1, mu)


def test_steinberg_large_twist():
    chi = next(c for c in X3 if c.conductor == 3)
    assert twisted_qsi_conductor(steinberg(), chi) == 6


def test_full_untwisting():
    for mu in enumerate_X(Q5, 2):
        atom = QuasiSquareIntegrable(3, "A", 2, mu)
        assert twisted_qsi_conductor(atom, inverse(mu)) == 2


def test_interfering_atom_q5():
    mu, chi = cyc(4), cyc(1)
    # chi mu = cyc(5): brute-force conductor on C_20
    assert cyclic_conductor(1 + 4, 20, 5) == 1
    assert (mu.conductor, chi.conductor) == (2, 2)
    assert twisted_qsi_conductor(steinberg(mu), chi) == 2


def test_unramified_twist_is_invisible():
    pi = Representation.of(steinberg(cyc(4)), character_atom(cyc(5)))
    assert twisted_conductor(pi, ONE) == pi.conductor


def test_two_gl1_components():
    mu = from_cyclic_exponent(Q5, 1, 1)
    chi = cyc(3)  # conductor 2
    assert cyclic_conductor(3, 20, 5) == 2
    # mu at level 2 has cyclic exponent 5 * 1 = 5; chi mu = cyc(8)
    assert cyclic_conductor(3 + 5, 20, 5) == 2
    pi = Representation.of(character_atom(mu), character_atom(mu))
    assert twisted_conductor(pi, chi) == 4


def test_minimal_atom_matches_max_formula():
    atom = QuasiSquareIntegrable(2, "sc", 3, ONE)
    pi = Representation.of(atom)
    for chi in X3:
        if 2 * chi.conductor != 3:
            assert twisted_conductor(pi, chi) == max(3, 2 * chi.conductor)


def test_delta_terms_examples():
    pi = Representation.of(QuasiSquareIntegrable(2, "sc", 3, ONE), QuasiSquareIntegrable(3, "x", 2, ONE))
    br = delta_terms(pi, ONE)
    assert (br.Delta, br.delta) == (0, 0)

    chi = next(c for c in X3 if c.conductor == 3)
    br = delta_terms(Representation.of(steinberg()), chi)
    assert (br.Delta, br.delta, br.twisted_conductor) == (2 * 3 - 1, 0, 6)

    br = delta_terms(Representation.of(steinberg(cyc(4))), cyc(1))
    assert (br.Delta, br.delta, br.twisted_conductor) == (0, 2, 2)
    assert br.twisted_conductor == twisted_conductor(Representation.of(steinberg(cyc(4))), cyc(1))


def test_total_minimal():
    pi = Representation.of(QuasiSquareIntegrable(2, "sc", 3, ONE))
    assert total_minimal(pi) == pi
    pi = Representation.of(steinberg(cyc(4)), character_atom(from_cyclic_exponent(Q5, 1, 1)))
    tm = total_minimal(pi)
    assert tm.conductor == 1
    assert total_minimal(tm) == tm


def test_conductor_bounds_examples():
    pi = Representation.of(QuasiSquareIntegrable(2, "sc", 3, cyc(5)), character_atom(cyc(4)))
    assert conductor_bounds(pi, 0) == (3, pi.conductor)
    st_pi = Representation.of(steinberg())
    assert conductor_bounds(st_pi, 3) == (1, 7)
    for chi in X3:
        if chi.conductor == 3:
            assert twisted_conductor(st_pi, chi) == 6 <= 7


def test_bh_bound_examples():
    assert bh_bound(1, 3, 2) == 6
    assert bh_bound(4, 0, 3) == 4


def test_level_bookkeeping():
    assert level_from_conductor(1, 2) == 0
    with pytest.raises(ValueError):
        level_from_conductor(0, 2)
    for n in range(1, 7):
        for l in range(11):
            assert level_from_conductor(conductor_from_level(l, n), n) == l
    assert norm_pullback_level(2, 3) == 4
    assert all(norm_pullback_level(1, n) == 1 for n in range(1, 8))
    assert all(norm_pullback_level(0, n) == 0 for n in range(1, 8))


def test_twisted_level_examples():
    assert twisted_level(0, 5, False) == (5, True)
    assert twisted_level(4, 4, True) == (4, True)
    assert twisted_level(4, 4, False) == (4, False)


def test_epsilon_exponent():
    pi = Representation.of(QuasiSquareIntegrable(2, "A", 4, ONE))
    assert epsilon_exponent(pi, 0) == 4
    assert epsilon_exponent(pi, 1) == 2


def test_central_character():
    mu = cyc(7)
    assert central_character(Representation.of(character_atom(mu))) == mu
    omega = from_cyclic_exponent(Q5, 1, 2)
    atom = QuasiSquareIntegrable(2, "sc", 3, ONE, omega)
    assert central_character(Representation.of(atom)) == omega
    with pytest.raises(InvalidRepresentation):
        central_character(Representation.of(steinberg()))


@pytest.mark.parametrize(
    "args",
    [
        (2, "A", 0, ONE),  # a_min < n - 1
        (1, "A", 0, ONE),  # GL(1) must use the trivial label
        (1, "trivial", 1, ONE),
        (0, "A", 0, ONE),
        (2, "A", 1, ONE, from_cyclic_exponent(Q5, 1, 1)),  # 2 * a(omega) > a_min
    ],
)
def test_atom_invariants(args):
    with pytest.raises(InvalidRepresentation):
        QuasiSquareIntegrable(*args)


def test_field_mismatch():
    Q3 = make_field(3)
    with pytest.raises(FieldMismatch):
        twisted_conductor(Representation.of(steinberg()), trivial_character(Q3))


def test_json_parsing():
    spec = {"field": {"p": 5, "f": 1}, "components": [
        {"n": 2, "label": "A", "a_min": 1, "mu": {"conductor": 2, "exponents": [4]}, "omega_min": None}]}
    pi = representation_from_json(spec)
    assert pi.components[0].mu == cyc(4)
    assert representation_from_json(pi.to_json()) == pi
    with pytest.raises(ValueError):
        representation_from_json({**spec, "extra": 1})
    bad = {"field": {"p": 5}, "components": [{"n": 2, "a_min": 1, "mu": {"conductor": 0, "exponents": []}, "foo": 0}]}
    with pytest.raises(ValueError):
        representation_from_json(bad)
    with pytest.raises(InvalidRepresentation):
        representation_from_json({"field": {"p": 5}, "components": [
            {"n": 3, "label": "A", "a_min": 1, "mu": {"conductor": 0, "exponents": []}}]})


def test_component_order_irrelevant():
    a, b = steinberg(cyc(4)), character_atom(cyc(3))
    assert Representation.of(a, b) == Representation.of(b, a)


# -- properties over random atoms -------------------------------------------

MUS = enumerate_X(Q5, 2)


@st.composite
def atoms(draw):
    n = draw(st.integers(1, 3))
    mu = draw(st.sampled_from(MUS))
    if n == 1:
        return character_atom(mu)
    a_min = draw(st.integers(n - 1, 5))
    return QuasiSquareIntegrable(n, f"L{n}.{a_min}", a_min, mu)


reps_strategy = st.lists(atoms(), min_size=1, max_size=3).map(lambda xs: Representation(tuple(xs)))


@settings(max_examples=150)
@given(reps_strategy, st.sampled_from(X3))
def test_identity_and_nonnegativity(pi, chi):
    br = delta_terms(pi, chi)
    assert br.twisted_conductor == pi.conductor + br.Delta - br.delta == twisted_conductor(pi, chi)
    assert all(c.Delta >= 0 and c.delta >= 0 for c in br.components)


@settings(max_examples=150)
@given(reps_strategy, reps_strategy, st.sampled_from(X3))
def test_homomorphism(p1, p2, chi):
    b, b1, b2 = delta_terms(p1 + p2, chi), delta_terms(p1, chi), delta_terms(p2, chi)
    assert b.a_pi == b1.a_pi + b2.a_pi
    assert b.Delta == b1.Delta + b2.Delta
    assert b.delta == b1.delta + b2.delta
    for n_psi in (-1, 0, 1):
        assert epsilon_exponent(p1 + p2, n_psi) == epsilon_exponent(p1, n_psi) + epsilon_exponent(p2, n_psi)


@given(reps_strategy, st.sampled_from(X3))
def test_large_twist_and_sandwich(pi, chi):
    a = twisted_conductor(pi, chi)
    lo, hi = conductor_bounds(pi, chi.conductor)
    assert lo <= a <= min(hi, bh_bound(pi.conductor, chi.conductor, pi.n))
    if chi.conductor > pi.conductor:
        assert a == pi.n * chi.conductor == bh_bound(pi.conductor, chi.conductor, pi.n)


@given(atoms())
def test_divisibility_and_untwisting(atom):
    if not atom.is_twist_minimal:
        assert atom.conductor % atom.n == 0
    assert twisted_qsi_conductor(atom, inverse(atom.mu)) == atom.a_min


@given(st.integers(2, 3), st.data())
def test_decomposition_independence(n, data):
    # twist-minimal atom stored with a non-trivial mu, n a(mu) <= a_min
    a_min = data.draw(st.integers(n, 6))
    mu = data.draw(st.sampled_from([m for m in MUS if n * m.conductor <= a_min and m.conductor > 0]))
    atom = QuasiSquareIntegrable(n, "m", a_min, mu)
    plain = QuasiSquareIntegrable(n, "m", a_min, ONE)
    for chi in X3:
        br = delta_terms(Representation.of(atom), chi)
        assert br.twisted_conductor == twisted_conductor(Representation.of(plain), multiply(chi, mu))


@given(atoms(), st.sampled_from(MUS))
def test_central_character_bound(atom, omega):
    if atom.n * omega.conductor > atom.a_min:
        return
    rich = QuasiSquareIntegrable(atom.n, atom.minimal_label, atom.a_min, atom.mu, omega)
    w = central_character(Representation.of(rich))
    assert w == multiply(power(atom.mu, atom.n), omega)
    assert atom.n * w.conductor <= rich.conductor
