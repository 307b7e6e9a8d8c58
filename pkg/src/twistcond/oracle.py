"""Exhaustive ground truth for twisted conductors, and the verification grid.

The oracle never uses the closed-form conductor rule of `characters` nor any
of the Delta/delta logic in `reps`. It lifts exponent vectors to a common
level, adds them, and finds the conductor of the product by checking on which
filtration subgroups the resulting character is trivial.
"""

from __future__ import annotations

import csv
import io
import json
import random
from collections import Counter
from dataclasses import asdict, dataclass, field
from functools import lru_cache
from itertools import combinations_with_replacement
from math import lcm
from typing import Callable, Iterable, Sequence

from . import counting, reps
from .characters import (
    DEFAULT_LIMIT,
    CharacterX,
    ResourceLimitExceeded,
    enumerate_X,
    enumerate_Xprime,
    inverse,
    lift_exponents,
)
from .localfield import LocalFieldParams, UnitQuotientGroup, make_field, nrd_image_level
from .reps import QuasiSquareIntegrable, Representation

# ---------------------------------------------------------------------------
# raw conductors


@lru_cache(maxsize=None)
def _generators(field: LocalFieldParams, level: int) -> tuple[tuple[tuple[int, ...], ...], ...]:
    group = UnitQuotientGroup(field, level)
    return tuple(tuple(group.filtration_generators(l)) for l in range(level + 1))


def raw_conductor(field: LocalFieldParams, level: int, exps: Sequence[int]) -> int:
    """Least l such that the character with these exponents kills the image of U(l)."""
    factors = UnitQuotientGroup(field, level).invariant_factors
    L = lcm(*factors) if factors else 1
    weights = [L // n for n in factors]
    gens = _generators(field, level)

    def trivial_on(l: int) -> bool:
        return all(sum(e * g * w for e, g, w in zip(exps, gen, weights)) % L == 0 for gen in gens[l])

    for l in range(level + 1):
        if trivial_on(l):
            return l
    raise AssertionError("character not trivial on U(level)/U(level)")


@lru_cache(maxsize=1 << 16)
def product_conductor(chi: CharacterX, mu: CharacterX) -> int:
    """a(chi mu) from raw exponent addition and filtration triviality testing."""
    level = max(chi.conductor, mu.conductor)
    e1 = lift_exponents(chi.field, chi.exponents, chi.conductor, level)
    e2 = lift_exponents(mu.field, mu.exponents, mu.conductor, level)
    return raw_conductor(chi.field, level, [a + b for a, b in zip(e1, e2)])


def twisted_atom(atom: QuasiSquareIntegrable, chi: CharacterX) -> int:
    return max(atom.a_min, atom.n * product_conductor(chi, atom.mu))


def twisted(pi: Representation, chi: CharacterX) -> int:
    return sum(twisted_atom(c, chi) for c in pi.components)


def delta_atom(atom: QuasiSquareIntegrable, chi: CharacterX) -> int:
    """delta_chi(pi_i) straight from its definition, with oracle conductors."""
    if chi.conductor != atom.mu.conductor:
        return 0
    return atom.conductor - twisted_atom(atom, chi)


# ---------------------------------------------------------------------------
# histograms


@dataclass
class Histogram:
    counts: dict[int, int]
    context: dict

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    def to_json(self) -> dict:
        return {
            "context": self.context,
            "total": self.total,
            "counts": {str(k): v for k, v in sorted(self.counts.items())},
        }

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["key", "count"])
        for k, v in sorted(self.counts.items()):
            w.writerow([k, v])
        return buf.getvalue()


def _context(pi, k: int) -> dict:
    return {"field": {"p": pi.field.p, "f": pi.field.f}, "k": k, "pi": pi.to_json()}


def histogram_twisted_conductor(pi: Representation, k: int, limit: int | None = None) -> Histogram:
    """#X'_pi(k, j) for every j, by enumerating X'(k)."""
    chars = enumerate_Xprime(pi.field, k, limit)
    return Histogram(dict(sorted(Counter(twisted(pi, chi) for chi in chars).items())), _context(pi, k))


def delta_histogram(atom: QuasiSquareIntegrable, k: int, limit: int | None = None) -> Histogram:
    chars = enumerate_Xprime(atom.field, k, limit)
    counts = Counter(delta_atom(atom, chi) for chi in chars)
    return Histogram(dict(sorted(counts.items())), _context(Representation.of(atom), k))


# ---------------------------------------------------------------------------
# corpus


def atom_corpus(
    field: LocalFieldParams,
    ranks: Iterable[int] = (1, 2, 3),
    a_min_max: int = 4,
    mu_conductor: int = 2,
    minimal_only: bool = False,
    limit: int | None = None,
) -> list[QuasiSquareIntegrable]:
    """Atoms (n, a_min, mu) with n - 1 <= a_min <= a_min_max and mu in X(mu_conductor).

    GL(1) atoms are the characters themselves. Each atom carries a central
    character for pi_min picked deterministically from X(floor(a_min / n)).
    """
    mus = enumerate_X(field, mu_conductor, limit)
    atoms = []
    for n in ranks:
        a_values = [0] if n == 1 else range(n - 1, a_min_max + 1)
        for a_min in a_values:
            omegas = enumerate_X(field, a_min // n, limit)
            for idx, mu in enumerate(mus):
                label = reps.TRIVIAL_LABEL if n == 1 else f"sq{n}.{a_min}"
                atom = QuasiSquareIntegrable(n, label, a_min, mu, omegas[idx % len(omegas)])
                if minimal_only and not atom.is_twist_minimal:
                    continue
                atoms.append(atom)
    return atoms


def pair_sample(atoms: Sequence[QuasiSquareIntegrable], size: int, seed: int = 0) -> list[Representation]:
    """A deterministic sample of `size` two-component sums from the atom list."""
    pairs = list(combinations_with_replacement(range(len(atoms)), 2))
    chosen = pairs if size >= len(pairs) else random.Random(seed).sample(pairs, size)
    return [Representation.of(atoms[i], atoms[j]) for i, j in chosen]


# ---------------------------------------------------------------------------
# verification report

CONFIRMED = "confirmed"
VIOLATED = "violated"
DIVERGENT = "divergent-documented"

MAX_WITNESSES = 5


@dataclass
class Check:
    claim: str
    scope: str
    asserted: bool = True
    cases: int = 0
    failures: int = 0
    witnesses: list = field(default_factory=list)
    key: str = ""

    def record(self, ok: bool, witness: Callable[[], dict] | None = None) -> None:
        self.cases += 1
        if not ok:
            self.failures += 1
            if witness is not None and len(self.witnesses) < MAX_WITNESSES:
                self.witnesses.append(witness())

    @property
    def status(self) -> str:
        if self.failures == 0:
            return CONFIRMED
        return VIOLATED if self.asserted else DIVERGENT


@dataclass
class VerificationReport:
    checks: list[Check]

    @property
    def ok(self) -> bool:
        return all(c.status != VIOLATED for c in self.checks)

    def to_json(self) -> dict:
        return {
            "ok": self.ok,
            "checks": [
                {
                    "key": c.key,
                    "claim": c.claim,
                    "scope": c.scope,
                    "status": c.status,
                    "cases": c.cases,
                    "failures": c.failures,
                    "witnesses": c.witnesses,
                }
                for c in self.checks
            ],
        }

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["claim", "scope", "status", "witness"])
        for c in self.checks:
            wit = json.dumps(c.witnesses[0], sort_keys=True) if c.witnesses else ""
            w.writerow([c.claim, c.scope, c.status, wit])
        return buf.getvalue()

    def lines(self) -> list[str]:
        return [f"[{c.status}] {c.claim} ({c.failures}/{c.cases} failing) -- {c.scope}" for c in self.checks]


@dataclass
class VerifyConfig:
    fields: list[tuple[int, int]] = field(default_factory=lambda: [(5, 1)])
    ranks: tuple[int, ...] = (1, 2, 3)
    a_min_max: int = 4
    mu_conductor: int = 2
    k_max: int = 3
    pair_sample: int = 200
    seed: int = 0
    minimal_only: bool = False
    count_k_max: int = 5
    limit: int = DEFAULT_LIMIT

    @classmethod
    def from_json(cls, data: dict) -> VerifyConfig:
        known = set(cls.__dataclass_fields__)
        unknown = set(data) - known
        if unknown:
            raise ValueError(f"unknown config keys: {sorted(unknown)}")
        kw = dict(data)
        if "fields" in kw:
            kw["fields"] = [tuple(f) for f in kw["fields"]]
        if "ranks" in kw:
            kw["ranks"] = tuple(kw["ranks"])
        return cls(**kw)

    def to_json(self) -> dict:
        return asdict(self)


def _chi(chi: CharacterX) -> dict:
    return chi.to_json()


def verify_grid(config: VerifyConfig | None = None) -> VerificationReport:
    """Run every structural law and closed-form claim against exhaustive enumeration."""
    config = config or VerifyConfig()
    checks: dict[str, Check] = {}

    def check(key: str, claim: str, scope: str, asserted: bool = True) -> Check:
        if key not in checks:
            checks[key] = Check(claim, scope, asserted, key=key)
        return checks[key]

    for p, f in config.fields:
        _verify_field(make_field(p, f), config, check)
    if config.fields:
        _verify_levels(check)
    return VerificationReport(list(checks.values()))


def _guard_config(F: LocalFieldParams, config: VerifyConfig) -> None:
    biggest = max(UnitQuotientGroup(F, k).order for k in (config.k_max, config.count_k_max, config.mu_conductor))
    if biggest > config.limit:
        raise ResourceLimitExceeded(f"grid over {F} needs {biggest} characters, limit {config.limit}")


def _verify_field(F: LocalFieldParams, config: VerifyConfig, check) -> None:
    _guard_config(F, config)
    q = F.q
    tag = f"q={q}"

    c = check("counts", "#X(k) = q^(k-1)(q-1), #X'(1) = q-2, #X'(k) = q^(k-2)(q-1)^2",
              f"enumeration, k <= {config.count_k_max}")
    for k in range(config.count_k_max + 1):
        all_k = enumerate_X(F, k, config.limit)
        n_exact = sum(1 for chi in all_k if chi.conductor == k)
        c.record(len(all_k) == counting.count_X(q, k) and len(set(all_k)) == len(all_k),
                 lambda: {"q": q, "k": k, "enumerated": len(all_k)})
        c.record(n_exact == counting.count_Xprime(q, k), lambda: {"q": q, "k": k, "enumerated": n_exact})

    chars = enumerate_X(F, config.k_max, config.limit)
    c = check("product", "a(chi1 chi2) <= max(a1, a2), with equality when a1 != a2",
              f"all pairs in X({min(config.k_max, 3)})")
    small = [chi for chi in chars if chi.conductor <= min(config.k_max, 3)]
    for x in small:
        for y in small:
            a = product_conductor(x, y)
            ok = a <= max(x.conductor, y.conductor) and (x.conductor == y.conductor or a == max(x.conductor, y.conductor))
            c.record(ok, lambda: {"q": q, "chi1": _chi(x), "chi2": _chi(y), "a": a})

    atoms = atom_corpus(F, config.ranks, config.a_min_max, config.mu_conductor, config.minimal_only, config.limit)
    pairs = pair_sample(atoms, config.pair_sample, config.seed)
    corpus = [Representation.of(a) for a in atoms] + pairs
    scope = f"{tag}: {len(atoms)} atoms + {len(pairs)} pair sums, chi in X({config.k_max})"

    c_id = check("identity", "a(chi pi) = a(pi) + Delta_chi(pi) - delta_chi(pi), oracle vs formula", scope)
    c_nn = check("nonneg", "Delta_i >= 0 and delta_i >= 0", scope)
    c_large = check("large", "a(chi) > a(pi) implies a(chi pi) = n a(chi)", scope)
    c_sand = check("sandwich", "a(pi_min) <= a(chi pi) <= a(pi) + a(chi)(n - sum_Omega n_i)", scope)
    c_bh = check("bh", "a(chi pi) <= max(a(pi), a(chi)) + (n-1) a(chi), attained when a(chi) > a(pi)", scope)
    c_dom = check("dominant", "sum max(a(pi_i), n_i a(chi)) equals a(chi pi) exactly when delta_chi(pi) = 0", scope)
    c_int = check("interference", "ZeroBy*/ImpossibleBy* status implies delta_chi(pi_i) = 0", scope)
    c_bounds_dep = check("bounds_chi", "conductor_bounds agrees with the sandwich computed from chi itself", scope)

    for pi in corpus:
        lower, upper = reps.conductor_bounds(pi, 0)
        for chi in chars:
            a_chi = chi.conductor
            truth = twisted(pi, chi)
            br = reps.delta_terms(pi, chi)
            wit = lambda: {"q": q, "pi": pi.to_json(), "chi": _chi(chi), "oracle": truth,
                           "a_pi": br.a_pi, "Delta": br.Delta, "delta": br.delta}
            c_id.record(br.a_pi + br.Delta - br.delta == truth == reps.twisted_conductor(pi, chi), wit)
            c_nn.record(all(r.Delta >= 0 and r.delta >= 0 for r in br.components), wit)
            if a_chi > pi.conductor:
                c_large.record(truth == pi.n * a_chi, wit)
            lo, hi = reps.conductor_bounds(pi, a_chi)
            c_sand.record(lo <= truth <= hi, wit)
            omega = [i for i, comp in enumerate(pi.components) if comp.conductor > comp.n * a_chi]
            c_bounds_dep.record(hi == pi.conductor + a_chi * (pi.n - sum(pi.components[i].n for i in omega)), wit)
            bh = reps.bh_bound(pi.conductor, a_chi, pi.n)
            c_bh.record(truth <= bh and (a_chi <= pi.conductor or truth == bh), wit)
            oracle_delta = sum(delta_atom(comp, chi) for comp in pi.components)
            dom = counting.dominant_conductor(pi, a_chi)
            c_dom.record((dom == truth) == (oracle_delta == 0), wit)
            status = counting.interference_predicate(pi, a_chi)
            refined = counting.interference_refine(pi, chi)
            for comp, t1, t2 in zip(pi.components, status.tags, refined.tags):
                d = delta_atom(comp, chi)
                ok = (t1 is counting.Interference.POSSIBLE or d == 0) and (
                    t2 is counting.Interference.POSSIBLE or d == 0)
                c_int.record(ok, wit)

    c_add = check("additivity", "a, Delta_chi, delta_chi additive over Langlands sums; epsilon exponent additive for n(psi) in {-1,0,1}",
                  f"{tag}: {len(pairs)} pair sums, chi in X({config.k_max})")
    for pi in pairs:
        x, y = (Representation.of(comp) for comp in pi.components)
        for chi in chars:
            bp, bx, by = (reps.delta_terms(r, chi) for r in (pi, x, y))
            ok = (bp.a_pi == bx.a_pi + by.a_pi and bp.Delta == bx.Delta + by.Delta
                  and bp.delta == bx.delta + by.delta
                  and bp.twisted_conductor == bx.twisted_conductor + by.twisted_conductor
                  and bp.delta == sum(delta_atom(comp, chi) for comp in pi.components))
            c_add.record(ok, lambda: {"q": q, "pi": pi.to_json(), "chi": _chi(chi)})
        for n_psi in (-1, 0, 1):
            c_add.record(reps.epsilon_exponent(pi, n_psi) == reps.epsilon_exponent(x, n_psi) + reps.epsilon_exponent(y, n_psi),
                         lambda: {"q": q, "pi": pi.to_json(), "n_psi": n_psi})

    atom_scope = f"{tag}: {len(atoms)} atoms, chi in X({config.k_max})"
    c_untw = check("untwist", "a(mu^-1 pi_i) = a(pi_i^min)", f"{tag}: {len(atoms)} atoms")
    c_div = check("divisibility", "pi_i not twist minimal implies n_i | a(pi_i)", f"{tag}: {len(atoms)} atoms")
    c_sq = check("sq_int", "a(chi pi_i) <= max(a(pi_i), n a(chi)), equality if twist minimal or a(pi_i) != n a(chi)", atom_scope)
    c_lvl = check("div_level", "level of the twist on D^x bounded by max(l(pi'), l(chi o Nrd)), exact in the stated cases",
                  f"{tag}: atoms with n >= 2, chi in X({config.k_max})")
    c_cc = check("central", "n a(omega_pi) <= a(pi) for quasi-square-integrable pi", f"{tag}: atoms carrying omega_min")
    c_part3 = check("part3", "for a(pi_i) = n_i a(chi): delta_chi(pi_i) = 0 iff a(chi mu_i) = a(chi)",
                    f"{tag}: atoms with mu trivial or not twist minimal, chi in X({config.k_max})")
    for atom in atoms:
        c_untw.record(twisted_atom(atom, inverse(atom.mu)) == atom.a_min, lambda: {"q": q, "atom": atom.to_json()})
        if not atom.is_twist_minimal:
            c_div.record(atom.conductor % atom.n == 0, lambda: {"q": q, "atom": atom.to_json()})
        if atom.omega_min is not None:
            w = reps.central_character(Representation.of(atom))
            c_cc.record(atom.n * w.conductor <= atom.conductor, lambda: {"q": q, "atom": atom.to_json()})
        canonical = atom.mu.is_trivial or not atom.is_twist_minimal
        for chi in chars:
            a = twisted_atom(atom, chi)
            bound = max(atom.conductor, atom.n * chi.conductor)
            need_eq = atom.is_twist_minimal or atom.conductor != atom.n * chi.conductor
            c_sq.record(a <= bound and (not need_eq or a == bound),
                        lambda: {"q": q, "atom": atom.to_json(), "chi": _chi(chi), "a_chi_pi": a})
            if atom.n >= 2:
                l_pi = reps.level_from_conductor(atom.conductor, atom.n)
                l_chi = reps.norm_pullback_level(chi.conductor, atom.n)
                value, exact = reps.twisted_level(l_pi, l_chi, atom.is_twist_minimal)
                l_tw = reps.level_from_conductor(a, atom.n)
                c_lvl.record(l_tw <= value and (not exact or l_tw == value),
                             lambda: {"q": q, "atom": atom.to_json(), "chi": _chi(chi)})
            if canonical and atom.conductor == atom.n * chi.conductor:
                d = delta_atom(atom, chi)
                c_part3.record((d == 0) == (product_conductor(chi, atom.mu) == chi.conductor),
                               lambda: {"q": q, "atom": atom.to_json(), "chi": _chi(chi), "delta": d})

    _verify_histograms(F, config, atoms, corpus, check)


def _verify_histograms(F, config: VerifyConfig, atoms, corpus, check) -> None:
    q = F.q
    tag = f"q={q}"
    by_k = {k: enumerate_Xprime(F, k, config.limit) for k in range(config.k_max + 1)}
    scope = f"{tag}: corpus, k <= {config.k_max}"
    c_part = check("partition", "sum_j #X'_pi(k, j) = #X'(k)", scope)
    c_supp = check("support", "histogram support inside [a(pi_min), min(sandwich upper, BH bound)]", scope)
    c_tfb = check("twist_fixing", "#X'_pi(k, j) bounded by twist_fixing_bound (exact / upper-bound / empty-set)", scope)
    c_triv = check("trivial_cases", "twist minimal or k != a(pi)/n: X'_pi(k, j) is X'(k) at j = max(a(pi), nk), else empty",
                   f"{tag}: atoms, k <= {config.k_max}")
    c_sqb = check("sq_bound", "#X'_pi(k, j) <= #X(k - floor(ell/n)), j = max(a(pi), nk) - ell, zero outside [a(pi_min), max(a(pi), nk)]",
                  f"{tag}: atoms, k <= {config.k_max}")
    c_ell1 = check("ell_one", "#X'_pi(k, j) <= #X(floor(j/n)) when at most one component can interfere", scope)
    c_ell = check("ell_all", "#X'_pi(k, j) <= #X(floor(j/n)) for every pi (rank-averaged bound as stated)", scope,
                  asserted=False)
    for pi in corpus:
        single = len(pi.components) == 1
        atom = pi.components[0]
        for k, chars in by_k.items():
            hist = Counter(twisted(pi, chi) for chi in chars)
            lower, upper = reps.conductor_bounds(pi, k)
            top = min(upper, reps.bh_bound(pi.conductor, k, pi.n))
            wit = lambda: {"q": q, "pi": pi.to_json(), "k": k, "histogram": dict(sorted(hist.items()))}
            c_part.record(sum(hist.values()) == counting.count_Xprime(q, k), wit)
            c_supp.record(all(lower <= j <= top for j in hist), wit)
            n_phi = len(counting.interfering_components(pi, k))
            for j in range(0, top + 2):
                count = hist.get(j, 0)
                rep = counting.twist_fixing_bound(pi, k, j)
                ok = {"exact": count == rep.value, "upper-bound": count <= rep.value, "empty-set": count == 0}[rep.kind]
                jwit = lambda: {"q": q, "pi": pi.to_json(), "k": k, "j": j, "count": count, "report": rep.to_json()}
                c_tfb.record(ok, jwit)
                if lower <= j <= upper:
                    bound = counting.exists_an_ell_bound(pi, j)
                    ewit = lambda: {"q": q, "pi": pi.to_json(), "k": k, "j": j, "count": count, "bound": bound}
                    c_ell.record(count <= bound, ewit)
                    if n_phi <= 1:
                        c_ell1.record(count <= bound, ewit)
                if single:
                    if atom.is_twist_minimal or atom.conductor != atom.n * k:
                        expect = counting.count_Xprime(q, k) if j == max(atom.conductor, atom.n * k) else 0
                        c_triv.record(count == expect, jwit)
                    b = counting.twist_fixing_sq_bound(atom, k, j)
                    c_sqb.record(count == 0 if b is None else count <= b, jwit)

    _verify_quantitative(F, config, atoms, by_k, check)


def _verify_quantitative(F, config: VerifyConfig, atoms, by_k, check) -> None:
    q = F.q
    scope = f"q={q}: non-minimal atoms, chi in X'(a(pi_i)/n_i)"
    c1 = check("quant1", "#{chi : delta_chi(pi_i) = a(pi_i) - j} = #X((a(pi_i) - j)/n_i) for 0 < j <= a(pi_i) - a(pi_i^min), j = a(pi_i) mod n_i",
               scope, asserted=False)
    c2 = check("quant2", "#{chi in X(a(pi_i)/n_i) : delta_chi(pi_i) = a(pi_i)} = (q-2) #X(a(pi_i)/n_i - 1)",
               scope, asserted=False)
    c2z = check("quant2_zero", "#{chi in X'(a(pi_i)/n_i) : delta_chi(pi_i) = 0} = (q-2) #X(a(pi_i)/n_i - 1)",
                f"q={q}: non-minimal atoms with a(pi_i)/n_i >= 2")
    for atom in atoms:
        if atom.is_twist_minimal:
            continue
        k = atom.conductor // atom.n
        chars = by_k.get(k)
        if chars is None:
            chars = enumerate_Xprime(F, k, config.limit)
        deltas = Counter(delta_atom(atom, chi) for chi in chars)
        a = atom.conductor
        for j in range(1, a - atom.a_min + 1):
            rep = counting.stated_delta_count(atom, j)
            if rep.kind == counting.EMPTY:
                continue
            observed = deltas.get(a - j, 0)
            c1.record(observed == rep.value, lambda: {"q": q, "atom": atom.to_json(), "j": j,
                                                        "formula": rep.value, "enumerated": observed})
        full = counting.stated_full_delta_count(atom)
        observed = deltas.get(a, 0)
        c2.record(observed == full.value, lambda: {"q": q, "atom": atom.to_json(),
                                                   "formula": full.value, "enumerated": observed})
        if k >= 2:
            c2z.record(deltas.get(0, 0) == full.value, lambda: {"q": q, "atom": atom.to_json(),
                                                                "formula": full.value, "enumerated": deltas.get(0, 0)})


def _verify_levels(check) -> None:
    c = check("levels", "a = l + n - 1 round trip; l(chi o Nrd) = n a(chi) - n + 1; Nrd(U_D(m)) = U_F(ceil(m/n))",
              "n <= 6, l <= 10, a(chi) <= 5, m <= 30")
    for n in range(1, 7):
        for l in range(11):
            a = reps.conductor_from_level(l, n)
            c.record(reps.level_from_conductor(a, n) == l, lambda: {"n": n, "l": l})
        for a_chi in range(6):
            # least m with chi trivial on Nrd(U_D(m)) = U_F(ceil(m/n))
            brute = next(m for m in range(10 * n + 1) if nrd_image_level(m, n) >= a_chi)
            c.record(reps.norm_pullback_level(a_chi, n) == brute, lambda: {"n": n, "a_chi": a_chi, "brute": brute})
        for m in range(31):
            r = nrd_image_level(m, n)
            c.record(n * (r - 1) < m <= n * r or (m == 0 and r == 0), lambda: {"n": n, "m": m})
