"""Candidate character families and their rigidity machinery.

A family assigns to every dominant weight up to a height bound a
unitriangular invariant-ring element supported on its saturated set.
From such a family one can extract structure constants (the coefficients
of the product expansion in the family basis), rebuild the family from a
structure-constant oracle, and test the two conditions that force the
family to be the true characters: the small-support multiplicity
condition and the tensor duality condition.
"""

import random
from dataclasses import dataclass, field

from .lattice import (
    Eps,
    add,
    dual_weight,
    dominant_weights_up_to,
    from_fundamental,
    fundamental_coords,
    fundamental_weight,
    height,
    processing_key,
    root_coordinates,
    saturated_dominants,
    support_size,
)
from .oracle import freudenthal_character, tensor_decompose
from .ring import CharElement, orbit_sum, unit


class BoundExceeded(ValueError):
    """A required weight falls outside the family's height bound."""


class OracleIncomplete(LookupError):
    """The structure-constant oracle cannot answer a required triple."""

    def __init__(self, mu: Eps, nu: Eps, s: Eps):
        self.triple = (mu, nu, s)
        super().__init__(f"oracle has no entry for {(mu, nu, s)}")


class PerturbationError(ValueError):
    """Requested perturbation site is invalid."""


@dataclass(frozen=True)
class CharacterFamily:
    """An indexed collection {lam: f_lam} over all dominant weights with
    height(lam) <= bound."""

    rank: int
    bound: int
    members: dict

    def member(self, lam: Eps) -> CharElement:
        try:
            return self.members[lam]
        except KeyError:
            raise BoundExceeded(
                f"{lam} (height {height(lam)}) outside bound {self.bound}"
            ) from None

    def index_set(self) -> list[Eps]:
        return sorted(self.members, key=processing_key)


def validate_family(fam: CharacterFamily) -> None:
    """Check the structural invariants: complete downward-closed index
    set, unitriangularity, and support inside the saturated set."""
    expected = set(dominant_weights_up_to(fam.rank, fam.bound))
    if set(fam.members) != expected:
        raise ValueError("index set is not exactly the dominant weights in bound")
    for lam, f in fam.members.items():
        if f.rank != fam.rank:
            raise ValueError(f"member {lam} has wrong rank")
        if f.coefficient(lam) != 1:
            raise ValueError(f"member {lam} is not unitriangular")
        allowed = set(saturated_dominants(lam))
        if not set(f.terms) <= allowed:
            raise ValueError(f"member {lam} has support outside its saturated set")


def true_family(l: int, bound: int, cache_dir: str | None = None) -> CharacterFamily:
    """The family of genuine characters on the given bound."""
    members = {
        lam: freudenthal_character(l, lam, cache_dir)
        for lam in dominant_weights_up_to(l, bound)
    }
    return CharacterFamily(l, bound, members)


def default_split(lam: Eps) -> tuple[Eps, Eps]:
    """Split lam = omega_i + (lam - omega_i), i the smallest index with a
    positive fundamental coordinate."""
    l = len(lam) - 1
    fc = list(fundamental_coords(lam))
    i = next(k for k, c in enumerate(fc) if c > 0)
    fc[i] -= 1
    return fundamental_weight(l, i + 1), from_fundamental(l, fc)


def random_split(seed: int):
    """A deterministic randomized split rule: any mu with 0 < mu < lam
    componentwise in fundamental coordinates."""
    rng = random.Random(seed)

    def split(lam: Eps) -> tuple[Eps, Eps]:
        l = len(lam) - 1
        fc = fundamental_coords(lam)
        choices = []

        def rec(i, cur):
            if i == l:
                if any(cur) and cur != list(fc):
                    choices.append(tuple(cur))
                return
            for c in range(fc[i] + 1):
                rec(i + 1, cur + [c])

        rec(0, [])
        mu_fc = rng.choice(sorted(choices))
        mu = from_fundamental(l, mu_fc)
        nu = from_fundamental(l, [a - b for a, b in zip(fc, mu_fc)])
        return mu, nu

    return split


def reconstruct_family(
    oracle, l: int, bound: int, split=None
) -> CharacterFamily:
    """Rebuild a family from a structure-constant oracle.

    The oracle is any callable (mu, nu, s) -> int.  Base cases are the
    zero weight (the ring identity) and the fundamental weights (plain
    orbit sums); every other member is the product of its split parts
    minus the oracle-weighted lower members.
    """
    if split is None:
        split = default_split
    members: dict[Eps, CharElement] = {}
    for lam in dominant_weights_up_to(l, bound):
        fc = fundamental_coords(lam)
        if not any(fc):
            members[lam] = unit(l)
        elif sum(fc) == 1:
            members[lam] = orbit_sum(lam)
        else:
            mu, nu = split(lam)
            if add(mu, nu) != lam or not any(fundamental_coords(mu)) or not any(
                fundamental_coords(nu)
            ):
                raise ValueError(f"invalid split {mu} + {nu} for {lam}")
            f = members[mu] * members[nu]
            for s in saturated_dominants(lam):
                if s == lam:
                    continue
                c = oracle(mu, nu, s)
                if c:
                    f = f - c * members[s]
            assert f.coefficient(lam) == 1
            members[lam] = f
    return CharacterFamily(l, bound, members)


def lr_oracle(l: int, cache_dir: str | None = None):
    """Oracle answering with genuine Littlewood-Richardson coefficients."""
    rows: dict[tuple[Eps, Eps], dict[Eps, int]] = {}

    def query(mu: Eps, nu: Eps, s: Eps) -> int:
        key = (mu, nu)
        if key not in rows:
            rows[key] = tensor_decompose(l, mu, nu, cache_dir)
        return rows[key].get(s, 0)

    return query


def lr_table(l: int, bound: int, cache_dir: str | None = None) -> dict:
    """Full table {(mu, nu, lam): value} of Littlewood-Richardson
    coefficients for all nonzero dominant pairs whose sum stays in
    bound, zeros included (so absence genuinely means missing)."""
    weights = [
        w for w in dominant_weights_up_to(l, bound) if any(fundamental_coords(w))
    ]
    entries: dict[tuple[Eps, Eps, Eps], int] = {}
    for mu in weights:
        for nu in weights:
            lam0 = add(mu, nu)
            if height(lam0) > bound:
                continue
            row = tensor_decompose(l, mu, nu, cache_dir)
            for s in saturated_dominants(lam0):
                entries[(mu, nu, s)] = row.get(s, 0)
    return entries


def table_oracle(entries: dict):
    """Oracle backed by a stored table; missing triples abort."""

    def query(mu: Eps, nu: Eps, s: Eps) -> int:
        if (mu, nu, s) in entries:
            return entries[(mu, nu, s)]
        if (nu, mu, s) in entries:
            return entries[(nu, mu, s)]
        raise OracleIncomplete(mu, nu, s)

    return query


def extract_structure_constants(
    fam: CharacterFamily, mu: Eps, nu: Eps
) -> dict[Eps, int]:
    """Coefficients n^t of f_mu * f_nu = sum n^t f_t, over the full
    saturated set of mu + nu (zeros included).

    Computed top-down: the convolution coefficient at t minus the
    already-known contributions of everything above t."""
    lam0 = add(mu, nu)
    if height(lam0) > fam.bound:
        raise BoundExceeded(
            f"{lam0} (height {height(lam0)}) outside bound {fam.bound}"
        )
    prod = fam.member(mu) * fam.member(nu)
    row: dict[Eps, int] = {}
    for t in saturated_dominants(lam0):
        val = prod.coefficient(t)
        for s, ns in row.items():
            if ns:
                val -= ns * fam.member(s).coefficient(t)
        row[t] = val
    return row


def multiplicity_from_product(
    fam: CharacterFamily, mu: Eps, nu: Eps, t: Eps, row: dict[Eps, int]
) -> int:
    """The coefficient of h(t) in f_{mu+nu} computed without f_{mu+nu}
    itself: the convolution coefficient minus the row-weighted lower
    members."""
    lam0 = add(mu, nu)
    prod = fam.member(mu) * fam.member(nu)
    val = prod.e_coefficient(t)
    for s in saturated_dominants(lam0):
        if s == lam0:
            continue
        ns_t = fam.member(s).coefficient(t)
        if ns_t:
            val -= row.get(s, 0) * ns_t
    return val


def _structure_constant_from_row(
    fam: CharacterFamily, prod: CharElement, lam0: Eps, t: Eps, row: dict[Eps, int]
) -> int:
    """Re-evaluate the extraction formula at t with a fixed row for all
    other positions (used by the consistency probe)."""
    val = prod.coefficient(t)
    for s in saturated_dominants(lam0):
        if s == t:
            continue
        ns_t = fam.member(s).coefficient(t)
        if ns_t:
            val -= row.get(s, 0) * ns_t
    return val


def recursion_consistency(
    fam: CharacterFamily, mu: Eps, nu: Eps, t: Eps, deltas=(1, -1)
) -> bool:
    """Check that the gap between the two recursion formulas (the
    multiplicity-from-product value and the structure-constant value at
    t) is insensitive to the entries of f_{mu+nu} away from t, the rows
    and lower members being held fixed."""
    lam0 = add(mu, nu)
    sat = saturated_dominants(lam0)
    if t not in sat:
        raise ValueError(f"{t} is not in the saturated set of {lam0}")
    row = extract_structure_constants(fam, mu, nu)
    prod = fam.member(mu) * fam.member(nu)

    def gap(family: CharacterFamily) -> int:
        v1 = multiplicity_from_product(family, mu, nu, t, row)
        v2 = _structure_constant_from_row(family, prod, lam0, t, row)
        return v1 - v2

    base = gap(fam)
    for site in sat:
        if site in (t, lam0):
            continue
        for delta in deltas:
            probed = perturb_family(fam, lam0, site, delta)
            if gap(probed) != base:
                return False
    return True


def check_support_condition(
    fam: CharacterFamily, cache_dir: str | None = None
) -> list[tuple]:
    """Compare family multiplicities against true multiplicities at
    every site where lam - mu misses at least one simple root.

    Returns (lam, mu, expected, found) violation tuples."""
    l = fam.rank
    violations = []
    for lam in fam.index_set():
        truth = freudenthal_character(l, lam, cache_dir)
        f = fam.members[lam]
        for mu in saturated_dominants(lam):
            beta = root_coordinates(lam, mu)
            if support_size(beta) < l:
                expected = truth.coefficient(mu)
                found = f.coefficient(mu)
                if expected != found:
                    violations.append((lam, mu, expected, found))
    return violations


def check_duality_condition(
    fam: CharacterFamily,
) -> tuple[list[tuple], list[tuple]]:
    """Check the tensor duality identity on every triple whose dual side
    stays inside the bound.

    Returns (violations, skipped): violations are
    (mu, nu, lam, lhs, rhs) tuples, skipped are (mu, nu, lam) triples
    whose dual-side weight escapes the bound."""
    violations: list[tuple] = []
    skipped: list[tuple] = []
    rows: dict[tuple[Eps, Eps], dict[Eps, int]] = {}

    def row(a: Eps, b: Eps) -> dict[Eps, int]:
        if (a, b) not in rows:
            rows[(a, b)] = extract_structure_constants(fam, a, b)
        return rows[(a, b)]

    members = fam.index_set()
    for mu in members:
        for nu in members:
            lam0 = add(mu, nu)
            if height(lam0) > fam.bound:
                continue
            nw = dual_weight(nu)
            for lam in saturated_dominants(lam0):
                lhs = row(mu, nu)[lam]
                if height(nw) > fam.bound or height(add(lam, nw)) > fam.bound:
                    skipped.append((mu, nu, lam))
                    continue
                rhs = row(lam, nw).get(mu, 0)
                if lhs != rhs:
                    violations.append((mu, nu, lam, lhs, rhs))
    return violations, skipped


@dataclass
class ConditionReport:
    """Verdicts of the two rigidity checks, with per-violation witnesses."""

    support_violations: list = field(default_factory=list)
    duality_violations: list = field(default_factory=list)
    skipped: list = field(default_factory=list)
    members_equal: bool | None = None

    @property
    def support_pass(self) -> bool:
        return not self.support_violations

    @property
    def duality_pass(self) -> bool:
        return not self.duality_violations

    @property
    def passed(self) -> bool:
        return self.support_pass and self.duality_pass


def verify_family(
    fam: CharacterFamily, cache_dir: str | None = None
) -> ConditionReport:
    """Run both condition checks and compare the family memberwise
    against the true characters."""
    support_violations = check_support_condition(fam, cache_dir)
    duality_violations, skipped = check_duality_condition(fam)
    equal = all(
        fam.members[lam] == freudenthal_character(fam.rank, lam, cache_dir)
        for lam in fam.index_set()
    )
    return ConditionReport(support_violations, duality_violations, skipped, equal)


def perturb_family(
    fam: CharacterFamily, lam: Eps, mu: Eps, delta: int
) -> CharacterFamily:
    """Copy of fam with the coefficient of h(mu) in f_lam shifted by delta."""
    if not isinstance(delta, int) or delta == 0:
        raise PerturbationError("delta must be a nonzero integer")
    if lam not in fam.members:
        raise PerturbationError(f"{lam} is not in the family")
    if mu == lam:
        raise PerturbationError("the leading coefficient must stay 1")
    if mu not in saturated_dominants(lam):
        raise PerturbationError(f"{mu} is not in the saturated set of {lam}")
    old = fam.members[lam]
    terms = dict(old.terms)
    terms[mu] = terms.get(mu, 0) + delta
    members = dict(fam.members)
    members[lam] = CharElement(fam.rank, terms)
    return CharacterFamily(fam.rank, fam.bound, members)


def perturbation_sites(fam: CharacterFamily) -> list[tuple[Eps, Eps]]:
    """All legal (lam, mu) perturbation sites of the family."""
    out = []
    for lam in fam.index_set():
        for mu in saturated_dominants(lam):
            if mu != lam:
                out.append((lam, mu))
    return out
