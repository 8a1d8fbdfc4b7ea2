"""Checkable conditions for candidate (simple group, module, module) triples,
invariable generation, and the cyclic-Sylow pair search.

Second-cohomology nonvanishing cannot be computed here; those two conditions
enter as caller-supplied attestations, and the report vocabulary keeps the
epistemic status explicit (a candidate is never "verified", only "attested").
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .config import DEFAULT_LATTICE_BOUND, DEFAULT_SPIN_BOUND
from .errors import InputError
from .lattice import normal_subgroups, sylow_subgroup
from .modlinalg import ModuleRep, fixed_space, is_faithful, is_irreducible, rep_is_consistent
from .perm import FiniteGroup, conjugacy_classes, is_prime


def order_pq_free(S: FiniteGroup, p: int, q: int) -> bool:
    """True iff no element order is divisible by p*q."""
    if p == q or not is_prime(p) or not is_prime(q):
        raise InputError("need two distinct primes")
    pq = p * q
    return all(o % pq != 0 for o in S.element_orders())


def _is_prime_power_of(n: int, r: int) -> bool:
    if n < r:
        return False
    while n % r == 0:
        n //= r
    return n == 1


def acts_fixed_point_freely(S: FiniteGroup, rep: ModuleRep, r: int) -> bool:
    """No nonzero fixed vectors for any nontrivial element of r-power order.

    The fixed-space dimension is a class function, so one representative per
    conjugacy class suffices.
    """
    if not is_prime(r):
        raise InputError(f"{r} is not prime")
    if not rep_is_consistent(S, rep):
        raise InputError("generator images violate the group's relations")
    orders = S.element_orders()
    for cls in conjugacy_classes(S):
        rep_elt = cls[0]
        if rep_elt == 0 or not _is_prime_power_of(orders[rep_elt], r):
            continue
        if fixed_space(S, rep, rep_elt):
            return False
    return True


def is_simple(S: FiniteGroup, bound: int = DEFAULT_LATTICE_BOUND) -> bool:
    """Nonabelian with no proper nontrivial normal subgroup."""
    if S.order == 1:
        return False
    gens = S.generator_indices
    if all(S.mult(a, b) == S.mult(b, a) for a in gens for b in gens):
        return False
    return all(s.order in (1, S.order) for s in normal_subgroups(S, bound))


class TripleVerdict(enum.Enum):
    REJECTED_COMPUTED = "RejectedComputed"
    CANDIDATE_PENDING_ATTESTATION = "CandidatePendingAttestation"
    CANDIDATE_ATTESTED = "CandidateAttested"


@dataclass(frozen=True)
class TripleCandidate:
    S: FiniteGroup
    p: int
    q: int
    P: ModuleRep  # module of p-power order
    Q: ModuleRep  # module of q-power order
    h2p_attested: bool = False
    h2q_attested: bool = False
    attestation_note: str = ""

    def __post_init__(self):
        if self.p == self.q:
            raise InputError("the two primes must be distinct")
        for r in (self.p, self.q):
            if not is_prime(r):
                raise InputError(f"{r} is not prime")
            if r == 2:
                raise InputError("both primes must be odd; pairs containing 2 are settled")
        if self.P.prime != self.p:
            raise InputError(f"first module is over GF({self.P.prime}), expected GF({self.p})")
        if self.Q.prime != self.q:
            raise InputError(f"second module is over GF({self.Q.prime}), expected GF({self.q})")


@dataclass(frozen=True)
class TripleReport:
    simple_s: bool
    faithful_p: bool
    faithful_q: bool
    irreducible_p: bool
    irreducible_q: bool
    no_order_pq_element: bool  # condition on the element orders of S
    p_module_fixed_point_free: bool  # q-power-order elements fix nothing in P
    q_module_fixed_point_free: bool  # p-power-order elements fix nothing in Q
    h2p_attested: bool
    h2q_attested: bool
    verdict: TripleVerdict

    def computed_flags(self) -> tuple[bool, ...]:
        return (
            self.simple_s,
            self.faithful_p,
            self.faithful_q,
            self.irreducible_p,
            self.irreducible_q,
            self.no_order_pq_element,
            self.p_module_fixed_point_free,
            self.q_module_fixed_point_free,
        )


def check_triple(
    candidate: TripleCandidate,
    lattice_bound: int = DEFAULT_LATTICE_BOUND,
    spin_bound: int = DEFAULT_SPIN_BOUND,
) -> TripleReport:
    S, p, q = candidate.S, candidate.p, candidate.q
    for name, rep in (("first", candidate.P), ("second", candidate.Q)):
        if not rep_is_consistent(S, rep):
            raise InputError(f"{name} module's generator images violate the group's relations")
    flags = dict(
        simple_s=is_simple(S, lattice_bound),
        faithful_p=is_faithful(S, candidate.P),
        faithful_q=is_faithful(S, candidate.Q),
        irreducible_p=is_irreducible(candidate.P, spin_bound),
        irreducible_q=is_irreducible(candidate.Q, spin_bound),
        no_order_pq_element=order_pq_free(S, p, q),
        p_module_fixed_point_free=acts_fixed_point_freely(S, candidate.P, q),
        q_module_fixed_point_free=acts_fixed_point_freely(S, candidate.Q, p),
    )
    if not all(flags.values()):
        verdict = TripleVerdict.REJECTED_COMPUTED
    elif candidate.h2p_attested and candidate.h2q_attested:
        verdict = TripleVerdict.CANDIDATE_ATTESTED
    else:
        verdict = TripleVerdict.CANDIDATE_PENDING_ATTESTATION
    return TripleReport(
        h2p_attested=candidate.h2p_attested,
        h2q_attested=candidate.h2q_attested,
        verdict=verdict,
        **flags,
    )


def conjugacy_class_of(S: FiniteGroup, x: int) -> tuple[int, ...]:
    cols = S.conjugation_columns()
    seen = {x}
    frontier = [x]
    while frontier:
        a = frontier.pop()
        for col in cols:
            b = col[a]
            if b not in seen:
                seen.add(b)
                frontier.append(b)
    return tuple(sorted(seen))


def invariably_generates(S: FiniteGroup, x: int, y: int) -> bool:
    """True iff {x, y} generates after replacing each by arbitrary conjugates.

    Fixing x loses no generality: conjugating both members by the same
    element does not change whether the pair generates.
    """
    full = (1 << S.order) - 1
    for t in conjugacy_class_of(S, y):
        if S.closure([x, t])[0] != full:
            return False
    return True


def invariably_generates_naive(S: FiniteGroup, x: int, y: int) -> bool:
    """Independent double loop over both full conjugacy classes (oracle)."""
    full = (1 << S.order) - 1
    for a in conjugacy_class_of(S, x):
        for b in conjugacy_class_of(S, y):
            if S.closure([a, b])[0] != full:
                return False
    return True


@dataclass(frozen=True)
class SylowPairReport:
    p: int
    q: int
    sylow_p_order: int
    sylow_q_order: int
    sylow_p_cyclic: bool
    sylow_q_cyclic: bool
    pair_found: bool
    x: int | None
    y: int | None
    failure_stage: str | None  # None when a pair was found


def cyclic_sylow_invariable_pair(
    S: FiniteGroup, p: int, q: int, bound: int = DEFAULT_LATTICE_BOUND
) -> SylowPairReport:
    """Check cyclic Sylow subgroups for p and q, then search for a pair of
    Sylow generators that invariably generates.

    Only generators of one fixed Sylow subgroup per prime are tried, and the
    second coordinate is deduplicated by conjugacy class; both reductions are
    justified by conjugation invariance of invariable generation.
    """
    if p == q or not is_prime(p) or not is_prime(q):
        raise InputError("need two distinct primes")
    for r in (p, q):
        if S.order % r != 0:
            raise InputError(f"{r} does not divide the group order {S.order}")
    syl_p = sylow_subgroup(S, p, bound)
    syl_q = sylow_subgroup(S, q, bound)
    orders = S.element_orders()
    gens_p = [i for i in syl_p.member_indices() if orders[i] == syl_p.order]
    gens_q = [i for i in syl_q.member_indices() if orders[i] == syl_q.order]
    report = dict(
        p=p,
        q=q,
        sylow_p_order=syl_p.order,
        sylow_q_order=syl_q.order,
        sylow_p_cyclic=bool(gens_p),
        sylow_q_cyclic=bool(gens_q),
    )
    if not gens_p:
        return SylowPairReport(
            pair_found=False, x=None, y=None, failure_stage="sylow-p-not-cyclic", **report
        )
    if not gens_q:
        return SylowPairReport(
            pair_found=False, x=None, y=None, failure_stage="sylow-q-not-cyclic", **report
        )
    seen_classes: set[tuple[int, ...]] = set()
    candidates_q = []
    for y in gens_q:
        cls = conjugacy_class_of(S, y)
        if cls not in seen_classes:
            seen_classes.add(cls)
            candidates_q.append(y)
    for x in gens_p:
        for y in candidates_q:
            if invariably_generates(S, x, y):
                return SylowPairReport(
                    pair_found=True, x=x, y=y, failure_stage=None, **report
                )
    return SylowPairReport(
        pair_found=False, x=None, y=None, failure_stage="no-invariable-pair", **report
    )


__all__ = [
    "TripleVerdict",
    "TripleCandidate",
    "TripleReport",
    "SylowPairReport",
    "order_pq_free",
    "acts_fixed_point_freely",
    "is_simple",
    "check_triple",
    "conjugacy_class_of",
    "invariably_generates",
    "invariably_generates_naive",
    "cyclic_sylow_invariable_pair",
]
