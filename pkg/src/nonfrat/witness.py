"""Locating non-Frattini elements with controlled prime support.

For a set pi of primes realized by the order of some element, a witness is
an element outside the Frattini subgroup whose order involves every prime of
pi and no prime beyond pi* (pi itself for soluble groups, pi plus 2
otherwise).  Witness existence is a proved statement, so a failed search is
escalated as a TheoremViolation rather than returned as data.  The corpus
scanner, by contrast, probes an open question: a pair (p, q) whose
divisible-order set is nonempty but has no exact-support witness outside the
Frattini subgroup would be a genuine discovery, and is reported, not raised
-- unless 2 is one of the primes, in which case it contradicts the proved
statement and is escalated.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations

from .config import Config
from .errors import BoundError, InputError, TheoremViolation
from .lattice import frattini_subgroup
from .perm import FiniteGroup, GroupSpec, enumerate_group, is_prime, is_soluble, prime_support
from .primegraph import pair_order_sets


@dataclass(frozen=True)
class WitnessResult:
    found: bool
    witness: int | None  # element index
    witness_order: int | None
    target_support: tuple[int, ...]  # the requested prime set
    witness_support: tuple[int, ...]  # primes of the witness order
    allowed_support: tuple[int, ...]  # the prime set the search ran under


def _check_primes(G: FiniteGroup, primes) -> tuple[int, ...]:
    pi = tuple(sorted(set(primes)))
    if not pi:
        raise InputError("the prime set must be non-empty")
    for p in pi:
        if not is_prime(p):
            raise InputError(f"{p} is not prime")
        if G.order % p != 0:
            raise InputError(f"{p} does not divide the group order {G.order}")
    return pi


def element_of_squarefree_order(G: FiniteGroup, primes) -> int | None:
    """Least-index element whose order is exactly the product of the primes."""
    pi = _check_primes(G, primes)
    target = 1
    for p in pi:
        target *= p
    orders = G.element_orders()
    for i in range(G.order):
        if orders[i] == target:
            return i
    return None


def non_frattini_witness(
    G: FiniteGroup, primes, lattice_bound: int | None = None
) -> WitnessResult:
    pi = _check_primes(G, primes)
    if element_of_squarefree_order(G, pi) is None:
        product = "*".join(map(str, pi))
        raise InputError(f"{G.label()} has no element of order {product}")
    if is_soluble(G):
        allowed = pi
    else:
        allowed = tuple(sorted(set(pi) | {2}))
    kwargs = {} if lattice_bound is None else {"bound": lattice_bound}
    frat = frattini_subgroup(G, **kwargs).members
    orders = G.element_orders()
    pi_set = set(pi)
    allowed_set = set(allowed)
    for i in range(G.order):
        if (frat >> i) & 1:
            continue
        support = set(prime_support(orders[i]))
        if pi_set <= support <= allowed_set:
            return WitnessResult(
                found=True,
                witness=i,
                witness_order=orders[i],
                target_support=pi,
                witness_support=tuple(sorted(support)),
                allowed_support=allowed,
            )
    raise TheoremViolation(
        f"{G.label()}: no non-Frattini element with prime support between "
        f"{set(pi)} and {set(allowed)} although an element of squarefree order "
        "exists; this should be impossible"
    )


@dataclass(frozen=True)
class WitnessSurvey:
    group_label: str
    group_order: int
    soluble: bool
    results: tuple[WitnessResult, ...]


def realizable_support_sets(G: FiniteGroup) -> tuple[tuple[int, ...], ...]:
    """Prime sets realized by squarefree-order elements (every element order
    contributes its radical, so these are just the distinct supports)."""
    supports = {prime_support(o) for o in G.element_orders() if o > 1}
    return tuple(sorted(supports, key=lambda s: (len(s), s)))


def witness_survey(G: FiniteGroup, lattice_bound: int | None = None) -> WitnessSurvey:
    """Run the witness search for every realizable prime set.

    Raises TheoremViolation if any search comes up empty.
    """
    results = tuple(
        non_frattini_witness(G, pi, lattice_bound) for pi in realizable_support_sets(G)
    )
    return WitnessSurvey(
        group_label=G.label(),
        group_order=G.order,
        soluble=is_soluble(G),
        results=results,
    )


@dataclass(frozen=True)
class ScanFinding:
    group_label: str
    group_order: int
    p: int
    q: int
    has_divisible: bool  # some element order is divisible by p*q
    has_exact_support_witness: bool  # non-Frattini witness with support in {p,q}
    counterexample: bool


@dataclass(frozen=True)
class ScanNotice:
    group_label: str
    reason: str


def scan_enumerated(G: FiniteGroup, lattice_bound: int | None = None) -> list[ScanFinding]:
    """Pair findings for one already-enumerated group."""
    kwargs = {} if lattice_bound is None else {"bound": lattice_bound}
    findings = []
    for p, q in combinations(prime_support(G.order), 2):
        sets = pair_order_sets(G, p, q, **kwargs)
        if sets.divisible == 0:
            continue
        counterexample = sets.exact_support == 0
        if counterexample and 2 in (p, q):
            raise TheoremViolation(
                f"{G.label()}: pair ({p},{q}) has divisible-order elements but no "
                "exact-support witness outside the Frattini subgroup; with 2 in the "
                "pair this contradicts a proved statement"
            )
        findings.append(
            ScanFinding(
                group_label=G.label(),
                group_order=G.order,
                p=p,
                q=q,
                has_divisible=True,
                has_exact_support_witness=not counterexample,
                counterexample=counterexample,
            )
        )
    return findings


def scan_group(spec: GroupSpec, max_order: int, config: Config | None = None):
    """Findings for one group, or a ScanNotice when it exceeds the bounds."""
    cfg = config or Config()
    limit = min(cfg.enumeration_bound, max_order)
    try:
        G = enumerate_group(spec, bound=limit)
    except BoundError:
        return ScanNotice(group_label=spec.label, reason=f"group order exceeds {limit}")
    try:
        frattini_subgroup(G, cfg.lattice_bound)
    except BoundError as exc:
        return ScanNotice(group_label=spec.label, reason=str(exc))
    return scan_enumerated(G, cfg.lattice_bound)


def _scan_worker(payload):
    spec, max_order, config = payload
    return scan_group(spec, max_order, config)


def pair_scan(
    corpus,
    max_order: int,
    config: Config | None = None,
    parallelism: int = 1,
) -> tuple[tuple[ScanFinding, ...], tuple[ScanNotice, ...]]:
    """Scan a corpus of group specs for pairs without exact-support witnesses.

    Results are merged in corpus order regardless of scheduling.
    """
    specs = list(corpus)
    payloads = [(spec, max_order, config) for spec in specs]
    if parallelism > 1 and len(specs) > 1:
        with ProcessPoolExecutor(max_workers=parallelism) as pool:
            outcomes = list(pool.map(_scan_worker, payloads))
    else:
        outcomes = [_scan_worker(p) for p in payloads]
    findings: list[ScanFinding] = []
    notices: list[ScanNotice] = []
    for outcome in outcomes:
        if isinstance(outcome, ScanNotice):
            notices.append(outcome)
        else:
            findings.extend(outcome)
    return tuple(findings), tuple(notices)


__all__ = [
    "WitnessResult",
    "WitnessSurvey",
    "ScanFinding",
    "ScanNotice",
    "element_of_squarefree_order",
    "non_frattini_witness",
    "realizable_support_sets",
    "witness_survey",
    "scan_enumerated",
    "scan_group",
    "pair_scan",
]
