"""Prime graphs and order-divisibility element sets.

The prime graph of a group has the primes dividing the group order as
vertices, with an edge {p, q} whenever some element order is divisible by
p*q.  The non-Frattini variant only counts elements outside the Frattini
subgroup; it keeps the full vertex set, so it is a spanning subgraph.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .config import DEFAULT_LATTICE_BOUND
from .errors import InputError
from .lattice import frattini_subgroup
from .perm import FiniteGroup, is_prime, prime_support


@dataclass(frozen=True)
class PrimeGraph:
    vertices: tuple[int, ...]
    edges: frozenset[frozenset[int]]
    # least element index realizing each edge, for audit trails in reports
    edge_witness: tuple[tuple[tuple[int, int], int], ...] = ()

    def __post_init__(self):
        for e in self.edges:
            if len(e) != 2:
                raise InputError("prime graph edges join two distinct vertices")
            if not e <= set(self.vertices):
                raise InputError("edge endpoint is not a vertex")

    def edge_list(self) -> list[tuple[int, int]]:
        return sorted(tuple(sorted(e)) for e in self.edges)

    def witness_for(self, p: int, q: int) -> int | None:
        key = tuple(sorted((p, q)))
        for pair, idx in self.edge_witness:
            if pair == key:
                return idx
        return None


def _graph_from_elements(G: FiniteGroup, skip_bits: int, vertices: tuple[int, ...]) -> PrimeGraph:
    witnesses: dict[tuple[int, int], int] = {}
    orders = G.element_orders()
    for i in range(G.order):
        if (skip_bits >> i) & 1:
            continue
        primes = prime_support(orders[i])
        if len(primes) < 2:
            continue
        for p, q in combinations(primes, 2):
            witnesses.setdefault((p, q), i)
    return PrimeGraph(
        vertices=vertices,
        edges=frozenset(frozenset(e) for e in witnesses),
        edge_witness=tuple(sorted(witnesses.items())),
    )


def prime_graph(G: FiniteGroup) -> PrimeGraph:
    """Edge {p, q} iff p*q divides some element order."""
    return _graph_from_elements(G, 0, prime_support(G.order))


def non_frattini_prime_graph(G: FiniteGroup, bound: int = DEFAULT_LATTICE_BOUND) -> PrimeGraph:
    """Same vertices as prime_graph; edges witnessed outside the Frattini subgroup."""
    frat = frattini_subgroup(G, bound)
    return _graph_from_elements(G, frat.members, prime_support(G.order))


def graphs_equal(a: PrimeGraph, b: PrimeGraph) -> bool:
    return set(a.vertices) == set(b.vertices) and a.edges == b.edges


@dataclass(frozen=True)
class PairOrderSets:
    """Element sets attached to a pair of primes (p, q), as bitsets.

    divisible:        elements whose order is divisible by p*q;
    outside_frattini: those additionally outside the Frattini subgroup;
    exact_support:    those whose order involves no prime beyond p and q.
    The three sets form a chain: exact_support <= outside_frattini <= divisible.
    """

    p: int
    q: int
    divisible: int
    outside_frattini: int
    exact_support: int


def pair_order_sets(
    G: FiniteGroup, p: int, q: int, bound: int = DEFAULT_LATTICE_BOUND
) -> PairOrderSets:
    if p == q:
        raise InputError("the two primes must be distinct")
    for r in (p, q):
        if not is_prime(r):
            raise InputError(f"{r} is not prime")
    frat = frattini_subgroup(G, bound).members
    orders = G.element_orders()
    pq = p * q
    allowed = {p, q}
    divisible = 0
    outside = 0
    exact = 0
    for i in range(G.order):
        if orders[i] % pq != 0:
            continue
        bit = 1 << i
        divisible |= bit
        if (frat >> i) & 1:
            continue
        outside |= bit
        if set(prime_support(orders[i])) <= allowed:
            exact |= bit
    return PairOrderSets(
        p=p, q=q, divisible=divisible, outside_frattini=outside, exact_support=exact
    )


__all__ = [
    "PrimeGraph",
    "PairOrderSets",
    "prime_graph",
    "non_frattini_prime_graph",
    "graphs_equal",
    "pair_order_sets",
]
