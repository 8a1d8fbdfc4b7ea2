"""Subgroup lattice, Frattini subgroup, socle, Sylow subgroups, composition
factors and generating-set structure.

Subgroups are element bitsets over the parent group's canonical element
order, so membership is one shift and deduplication is dict lookup.  The
lattice is the join-closure of the cyclic subgroups; joins are only computed
for one representative per conjugacy class of subgroups and the results are
closed under conjugation, which is what makes groups like S6 tractable.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .config import DEFAULT_GENERATION_BOUND, DEFAULT_LATTICE_BOUND
from .errors import InputError, LatticeLimitError, SearchLimitError
from .perm import FiniteGroup, GroupSpec, quotient_group


@dataclass(frozen=True)
class Subgroup:
    members: int  # bitset over the parent group's element order
    order: int
    is_maximal: bool
    is_normal: bool

    def contains(self, i: int) -> bool:
        return bool((self.members >> i) & 1)

    def member_indices(self) -> tuple[int, ...]:
        return tuple(_iter_bits(self.members))


def _iter_bits(bits: int):
    while bits:
        low = bits & -bits
        yield low.bit_length() - 1
        bits ^= low


def _bit_key(bits: int) -> tuple[int, ...]:
    return tuple(_iter_bits(bits))


def _transform_bits(members: list[int], col: list[int]) -> tuple[int, list[int]]:
    out = 0
    new_members = []
    for m in members:
        y = col[m]
        out |= 1 << y
        new_members.append(y)
    return out, new_members


def all_subgroups(G: FiniteGroup, bound: int = DEFAULT_LATTICE_BOUND) -> tuple[Subgroup, ...]:
    """Every subgroup exactly once, sorted by (order, member indices)."""
    cached = G._cache.get("subgroups")
    if cached is not None:
        return cached
    if G.order > bound:
        raise LatticeLimitError(
            f"group of order {G.order} exceeds the lattice bound of {bound}", bound
        )
    n = G.order
    full = (1 << n) - 1
    if n == 1:
        result = (Subgroup(members=1, order=1, is_maximal=False, is_normal=True),)
        G._cache["subgroups"] = result
        return result

    cols = G.table()
    conj_cols = G.conjugation_columns()

    # cyclic atoms (nontrivial cyclic subgroups), keyed by bitset
    atom_gen: dict[int, int] = {}
    atom_members: dict[int, list[int]] = {}
    for i in range(1, n):
        col = cols[i]
        bits = 1
        members = [0]
        x = i
        while x != 0:
            bits |= 1 << x
            members.append(x)
            x = col[x]
        if bits not in atom_gen:
            atom_gen[bits] = i
            atom_members[bits] = members
    atoms = sorted(atom_gen.items(), key=lambda kv: (kv[1]))

    known: set[int] = {1}
    queue: list[tuple[int, list[int], list[int]]] = []

    def insert_class(bits: int, members: list[int], gens: list[int]) -> None:
        # close the conjugacy class of this subgroup, queue one representative
        known.add(bits)
        frontier = [(bits, members)]
        while frontier:
            b, mem = frontier.pop()
            for col in conj_cols:
                nb, nmem = _transform_bits(mem, col)
                if nb not in known:
                    known.add(nb)
                    frontier.append((nb, nmem))
        queue.append((bits, members, gens))

    for bits, gen in atoms:
        if bits not in known:
            insert_class(bits, atom_members[bits], [gen])

    pos = 0
    while pos < len(queue):
        hbits, hmembers, hgens = queue[pos]
        pos += 1
        if hbits == full:
            continue
        for abits, agen in atoms:
            if abits & ~hbits == 0:
                continue
            jbits, jmembers = G.extend_subgroup(hbits, hmembers, hgens, agen)
            if jbits not in known:
                insert_class(jbits, jmembers, hgens + [agen])

    ordered = sorted(known, key=lambda b: (b.bit_count(), _bit_key(b)))

    # normality: invariance under conjugation by the generators
    normal_flags = []
    member_lists = []
    for bits in ordered:
        members = list(_iter_bits(bits))
        member_lists.append(members)
        normal = True
        for col in conj_cols:
            nb, _ = _transform_bits(members, col)
            if nb != bits:
                normal = False
                break
        normal_flags.append(normal)

    # maximality: proper subgroups not contained in a larger proper subgroup
    maximal_flags = [False] * len(ordered)
    proper = [(i, bits) for i, bits in enumerate(ordered) if bits != full]
    for i, bits in proper:
        order_i = bits.bit_count()
        maximal = True
        for j, bigger in proper:
            order_j = bigger.bit_count()
            if order_j > order_i and order_j % order_i == 0 and bits & ~bigger == 0:
                maximal = False
                break
        maximal_flags[i] = maximal

    result = tuple(
        Subgroup(
            members=bits,
            order=bits.bit_count(),
            is_maximal=maximal_flags[i],
            is_normal=normal_flags[i],
        )
        for i, bits in enumerate(ordered)
    )
    G._cache["subgroups"] = result
    return result


def maximal_subgroups(G: FiniteGroup, bound: int = DEFAULT_LATTICE_BOUND) -> tuple[Subgroup, ...]:
    return tuple(s for s in all_subgroups(G, bound) if s.is_maximal)


def frattini_subgroup(G: FiniteGroup, bound: int = DEFAULT_LATTICE_BOUND) -> Subgroup:
    """Intersection of all maximal subgroups (the whole group when trivial)."""
    cached = G._cache.get("frattini")
    if cached is not None:
        return cached
    subs = all_subgroups(G, bound)
    maximals = [s for s in subs if s.is_maximal]
    if not maximals:
        result = subs[-1]  # trivial group: Frattini is the whole group
    else:
        bits = maximals[0].members
        for s in maximals[1:]:
            bits &= s.members
        by_members = {s.members: s for s in subs}
        result = by_members[bits]
    G._cache["frattini"] = result
    return result


def normal_subgroups(G: FiniteGroup, bound: int = DEFAULT_LATTICE_BOUND) -> tuple[Subgroup, ...]:
    return tuple(s for s in all_subgroups(G, bound) if s.is_normal)


def minimal_normal_subgroups(
    G: FiniteGroup, bound: int = DEFAULT_LATTICE_BOUND
) -> tuple[Subgroup, ...]:
    normals = [s for s in normal_subgroups(G, bound) if s.order > 1]
    out = []
    for s in normals:
        if not any(t.order < s.order and t.members & ~s.members == 0 for t in normals):
            out.append(s)
    return tuple(out)


def socle(G: FiniteGroup, bound: int = DEFAULT_LATTICE_BOUND) -> Subgroup:
    """Join of all minimal normal subgroups."""
    minimals = minimal_normal_subgroups(G, bound)
    subs = all_subgroups(G, bound)
    if not minimals:
        return subs[0]
    union = 0
    for s in minimals:
        union |= s.members
    bits, _ = G.closure(list(_iter_bits(union)))
    by_members = {s.members: s for s in subs}
    return by_members[bits]


def sylow_subgroup(G: FiniteGroup, p: int, bound: int = DEFAULT_LATTICE_BOUND) -> Subgroup:
    """First subgroup in canonical order whose order is the full p-part of |G|."""
    if G.order % p != 0:
        raise InputError(f"{p} does not divide the group order {G.order}")
    part = 1
    m = G.order
    while m % p == 0:
        part *= p
        m //= p
    for s in all_subgroups(G, bound):
        if s.order == part:
            return s
    raise AssertionError("Sylow subgroup missing from lattice")  # unreachable


def subgroup_as_group(G: FiniteGroup, bits: int) -> FiniteGroup:
    """Realize a subgroup bitset as a FiniteGroup on the same points."""
    gens = []
    closure_bits = 1
    members_list = [0]
    for i in _iter_bits(bits):
        if i == 0 or (closure_bits >> i) & 1:
            continue
        gens.append(i)
        closure_bits, members_list = G.closure(gens)
        if closure_bits == bits:
            break
    if closure_bits != bits:
        raise InputError("bitset is not a subgroup")
    if not gens:
        gens = [0]
    spec = GroupSpec(
        degree=G.spec.degree,
        generators=tuple(G.element(i) for i in gens),
        label=f"subgroup of order {bits.bit_count()} in {G.label()}",
    )
    return FiniteGroup(spec, bound=max(bits.bit_count(), 1))


@dataclass(frozen=True)
class CompositionFactor:
    """A simple factor identified by order, abelian flag and order spectrum."""

    order: int
    abelian: bool
    spectrum: tuple[tuple[int, int], ...]  # (element order, multiplicity)


def _is_abelian(G: FiniteGroup) -> bool:
    gens = G.generator_indices
    return all(G.mult(a, b) == G.mult(b, a) for a in gens for b in gens)


def _descriptor(G: FiniteGroup) -> CompositionFactor:
    spectrum = tuple(sorted(Counter(G.element_orders()).items()))
    return CompositionFactor(order=G.order, abelian=_is_abelian(G), spectrum=spectrum)


def composition_factors(
    G: FiniteGroup, bound: int = DEFAULT_LATTICE_BOUND
) -> tuple[CompositionFactor, ...]:
    """Factors of a composition series, sorted to behave as a multiset."""
    factors = []
    current = G
    while current.order > 1:
        normals = [s for s in normal_subgroups(current, bound) if s.order < current.order]
        biggest = max(s.order for s in normals)
        N = next(s for s in normals if s.order == biggest)
        top = quotient_group(current, N.members)
        factors.append(_descriptor(top.group))
        if N.order == 1:
            break
        current = subgroup_as_group(current, N.members)
    return tuple(sorted(factors, key=lambda f: (f.order, f.abelian, f.spectrum)))


def is_nilpotent(G: FiniteGroup) -> bool:
    """Upper central series test: the series must reach the whole group."""
    current = G
    while True:
        if current.order == 1:
            return True
        n = current.order
        center_bits = 0
        for i in range(n):
            if all(current.mult(i, g) == current.mult(g, i) for g in current.generator_indices):
                center_bits |= 1 << i
        if center_bits == 1:
            return False
        if center_bits == (1 << n) - 1:
            return True
        current = quotient_group(current, center_bits).group


@dataclass(frozen=True)
class GenerationProfile:
    min_generators: int
    non_omissible: int  # bitset


def minimal_generating_size(G: FiniteGroup, bound: int = DEFAULT_GENERATION_BOUND) -> int:
    """Least k such that some k elements generate G (0 for the trivial group)."""
    if G.order > bound:
        raise SearchLimitError(
            f"group of order {G.order} exceeds the generating-set search bound of {bound}",
            bound,
        )
    n = G.order
    if n == 1:
        return 0
    full = (1 << n) - 1
    orders = G.element_orders()
    if any(o == n for o in orders):
        return 1

    def extends_to_generating(bits, members, gens, start, remaining):
        # minimal generating sets have no redundant members, so each new
        # element may be restricted to lie outside the closure so far
        for i in range(start, n):
            if (bits >> i) & 1:
                continue
            nbits, nmembers = G.extend_subgroup(bits, members, gens, i)
            if remaining == 1:
                if nbits == full:
                    return True
                continue
            if nbits == full:
                return True
            if extends_to_generating(nbits, nmembers, gens + [i], i + 1, remaining - 1):
                return True
        return False

    k = 2
    while True:
        if extends_to_generating(1, [0], [], 1, k):
            return k
        k += 1


def non_omissible_elements(
    G: FiniteGroup, k: int, bound: int = DEFAULT_GENERATION_BOUND
) -> int:
    """Bitset of elements occurring non-redundantly in some generating k-tuple.

    An element qualifies when some size-k multiset of elements generates the
    group, contains it, and stops generating once that one occurrence is
    removed.
    """
    if G.order == 1:
        raise InputError("omissibility sets are not defined for the trivial group")
    d = minimal_generating_size(G, bound)
    if k < d:
        raise InputError(f"tuple length {k} is below the minimal generating size {d}")
    n = G.order
    full = (1 << n) - 1
    closure_memo: dict[tuple[int, ...], int] = {(): 1}

    def closure_of(key: tuple[int, ...]) -> int:
        bits = closure_memo.get(key)
        if bits is None:
            bits = G.closure(list(key))[0]
            closure_memo[key] = bits
        return bits

    result = 0

    def walk(prefix: tuple[int, ...], bits: int, members: list[int], start: int, remaining: int):
        nonlocal result
        if remaining == 0:
            if bits != full:
                return
            for g in set(prefix):
                if (result >> g) & 1:
                    continue
                reduced = list(prefix)
                reduced.remove(g)
                if closure_of(tuple(reduced)) != full:
                    result |= 1 << g
            return
        if bits == full and all((result >> g) & 1 for g in set(prefix)):
            return  # no completion can contribute anything new
        for i in range(start, n):
            if (bits >> i) & 1:
                nbits, nmembers = bits, members
            else:
                nbits, nmembers = G.extend_subgroup(bits, members, list(prefix), i)
            walk(prefix + (i,), nbits, nmembers, i, remaining - 1)

    walk((), 1, [0], 0, k)
    return result


def generation_profile(G: FiniteGroup, bound: int = DEFAULT_GENERATION_BOUND) -> GenerationProfile:
    d = minimal_generating_size(G, bound)
    return GenerationProfile(min_generators=d, non_omissible=non_omissible_elements(G, d + 1, bound))


__all__ = [
    "Subgroup",
    "CompositionFactor",
    "GenerationProfile",
    "all_subgroups",
    "maximal_subgroups",
    "frattini_subgroup",
    "normal_subgroups",
    "minimal_normal_subgroups",
    "socle",
    "sylow_subgroup",
    "subgroup_as_group",
    "composition_factors",
    "is_nilpotent",
    "minimal_generating_size",
    "non_omissible_elements",
    "generation_profile",
]
