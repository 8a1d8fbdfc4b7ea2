"""Permutation arithmetic and finite-group realization.

Composition convention, used everywhere in this package: ``a * b`` means
"apply a first, then b", so ``(a * b)(x) == b(a(x))``.  Points are 0-based
internally; file formats and cycle helpers speak 1-based.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import lcm
from typing import Iterable, Sequence

from .config import DEFAULT_ENUMERATION_BOUND
from .errors import EnumerationLimitError, InputError

# Full right-multiplication tables are built only for groups up to this
# order; larger groups fall back to generator-word evaluation.
TABLE_LIMIT = 2500


@dataclass(frozen=True)
class Permutation:
    """A bijection of {0, ..., degree-1}, stored as its image tuple."""

    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(self.images)
        object.__setattr__(self, "images", images)
        n = len(images)
        if n == 0:
            raise InputError("permutation must have positive degree")
        seen = bytearray(n)
        for x in images:
            if not isinstance(x, int) or not 0 <= x < n or seen[x]:
                raise InputError(f"image list {images} is not a bijection of 0..{n - 1}")
            seen[x] = 1

    @staticmethod
    def _wrap(images: tuple[int, ...]) -> "Permutation":
        # Internal fast path: caller guarantees images is a valid tuple.
        p = object.__new__(Permutation)
        object.__setattr__(p, "images", images)
        return p

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        if degree < 1:
            raise InputError("degree must be positive")
        return cls._wrap(tuple(range(degree)))

    @classmethod
    def from_one_based(cls, images: Sequence[int]) -> "Permutation":
        return cls(tuple(x - 1 for x in images))

    @classmethod
    def from_cycles(cls, degree: int, cycles: Iterable[Sequence[int]]) -> "Permutation":
        """Build from disjoint cycles given in 1-based points, e.g. [(1,2,3)]."""
        images = list(range(degree))
        for cycle in cycles:
            for a, b in zip(cycle, cycle[1:] + type(cycle)((cycle[0],))):
                if not 1 <= a <= degree:
                    raise InputError(f"cycle point {a} outside 1..{degree}")
                if images[a - 1] != a - 1:
                    raise InputError(f"point {a} appears in two cycles")
                images[a - 1] = b - 1
        return cls(tuple(images))

    @property
    def degree(self) -> int:
        return len(self.images)

    def one_based(self) -> tuple[int, ...]:
        return tuple(x + 1 for x in self.images)

    def __mul__(self, other: "Permutation") -> "Permutation":
        """self followed by other."""
        if len(self.images) != len(other.images):
            raise InputError("cannot compose permutations of different degrees")
        return Permutation._wrap(tuple(map(other.images.__getitem__, self.images)))

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.images)
        for i, x in enumerate(self.images):
            inv[x] = i
        return Permutation._wrap(tuple(inv))

    def is_identity(self) -> bool:
        return all(i == x for i, x in enumerate(self.images))

    def cycle_lengths(self) -> list[int]:
        images = self.images
        seen = bytearray(len(images))
        out = []
        for start in range(len(images)):
            if seen[start]:
                continue
            length = 0
            x = start
            while not seen[x]:
                seen[x] = 1
                x = images[x]
                length += 1
            out.append(length)
        return out

    def order(self) -> int:
        n = 1
        for length in self.cycle_lengths():
            n = lcm(n, length)
        return n

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles as 1-based tuples, each starting at its least point."""
        images = self.images
        seen = bytearray(len(images))
        out = []
        for start in range(len(images)):
            if seen[start]:
                continue
            cycle = []
            x = start
            while not seen[x]:
                seen[x] = 1
                cycle.append(x + 1)
                x = images[x]
            if len(cycle) > 1:
                out.append(tuple(cycle))
        return out

    def __str__(self):
        cycles = self.cycles()
        if not cycles:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cycles)


def compose(a: Permutation, b: Permutation) -> Permutation:
    """Apply a first, then b."""
    return a * b


@dataclass(frozen=True)
class GroupSpec:
    """A finite group given by permutation generators of a common degree."""

    degree: int
    generators: tuple[Permutation, ...]
    label: str = ""

    def __post_init__(self):
        object.__setattr__(self, "generators", tuple(self.generators))
        if self.degree < 1:
            raise InputError("degree must be positive")
        if not self.generators:
            raise InputError("at least one generator is required")
        for g in self.generators:
            if g.degree != self.degree:
                raise InputError(
                    f"generator degree {g.degree} does not match declared degree {self.degree}"
                )


class FiniteGroup:
    """Fully enumerated permutation group with a canonical element order.

    Element 0 is the identity.  Elements are ordered breadth-first by
    minimal generator-word length, ties within a level broken by image-tuple
    lexicographic order, which makes the order reproducible across runs.
    """

    def __init__(self, spec: GroupSpec, bound: int = DEFAULT_ENUMERATION_BOUND):
        self.spec = spec
        degree = spec.degree
        identity = tuple(range(degree))
        gen_images = [g.images for g in spec.generators]

        index = {identity: 0}
        perms = [identity]
        # gen_cols[k][i] = index of elements[i] * generators[k]
        gen_cols: list[list[int]] = [[] for _ in gen_images]

        level = [identity]
        while level:
            new_images = []
            for p in level:
                for g in gen_images:
                    q = tuple(map(g.__getitem__, p))
                    if q not in index:
                        if len(index) >= bound:
                            raise EnumerationLimitError(
                                f"group exceeds the enumeration bound of {bound} elements",
                                bound,
                            )
                        index[q] = -1  # reserve; real index assigned after sorting
                        new_images.append(q)
            new_images.sort()
            for q in new_images:
                index[q] = len(perms)
                perms.append(q)
            level = new_images

        n = len(perms)
        for k, g in enumerate(gen_images):
            col = gen_cols[k]
            for p in perms:
                col.append(index[tuple(map(g.__getitem__, p))])
        # record one producing (parent, generator) pair per element; scanning in
        # index order keeps parent chains strictly decreasing
        parent = [0] * n
        via_gen = [-1] * n
        produced = bytearray(n)
        produced[0] = 1
        for i in range(n):
            for k, col in enumerate(gen_cols):
                j = col[i]
                if not produced[j]:
                    produced[j] = 1
                    parent[j] = i
                    via_gen[j] = k

        self.order = n
        self._perms = perms
        self._index = index
        self._parent = parent
        self._via_gen = via_gen
        self._gen_cols = gen_cols
        self.generator_indices = tuple(index[g] for g in gen_images)
        self._inverse: list[int] | None = None
        self._orders: list[int] | None = None
        self._table: list[list[int]] | None = None
        self._conj_cols: list[list[int]] | None = None
        self._cache: dict = {}

    # -- basic element access ------------------------------------------------

    def images(self, i: int) -> tuple[int, ...]:
        return self._perms[i]

    def element(self, i: int) -> Permutation:
        return Permutation._wrap(self._perms[i])

    @property
    def elements(self) -> tuple[Permutation, ...]:
        cached = self._cache.get("elements")
        if cached is None:
            cached = tuple(Permutation._wrap(p) for p in self._perms)
            self._cache["elements"] = cached
        return cached

    def index_of(self, p: Permutation) -> int:
        try:
            return self._index[p.images]
        except KeyError:
            raise InputError(f"permutation {p} is not an element of {self.label()}") from None

    def __contains__(self, p: Permutation) -> bool:
        return p.images in self._index

    def label(self) -> str:
        return self.spec.label or f"group of order {self.order}"

    def word(self, i: int) -> list[int]:
        """Generator indices whose product (left to right) equals element i."""
        out = []
        while i != 0:
            out.append(self._via_gen[i])
            i = self._parent[i]
        out.reverse()
        return out

    # -- multiplication ------------------------------------------------------

    def table(self) -> list[list[int]]:
        """Columns of the right-multiplication table: table()[j][i] = i*j."""
        if self._table is None:
            if self.order > TABLE_LIMIT:
                raise InputError(
                    f"multiplication table unavailable beyond order {TABLE_LIMIT}"
                )
            cols: list[list[int] | None] = [None] * self.order
            cols[0] = list(range(self.order))
            gen_cols = self._gen_cols
            for j in range(1, self.order):
                base = cols[self._parent[j]]
                gcol = gen_cols[self._via_gen[j]]
                cols[j] = [gcol[x] for x in base]
            self._table = cols  # type: ignore[assignment]
        return self._table  # type: ignore[return-value]

    def mult(self, i: int, j: int) -> int:
        """Index of elements[i] * elements[j]."""
        if self._table is not None or self.order <= TABLE_LIMIT:
            return self.table()[j][i]
        x = i
        for k in self.word(j):
            x = self._gen_cols[k][x]
        return x

    def inverse(self, i: int) -> int:
        if self._inverse is None:
            inv = [0] * self.order
            index = self._index
            for j, p in enumerate(self._perms):
                q = [0] * len(p)
                for a, b in enumerate(p):
                    q[b] = a
                inv[j] = index[tuple(q)]
            self._inverse = inv
        return self._inverse[i]

    def power(self, i: int, k: int) -> int:
        o = self.order_of(i)
        k %= o
        x = 0
        y = i
        while k:
            if k & 1:
                x = self.mult(x, y)
            y = self.mult(y, y)
            k >>= 1
        return x

    # -- element orders ------------------------------------------------------

    def element_orders(self) -> list[int]:
        if self._orders is None:
            self._orders = [Permutation._wrap(p).order() for p in self._perms]
        return self._orders

    def order_of(self, i: int) -> int:
        return self.element_orders()[i]

    # -- conjugation ---------------------------------------------------------

    def conjugation_columns(self) -> list[list[int]]:
        """Per generator k, the map i -> index of g_k^{-1} * e_i * g_k."""
        if self._conj_cols is None:
            cols = []
            index = self._index
            for g in self.spec.generators:
                gim = g.images
                ginv = g.inverse().images
                col = []
                for p in self._perms:
                    col.append(index[tuple(gim[p[x]] for x in ginv)])
                cols.append(col)
            self._conj_cols = cols
        return self._conj_cols

    def conjugate(self, i: int, j: int) -> int:
        """Index of e_j^{-1} * e_i * e_j."""
        return self.mult(self.mult(self.inverse(j), i), j)

    # -- subgroup closure ----------------------------------------------------

    def closure(self, gens: Iterable[int]) -> tuple[int, list[int]]:
        """Subgroup generated by the given element indices.

        Returns (bitset, member list); the member list is in discovery order,
        not sorted.
        """
        members = [0]
        bits = 1
        gens = [g for g in gens if g != 0]
        if not gens:
            return bits, members
        if self.order <= TABLE_LIMIT:
            cols = self.table()
            gcols = [cols[g] for g in gens]
            pos = 0
            while pos < len(members):
                x = members[pos]
                pos += 1
                for col in gcols:
                    y = col[x]
                    if not (bits >> y) & 1:
                        bits |= 1 << y
                        members.append(y)
        else:
            pos = 0
            while pos < len(members):
                x = members[pos]
                pos += 1
                for g in gens:
                    y = self.mult(x, g)
                    if not (bits >> y) & 1:
                        bits |= 1 << y
                        members.append(y)
        return bits, members

    def extend_subgroup(
        self, bits: int, members: list[int], gens: list[int], extra: int
    ) -> tuple[int, list[int]]:
        """Closure of an existing subgroup (bits, members, gens) and one element.

        Walks cosets of the given subgroup, so the cost is roughly the size of
        the result rather than size times generator count.
        """
        if (bits >> extra) & 1:
            return bits, members
        cols = self.table()
        step_cols = [cols[g] for g in gens if g != 0]
        step_cols.append(cols[extra])
        out_bits = bits
        out_members = list(members)
        coset_reps = [0, extra]
        # fill coset H*extra
        col = cols[extra]
        for h in members:
            y = col[h]
            if not (out_bits >> y) & 1:
                out_bits |= 1 << y
                out_members.append(y)
        pos = 1
        while pos < len(coset_reps):
            r = coset_reps[pos]
            pos += 1
            for scol in step_cols:
                t = scol[r]
                if (out_bits >> t) & 1:
                    continue
                coset_reps.append(t)
                tcol = cols[t]
                for h in members:
                    y = tcol[h]
                    if not (out_bits >> y) & 1:
                        out_bits |= 1 << y
                        out_members.append(y)
        return out_bits, out_members

    def __len__(self) -> int:
        return self.order

    def __repr__(self):
        return f"FiniteGroup({self.label()!r}, order={self.order})"


def enumerate_group(spec: GroupSpec, bound: int = DEFAULT_ENUMERATION_BOUND) -> FiniteGroup:
    """Close the generators of spec under composition (breadth-first)."""
    return FiniteGroup(spec, bound=bound)


def conjugacy_classes(G: FiniteGroup) -> tuple[tuple[int, ...], ...]:
    """Conjugation orbits, sorted by (class size, least member index)."""
    cached = G._cache.get("classes")
    if cached is not None:
        return cached
    n = G.order
    cols = G.conjugation_columns()
    assigned = bytearray(n)
    classes = []
    for start in range(n):
        if assigned[start]:
            continue
        orbit = [start]
        assigned[start] = 1
        pos = 0
        while pos < len(orbit):
            x = orbit[pos]
            pos += 1
            for col in cols:
                y = col[x]
                if not assigned[y]:
                    assigned[y] = 1
                    orbit.append(y)
        orbit.sort()
        classes.append(tuple(orbit))
    classes.sort(key=lambda c: (len(c), c[0]))
    result = tuple(classes)
    G._cache["classes"] = result
    return result


def class_of(G: FiniteGroup, i: int) -> tuple[int, ...]:
    for cls in conjugacy_classes(G):
        if i in cls:
            return cls
    raise InputError(f"element index {i} out of range")


def _normal_closure_gens(G: FiniteGroup, seeds: list[int], ambient_gens: list[int]):
    """Closure of seeds under the subgroup operation and conjugation by
    ambient_gens; returns (bits, members, generating set)."""
    gens = []
    bits, members = 1, [0]
    queue = [s for s in seeds if s != 0]
    while queue:
        x = queue.pop()
        if (bits >> x) & 1:
            continue
        gens.append(x)
        bits, members = G.closure(gens)
        for a in ambient_gens:
            ainv = G.inverse(a)
            for g in gens:
                y = G.mult(G.mult(ainv, g), a)
                if not (bits >> y) & 1:
                    queue.append(y)
    return bits, members, gens


def is_soluble(G: FiniteGroup) -> bool:
    """True iff the derived series reaches the trivial subgroup."""
    cached = G._cache.get("soluble")
    if cached is not None:
        return cached
    current_gens = [i for i in G.generator_indices if i != 0]
    current_bits = G.closure(current_gens)[0] if current_gens else 1
    result = None
    while result is None:
        if current_bits == 1:
            result = True
            break
        commutators = []
        for a in current_gens:
            ainv = G.inverse(a)
            for b in current_gens:
                binv = G.inverse(b)
                commutators.append(G.mult(G.mult(G.mult(ainv, binv), a), b))
        bits, members, gens = _normal_closure_gens(G, commutators, current_gens)
        if bits == current_bits:
            result = False
            break
        current_bits, current_gens = bits, gens
    G._cache["soluble"] = result
    return result


@dataclass(frozen=True)
class QuotientResult:
    group: FiniteGroup
    projection: tuple[int, ...]


def is_subgroup_bitset(G: FiniteGroup, bits: int) -> bool:
    if not bits & 1:
        return False
    members = [i for i in range(G.order) if (bits >> i) & 1]
    for a in members:
        for b in members:
            if not (bits >> G.mult(a, b)) & 1:
                return False
    return True


def is_normal_bitset(G: FiniteGroup, bits: int) -> bool:
    cols = G.conjugation_columns()
    for col in cols:
        image = 0
        b = bits
        while b:
            low = b & -b
            image |= 1 << col[low.bit_length() - 1]
            b ^= low
        if image != bits:
            return False
    return True


def quotient_group(
    G: FiniteGroup, normal_bits: int, bound: int = DEFAULT_ENUMERATION_BOUND
) -> QuotientResult:
    """Coset-action realization of G/N plus the element-level projection.

    The quotient acts on the right cosets of N; its degree is the index of N.
    """
    if not is_subgroup_bitset(G, normal_bits):
        raise InputError("bitset is not a subgroup")
    if not is_normal_bitset(G, normal_bits):
        raise InputError("subgroup is not normal; cannot form the quotient")
    n = G.order
    members = [i for i in range(n) if (normal_bits >> i) & 1]
    coset_of = [-1] * n
    reps = []
    for i in range(n):
        if coset_of[i] != -1:
            continue
        c = len(reps)
        reps.append(i)
        for m in members:
            coset_of[G.mult(m, i)] = c
    gen_perms = []
    for k in G.generator_indices:
        gen_perms.append(
            Permutation._wrap(tuple(coset_of[G.mult(r, k)] for r in reps))
        )
    qspec = GroupSpec(
        degree=len(reps),
        generators=tuple(gen_perms),
        label=f"{G.label()} / N{len(members)}",
    )
    Q = FiniteGroup(qspec, bound=bound)
    qgen = [Q.index_of(p) for p in gen_perms]
    projection = [0] * n
    for i in range(1, n):
        projection[i] = Q.mult(projection[G._parent[i]], qgen[G._via_gen[i]])
    return QuotientResult(group=Q, projection=tuple(projection))


def prime_support(n: int) -> tuple[int, ...]:
    """Sorted distinct prime divisors; empty for n = 1."""
    if n < 1:
        raise InputError("prime support is defined for positive integers")
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out.append(n)
    return tuple(out)


def is_prime(n: int) -> bool:
    return n >= 2 and prime_support(n) == (n,)


def squarefree_radical(n: int) -> int:
    r = 1
    for p in prime_support(n):
        r *= p
    return r


__all__ = [
    "Permutation",
    "GroupSpec",
    "FiniteGroup",
    "QuotientResult",
    "compose",
    "enumerate_group",
    "conjugacy_classes",
    "class_of",
    "is_soluble",
    "is_subgroup_bitset",
    "is_normal_bitset",
    "quotient_group",
    "prime_support",
    "is_prime",
    "squarefree_radical",
]
