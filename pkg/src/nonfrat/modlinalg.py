"""Dense linear algebra over prime fields and representation predicates.

Matrices act on row vectors from the right (v -> v*M), matching the
left-to-right composition convention for permutations, so images of group
products are products of images in the same order.
"""

from __future__ import annotations

from dataclasses import dataclass

from .config import DEFAULT_SPIN_BOUND
from .errors import InputError, SpinLimitError
from .perm import FiniteGroup, is_prime


@dataclass(frozen=True)
class MatrixP:
    """Square matrix over GF(p) with entries reduced mod p."""

    prime: int
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if not is_prime(self.prime):
            raise InputError(f"{self.prime} is not prime")
        p = self.prime
        rows = tuple(tuple(x % p for x in row) for row in self.rows)
        object.__setattr__(self, "rows", rows)
        d = len(rows)
        if d == 0 or any(len(row) != d for row in rows):
            raise InputError("matrix must be square with positive dimension")

    @property
    def dim(self) -> int:
        return len(self.rows)

    @classmethod
    def identity(cls, p: int, d: int) -> "MatrixP":
        return cls(p, tuple(tuple(1 if i == j else 0 for j in range(d)) for i in range(d)))

    @classmethod
    def scalar(cls, p: int, d: int, c: int) -> "MatrixP":
        return cls(p, tuple(tuple(c if i == j else 0 for j in range(d)) for i in range(d)))

    def __mul__(self, other: "MatrixP") -> "MatrixP":
        if self.prime != other.prime or self.dim != other.dim:
            raise InputError("matrix shapes/fields do not match")
        p = self.prime
        cols = tuple(zip(*other.rows))
        return MatrixP(
            p,
            tuple(
                tuple(sum(a * b for a, b in zip(row, col)) % p for col in cols)
                for row in self.rows
            ),
        )

    def __add__(self, other: "MatrixP") -> "MatrixP":
        if self.prime != other.prime or self.dim != other.dim:
            raise InputError("matrix shapes/fields do not match")
        return MatrixP(
            self.prime,
            tuple(tuple(a + b for a, b in zip(r1, r2)) for r1, r2 in zip(self.rows, other.rows)),
        )

    def __sub__(self, other: "MatrixP") -> "MatrixP":
        if self.prime != other.prime or self.dim != other.dim:
            raise InputError("matrix shapes/fields do not match")
        return MatrixP(
            self.prime,
            tuple(tuple(a - b for a, b in zip(r1, r2)) for r1, r2 in zip(self.rows, other.rows)),
        )

    def __neg__(self) -> "MatrixP":
        return MatrixP(self.prime, tuple(tuple(-a for a in row) for row in self.rows))

    def __pow__(self, k: int) -> "MatrixP":
        if k < 0:
            return self.inverse() ** (-k)
        out = MatrixP.identity(self.prime, self.dim)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def transpose(self) -> "MatrixP":
        return MatrixP(self.prime, tuple(zip(*self.rows)))

    def is_identity(self) -> bool:
        return all(x == (1 if i == j else 0) for i, row in enumerate(self.rows) for j, x in enumerate(row))

    def apply(self, vector) -> tuple[int, ...]:
        """Row vector times matrix."""
        p = self.prime
        return tuple(
            sum(v * row[j] for v, row in zip(vector, self.rows)) % p for j in range(self.dim)
        )

    def determinant(self) -> int:
        return row_reduce(self).determinant

    def is_invertible(self) -> bool:
        return self.determinant() != 0

    def inverse(self) -> "MatrixP":
        p, d = self.prime, self.dim
        work = [list(row) + [1 if i == j else 0 for j in range(d)] for i, row in enumerate(self.rows)]
        for col in range(d):
            pivot = next((r for r in range(col, d) if work[r][col] % p != 0), None)
            if pivot is None:
                raise InputError("matrix is singular")
            work[col], work[pivot] = work[pivot], work[col]
            inv = pow(work[col][col], -1, p)
            work[col] = [x * inv % p for x in work[col]]
            for r in range(d):
                if r != col and work[r][col]:
                    f = work[r][col]
                    work[r] = [(a - f * b) % p for a, b in zip(work[r], work[col])]
        return MatrixP(p, tuple(tuple(row[d:]) for row in work))


@dataclass(frozen=True)
class RowReduction:
    rank: int
    determinant: int
    pivots: tuple[int, ...]
    echelon: tuple[tuple[int, ...], ...]
    kernel_basis: tuple[tuple[int, ...], ...]  # right kernel: M v = 0

    @property
    def nullity(self) -> int:
        return len(self.kernel_basis)


def row_reduce(M: MatrixP) -> RowReduction:
    """Gauss-Jordan elimination mod p with rank, determinant and kernel basis."""
    p, d = M.prime, M.dim
    work = [list(row) for row in M.rows]
    det = 1
    pivots = []
    row = 0
    for col in range(d):
        pivot = next((r for r in range(row, d) if work[r][col]), None)
        if pivot is None:
            continue
        if pivot != row:
            work[row], work[pivot] = work[pivot], work[row]
            det = -det
        det = det * work[row][col] % p
        inv = pow(work[row][col], -1, p)
        work[row] = [x * inv % p for x in work[row]]
        for r in range(d):
            if r != row and work[r][col]:
                f = work[r][col]
                work[r] = [(a - f * b) % p for a, b in zip(work[r], work[row])]
        pivots.append(col)
        row += 1
    rank = row
    if rank < d:
        det = 0
    else:
        det %= p
    free = [c for c in range(d) if c not in pivots]
    kernel = []
    for c in free:
        v = [0] * d
        v[c] = 1
        for r, pc in enumerate(pivots):
            v[pc] = (-work[r][c]) % p
        kernel.append(tuple(v))
    return RowReduction(
        rank=rank,
        determinant=det,
        pivots=tuple(pivots),
        echelon=tuple(tuple(r) for r in work),
        kernel_basis=tuple(kernel),
    )


@dataclass(frozen=True)
class ModuleRep:
    """A module over GF(p) given by one invertible matrix per group generator."""

    prime: int
    dim: int
    images: tuple[MatrixP, ...]

    def __post_init__(self):
        if not self.images:
            raise InputError("a representation needs at least one generator image")
        for m in self.images:
            if m.prime != self.prime or m.dim != self.dim:
                raise InputError("all generator images must share the prime and dimension")
            if not m.is_invertible():
                raise InputError("generator images must be invertible")


def rep_matrices(G: FiniteGroup, rep: ModuleRep) -> tuple[MatrixP, ...]:
    """Matrix for every element, extending generator images along BFS words."""
    if len(rep.images) != len(G.spec.generators):
        raise InputError(
            f"representation has {len(rep.images)} generator images but the group "
            f"has {len(G.spec.generators)} generators"
        )
    key = ("rep_matrices", rep)
    cached = G._cache.get(key)
    if cached is not None:
        return cached
    mats: list[MatrixP] = [MatrixP.identity(rep.prime, rep.dim)] * G.order
    for i in range(1, G.order):
        mats[i] = mats[G._parent[i]] * rep.images[G._via_gen[i]]
    result = tuple(mats)
    G._cache[key] = result
    return result


def rep_is_consistent(G: FiniteGroup, rep: ModuleRep) -> bool:
    """Exact homomorphism check over the whole Cayley graph."""
    mats = rep_matrices(G, rep)
    for k, img in enumerate(rep.images):
        col = G._gen_cols[k]
        for i in range(G.order):
            if mats[col[i]] != mats[i] * img:
                return False
    return True


def fixed_space(G: FiniteGroup, rep: ModuleRep, element: int) -> tuple[tuple[int, ...], ...]:
    """Basis of the fixed row vectors of the element's matrix (empty = zero space)."""
    m = rep_matrices(G, rep)[element]
    shifted = m - MatrixP.identity(rep.prime, rep.dim)
    # fixed row vectors are the left kernel, i.e. the right kernel of the transpose
    return row_reduce(shifted.transpose()).kernel_basis


def is_faithful(G: FiniteGroup, rep: ModuleRep) -> bool:
    if not rep_is_consistent(G, rep):
        raise InputError("generator images violate the group's relations")
    mats = rep_matrices(G, rep)
    return all(not mats[i].is_identity() for i in range(1, G.order))


def _spin(start: tuple[int, ...], images: tuple[MatrixP, ...], p: int, d: int) -> int:
    """Dimension of the smallest invariant subspace containing start."""
    basis: list[tuple[int, ...]] = []
    pivots: list[int] = []

    def insert(vec) -> bool:
        v = list(vec)
        for b, piv in zip(basis, pivots):
            if v[piv]:
                f = v[piv]
                v = [(a - f * c) % p for a, c in zip(v, b)]
        lead = next((j for j, x in enumerate(v) if x), None)
        if lead is None:
            return False
        inv = pow(v[lead], -1, p)
        basis.append(tuple(x * inv % p for x in v))
        pivots.append(lead)
        return True

    insert(start)
    frontier = [basis[0]]
    while frontier and len(basis) < d:
        v = frontier.pop()
        for m in images:
            w = m.apply(v)
            if insert(w):
                frontier.append(basis[-1])
    return len(basis)


def is_irreducible(rep: ModuleRep, spin_bound: int = DEFAULT_SPIN_BOUND) -> bool:
    """No proper nonzero invariant subspace, decided by spinning every
    1-dimensional subspace representative."""
    p, d = rep.prime, rep.dim
    if p**d > spin_bound:
        raise SpinLimitError(
            f"module with {p}^{d} vectors exceeds the spin bound of {spin_bound}; "
            "use a smaller module",
            spin_bound,
        )
    if d == 1:
        return True
    # canonical projective points: first nonzero coordinate equals 1
    for vec in _projective_points(p, d):
        if _spin(vec, rep.images, p, d) < d:
            return False
    return True


def _projective_points(p: int, d: int):
    for lead in range(d):
        tail = d - lead - 1
        counters = [0] * tail
        while True:
            yield (0,) * lead + (1,) + tuple(counters)
            i = tail - 1
            while i >= 0 and counters[i] == p - 1:
                counters[i] = 0
                i -= 1
            if i < 0:
                break
            counters[i] += 1


def involution_lemma_check(y: MatrixP) -> bool:
    """For odd p and y of order dividing 2: y fixes a vector or y = -identity.

    A False return contradicts a proved statement about order-2 elements of
    general linear groups and should be treated as an alarm by callers.
    """
    if y.prime == 2:
        raise InputError("the involution check is for odd characteristic")
    if not (y * y).is_identity():
        raise InputError("matrix must square to the identity")
    if (y - MatrixP.identity(y.prime, y.dim)).determinant() == 0:
        return True
    return y == MatrixP.scalar(y.prime, y.dim, -1)


__all__ = [
    "MatrixP",
    "RowReduction",
    "ModuleRep",
    "row_reduce",
    "rep_matrices",
    "rep_is_consistent",
    "fixed_space",
    "is_faithful",
    "is_irreducible",
    "involution_lemma_check",
]
