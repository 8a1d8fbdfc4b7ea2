"""Built-in group constructors, the name:parameter reference grammar, and
corpus builders for scans.

Reference syntax accepted on the command line and in corpus labels:

    cyclic:12   dihedral:6   dicyclic:3   symmetric:4   alternating:5
    elementary-abelian:2,3   product(cyclic:3,dihedral:4)

Labels produced by the constructors are exactly these strings, so every
corpus label can be fed back as a reference.
"""

from __future__ import annotations

import random
from math import factorial

from .errors import InputError
from .perm import GroupSpec, Permutation, is_prime

DEFAULT_PRODUCT_SEED = 20260314


def cyclic(n: int) -> GroupSpec:
    if n < 1:
        raise InputError("cyclic groups need a positive order")
    if n == 1:
        return GroupSpec(1, (Permutation.identity(1),), "cyclic:1")
    gen = Permutation(tuple((i + 1) % n for i in range(n)))
    return GroupSpec(n, (gen,), f"cyclic:{n}")


def dihedral(n: int) -> GroupSpec:
    """Symmetries of the regular n-gon, order 2n (degenerate for n <= 2)."""
    if n < 1:
        raise InputError("dihedral groups need a positive parameter")
    if n == 1:
        return GroupSpec(2, (Permutation.from_cycles(2, [(1, 2)]),), "dihedral:1")
    if n == 2:
        gens = (
            Permutation.from_cycles(4, [(1, 2)]),
            Permutation.from_cycles(4, [(3, 4)]),
        )
        return GroupSpec(4, gens, "dihedral:2")
    rot = Permutation(tuple((i + 1) % n for i in range(n)))
    refl = Permutation(tuple((n - i) % n for i in range(n)))
    return GroupSpec(n, (rot, refl), f"dihedral:{n}")


def dicyclic(n: int) -> GroupSpec:
    """Order 4n: the cyclic group of order n extended by an order-4 element
    acting by inversion, realized by its regular representation.

    The regular realization is used because for odd n the group has a unique
    involution, hence no faithful action of smaller degree in general.
    """
    if n < 1:
        raise InputError("dicyclic groups need a positive parameter")
    elements = [(i, j) for i in range(n) for j in range(4)]
    index = {e: k for k, e in enumerate(elements)}

    def mul(e1, e2):
        i1, j1 = e1
        i2, j2 = e2
        sign = -1 if j1 % 2 else 1
        return ((i1 + sign * i2) % n, (j1 + j2) % 4)

    gen_a = Permutation(tuple(index[mul(e, (1 % n, 0))] for e in elements))
    gen_b = Permutation(tuple(index[mul(e, (0, 1))] for e in elements))
    return GroupSpec(4 * n, (gen_a, gen_b), f"dicyclic:{n}")


def symmetric(n: int) -> GroupSpec:
    if n < 1:
        raise InputError("symmetric groups need a positive parameter")
    if n == 1:
        return GroupSpec(1, (Permutation.identity(1),), "symmetric:1")
    if n == 2:
        return GroupSpec(2, (Permutation.from_cycles(2, [(1, 2)]),), "symmetric:2")
    gens = (
        Permutation.from_cycles(n, [(1, 2)]),
        Permutation.from_cycles(n, [tuple(range(1, n + 1))]),
    )
    return GroupSpec(n, gens, f"symmetric:{n}")


def alternating(n: int) -> GroupSpec:
    if n < 1:
        raise InputError("alternating groups need a positive parameter")
    if n <= 2:
        return GroupSpec(max(n, 1), (Permutation.identity(max(n, 1)),), f"alternating:{n}")
    if n == 3:
        return GroupSpec(3, (Permutation.from_cycles(3, [(1, 2, 3)]),), "alternating:3")
    three_cycle = Permutation.from_cycles(n, [(1, 2, 3)])
    if n % 2 == 1:
        big = Permutation.from_cycles(n, [tuple(range(1, n + 1))])
    else:
        big = Permutation.from_cycles(n, [tuple(range(2, n + 1))])
    return GroupSpec(n, (three_cycle, big), f"alternating:{n}")


def elementary_abelian(p: int, k: int) -> GroupSpec:
    if not is_prime(p):
        raise InputError(f"{p} is not prime")
    if k < 1:
        raise InputError("the exponent must be positive")
    degree = p * k
    gens = []
    for i in range(k):
        cycle = tuple(range(i * p + 1, (i + 1) * p + 1))
        gens.append(Permutation.from_cycles(degree, [cycle]))
    return GroupSpec(degree, tuple(gens), f"elementary-abelian:{p},{k}")


def direct_product(a: GroupSpec, b: GroupSpec) -> GroupSpec:
    degree = a.degree + b.degree
    gens = []
    for g in a.generators:
        gens.append(Permutation(g.images + tuple(range(a.degree, degree))))
    for g in b.generators:
        gens.append(Permutation(tuple(range(a.degree)) + tuple(x + a.degree for x in g.images)))
    return GroupSpec(degree, tuple(gens), f"product({a.label},{b.label})")


_SINGLE_PARAM = {
    "cyclic": cyclic,
    "dihedral": dihedral,
    "dicyclic": dicyclic,
    "symmetric": symmetric,
    "alternating": alternating,
}

BUILTIN_NAMES = tuple(sorted(_SINGLE_PARAM)) + ("elementary-abelian", "product")


def builtin_group(name: str, *params: int) -> GroupSpec:
    if name in _SINGLE_PARAM:
        if len(params) != 1:
            raise InputError(f"{name} takes exactly one integer parameter")
        return _SINGLE_PARAM[name](params[0])
    if name == "elementary-abelian":
        if len(params) != 2:
            raise InputError("elementary-abelian takes two parameters: prime,exponent")
        return elementary_abelian(params[0], params[1])
    raise InputError(f"unknown builtin group {name!r}; known: {', '.join(BUILTIN_NAMES)}")


def looks_like_reference(text: str) -> bool:
    head = text.split(":", 1)[0]
    return head in _SINGLE_PARAM or head == "elementary-abelian" or text.startswith("product(")


def parse_group_reference(text: str) -> GroupSpec:
    text = text.strip()
    if text.startswith("product(") and text.endswith(")"):
        inner = text[len("product(") : -1]
        depth = 0
        for pos, ch in enumerate(inner):
            if ch == "(":
                depth += 1
            elif ch == ")":
                depth -= 1
            elif ch == "," and depth == 0:
                return direct_product(
                    parse_group_reference(inner[:pos]),
                    parse_group_reference(inner[pos + 1 :]),
                )
        raise InputError(f"product reference {text!r} needs two comma-separated factors")
    if ":" not in text:
        raise InputError(f"group reference {text!r} is not name:parameter syntax")
    name, _, tail = text.partition(":")
    try:
        params = tuple(int(x) for x in tail.split(","))
    except ValueError:
        raise InputError(f"non-integer parameter in group reference {text!r}") from None
    return builtin_group(name.strip(), *params)


# -- corpus builders ---------------------------------------------------------

FAMILY_NAMES = (
    "cyclic",
    "dihedral",
    "dicyclic",
    "symmetric",
    "alternating",
    "elementary-abelian",
    "products",
)

# largest exponent per prime kept in the elementary-abelian family: subgroup
# counts grow like Gaussian binomials, so tall powers of small primes are
# excluded from corpus runs
_EA_MAX_EXPONENT = {2: 5, 3: 4, 5: 3, 7: 3}


def _elementary_abelian_specs(max_order: int) -> list[GroupSpec]:
    out = []
    p = 2
    while p * p <= max_order:
        if is_prime(p):
            k = 2
            while p**k <= max_order and k <= _EA_MAX_EXPONENT.get(p, 2):
                out.append(elementary_abelian(p, k))
                k += 1
        p += 1
    return out


def _product_pool(max_order: int) -> list[GroupSpec]:
    pool = []
    pool.extend(cyclic(n) for n in range(2, 31))
    pool.extend(dihedral(n) for n in range(2, 16))
    pool.extend(dicyclic(n) for n in range(2, 8))
    pool.extend(symmetric(n) for n in (3, 4))
    pool.extend(alternating(n) for n in (4, 5))
    pool.extend(elementary_abelian(p, k) for p, k in ((2, 2), (2, 3), (3, 2), (5, 2)))
    return [s for s in pool if _spec_order(s) <= max_order]


def _spec_order(spec: GroupSpec) -> int:
    # constructor labels encode the exact order; parse it back rather than enumerate
    label = spec.label
    if label.startswith("cyclic:"):
        return int(label.split(":")[1])
    if label.startswith("dihedral:"):
        return 2 * int(label.split(":")[1])
    if label.startswith("dicyclic:"):
        return 4 * int(label.split(":")[1])
    if label.startswith("symmetric:"):
        return factorial(int(label.split(":")[1]))
    if label.startswith("alternating:"):
        n = int(label.split(":")[1])
        return max(factorial(n) // 2, 1)
    if label.startswith("elementary-abelian:"):
        p, k = map(int, label.split(":")[1].split(","))
        return p**k
    if label.startswith("product("):
        inner = label[len("product(") : -1]
        depth = 0
        for pos, ch in enumerate(inner):
            depth += ch == "("
            depth -= ch == ")"
            if ch == "," and depth == 0:
                left = parse_group_reference(inner[:pos])
                right = parse_group_reference(inner[pos + 1 :])
                return _spec_order(left) * _spec_order(right)
    raise InputError(f"cannot infer order from label {spec.label!r}")


def random_products(
    max_order: int, count: int = 50, seed: int = DEFAULT_PRODUCT_SEED
) -> list[GroupSpec]:
    """Seeded random direct products whose orders stay within max_order."""
    rng = random.Random(seed)
    pool = _product_pool(max_order)
    out = []
    seen = set()
    attempts = 0
    while len(out) < count and attempts < 100 * count:
        attempts += 1
        a, b = rng.choice(pool), rng.choice(pool)
        if _spec_order(a) * _spec_order(b) > max_order:
            continue
        spec = direct_product(a, b)
        if spec.label in seen:
            continue
        seen.add(spec.label)
        out.append(spec)
    return out


def family_specs(
    family: str,
    max_order: int,
    product_count: int = 50,
    seed: int = DEFAULT_PRODUCT_SEED,
) -> list[GroupSpec]:
    if family == "cyclic":
        return [cyclic(n) for n in range(1, max_order + 1)]
    if family == "dihedral":
        return [dihedral(n) for n in range(1, max_order // 2 + 1)]
    if family == "dicyclic":
        return [dicyclic(n) for n in range(1, max_order // 4 + 1)]
    if family == "symmetric":
        return [symmetric(n) for n in range(1, 7) if factorial(n) <= max_order]
    if family == "alternating":
        return [alternating(n) for n in range(1, 7) if factorial(n) // 2 <= max_order]
    if family == "elementary-abelian":
        return _elementary_abelian_specs(max_order)
    if family == "products":
        return random_products(max_order, product_count, seed)
    if family == "all":
        out = []
        for f in FAMILY_NAMES:
            out.extend(family_specs(f, max_order, product_count, seed))
        return out
    raise InputError(f"unknown family {family!r}; known: {', '.join(FAMILY_NAMES + ('all',))}")


__all__ = [
    "BUILTIN_NAMES",
    "FAMILY_NAMES",
    "DEFAULT_PRODUCT_SEED",
    "cyclic",
    "dihedral",
    "dicyclic",
    "symmetric",
    "alternating",
    "elementary_abelian",
    "direct_product",
    "builtin_group",
    "looks_like_reference",
    "parse_group_reference",
    "family_specs",
    "random_products",
]
