import pytest

from nonfrat.builtins import parse_group_reference
from nonfrat.perm import enumerate_group

_GROUPS = {}


@pytest.fixture(scope="session")
def grp():
    """Build (and cache) groups from reference strings like 'symmetric:3'."""

    def get(reference, bound=1000):
        key = (reference, bound)
        if key not in _GROUPS:
            _GROUPS[key] = enumerate_group(parse_group_reference(reference), bound=bound)
        return _GROUPS[key]

    return get


def naive_closure(G, gens):
    """Subgroup closure by repeated pairwise products (test oracle)."""
    members = {0} | set(gens)
    changed = True
    while changed:
        changed = False
        for a in list(members):
            for b in list(members):
                c = G.mult(a, b)
                if c not in members:
                    members.add(c)
                    changed = True
    return frozenset(members)


def naive_conjugacy_classes(G):
    """Conjugation orbits via the full double loop (test oracle)."""
    classes = []
    left = set(range(G.order))
    while left:
        x = min(left)
        cls = frozenset(G.mult(G.mult(G.inverse(h), x), h) for h in range(G.order))
        left -= cls
        classes.append(cls)
    return classes
