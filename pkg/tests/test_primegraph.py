import pytest

from nonfrat.errors import InputError
from nonfrat.lattice import frattini_subgroup
from nonfrat.perm import quotient_group
from nonfrat.primegraph import (
    PrimeGraph,
    graphs_equal,
    non_frattini_prime_graph,
    pair_order_sets,
    prime_graph,
)


def totient(n):
    return sum(1 for k in range(1, n + 1) if _gcd(k, n) == 1)


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


class TestPrimeGraph:
    def test_c36_complete(self, grp):
        g = prime_graph(grp("cyclic:36"))
        assert g.vertices == (2, 3)
        assert g.edge_list() == [(2, 3)]

    def test_dicyclic3_complete(self, grp):
        g = prime_graph(grp("dicyclic:3"))
        assert g.vertices == (2, 3)
        assert g.edge_list() == [(2, 3)]

    def test_s3_edgeless(self, grp):
        g = prime_graph(grp("symmetric:3"))
        assert g.vertices == (2, 3)
        assert g.edge_list() == []

    def test_a5_shape(self, grp):
        g = prime_graph(grp("alternating:5"))
        assert g.vertices == (2, 3, 5)
        assert g.edge_list() == []  # element orders are 1, 2, 3, 5

    def test_edge_witness_is_least_index(self, grp):
        G = grp("cyclic:36")
        g = prime_graph(G)
        w = g.witness_for(2, 3)
        assert w is not None and G.order_of(w) % 6 == 0
        assert all(G.order_of(i) % 6 != 0 for i in range(w))

    def test_edges_must_join_vertices(self):
        with pytest.raises(InputError):
            PrimeGraph(vertices=(2, 3), edges=frozenset({frozenset({2, 5})}))


class TestNonFrattiniGraph:
    def test_s3_equal_to_full_graph(self, grp):
        G = grp("symmetric:3")
        assert graphs_equal(prime_graph(G), non_frattini_prime_graph(G))

    def test_dicyclic3_edge_survives(self, grp):
        G = grp("dicyclic:3")
        tilde = non_frattini_prime_graph(G)
        assert tilde.edge_list() == [(2, 3)]
        witness = tilde.witness_for(2, 3)
        assert not frattini_subgroup(G).contains(witness)
        assert G.order_of(witness) == 6

    def test_dicyclic3_quotient_graph_is_edgeless(self, grp):
        G = grp("dicyclic:3")
        frat = frattini_subgroup(G)
        Q = quotient_group(G, frat.members).group
        qgraph = prime_graph(Q)
        assert qgraph.vertices == (2, 3)
        assert qgraph.edge_list() == []
        assert not graphs_equal(prime_graph(G), qgraph)

    def test_subgraph_of_full_graph(self, grp):
        for ref in ("cyclic:60", "dicyclic:15", "dihedral:15", "symmetric:4"):
            G = grp(ref)
            assert non_frattini_prime_graph(G).edges <= prime_graph(G).edges

    def test_vertices_stable_under_frattini_quotient(self, grp):
        refs = (
            "cyclic:36",
            "cyclic:360",
            "dicyclic:3",
            "dicyclic:25",
            "dihedral:18",
            "symmetric:4",
            "alternating:5",
            "product(cyclic:4,dicyclic:3)",
            "elementary-abelian:3,2",
        )
        for ref in refs:
            G = grp(ref)
            frat = frattini_subgroup(G)
            Q = quotient_group(G, frat.members).group
            assert prime_graph(G).vertices == prime_graph(Q).vertices


class TestGraphsEqual:
    def test_reflexive(self, grp):
        g = prime_graph(grp("cyclic:36"))
        assert graphs_equal(g, g)

    def test_vertex_difference_detected(self):
        a = PrimeGraph(vertices=(2, 3), edges=frozenset())
        b = PrimeGraph(vertices=(2, 5), edges=frozenset())
        assert not graphs_equal(a, b)


class TestPairOrderSets:
    def test_s3_all_empty(self, grp):
        sets = pair_order_sets(grp("symmetric:3"), 2, 3)
        assert sets.divisible == sets.outside_frattini == sets.exact_support == 0

    def test_c36_counts(self, grp):
        G = grp("cyclic:36")
        sets = pair_order_sets(G, 2, 3)
        # orders 6, 12, 18, 36 contribute phi(6)+phi(12)+phi(18)+phi(36) elements
        expected = totient(6) + totient(12) + totient(18) + totient(36)
        assert expected == 24
        assert sets.divisible.bit_count() == 24
        assert sets.outside_frattini.bit_count() == 22
        assert sets.exact_support.bit_count() == 22
        # every element of exact order 6 sits inside the Frattini subgroup
        frat = frattini_subgroup(G)
        for i in range(G.order):
            if G.order_of(i) == 6:
                assert frat.contains(i)

    def test_dicyclic3_sets(self, grp):
        G = grp("dicyclic:3")
        sets = pair_order_sets(G, 2, 3)
        members = [i for i in range(G.order) if G.order_of(i) == 6]
        assert len(members) == 2
        expected = sum(1 << i for i in members)
        assert sets.divisible == sets.outside_frattini == sets.exact_support == expected

    def test_chain_inclusions(self, grp):
        for ref in ("cyclic:36", "cyclic:360", "dicyclic:15", "dihedral:105"):
            G = grp(ref)
            primes = prime_graph(G).vertices
            for i, p in enumerate(primes):
                for q in primes[i + 1 :]:
                    sets = pair_order_sets(G, p, q)
                    assert sets.exact_support & ~sets.outside_frattini == 0
                    assert sets.outside_frattini & ~sets.divisible == 0

    def test_order_of_primes_irrelevant(self, grp):
        G = grp("cyclic:36")
        a = pair_order_sets(G, 2, 3)
        b = pair_order_sets(G, 3, 2)
        assert a.divisible == b.divisible and a.exact_support == b.exact_support

    def test_equal_primes_rejected(self, grp):
        with pytest.raises(InputError):
            pair_order_sets(grp("cyclic:36"), 3, 3)

    def test_nonprime_rejected(self, grp):
        with pytest.raises(InputError):
            pair_order_sets(grp("cyclic:36"), 4, 3)
