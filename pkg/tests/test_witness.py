import pytest

from nonfrat.builtins import cyclic, dicyclic, symmetric
from nonfrat.config import Config
from nonfrat.errors import InputError, TheoremViolation
from nonfrat.lattice import Subgroup, frattini_subgroup
from nonfrat.perm import enumerate_group, prime_support
from nonfrat.primegraph import pair_order_sets
from nonfrat.witness import (
    ScanNotice,
    element_of_squarefree_order,
    non_frattini_witness,
    pair_scan,
    realizable_support_sets,
    scan_group,
    witness_survey,
)


class TestSquarefreeOrderElement:
    def test_c36(self, grp):
        G = grp("cyclic:36")
        i = element_of_squarefree_order(G, (2, 3))
        assert G.order_of(i) == 6

    def test_least_index(self, grp):
        G = grp("cyclic:36")
        i = element_of_squarefree_order(G, (2, 3))
        assert all(G.order_of(j) != 6 for j in range(i))

    def test_dicyclic3_order_six_element(self, grp):
        G = grp("dicyclic:3")
        a, b = G.generator_indices
        ab2 = G.mult(a, G.mult(b, b))
        i = element_of_squarefree_order(G, (2, 3))
        assert G.order_of(i) == 6
        assert i in (ab2, G.inverse(ab2))

    def test_a5_has_no_order_15(self, grp):
        assert element_of_squarefree_order(grp("alternating:5"), (3, 5)) is None

    def test_prime_validation(self, grp):
        G = grp("cyclic:36")
        with pytest.raises(InputError):
            element_of_squarefree_order(G, (4,))
        with pytest.raises(InputError):
            element_of_squarefree_order(G, (5,))
        with pytest.raises(InputError):
            element_of_squarefree_order(G, ())


class TestNonFrattiniWitness:
    def test_c6_generator(self, grp):
        G = grp("cyclic:6")
        r = non_frattini_witness(G, (2, 3))
        assert r.found and G.order_of(r.witness) == 6

    def test_dicyclic3_takes_the_order_six_element(self, grp):
        G = grp("dicyclic:3")
        r = non_frattini_witness(G, (2, 3))
        assert r.witness == element_of_squarefree_order(G, (2, 3))
        assert r.witness_order == 6

    def test_c36_witness_order(self, grp):
        G = grp("cyclic:36")
        r = non_frattini_witness(G, (2, 3))
        assert r.witness_order in (12, 18, 36)
        assert r.witness_support == (2, 3)  # soluble: exact support
        assert r.allowed_support == (2, 3)

    def test_insoluble_group_allows_two(self, grp):
        G = grp("alternating:5")
        r = non_frattini_witness(G, (3,))
        assert r.allowed_support == (2, 3)
        assert set(r.witness_support) <= {2, 3}
        assert 3 in r.witness_support

    def test_missing_squarefree_element_rejected(self, grp):
        with pytest.raises(InputError):
            non_frattini_witness(grp("alternating:5"), (3, 5))

    def test_corrupted_frattini_raises_alarm(self):
        G = enumerate_group(dicyclic(3))
        full = (1 << G.order) - 1
        G._cache["frattini"] = Subgroup(members=full, order=G.order, is_maximal=False, is_normal=True)
        with pytest.raises(TheoremViolation):
            non_frattini_witness(G, (2, 3))

    def test_witness_is_least_qualifying_index(self, grp):
        G = grp("cyclic:36")
        r = non_frattini_witness(G, (2, 3))
        frat = frattini_subgroup(G).members
        for i in range(r.witness):
            inside = bool((frat >> i) & 1)
            support = set(prime_support(G.order_of(i)))
            assert inside or not ({2, 3} <= support <= {2, 3})

    def test_repeated_runs_agree(self, grp):
        G = grp("dicyclic:15")
        first = non_frattini_witness(G, (2, 3, 5))
        second = non_frattini_witness(G, (2, 3, 5))
        assert first == second

    def test_witness_lands_in_pair_sets(self, grp):
        G = grp("cyclic:36")
        r = non_frattini_witness(G, (2, 3))
        sets = pair_order_sets(G, 2, 3)
        assert (sets.outside_frattini >> r.witness) & 1
        if set(r.witness_support) <= {2, 3}:
            assert (sets.exact_support >> r.witness) & 1


class TestWitnessSurvey:
    def test_s3_support_sets(self, grp):
        survey = witness_survey(grp("symmetric:3"))
        assert [r.target_support for r in survey.results] == [(2,), (3,)]
        assert all(r.found for r in survey.results)

    def test_dicyclic3_all_sets_succeed(self, grp):
        survey = witness_survey(grp("dicyclic:3"))
        assert [r.target_support for r in survey.results] == [(2,), (3,), (2, 3)]
        assert all(r.found for r in survey.results)

    def test_c36_soluble_supports_exact(self, grp):
        survey = witness_survey(grp("cyclic:36"))
        assert survey.soluble
        for r in survey.results:
            assert r.witness_support == r.target_support

    def test_realizable_sets_come_from_squarefree_orders(self, grp):
        G = grp("dicyclic:15")
        for pi in realizable_support_sets(G):
            assert element_of_squarefree_order(G, pi) is not None


class TestScans:
    def test_s3_no_findings(self):
        findings = scan_group(symmetric(3), max_order=100)
        assert findings == []

    def test_c36_not_a_counterexample(self):
        findings = scan_group(cyclic(36), max_order=100)
        assert len(findings) == 1
        f = findings[0]
        assert (f.p, f.q) == (2, 3)
        assert f.has_divisible and f.has_exact_support_witness and not f.counterexample

    def test_dicyclic3_not_a_counterexample(self):
        findings = scan_group(dicyclic(3), max_order=100)
        assert [(f.p, f.q, f.counterexample) for f in findings] == [(2, 3, False)]

    def test_oversized_group_skipped_with_notice(self):
        outcome = scan_group(cyclic(36), max_order=10)
        assert isinstance(outcome, ScanNotice)
        assert "10" in outcome.reason

    def test_pair_scan_merges_in_corpus_order(self):
        corpus = [cyclic(36), symmetric(3), dicyclic(3), dicyclic(5)]
        findings, notices = pair_scan(corpus, max_order=100)
        assert notices == ()
        assert [f.group_label for f in findings] == ["cyclic:36", "dicyclic:3", "dicyclic:5"]

    def test_pair_scan_parallel_matches_serial(self):
        corpus = [cyclic(n) for n in (6, 12, 30, 36)] + [dicyclic(3)]
        serial = pair_scan(corpus, max_order=100, parallelism=1)
        parallel = pair_scan(corpus, max_order=100, parallelism=2)
        assert serial == parallel

    def test_scan_respects_lattice_bound(self):
        cfg = Config(lattice_bound=10)
        outcome = scan_group(cyclic(36), max_order=100, config=cfg)
        assert isinstance(outcome, ScanNotice)
