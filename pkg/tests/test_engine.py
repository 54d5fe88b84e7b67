import pytest

from themex.corpus import Storyset, load_corpus, load_storysets
from themex.engine import (
    EnrichmentQuery,
    compare_methods,
    domain_distribution,
    enrich,
    negative_control,
    serialize_results,
)
from themex.errors import (
    EmptyResults,
    EmptyTestSet,
    InsufficientResults,
    TestNotSubsetOfBackground,
)
from themex.fixtures import KLINGON_EXPECTED
from themex.ontology import parse_ontology
from themex.stats import hypergeom_pvalue, tfidf_score

TOY_THEMES = """theme\tparent\tdomain\tdefinition
literary thematic entity\t\troot\t
society\tliterary thematic entity\tsociety\ttop
X\tsociety\tsociety\tx
Y\tsociety\tsociety\ty
"""

TOY_STORIES = "id\ttitle\tcollections\n" + "".join(
    f"t{i}\tToy {i}\tall\n" for i in range(1, 7)
)

# X on exactly the three test stories; Y on a couple of others
TOY_ANNOTATIONS = """story_id\ttheme\tlevel
t1\tX\tcentral
t2\tX\tcentral
t3\tX\tcentral
t4\tY\tperipheral
t5\tY\tperipheral
"""


@pytest.fixture(scope="module")
def toy():
    ontology = parse_ontology(TOY_THEMES)
    corpus = load_corpus(TOY_STORIES, TOY_ANNOTATIONS, ontology)
    return ontology, corpus


def klingon_query(storysets, **overrides):
    return EnrichmentQuery(
        test=storysets["klingon-tos-tas"],
        background=storysets["tos-tas"],
        **overrides,
    )


class TestEnrich:
    def test_published_fixture_rank_one(self, klingon):
        ontology, corpus, storysets = klingon
        results = enrich(corpus, ontology, klingon_query(storysets))
        assert results[0].theme == "über-belligerent alien"
        assert results[0].p_value < 0.0001
        assert results[0].n == 8 and results[0].N == 102

    def test_published_fixture_top20_tuples(self, klingon):
        ontology, corpus, storysets = klingon
        results = enrich(corpus, ontology, klingon_query(storysets))
        got = {(r.theme, r.k, r.K) for r in results[:20]}
        assert got == {(t, k, K) for t, k, K in KLINGON_EXPECTED}

    def test_test_equals_background_all_certain(self, klingon):
        ontology, corpus, storysets = klingon
        background = storysets["tos-tas"]
        results = enrich(
            corpus, ontology,
            EnrichmentQuery(test=background, background=background),
        )
        assert results
        for r in results:
            assert r.k == r.K and r.n == r.N
            assert r.p_value == 1.0
            assert not r.significant

    def test_single_subset_probability(self, toy):
        ontology, corpus = toy
        test = Storyset("test", ("t1", "t2", "t3"))
        background = Storyset("bg", tuple(f"t{i}" for i in range(1, 7)))
        results = enrich(
            corpus, ontology, EnrichmentQuery(test=test, background=background)
        )
        x = next(r for r in results if r.theme == "X")
        assert x.p_value == pytest.approx(1 / 20, abs=1e-12)

    def test_not_subset_raises(self, toy):
        ontology, corpus = toy
        with pytest.raises(TestNotSubsetOfBackground):
            enrich(
                corpus, ontology,
                EnrichmentQuery(
                    test=Storyset("t", ("t1", "t6")),
                    background=Storyset("b", ("t1", "t2")),
                ),
            )

    def test_empty_test_raises(self, toy):
        ontology, corpus = toy
        with pytest.raises(EmptyTestSet):
            enrich(
                corpus, ontology,
                EnrichmentQuery(
                    test=Storyset("t", ()),
                    background=Storyset("b", ("t1",)),
                ),
            )

    def test_raw_pvalues_equal_kernel(self, klingon):
        ontology, corpus, storysets = klingon
        for r in enrich(corpus, ontology, klingon_query(storysets)):
            assert r.p_value == hypergeom_pvalue(r.k, r.n, r.K, r.N)
            assert r.tfidf == tfidf_score(r.k, r.n, r.K, r.N)

    def test_deterministic_serialization(self, klingon):
        ontology, corpus, storysets = klingon
        a = serialize_results(enrich(corpus, ontology, klingon_query(storysets)))
        b = serialize_results(enrich(corpus, ontology, klingon_query(storysets)))
        assert a.encode() == b.encode()

    def test_ancestor_counts_dominate_in_report(self, klingon):
        ontology, corpus, storysets = klingon
        results = {r.theme: r for r in enrich(corpus, ontology, klingon_query(storysets))}
        for theme, r in results.items():
            for anc in ontology.ancestors(theme):
                if anc in results:
                    assert results[anc].K >= r.K
                    assert results[anc].k >= r.k

    def test_tfidf_method_sort(self, klingon):
        ontology, corpus, storysets = klingon
        results = enrich(
            corpus, ontology, klingon_query(storysets, method="tfidf")
        )
        scores = [r.tfidf for r in results]
        assert scores == sorted(scores, reverse=True)

    def test_top_truncation_and_ranks(self, klingon):
        ontology, corpus, storysets = klingon
        results = enrich(corpus, ontology, klingon_query(storysets, top=5))
        assert [r.rank for r in results] == [1, 2, 3, 4, 5]

    def test_min_K_filters(self, klingon):
        ontology, corpus, storysets = klingon
        results = enrich(corpus, ontology, klingon_query(storysets, min_K=10))
        assert all(r.K >= 10 for r in results)


class TestCompareMethods:
    def test_published_overlap(self, klingon):
        ontology, corpus, storysets = klingon
        results = enrich(corpus, ontology, klingon_query(storysets))
        overlap = compare_methods(results, 20)
        assert overlap.shared == 20
        assert overlap.jaccard == 1.0

    def test_insufficient(self, klingon):
        ontology, corpus, storysets = klingon
        results = enrich(corpus, ontology, klingon_query(storysets))
        with pytest.raises(InsufficientResults):
            compare_methods(results, len(results) + 1)
        with pytest.raises(InsufficientResults):
            compare_methods(results, 0)

    def test_single_result(self, toy):
        ontology, corpus = toy
        test = Storyset("test", ("t1", "t2", "t3"))
        background = Storyset("bg", tuple(f"t{i}" for i in range(1, 7)))
        results = enrich(
            corpus, ontology, EnrichmentQuery(test=test, background=background)
        )
        x_only = [r for r in results if r.theme == "X"]
        overlap = compare_methods(x_only, 1)
        assert overlap.shared == 1


class TestDomainDistribution:
    def test_single_domain(self, toy):
        ontology, corpus = toy
        test = Storyset("test", ("t1", "t2", "t3"))
        background = Storyset("bg", tuple(f"t{i}" for i in range(1, 7)))
        results = enrich(
            corpus, ontology, EnrichmentQuery(test=test, background=background)
        )
        for shares in domain_distribution(results):
            if shares:
                assert shares == {"society": 100.0}

    def test_alternating_domains_even_split(self, klingon):
        ontology, corpus, storysets = klingon
        results = enrich(corpus, ontology, klingon_query(storysets))
        # Build 8 synthetic results alternating two domains with distinct p
        from dataclasses import replace

        base = results[:8]
        synth = [
            replace(r, theme=f"s{i}", p_value=i / 100.0,
                    domain="society" if i % 2 else "the human condition")
            for i, r in enumerate(base)
        ]
        for shares in domain_distribution(synth):
            assert shares["society"] == pytest.approx(50.0)
            assert shares["the human condition"] == pytest.approx(50.0)

    def test_quartiles_sum_to_hundred(self, klingon):
        ontology, corpus, storysets = klingon
        results = enrich(corpus, ontology, klingon_query(storysets))
        for shares in domain_distribution(results):
            if shares:
                assert sum(shares.values()) == pytest.approx(100.0, abs=0.01)

    def test_empty_raises(self):
        with pytest.raises(EmptyResults):
            domain_distribution([])


class TestNegativeControl:
    def test_full_background_draw_is_never_significant(self, klingon):
        ontology, corpus, storysets = klingon
        background = storysets["tos-tas"]
        report = negative_control(
            corpus, ontology, background, n=len(background), trials=1
        )
        assert report.counts == (0,)
        assert report.mean == 0.0
        assert report.sd == 0.0 and not report.sd_defined

    def test_same_seed_identical(self, klingon):
        ontology, corpus, storysets = klingon
        background = storysets["tos-tas"]
        a = negative_control(corpus, ontology, background, n=8, trials=5, seed=3)
        b = negative_control(corpus, ontology, background, n=8, trials=5, seed=3)
        assert a == b

    def test_counts_bounded_by_candidate_themes(self, klingon):
        ontology, corpus, storysets = klingon
        background = storysets["tos-tas"]
        report = negative_control(corpus, ontology, background, n=8, trials=10)
        candidates = len(ontology) - 1  # root excluded; all themes have K >= 1?
        assert all(0 <= c <= candidates for c in report.counts)

    def test_mean_sd_consistent(self, klingon):
        import statistics

        ontology, corpus, storysets = klingon
        background = storysets["tos-tas"]
        report = negative_control(corpus, ontology, background, n=8, trials=10)
        assert report.mean == pytest.approx(statistics.mean(report.counts))
        assert report.sd == pytest.approx(statistics.stdev(report.counts))
