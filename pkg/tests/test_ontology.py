import pytest

from themex.errors import (
    CycleDetected,
    DuplicateTheme,
    MissingRoot,
    MultipleRoots,
    UnknownParent,
    UnknownTheme,
)
from themex.ontology import Domain, parse_ontology

HEADER = "theme\tparent\tdomain\tdefinition"


def tsv(*rows):
    return "\n".join([HEADER, *rows]) + "\n"


ROOT_ROW = "literary thematic entity\t\troot\t"


class TestParse:
    def test_minimal_forest(self, chain_ontology):
        o = chain_ontology
        assert len(o) == 3
        assert o.root == "literary thematic entity"
        assert o.is_leaf("war")
        assert o.get("war").domain is Domain.SOCIETY

    def test_two_node_cycle(self):
        text = tsv(
            ROOT_ROW,
            "A\tB\tsociety\ta",
            "B\tA\tsociety\tb",
        )
        with pytest.raises(CycleDetected) as exc:
            parse_ontology(text)
        assert set(exc.value.path) == {"A", "B"}

    def test_duplicate_name(self):
        text = tsv(ROOT_ROW, "A\tliterary thematic entity\tsociety\ta",
                   "A\tliterary thematic entity\tsociety\ta2")
        with pytest.raises(DuplicateTheme):
            parse_ontology(text)

    def test_unknown_parent(self):
        text = tsv(ROOT_ROW, "A\tnope\tsociety\ta")
        with pytest.raises(UnknownParent):
            parse_ontology(text)

    def test_multiple_roots(self):
        text = tsv(ROOT_ROW, "other root\t\troot\t")
        with pytest.raises(MultipleRoots):
            parse_ontology(text)

    def test_missing_root(self):
        text = tsv("A\tB\tsociety\ta", "B\tA\tsociety\tb")
        with pytest.raises(MissingRoot):
            parse_ontology(text)

    def test_empty_definition_warns_not_errors(self):
        text = tsv(ROOT_ROW, "A\tliterary thematic entity\tsociety\t")
        o = parse_ontology(text)
        assert any("A" in w for w in o.warnings)

    def test_comments_and_blanks_skipped(self):
        text = HEADER + "\n# comment\n\n" + ROOT_ROW + "\n"
        assert len(parse_ontology(text)) == 1


class TestTraversal:
    def test_ancestors_of_root_empty(self, chain_ontology):
        assert chain_ontology.ancestors("literary thematic entity") == []

    def test_ancestors_chain(self, chain_ontology):
        assert chain_ontology.ancestors("war") == [
            "society", "literary thematic entity"
        ]

    def test_ancestors_unknown(self, chain_ontology):
        with pytest.raises(UnknownTheme):
            chain_ontology.ancestors("nope")

    def test_published_parent_relation(self, klingon):
        ontology, _, _ = klingon
        assert "culturally distinguished life form" in ontology.ancestors(
            "über-belligerent alien"
        )

    def test_descendants_of_leaf(self, chain_ontology):
        assert chain_ontology.descendants("war") == set()

    def test_descendants_of_root(self, chain_ontology):
        assert chain_ontology.descendants("literary thematic entity") == {
            "society", "war"
        }

    def test_descendants_transitive(self, deep_ontology):
        assert deep_ontology.descendants("A") == {"B", "C"}

    def test_ancestor_descendant_duality(self, klingon):
        ontology, _, _ = klingon
        for name in ontology:
            assert name not in ontology.ancestors(name)
            assert name not in ontology.descendants(name)
            for anc in ontology.ancestors(name):
                assert name in ontology.descendants(anc)


class TestSubtree:
    def test_leaf_single_node(self, chain_ontology):
        node = chain_ontology.subtree("war", 5)
        assert node["name"] == "war" and node["children"] == []

    def test_root_depth_one_shows_four_domains(self, table1):
        node = table1.subtree(table1.root, 1)
        names = [c["name"] for c in node["children"]]
        assert names == sorted([
            "the human condition", "society",
            "the pursuit of knowledge", "alternate reality",
        ])
        assert all(c["children"] == [] for c in node["children"])

    def test_depth_zero_alone(self, deep_ontology):
        node = deep_ontology.subtree("A", 0)
        assert node["children"] == []

    def test_render_subtree_lines(self, chain_ontology):
        text = chain_ontology.render_subtree("society")
        assert text.splitlines() == ["society", "    war"]


class TestStats:
    def test_single_theme_domain(self, chain_ontology):
        # "society" domain has society (internal) + war (leaf)
        stats = chain_ontology.stats().as_tuples()
        assert stats["society"] == (2, 1, 1)

    def test_lone_domain_root(self):
        o = parse_ontology(tsv(ROOT_ROW, "society\tliterary thematic entity\tsociety\ts"))
        assert o.stats().as_tuples()["society"] == (1, 1, 0)

    def test_chain_height(self, deep_ontology):
        # domain root -> A -> B -> C is 3 edges
        assert deep_ontology.stats().as_tuples()["the human condition"] == (4, 1, 3)

    def test_published_shape_fixture(self, table1):
        assert table1.stats().as_tuples() == {
            "the human condition": (631, 578, 6),
            "society": (279, 256, 4),
            "the pursuit of knowledge": (235, 217, 4),
            "alternate reality": (390, 357, 4),
        }

    def test_theme_total_identity(self, table1):
        total = 1
        for child in table1.children(table1.root):
            total += 1 + len(table1.descendants(child))
        assert total == len(table1)


class TestRoundTrip:
    def test_parse_render_round_trips(self, klingon):
        ontology, _, _ = klingon
        again = parse_ontology(ontology.render())
        assert again == ontology

    def test_table1_round_trips(self, table1):
        assert parse_ontology(table1.render()) == table1
