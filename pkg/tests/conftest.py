import pytest

from themex.corpus import load_corpus, load_storysets
from themex.fixtures import klingon_dataset, null_dataset, table1_ontology
from themex.ontology import parse_ontology

CHAIN_TSV = """theme\tparent\tdomain\tdefinition
literary thematic entity\t\troot\t
society\tliterary thematic entity\tsociety\ttop theme
war\tsociety\tsociety\tarmed conflict
"""

DEEP_CHAIN_TSV = """theme\tparent\tdomain\tdefinition
literary thematic entity\t\troot\t
the human condition\tliterary thematic entity\tthe human condition\ttop theme
A\tthe human condition\tthe human condition\ta
B\tA\tthe human condition\tb
C\tB\tthe human condition\tc
"""


@pytest.fixture(scope="session")
def chain_ontology():
    return parse_ontology(CHAIN_TSV)


@pytest.fixture(scope="session")
def deep_ontology():
    return parse_ontology(DEEP_CHAIN_TSV)


@pytest.fixture(scope="session")
def table1():
    return parse_ontology(table1_ontology())


@pytest.fixture(scope="session")
def klingon():
    data = klingon_dataset()
    ontology = parse_ontology(data["themes"])
    corpus = load_corpus(data["stories"], data["annotations"], ontology)
    storysets = load_storysets(data["storysets"], corpus)
    return ontology, corpus, storysets


@pytest.fixture(scope="session")
def null_corpus():
    data = null_dataset()
    ontology = parse_ontology(data["themes"])
    corpus = load_corpus(data["stories"], data["annotations"], ontology)
    storysets = load_storysets(data["storysets"], corpus)
    return ontology, corpus, storysets


@pytest.fixture()
def klingon_dir(tmp_path):
    from themex.fixtures import write_dataset

    write_dataset(klingon_dataset(), tmp_path)
    return tmp_path
