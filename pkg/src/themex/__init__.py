"""Theme enrichment analysis: exact hypergeometric over-representation
testing of literary themes against a hierarchical theme ontology."""

from themex.corpus import Corpus, CountOptions, Level, Storyset, load_corpus, load_storysets
from themex.engine import (
    EnrichmentQuery,
    EnrichmentResult,
    NegativeControlReport,
    compare_methods,
    domain_distribution,
    enrich,
    negative_control,
    serialize_results,
)
from themex.ontology import Domain, Theme, ThemeOntology, parse_ontology
from themex.stats import (
    KERNEL_BACKEND,
    hypergeom_pvalue,
    log_choose,
    sample_storyset,
    tfidf_score,
)

__version__ = "0.1.0"

__all__ = [
    "Corpus", "CountOptions", "Level", "Storyset", "load_corpus",
    "load_storysets", "EnrichmentQuery", "EnrichmentResult",
    "NegativeControlReport", "compare_methods", "domain_distribution",
    "enrich", "negative_control", "serialize_results", "Domain", "Theme",
    "ThemeOntology", "parse_ontology", "KERNEL_BACKEND", "hypergeom_pvalue",
    "log_choose", "sample_storyset", "tfidf_score", "__version__",
]
