"""Enrichment orchestration: per-theme hypergeometric tests across the
ontology, ranking, method comparison, quartile summaries, and seeded
negative-control simulations."""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from typing import Optional

from themex.corpus import BOTH_LEVELS, Corpus, CountOptions, Storyset
from themex.errors import (
    EmptyResults,
    EmptyTestSet,
    InsufficientResults,
    TestNotSubsetOfBackground,
)
from themex.ontology import ThemeOntology
from themex.stats import hypergeom_pvalue, sample_storyset, tfidf_score

RESULTS_HEADER = ["rank", "theme", "domain", "k", "K", "n", "N", "p_value",
                  "tfidf", "significant"]


@dataclass(frozen=True)
class EnrichmentQuery:
    test: Storyset
    background: Storyset
    alpha: float = 0.05
    levels: frozenset = BOTH_LEVELS
    include_latent: bool = True
    method: str = "both"  # hypergeometric | tfidf | both
    top: Optional[int] = None
    min_K: int = 1


@dataclass(frozen=True)
class EnrichmentResult:
    theme: str
    domain: str
    k: int
    n: int
    K: int
    N: int
    p_value: float
    tfidf: float
    rank: int
    significant: bool


@dataclass(frozen=True)
class NegativeControlReport:
    trials: int
    n: int
    alpha: float
    counts: tuple[int, ...]
    mean: float
    sd: float
    sd_defined: bool
    seed: int


def _pvalue_key(r: EnrichmentResult):
    return (r.p_value, -r.k, r.theme)


def _tfidf_key(r: EnrichmentResult):
    return (-r.tfidf, r.theme)


def enrich(
    corpus: Corpus, ontology: ThemeOntology, query: EnrichmentQuery
) -> list[EnrichmentResult]:
    """One ranked result per non-root theme with K >= min_K.

    Sorted by (p ascending, k descending, name) when the method includes
    the hypergeometric test, else by (tfidf descending, name). Raw
    p-values; no multiple-comparison correction is applied.
    """
    if len(query.test) == 0:
        raise EmptyTestSet()
    missing = query.test.id_set - query.background.id_set
    if missing:
        raise TestNotSubsetOfBackground(missing)
    if not (0.0 < query.alpha < 1.0):
        raise ValueError(f"alpha must be in (0, 1), got {query.alpha}")

    opts = CountOptions(levels=query.levels, include_latent=query.include_latent)
    n = len(query.test)
    N = len(query.background)
    results: list[EnrichmentResult] = []
    for name in ontology:
        if name == ontology.root:
            continue
        featured = corpus.theme_stories(name, opts)
        K = len(featured & query.background.id_set)
        if K < query.min_K:
            continue
        k = len(featured & query.test.id_set)
        p = hypergeom_pvalue(k, n, K, N)
        score = tfidf_score(k, n, K, N)
        results.append(
            EnrichmentResult(
                theme=name,
                domain=ontology.get(name).domain.value,
                k=k, n=n, K=K, N=N,
                p_value=p,
                tfidf=score,
                rank=0,
                significant=p < query.alpha,
            )
        )

    key = _tfidf_key if query.method == "tfidf" else _pvalue_key
    results.sort(key=key)
    results = [replace(r, rank=i) for i, r in enumerate(results, start=1)]
    if query.top is not None:
        results = results[: query.top]
    return results


def negative_control(
    corpus: Corpus,
    ontology: ThemeOntology,
    background: Storyset,
    n: int,
    trials: int,
    alpha: float = 0.05,
    seed: int = 42,
    opts: CountOptions = CountOptions(),
) -> NegativeControlReport:
    """Repeatedly sample a test storyset from the background, run the
    enrichment test, and record significant-theme counts per trial.

    Deterministic for a fixed seed; draw_index runs 1..trials.
    """
    if trials < 1:
        raise ValueError(f"trials must be >= 1, got {trials}")
    counts: list[int] = []
    for draw_index in range(1, trials + 1):
        test = sample_storyset(background, n, seed, draw_index)
        results = enrich(
            corpus,
            ontology,
            EnrichmentQuery(
                test=test,
                background=background,
                alpha=alpha,
                levels=opts.levels,
                include_latent=opts.include_latent,
            ),
        )
        counts.append(sum(1 for r in results if r.significant))

    mean = sum(counts) / trials
    if trials > 1:
        var = sum((c - mean) ** 2 for c in counts) / (trials - 1)
        sd, sd_defined = math.sqrt(var), True
    else:
        sd, sd_defined = 0.0, False
    return NegativeControlReport(
        trials=trials, n=n, alpha=alpha, counts=tuple(counts),
        mean=mean, sd=sd, sd_defined=sd_defined, seed=seed,
    )


@dataclass(frozen=True)
class MethodOverlap:
    shared: int
    jaccard: float
    pairs: tuple  # of (theme, domain, p_value, tfidf)


def compare_methods(results: list[EnrichmentResult], top_m: int) -> MethodOverlap:
    """Overlap of the top_m themes ranked by p-value vs ranked by TF-IDF,
    plus the full paired score list for scatterplots."""
    if top_m < 1 or top_m > len(results):
        raise InsufficientResults(top_m, len(results))
    by_p = sorted(results, key=_pvalue_key)
    by_tfidf = sorted(results, key=_tfidf_key)
    top_p = {r.theme for r in by_p[:top_m]}
    top_t = {r.theme for r in by_tfidf[:top_m]}
    shared = len(top_p & top_t)
    jaccard = shared / len(top_p | top_t)
    pairs = tuple(
        (r.theme, r.domain, r.p_value, r.tfidf) for r in by_p
    )
    return MethodOverlap(shared=shared, jaccard=jaccard, pairs=pairs)


def domain_distribution(
    results: list[EnrichmentResult], quartiles: int = 4
) -> list[dict[str, float]]:
    """Split results into p-value quantile bins (rank-based, ties assigned
    to the lower bin) and report each domain's percentage share per bin.

    Returns one {domain label: percentage} dict per bin; each sums to 100.
    """
    if not results:
        raise EmptyResults()
    ordered = sorted(results, key=_pvalue_key)
    m = len(ordered)
    bins: list[list[EnrichmentResult]] = [[] for _ in range(quartiles)]
    provisional = [min(i * quartiles // m, quartiles - 1) for i in range(m)]
    # Pull whole tie groups down to the lowest bin any member landed in.
    assigned = list(provisional)
    i = 0
    while i < m:
        j = i
        while j + 1 < m and ordered[j + 1].p_value == ordered[i].p_value:
            j += 1
        low = min(assigned[i: j + 1])
        for idx in range(i, j + 1):
            assigned[idx] = low
        i = j + 1
    for idx, r in enumerate(ordered):
        bins[assigned[idx]].append(r)

    out: list[dict[str, float]] = []
    for members in bins:
        shares: dict[str, float] = {}
        if members:
            for r in members:
                shares[r.domain] = shares.get(r.domain, 0.0) + 1.0
            total = len(members)
            shares = {d: 100.0 * c / total for d, c in shares.items()}
        out.append(shares)
    return out


def format_pvalue(p: float) -> str:
    """4 significant digits; small values render in scientific notation."""
    return f"{p:.4g}"


def serialize_results(results: list[EnrichmentResult]) -> str:
    """RESULTS TSV with deterministic row order (the ranked order)."""
    lines = ["\t".join(RESULTS_HEADER)]
    for r in results:
        lines.append(
            "\t".join([
                str(r.rank), r.theme, r.domain,
                str(r.k), str(r.K), str(r.n), str(r.N),
                format_pvalue(r.p_value), f"{r.tfidf:.4g}",
                "true" if r.significant else "false",
            ])
        )
    return "\n".join(lines) + "\n"
