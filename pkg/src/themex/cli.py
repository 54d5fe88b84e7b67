"""Batch command-line front end: validate, enrich, negctl, compare, serve.

Data rides stdout; logs ride stderr. Exit codes: 0 success, 1 domain
error, 2 I/O or usage error.
"""

from __future__ import annotations

import logging
import os
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

import click

from themex.corpus import (
    BOTH_LEVELS,
    Corpus,
    CountOptions,
    Level,
    Storyset,
    load_corpus,
    load_storysets,
)
from themex.engine import (
    EnrichmentQuery,
    compare_methods,
    enrich,
    format_pvalue,
    negative_control,
    serialize_results,
)
from themex.errors import ThemexError, UnknownStoryset
from themex.ontology import ThemeOntology, parse_ontology

log = logging.getLogger("themex")

EXIT_OK = 0
EXIT_DOMAIN_ERROR = 1
EXIT_IO_ERROR = 2


@dataclass
class CliConfig:
    themes_path: Path
    stories_path: Path
    annotations_path: Path
    storysets_path: Path
    output_path: Optional[Path]
    seed: int
    log_level: str


def _default_path(explicit: Optional[str], filename: str) -> Path:
    if explicit:
        return Path(explicit)
    return Path(os.environ.get("THEMEX_DATA_DIR", ".")) / filename


def _read(path: Path) -> str:
    try:
        return path.read_text(encoding="utf-8")
    except OSError as exc:
        click.echo(f"error: cannot read {path}: {exc}", err=True)
        sys.exit(EXIT_IO_ERROR)


def _load_all(cfg: CliConfig) -> tuple[ThemeOntology, Corpus, dict[str, Storyset]]:
    try:
        ontology = parse_ontology(_read(cfg.themes_path))
        corpus = load_corpus(
            _read(cfg.stories_path), _read(cfg.annotations_path), ontology
        )
        storysets = load_storysets(_read(cfg.storysets_path), corpus)
    except ThemexError as exc:
        click.echo(f"{exc.code}: {exc}", err=True)
        sys.exit(EXIT_DOMAIN_ERROR)
    for warning in ontology.warnings:
        log.warning("%s", warning)
    return ontology, corpus, storysets


def _resolve_storyset(
    name: str, corpus: Corpus, storysets: dict[str, Storyset]
) -> Storyset:
    if name in storysets:
        return storysets[name]
    by_tag = corpus.from_collection_tag(name)
    if len(by_tag):
        return by_tag
    raise UnknownStoryset(name)


def _emit(cfg: CliConfig, text: str) -> None:
    if cfg.output_path:
        cfg.output_path.write_text(text, encoding="utf-8")
    else:
        click.echo(text, nl=False)


def _parse_levels(levels: str) -> frozenset:
    if levels == "both":
        return BOTH_LEVELS
    try:
        return frozenset({Level.from_label(part) for part in levels.split(",")})
    except ValueError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_IO_ERROR)


@click.group()
@click.option("--themes", help="THEMES TSV path (default: $THEMEX_DATA_DIR/themes.tsv)")
@click.option("--stories", help="STORIES TSV path (default: $THEMEX_DATA_DIR/stories.tsv)")
@click.option("--annotations",
              help="ANNOTATIONS TSV path (default: $THEMEX_DATA_DIR/annotations.tsv)")
@click.option("--storysets",
              help="STORYSETS TSV path (default: $THEMEX_DATA_DIR/storysets.tsv)")
@click.option("--output", help="Write data output to this file instead of stdout")
@click.option("--seed", type=int, default=42, show_default=True,
              help="Seed for randomized operations")
@click.option("--log-level", default="warning", show_default=True,
              type=click.Choice(["debug", "info", "warning", "error"]))
@click.pass_context
def main(ctx, themes, stories, annotations, storysets, output, seed, log_level):
    """Theme enrichment analysis toolkit."""
    logging.basicConfig(
        stream=sys.stderr, level=getattr(logging, log_level.upper())
    )
    ctx.obj = CliConfig(
        themes_path=_default_path(themes, "themes.tsv"),
        stories_path=_default_path(stories, "stories.tsv"),
        annotations_path=_default_path(annotations, "annotations.tsv"),
        storysets_path=_default_path(storysets, "storysets.tsv"),
        output_path=Path(output) if output else None,
        seed=seed,
        log_level=log_level,
    )


@main.command()
@click.pass_obj
def validate(cfg: CliConfig):
    """Validate the theme ontology file; print per-domain summary counts."""
    text = _read(cfg.themes_path)
    try:
        ontology = parse_ontology(text)
    except ThemexError as exc:
        click.echo(f"{exc.code}: {exc}", err=True)
        sys.exit(EXIT_DOMAIN_ERROR)
    for warning in ontology.warnings:
        click.echo(f"warning: {warning}", err=True)
    stats = ontology.stats()
    click.echo(f"ok: {len(ontology)} themes, root {ontology.root!r}")
    for label, (count, leaves, height) in stats.as_tuples().items():
        click.echo(f"{label}\tthemes={count}\tleaves={leaves}\theight={height}")
    sys.exit(EXIT_OK)


@main.command("enrich")
@click.option("--test", "test_name", required=True, help="Test storyset name")
@click.option("--background", "background_name", required=True,
              help="Background storyset name")
@click.option("--alpha", type=float, default=0.05, show_default=True,
              help="Significance level")
@click.option("--method", default="both", show_default=True,
              type=click.Choice(["hypergeometric", "tfidf", "both"]))
@click.option("--top", type=int, default=None, help="Keep only the top T rows")
@click.option("--levels", default="both", show_default=True,
              help="Annotation levels: central, peripheral, or both")
@click.option("--no-latent", is_flag=True, default=False,
              help="Count observed themes only (skip ancestor closure)")
@click.option("--min-k", "min_K", type=int, default=1, show_default=True,
              help="Minimum background count K for a theme to be reported")
@click.pass_obj
def cmd_enrich(cfg, test_name, background_name, alpha, method, top, levels,
               no_latent, min_K):
    """Run the enrichment test and emit a RESULTS TSV."""
    ontology, corpus, storysets = _load_all(cfg)
    try:
        query = EnrichmentQuery(
            test=_resolve_storyset(test_name, corpus, storysets),
            background=_resolve_storyset(background_name, corpus, storysets),
            alpha=alpha,
            levels=_parse_levels(levels),
            include_latent=not no_latent,
            method=method,
            top=top,
            min_K=min_K,
        )
        results = enrich(corpus, ontology, query)
    except ThemexError as exc:
        click.echo(f"{exc.code}: {exc}", err=True)
        sys.exit(EXIT_DOMAIN_ERROR)
    _emit(cfg, serialize_results(results))
    sys.exit(EXIT_OK)


@main.command("negctl")
@click.option("--background", "background_name", required=True,
              help="Background storyset name")
@click.option("--n", "sample_size", type=int, required=True,
              help="Size of each sampled test storyset")
@click.option("--trials", type=int, default=1000, show_default=True,
              help="Number of sampled test storysets")
@click.option("--alpha", type=float, default=0.05, show_default=True,
              help="Significance level")
@click.option("--seed", type=int, default=None,
              help="Sampling seed (overrides the global --seed)")
@click.pass_obj
def cmd_negctl(cfg, background_name, sample_size, trials, alpha, seed):
    """Negative-control simulation: significant-theme counts on random draws."""
    ontology, corpus, storysets = _load_all(cfg)
    try:
        background = _resolve_storyset(background_name, corpus, storysets)
        report = negative_control(
            corpus, ontology, background,
            n=sample_size, trials=trials, alpha=alpha,
            seed=cfg.seed if seed is None else seed,
        )
    except (ThemexError, ValueError) as exc:
        code = exc.code if isinstance(exc, ThemexError) else "InvalidParams"
        click.echo(f"{code}: {exc}", err=True)
        sys.exit(EXIT_DOMAIN_ERROR)
    lines = [
        f"# trials={report.trials} n={report.n} alpha={report.alpha} "
        f"seed={report.seed}",
        f"# mean={report.mean:.4f} sd={report.sd:.4f} "
        f"sd_defined={'true' if report.sd_defined else 'false'}",
        "significant_count\tfrequency",
    ]
    freq: dict[int, int] = {}
    for c in report.counts:
        freq[c] = freq.get(c, 0) + 1
    for value in sorted(freq):
        lines.append(f"{value}\t{freq[value]}")
    _emit(cfg, "\n".join(lines) + "\n")
    sys.exit(EXIT_OK)


@main.command("compare")
@click.option("--test", "test_name", required=True, help="Test storyset name")
@click.option("--background", "background_name", required=True,
              help="Background storyset name")
@click.option("--top-m", type=int, default=20, show_default=True,
              help="Overlap window size")
@click.option("--alpha", type=float, default=0.05, show_default=True,
              help="Significance level")
@click.pass_obj
def cmd_compare(cfg, test_name, background_name, top_m, alpha):
    """Compare hypergeometric and TF-IDF rankings; emit paired scores."""
    ontology, corpus, storysets = _load_all(cfg)
    try:
        query = EnrichmentQuery(
            test=_resolve_storyset(test_name, corpus, storysets),
            background=_resolve_storyset(background_name, corpus, storysets),
            alpha=alpha,
        )
        results = enrich(corpus, ontology, query)
        overlap = compare_methods(results, top_m)
    except ThemexError as exc:
        click.echo(f"{exc.code}: {exc}", err=True)
        sys.exit(EXIT_DOMAIN_ERROR)
    lines = [
        f"shared={overlap.shared}",
        f"jaccard={overlap.jaccard:.4f}",
        "theme\tdomain\tp_value\ttfidf",
    ]
    for theme, domain, p, score in overlap.pairs:
        lines.append(f"{theme}\t{domain}\t{format_pvalue(p)}\t{score:.4g}")
    _emit(cfg, "\n".join(lines) + "\n")
    sys.exit(EXIT_OK)


@main.command("serve")
@click.option("--port", type=int, default=None,
              help="Listen port (default: $THEMEX_PORT or 8080)")
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--persist", is_flag=True, default=False,
              help="Persist runtime-created storysets back to the storysets file")
@click.option("--cors-origin", multiple=True,
              help="Allowed CORS origin (repeatable; default: *)")
@click.pass_obj
def cmd_serve(cfg, port, host, persist, cors_origin):
    """Serve the JSON API until terminated."""
    import uvicorn

    from themex.service import create_app

    if port is None:
        port = int(os.environ.get("THEMEX_PORT", "8080"))
    ontology, corpus, storysets = _load_all(cfg)
    app = create_app(
        ontology, corpus, storysets,
        seed=cfg.seed,
        persist_path=cfg.storysets_path if persist else None,
        cors_origins=list(cors_origin) or ["*"],
    )
    try:
        uvicorn.run(app, host=host, port=port, log_level=cfg.log_level)
    except SystemExit as exc:  # uvicorn exits 1 on bind failure
        sys.exit(exc.code or EXIT_DOMAIN_ERROR)
    except OSError as exc:
        click.echo(f"error: cannot bind {host}:{port}: {exc}", err=True)
        sys.exit(EXIT_DOMAIN_ERROR)
    sys.exit(EXIT_OK)


if __name__ == "__main__":
    main()
