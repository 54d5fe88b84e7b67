"""Stories, annotations, storysets, and observed/latent theme profiles."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Optional

from themex.errors import (
    DuplicateStory,
    MalformedRow,
    UnknownStory,
    UnknownTheme,
)
from themex.ontology import ThemeOntology
from themex.tsv import iter_rows

STORIES_HEADER = ["id", "title", "collections"]
ANNOTATIONS_HEADER = ["story_id", "theme", "level"]
STORYSETS_HEADER = ["storyset", "story_id"]


class Level(Enum):
    CENTRAL = "central"
    PERIPHERAL = "peripheral"

    @classmethod
    def from_label(cls, label: str) -> "Level":
        for member in cls:
            if member.value == label:
                return member
        raise ValueError(f"unknown level: {label!r}")


BOTH_LEVELS = frozenset({Level.CENTRAL, Level.PERIPHERAL})


def strongest(a: Level, b: Level) -> Level:
    return Level.CENTRAL if Level.CENTRAL in (a, b) else Level.PERIPHERAL


@dataclass(frozen=True)
class Story:
    id: str
    title: str
    collections: frozenset[str]


@dataclass(frozen=True)
class Storyset:
    name: str
    story_ids: tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "_id_set", frozenset(self.story_ids))

    @property
    def id_set(self) -> frozenset[str]:
        return self._id_set

    def __len__(self) -> int:
        return len(self.story_ids)


@dataclass(frozen=True)
class ThemeProfile:
    story_id: str
    observed: frozenset  # of (theme name, Level)
    latent: frozenset    # of (theme name, Level)


@dataclass(frozen=True)
class CountOptions:
    levels: frozenset = BOTH_LEVELS
    include_latent: bool = True


def expand_latent(
    observed: Iterable[tuple[str, Level]], ontology: ThemeOntology
) -> frozenset:
    """Latent themes implied by a story's observed themes.

    Each proper ancestor of an observed theme (the root excluded) becomes
    latent at the strongest level among the observed themes contributing
    it; themes that are themselves observed stay observed.
    """
    observed = list(observed)
    observed_names = {t for t, _ in observed}
    latent: dict[str, Level] = {}
    for theme, level in observed:
        for ancestor in ontology.ancestors(theme):
            if ancestor == ontology.root or ancestor in observed_names:
                continue
            prior = latent.get(ancestor)
            latent[ancestor] = level if prior is None else strongest(prior, level)
    return frozenset(latent.items())


class Corpus:
    """Immutable story collection with precomputed theme profiles and
    per-theme story indexes; counting operations are pure."""

    def __init__(
        self,
        stories: dict[str, Story],
        annotations: dict[str, dict[str, Level]],
        ontology: ThemeOntology,
    ):
        self.ontology = ontology
        self._stories = dict(stories)
        self.profiles: dict[str, ThemeProfile] = {}
        # (theme, level, kind) -> set of story ids, kind in {"observed", "latent"}
        self._index: dict[tuple[str, Level, str], set[str]] = {}
        for story_id in self._stories:
            obs = annotations.get(story_id, {})
            observed = frozenset(obs.items())
            latent = expand_latent(observed, ontology)
            self.profiles[story_id] = ThemeProfile(story_id, observed, latent)
            for kind, pairs in (("observed", observed), ("latent", latent)):
                for theme, level in pairs:
                    self._index.setdefault((theme, level, kind), set()).add(story_id)

    # --- stories ---

    def __contains__(self, story_id: str) -> bool:
        return story_id in self._stories

    def __len__(self) -> int:
        return len(self._stories)

    @property
    def story_ids(self) -> list[str]:
        return sorted(self._stories)

    def story(self, story_id: str) -> Story:
        try:
            return self._stories[story_id]
        except KeyError:
            raise UnknownStory(story_id) from None

    def profile(self, story_id: str) -> ThemeProfile:
        self.story(story_id)
        return self.profiles[story_id]

    # --- counting ---

    def theme_stories(self, theme: str, opts: CountOptions = CountOptions()) -> set[str]:
        """Distinct story ids featuring the theme under the given options."""
        self.ontology.get(theme)
        kinds = ("observed", "latent") if opts.include_latent else ("observed",)
        out: set[str] = set()
        for level in opts.levels:
            for kind in kinds:
                out |= self._index.get((theme, level, kind), set())
        return out

    def theme_count(
        self, storyset: Storyset, theme: str, opts: CountOptions = CountOptions()
    ) -> int:
        """Number of distinct storyset stories featuring the theme; a story
        counts at most once."""
        return len(self.theme_stories(theme, opts) & storyset.id_set)

    # --- storyset helpers ---

    def make_storyset(self, name: str, ids: Iterable[str]) -> Storyset:
        """Storyset in input order with duplicates dropped."""
        seen: list[str] = []
        seen_set: set[str] = set()
        for story_id in ids:
            if story_id not in self._stories:
                raise UnknownStory(story_id)
            if story_id not in seen_set:
                seen.append(story_id)
                seen_set.add(story_id)
        return Storyset(name, tuple(seen))

    def from_collection_tag(self, tag: str) -> Storyset:
        ids = sorted(
            s.id for s in self._stories.values() if tag in s.collections
        )
        return Storyset(tag, tuple(ids))

    def union(self, a: Storyset, b: Storyset, name: Optional[str] = None) -> Storyset:
        return Storyset(name or f"{a.name}|{b.name}", tuple(sorted(a.id_set | b.id_set)))

    def intersect(self, a: Storyset, b: Storyset, name: Optional[str] = None) -> Storyset:
        return Storyset(name or f"{a.name}&{b.name}", tuple(sorted(a.id_set & b.id_set)))

    def difference(self, a: Storyset, b: Storyset, name: Optional[str] = None) -> Storyset:
        return Storyset(name or f"{a.name}-{b.name}", tuple(sorted(a.id_set - b.id_set)))


def load_corpus(
    stories_text: str, annotations_text: str, ontology: ThemeOntology
) -> Corpus:
    """Load STORIES and ANNOTATIONS TSV text into a Corpus.

    Duplicate (story, theme) annotations at both levels collapse to
    central. Raises DuplicateStory, UnknownStory, UnknownTheme, or
    MalformedRow.
    """
    stories: dict[str, Story] = {}
    for line_no, (story_id, title, collections) in iter_rows(
        stories_text, STORIES_HEADER
    ):
        if not story_id:
            raise MalformedRow(line_no, "empty story id")
        if story_id in stories:
            raise DuplicateStory(story_id)
        tags = frozenset(t.strip() for t in collections.split(",") if t.strip())
        stories[story_id] = Story(story_id, title, tags)

    annotations: dict[str, dict[str, Level]] = {}
    for line_no, (story_id, theme, level_label) in iter_rows(
        annotations_text, ANNOTATIONS_HEADER
    ):
        if story_id not in stories:
            raise UnknownStory(story_id)
        if theme not in ontology:
            raise UnknownTheme(theme)
        try:
            level = Level.from_label(level_label)
        except ValueError as exc:
            raise MalformedRow(line_no, str(exc)) from None
        per_story = annotations.setdefault(story_id, {})
        prior = per_story.get(theme)
        per_story[theme] = level if prior is None else strongest(prior, level)

    return Corpus(stories, annotations, ontology)


def load_storysets(text: str, corpus: Corpus) -> dict[str, Storyset]:
    """Load STORYSETS TSV membership rows into named storysets.

    Membership order follows file order; duplicate memberships are dropped.
    """
    members: dict[str, list[str]] = {}
    for line_no, (name, story_id) in iter_rows(text, STORYSETS_HEADER):
        if not name:
            raise MalformedRow(line_no, "empty storyset name")
        if story_id not in corpus:
            raise UnknownStory(story_id)
        members.setdefault(name, [])
        if story_id not in members[name]:
            members[name].append(story_id)
    return {name: Storyset(name, tuple(ids)) for name, ids in members.items()}
