"""Deterministic fixture datasets.

Small synthetic datasets that reconstruct the published summary shapes:
a four-domain ontology with fixed per-domain counts and heights, and a
102-story corpus whose Klingon test/background storysets reproduce the
published per-theme count tuples. Also a flat null corpus for
negative-control calibration.
"""

from __future__ import annotations

import random

from themex.ontology import ROOT_THEME_NAME

_DOMAIN_SHAPES = [
    # (domain root name, theme count, leaf count, height, name prefix)
    ("the human condition", 631, 578, 6, "hc"),
    ("society", 279, 256, 4, "soc"),
    ("the pursuit of knowledge", 235, 217, 4, "pk"),
    ("alternate reality", 390, 357, 4, "ar"),
]

_HEADER = "theme\tparent\tdomain\tdefinition"


def table1_ontology() -> str:
    """THEMES TSV text with per-domain (count, leaf count, height) of
    (631, 578, 6), (279, 256, 4), (235, 217, 4), (390, 357, 4)."""
    rows = [_HEADER, f"{ROOT_THEME_NAME}\t\troot\t"]
    for name, count, leaves, height, prefix in _DOMAIN_SHAPES:
        rows.append(f"{name}\t{ROOT_THEME_NAME}\t{name}\tdomain root of {prefix}")

        def add(theme, parent):
            rows.append(f"{theme}\t{parent}\t{name}\tsynthetic {prefix} theme")

        # One deepest chain fixes the height: height-1 internal nodes
        # below the domain root, ending in a leaf.
        parent = name
        for i in range(1, height):
            node = f"{prefix} chain {i:03d}"
            add(node, parent)
            parent = node
        add(f"{prefix} chain leaf", parent)

        # Remaining internal nodes each carry a single leaf child.
        extra_internal = count - leaves - height
        for i in range(extra_internal):
            node = f"{prefix} branch {i:03d}"
            add(node, name)
            add(f"{prefix} branch {i:03d} leaf", node)

        # Remaining leaves hang directly off the domain root.
        remaining = leaves - 1 - extra_internal
        for i in range(remaining):
            add(f"{prefix} leaf {i:03d}", name)
    return "\n".join(rows) + "\n"


# --- Klingon fixture -------------------------------------------------------

# (theme, domain, parent-or-None); parents mirror the subtype relations the
# test counts depend on.
_KLINGON_THEMES = [
    ("culturally distinguished life form", "alternate reality", None),
    ("über-belligerent alien", "alternate reality",
     "culturally distinguished life form"),
    ("miscellaneous life form", "alternate reality", None),
    ("tribble", "alternate reality", "miscellaneous life form"),
    ("mugato", "alternate reality", "miscellaneous life form"),
    ("transnational social issue", "society", None),
    ("diplomacy", "society", "transnational social issue"),
    ("diplomatic negotiating", "society", "diplomacy"),
    ("war", "society", "transnational social issue"),
    ("cross cultural understanding", "society", None),
    ("conflict of moral codes", "society", "cross cultural understanding"),
    ("conflict over a shared resource", "society", None),
    ("atrocities of war", "society", None),
    ("imperialistic society", "society", None),
    ("man vs. beast", "the human condition", None),
    ("pacifism", "the human condition", None),
    ("humility", "the human condition", None),
    ("patience", "the human condition", None),
    ("temperance", "the human condition", None),
    ("the art of war", "the pursuit of knowledge", None),
    ("military tactics", "the pursuit of knowledge", "the art of war"),
    # Broad filler themes keep the domain roots unremarkable.
    ("everyday hardship", "the human condition", None),
    ("civic routine", "society", None),
    ("commonplace know-how", "the pursuit of knowledge", None),
    ("familiar strangeness", "alternate reality", None),
]

_FILLERS = ["everyday hardship", "civic routine", "commonplace know-how",
            "familiar strangeness"]


def _sid(i: int) -> str:
    return f"s{i:03d}"


def _sids(*ranges) -> list[str]:
    """ranges are ints or (lo, hi) inclusive pairs."""
    out = []
    for r in ranges:
        if isinstance(r, tuple):
            out.extend(_sid(i) for i in range(r[0], r[1] + 1))
        else:
            out.append(_sid(r))
    return out


# Direct annotations per theme; latent expansion fills in the ancestors.
_KLINGON_ANNOTATIONS = {
    "über-belligerent alien": _sids((1, 5)),
    "culturally distinguished life form": _sids(6, (9, 22)),
    "diplomatic negotiating": _sids((1, 4), 23, 24, 25),
    "diplomacy": _sids(5, (26, 36)),
    "war": _sids((1, 5), (26, 42)),
    "transnational social issue": _sids(6, (43, 48)),
    "man vs. beast": _sids((1, 3), 49, 50),
    "conflict over a shared resource": _sids(1, 2),
    "atrocities of war": _sids(1, 2),
    "tribble": _sids(1, 2),
    "mugato": _sids(3),
    "miscellaneous life form": _sids((51, 55)),
    "pacifism": _sids((1, 3), (56, 59)),
    "military tactics": _sids((1, 3), (60, 63)),
    "the art of war": _sids(4, 5, (64, 77)),
    "imperialistic society": _sids((1, 3), (78, 82)),
    "conflict of moral codes": _sids(1, 2, 83),
    "cross cultural understanding": _sids(3, 4, (84, 94)),
    "humility": _sids((1, 3), (95, 100)),
    "patience": _sids((1, 3), 101, 102, 49, 50, 56, 57, 58),
    "temperance": _sids(1, 2, 59, 60),
}

#: Expected (theme, k, K) tuples for the Klingon test vs background run,
#: with n=8 and N=102.
KLINGON_EXPECTED = [
    ("über-belligerent alien", 5, 5),
    ("diplomatic negotiating", 4, 7),
    ("culturally distinguished life form", 6, 20),
    ("man vs. beast", 3, 5),
    ("diplomacy", 5, 19),
    ("conflict over a shared resource", 2, 2),
    ("atrocities of war", 2, 2),
    ("tribble", 2, 2),
    ("pacifism", 3, 7),
    ("military tactics", 3, 7),
    ("war", 5, 22),
    ("transnational social issue", 6, 32),
    ("the art of war", 5, 23),
    ("miscellaneous life form", 3, 8),
    ("imperialistic society", 3, 8),
    ("conflict of moral codes", 2, 3),
    ("cross cultural understanding", 4, 16),
    ("humility", 3, 9),
    ("patience", 3, 10),
    ("temperance", 2, 4),
]

KLINGON_TEST_SET = "klingon-tos-tas"
KLINGON_BACKGROUND_SET = "tos-tas"


def klingon_dataset() -> dict[str, str]:
    """TSV texts (themes, stories, annotations, storysets) for a 102-story
    corpus reproducing the published Klingon-vs-TOS/TAS count tuples."""
    themes = [_HEADER, f"{ROOT_THEME_NAME}\t\troot\t"]
    for domain, *_ in _DOMAIN_SHAPES:
        themes.append(f"{domain}\t{ROOT_THEME_NAME}\t{domain}\ttop theme of its domain")
    for name, domain, parent in _KLINGON_THEMES:
        themes.append(f"{name}\t{parent or domain}\t{domain}\tfixture theme: {name}")

    stories = ["id\ttitle\tcollections"]
    for i in range(1, 103):
        tag = "TOS" if i <= 80 else "TAS"
        stories.append(f"{_sid(i)}\tEpisode {i:03d}\t{tag}")

    annotations = ["story_id\ttheme\tlevel"]
    for theme, ids in _KLINGON_ANNOTATIONS.items():
        for sid in ids:
            level = "central" if sid <= _sid(8) else "peripheral"
            annotations.append(f"{sid}\t{theme}\t{level}")
    for filler in _FILLERS:
        for i in range(9, 94):
            annotations.append(f"{_sid(i)}\t{filler}\tperipheral")

    storysets = ["storyset\tstory_id"]
    for i in range(1, 9):
        storysets.append(f"{KLINGON_TEST_SET}\t{_sid(i)}")
    for i in range(1, 103):
        storysets.append(f"{KLINGON_BACKGROUND_SET}\t{_sid(i)}")

    return {
        "themes": "\n".join(themes) + "\n",
        "stories": "\n".join(stories) + "\n",
        "annotations": "\n".join(annotations) + "\n",
        "storysets": "\n".join(storysets) + "\n",
    }


def null_dataset(
    n_stories: int = 200,
    n_themes: int = 50,
    prob: float = 0.2,
    seed: int = 7,
) -> dict[str, str]:
    """Flat null corpus: each theme lands on each story independently with
    the given probability. Deterministic for a fixed seed."""
    rng = random.Random(seed)
    theme_names = [f"null theme {i:02d}" for i in range(n_themes)]

    themes = [_HEADER, f"{ROOT_THEME_NAME}\t\troot\t",
              f"society\t{ROOT_THEME_NAME}\tsociety\tflat domain root"]
    for name in theme_names:
        themes.append(f"{name}\tsociety\tsociety\tindependent null theme")

    stories = ["id\ttitle\tcollections"]
    annotations = ["story_id\ttheme\tlevel"]
    storysets = ["storyset\tstory_id"]
    for i in range(1, n_stories + 1):
        sid = f"n{i:03d}"
        stories.append(f"{sid}\tNull story {i:03d}\tnull")
        storysets.append(f"all\t{sid}")
        for name in theme_names:
            if rng.random() < prob:
                annotations.append(f"{sid}\t{name}\tcentral")

    return {
        "themes": "\n".join(themes) + "\n",
        "stories": "\n".join(stories) + "\n",
        "annotations": "\n".join(annotations) + "\n",
        "storysets": "\n".join(storysets) + "\n",
    }


def write_dataset(dataset: dict[str, str], directory) -> None:
    """Write a dataset dict to <dir>/{themes,stories,annotations,storysets}.tsv."""
    from pathlib import Path

    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    for key, text in dataset.items():
        (directory / f"{key}.tsv").write_text(text, encoding="utf-8")
