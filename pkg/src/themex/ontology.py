"""Theme ontology: a validated forest of themes under a single root.

The ontology is the controlled vocabulary against which all enrichment is
computed. Non-root themes live in one of four domains; each child bears a
subtype relationship with its parent.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Iterator, Optional

from themex.errors import (
    CycleDetected,
    DomainMismatch,
    DuplicateTheme,
    MissingRoot,
    MultipleRoots,
    UnknownParent,
    UnknownTheme,
)
from themex.tsv import iter_rows

ROOT_THEME_NAME = "literary thematic entity"

THEMES_HEADER = ["theme", "parent", "domain", "definition"]


class Domain(Enum):
    HUMAN_CONDITION = "the human condition"
    SOCIETY = "society"
    PURSUIT_OF_KNOWLEDGE = "the pursuit of knowledge"
    ALTERNATE_REALITY = "alternate reality"
    ROOT = "root"

    @classmethod
    def from_label(cls, label: str) -> "Domain":
        for member in cls:
            if member.value == label:
                return member
        raise ValueError(f"unknown domain label: {label!r}")


#: The four non-root domains, in a fixed presentation order.
CONTENT_DOMAINS = (
    Domain.HUMAN_CONDITION,
    Domain.SOCIETY,
    Domain.PURSUIT_OF_KNOWLEDGE,
    Domain.ALTERNATE_REALITY,
)


@dataclass(frozen=True)
class Theme:
    name: str
    definition: str
    parent: Optional[str]
    domain: Domain


@dataclass(frozen=True)
class DomainStats:
    theme_count: int
    leaf_theme_count: int
    height: int


@dataclass(frozen=True)
class OntologyStats:
    per_domain: dict  # Domain -> DomainStats

    def as_tuples(self) -> dict:
        """Domain label -> (theme count, leaf count, height)."""
        return {
            d.value: (s.theme_count, s.leaf_theme_count, s.height)
            for d, s in self.per_domain.items()
        }


class ThemeOntology:
    """Immutable after construction; safe to share across concurrent readers."""

    def __init__(self, themes: dict[str, Theme], warnings: list[str] | None = None):
        self._themes = dict(themes)
        self.warnings = list(warnings or [])
        self._children: dict[str, list[str]] = {name: [] for name in self._themes}
        root = None
        for theme in self._themes.values():
            if theme.parent is None:
                root = theme.name
            else:
                self._children[theme.parent].append(theme.name)
        for kids in self._children.values():
            kids.sort()
        assert root is not None
        self.root = root

    # --- lookup ---

    def __contains__(self, name: str) -> bool:
        return name in self._themes

    def __len__(self) -> int:
        return len(self._themes)

    def __iter__(self) -> Iterator[str]:
        return iter(sorted(self._themes))

    def get(self, name: str) -> Theme:
        try:
            return self._themes[name]
        except KeyError:
            raise UnknownTheme(name) from None

    def children(self, name: str) -> list[str]:
        self.get(name)
        return list(self._children[name])

    def is_leaf(self, name: str) -> bool:
        self.get(name)
        return not self._children[name]

    # --- traversal ---

    def ancestors(self, name: str) -> list[str]:
        """Proper ancestors from the parent up to and including the root."""
        theme = self.get(name)
        chain = []
        while theme.parent is not None:
            chain.append(theme.parent)
            theme = self._themes[theme.parent]
        return chain

    def descendants(self, name: str) -> set[str]:
        """All proper descendants; empty for leaves."""
        self.get(name)
        found: set[str] = set()
        stack = list(self._children[name])
        while stack:
            current = stack.pop()
            found.add(current)
            stack.extend(self._children[current])
        return found

    def subtree(self, name: str, max_depth: Optional[int] = None) -> dict:
        """Nested {name, domain, children} structure truncated at max_depth.

        Depth 0 is the starting theme alone.
        """
        theme = self.get(name)
        node = {"name": name, "domain": theme.domain.value, "children": []}
        if max_depth is None or max_depth > 0:
            next_depth = None if max_depth is None else max_depth - 1
            node["children"] = [
                self.subtree(child, next_depth) for child in self._children[name]
            ]
        return node

    def render_subtree(self, name: str, max_depth: Optional[int] = None) -> str:
        """Indented text rendering of subtree()."""
        lines: list[str] = []

        def walk(node: dict, depth: int) -> None:
            lines.append("    " * depth + node["name"])
            for child in node["children"]:
                walk(child, depth + 1)

        walk(self.subtree(name, max_depth), 0)
        return "\n".join(lines)

    # --- statistics ---

    def stats(self) -> OntologyStats:
        """Per-domain theme counts, leaf counts, and tree heights.

        Height is the number of edges on the longest path from the domain
        root down to a leaf within that domain; a lone domain root has
        height 0.
        """
        per_domain: dict[Domain, DomainStats] = {}
        for domain in CONTENT_DOMAINS:
            members = [t for t in self._themes.values() if t.domain is domain]
            if not members:
                continue
            count = len(members)
            leaves = sum(1 for t in members if not self._children[t.name])
            height = 0
            domain_roots = [t.name for t in members if t.parent == self.root]
            for top in domain_roots:
                height = max(height, self._height_below(top))
            per_domain[domain] = DomainStats(count, leaves, height)
        return OntologyStats(per_domain)

    def _height_below(self, name: str) -> int:
        kids = self._children[name]
        if not kids:
            return 0
        return 1 + max(self._height_below(k) for k in kids)

    # --- serialization ---

    def render(self) -> str:
        """THEMES TSV text; parse(render(o)) round-trips."""
        lines = ["\t".join(THEMES_HEADER)]
        order = [self.root] + sorted(n for n in self._themes if n != self.root)
        for name in order:
            t = self._themes[name]
            lines.append(
                "\t".join([t.name, t.parent or "", t.domain.value, t.definition])
            )
        return "\n".join(lines) + "\n"

    def __eq__(self, other) -> bool:
        return isinstance(other, ThemeOntology) and self._themes == other._themes


def parse_ontology(source: str) -> ThemeOntology:
    """Parse and validate THEMES TSV text into a ThemeOntology.

    Raises DuplicateTheme, UnknownParent, CycleDetected, MultipleRoots,
    MissingRoot, or DomainMismatch on invalid input. Rows with empty
    definitions (other than the root) are accepted with a warning.
    """
    raw: dict[str, tuple[str, str, str]] = {}
    for line_no, (name, parent, domain, definition) in iter_rows(
        source, THEMES_HEADER
    ):
        if not name:
            raise UnknownTheme(f"<empty name at line {line_no}>")
        if name in raw:
            raise DuplicateTheme(name)
        raw[name] = (parent, domain, definition)

    roots = [name for name, (parent, _, _) in raw.items() if not parent]
    if not roots:
        raise MissingRoot()
    if len(roots) > 1:
        raise MultipleRoots(roots)
    root = roots[0]

    for name, (parent, _, _) in raw.items():
        if parent and parent not in raw:
            raise UnknownParent(name, parent)

    # Reachability check; any node not reachable from the root sits on a
    # cycle because every non-root node has an in-ontology parent.
    reachable = {root}
    children: dict[str, list[str]] = {name: [] for name in raw}
    for name, (parent, _, _) in raw.items():
        if parent:
            children[parent].append(name)
    stack = [root]
    while stack:
        current = stack.pop()
        for child in children[current]:
            if child not in reachable:
                reachable.add(child)
                stack.append(child)
    unreachable = set(raw) - reachable
    if unreachable:
        start = sorted(unreachable)[0]
        path = [start]
        seen = {start}
        current = raw[start][0]
        while current not in seen:
            path.append(current)
            seen.add(current)
            current = raw[current][0]
        path = path[path.index(current):] if current in path else path
        raise CycleDetected(path)

    warnings: list[str] = []
    themes: dict[str, Theme] = {}

    root_domain = Domain.from_label(raw[root][1])
    if root_domain is not Domain.ROOT:
        raise DomainMismatch(root, raw[root][1], Domain.ROOT.value)

    # Iterative walk to avoid recursion limits on deep fixtures.
    work: list[tuple[str, Optional[Domain]]] = [(root, None)]
    while work:
        name, expected = work.pop()
        parent, domain_label, definition = raw[name]
        domain = Domain.from_label(domain_label)
        if name == root:
            pass  # root domain checked above
        elif expected is None:
            if domain is Domain.ROOT:
                raise DomainMismatch(name, domain_label, "one of the four domains")
        elif domain is not expected:
            raise DomainMismatch(name, domain_label, expected.value)
        if not definition and name != root:
            warnings.append(f"theme {name!r} has an empty definition")
        themes[name] = Theme(name, definition, parent or None, domain)
        child_expected = domain if name != root else None
        for child in children[name]:
            work.append((child, child_expected))

    return ThemeOntology(themes, warnings)
