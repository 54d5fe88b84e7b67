"""Exception classes shared across the package."""


class ThemexError(Exception):
    """Base class for all domain errors."""

    @property
    def code(self) -> str:
        return type(self).__name__


# --- ontology ---

class DuplicateTheme(ThemexError):
    def __init__(self, name):
        self.name = name
        super().__init__(f"duplicate theme name: {name!r}")


class UnknownParent(ThemexError):
    def __init__(self, name, parent):
        self.name = name
        self.parent = parent
        super().__init__(f"theme {name!r} references unknown parent {parent!r}")


class CycleDetected(ThemexError):
    def __init__(self, path):
        self.path = list(path)
        super().__init__("parent links form a cycle: " + " -> ".join(self.path))


class MultipleRoots(ThemexError):
    def __init__(self, names):
        self.names = sorted(names)
        super().__init__(f"more than one parentless theme: {self.names}")


class MissingRoot(ThemexError):
    def __init__(self):
        super().__init__("no parentless root theme found")


class DomainMismatch(ThemexError):
    def __init__(self, name, declared, expected):
        self.name = name
        super().__init__(
            f"theme {name!r} declares domain {declared!r} but its "
            f"top-level ancestor implies {expected!r}"
        )


class UnknownTheme(ThemexError):
    def __init__(self, name):
        self.name = name
        super().__init__(f"unknown theme: {name!r}")


# --- corpus ---

class DuplicateStory(ThemexError):
    def __init__(self, story_id):
        self.story_id = story_id
        super().__init__(f"duplicate story id: {story_id!r}")


class UnknownStory(ThemexError):
    def __init__(self, story_id):
        self.story_id = story_id
        super().__init__(f"unknown story id: {story_id!r}")


class UnknownStoryset(ThemexError):
    def __init__(self, name):
        self.name = name
        super().__init__(f"unknown storyset: {name!r}")


class MalformedRow(ThemexError):
    def __init__(self, line_no, detail):
        self.line_no = line_no
        super().__init__(f"malformed row at line {line_no}: {detail}")


# --- stats ---

class InvalidParams(ThemexError):
    pass


class UndefinedForAbsentTheme(ThemexError):
    def __init__(self):
        super().__init__("TF-IDF undefined for a theme absent from the background (K=0)")


class SampleTooLarge(ThemexError):
    def __init__(self, n, size):
        super().__init__(f"cannot sample {n} stories from a background of {size}")


# --- engine ---

class TestNotSubsetOfBackground(ThemexError):
    __test__ = False  # keep pytest from collecting this as a test class

    def __init__(self, missing):
        self.missing = sorted(missing)
        super().__init__(
            f"test storyset is not a subset of the background; "
            f"missing from background: {self.missing}"
        )


class EmptyTestSet(ThemexError):
    def __init__(self):
        super().__init__("test storyset is empty")


class InsufficientResults(ThemexError):
    def __init__(self, requested, available):
        super().__init__(
            f"cannot compare top {requested} themes with only {available} results"
        )


class EmptyResults(ThemexError):
    def __init__(self):
        super().__init__("no enrichment results to aggregate")
