"""Minimal TSV reading shared by the ontology and corpus loaders.

All project files are UTF-8 tab-separated with a fixed header line,
``#`` comment lines, and no escaping (tabs are forbidden inside fields).
"""

from __future__ import annotations

from typing import Iterator

from themex.errors import MalformedRow


def iter_rows(text: str, header: list[str]) -> Iterator[tuple[int, list[str]]]:
    """Yield (line_no, fields) for each data row, after checking the header.

    Blank lines and lines starting with ``#`` are skipped. Every data row
    must have exactly ``len(header)`` fields; fields are stripped of
    surrounding whitespace.
    """
    lines = text.splitlines()
    header_seen = False
    for line_no, line in enumerate(lines, start=1):
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        fields = line.split("\t")
        if not header_seen:
            if [f.strip() for f in fields] != header:
                raise MalformedRow(
                    line_no,
                    f"expected header {chr(9).join(header)!r}, got {line!r}",
                )
            header_seen = True
            continue
        if len(fields) != len(header):
            raise MalformedRow(
                line_no,
                f"expected {len(header)} tab-separated fields, got {len(fields)}",
            )
        yield line_no, [f.strip() for f in fields]
    if not header_seen:
        raise MalformedRow(0, "file is empty or contains no header line")
