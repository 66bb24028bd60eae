"""OEIS b-file reading and writing.

One "<index> <value>" pair per line, 1-based, no header.  The writer is
bit-exact so fixtures can be byte-compared.
"""

from __future__ import annotations

from pathlib import Path
from typing import Iterable, Sequence


def format_b_file(terms: Sequence[int], start: int = 1) -> str:
    return "".join(f"{i} {t}\n" for i, t in enumerate(terms, start=start))


def write_b_file(terms: Sequence[int], path: str | Path, start: int = 1) -> None:
    Path(path).write_text(format_b_file(terms, start), encoding="ascii")


def parse_b_file(lines: Iterable[str]) -> list[int]:
    """Parse b-file lines into a term list, checking the index column."""
    terms: list[int] = []
    expected = None
    for raw in lines:
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        idx_s, val_s = line.split()
        idx, val = int(idx_s), int(val_s)
        if expected is not None and idx != expected:
            raise ValueError(f"non-consecutive index {idx}, expected {expected}")
        expected = idx + 1
        terms.append(val)
    return terms


def read_b_file(path: str | Path) -> list[int]:
    with open(path, encoding="ascii") as fh:
        return parse_b_file(fh)
