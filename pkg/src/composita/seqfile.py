"""OEIS-style b-files: ``index value`` lines, ``#`` comments.

Reading accepts rational values (``p/q``) so that triangles with fractional
entries can be stored the same way; writing a true b-file refuses them.
"""

from __future__ import annotations

import os
import tempfile
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources
from pathlib import Path
from typing import Optional, Sequence, Union

__all__ = [
    "BFileError",
    "SequenceFile",
    "CompareReport",
    "parse_bfile",
    "read_bfile",
    "format_bfile",
    "write_bfile",
    "atomic_write",
    "compare_sequence",
    "cmd_compare",
    "fixture_path",
    "FIXTURES",
]

PathLike = Union[str, os.PathLike]

FIXTURES = ("A000108", "A000984", "A001003", "A105306", "A176479")


class BFileError(ValueError):
    pass


@dataclass(frozen=True)
class SequenceFile:
    offset: int
    values: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(Fraction(v) for v in self.values))

    @property
    def entries(self) -> list[tuple[int, Fraction]]:
        return [(self.offset + i, v) for i, v in enumerate(self.values)]

    def __len__(self) -> int:
        return len(self.values)


def _parse_value(tok: str, lineno: int) -> Fraction:
    try:
        return Fraction(tok)
    except (ValueError, ZeroDivisionError):
        raise BFileError(f"malformed value {tok!r} at line {lineno}") from None


def parse_bfile(text: str) -> SequenceFile:
    offset: Optional[int] = None
    values: list[Fraction] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise BFileError(f"malformed line {lineno}: expected 'index value'")
        try:
            index = int(parts[0])
        except ValueError:
            raise BFileError(f"malformed index {parts[0]!r} at line {lineno}") from None
        value = _parse_value(parts[1], lineno)
        if offset is None:
            offset = index
        elif index != offset + len(values):
            raise BFileError(f"non-contiguous index at line {lineno}")
        values.append(value)
    return SequenceFile(offset if offset is not None else 0, tuple(values))


def read_bfile(path: PathLike) -> SequenceFile:
    return parse_bfile(Path(path).read_text(encoding="ascii"))


def format_bfile(seq: SequenceFile) -> str:
    lines = []
    for index, value in seq.entries:
        if value.denominator != 1:
            raise BFileError(
                f"b-files hold integers only; value {value} at index {index} "
                "is rational, write CSV instead (--format csv)"
            )
        lines.append(f"{index} {value.numerator}")
    return "".join(line + "\n" for line in lines)


def atomic_write(path: PathLike, text: str) -> None:
    """Write via a temporary file in the same directory, then rename over ``path``."""
    path = Path(path)
    fd, tmp = tempfile.mkstemp(dir=path.parent or ".", prefix=f".{path.name}.")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def write_bfile(seq: SequenceFile, path: PathLike) -> None:
    atomic_write(path, format_bfile(seq))


@dataclass(frozen=True)
class CompareReport:
    matched: bool
    compared: int
    mismatch_index: Optional[int] = None
    expected: Optional[Fraction] = None
    computed: Optional[Fraction] = None

    def __str__(self) -> str:
        if self.matched:
            return f"match: {self.compared} terms agree"
        return (
            f"mismatch at index {self.mismatch_index}: "
            f"computed {self.computed}, expected {self.expected}"
        )


def compare_sequence(
    computed: Sequence, seq: SequenceFile, count: Optional[int] = None
) -> CompareReport:
    """Compare position by position over ``min(count, available)`` terms."""
    n = min(len(computed), len(seq))
    if count is not None:
        n = min(n, count)
    for i in range(n):
        got = Fraction(computed[i])
        want = seq.values[i]
        if got != want:
            return CompareReport(False, i, seq.offset + i, want, got)
    return CompareReport(True, n)


def fixture_path(name: str) -> Path:
    """Path of a shipped fixture such as ``A000984``."""
    if name not in FIXTURES:
        raise BFileError(f"no shipped fixture {name!r}; have {', '.join(FIXTURES)}")
    return Path(str(resources.files("composita") / "data" / f"b{name[1:]}.txt"))


def cmd_compare(computed: Sequence, path: PathLike, count: Optional[int] = None) -> CompareReport:
    return compare_sequence(computed, read_bfile(path), count)
