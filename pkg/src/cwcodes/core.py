"""Words, codes and the distance metrics used everywhere else.

Words are dense tuples of ints. Index sets (supports, t-subsets) are
1-based sorted tuples, matching the coordinate labels used in files.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from pathlib import Path
from typing import Iterable, Optional, Sequence, Union

CodeWord = tuple[int, ...]
IndexSet = tuple[int, ...]

CODE_MAGIC = "cwcode 1"


class FormatError(ValueError):
    """Raised when a code or B-assignment file does not parse."""


def johnson_t(d: int, w: int) -> int:
    """Return ceil((2w - d + 1) / 2)."""
    if not 1 <= d <= 2 * w:
        raise ValueError(f"need 1 <= d <= 2w, got d={d}, w={w}")
    return (2 * w - d + 2) // 2


@dataclass(frozen=True)
class CodeParams:
    q: int
    n: int
    d: int
    w: int

    def __post_init__(self):
        if self.q < 2:
            raise ValueError(f"q must be >= 2, got {self.q}")
        if not 1 <= self.w <= self.n:
            raise ValueError(f"need 1 <= w <= n, got w={self.w}, n={self.n}")
        if not 1 <= self.d <= 2 * self.w:
            raise ValueError(f"need 1 <= d <= 2w, got d={self.d}, w={self.w}")

    @property
    def t(self) -> int:
        return johnson_t(self.d, self.w)

    @property
    def even(self) -> bool:
        return self.d % 2 == 0

    def header(self) -> str:
        return f"q={self.q} n={self.n} d={self.d} w={self.w}"


def weight(x: Sequence[int]) -> int:
    return sum(1 for v in x if v != 0)


def support(x: Sequence[int]) -> IndexSet:
    """Sorted 1-based positions of the nonzero entries of ``x``."""
    return tuple(i + 1 for i, v in enumerate(x) if v != 0)


def hamming_distance(x: Sequence[int], y: Sequence[int]) -> int:
    if len(x) != len(y):
        raise ValueError(f"length mismatch: {len(x)} vs {len(y)}")
    return sum(1 for a, b in zip(x, y) if a != b)


def word_key(x: CodeWord) -> tuple[IndexSet, CodeWord]:
    """Canonical sort key: support first, then the nonzero values in order."""
    s = support(x)
    return s, tuple(x[i - 1] for i in s)


@dataclass(frozen=True)
class Code:
    """An ordered set of distinct words of common length ``params.n``.

    Entry ranges and weights are not enforced here; that is what
    :func:`verify_code` reports on.
    """

    params: CodeParams
    words: tuple[CodeWord, ...] = ()

    def __post_init__(self):
        words = tuple(tuple(int(v) for v in x) for x in self.words)
        seen = set()
        for x in words:
            if len(x) != self.params.n:
                raise ValueError(f"word {x} has length {len(x)}, expected {self.params.n}")
            if x in seen:
                raise ValueError(f"duplicate word {x}")
            seen.add(x)
        object.__setattr__(self, "words", words)

    def __len__(self) -> int:
        return len(self.words)

    def __iter__(self):
        return iter(self.words)

    def canonical(self) -> "Code":
        return Code(self.params, tuple(sorted(self.words, key=word_key)))


def min_distance(code: Union[Code, Iterable[CodeWord]]) -> Optional[int]:
    """Minimum pairwise distance, or ``None`` when fewer than two words exist."""
    words = list(code)
    if len(words) < 2:
        return None
    return min(hamming_distance(x, y) for x, y in combinations(words, 2))


@dataclass
class VerificationReport:
    constant_weight: bool = True
    distance_ok: bool = True
    entries_in_range: bool = True
    witness: Optional[str] = None
    min_distance: Optional[int] = None

    @property
    def passed(self) -> bool:
        return self.constant_weight and self.distance_ok and self.entries_in_range


def verify_code(code: Code) -> VerificationReport:
    """Check weight, range and distance conditions; record the first violation."""
    p = code.params
    rep = VerificationReport()
    for x in code.words:
        bad = [v for v in x if not 0 <= v <= p.q - 1]
        if bad and rep.entries_in_range:
            rep.entries_in_range = False
            rep.witness = rep.witness or f"entry {bad[0]} out of range in word {_fmt(x)}"
        if weight(x) != p.w and rep.constant_weight:
            rep.constant_weight = False
            rep.witness = rep.witness or f"word {_fmt(x)} has weight {weight(x)} != {p.w}"
    best = None
    for x, y in combinations(code.words, 2):
        dist = hamming_distance(x, y)
        if best is None or dist < best:
            best = dist
        if dist < p.d and rep.distance_ok:
            rep.distance_ok = False
            rep.witness = rep.witness or f"words {_fmt(x)} and {_fmt(y)} at distance {dist} < {p.d}"
    rep.min_distance = best
    return rep


def _fmt(x: CodeWord) -> str:
    return "(" + " ".join(map(str, x)) + ")"


# -- code file format ------------------------------------------------------

def dumps_code(code: Code) -> str:
    lines = [CODE_MAGIC, code.params.header()]
    lines += [" ".join(map(str, x)) for x in code.words]
    return "\n".join(lines) + "\n"


def _parse_kv(line: str, keys: Sequence[str]) -> dict[str, int]:
    parts = line.split(" ")
    if len(parts) != len(keys):
        raise FormatError(f"bad header line {line!r}")
    out = {}
    for part, key in zip(parts, keys):
        k, sep, v = part.partition("=")
        if k != key or not sep:
            raise FormatError(f"expected key {key!r} in {line!r}")
        try:
            out[key] = int(v)
        except ValueError:
            raise FormatError(f"non-integer value in {part!r}") from None
    return out


def loads_code(text: str) -> Code:
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines or lines[0] != CODE_MAGIC:
        raise FormatError("missing 'cwcode 1' magic line")
    if len(lines) < 2:
        raise FormatError("missing parameter line")
    kv = _parse_kv(lines[1], ("q", "n", "d", "w"))
    try:
        params = CodeParams(**kv)
    except ValueError as e:
        raise FormatError(str(e)) from None
    words = []
    seen = set()
    for lineno, line in enumerate(lines[2:], start=3):
        try:
            x = tuple(int(tok) for tok in line.split(" "))
        except ValueError:
            raise FormatError(f"line {lineno}: non-integer entry") from None
        if len(x) != params.n:
            raise FormatError(f"line {lineno}: expected {params.n} entries, got {len(x)}")
        if any(not 0 <= v < params.q for v in x):
            raise FormatError(f"line {lineno}: entry out of range 0..{params.q - 1}")
        if x in seen:
            raise FormatError(f"line {lineno}: duplicate word")
        seen.add(x)
        words.append(x)
    return Code(params, tuple(words))


def write_code(code: Code, path: Union[str, Path]) -> None:
    Path(path).write_bytes(dumps_code(code).encode("utf-8"))


def read_code(path: Union[str, Path]) -> Code:
    return loads_code(Path(path).read_bytes().decode("utf-8"))
