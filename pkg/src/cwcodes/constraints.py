"""Modular constraints on t-subsets of a word's support.

Every t-subset T of [n] carries a value B_T in {1, ..., q-1}. A word x of
weight w is admissible when, for every t-subset T of its support,

    sum(x_i for i in T) == B_T  (mod q-1).

Values in {1, ..., q-1} are identified with residues mod q-1 through
``v % (q-1)``, so q-1 stands for residue 0. For q = 2 the modulus is 1 and
every congruence holds.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations, product
from math import comb, gcd
from pathlib import Path
from typing import Iterator, Mapping, Optional, Sequence, Union

from .core import CodeParams, CodeWord, FormatError, IndexSet, _parse_kv, support, weight, word_key

B_MAGIC = "bassign 1"

# words_on_support is the production path; filtering all (q-1)^w entry
# vectors is kept as a cross-check and for callers that ask for it.
DEFAULT_WORD_CAP = 2_000_000


def residue(v: int, q: int) -> int:
    return v % (q - 1)


def rep(r: int, q: int) -> int:
    """Map a residue mod q-1 to its representative in {1, ..., q-1}."""
    return (r - 1) % (q - 1) + 1


@dataclass(frozen=True)
class BAssignment:
    params: CodeParams
    values: Mapping[IndexSet, int]
    seed: Optional[int] = None

    def __post_init__(self):
        p = self.params
        expected = comb(p.n, p.t)
        if len(self.values) != expected:
            raise ValueError(f"B assignment has {len(self.values)} entries, expected {expected}")
        for T, v in self.values.items():
            if len(T) != p.t or list(T) != sorted(set(T)) or not (1 <= T[0] and T[-1] <= p.n):
                raise ValueError(f"bad index set {T}")
            if not 1 <= v <= p.q - 1:
                raise ValueError(f"B value {v} for {T} outside 1..{p.q - 1}")

    def __getitem__(self, T: IndexSet) -> int:
        return self.values[T]

    def residue(self, T: IndexSet) -> int:
        return residue(self.values[T], self.params.q)

    def with_value(self, T: IndexSet, v: int) -> "BAssignment":
        values = dict(self.values)
        values[T] = v
        return BAssignment(self.params, values, None)


def t_subsets(p: CodeParams) -> list[IndexSet]:
    return list(combinations(range(1, p.n + 1), p.t))


def sample_B(p: CodeParams, seed: int) -> BAssignment:
    """Draw B_T uniformly from {1..q-1} for each T, in lexicographic T order.

    Uses ``random.Random(seed).randrange(1, q)`` once per T, so the same
    seed always yields the same assignment on a given Python version.
    """
    rng = random.Random(seed)
    values = {T: rng.randrange(1, p.q) for T in t_subsets(p)}
    return BAssignment(p, values, seed)


def check_constraints(x: Sequence[int], b: BAssignment) -> bool:
    p = b.params
    if weight(x) != p.w:
        raise ValueError(f"word has weight {weight(x)}, expected {p.w}")
    m = p.q - 1
    S = support(x)
    return all((sum(x[i - 1] for i in T) - b[T]) % m == 0 for T in combinations(S, p.t))


def _embed(n: int, S: IndexSet, values: Sequence[int]) -> CodeWord:
    x = [0] * n
    for i, v in zip(S, values):
        x[i - 1] = v
    return tuple(x)


def solve_support(S: IndexSet, residues: Mapping[IndexSet, int], q: int, t: int) -> list[tuple[int, ...]]:
    """All value vectors on ``S`` meeting ``residues`` (keyed by t-subsets of S).

    For |S| > t, two constraints whose index sets differ in one element pin
    the difference of those two entries, so every entry is the first one
    plus a fixed offset. Substituting back leaves ``t * a == c (mod q-1)``
    in the first entry a: no solution or gcd(t, q-1) of them. For |S| = t
    the one constraint fixes the last entry from the others.
    Returned vectors are sorted lexicographically.
    """
    m = q - 1
    w = len(S)
    if m == 1:
        return [(1,) * w]
    if w == t:
        T = tuple(S)
        out = []
        for head in product(range(1, q), repeat=t - 1):
            out.append(head + (rep(residues[T] - sum(head), q),))
        return sorted(out)

    s0 = S[0]
    offset = {s0: 0}
    for i in S[1:]:
        U = tuple(j for j in S if j not in (s0, i))[: t - 1]
        Ti = tuple(sorted(U + (i,)))
        T0 = tuple(sorted(U + (s0,)))
        offset[i] = (residues[Ti] - residues[T0]) % m

    c = None
    for T in combinations(S, t):
        cT = (residues[T] - sum(offset[i] for i in T)) % m
        if c is None:
            c = cT
        elif cT != c:
            return []
    out = []
    for a in range(m):
        if (t * a - c) % m == 0:
            out.append(tuple(rep(a + offset[i], q) for i in S))
    return sorted(out)


def words_on_support(S: Sequence[int], b: BAssignment) -> list[CodeWord]:
    """Words with support exactly ``S`` that satisfy every constraint."""
    p = b.params
    S = tuple(sorted(S))
    if len(S) != p.w:
        raise ValueError(f"support size {len(S)} != w={p.w}")
    res = {T: b.residue(T) for T in combinations(S, p.t)}
    return [_embed(p.n, S, vals) for vals in solve_support(S, res, p.q, p.t)]


def words_on_support_brute(S: Sequence[int], b: BAssignment) -> list[CodeWord]:
    """Filter all (q-1)^w value vectors; reference path for tests."""
    p = b.params
    S = tuple(sorted(S))
    out = []
    for vals in product(range(1, p.q), repeat=len(S)):
        x = _embed(p.n, S, vals)
        if check_constraints(x, b):
            out.append(x)
    return out


@dataclass(frozen=True)
class CandidateFamily:
    params: CodeParams
    b: Optional[BAssignment]
    words: tuple[CodeWord, ...]

    def __len__(self) -> int:
        return len(self.words)

    def __iter__(self) -> Iterator[CodeWord]:
        return iter(self.words)


def enumerate_X(p: CodeParams, b: BAssignment, cap: int = DEFAULT_WORD_CAP) -> CandidateFamily:
    """All admissible weight-w words, ordered by (support, values)."""
    if comb(p.n, p.w) > cap:
        raise ValueError(f"C({p.n},{p.w}) supports exceeds cap {cap}")
    words = []
    for S in combinations(range(1, p.n + 1), p.w):
        words.extend(words_on_support(S, b))
    return CandidateFamily(p, b, tuple(words))


def enumerate_X_filter(p: CodeParams, b: BAssignment) -> CandidateFamily:
    """X obtained by filtering every weight-w word; reference path for tests."""
    from .oracle import enumerate_all_words

    words = [x for x in enumerate_all_words(p) if check_constraints(x, b)]
    words.sort(key=word_key)
    return CandidateFamily(p, b, tuple(words))


def realizable_patterns(T: Sequence[int], Tprime: Sequence[int], b: BAssignment) -> list[tuple[tuple[int, ...], int]]:
    """Each value vector on ``Tprime`` paired with its forced completion.

    The completion is the value at the single index of T outside Tprime
    that makes the constraint on T hold.
    """
    p = b.params
    T = tuple(sorted(T))
    Tprime = tuple(sorted(Tprime))
    if len(T) != p.t or len(Tprime) != p.t - 1 or not set(Tprime) < set(T):
        raise ValueError("Tprime must be a (t-1)-subset of the t-set T")
    target = b.residue(T)
    out = []
    for pattern in product(range(1, p.q), repeat=p.t - 1):
        out.append((pattern, rep(target - sum(pattern), p.q)))
    return out


# -- B-assignment file format ----------------------------------------------

def dumps_b(b: BAssignment) -> str:
    p = b.params
    lines = [B_MAGIC, f"q={p.q} n={p.n} t={p.t}"]
    for T in t_subsets(p):
        lines.append(" ".join(map(str, T)) + f" {b[T]}")
    return "\n".join(lines) + "\n"


def loads_b(text: str, d: int, w: int) -> BAssignment:
    """Parse a B-assignment file. The file records t but not (d, w), so the
    caller supplies them; t must agree."""
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines or lines[0] != B_MAGIC:
        raise FormatError("missing 'bassign 1' magic line")
    if len(lines) < 2:
        raise FormatError("missing parameter line")
    kv = _parse_kv(lines[1], ("q", "n", "t"))
    try:
        p = CodeParams(kv["q"], kv["n"], d, w)
    except ValueError as e:
        raise FormatError(str(e)) from None
    if p.t != kv["t"]:
        raise FormatError(f"file has t={kv['t']} but d={d}, w={w} give t={p.t}")
    expected = t_subsets(p)
    rows = lines[2:]
    if len(rows) != len(expected):
        raise FormatError(f"expected {len(expected)} rows, got {len(rows)}")
    values = {}
    for lineno, (line, T) in enumerate(zip(rows, expected), start=3):
        try:
            toks = [int(tok) for tok in line.split(" ")]
        except ValueError:
            raise FormatError(f"line {lineno}: non-integer token") from None
        if tuple(toks[:-1]) != T:
            raise FormatError(f"line {lineno}: expected index set {T}")
        if not 1 <= toks[-1] <= p.q - 1:
            raise FormatError(f"line {lineno}: value out of range 1..{p.q - 1}")
        values[T] = toks[-1]
    return BAssignment(p, values, None)


def write_b(b: BAssignment, path: Union[str, Path]) -> None:
    Path(path).write_bytes(dumps_b(b).encode("utf-8"))


def read_b(path: Union[str, Path], d: int, w: int) -> BAssignment:
    return loads_b(Path(path).read_bytes().decode("utf-8"), d, w)
