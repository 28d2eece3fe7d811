"""Codes as matchings in the conflict hypergraph, found by randomized greedy.

Each candidate word x is an edge whose vertices are

* V1 keys: the (t+1)-subsets of supp(x), and
* V2 keys: the t-subsets of the (index, value) pairs of x.

A set of words with pairwise disjoint key sets is a code of minimum
distance >= d (for even d when the words satisfy the B constraints, for odd
d with no constraints at all). The hypergraph is never built; keys are
interned to ints and occupancy is a bytearray per pass.
"""
from __future__ import annotations

import hashlib
import random
import time
from collections import defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Optional, Sequence

from .bounds import johnson_bound
from .constraints import BAssignment, CandidateFamily, enumerate_X, sample_B
from .core import Code, CodeParams, CodeWord, IndexSet, dumps_code, support, word_key
from .oracle import enumerate_all_words

V1Key = IndexSet
V2Key = tuple[tuple[int, int], ...]


def derive_seed(master: int, stream: int) -> int:
    """Child seed for restart ``stream``: first 8 bytes of sha256("master/stream")."""
    digest = hashlib.sha256(f"{master}/{stream}".encode()).digest()
    return int.from_bytes(digest[:8], "big")


def v1_keys(x: Sequence[int], t: int) -> list[V1Key]:
    return list(combinations(support(x), t + 1))


def v2_keys(x: Sequence[int], t: int) -> list[V2Key]:
    pairs = [(i, x[i - 1]) for i in support(x)]
    return list(combinations(pairs, t))


def edge_keys(x: Sequence[int], t: int) -> list:
    return [("1",) + k for k in v1_keys(x, t)] + [("2",) + k for k in v2_keys(x, t)]


class ConflictIndex:
    """Occupied V1/V2 keys of a partial matching."""

    def __init__(self, t: int):
        self.t = t
        self.used_v1: set[V1Key] = set()
        self.used_v2: set[V2Key] = set()

    def admissible(self, x: Sequence[int]) -> bool:
        return not any(k in self.used_v1 for k in v1_keys(x, self.t)) and not any(
            k in self.used_v2 for k in v2_keys(x, self.t)
        )

    def insert(self, x: Sequence[int]) -> None:
        self.used_v1.update(v1_keys(x, self.t))
        self.used_v2.update(v2_keys(x, self.t))


def intern_keys(words: Sequence[CodeWord], t: int) -> tuple[list[tuple[int, ...]], int]:
    ids: dict = {}
    out = []
    for x in words:
        out.append(tuple(ids.setdefault(k, len(ids)) for k in edge_keys(x, t)))
    return out, len(ids)


def _greedy(keys: list[tuple[int, ...]], nkeys: int, seed: int) -> list[int]:
    order = list(range(len(keys)))
    random.Random(seed).shuffle(order)
    used = bytearray(nkeys)
    chosen = []
    for idx in order:
        ks = keys[idx]
        if any(used[k] for k in ks):
            continue
        for k in ks:
            used[k] = 1
        chosen.append(idx)
    return chosen


def _improve(keys: list[tuple[int, ...]], nkeys: int, chosen: list[int]) -> list[int]:
    """(1,2)-swap local search: drop one word, add two, until no swap exists."""
    owner = [-1] * nkeys
    in_code = set(chosen)
    for c in chosen:
        for k in keys[c]:
            owner[k] = c

    def add(y):
        in_code.add(y)
        for k in keys[y]:
            owner[k] = y

    while True:
        blockers = defaultdict(list)
        for y in range(len(keys)):
            if y in in_code:
                continue
            owners = {owner[k] for k in keys[y]} - {-1}
            if not owners:
                add(y)
            elif len(owners) == 1:
                blockers[owners.pop()].append(y)
        swapped = False
        for c in sorted(blockers):
            ys = [y for y in blockers[c] if all(owner[k] in (-1, c) for k in keys[y])]
            pair = None
            for a, b in combinations(ys, 2):
                if set(keys[a]).isdisjoint(keys[b]):
                    pair = (a, b)
                    break
            if pair is None:
                continue
            in_code.discard(c)
            for k in keys[c]:
                owner[k] = -1
            for y in pair:
                add(y)
            for y in ys:
                if y not in in_code and all(owner[k] == -1 for k in keys[y]):
                    add(y)
            swapped = True
        if not swapped:
            return sorted(in_code)


def greedy_matching(X: CandidateFamily, seed: int) -> Code:
    """One randomized greedy maximal matching over X, as a canonical code."""
    p = X.params
    keys, nkeys = intern_keys(X.words, p.t)
    chosen = _greedy(keys, nkeys, seed)
    return Code(p, tuple(sorted((X.words[i] for i in chosen), key=word_key)))


@dataclass
class BuildReport:
    code: Code
    x_size: int
    restarts_run: int
    best_restart: int
    ratio_to_main_term: Fraction
    elapsed: float
    b: Optional[BAssignment] = None
    seed: Optional[int] = None


# worker state for process-parallel restarts
_W: dict = {}


def _init_worker(words, keys, nkeys, improve):
    _W.update(words=words, keys=keys, nkeys=nkeys, improve=improve)


def _run_restart(master: int, r: int) -> tuple[int, str, int, list[int]]:
    keys, nkeys = _W["keys"], _W["nkeys"]
    chosen = _greedy(keys, nkeys, derive_seed(master, r))
    if _W["improve"]:
        chosen = _improve(keys, nkeys, chosen)
    words = sorted((_W["words"][i] for i in chosen), key=word_key)
    text = "\n".join(" ".join(map(str, x)) for x in words)
    return len(words), text, r, chosen


def _better(a, b) -> bool:
    """Larger code wins; equal sizes go to the smaller serialization."""
    return a[0] > b[0] or (a[0] == b[0] and a[1] < b[1])


def _search(X: CandidateFamily, seed: int, restarts: int, improve: bool, threads: int):
    keys, nkeys = intern_keys(X.words, X.params.t)
    best = None
    if threads <= 1 or restarts <= 1:
        _init_worker(X.words, keys, nkeys, improve)
        results = (_run_restart(seed, r) for r in range(restarts))
        for res in results:
            if best is None or _better(res, best):
                best = res
        _W.clear()
    else:
        with ProcessPoolExecutor(
            max_workers=threads, initializer=_init_worker, initargs=(X.words, keys, nkeys, improve)
        ) as pool:
            for res in pool.map(_run_restart, [seed] * restarts, range(restarts), chunksize=max(1, restarts // (4 * threads))):
                if best is None or _better(res, best):
                    best = res
    return best


def _report(p, X, seed, restarts, improve, threads, t0, b) -> BuildReport:
    if restarts < 1:
        raise ValueError("need at least one restart")
    size, _, r, chosen = _search(X, seed, restarts, improve, threads)
    code = Code(p, tuple(sorted((X.words[i] for i in chosen), key=word_key)))
    ratio = Fraction(size) / johnson_bound(p).fraction
    return BuildReport(code, len(X), restarts, r, ratio, time.perf_counter() - t0, b, seed)


def construct_code(
    p: CodeParams,
    seed: int,
    restarts: int = 32,
    improve: bool = False,
    threads: int = 1,
    b: Optional[BAssignment] = None,
) -> BuildReport:
    """Even-d construction: sample B from ``seed``, enumerate X, best of ``restarts`` greedy passes.

    Restart r shuffles with ``derive_seed(seed, r)``.
    """
    if not p.even:
        raise ValueError(f"constrained construction needs even d, got d={p.d}")
    t0 = time.perf_counter()
    if b is None:
        b = sample_B(p, seed)
    X = enumerate_X(p, b)
    return _report(p, X, seed, restarts, improve, threads, t0, b)


def construct_code_odd(
    p: CodeParams, seed: int, restarts: int = 32, improve: bool = False, threads: int = 1
) -> BuildReport:
    """Odd-d construction: X is every weight-w word, same key scheme."""
    if p.even:
        raise ValueError(f"odd construction needs odd d, got d={p.d}")
    t0 = time.perf_counter()
    words = tuple(sorted(enumerate_all_words(p, cap=10**7), key=word_key))
    X = CandidateFamily(p, None, words)
    return _report(p, X, seed, restarts, improve, threads, t0, None)
