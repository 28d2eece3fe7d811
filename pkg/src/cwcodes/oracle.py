"""Exact A_q(n, d, w) for tiny instances via maximum clique search.

Vertices are all weight-w words; two words are adjacent when their distance
is at least d. A maximum clique is a maximum code. The search is a
branch-and-bound with greedy colouring bounds (Tomita-style), with vertex
sets held as Python int bitsets.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from math import comb
import sys
from typing import Optional

import numpy as np

from .core import Code, CodeParams, CodeWord

DEFAULT_WORD_CAP = 5000
DEFAULT_NODE_LIMIT = 10**8


@dataclass
class OracleResult:
    value: int
    witness: Code
    nodes_explored: int
    exhausted: bool


def count_words(p: CodeParams) -> int:
    return comb(p.n, p.w) * (p.q - 1) ** p.w


def enumerate_all_words(p: CodeParams, cap: int = 10**6) -> list[CodeWord]:
    """Every weight-w word, ordered by support then values."""
    if count_words(p) > cap:
        raise ValueError(f"{count_words(p)} weight-{p.w} words exceeds cap {cap}")
    out = []
    for S in combinations(range(p.n), p.w):
        for vals in product(range(1, p.q), repeat=p.w):
            x = [0] * p.n
            for i, v in zip(S, vals):
                x[i] = v
            out.append(tuple(x))
    return out


def _adjacency(words: list[CodeWord], d: int, block: int = 512) -> list[int]:
    arr = np.asarray(words, dtype=np.int16)
    N = len(words)
    rows = []
    for start in range(0, N, block):
        chunk = arr[start:start + block]
        dist = (chunk[:, None, :] != arr[None, :, :]).sum(axis=2)
        adj = dist >= d
        # bit j of row i <-> vertex j; packbits is big-endian, so reverse
        packed = np.packbits(adj[:, ::-1], axis=1)
        pad = (-N) % 8
        for r in range(adj.shape[0]):
            rows.append(int.from_bytes(packed[r].tobytes(), "big") >> pad)
    return rows


class _Search:
    def __init__(self, adj: list[int], node_limit: int):
        self.adj = adj
        self.node_limit = node_limit
        self.nodes = 0
        self.best: list[int] = []
        self.aborted = False

    def colour_sort(self, P: int) -> tuple[list[int], list[int]]:
        adj = self.adj
        order, bounds = [], []
        k = 0
        U = P
        while U:
            k += 1
            Q = U
            while Q:
                low = Q & -Q
                v = low.bit_length() - 1
                Q &= ~adj[v]
                Q ^= low
                U ^= low
                order.append(v)
                bounds.append(k)
        return order, bounds

    def expand(self, clique: list[int], P: int):
        self.nodes += 1
        if self.nodes > self.node_limit:
            self.aborted = True
            return
        order, bounds = self.colour_sort(P)
        adj = self.adj
        for idx in range(len(order) - 1, -1, -1):
            if len(clique) + bounds[idx] <= len(self.best):
                return
            v = order[idx]
            clique.append(v)
            newP = P & adj[v]
            if newP:
                self.expand(clique, newP)
                if self.aborted:
                    clique.pop()
                    return
            elif len(clique) > len(self.best):
                self.best = clique.copy()
            clique.pop()
            P &= ~(1 << v)


def _canon_column(col: tuple[int, ...]) -> tuple[int, ...]:
    relabel = {0: 0}
    return tuple(relabel.setdefault(v, len(relabel)) for v in col)


class _OrbitalSearch(_Search):
    """Branch-and-bound that also branches over symmetry orbits.

    The symmetry group (coordinate permutations, and permutations of the
    nonzero symbols within each coordinate) preserves weight and distance.
    Two candidates lie in the same orbit of the stabilizer of the current
    clique iff their multisets of canonically relabelled columns (clique
    words stacked with the candidate) agree. Branching on one
    representative per orbit, and dropping earlier orbits from later
    branches, loses no maximum clique. Once every orbit is a singleton the
    plain search takes over, since stabilizers only shrink with depth.
    """

    def __init__(self, adj, node_limit, words):
        super().__init__(adj, node_limit)
        self.words = words

    def orbits(self, clique: list[int], P: int) -> list[int]:
        cols = list(zip(*(self.words[v] for v in clique))) if clique else [()] * len(self.words[0])
        groups: dict = {}
        Q = P
        while Q:
            low = Q & -Q
            v = low.bit_length() - 1
            u = self.words[v]
            key = tuple(sorted(_canon_column(c + (x,)) for c, x in zip(cols, u)))
            groups[key] = groups.get(key, 0) | low
            Q ^= low
        return list(groups.values())

    def expand_orbital(self, clique: list[int], P: int):
        self.nodes += 1
        if self.nodes > self.node_limit:
            self.aborted = True
            return
        orbs = self.orbits(clique, P)
        if len(orbs) == P.bit_count():
            self.nodes -= 1
            self.expand(clique, P)
            return
        # big orbits first: excluding them shrinks every later branch most
        orbs.sort(key=lambda o: (-o.bit_count(), (o & -o).bit_length()))
        adj = self.adj
        for orb in orbs:
            _, bounds = self.colour_sort(P)
            if len(clique) + (bounds[-1] if bounds else 0) <= len(self.best):
                return
            v = (orb & -orb).bit_length() - 1
            clique.append(v)
            newP = P & adj[v]
            if newP:
                self.expand_orbital(clique, newP)
            elif len(clique) > len(self.best):
                self.best = clique.copy()
            clique.pop()
            if self.aborted:
                return
            P &= ~orb


def max_clique(
    adj: list[int], node_limit: int = DEFAULT_NODE_LIMIT, words: Optional[list[CodeWord]] = None
) -> tuple[list[int], int, bool]:
    """Return (clique vertices, nodes explored, exhausted) for bitset adjacency.

    Passing ``words`` enables orbital branching; only valid when ``adj`` is
    the distance graph of a full weight-w word set.
    """
    N = len(adj)
    if N == 0:
        return [], 0, True
    degree = [a.bit_count() for a in adj]
    # relabel so bit position follows descending degree (ties: original order)
    perm = sorted(range(N), key=lambda v: (-degree[v], v))
    pos = {v: i for i, v in enumerate(perm)}
    new_adj = []
    for v in perm:
        row, a = 0, adj[v]
        while a:
            low = a & -a
            row |= 1 << pos[low.bit_length() - 1]
            a ^= low
        new_adj.append(row)
    if words is None:
        search = _Search(new_adj, node_limit)
    else:
        search = _OrbitalSearch(new_adj, node_limit, [words[v] for v in perm])
    old = sys.getrecursionlimit()
    sys.setrecursionlimit(max(old, N + 1000))
    try:
        if words is None:
            search.expand([], (1 << N) - 1)
        else:
            search.expand_orbital([], (1 << N) - 1)
    finally:
        sys.setrecursionlimit(old)
    clique = sorted(perm[i] for i in search.best)
    return clique, search.nodes, not search.aborted


def max_code_exact(
    p: CodeParams,
    node_limit: int = DEFAULT_NODE_LIMIT,
    cap: int = DEFAULT_WORD_CAP,
    symmetry: bool = True,
) -> OracleResult:
    words = enumerate_all_words(p, cap=cap)
    adj = _adjacency(words, p.d)
    clique, nodes, exhausted = max_clique(adj, node_limit, words if symmetry else None)
    witness = Code(p, tuple(words[i] for i in clique))
    return OracleResult(len(clique), witness, nodes, exhausted)
