"""Bipartite form-counterpart skeleton.

Forms are indexed ``1..n`` and counterparts ``1..m`` (1-based, as in the
external text format). A :class:`Skeleton` is treated as a value: mutation
through :func:`toggle_edge` returns a fresh object and never touches the input.
"""
from __future__ import annotations

import enum
from pathlib import Path
from typing import Iterable

import numpy as np

from .errors import SkeletonError


class SkeletonClass(enum.Enum):
    GENERAL = "general"
    COUNTERPART_CAPPED = "counterpart-capped"
    VERTEX_CAPPED = "vertex-capped"

    def contains(self, other: "SkeletonClass") -> bool:
        """True if every skeleton of class ``other`` also belongs to ``self``."""
        order = [SkeletonClass.GENERAL, SkeletonClass.COUNTERPART_CAPPED, SkeletonClass.VERTEX_CAPPED]
        return order.index(other) >= order.index(self)


class Skeleton:
    """Adjacency between ``n`` forms and ``m`` counterparts with cached degrees.

    Neighbourhoods are kept as one adjacency list per side so that local
    updates can iterate over ``form_neighbors(i)`` / ``counterpart_neighbors(j)``
    in O(degree).
    """

    __slots__ = ("n", "m", "edges", "mu", "omega", "_form_adj", "_cp_adj")

    def __init__(self, n: int, m: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 1 or m < 1:
            raise SkeletonError(f"need n >= 1 and m >= 1, got n={n}, m={m}")
        edge_list = [(int(i), int(j)) for i, j in edges]
        edge_set = frozenset(edge_list)
        if len(edge_set) != len(edge_list):
            raise SkeletonError("duplicate edge")
        form_adj: list[set[int]] = [set() for _ in range(n)]
        cp_adj: list[set[int]] = [set() for _ in range(m)]
        for i, j in edge_set:
            if not (1 <= i <= n and 1 <= j <= m):
                raise SkeletonError(f"edge ({i}, {j}) out of range for {n}x{m} skeleton")
            form_adj[i - 1].add(j)
            cp_adj[j - 1].add(i)
        self._init(n, m, edge_set, form_adj, cp_adj)

    def _init(self, n, m, edge_set, form_adj, cp_adj):
        self.n = n
        self.m = m
        self.edges = edge_set
        self._form_adj = tuple(frozenset(s) for s in form_adj)
        self._cp_adj = tuple(frozenset(s) for s in cp_adj)
        self.mu = np.array([len(s) for s in form_adj], dtype=np.int64)
        self.omega = np.array([len(s) for s in cp_adj], dtype=np.int64)
        self.mu.setflags(write=False)
        self.omega.setflags(write=False)

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    M = n_edges

    def has_edge(self, i: int, j: int) -> bool:
        return (i, j) in self.edges

    def degree_form(self, i: int) -> int:
        return int(self.mu[i - 1])

    def degree_counterpart(self, j: int) -> int:
        return int(self.omega[j - 1])

    def form_neighbors(self, i: int) -> frozenset[int]:
        """Counterparts linked to form ``i``."""
        return self._form_adj[i - 1]

    def counterpart_neighbors(self, j: int) -> frozenset[int]:
        """Forms linked to counterpart ``j``."""
        return self._cp_adj[j - 1]

    def adjacency(self) -> np.ndarray:
        a = np.zeros((self.n, self.m), dtype=np.int8)
        for i, j in self.edges:
            a[i - 1, j - 1] = 1
        return a

    def with_edge(self, i: int, j: int) -> "Skeleton":
        if self.has_edge(i, j):
            raise SkeletonError(f"edge ({i}, {j}) already present")
        return toggle_edge(self, i, j)

    def __eq__(self, other):
        if not isinstance(other, Skeleton):
            return NotImplemented
        return (self.n, self.m, self.edges) == (other.n, other.m, other.edges)

    def __hash__(self):
        return hash((self.n, self.m, self.edges))

    def __repr__(self):
        return f"Skeleton(n={self.n}, m={self.m}, edges={sorted(self.edges)})"


def new_skeleton(n: int, m: int, edges: Iterable[tuple[int, int]] = ()) -> Skeleton:
    return Skeleton(n, m, edges)


def classify(sk: Skeleton) -> SkeletonClass:
    """Most restrictive class whose degree conditions hold."""
    if sk.omega.size and sk.omega.max(initial=0) > 1:
        return SkeletonClass.GENERAL
    if sk.mu.max(initial=0) > 1:
        return SkeletonClass.COUNTERPART_CAPPED
    return SkeletonClass.VERTEX_CAPPED


def toggle_edge(sk: Skeleton, i: int, j: int) -> Skeleton:
    """Flip cell ``(i, j)``: add the edge if absent, remove it otherwise."""
    if not (1 <= i <= sk.n and 1 <= j <= sk.m):
        raise SkeletonError(f"cell ({i}, {j}) out of range for {sk.n}x{sk.m} skeleton")
    form_adj = [set(s) for s in sk._form_adj]
    cp_adj = [set(s) for s in sk._cp_adj]
    if (i, j) in sk.edges:
        edges = sk.edges - {(i, j)}
        form_adj[i - 1].discard(j)
        cp_adj[j - 1].discard(i)
    else:
        edges = sk.edges | {(i, j)}
        form_adj[i - 1].add(j)
        cp_adj[j - 1].add(i)
    out = Skeleton.__new__(Skeleton)
    out._init(sk.n, sk.m, edges, form_adj, cp_adj)
    return out


def parse_skeleton(text: str) -> Skeleton:
    """Parse the text format: ``n m`` on the first line, then one ``i j`` per line.

    ``#`` starts a comment; blank lines are ignored.
    """
    rows = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise SkeletonError(f"line {lineno}: expected two integers, got {raw!r}")
        try:
            rows.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise SkeletonError(f"line {lineno}: expected two integers, got {raw!r}") from None
    if not rows:
        raise SkeletonError("missing 'n m' header line")
    (n, m), edges = rows[0], rows[1:]
    return Skeleton(n, m, edges)


def format_skeleton(sk: Skeleton) -> str:
    lines = [f"{sk.n} {sk.m}"]
    lines += [f"{i} {j}" for i, j in sorted(sk.edges)]
    return "\n".join(lines) + "\n"


def read_skeleton(path: str | Path) -> Skeleton:
    return parse_skeleton(Path(path).read_text())
