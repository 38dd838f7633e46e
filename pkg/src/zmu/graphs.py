"""Girth, regularity, connectivity, Levi graphs and configuration parameters.

Graphs are symmetric 0/1 adjacency matrices with zero diagonal; incidence
structures wrap a points x lines 0/1 matrix.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from .cyclic_core import SchemeError, binary_matrix, is_j2_free_matrix

__all__ = ["Girth", "IncidenceStructure", "as_graph", "neighbors", "girth",
           "is_cycle", "levi", "girth_lemma_check", "config_params",
           "is_configuration", "regular_degree", "is_connected"]


def as_graph(A) -> np.ndarray:
    A = binary_matrix(A)
    if A.shape[0] != A.shape[1]:
        raise SchemeError(f"adjacency matrix must be square, got {A.shape}")
    if not np.array_equal(A, A.T) or A.diagonal().any():
        raise SchemeError("adjacency matrix must be symmetric with zero diagonal")
    return A


def neighbors(A) -> list[list[int]]:
    return [np.flatnonzero(row).tolist() for row in np.asarray(A)]


@dataclass(frozen=True)
class Girth:
    """Shortest cycle length and one witness cycle; ``length is None`` for forests."""

    length: int | None
    cycle: tuple[int, ...] = ()

    @property
    def acyclic(self) -> bool:
        return self.length is None

    def __str__(self):
        return "acyclic" if self.length is None else str(self.length)


def girth(A) -> Girth:
    """Per-vertex BFS; stops early once no shorter cycle is possible."""
    adj = neighbors(as_graph(A))
    n = len(adj)
    best, witness = None, ()
    for s in range(n):
        dist = [-1] * n
        parent = [-1] * n
        dist[s] = 0
        queue = deque([s])
        found = None
        while queue:
            u = queue.popleft()
            if best is not None and 2 * dist[u] + 1 >= best:
                break
            for w in adj[u]:
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif w != parent[u]:
                    length = dist[u] + dist[w] + 1
                    if best is None or length < best:
                        best, found = length, (u, w)
        if found:
            u, w = found
            left, right = [u], [w]
            while left[-1] != s:
                left.append(parent[left[-1]])
            while right[-1] != s:
                right.append(parent[right[-1]])
            witness = tuple(reversed(left)) + tuple(right[:-1])
    return Girth(best, witness)


def is_cycle(A, vertices) -> bool:
    """Do ``vertices`` (in any order) induce a single cycle through all of them?"""
    A = as_graph(A)
    vs = list(dict.fromkeys(int(v) for v in vertices))
    if len(vs) < 3:
        return False
    sub = A[np.ix_(vs, vs)]
    if (sub.sum(axis=1) != 2).any():
        return False
    return is_connected(sub)


def regular_degree(A) -> int | None:
    degs = set(as_graph(A).sum(axis=1).tolist())
    return int(degs.pop()) if len(degs) == 1 else None


def is_connected(A) -> bool:
    adj = neighbors(A)
    if not adj:
        return True
    seen = {0}
    stack = [0]
    while stack:
        for w in adj[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(adj)


@dataclass(frozen=True, eq=False)
class IncidenceStructure:
    """Points x lines incidence matrix with derived parameters."""

    incidence: np.ndarray = field(repr=False)

    def __post_init__(self):
        object.__setattr__(self, "incidence", binary_matrix(self.incidence))

    @property
    def shape(self) -> tuple[int, int]:
        return self.incidence.shape

    @cached_property
    def params(self) -> tuple[int, int, int, int] | None:
        return config_params(self)

    @cached_property
    def j2_free(self) -> bool:
        return is_j2_free_matrix(self.incidence)[0]

    @property
    def is_configuration(self) -> bool:
        return self.j2_free and self.params is not None

    def levi(self) -> np.ndarray:
        return levi(self)

    def type_string(self) -> str:
        if self.params is None:
            return "irregular"
        m, k, n, l = self.params
        return f"({m}_{k})" if (m, k) == (n, l) else f"({m}_{k},{n}_{l})"

    def __eq__(self, other):
        return isinstance(other, IncidenceStructure) and np.array_equal(self.incidence, other.incidence)

    def __hash__(self):
        return hash((self.shape, self.incidence.tobytes()))


def _incidence(I) -> np.ndarray:
    return I.incidence if isinstance(I, IncidenceStructure) else binary_matrix(I)


def levi(I) -> np.ndarray:
    """Bipartite adjacency [[0, C], [C^T, 0]]; points first, then lines."""
    C = _incidence(I)
    m, n = C.shape
    A = np.zeros((m + n, m + n), dtype=np.uint8)
    A[:m, m:] = C
    A[m:, :m] = C.T
    return A


def config_params(I) -> tuple[int, int, int, int] | None:
    """(m, k, n, l) when row sums are constantly k and column sums l."""
    C = _incidence(I)
    m, n = C.shape
    rs, cs = set(C.sum(axis=1).tolist()), set(C.sum(axis=0).tolist())
    if len(rs) > 1 or len(cs) > 1:
        return None
    k = int(rs.pop()) if rs else 0
    l = int(cs.pop()) if cs else 0
    return m, k, n, l


def is_configuration(I) -> bool:
    return is_j2_free_matrix(_incidence(I))[0] and config_params(I) is not None


def girth_lemma_check(I) -> bool:
    """Levi graph has girth >= 6 exactly when the incidence matrix is J2-free."""
    g = girth(levi(I))
    long_girth = g.acyclic or g.length >= 6
    return long_girth == is_j2_free_matrix(_incidence(I))[0]
