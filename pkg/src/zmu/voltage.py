"""Cyclic voltage graphs and their lifts.

A voltage graph on ``n`` vertices carries arcs ``(u, v, a)``: a plus-directed
edge from u to v with voltage a in Z_mu (loops have u == v).  The lift has
vertex (v, c) at index ``v * mu + c`` and joins (u, c) to (v, c + a).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .cyclic_core import ResidueSet, Scheme, SchemeError, is_admissible

__all__ = ["VoltageGraph", "is_admissible_assignment", "lift", "scheme_of",
           "voltage_graph_of", "InadmissibleError"]


class InadmissibleError(ValueError):
    pass


def _normalize_arc(mu: int, u: int, v: int, a: int) -> tuple[int, int, int]:
    a %= mu
    if u > v:
        u, v, a = v, u, (-a) % mu
    elif u == v:
        a = min(a, (-a) % mu)
    return (u, v, a)


@dataclass(frozen=True)
class VoltageGraph:
    """Arcs are stored normalised: from <= to, loop voltages as min(a, mu - a)."""

    mu: int
    n: int
    arcs: tuple[tuple[int, int, int], ...] = ()

    def __post_init__(self):
        if self.mu < 1 or self.n < 0:
            raise ValueError("need mu >= 1 and n >= 0")
        arcs = []
        for u, v, a in self.arcs:
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"arc ({u},{v}) has a vertex outside [0,{self.n})")
            arcs.append(_normalize_arc(self.mu, int(u), int(v), int(a)))
        object.__setattr__(self, "arcs", tuple(sorted(arcs)))

    def degree(self, v: int) -> int:
        """Degree counting each loop twice."""
        return sum((x == v) + (y == v) for x, y, _ in self.arcs)


def is_admissible_assignment(G: VoltageGraph) -> bool:
    """Loops carry nonzero voltage and parallel arcs carry distinct voltages.

    Orientation is accounted for by the normalisation, so u->v with a and
    v->u with -a collide.  A loop whose voltage is its own negative
    (a = mu/2) lifts to doubled edges and is rejected as well.
    """
    seen = set()
    for u, v, a in G.arcs:
        if u == v and (a == 0 or (2 * a) % G.mu == 0):
            return False
        if (u, v, a) in seen:
            return False
        seen.add((u, v, a))
    return True


def lift(G: VoltageGraph) -> np.ndarray:
    """Adjacency matrix of the derived graph, vertices ordered (v, c) lexicographically."""
    if not is_admissible_assignment(G):
        raise InadmissibleError("voltage assignment is not admissible")
    mu = G.mu
    A = np.zeros((G.n * mu, G.n * mu), dtype=np.uint8)
    for u, v, a in G.arcs:
        for c in range(mu):
            x, y = u * mu + c, v * mu + (c + a) % mu
            A[x, y] = A[y, x] = 1
    return A


def scheme_of(G: VoltageGraph) -> Scheme:
    if not is_admissible_assignment(G):
        raise InadmissibleError("voltage assignment is not admissible")
    mu = G.mu
    cells = [[set() for _ in range(G.n)] for _ in range(G.n)]
    for u, v, a in G.arcs:
        cells[u][v].add(a)
        cells[v][u].add((-a) % mu)
    return Scheme(mu, [[ResidueSet(mu, tuple(c)) for c in row] for row in cells])


def voltage_graph_of(S: Scheme) -> VoltageGraph:
    """Inverse of :func:`scheme_of` for admissible square schemes."""
    if not S.is_pure:
        raise SchemeError("voltage graphs correspond to pure schemes only")
    if S.shape[0] != S.shape[1] or not is_admissible(S):
        raise InadmissibleError("scheme is not admissible")
    mu, n = S.mu, S.shape[0]
    arcs = []
    for i in range(n):
        diag = S.sets(i, i)
        if any((2 * a) % mu == 0 for a in diag):
            # odd |S_ii|: a self-opposite residue cannot be split into loop pairs
            raise InadmissibleError(f"entry S_{i}{i} has odd size; loops come in +-a pairs")
        arcs += [(i, i, a) for a in diag if a < mu - a]
        for j in range(i + 1, n):
            arcs += [(i, j, a) for a in S.sets(i, j)]
    return VoltageGraph(mu, n, tuple(arcs))
