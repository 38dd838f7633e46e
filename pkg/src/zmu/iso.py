"""Canonical forms, isomorphism and automorphism groups of incidence structures.

Everything runs on the colored Levi graph (points one color, lines another),
so automorphisms map points to points; dualities are only looked at by
:func:`aut_order` with ``dualities=True``.

The search is plain individualization-refinement: 1-dimensional
Weisfeiler-Leman refinement to an equitable ordered partition, a target
cell chosen by how many other cells it splits (see
:meth:`ColoredGraph.target_cell`), and a search tree over the vertices of
that cell.  The automorphism group is found level by level along the first
path (every vertex of each target cell is tested for an automorphism that
fixes the earlier base points), which yields a strong generating set and
the exact order as the product of basic orbit lengths.  The canonical form
is the leaf maximising (node invariants along the path, relabelled graph),
with subtrees pruned by invariants and by orbits of known automorphisms.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .cyclic_core import binary_matrix
from .graphs import IncidenceStructure, neighbors

__all__ = ["Coloring", "AutReport", "ColoredGraph", "automorphism_group",
           "canonical_labeling", "canonical_form", "are_isomorphic",
           "aut_order", "family_invariance", "FamilyError"]


class FamilyError(ValueError):
    pass


@dataclass(frozen=True)
class Coloring:
    """Ordered color classes: ``cells[c]`` lists the vertices of color c."""

    cells: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        flat = [v for cell in self.cells for v in cell]
        if len(flat) != len(set(flat)):
            raise ValueError("color classes overlap")
        if sorted(flat) != list(range(len(flat))):
            raise ValueError("color classes must cover vertices 0..n-1")

    def colors(self) -> list[int]:
        out = [0] * sum(len(c) for c in self.cells)
        for c, cell in enumerate(self.cells):
            for v in cell:
                out[v] = c
        return out


@dataclass(frozen=True)
class AutReport:
    order: int
    generators: tuple[tuple[int, ...], ...]
    orbits: tuple[tuple[int, ...], ...]
    base: tuple[int, ...] = ()
    orbit_lengths: tuple[int, ...] = ()


def _dense(colors: Sequence) -> list[int]:
    keys = sorted(set(colors))
    index = {k: i for i, k in enumerate(keys)}
    return [index[c] for c in colors]


class ColoredGraph:
    """Undirected graph plus an ordered vertex coloring, ready for searching."""

    def __init__(self, adjacency, colors: Sequence[int] | None = None):
        A = binary_matrix(adjacency)
        self.n = A.shape[0]
        self.adj = neighbors(A)
        self.colors = _dense(colors if colors is not None else [0] * self.n)

    # -- partition refinement -------------------------------------------
    def refine(self, color: list[int]) -> tuple[list[int], tuple]:
        """Equitable refinement; returns (dense colors, invariant of the result)."""
        adj = self.adj
        ncolors = max(color) + 1 if color else 0
        while True:
            sigs = [(color[v], tuple(sorted([color[u] for u in adj[v]]))) for v in range(self.n)]
            keys = sorted(set(sigs))
            if len(keys) == ncolors:
                return color, (ncolors, tuple(keys))
            index = {k: i for i, k in enumerate(keys)}
            color = [index[s] for s in sigs]
            ncolors = len(keys)

    def individualize(self, color: list[int], v: int) -> list[int]:
        c = color[v]
        return _dense([2 * x + (x == c and w != v) for w, x in enumerate(color)])

    def target_cell(self, color: list[int]) -> list[int] | None:
        """Non-singleton cell joined non-trivially to the most non-singleton cells.

        A vertex of cell X sees either none, all, or some of cell Y (the
        partition is equitable, so this is a property of the cell pair);
        individualizing in a cell with many "some" joins splits the most.
        Ties go to the lowest color.
        """
        cells: dict[int, list[int]] = {}
        for v, c in enumerate(color):
            cells.setdefault(c, []).append(v)
        big = [c for c in sorted(cells) if len(cells[c]) > 1]
        if not big:
            return None
        best, best_score = None, -1
        for c in big:
            v = cells[c][0]
            seen: dict[int, int] = {}
            for u in self.adj[v]:
                seen[color[u]] = seen.get(color[u], 0) + 1
            score = sum(1 for d, k in seen.items() if len(cells[d]) > 1 and k < len(cells[d]))
            if score > best_score:
                best, best_score = cells[c], score
        return best

    def certificate(self, labeling: list[int]) -> tuple:
        inv = [0] * self.n
        for v, lab in enumerate(labeling):
            inv[lab] = v
        adj = self.adj
        return tuple(sum(1 << labeling[u] for u in adj[inv[i]]) for i in range(self.n))


class _Orbits:
    """Union-find over vertices under a set of permutations."""

    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def add(self, perm: Sequence[int]):
        for x, y in enumerate(perm):
            rx, ry = self.find(x), self.find(y)
            if rx != ry:
                self.parent[max(rx, ry)] = min(rx, ry)

    def classes(self) -> tuple[tuple[int, ...], ...]:
        groups: dict[int, list[int]] = {}
        for x in range(len(self.parent)):
            groups.setdefault(self.find(x), []).append(x)
        return tuple(tuple(g) for g in sorted(groups.values()))


def _orbits_of(n: int, gens) -> _Orbits:
    orb = _Orbits(n)
    for g in gens:
        orb.add(g)
    return orb


def _fixes(perm: Sequence[int], points: Sequence[int]) -> bool:
    return all(perm[p] == p for p in points)


class _Search:
    def __init__(self, graph: ColoredGraph):
        self.g = graph
        root, inv = graph.refine(graph.colors)
        self.root, self.root_inv = root, inv
        self.generators: list[tuple[int, ...]] = []
        self.order = 1

    def first_path(self):
        """Descend always taking the first vertex of the target cell."""
        g = self.g
        nodes, invs, prefix = [self.root], [self.root_inv], []
        color = self.root
        while True:
            cell = g.target_cell(color)
            if cell is None:
                break
            v = cell[0]
            color, inv = g.refine(g.individualize(color, v))
            prefix.append(v)
            nodes.append(color)
            invs.append(inv)
        self.path_nodes, self.path_invs, self.base = nodes, invs, prefix
        self.leaf0 = color
        self.cert0 = g.certificate(color)

    def _find_equivalent(self, color: list[int], depth: int):
        """DFS for a leaf matching the first leaf, following matching invariants only."""
        g = self.g
        cell = g.target_cell(color)
        if cell is None:
            if g.certificate(color) == self.cert0:
                inv_leaf = [0] * g.n
                for v, lab in enumerate(color):
                    inv_leaf[lab] = v
                return tuple(inv_leaf[self.leaf0[v]] for v in range(g.n))
            return None
        for v in cell:
            child, inv = g.refine(g.individualize(color, v))
            if depth + 1 < len(self.path_invs) and inv == self.path_invs[depth + 1]:
                found = self._find_equivalent(child, depth + 1)
                if found is not None:
                    return found
        return None

    def group(self):
        self.first_path()
        g = self.g
        lengths = []
        for d in reversed(range(len(self.base))):
            node = self.path_nodes[d]
            v = self.base[d]
            cell = [w for w in range(g.n) if node[w] == node[v]]
            orb = _orbits_of(g.n, self.generators)
            for w in cell:
                if orb.find(w) == orb.find(v):
                    continue
                child, inv = g.refine(g.individualize(node, w))
                if inv != self.path_invs[d + 1]:
                    continue
                gamma = self._find_equivalent(child, d + 1)
                if gamma is not None:
                    self.generators.append(gamma)
                    orb.add(gamma)
            length = sum(1 for w in cell if orb.find(w) == orb.find(v))
            lengths.append(length)
            self.order *= length
        self.orbit_lengths = tuple(reversed(lengths))

    def canonical(self):
        """Best leaf under (invariant path, certificate); returns its labeling."""
        g = self.g
        best_key = list(self.path_invs) + [self.cert0]
        best_leaf = self.leaf0
        gens = self.generators

        def dfs(color, prefix, path):
            nonlocal best_key, best_leaf
            cell = g.target_cell(color)
            if cell is None:
                key = path + [g.certificate(color)]
                if key > best_key:
                    best_key, best_leaf = key, color
                return
            stab = [p for p in gens if _fixes(p, prefix)]
            orb = _orbits_of(g.n, stab)
            done = set()
            for v in cell:
                r = orb.find(v)
                if r in done:
                    continue
                done.add(r)
                child, inv = g.refine(g.individualize(color, v))
                depth = len(path)
                new_path = path + [inv]
                if depth < len(best_key) - 1:
                    mine, theirs = new_path, best_key[:depth + 1]
                    if mine < theirs:
                        continue
                dfs(child, prefix + [v], new_path)

        dfs(self.root, [], [self.root_inv])
        return best_leaf


def automorphism_group(adjacency, colors: Sequence[int] | None = None) -> AutReport:
    """Color-preserving automorphism group of a graph."""
    s = _Search(ColoredGraph(adjacency, colors))
    s.group()
    orbits = _orbits_of(s.g.n, s.generators).classes()
    return AutReport(s.order, tuple(s.generators), orbits, tuple(s.base), s.orbit_lengths)


def canonical_labeling(adjacency, colors: Sequence[int] | None = None) -> tuple[list[int], AutReport]:
    """Canonical position of every vertex, plus the automorphism group found on the way."""
    s = _Search(ColoredGraph(adjacency, colors))
    s.group()
    labeling = s.canonical()
    orbits = _orbits_of(s.g.n, s.generators).classes()
    return labeling, AutReport(s.order, tuple(s.generators), orbits, tuple(s.base), s.orbit_lengths)


def _as_incidence(I) -> np.ndarray:
    return I.incidence if isinstance(I, IncidenceStructure) else binary_matrix(I)


def _levi_colored(C: np.ndarray):
    m, n = C.shape
    A = np.zeros((m + n, m + n), dtype=np.uint8)
    A[:m, m:] = C
    A[m:, :m] = C.T
    return A, [0] * m + [1] * n


def canonical_form(I) -> np.ndarray:
    """P C Q for canonical row/column permutations; equal exactly for isomorphic inputs."""
    C = _as_incidence(I)
    m, n = C.shape
    A, colors = _levi_colored(C)
    labeling, _ = canonical_labeling(A, colors)
    rows = sorted(range(m), key=lambda p: labeling[p])
    cols = sorted(range(n), key=lambda L: labeling[m + L])
    return C[np.ix_(rows, cols)].copy()


def are_isomorphic(I1, I2) -> bool:
    """Point->point, line->line isomorphism (dualities not considered)."""
    C1, C2 = _as_incidence(I1), _as_incidence(I2)
    if C1.shape != C2.shape or C1.sum() != C2.sum():
        return False
    if sorted(C1.sum(axis=1).tolist()) != sorted(C2.sum(axis=1).tolist()):
        return False
    if sorted(C1.sum(axis=0).tolist()) != sorted(C2.sum(axis=0).tolist()):
        return False
    return np.array_equal(canonical_form(C1), canonical_form(C2))


def aut_order(I, dualities: bool = False) -> AutReport:
    """Automorphisms of an incidence structure as permutations of Levi vertices.

    Vertices 0..m-1 are points, m..m+n-1 lines.  With ``dualities=True``
    points and lines share a color, so correlations are counted as well.
    """
    C = _as_incidence(I)
    A, colors = _levi_colored(C)
    if dualities:
        colors = [0] * len(colors)
    return automorphism_group(A, colors)


def family_invariance(I, families, fixed: bool = False, report: AutReport | None = None) -> bool:
    """Do all automorphisms permute the given point and line classes among themselves?

    ``families`` is a pair (point classes, line classes), each a partition of
    the points resp. lines (0-based).  With ``fixed=True`` every class must
    be mapped onto itself rather than onto some class.
    """
    C = _as_incidence(I)
    m, n = C.shape
    point_classes, line_classes = families
    for classes, size, offset in ((point_classes, m, 0), (line_classes, n, m)):
        flat = sorted(x for cls in classes for x in cls)
        if flat != list(range(size)):
            raise FamilyError("families must partition the points and lines")
    if report is None:
        report = aut_order(C)
    all_classes = [frozenset(x for x in cls) for cls in point_classes]
    all_classes += [frozenset(m + x for x in cls) for cls in line_classes]
    class_set = set(all_classes)
    for perm in report.generators:
        for cls in all_classes:
            image = frozenset(perm[x] for x in cls)
            if (image != cls) if fixed else (image not in class_set):
                return False
    return True
