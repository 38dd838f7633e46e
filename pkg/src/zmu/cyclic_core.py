"""Residue sets, Z_mu-schemes (pure and mixed), blow-ups and J2-freeness.

A scheme is a grid of entries.  Pure entries are subsets of Z_mu; each one
blows up to the circulant 0/1 matrix whose (i, j) entry is 1 exactly when
(j - i) mod mu lies in the set.  Mixed schemes additionally carry row/column
symbol blocks and raw 0/1 blocks, which is how partial projective closures
are written down.

Binary matrices are plain 2-D ``numpy.uint8`` arrays throughout.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence, Union

import numpy as np

__all__ = [
    "ResidueSet", "Blank", "BLANK", "RowSym", "ColSym", "Raw", "Entry",
    "Scheme", "SchemeError", "ExtractionError", "DifferenceSetReport",
    "binary_matrix", "circulant", "circulant_inverse", "blow_up",
    "extract_scheme", "valency", "is_j2_free_matrix", "is_j2_free_scheme",
    "dds_check", "scheme_transpose_negate", "is_skew_symmetric",
    "is_admissible", "bipartite_double", "J2Witness", "SchemeJ2Witness",
]


class SchemeError(ValueError):
    """Raised for malformed schemes or operations applied to the wrong kind."""


class ExtractionError(SchemeError):
    """A matrix cannot be read as the blow-up of a pure scheme."""

    def __init__(self, message: str, block: tuple[int, int] | None = None):
        super().__init__(message)
        self.block = block


@dataclass(frozen=True, order=True)
class ResidueSet:
    """A subset of Z_mu stored as a sorted tuple of residues."""

    modulus: int
    members: tuple[int, ...] = ()

    def __post_init__(self):
        if self.modulus < 1:
            raise SchemeError(f"modulus must be positive, got {self.modulus}")
        members = tuple(sorted(set(int(x) for x in self.members)))
        for x in members:
            if not 0 <= x < self.modulus:
                raise SchemeError(f"residue {x} out of range for Z_{self.modulus}")
        object.__setattr__(self, "members", members)

    @classmethod
    def of(cls, modulus: int, values: Iterable[int]) -> "ResidueSet":
        """Build from arbitrary integers, reducing them mod ``modulus``."""
        return cls(modulus, tuple(int(v) % modulus for v in values))

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __contains__(self, x):
        return x in self.members

    def negate(self) -> "ResidueSet":
        return ResidueSet.of(self.modulus, (-x for x in self.members))

    def shift(self, c: int) -> "ResidueSet":
        return ResidueSet.of(self.modulus, (x + c for x in self.members))

    def __str__(self):
        return ",".join(map(str, self.members)) if self.members else "-"


class Blank:
    """The empty entry of a scheme (a zero block of whatever shape fits)."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "BLANK"

    def __str__(self):
        return "-"

    def __reduce__(self):
        return (Blank, ())


BLANK = Blank()


@dataclass(frozen=True)
class RowSym:
    """Symbol r^s_i: an (s x mu) block with ones in its i-th row (1-based)."""

    height: int
    index: int

    def __post_init__(self):
        if not 1 <= self.index <= self.height:
            raise SchemeError(f"row symbol index {self.index} not in [1, {self.height}]")

    def __str__(self):
        return f"r{self.height}:{self.index}"


@dataclass(frozen=True)
class ColSym:
    """Symbol c^s_i: a (mu x s) block with ones in its i-th column (1-based)."""

    width: int
    index: int

    def __post_init__(self):
        if not 1 <= self.index <= self.width:
            raise SchemeError(f"column symbol index {self.index} not in [1, {self.width}]")

    def __str__(self):
        return f"c{self.width}:{self.index}"


@dataclass(frozen=True)
class Raw:
    """An explicit 0/1 block, stored as a tuple of row tuples."""

    bits: tuple[tuple[int, ...], ...]
    name: str = "e"

    def __post_init__(self):
        bits = tuple(tuple(int(b) for b in row) for row in self.bits)
        widths = {len(r) for r in bits}
        if len(widths) > 1:
            raise SchemeError("ragged raw block")
        if any(b not in (0, 1) for row in bits for b in row):
            raise SchemeError("raw block entries must be 0/1")
        object.__setattr__(self, "bits", bits)

    @classmethod
    def from_matrix(cls, matrix, name: str = "e") -> "Raw":
        return cls(tuple(tuple(int(b) for b in row) for row in np.asarray(matrix)), name)

    @property
    def shape(self) -> tuple[int, int]:
        return (len(self.bits), len(self.bits[0]) if self.bits else 0)

    def matrix(self) -> np.ndarray:
        return np.array(self.bits, dtype=np.uint8).reshape(self.shape)

    def __str__(self):
        return f"raw:{self.name}"


Entry = Union[Blank, ResidueSet, RowSym, ColSym, Raw]


def _coerce_entry(mu: int, e) -> Entry:
    if e is None or e is BLANK:
        return BLANK
    if isinstance(e, ResidueSet):
        if e.modulus != mu:
            raise SchemeError(f"entry over Z_{e.modulus} in a Z_{mu}-scheme")
        return e if len(e) else BLANK
    if isinstance(e, (RowSym, ColSym, Raw)):
        return e
    if isinstance(e, int):
        return ResidueSet.of(mu, [e])
    values = list(e)
    return ResidueSet.of(mu, values) if values else BLANK


@dataclass(frozen=True)
class Scheme:
    """A (possibly mixed) Z_mu-scheme.

    ``entries`` may be given as nested lists of ints / iterables / ``None``;
    they are normalised to :data:`BLANK` or :class:`ResidueSet` on
    construction.  Row heights and column widths default to ``mu``.
    """

    mu: int
    entries: tuple
    row_heights: tuple = None
    col_widths: tuple = None

    def __post_init__(self):
        mu = self.mu
        grid = tuple(tuple(_coerce_entry(mu, e) for e in row) for row in self.entries)
        m = len(grid)
        n = len(grid[0]) if m else 0
        if any(len(row) != n for row in grid):
            raise SchemeError("ragged scheme grid")
        rh = tuple(self.row_heights) if self.row_heights is not None else (mu,) * m
        cw = tuple(self.col_widths) if self.col_widths is not None else (mu,) * n
        if len(rh) != m or len(cw) != n:
            raise SchemeError("row_heights/col_widths do not match the grid")
        if any(h < 1 for h in rh + cw):
            raise SchemeError("block sizes must be positive")
        object.__setattr__(self, "entries", grid)
        object.__setattr__(self, "row_heights", rh)
        object.__setattr__(self, "col_widths", cw)
        for i, row in enumerate(grid):
            for j, e in enumerate(row):
                h, w = rh[i], cw[j]
                if isinstance(e, ResidueSet) and (h, w) != (mu, mu):
                    raise SchemeError(f"set entry at ({i},{j}) needs a {mu}x{mu} block, got {h}x{w}")
                if isinstance(e, RowSym) and (h, w) != (e.height, mu):
                    raise SchemeError(f"{e} at ({i},{j}) needs a {e.height}x{mu} block, got {h}x{w}")
                if isinstance(e, ColSym) and (h, w) != (mu, e.width):
                    raise SchemeError(f"{e} at ({i},{j}) needs a {mu}x{e.width} block, got {h}x{w}")
                if isinstance(e, Raw) and e.shape != (h, w):
                    raise SchemeError(f"raw block at ({i},{j}) has shape {e.shape}, slot is {h}x{w}")

    @property
    def shape(self) -> tuple[int, int]:
        return (len(self.entries), len(self.entries[0]) if self.entries else 0)

    @property
    def is_pure(self) -> bool:
        return all(isinstance(e, (Blank, ResidueSet)) for row in self.entries for e in row)

    @property
    def is_simple(self) -> bool:
        return all(not isinstance(e, ResidueSet) or len(e) <= 1 for row in self.entries for e in row)

    def __getitem__(self, ij) -> Entry:
        i, j = ij
        return self.entries[i][j]

    def sets(self, i: int, j: int) -> tuple[int, ...]:
        """Members of entry (i, j) of a pure scheme (empty for blanks)."""
        e = self.entries[i][j]
        return e.members if isinstance(e, ResidueSet) else ()

    def permuted(self, row_order: Sequence[int], col_order: Sequence[int]) -> "Scheme":
        """Rearrange block rows/columns: new row r is old row ``row_order[r]``."""
        return Scheme(
            self.mu,
            tuple(tuple(self.entries[i][j] for j in col_order) for i in row_order),
            tuple(self.row_heights[i] for i in row_order),
            tuple(self.col_widths[j] for j in col_order),
        )

    def __str__(self):
        return "\n".join(" ".join(str(e) for e in row) for row in self.entries)


def _require_pure(S: Scheme, what: str):
    if not S.is_pure:
        raise SchemeError(f"{what} needs a pure scheme; use the blow-up for mixed schemes")


def binary_matrix(rows) -> np.ndarray:
    """Validate and convert to a 2-D uint8 0/1 array."""
    B = np.asarray(rows)
    if B.ndim != 2:
        raise SchemeError(f"binary matrix must be 2-D, got {B.ndim}-D")
    if B.size and not np.isin(B, (0, 1)).all():
        raise SchemeError("binary matrix entries must be 0 or 1")
    return B.astype(np.uint8)


def circulant(mu: int, C: ResidueSet) -> np.ndarray:
    """The circulant 0/1 matrix of order mu with first-row support C."""
    if C.modulus != mu:
        raise SchemeError(f"residue set over Z_{C.modulus} used with mu={mu}")
    idx = np.arange(mu)
    diff = (idx[None, :] - idx[:, None]) % mu
    return np.isin(diff, C.members).astype(np.uint8)


def circulant_inverse(B) -> ResidueSet:
    B = binary_matrix(B)
    mu, w = B.shape
    if mu != w or mu == 0:
        raise SchemeError(f"circulant must be square and non-empty, got {B.shape}")
    C = ResidueSet(mu, tuple(int(j) for j in np.flatnonzero(B[0])))
    if not np.array_equal(circulant(mu, C), B):
        raise SchemeError("matrix is not circulant")
    return C


def _entry_block(S: Scheme, i: int, j: int) -> np.ndarray:
    e = S.entries[i][j]
    h, w = S.row_heights[i], S.col_widths[j]
    if isinstance(e, ResidueSet):
        return circulant(S.mu, e)
    block = np.zeros((h, w), dtype=np.uint8)
    if isinstance(e, RowSym):
        block[e.index - 1, :] = 1
    elif isinstance(e, ColSym):
        block[:, e.index - 1] = 1
    elif isinstance(e, Raw):
        block[:] = e.matrix()
    return block


def blow_up(S: Scheme) -> np.ndarray:
    """Substitute every entry by its block; returns the full 0/1 matrix."""
    m, n = S.shape
    rows = [np.hstack([_entry_block(S, i, j) for j in range(n)]) if n else
            np.zeros((S.row_heights[i], 0), dtype=np.uint8) for i in range(m)]
    if not rows:
        return np.zeros((0, sum(S.col_widths)), dtype=np.uint8)
    return np.vstack(rows).astype(np.uint8)


def extract_scheme(B, mu: int) -> Scheme:
    """Read a 0/1 matrix as the blow-up of a pure Z_mu-scheme.

    Raises :class:`ExtractionError` naming the first non-circulant block.
    """
    B = binary_matrix(B)
    R, C = B.shape
    if mu < 1 or R % mu or C % mu:
        raise ExtractionError(f"dimensions {B.shape} not divisible by mu={mu}")
    grid = []
    for i in range(R // mu):
        row = []
        for j in range(C // mu):
            block = B[i * mu:(i + 1) * mu, j * mu:(j + 1) * mu]
            try:
                row.append(circulant_inverse(block))
            except SchemeError:
                raise ExtractionError(f"block ({i},{j}) is not circulant", block=(i, j)) from None
        grid.append(row)
    return Scheme(mu, grid)


def valency(S: Scheme) -> tuple[int, int] | None:
    """(k, l) if every blow-up row sums to k and every column to l."""
    B = blow_up(S)
    rs, cs = B.sum(axis=1), B.sum(axis=0)
    if B.size == 0 or len(set(rs.tolist())) != 1 or len(set(cs.tolist())) != 1:
        return None
    return int(rs[0]), int(cs[0])


@dataclass(frozen=True)
class J2Witness:
    rows: tuple[int, int]
    cols: tuple[int, int]


def is_j2_free_matrix(B) -> tuple[bool, J2Witness | None]:
    """Check for an all-ones 2x2 submatrix via pairwise row intersections."""
    B = binary_matrix(B).astype(np.int32)
    if B.shape[0] < 2 or B.shape[1] < 2:
        return True, None
    G = B @ B.T
    np.fill_diagonal(G, 0)
    hits = np.argwhere(np.triu(G) >= 2)
    if len(hits) == 0:
        return True, None
    r1, r2 = (int(x) for x in hits[0])
    common = np.flatnonzero(B[r1] & B[r2])
    return False, J2Witness((r1, r2), (int(common[0]), int(common[1])))


@dataclass(frozen=True)
class SchemeJ2Witness:
    """Indices i, g (rows), j, h (columns) and a in S_ij, b in S_ih, c in S_gh, d in S_gj."""

    i: int
    g: int
    j: int
    h: int
    a: int
    b: int
    c: int
    d: int


def is_j2_free_scheme(S: Scheme) -> tuple[bool, SchemeJ2Witness | None]:
    """Modular criterion: no quadruple with a - b + c - d = 0 (mod mu).

    Row indices i, g and column indices j, h need not be distinct, but the
    four cells must form a genuine 2x2 submatrix of the blow-up: when i == g
    we need a != d, and when j == h we need a != b.  For a fixed row pair
    this says the differences a - d (a in S_ij, d in S_gj, over all columns
    j) are pairwise distinct.
    """
    _require_pure(S, "the modular J2 criterion")
    mu = S.mu
    m, n = S.shape
    for i in range(m):
        for g in range(i, m):
            seen: dict[int, tuple[int, int, int]] = {}
            for j in range(n):
                top, bottom = S.sets(i, j), S.sets(g, j)
                for a in top:
                    for d in bottom:
                        if i == g and a == d:
                            continue
                        diff = (a - d) % mu
                        if diff in seen:
                            h, b, c = seen[diff]
                            return False, SchemeJ2Witness(i, g, j, h, a, b, c, d)
                        seen[diff] = (j, a, d)
    return True, None


@dataclass(frozen=True)
class DifferenceSetReport:
    is_dds: bool
    covered: tuple[int, ...]
    deficiency: int | None


def dds_check(C: ResidueSet) -> DifferenceSetReport:
    """Are the k^2 - k differences of C pairwise distinct mod n?"""
    n = C.modulus
    diffs = [(a - b) % n for a in C for b in C if a != b]
    distinct = len(set(diffs)) == len(diffs)
    k = len(C)
    return DifferenceSetReport(
        is_dds=distinct,
        covered=tuple(sorted(set(diffs))),
        deficiency=n - k * k + k - 1 if distinct else None,
    )


def scheme_transpose_negate(S: Scheme) -> Scheme:
    """The scheme (-S)^T."""
    _require_pure(S, "transpose-negate")
    m, n = S.shape
    grid = [[ResidueSet.of(S.mu, (-x for x in S.sets(i, j))) for i in range(m)] for j in range(n)]
    return Scheme(S.mu, grid)


def _require_square(S: Scheme):
    _require_pure(S, "skew-symmetry")
    if S.shape[0] != S.shape[1]:
        raise SchemeError(f"scheme of order {S.shape} is not square")


def is_skew_symmetric(S: Scheme) -> bool:
    _require_square(S)
    mu, n = S.mu, S.shape[0]
    return all(
        set(S.sets(i, j)) == {(-x) % mu for x in S.sets(j, i)}
        for i in range(n) for j in range(i, n)
    )


def is_admissible(S: Scheme) -> bool:
    return is_skew_symmetric(S) and all(0 not in S.sets(i, i) for i in range(S.shape[0]))


def bipartite_double(S: Scheme) -> Scheme:
    """[[O_m, S], [(-S)^T, O_n]] -- an admissible square scheme of order m + n."""
    _require_pure(S, "bipartite doubling")
    m, n = S.shape
    lower = scheme_transpose_negate(S)
    grid = [[BLANK] * m + list(S.entries[i]) for i in range(m)]
    grid += [list(lower.entries[j]) + [BLANK] * n for j in range(n)]
    return Scheme(S.mu, grid)
