"""Named schemes and the multi-step constructions built on top of them.

Fixed tables live in ``zmu/data/*.scheme`` and are checked against their
expected properties when loaded.  Tables are often labelled 1-based;
everything here is 0-based, and the conversions are noted where they happen.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from itertools import product

import numpy as np

from .cyclic_core import (BLANK, ColSym, ResidueSet, RowSym, Scheme,
                          SchemeError, blow_up, dds_check, is_j2_free_matrix,
                          valency)
from .formats import parse_scheme
from .graphs import IncidenceStructure, girth
from .semiplanes import construct_L

__all__ = ["NamedScheme", "named", "NAMES", "robertson_hs", "balbuena_minor",
           "KrcadinacParams", "krcadinac_T", "krcadinac_V", "krcadinac_V_prime",
           "krcadinac_35", "krcadinac_families", "cyclic_config",
           "KRCADINAC", "PropertyError", "L3_TABLE", "V_ORDER"]


class PropertyError(AssertionError):
    """A fixture or construction failed one of its expected-property checks."""


@dataclass(frozen=True)
class NamedScheme:
    """A fixture plus the properties its blow-up is known to have.

    ``graph`` fixtures are adjacency matrices (checked for regularity and
    girth); the others are incidence matrices of configurations.
    """

    name: str
    scheme: Scheme
    order: tuple[int, int]
    valency: tuple[int, int]
    j2_free: bool = True
    graph: bool = False
    girth: int | None = None
    aut_order: int | None = None
    note: str = ""
    claimed_girth: int | None = None

    def matrix(self) -> np.ndarray:
        return blow_up(self.scheme)

    def check(self) -> list[str]:
        """Names of the expected properties that fail (empty when all hold)."""
        B = self.matrix()
        bad = []
        if B.shape != self.order:
            bad.append(f"order {B.shape} != {self.order}")
        if valency(self.scheme) != self.valency:
            bad.append(f"valency {valency(self.scheme)} != {self.valency}")
        if is_j2_free_matrix(B)[0] != self.j2_free:
            bad.append(f"j2_free != {self.j2_free}")
        if self.graph:
            if not np.array_equal(B, B.T) or B.diagonal().any():
                bad.append("not a simple graph adjacency matrix")
            elif self.girth is not None and girth(B).length != self.girth:
                bad.append(f"girth {girth(B).length} != {self.girth}")
        return bad


# (order, valency, graph, girth, note) per fixture.  The girth is what the
# blow-up actually has; T96 is claimed to have girth 5, but its {2,4} diagonal
# blocks over Z_6 are pairs of triangles, so the literal table has girth 3.
# The claimed value is kept as ``claimed_girth`` and checked separately.
_EXPECTED = {
    "petersen": ((10, 10), (3, 3), True, 5, "Petersen graph"),
    "cremona_richmond": ((15, 15), (3, 3), False, None, "(15_3) Cremona-Richmond configuration"),
    "reye": ((12, 16), (4, 3), False, None, "Reye's (12_4,16_3) configuration"),
    "T98": ((98, 98), (10, 10), False, None, "(98_10) configuration"),
    "T50": ((50, 50), (7, 7), True, 5, "Hoffman-Singleton graph"),
    "T96": ((96, 96), (9, 9), True, 3, "9-regular graph on 96 vertices"),
    "affine_9_4_12_3": ((9, 12), (4, 3), False, None, "affine plane of order 3"),
    "L6": ((48, 48), (7, 7), False, None, "type-L elliptic semiplane on 48 points"),
    "fln35": ((35, 35), (6, 6), False, None, "(35_6) configuration over Z_7"),
    "L3": ((15, 15), (4, 4), False, None, "type-L elliptic semiplane on 15 points"),
}

NAMES = tuple(_EXPECTED)


def _read_fixture(name: str) -> Scheme:
    text = resources.files("zmu").joinpath("data", f"{name}.scheme").read_text()
    return parse_scheme(text)


@lru_cache(maxsize=None)
def named(name: str) -> NamedScheme:
    """Load a fixture and verify its expected properties."""
    if name not in _EXPECTED:
        raise KeyError(f"unknown scheme {name!r}; known: {', '.join(NAMES)}")
    order, val, graph, g, note = _EXPECTED[name]
    claimed = {"T96": 5}.get(name, g)
    ns = NamedScheme(name, _read_fixture(name), order, val, True, graph, g, note=note,
                     claimed_girth=claimed)
    bad = ns.check()
    if bad:
        raise PropertyError(f"fixture {name}: " + "; ".join(bad))
    return ns


def robertson_hs() -> np.ndarray:
    """Hoffman-Singleton graph from five pentagrams and five pentagons.

    Vertex i of pentagram P_j is joined to vertex l of pentagon Q_k iff
    l = i + j*k (mod 5).  Order: P_1..P_4, P_0, Q_1..Q_4, Q_0, each with
    vertices 0..4.
    """
    copies = [1, 2, 3, 4, 0]
    star = [(0, 2), (2, 4), (4, 1), (1, 3), (3, 0)]
    ring = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]

    def P(j, i):
        return copies.index(j) * 5 + i

    def Q(k, l):
        return 25 + copies.index(k) * 5 + l

    A = np.zeros((50, 50), dtype=np.uint8)
    for j in range(5):
        for a, b in star:
            A[P(j, a), P(j, b)] = A[P(j, b), P(j, a)] = 1
        for a, b in ring:
            A[Q(j, a), Q(j, b)] = A[Q(j, b), Q(j, a)] = 1
    for j, i, k in product(range(5), repeat=3):
        l = (i + j * k) % 5
        A[P(j, i), Q(k, l)] = A[Q(k, l), P(j, i)] = 1
    return A


def balbuena_minor(q: int, variant: str = "M", generator: int | None = None) -> Scheme:
    """Mixed Z_{q-1}-scheme of valency q-1 from two deleted rows/columns of L^(q-1).

    Rows 0, 1 of L are dropped; M drops columns 0 and q, N drops q-1 and q.
    The remaining (q-1) x (q-1) minor is bordered by c/r symbols of size
    q-2 (M) or q-3 (N) so every row and column gets back to valency q-1.
    Orders: q^2 - q - 1 for M, q^2 - q - 2 for N.
    """
    variant = variant.upper()
    if variant not in ("M", "N"):
        raise ValueError("variant must be 'M' or 'N'")
    s = q - 2 if variant == "M" else q - 3
    if q < 4 or s < 1:
        raise SchemeError(f"q={q} too small for the {variant} layout")
    L = construct_L(q, generator)
    mu = q - 1
    rows = list(range(2, q + 1))
    cols = list(range(1, q)) if variant == "M" else list(range(0, q - 1))
    grid = []
    for a, i in enumerate(rows):
        row = [L.entries[i][j] for j in cols]
        row.append(ColSym(s, a + 1) if a < s else BLANK)
        grid.append(row)
    lead = q - 1 - s  # leading blanks of the symbol row: 1 for M, 2 for N
    grid.append([BLANK] * lead + [RowSym(s, b + 1) for b in range(s)] + [BLANK])
    heights = (mu,) * (q - 1) + (s,)
    return Scheme(mu, grid, heights, heights)


# -- the (30_5) family and its closures ---------------------------------------

L3_TABLE = (
    (None, 0, 1, 2, 0),
    (0, None, 2, 1, 0),
    (1, 2, None, 0, 0),
    (2, 1, 0, None, 0),
    (0, 0, 0, 0, None),
)

# the 1-based order 1,6,2,7,3,8,4,9,5,10 converted to 0-based
V_ORDER = (0, 5, 1, 6, 2, 7, 3, 8, 4, 9)


@dataclass(frozen=True)
class KrcadinacParams:
    """Diagonal residues alpha_1..5, beta_1..5 in Z_3 and closure residues eta, zeta."""

    alpha: tuple[int, ...]
    beta: tuple[int, ...]
    eta: int | None = None
    zeta: int | None = None

    def __post_init__(self):
        a = tuple(int(x) % 3 for x in self.alpha)
        b = tuple(int(x) % 3 for x in self.beta)
        if len(a) != 5 or len(b) != 5:
            raise ValueError("alpha and beta need 5 entries each")
        object.__setattr__(self, "alpha", a)
        object.__setattr__(self, "beta", b)

    def star_holds(self) -> bool:
        """alpha_i + beta_j != 0 (mod 3) for all i != j."""
        return all((self.alpha[i] + self.beta[j]) % 3 for i in range(5) for j in range(5) if i != j)

    @classmethod
    def parse(cls, alpha: str, beta: str, eta=None, zeta=None) -> "KrcadinacParams":
        """From digit strings such as ``alpha="11111"``."""
        return cls(tuple(int(c) for c in alpha), tuple(int(c) for c in beta),
                   None if eta is None else int(eta), None if zeta is None else int(zeta))


KRCADINAC = {
    "T360": KrcadinacParams((1, 1, 1, 1, 1), (1, 1, 1, 1, 1)),
    "T72": KrcadinacParams((1, 1, 1, 1, 0), (1, 1, 1, 1, 0)),
    "T36": KrcadinacParams((1, 1, 1, 1, 1), (1, 1, 1, 1, 0)),
    "T18": KrcadinacParams((1, 1, 1, 1, 1), (1, 1, 1, 0, 0)),
}


def krcadinac_T(p: KrcadinacParams | str) -> Scheme:
    """10 x 10 Z_3-scheme: alpha/beta diagonal, L^(3) upper right, its negated transpose lower left."""
    if isinstance(p, str):
        p = KRCADINAC[p]
    grid = [[BLANK] * 10 for _ in range(10)]
    for i in range(5):
        grid[i][i] = ResidueSet(3, (p.alpha[i],))
        grid[5 + i][5 + i] = ResidueSet(3, (p.beta[i],))
        for j in range(5):
            z = L3_TABLE[i][j]
            if z is not None:
                grid[i][5 + j] = ResidueSet(3, (z,))
                grid[5 + j][i] = ResidueSet(3, ((-z) % 3,))
    return Scheme(3, grid)


def _check_pairs(S: Scheme, n_pairs: int):
    """Consecutive row pairs and column pairs must never both be non-blank in one cell."""
    for l in range(n_pairs):
        a, b = 2 * l, 2 * l + 1
        for k in range(S.shape[1]):
            if S.entries[a][k] is not BLANK and S.entries[b][k] is not BLANK:
                raise SchemeError(f"rows {a},{b} overlap in column {k}")
        for k in range(S.shape[0]):
            if S.entries[k][a] is not BLANK and S.entries[k][b] is not BLANK:
                raise SchemeError(f"columns {a},{b} overlap in row {k}")


def krcadinac_V(T: Scheme) -> Scheme:
    """T with rows and columns reordered so that pairs (2l, 2l+1) are non-overlapping."""
    if T.shape != (10, 10) or T.mu != 3:
        raise SchemeError("krcadinac_V expects a 10 x 10 Z_3-scheme")
    V = T.permuted(V_ORDER, V_ORDER)
    _check_pairs(V, 5)
    return V


def krcadinac_families(n_classes: int = 5) -> tuple[list[list[int]], list[list[int]]]:
    """Point and line classes Pi_l, Lambda_l of blow_up(V(T)): rows/cols 6l .. 6l+5."""
    cls = [list(range(6 * l, 6 * l + 6)) for l in range(n_classes)]
    return cls, [c[:] for c in cls]


def krcadinac_V_prime(T: Scheme, eta: int, zeta: int) -> Scheme:
    """Close classes 1..4 of V(T) with four new points and lines.

    Row pair l (l = 0..3) gets c^4_{l+1} in the new column, column pair l
    gets r^4_{l+1} in the new row, and the diagonal cells of class 5 become
    {alpha_5, eta} and {beta_5, zeta}.
    """
    V = krcadinac_V(T)
    grid = [list(row) for row in V.entries]
    a5 = V.entries[8][8]
    b5 = V.entries[9][9]
    grid[8][8] = ResidueSet.of(3, list(a5) + [eta])
    grid[9][9] = ResidueSet.of(3, list(b5) + [zeta])
    for r in range(10):
        grid[r].append(ColSym(4, r // 2 + 1) if r < 8 else BLANK)
    grid.append([RowSym(4, c // 2 + 1) if c < 8 else BLANK for c in range(10)] + [BLANK])
    sizes = (3,) * 10 + (4,)
    return Scheme(3, grid, sizes, sizes)


def krcadinac_35(T: Scheme) -> Scheme:
    """Close all five classes of V(T): a (35_6) configuration."""
    V = krcadinac_V(T)
    grid = [list(row) + [ColSym(5, r // 2 + 1)] for r, row in enumerate(V.entries)]
    grid.append([RowSym(5, c // 2 + 1) for c in range(10)] + [BLANK])
    sizes = (3,) * 10 + (5,)
    return Scheme(3, grid, sizes, sizes)


def cyclic_config(D: ResidueSet | tuple, n: int | None = None) -> IncidenceStructure:
    """Points Z_n, lines D + c for c in Z_n; rows are points, column c is line D + c."""
    if not isinstance(D, ResidueSet):
        if n is None:
            raise ValueError("modulus n required for a plain residue list")
        D = ResidueSet.of(n, D)
    if not dds_check(D).is_dds:
        raise SchemeError(f"{D} is not a deficient cyclic difference set mod {D.modulus}")
    n = D.modulus
    C = np.zeros((n, n), dtype=np.uint8)
    for c in range(n):
        for d in D:
            C[(d + c) % n, c] = 1
    return IncidenceStructure(C)
