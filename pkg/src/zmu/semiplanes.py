"""Elliptic semiplanes of types L and C as (mixed) Z_mu-schemes."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .cyclic_core import (BLANK, ColSym, Raw, ResidueSet, RowSym, Scheme,
                          SchemeError, binary_matrix, is_j2_free_matrix)
from .galois import Field, build_field, position_scheme, prime_power

__all__ = ["SemiplaneParams", "construct_L", "construct_C", "construct_C_mix",
           "l_field", "is_elliptic_semiplane"]


@dataclass(frozen=True)
class SemiplaneParams:
    q: int
    family: str
    generator: int | None = None
    sign: str = "minus"

    def build(self) -> Scheme:
        if self.family == "L":
            return construct_L(self.q, self.generator, self.sign)
        if self.family == "C":
            return construct_C(self.q, self.generator)
        if self.family == "C_mix":
            return construct_C_mix(self.q, generator=self.generator, sign=self.sign)
        raise ValueError(f"unknown semiplane family {self.family!r}")


def l_field(q: int, generator: int | None = None) -> Field:
    p, nu = prime_power(q)
    return build_field(p, nu, y=generator)


def construct_L(q: int, generator: int | None = None, sign: str = "minus") -> Scheme:
    """The simple Z_{q-1}-scheme L^(q-1) of order q + 1 and valency q.

    Off the diagonal, entry (i, j) for i, j < q is -z (``sign="minus"``) or
    z (``sign="plus"``) where x_i - x_j = y^z; the last row and column are
    {0} and the diagonal is blank.
    """
    if sign not in ("minus", "plus"):
        raise ValueError("sign must be 'minus' or 'plus'")
    F = l_field(q, generator)
    if q < 3:
        raise SchemeError("L^(q-1) needs q >= 3")
    mu = q - 1
    s = -1 if sign == "minus" else 1
    grid = []
    for i in range(q + 1):
        row = []
        for j in range(q + 1):
            if i == j:
                row.append(BLANK)
            elif i == q or j == q:
                row.append(ResidueSet(mu, (0,)))
            else:
                row.append(ResidueSet.of(mu, [s * F.log[F.sub(i, j)]]))
        grid.append(row)
    return Scheme(mu, grid)


def construct_C(q: int, generator: int | None = None) -> Scheme:
    """The simple Z_p-scheme C^(p) of order p^(2nu-1) and valency q.

    Block (I, J) is the position scheme of gamma_IJ, where gamma is the
    quotient table of GF(q)* bordered by a zero row and column.
    """
    p, nu = prime_power(q)
    F = build_field(p, nu, y=generator)
    s = q // p
    gamma = np.zeros((q, q), dtype=np.int64)
    for i in range(q - 1):
        for j in range(q - 1):
            gamma[i, j] = F.power(i - j)
    blocks = {x: position_scheme(F, x) for x in set(gamma.flatten().tolist())}
    grid = [[None] * (q * s) for _ in range(q * s)]
    for I in range(q):
        for J in range(q):
            P = blocks[int(gamma[I, J])]
            for a in range(s):
                for b in range(s):
                    grid[I * s + a][J * s + b] = P.entries[a][b]
    return Scheme(p, grid)


def construct_C_mix(q: int, corner=None, generator: int | None = None, sign: str = "minus") -> Scheme:
    """Mixed Z_{q-1}-scheme for the type-C semiplane of order q^2.

    L^(q-1) without its last row and column, bordered by c^q_i / r^q_i
    symbols (identity index choices) and a raw corner, the identity of
    order q unless ``corner`` says otherwise.
    """
    L = construct_L(q, generator, sign)
    mu = q - 1
    corner = np.eye(q, dtype=np.uint8) if corner is None else binary_matrix(corner)
    grid = [list(L.entries[i][:q]) + [ColSym(q, i + 1)] for i in range(q)]
    grid.append([RowSym(q, j + 1) for j in range(q)] + [Raw.from_matrix(corner, "e")])
    return Scheme(mu, grid, (mu,) * q + (q,), (mu,) * q + (q,))


def is_elliptic_semiplane(incidence) -> bool:
    """At most one parallel through each non-incident point-line pair, both ways.

    Rows of ``incidence`` are points, columns lines; an
    :class:`~zmu.graphs.IncidenceStructure` works too.
    """
    C = binary_matrix(getattr(incidence, "incidence", incidence)).astype(np.int64)
    ok, _ = is_j2_free_matrix(C)
    if not ok:
        raise SchemeError("not a configuration: incidence matrix contains J2")
    m, n = C.shape
    lines_parallel = (C.T @ C == 0).astype(np.int64)  # lines sharing no point
    np.fill_diagonal(lines_parallel, 0)
    points_parallel = (C @ C.T == 0).astype(np.int64)  # points sharing no line
    np.fill_diagonal(points_parallel, 0)
    through_point = C @ lines_parallel      # (p, L): lines on p parallel to L
    on_line = points_parallel @ C           # (p, L): points on L parallel to p
    off = C == 0
    return bool((through_point[off] <= 1).all() and (on_line[off] <= 1).all())
