"""Exhaustive searches and the all-fixtures verification run.

Every search follows the same shape: enumerate candidates, keep the ones
passing a cheap filter, then sort survivors into isomorphism classes by
canonical form.  Candidate lists can be split over worker processes; the
split is static and results are merged in candidate order, so reports do
not depend on the worker count.
"""

from __future__ import annotations

import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations, product
from typing import Callable

import numpy as np

from .catalog import (KRCADINAC, KrcadinacParams, cyclic_config, krcadinac_T,
                      krcadinac_V_prime)
from .cyclic_core import ResidueSet, Scheme, blow_up, dds_check, is_j2_free_matrix
from .graphs import config_params
from .iso import aut_order, canonical_form

__all__ = ["IsoClass", "SearchReport", "classify", "search_star_solutions",
           "search_eta_zeta", "census_cyclic", "census_bound", "CheckResult",
           "verify_suite", "SearchError"]


class SearchError(ValueError):
    pass


@dataclass
class IsoClass:
    representative: object
    canonical: np.ndarray = field(repr=False)
    members: list = field(default_factory=list)
    aut_order: int | None = None


@dataclass
class SearchReport:
    name: str
    candidates: int
    survivors: list
    classes: list[IsoClass]
    seconds: float = 0.0

    def summary(self) -> dict:
        return {
            "search": self.name,
            "candidates": self.candidates,
            "survivors": len(self.survivors),
            "classes": len(self.classes),
            "aut_orders": [c.aut_order for c in self.classes],
            "representatives": [_label(c.representative) for c in self.classes],
            "seconds": round(self.seconds, 3),
        }

    def lines(self) -> list[str]:
        out = [f"{self.name}: {self.candidates} candidates, {len(self.survivors)} survivors, "
               f"{len(self.classes)} classes"]
        for k, c in enumerate(self.classes):
            out.append(f"  class {k}: |Aut| = {c.aut_order}, {len(c.members)} members, "
                       f"representative {_label(c.representative)}")
        return out


def _label(x) -> str:
    if isinstance(x, KrcadinacParams):
        s = "alpha=" + "".join(map(str, x.alpha)) + " beta=" + "".join(map(str, x.beta))
        if x.eta is not None:
            s += f" eta={x.eta} zeta={x.zeta}"
        return s
    if isinstance(x, ResidueSet):
        return "{" + ",".join(map(str, x.members)) + f"}} mod {x.modulus}"
    return str(x)


def _map(fn: Callable, items: list, workers: int) -> list:
    if workers <= 1 or len(items) < 2 * workers:
        return [fn(x) for x in items]
    size = math.ceil(len(items) / workers)
    chunks = [items[i:i + size] for i in range(0, len(items), size)]
    with ProcessPoolExecutor(workers) as pool:
        parts = list(pool.map(_apply_chunk, [fn] * len(chunks), chunks))
    return [y for part in parts for y in part]


def _apply_chunk(fn, chunk):
    return [fn(x) for x in chunk]


def _canon_bytes(C: np.ndarray) -> bytes:
    K = canonical_form(C)
    return bytes(str(K.shape), "ascii") + np.packbits(K).tobytes()


def classify(items: list, matrices: list[np.ndarray], workers: int = 1,
             with_aut: bool = True) -> list[IsoClass]:
    """Group items by canonical form of their incidence matrices, in first-seen order."""
    keys = _map(_canon_bytes, matrices, workers)
    classes: dict[bytes, IsoClass] = {}
    first: dict[bytes, int] = {}
    for idx, (item, M, key) in enumerate(zip(items, matrices, keys)):
        if key not in classes:
            classes[key] = IsoClass(item, canonical_form(M))
            first[key] = idx
        classes[key].members.append(item)
    if with_aut:
        for key, c in classes.items():
            c.aut_order = aut_order(matrices[first[key]]).order
    return list(classes.values())


def search_star_solutions(workers: int = 1) -> SearchReport:
    """All (alpha, beta) in Z_3^10 with alpha_i + beta_j != 0 for i != j, up to isomorphism."""
    t0 = time.perf_counter()
    candidates = 0
    survivors = []
    for digits in product(range(3), repeat=10):
        candidates += 1
        p = KrcadinacParams(digits[:5], digits[5:])
        if p.star_holds():
            survivors.append(p)
    mats = [blow_up(krcadinac_T(p)) for p in survivors]
    classes = classify(survivors, mats, workers)
    classes.sort(key=lambda c: -c.aut_order)
    return SearchReport("star", candidates, survivors, classes, time.perf_counter() - t0)


def search_eta_zeta(T: Scheme | str) -> SearchReport:
    """Which (eta, zeta) in Z_3^2 close classes 1..4 of T to a (34_6) configuration?

    A survivor must be J2-free and have valency 6; choosing eta = alpha_5
    (or zeta = beta_5) leaves a J2-free but irregular structure, which does
    not count.
    """
    t0 = time.perf_counter()
    if isinstance(T, str):
        T = krcadinac_T(KRCADINAC[T])
    survivors, mats = [], []
    for eta, zeta in product(range(3), repeat=2):
        B = blow_up(krcadinac_V_prime(T, eta, zeta))
        if is_j2_free_matrix(B)[0] and config_params(B) == (34, 6, 34, 6):
            survivors.append((eta, zeta))
            mats.append(B)
    classes = classify(survivors, mats)
    return SearchReport("eta-zeta", 9, survivors, classes, time.perf_counter() - t0)


def census_bound(n: int, k: int) -> bool:
    """k <= 1/2 + sqrt(n - 3/4), i.e. k^2 - k + 1 <= n."""
    return k >= 1 and k * k - k + 1 <= n


def _dds_or_none(args):
    n, rest = args
    D = ResidueSet(n, (0,) + rest)
    return D if dds_check(D).is_dds else None


def census_cyclic(n: int, k: int, workers: int = 1) -> SearchReport:
    """Cyclic (n_k) configurations up to isomorphism, from base lines containing 0."""
    if not census_bound(n, k):
        raise SearchError(f"no deficient cyclic difference set of size {k} mod {n}: need k^2 - k + 1 <= n")
    t0 = time.perf_counter()
    combos = list(combinations(range(1, n), k - 1))
    found = _map(_dds_or_none, [(n, c) for c in combos], workers)
    survivors = [D for D in found if D is not None]
    mats = [cyclic_config(D).incidence for D in survivors]
    classes = classify(survivors, mats, workers)
    classes.sort(key=lambda c: c.aut_order)
    return SearchReport(f"census n={n} k={k}", len(combos), survivors, classes, time.perf_counter() - t0)


# -- verification run ---------------------------------------------------------

@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""

    def line(self) -> str:
        return f"{'PASS' if self.passed else 'FAIL'} {self.name}" + (f": {self.detail}" if self.detail else "")


def _run(name: str, fn: Callable[[], tuple[bool, str]]) -> CheckResult:
    try:
        ok, detail = fn()
    except Exception as exc:  # a crashing check is a failing check
        return CheckResult(name, False, f"{type(exc).__name__}: {exc}")
    return CheckResult(name, bool(ok), detail)


def verify_suite(overrides: dict[str, Scheme] | None = None, include_searches: bool = True) -> list[CheckResult]:
    """Every fixture's expected properties plus the headline claims built on them.

    ``overrides`` swaps in replacement schemes for named fixtures (used to
    check that corrupted tables are caught).
    """
    from . import checks
    return [_run(name, fn) for name, fn in checks.all_checks(overrides or {}, include_searches)]
