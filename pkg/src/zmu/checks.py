"""The list of named checks behind ``zmu verify``.

Each check is a zero-argument callable returning ``(passed, detail)``.
Fixture lookups go through :class:`_Fixtures` so that a corrupted table can
be substituted for any named one.
"""

from __future__ import annotations


import numpy as np

from . import catalog
from .catalog import (KRCADINAC, balbuena_minor, cyclic_config, krcadinac_35,
                      krcadinac_families, krcadinac_T, krcadinac_V,
                      krcadinac_V_prime, robertson_hs)
from .cyclic_core import (Scheme, blow_up, extract_scheme, is_j2_free_matrix,
                          is_j2_free_scheme, valency)
from .graphs import config_params, girth, is_connected, is_cycle, levi
from .iso import are_isomorphic, aut_order, family_invariance
from .semiplanes import (construct_C, construct_C_mix, construct_L,
                         is_elliptic_semiplane)
from .voltage import VoltageGraph, lift


class _Fixtures:
    def __init__(self, overrides: dict[str, Scheme]):
        self.overrides = overrides

    def get(self, name: str) -> catalog.NamedScheme:
        if name in self.overrides:
            base = catalog._EXPECTED[name]
            order, val, graph, g, note = base
            claimed = 5 if name == "T96" else g
            return catalog.NamedScheme(name, self.overrides[name], order, val, True, graph, g,
                                       note=note, claimed_girth=claimed)
        return catalog.named(name)


def _fixture_check(fx: _Fixtures, name: str):
    def run():
        ns = fx.get(name)
        bad = ns.check()
        return not bad, "; ".join(bad) or ns.note
    return run


def _petersen(fx):
    B = fx.get("petersen").matrix()
    dumbbell = VoltageGraph(5, 2, ((0, 0, 1), (0, 1, 0), (1, 1, 2)))
    same = np.array_equal(B, lift(dumbbell))
    g = girth(B).length
    ok = B.shape == (10, 10) and set(B.sum(axis=1)) == {3} and g == 5 and is_connected(B) and same
    return ok, f"girth {g}, lift(dumbbell) equal: {same}"


def _cremona(fx):
    S = fx.get("cremona_richmond").scheme
    B = blow_up(S)
    back = extract_scheme(B, 5) == S
    return config_params(B) == (15, 3, 15, 3) and is_j2_free_matrix(B)[0] and back, f"params {config_params(B)}"


def _reye(fx):
    B = fx.get("reye").matrix()
    return config_params(B) == (12, 4, 16, 3) and is_j2_free_matrix(B)[0], f"params {config_params(B)}"


def _t98(fx):
    S = fx.get("T98").scheme
    B = blow_up(S)
    ok = config_params(B) == (98, 10, 98, 10) and is_j2_free_scheme(S)[0] and is_j2_free_matrix(B)[0]
    return ok, f"params {config_params(B)}"


def _l6(fx):
    S = construct_L(7, generator=3, sign="minus")
    same = S == fx.get("L6").scheme
    return same and is_j2_free_scheme(S)[0] and valency(S) == (7, 7), f"matches table: {same}"


def _sc():
    out = []
    for q, (p, nu) in {2: (2, 1), 3: (3, 1), 4: (2, 2), 5: (5, 1), 8: (2, 3), 9: (3, 2)}.items():
        S = construct_C(q)
        B = blow_up(S)
        ok = (S.shape == (p ** (2 * nu - 1),) * 2 and config_params(B) == (q * q, q, q * q, q)
              and is_j2_free_scheme(S)[0])
        if q <= 5:
            ok = ok and is_elliptic_semiplane(B)
        out.append(ok)
    return all(out), f"q in 2,3,4,5,8,9: {out}"


def _cmix():
    out = []
    for q in (3, 4, 5):
        S = construct_C_mix(q)
        B = blow_up(S)
        out.append(is_j2_free_matrix(B)[0] and config_params(B) == (q * q, q, q * q, q))
    iso = are_isomorphic(blow_up(construct_C_mix(5)), blow_up(construct_C(5)))
    return all(out) and iso, f"q=3,4,5 {out}; q=5 isomorphic to C(5): {iso}"


def _t50(fx):
    B = fx.get("T50").matrix()
    same = np.array_equal(B, robertson_hs())
    g = girth(B).length
    return same and B.shape == (50, 50) and set(B.sum(axis=1)) == {7} and g == 5, f"girth {g}, equals pentagram rule: {same}"


def _t96(fx):
    ns = fx.get("T96")
    B = ns.matrix()
    g = girth(B)
    witness = is_cycle(B, [0, 1, 2, 90, 92])
    ok = (B.shape == (96, 96) and set(B.sum(axis=1)) == {9} and witness
          and g.length == ns.claimed_girth)
    return ok, f"girth {g.length} (claimed {ns.claimed_girth}), witness 5-cycle: {witness}"


def _balbuena():
    out = []
    for q in (4, 5, 7, 8, 9):
        for v, d in (("M", 1), ("N", 2)):
            S = balbuena_minor(q, v)
            B = blow_up(S)
            n = q * q - q - d
            G = girth(levi(B))
            out.append(B.shape == (n, n) and valency(S) == (q - 1, q - 1)
                       and is_j2_free_matrix(B)[0] and (G.acyclic or G.length >= 6))
    return all(out), f"{sum(out)}/{len(out)} minors ok"


def _krcadinac():
    mats = {k: blow_up(krcadinac_T(p)) for k, p in KRCADINAC.items()}
    orders = {k: aut_order(B).order for k, B in mats.items()}
    configs = all(config_params(B) == (30, 5, 30, 5) and is_j2_free_matrix(B)[0] for B in mats.values())
    names = list(mats)
    distinct = all(not are_isomorphic(mats[a], mats[b]) for i, a in enumerate(names) for b in names[i + 1:])
    pairs = {"T360": (0, 0), "T72": (1, 1), "T36": (0, 1)}
    closed = [blow_up(krcadinac_V_prime(krcadinac_T(KRCADINAC[k]), *pairs[k])) for k in pairs]
    same = all(are_isomorphic(closed[0], B) for B in closed[1:])
    o34 = aut_order(closed[0]).order
    ok = configs and distinct and orders == {"T360": 360, "T72": 72, "T36": 36, "T18": 18} and same and o34 == 72
    return ok, f"orders {orders}, pairwise distinct {distinct}, (34_6) products isomorphic {same}, |Aut| {o34}"


def _searches():
    from .search import search_eta_zeta, search_star_solutions
    rep = search_star_solutions()
    orders = sorted(c.aut_order for c in rep.classes)
    ez = {k: search_eta_zeta(k).survivors for k in ("T360", "T72", "T36")}
    ok = len(rep.classes) == 4 and orders == [18, 36, 72, 360] and ez == {
        "T360": [(0, 0)], "T72": [(1, 1)], "T36": [(0, 1)]}
    return ok, f"{len(rep.survivors)} solutions in {len(rep.classes)} classes {orders}; eta/zeta {ez}"


def _family35():
    orders, inv = {}, []
    fam = krcadinac_families()
    for k, p in KRCADINAC.items():
        T = krcadinac_T(p)
        orders[k] = aut_order(blow_up(krcadinac_35(T))).order
        inv.append(family_invariance(blow_up(krcadinac_V(T)), fam))
    ok = orders == {"T360": 360, "T72": 72, "T36": 36, "T18": 18} and all(inv)
    return ok, f"orders {orders}, families invariant {inv}"


def _census(fx):
    from .search import census_cyclic
    rep = census_cyclic(35, 6)
    orders = sorted(c.aut_order for c in rep.classes)
    g = cyclic_config((0, 1, 8, 11, 13, 17), 35)
    mpw = cyclic_config((0, 1, 3, 7, 12, 20), 35)
    fln = are_isomorphic(fx.get("fln35").matrix(), cyclic_config((0, 1, 8, 12, 14, 17), 35))
    ok = orders == [35, 140] and are_isomorphic(g, mpw) and fln
    return ok, f"{len(rep.survivors)} difference sets, class orders {orders}, fln35 cyclic: {fln}"


def all_checks(overrides: dict[str, Scheme], include_searches: bool = True):
    fx = _Fixtures(overrides)
    checks = [(f"fixture {name}", _fixture_check(fx, name)) for name in catalog.NAMES]
    checks += [
        ("petersen", lambda: _petersen(fx)),
        ("cremona-richmond", lambda: _cremona(fx)),
        ("reye", lambda: _reye(fx)),
        ("T98", lambda: _t98(fx)),
        ("L6", lambda: _l6(fx)),
        ("type-C semiplanes", _sc),
        ("mixed type-C semiplanes", _cmix),
        ("T50 Hoffman-Singleton", lambda: _t50(fx)),
        ("T96 girth 5", lambda: _t96(fx)),
        ("Balbuena minors", _balbuena),
        ("(30_5) family and (34_6)", _krcadinac),
        ("(35_6) closures", _family35),
    ]
    if include_searches:
        checks += [
            ("star and eta/zeta searches", _searches),
            ("cyclic (35_6) census", lambda: _census(fx)),
        ]
    return checks
