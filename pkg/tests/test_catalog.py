import numpy as np
import pytest

from oracles import has_j2
from zmu.catalog import (KRCADINAC, NAMES, KrcadinacParams, NamedScheme,
                         PropertyError, balbuena_minor, cyclic_config,
                         krcadinac_35, krcadinac_families, krcadinac_T,
                         krcadinac_V, krcadinac_V_prime, named, robertson_hs)
from zmu.cyclic_core import (ResidueSet, SchemeError, blow_up, extract_scheme,
                             is_j2_free_scheme, valency)
from zmu.graphs import config_params, girth, levi, regular_degree
from zmu.iso import aut_order
from zmu.semiplanes import construct_L


@pytest.mark.parametrize("name", NAMES)
def test_fixture_loads_and_checks(name):
    ns = named(name)
    assert ns.check() == []
    assert ns.matrix().shape == ns.order


def test_unknown_name():
    with pytest.raises(KeyError):
        named("nonesuch")


def test_check_reports_corruption():
    ns = named("T98")
    S = ns.scheme
    grid = [list(r) for r in S.entries]
    j = next(j for j in range(S.shape[1]) if S.sets(0, j))
    cell = set(S.sets(0, j))
    cell.add(next(a for a in range(7) if a not in cell))
    grid[0][j] = ResidueSet(7, tuple(cell))
    bad = NamedScheme("T98", type(S)(7, grid), ns.order, ns.valency).check()
    assert any("valency" in b for b in bad)


def test_property_error_is_assertion():
    assert issubclass(PropertyError, AssertionError)


def test_fixture_details():
    assert named("T98").valency == (10, 10)
    B = named("reye").matrix()
    assert set(B.sum(axis=0)) == {3} and set(B.sum(axis=1)) == {4}
    assert named("L6").scheme == construct_L(7, generator=3)
    assert named("L3").scheme == construct_L(4, generator=3)


def test_affine_plane_not_polycyclic():
    B = named("affine_9_4_12_3").matrix()
    assert config_params(B) == (9, 4, 12, 3) and not has_j2(B)
    with pytest.raises(SchemeError):
        extract_scheme(B, 3)


def test_t50_is_robertson():
    A = robertson_hs()
    assert np.array_equal(named("T50").matrix(), A)
    assert regular_degree(A) == 7 and girth(A).length == 5


def test_t96_claims():
    ns = named("T96")
    assert ns.girth == 3 and ns.claimed_girth == 5


@pytest.mark.parametrize("q", [4, 5, 7, 8, 9])
@pytest.mark.parametrize("variant, drop", [("M", 1), ("N", 2)])
def test_balbuena(q, variant, drop):
    S = balbuena_minor(q, variant)
    B = blow_up(S)
    n = q * q - q - drop
    assert B.shape == (n, n)
    assert valency(S) == (q - 1, q - 1)
    assert not has_j2(B)
    g = girth(levi(B))
    assert g.acyclic or g.length >= 6


def test_balbuena_bad_args():
    with pytest.raises(ValueError):
        balbuena_minor(5, "X")
    with pytest.raises(SchemeError):
        balbuena_minor(3, "N")


def test_balbuena_n5_levi():
    L = levi(blow_up(balbuena_minor(5, "N")))
    assert L.shape == (36, 36) and regular_degree(L) == 4


def test_params():
    p = KrcadinacParams.parse("11111", "11100")
    assert p == KRCADINAC["T18"]
    assert p.star_holds()
    assert not KrcadinacParams((0,) * 5, (0,) * 5).star_holds()
    with pytest.raises(ValueError):
        KrcadinacParams((1, 1), (1, 1))


@pytest.mark.parametrize("name", list(KRCADINAC))
def test_krcadinac_T(name):
    S = krcadinac_T(name)
    assert S == krcadinac_T(KRCADINAC[name])
    B = blow_up(S)
    assert config_params(B) == (30, 5, 30, 5)
    assert is_j2_free_scheme(S)[0] and not has_j2(B)


def test_star_violation_has_j2():
    assert has_j2(blow_up(krcadinac_T(KrcadinacParams((0,) * 5, (0,) * 5))))


def test_V_is_reordering():
    T = krcadinac_T("T72")
    V = krcadinac_V(T)
    # a relabelling of T, so the group is unchanged
    assert aut_order(blow_up(V)).order == 72
    with pytest.raises(SchemeError):
        krcadinac_V(construct_L(4))


def test_V_prime():
    T = krcadinac_T("T360")
    good = blow_up(krcadinac_V_prime(T, 0, 0))
    assert config_params(good) == (34, 6, 34, 6) and not has_j2(good)
    assert has_j2(blow_up(krcadinac_V_prime(T, 2, 2)))
    assert config_params(blow_up(krcadinac_V_prime(krcadinac_T("T72"), 1, 1))) == (34, 6, 34, 6)


def test_families():
    pts, lines = krcadinac_families()
    assert pts[1] == list(range(6, 12)) and len(lines) == 5


@pytest.mark.parametrize("name, order", [("T360", 360), ("T18", 18)])
def test_closure_35(name, order):
    B = blow_up(krcadinac_35(krcadinac_T(name)))
    assert config_params(B) == (35, 6, 35, 6) and not has_j2(B)
    assert aut_order(B).order == order


def test_cyclic_config():
    I = cyclic_config((0, 1, 8, 11, 13, 17), 35)
    assert I.params == (35, 6, 35, 6)
    assert I.incidence[1, 0] == 1 and I.incidence[2, 1] == 1
    assert cyclic_config(ResidueSet(7, (0, 1, 3))).params == (7, 3, 7, 3)
    with pytest.raises(SchemeError):
        cyclic_config((0, 1, 2), 5)
    with pytest.raises(ValueError):
        cyclic_config((0, 1, 3))
