import numpy as np
import pytest
from hypothesis import given, strategies as st

from conftest import THOROUGH, pure_schemes, residue_sets
from oracles import circulant_by_rule, has_j2
from zmu.catalog import named
from zmu.cyclic_core import (BLANK, ColSym, ExtractionError, Raw, ResidueSet,
                             RowSym, Scheme, SchemeError, bipartite_double,
                             blow_up, circulant, circulant_inverse, dds_check,
                             extract_scheme, is_admissible, is_j2_free_matrix,
                             is_j2_free_scheme, is_skew_symmetric,
                             scheme_transpose_negate, valency)
from zmu.semiplanes import construct_L

PETERSEN = Scheme(5, [[{1, 4}, {0}], [{0}, {2, 3}]])


def rows(*bits):
    return np.array([[int(c) for c in r] for r in bits], dtype=np.uint8)


class TestResidueSet:
    def test_sorted_and_deduplicated(self):
        assert ResidueSet(7, (5, 1, 5, 3)).members == (1, 3, 5)

    def test_out_of_range_rejected(self):
        with pytest.raises(SchemeError):
            ResidueSet(5, (5,))

    def test_of_reduces(self):
        assert ResidueSet.of(5, [-1, 6]) == ResidueSet(5, (1, 4))

    def test_str(self):
        assert str(ResidueSet(5, (1, 4))) == "1,4"
        assert str(ResidueSet(5, ())) == "-"


class TestCirculant:
    def test_hand_computed(self):
        expected = rows("01001", "10100", "01010", "00101", "10010")
        assert np.array_equal(circulant(5, ResidueSet(5, (1, 4))), expected)

    def test_empty_is_zero(self):
        assert not circulant(6, ResidueSet(6, ())).any()

    def test_full_is_all_ones(self):
        assert circulant(3, ResidueSet(3, (0, 1, 2))).all()

    def test_modulus_mismatch(self):
        with pytest.raises(SchemeError):
            circulant(4, ResidueSet(5, (1,)))

    def test_inverse_examples(self):
        assert circulant_inverse(np.eye(4, dtype=np.uint8)) == ResidueSet(4, (0,))
        assert circulant_inverse(np.zeros((6, 6), dtype=np.uint8)) == ResidueSet(6, ())
        assert circulant_inverse(circulant(7, ResidueSet(7, (2, 3, 5)))) == ResidueSet(7, (2, 3, 5))

    def test_inverse_rejects_non_circulant(self):
        with pytest.raises(SchemeError):
            circulant_inverse(rows("10", "11"))

    @THOROUGH
    @given(residue_sets())
    def test_round_trip_and_rule(self, C):
        B = circulant(C.modulus, C)
        assert np.array_equal(B, circulant_by_rule(C.modulus, set(C.members)))
        assert circulant_inverse(B) == C


class TestScheme:
    def test_coercion(self):
        S = Scheme(5, [[None, 3, (1, 2)], [set(), {0}, BLANK]])
        assert S.entries[0][0] is BLANK and S.entries[1][0] is BLANK
        assert S.sets(0, 2) == (1, 2)

    def test_dimension_rules(self):
        with pytest.raises(SchemeError):
            Scheme(3, [[ColSym(2, 1)]])  # needs a 3x2 slot
        S = Scheme(3, [[ColSym(2, 1)]], (3,), (2,))
        assert blow_up(S).shape == (3, 2)
        with pytest.raises(SchemeError):
            RowSym(3, 4)
        with pytest.raises(SchemeError):
            Scheme(3, [[Raw(((1, 0),))]], (2,), (2,))

    def test_symbol_blocks(self):
        S = Scheme(3, [[RowSym(2, 2), Raw(((1, 1), (0, 1)))]], (2,), (3, 2))
        assert np.array_equal(blow_up(S), rows("00011", "11101"))
        C = Scheme(3, [[ColSym(2, 1)]], (3,), (2,))
        assert np.array_equal(blow_up(C), rows("10", "10", "10"))

    def test_blank_blow_up(self):
        assert not blow_up(Scheme(4, [[None]])).any()

    def test_petersen(self):
        B = blow_up(PETERSEN)
        assert B.shape == (10, 10)
        assert np.array_equal(B, B.T)
        assert set(B.sum(axis=1)) == {3}

    def test_cremona_richmond_sums(self):
        B = named("cremona_richmond").matrix()
        assert set(B.sum(axis=0)) == set(B.sum(axis=1)) == {3}

    def test_permuted(self):
        S = Scheme(5, [[1, 2], [3, 4]])
        assert S.permuted([1, 0], [1, 0]).entries[0][0] == ResidueSet(5, (4,))

    @THOROUGH
    @given(pure_schemes())
    def test_blow_up_dimensions(self, S):
        assert blow_up(S).shape == (sum(S.row_heights), sum(S.col_widths))


class TestExtract:
    def test_round_trips(self):
        for S in (named("cremona_richmond").scheme, construct_L(7)):
            assert extract_scheme(blow_up(S), S.mu) == S

    def test_affine_plane_fails_on_closure_columns(self):
        B = named("affine_9_4_12_3").matrix()
        with pytest.raises(ExtractionError) as err:
            extract_scheme(B, 3)
        assert err.value.block[1] == 3

    def test_bad_dimensions(self):
        with pytest.raises(ExtractionError):
            extract_scheme(np.zeros((4, 6), dtype=np.uint8), 4)

    @THOROUGH
    @given(pure_schemes())
    def test_round_trip_property(self, S):
        assert extract_scheme(blow_up(S), S.mu) == S


class TestValency:
    def test_examples(self):
        assert valency(PETERSEN) == (3, 3)
        assert valency(named("T98").scheme) == (10, 10)
        assert valency(Scheme(5, [[{0, 2}]])) == (2, 2)

    def test_irregular(self):
        assert valency(Scheme(5, [[{0, 2}, None]])) is None


class TestJ2:
    def test_matrix_examples(self):
        ok, w = is_j2_free_matrix(np.ones((2, 2), dtype=np.uint8))
        assert not ok and w.rows == (0, 1) and w.cols == (0, 1)
        assert is_j2_free_matrix(np.eye(5, dtype=np.uint8))[0]
        assert is_j2_free_matrix(named("T98").matrix())[0]

    def test_single_two_set_is_j2_free(self):
        # Two ones per row of a 3x3 circulant never share two columns.
        S = Scheme(3, [[{0, 1}]])
        assert not has_j2(blow_up(S))
        assert is_j2_free_scheme(S)[0]

    def test_scheme_examples(self):
        assert is_j2_free_scheme(construct_L(7))[0]
        assert is_j2_free_scheme(Scheme(2, [[{0}]]))[0]

    def test_witness_is_genuine(self):
        S = Scheme(6, [[{0, 1}, {0, 1}]])
        ok, w = is_j2_free_scheme(S)
        assert not ok
        assert (w.a - w.b + w.c - w.d) % 6 == 0
        assert w.a in S.sets(w.i, w.j) and w.b in S.sets(w.i, w.h)
        assert w.c in S.sets(w.g, w.h) and w.d in S.sets(w.g, w.j)

    def test_mixed_rejected(self):
        S = Scheme(3, [[0, ColSym(3, 1)]], (3,), (3, 3))
        with pytest.raises(SchemeError):
            is_j2_free_scheme(S)

    @THOROUGH
    @given(pure_schemes())
    def test_criterion_matches_matrix(self, S):
        B = blow_up(S)
        crit = is_j2_free_scheme(S)[0]
        assert crit == is_j2_free_matrix(B)[0] == (not has_j2(B))

    @THOROUGH
    @given(pure_schemes(max_entry=4))
    def test_entries_of_j2_free_schemes(self, S):
        if not is_j2_free_scheme(S)[0]:
            return
        mu = S.mu
        m, n = S.shape
        for i in range(m):
            for j in range(n):
                if S.sets(i, j):
                    assert dds_check(ResidueSet(mu, S.sets(i, j))).is_dds
        # differences covered by different entries of one row are disjoint
        for i in range(m):
            seen = set()
            for j in range(n):
                diffs = {(a - b) % mu for a in S.sets(i, j) for b in S.sets(i, j) if a != b}
                assert not diffs & seen
                seen |= diffs


class TestDDS:
    def test_examples(self):
        assert dds_check(ResidueSet(35, (0, 1, 8, 11, 13, 17))).is_dds
        assert not dds_check(ResidueSet(5, (0, 1, 2))).is_dds
        rep = dds_check(ResidueSet(7, (0, 1, 3)))
        assert rep.is_dds and rep.deficiency == 0 and rep.covered == (1, 2, 3, 4, 5, 6)

    def test_deficiency(self):
        assert dds_check(ResidueSet(35, (0, 1, 8, 11, 13, 17))).deficiency == 4
        assert dds_check(ResidueSet(5, (0, 1, 2))).deficiency is None


class TestSkew:
    def test_transpose_negate(self):
        L6 = named("L6").scheme
        T96 = named("T96").scheme
        lower = scheme_transpose_negate(L6)
        for i in range(8):
            for j in range(8):
                assert lower.entries[i][j] == T96.entries[8 + i][j]
        assert scheme_transpose_negate(Scheme(4, [[{0}]])) == Scheme(4, [[{0}]])
        assert scheme_transpose_negate(PETERSEN) == PETERSEN

    def test_predicates(self):
        assert is_skew_symmetric(PETERSEN) and is_admissible(PETERSEN)
        assert is_skew_symmetric(Scheme(3, [[{0}]])) and not is_admissible(Scheme(3, [[{0}]]))
        T96 = named("T96").scheme
        assert is_skew_symmetric(T96) and is_admissible(T96)

    def test_non_square(self):
        with pytest.raises(SchemeError):
            is_skew_symmetric(Scheme(3, [[1, 2]]))

    def test_bipartite_double(self):
        D = bipartite_double(named("cremona_richmond").scheme)
        assert D.shape == (6, 6) and is_admissible(D)
        assert bipartite_double(Scheme(3, [[None]])) == Scheme(3, [[None, None], [None, None]])
        assert bipartite_double(Scheme(3, [[{1}]])) == Scheme(3, [[None, {1}], [{2}, None]])

    @THOROUGH
    @given(pure_schemes(square=True))
    def test_symmetry_matches_skew(self, S):
        B = blow_up(S)
        assert np.array_equal(B, B.T) == is_skew_symmetric(S)
        zero_diag = not B.diagonal().any()
        assert zero_diag == all(0 not in S.sets(i, i) for i in range(S.shape[0]))
