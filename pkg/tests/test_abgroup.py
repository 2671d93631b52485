"""Smith normal form and canonical abelian group structure.

Frozen expectations come first and were computed by hand from the
determinantal description of the invariant factors: for [[2, 4], [6, 8]] the
gcd of entries is 2 and the gcd of 2x2 minors is |det| = |16 - 24| = 8, so
the diagonal is (2, 4).
"""
from __future__ import annotations

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import helpers
from susp5.abgroup import FgAbGroup, direct_sum, smith_normal_form


def diag_of(d):
    return [d[i][i] for i in range(min(len(d), len(d[0]) if d else 0))]


def check_snf_laws(a):
    d, u, v = smith_normal_form(a)
    m, n = len(a), len(a[0]) if a else 0
    assert helpers.mat_mul(helpers.mat_mul(u, [list(r) for r in a]), v) == d
    assert abs(helpers.det_int(u)) == 1
    assert abs(helpers.det_int(v)) == 1
    diag = diag_of(d)
    for i in range(m):
        for j in range(n):
            if i != j:
                assert d[i][j] == 0
    for x, y in zip(diag, diag[1:]):
        assert x >= 0 and y >= 0
        if x == 0:
            assert y == 0
        else:
            assert y % x == 0
    return diag


class TestSmithNormalForm:
    def test_frozen_2x2(self):
        assert check_snf_laws([[2, 4], [6, 8]]) == [2, 4]

    def test_frozen_singletons(self):
        assert check_snf_laws([[6]]) == [6]
        assert check_snf_laws([[0]]) == [0]
        assert check_snf_laws([[-7]]) == [7]

    def test_frozen_diagonal_coupling(self):
        # gcd 1, det 6: the chain forces (1, 6) even though the input is (2, 3)
        assert check_snf_laws([[2, 0], [0, 3]]) == [1, 6]

    def test_empty_shapes(self):
        assert smith_normal_form([])[0] == []
        assert check_snf_laws([[], [], []]) == []
        assert check_snf_laws([[0, 0], [0, 0]]) == [0, 0]

    def test_frozen_minor_gcd_agreement(self):
        for a in ([[2, 4], [6, 8]], [[2, 0], [0, 3]], [[1, 2, 3], [4, 5, 6], [7, 8, 9]]):
            d, _, _ = smith_normal_form(a)
            assert diag_of(d) == helpers.minor_gcd_invariants(a)

    @settings(max_examples=200, deadline=None)
    @given(helpers.int_matrices())
    def test_laws_random(self, a):
        check_snf_laws(a)

    @settings(max_examples=200, deadline=None)
    @given(helpers.int_matrices(max_rows=4, max_cols=4, bound=30))
    def test_minor_gcd_oracle_random(self, a):
        d, _, _ = smith_normal_form(a)
        assert diag_of(d) == helpers.minor_gcd_invariants(a)

    @settings(max_examples=150, deadline=None)
    @given(helpers.int_matrices(max_rows=5, max_cols=5, bound=20))
    def test_square_determinant_preserved(self, a):
        if len(a) != (len(a[0]) if a else 0):
            return
        det = helpers.det_int(a)
        if det == 0:
            return
        d, _, _ = smith_normal_form(a)
        assert math.prod(diag_of(d)) == abs(det)

    def test_ragged_rejected(self):
        with pytest.raises(ValueError):
            smith_normal_form([[1, 2], [3]])


class TestPresentations:
    def test_frozen_cokernels(self):
        assert FgAbGroup.from_presentation([[6]]) == FgAbGroup(0, ((2, 1), (3, 1)))
        assert FgAbGroup.from_presentation([[2, 4], [6, 8]]) == FgAbGroup(0, ((2, 1), (2, 2)))
        assert FgAbGroup.from_presentation([[], []]) == FgAbGroup.free(2)
        assert FgAbGroup.from_presentation([[1]]) == FgAbGroup.trivial()
        assert FgAbGroup.from_presentation([[0]]) == FgAbGroup.free(1)
        assert FgAbGroup.from_presentation([]) == FgAbGroup.trivial()

    @settings(max_examples=100, deadline=None)
    @given(helpers.int_matrices(max_rows=4, max_cols=4, bound=10), st.randoms(use_true_random=False))
    def test_unimodular_invariance(self, a, rng):
        """Row/column elementary ops do not change the cokernel."""
        m, n = len(a), len(a[0]) if a else 0
        b = [list(r) for r in a]
        for _ in range(6):
            if m > 1 and rng.random() < 0.5:
                i, k = rng.randrange(m), rng.randrange(m)
                if i != k:
                    q = rng.randrange(-2, 3)
                    for j in range(n):
                        b[i][j] += q * b[k][j]
            elif n > 1:
                j, k = rng.randrange(n), rng.randrange(n)
                if j != k:
                    q = rng.randrange(-2, 3)
                    for i in range(m):
                        b[i][j] += q * b[i][k]
        assert FgAbGroup.from_presentation(a) == FgAbGroup.from_presentation(b)


class TestCanonicalForm:
    def test_composite_orders_split(self):
        assert FgAbGroup.from_orders([6]) == FgAbGroup.from_orders([2, 3])
        assert FgAbGroup.from_orders([12]).torsion == ((2, 2), (3, 1))
        assert FgAbGroup.from_orders([1]).is_trivial

    def test_render_and_parse(self):
        g = FgAbGroup.from_orders([0, 0, 4, 3])
        assert str(g) == "Z^2 + Z/4 + Z/3"
        assert FgAbGroup.from_string("Z^2 + Z/4 + Z/3") == g
        assert FgAbGroup.from_string("Z/2^3") == FgAbGroup(0, ((2, 3),))
        assert FgAbGroup.from_string("0") == FgAbGroup.trivial()
        assert str(FgAbGroup.trivial()) == "0"

    @settings(max_examples=100, deadline=None)
    @given(helpers.fg_groups())
    def test_string_round_trip(self, g):
        assert FgAbGroup.from_string(g.render()) == g

    def test_parse_errors(self):
        for bad in ("Z/1", "Z/0", "Q", "Z^-1", "Z//2", ""):
            with pytest.raises(ValueError):
                FgAbGroup.from_string(bad)

    def test_validation(self):
        with pytest.raises(ValueError):
            FgAbGroup(-1, ())
        with pytest.raises(ValueError):
            FgAbGroup(0, ((3, 1), (2, 1)))  # unsorted
        with pytest.raises(ValueError):
            FgAbGroup(0, ((6, 1),))  # not a prime power
        with pytest.raises(ValueError):
            FgAbGroup(0, ((2, 0),))

    @settings(max_examples=100, deadline=None)
    @given(helpers.fg_groups(), helpers.fg_groups(), helpers.fg_groups())
    def test_direct_sum_commutative_associative(self, a, b, c):
        assert a.direct_sum(b) == b.direct_sum(a)
        assert a.direct_sum(b).direct_sum(c) == a.direct_sum(b.direct_sum(c))
        assert direct_sum(a, b, c) == a.direct_sum(b, c)
        assert direct_sum() == FgAbGroup.trivial()

    @settings(max_examples=100, deadline=None)
    @given(helpers.fg_groups())
    def test_primary_reassembly(self, g):
        primes = sorted({p for p, _ in g.torsion})
        parts = [g.primary_component(p) for p in primes]
        assert direct_sum(FgAbGroup.free(g.free_rank), *parts) == g

    def test_drop_torsion_summands(self):
        g = FgAbGroup.from_orders([2, 4, 8, 3])
        assert g.drop_torsion_summands([2]) == FgAbGroup.from_orders([2, 4, 3])
        assert g.drop_torsion_summands([]) == g
        with pytest.raises(IndexError):
            g.drop_torsion_summands([9])

    def test_two_primary_helpers(self):
        g = FgAbGroup.from_orders([2, 8, 9, 5])
        assert g.primary_exponents(2) == (1, 3)
        assert g.has_2_torsion and g.has_3_torsion
        assert g.primary_component(2) == FgAbGroup.from_orders([2, 8])
        assert not FgAbGroup.from_orders([5]).has_2_torsion
