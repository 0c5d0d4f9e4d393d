from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from localfactors.lfactor import (
    ONE_FACTOR,
    Euler,
    GammaC,
    GammaR,
    LFactor,
    gj_lfactor,
    multiply,
    pole_order,
    poles_in_window,
    shift,
)
from localfactors.parameters import (
    CQ,
    ArchChar,
    ArchInduced,
    Field,
    Opaque,
    Ramified,
    RepProduct,
    RootOfUnity,
    Segment,
    Unram,
    dual,
)

from strategies import cqs, rationals, roots

h = Fraction(1, 2)
R, C = Field.REAL, Field.COMPLEX

# rationals with denominator <= 4 in [-5, 5]
SMALL_POINTS = sorted({Fraction(p, q) for q in range(1, 5) for p in range(-5 * q, 5 * q + 1)})
WIDE_POINTS = sorted({Fraction(p, q) for q in range(1, 5) for p in range(-10 * q, 10 * q + 1)})

atoms = st.one_of(st.builds(GammaR, cqs), st.builds(GammaC, cqs), st.builds(Euler, rationals, roots))
lfactors = st.lists(st.tuples(atoms, st.integers(1, 3)), max_size=5).map(lambda xs: LFactor(tuple(xs)))


def brute_gamma_poles(mu: Fraction, step: int, s0: Fraction) -> bool:
    """s0 + mu in {0, -step, -2 step, ...}, by walking the lattice."""
    for k in range(0, 200):
        if s0 + mu == -step * k:
            return True
    return False


class TestGJ:
    def test_real_char(self):
        for m in (0, 1):
            for r in (Fraction(-3, 2), 0, CQ(h, 2)):
                assert gj_lfactor(ArchChar(R, m, r)) == LFactor.of(GammaR(CQ.of(r) + m))

    def test_complex_char_uses_abs_m(self):
        assert gj_lfactor(ArchChar(C, -3, 1)) == LFactor.of(GammaC(Fraction(5, 2)))

    def test_induced(self):
        assert gj_lfactor(ArchInduced(2, -1)) == gj_lfactor(ArchChar(C, 2, -1))

    def test_segment_top_end(self):
        assert gj_lfactor(Segment(Unram(-h), 3)) == LFactor.of(Euler(-h))
        z = RootOfUnity(4, 3)
        assert gj_lfactor(Segment(Unram(2, z), 2)) == LFactor.of(Euler(2, z))

    def test_ramified_and_opaque(self):
        assert gj_lfactor(Segment(Ramified(), 2)).is_one
        L = gj_lfactor(Segment(Opaque(2, 0), 1))
        assert L.is_one and L.opaque_degraded

    def test_product(self):
        rho = RepProduct.of(ArchChar(R, 0, -h), ArchChar(R, 0, h))
        assert gj_lfactor(rho) == LFactor.of(GammaR(-h), GammaR(h))

    @given(st.lists(st.builds(ArchChar, st.just(R), st.sampled_from([0, 1]), cqs), min_size=1, max_size=4))
    def test_product_is_blockwise(self, bs):
        rho = RepProduct(tuple(bs))
        expected = ONE_FACTOR
        for b in bs:
            expected = multiply(expected, gj_lfactor(b))
        assert gj_lfactor(rho) == expected

    @given(st.sampled_from([0, 1]), cqs)
    def test_dual_negates_r(self, m, r):
        assert gj_lfactor(dual(ArchChar(R, m, r))) == LFactor.of(GammaR(-r + m))


class TestPoleOrder:
    def test_examples(self):
        assert pole_order(LFactor.of(Euler(-h)), h) == 1
        assert pole_order(LFactor.of(GammaR(-h)), h) == 1
        assert pole_order(LFactor.of(GammaR(h)), h) == 0
        assert pole_order(LFactor.of(GammaC(Fraction(3, 2))), 1) == 0
        assert pole_order(LFactor.of(GammaR(Fraction(-5, 2)), GammaR(Fraction(-5, 2))), h) == 2

    def test_twisted_euler_has_no_pole(self):
        assert pole_order(LFactor.of(Euler(-h, RootOfUnity(2, 1))), h) == 0

    def test_complex_shift_never_contributes(self):
        assert pole_order(LFactor.of(GammaC(CQ(-1, 1))), 1) == 0

    @pytest.mark.parametrize("mu", [Fraction(k, 4) for k in range(-12, 13)])
    def test_matches_lattice_walk(self, mu):
        for s0 in SMALL_POINTS:
            assert pole_order(LFactor.of(GammaR(mu)), s0) == brute_gamma_poles(mu, 2, s0)
            assert pole_order(LFactor.of(GammaC(mu)), s0) == brute_gamma_poles(mu, 1, s0)

    @given(lfactors, lfactors, st.sampled_from(SMALL_POINTS))
    def test_additive(self, l1, l2, s0):
        assert pole_order(multiply(l1, l2), s0) == pole_order(l1, s0) + pole_order(l2, s0)

    @pytest.mark.parametrize("mu", [Fraction(k, 2) for k in range(-6, 7)] + [Fraction(1, 3)])
    def test_duplication_pole_sets(self, mu):
        paired = LFactor.of(GammaR(mu), GammaR(mu + 1))
        single = LFactor.of(GammaC(mu))
        for s0 in WIDE_POINTS:
            assert pole_order(paired, s0) == pole_order(single, s0)

    def test_window(self):
        L = LFactor.of(GammaR(-h), Euler(-1), Euler(0, RootOfUnity(2, 1)))
        assert poles_in_window(L, -2, 2) == [(Fraction(-3, 2), 1), (h, 1), (Fraction(1), 1)]


class TestMultiplyShift:
    def test_unit(self):
        L = LFactor.of(GammaR(0), Euler(1))
        assert multiply(ONE_FACTOR, L) == L

    def test_multiplicity(self):
        L = multiply(LFactor.of(GammaR(0)), LFactor.of(GammaR(0)))
        assert L.multiplicity(GammaR(0)) == 2
        assert len(L.atoms) == 1

    @given(lfactors, lfactors, lfactors)
    def test_commutative_associative(self, a, b, c):
        assert multiply(a, b) == multiply(b, a)
        assert multiply(multiply(a, b), c) == multiply(a, multiply(b, c))

    def test_shift_examples(self):
        assert shift(LFactor.of(Euler(-h)), 3) == LFactor.of(Euler(Fraction(5, 2)))
        assert shift(LFactor.of(GammaR(-h)), 1) == LFactor.of(GammaR(h))

    @given(lfactors, rationals, rationals)
    def test_shift_composes(self, L, a, b):
        assert shift(shift(L, a), b) == shift(L, a + b)

    @given(lfactors, rationals, st.sampled_from(SMALL_POINTS))
    def test_shift_moves_poles(self, L, t, s0):
        assert pole_order(shift(L, t), s0) == pole_order(L, s0 + t)

    def test_degraded_flag_propagates(self):
        L = multiply(LFactor(opaque_degraded=True), LFactor.of(GammaR(0)))
        assert L.opaque_degraded
        assert shift(L, 1).opaque_degraded

    def test_rejects_bad_multiplicity(self):
        with pytest.raises(ValueError):
            LFactor(((GammaR(0), 0),))
