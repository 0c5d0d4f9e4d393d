from collections import Counter
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from localfactors import mutations
from localfactors.lfactor import Euler, GammaC, GammaR, LFactor, pole_order, poles_in_window, product, shift
from localfactors.parameters import (
    CQ,
    ArchChar,
    ArchInduced,
    Field,
    FieldMismatch,
    Opaque,
    Ramified,
    RepProduct,
    RootOfUnity,
    Segment,
    Unram,
    dual,
)
from localfactors.tensor import (
    CDim1,
    RDim1,
    RDim2,
    Seg,
    UnsupportedTensor,
    WDRep,
    dual_wd,
    expand_ind_zero,
    rs_lfactor,
    tensor,
    to_wd,
    wd_lfactor,
)

from strategies import complex_blocks, real_blocks, tensorable_nonarch

h = Fraction(1, 2)
R, C = Field.REAL, Field.COMPLEX
POINTS = sorted({Fraction(p, q) for q in range(1, 5) for p in range(-12 * q, 12 * q + 1)})


def steinberg(n, c=-h):
    return Segment(Unram(c), n)


def pole_multiset(L, points=POINTS):
    return Counter({s: pole_order(L, s) for s in points if pole_order(L, s)})


def cg_tops_by_peeling(c1, l1, c2, l2):
    """Top ends of chi1 Sp(l1) (x) chi2 Sp(l2), by peeling weight strings (oracle).

    The weights of the product are all sums of exponents; each irreducible
    string is symmetric about the common center, so the largest remaining
    weight t starts a string running down to 2*center - t.
    """
    weights = Counter(c1 - i + c2 - j for i in range(l1) for j in range(l2))
    center = c1 + c2 - Fraction(l1 - 1 + l2 - 1, 2)
    tops = []
    while weights:
        t = max(weights)
        tops.append((t, int(t - (2 * center - t)) + 1))
        w = t
        while w >= 2 * center - t:
            weights[w] -= 1
            if not weights[w]:
                del weights[w]
            w -= 1
    return sorted(tops)


def restrict_to_cx(V: WDRep) -> Counter:
    """Restriction of a W_R or C^x parameter to C^x as a multiset of (m, r)."""
    out = Counter()
    for v in V.parts:
        if isinstance(v, RDim1):
            out[(0, v.r)] += 1
        elif isinstance(v, RDim2):
            out[(v.m, v.r)] += 1
            out[(-v.m, v.r)] += 1
        else:
            out[(v.m, v.r)] += 1
    return out


class TestToWD:
    def test_segment(self):
        assert to_wd(Segment(Unram(-h), 5)) == WDRep.of(Seg(Unram(-h), 5))

    def test_induced(self):
        assert to_wd(ArchInduced(2, 0)) == WDRep.of(RDim2(2, 0))

    def test_opaque_rejected(self):
        with pytest.raises(UnsupportedTensor):
            to_wd(Segment(Opaque(2, 0), 1))

    def test_dims(self):
        assert to_wd(ArchChar(C, 3, 0)).dim == 1
        assert to_wd(ArchInduced(1, 0)).dim == 2
        assert to_wd(Segment(Ramified(), 3)).dim == 3


class TestExpandIndZero:
    def test_trivial_plus_sign(self):
        assert expand_ind_zero(0) == WDRep.of(RDim1(0, 0), RDim1(1, 0))

    @pytest.mark.parametrize("r", [Fraction(k, 2) for k in range(-6, 7)])
    def test_lfactor_matches_gamma_c_poles(self, r):
        L = wd_lfactor(expand_ind_zero(r))
        assert L == LFactor.of(GammaR(r), GammaR(r + 1))
        assert pole_multiset(L) == pole_multiset(LFactor.of(GammaC(r)))

    @pytest.mark.parametrize("r", [Fraction(-3, 2), 0, CQ(1, 2)])
    def test_dual(self, r):
        assert dual_wd(expand_ind_zero(r)) == expand_ind_zero(-CQ.of(r))


class TestArchimedeanTensor:
    @pytest.mark.parametrize("m1,m2", [(1, 2), (3, 1), (2, 5), (4, 1)])
    def test_induced_pair_distinct(self, m1, m2):
        r1, r2 = Fraction(-3, 2), Fraction(1, 2)
        got = tensor(to_wd(ArchInduced(m1, r1)), to_wd(ArchInduced(m2, r2)))
        assert got == WDRep.of(RDim2(m1 + m2, r1 + r2), RDim2(abs(m1 - m2), r1 + r2))

    @pytest.mark.parametrize("m", [1, 2, 3])
    def test_induced_pair_equal(self, m):
        got = tensor(to_wd(ArchInduced(m, h)), to_wd(ArchInduced(m, -1)))
        assert got == WDRep.of(RDim2(2 * m, -h)) + expand_ind_zero(-h)

    @pytest.mark.parametrize("m2", [0, 1])
    def test_induced_times_char(self, m2):
        got = tensor(to_wd(ArchInduced(3, -1)), to_wd(ArchChar(R, m2, h)))
        assert got == WDRep.of(RDim2(3, -h))

    def test_signs_multiply(self):
        got = tensor(to_wd(ArchChar(R, 1, 0)), to_wd(ArchChar(R, 1, h)))
        assert got == WDRep.of(RDim1(0, h))

    def test_complex_adds(self):
        got = tensor(to_wd(ArchChar(C, 2, h)), to_wd(ArchChar(C, -5, CQ(0, 1))))
        assert got == WDRep.of(CDim1(-3, CQ(h, 1)))

    @given(st.lists(real_blocks, min_size=1, max_size=3), st.lists(real_blocks, min_size=1, max_size=3))
    def test_real_restriction_and_dims(self, bs1, bs2):
        V = sum((to_wd(b) for b in bs1), WDRep())
        W = sum((to_wd(b) for b in bs2), WDRep())
        T = tensor(V, W)
        assert T.dim == V.dim * W.dim
        assert T == tensor(W, V)
        expected = Counter()
        for (ma, ra), ka in restrict_to_cx(V).items():
            for (mb, rb), kb in restrict_to_cx(W).items():
                expected[(ma + mb, ra + rb)] += ka * kb
        assert restrict_to_cx(T) == expected

    @given(st.lists(complex_blocks, min_size=1, max_size=3), st.lists(complex_blocks, min_size=1, max_size=3))
    def test_complex_dims_commutative(self, bs1, bs2):
        V = sum((to_wd(b) for b in bs1), WDRep())
        W = sum((to_wd(b) for b in bs2), WDRep())
        assert tensor(V, W).dim == V.dim * W.dim
        assert tensor(V, W) == tensor(W, V)

    def test_mixed_fields_rejected(self):
        with pytest.raises(FieldMismatch):
            tensor(to_wd(ArchChar(R, 0, 0)), to_wd(ArchChar(C, 0, 0)))
        with pytest.raises(FieldMismatch):
            rs_lfactor(ArchChar(R, 0, 0), Segment(Unram(0)))


class TestSegmentTensor:
    @pytest.mark.parametrize("l1", range(1, 6))
    @pytest.mark.parametrize("l2", range(1, 6))
    def test_matches_weight_peeling(self, l1, l2):
        c1, c2 = Fraction(-1, 2), Fraction(3, 2)
        got = tensor(to_wd(Segment(Unram(c1), l1)), to_wd(Segment(Unram(c2), l2)))
        tops = sorted((p.char.c, p.length) for p in got.parts)
        assert tops == cg_tops_by_peeling(c1, l1, c2, l2)

    def test_roots_multiply_and_ramified_absorbs(self):
        a = Segment(Unram(0, RootOfUnity(3, 1)), 1)
        b = Segment(Unram(1, RootOfUnity(2, 1)), 1)
        assert tensor(to_wd(a), to_wd(b)) == WDRep.of(Seg(Unram(1, RootOfUnity(6, 5)), 1))
        got = tensor(to_wd(a), to_wd(Segment(Ramified(h), 2)))
        assert got == WDRep.of(Seg(Ramified(h), 2))

    @given(st.lists(tensorable_nonarch, min_size=1, max_size=3),
           st.lists(tensorable_nonarch, min_size=1, max_size=3))
    def test_dims_commutative(self, bs1, bs2):
        V = sum((to_wd(b) for b in bs1), WDRep())
        W = sum((to_wd(b) for b in bs2), WDRep())
        assert tensor(V, W).dim == V.dim * W.dim
        assert tensor(V, W) == tensor(W, V)

    @pytest.mark.parametrize("n1", range(1, 7))
    def test_steinberg_pair_pole_set(self, n1):
        for n2 in range(1, n1 + 1):
            L = rs_lfactor(steinberg(n1), steinberg(n2))
            ref = product(shift(LFactor.of(Euler(-n2)), j) for j in range(n2))
            assert pole_multiset(L) == pole_multiset(ref) == Counter(range(1, n2 + 1))

    def test_steinberg_squared(self):
        L = rs_lfactor(steinberg(2, h), steinberg(2, h))
        assert poles_in_window(L, -5, 5) == [(-1, 1), (0, 1)]

    def test_mutation_drops_summand(self):
        with mutations.mutated(mutations.DROP_CG_TOP):
            assert rs_lfactor(steinberg(1), steinberg(1)).is_one


class TestRS:
    def test_gl1_half_pair(self):
        L = rs_lfactor(steinberg(1), steinberg(1))
        assert L == LFactor.of(Euler(-1))
        assert pole_order(L, 1) == 1

    @pytest.mark.parametrize("m2", [0, 1])
    def test_induced_char(self, m2):
        m1, r1, r2 = 3, Fraction(-2), Fraction(-3, 2)
        L = rs_lfactor(ArchInduced(m1, r1), ArchChar(R, m2, r2))
        assert L == LFactor.of(GammaC(r1 + r2 + Fraction(m1, 2)))

    def test_real_chars(self):
        L = rs_lfactor(ArchChar(R, 0, -h), ArchChar(R, 0, -h))
        assert L == LFactor.of(GammaR(-1))
        assert pole_order(L, 1) == 1

    def test_opaque_degrades(self):
        L = rs_lfactor(Segment(Opaque(2, 0), 1), Segment(Unram(0), 1))
        assert L.is_one and L.opaque_degraded

    @given(st.lists(real_blocks, min_size=1, max_size=2), st.lists(real_blocks, min_size=1, max_size=2))
    def test_symmetric(self, bs1, bs2):
        p1, p2 = RepProduct(tuple(bs1)), RepProduct(tuple(bs2))
        assert rs_lfactor(p1, p2) == rs_lfactor(p2, p1)

    @given(st.sampled_from([real_blocks, complex_blocks, tensorable_nonarch]), st.data())
    def test_dual_compatibility(self, pool, data):
        b1, b2 = data.draw(pool), data.draw(pool)
        lhs = rs_lfactor(dual(b1), dual(b2))
        rhs = wd_lfactor(dual_wd(tensor(to_wd(b1), to_wd(b2))))
        assert lhs == rhs
