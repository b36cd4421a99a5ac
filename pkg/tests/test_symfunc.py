import itertools
from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given, strategies as st

from strategies import partitions
from verschiebung.partitions import conjugate, partitions_of, partitions_up_to, sub_partitions, z_lambda
from verschiebung.poly import Poly
from verschiebung.sxp import chi
from verschiebung.symfunc import (
    DegreeLimitError,
    SymFunc,
    e,
    get_max_degree,
    h,
    hall,
    kostka,
    lr_coeff,
    m,
    omega,
    p,
    plethysm_pt,
    render,
    s,
    schur,
    set_max_degree,
    skew_schur,
    skew_schur_dual,
    verschiebung,
    verschiebung_schur,
)

BASES = ("h", "e", "p", "m", "s")


def ssyt_count(shape, content):
    """Semistandard tableaux of the given shape and content, by brute force."""
    cells = [(i, j) for i, row in enumerate(shape) for j in range(row)]
    letters = [k + 1 for k, c in enumerate(content) for _ in range(c)]
    count = 0
    seen = set()
    for filling in set(itertools.permutations(letters)):
        if filling in seen:
            continue
        seen.add(filling)
        tab = dict(zip(cells, filling))
        ok = all(tab[(i, j)] <= tab[(i, j + 1)] for i, j in cells if (i, j + 1) in tab) and \
            all(tab[(i, j)] < tab[(i + 1, j)] for i, j in cells if (i + 1, j) in tab)
        count += ok
    return count


def random_element(draw, max_degree, basis):
    terms = draw(st.lists(st.tuples(st.integers(0, max_degree), st.integers(-3, 3)), min_size=1, max_size=4))
    f = SymFunc.zero(basis)
    for n, c in terms:
        lams = partitions_of(n)
        lam = lams[draw(st.integers(0, len(lams) - 1))]
        f = f + SymFunc.gen(basis, lam) * c
    return f


@st.composite
def elements(draw, max_degree=6, basis="s"):
    return random_element(draw, max_degree, basis)


@st.composite
def homogeneous(draw, n, basis="s"):
    f = SymFunc.zero(basis)
    lams = partitions_of(n)
    for _ in range(draw(st.integers(1, 3))):
        f = f + SymFunc.gen(basis, lams[draw(st.integers(0, len(lams) - 1))]) * draw(st.integers(-3, 3))
    return f


class TestGenerators:
    def test_schur_small(self):
        assert s(2) == h(2)
        assert s(1, 1) == h(1, 1) - h(2)
        assert s(1, 1) == e(2)
        assert p(2, 2) == p(2) * p(2)

    def test_p2(self):
        assert p(2).to("s") == s(2) - s(1, 1)
        assert h(2).to("p") == (p(1, 1) + p(2)) * Fraction(1, 2)

    def test_s22_in_p(self):
        f = s(2, 2).to("p")
        for mu in partitions_of(4):
            assert f.coeff(mu) == Fraction(chi((2, 2), mu), z_lambda(mu))

    @pytest.mark.parametrize("n", range(1, 7))
    def test_kostka_against_tableaux(self, n):
        for lam in partitions_of(n):
            f = s(*lam).to("m")
            for mu in partitions_of(n):
                k = ssyt_count(lam, mu)
                assert kostka(lam, mu) == k
                assert f.coeff(mu) == k

    @pytest.mark.parametrize("n", range(0, 9))
    def test_round_trips(self, n):
        for lam in partitions_of(n):
            for a in BASES:
                x = SymFunc.gen(a, lam)
                for b in BASES:
                    back = x.to(b).to(a)
                    assert back.terms == x.terms

    @given(elements(max_degree=7, basis="s"), st.sampled_from(BASES), st.sampled_from(BASES))
    def test_random_round_trips(self, f, a, b):
        g = f.to(a)
        assert g.to(b).to(a).terms == g.terms

    @pytest.mark.parametrize("n", range(0, 11))
    def test_jacobi_trudi_h_equals_e(self, n):
        for lam in partitions_of(n):
            assert skew_schur(lam).terms == skew_schur_dual(lam).terms

    def test_dual_skew(self):
        for lam in partitions_up_to(8):
            for mu in sub_partitions(lam):
                assert skew_schur(lam, mu) == skew_schur_dual(lam, mu)


class TestProducts:
    def test_pieri(self):
        assert s(1) * s(1) == s(2) + s(1, 1)
        assert s(2) * s(1, 1) == s(3, 1) + s(2, 1, 1)
        f = s(3, 1)
        assert f * 1 == f

    def test_lr(self):
        assert lr_coeff((2, 1), [(1,), (1, 1)]) == 1
        assert lr_coeff((3, 2, 1), [(3, 2, 1), ()]) == 1
        assert lr_coeff((2,), [(1,), (1,)]) == 1
        assert lr_coeff((1, 1), [(1,), (1,)]) == 1
        assert lr_coeff((3, 2, 1), [(2, 1), (2, 1)]) == 2
        assert lr_coeff((3,), [(1,), (1,)]) == 0

    def test_lr_symmetric(self):
        for lam in partitions_of(6):
            for a in partitions_up_to(3):
                for b in partitions_up_to(3):
                    assert lr_coeff(lam, [a, b]) == lr_coeff(lam, [b, a])

    def test_skew_expansion(self):
        assert skew_schur((2, 1), (1,)) == s(2) + s(1, 1)
        assert skew_schur((2,), (1, 1)).is_zero()
        for lam in partitions_up_to(6):
            for mu in sub_partitions(lam):
                expect = SymFunc.zero("s")
                for nu in partitions_of(sum(lam) - sum(mu)):
                    expect = expect + s(*nu) * lr_coeff(lam, [mu, nu])
                assert skew_schur(lam, mu) == expect


class TestHall:
    def test_schur_orthonormal(self):
        for n in range(6):
            for a in partitions_of(n):
                for b in partitions_of(n):
                    assert hall(s(*a), s(*b)) == (1 if a == b else 0)

    def test_p_weights(self):
        assert hall(p(2), p(2)) == 2
        for lam in partitions_up_to(6):
            assert hall(p(*lam), p(*lam)) == z_lambda(lam)

    def test_h_m_dual(self):
        for n in range(7):
            for a in partitions_of(n):
                for b in partitions_of(n):
                    assert hall(h(*a), m(*b)) == (1 if a == b else 0)

    @given(elements(max_degree=6, basis="p"))
    def test_positive(self, f):
        if not f.is_zero():
            assert hall(f, f).constant() > 0


class TestOmega:
    def test_examples(self):
        assert omega(h(3)) == e(3)
        assert omega(s(2, 1)) == s(2, 1)
        for r in range(1, 7):
            assert omega(p(r)) == p(r) * (-1) ** (r - 1)

    def test_conjugates_skew(self):
        for lam in partitions_up_to(7):
            for mu in sub_partitions(lam):
                assert omega(skew_schur(lam, mu)) == skew_schur(conjugate(lam), conjugate(mu))

    @given(elements(max_degree=8, basis="h"))
    def test_involution(self, f):
        assert omega(omega(f)) == f

    @given(st.integers(0, 4), st.integers(2, 3), st.data())
    def test_plethysm_commutation(self, n, t, data):
        f = data.draw(homogeneous(n))
        assert omega(plethysm_pt(f, t)) == plethysm_pt(omega(f), t) * (-1) ** (n * (t - 1))


class TestPlethysmVerschiebung:
    def test_plethysm_examples(self):
        assert plethysm_pt(s(1), 2) == s(2) - s(1, 1)
        f = s(2, 1) + 3 * s(1)
        assert plethysm_pt(f, 1) == f
        for a in range(1, 4):
            for b in range(1, 4):
                assert plethysm_pt(p(a), b) == p(a * b)

    def test_verschiebung_examples(self):
        assert verschiebung(h(4), 2) == h(2)
        assert verschiebung(h(3), 2).is_zero()
        assert verschiebung(e(2), 2) == -e(1)
        assert verschiebung(p(2, 2), 2) == 4 * p(1, 1)
        assert verschiebung(s(2), 2) == s(1)
        assert verschiebung(s(1, 1), 2) == -s(1)
        assert verschiebung(s(1), 2).is_zero()

    def test_e_formula(self):
        # phi_t e_lam = (-1)^{|lam|(t-1)/t} e_{lam/t}
        for t in (2, 3):
            for lam in partitions_up_to(9):
                got = verschiebung(SymFunc.gen("e", lam), t)
                if all(x % t == 0 for x in lam):
                    sign = (-1) ** (sum(lam) * (t - 1) // t)
                    assert got == SymFunc.gen("e", tuple(x // t for x in lam)) * sign
                else:
                    assert got.is_zero()

    @pytest.mark.parametrize("t", [2, 3])
    def test_two_routes(self, t):
        for lam in partitions_up_to(9):
            f = SymFunc.gen("s", lam)
            assert verschiebung(f, t, via="p") == verschiebung(f, t, via="h")

    @given(st.integers(0, 4), st.integers(2, 3), st.data())
    def test_adjointness(self, n, t, data):
        f = data.draw(homogeneous(n))
        g = data.draw(homogeneous(t * n))
        assert hall(plethysm_pt(f, t), g) == hall(f, verschiebung(g, t))

    @pytest.mark.parametrize("t", [2, 3, 4])
    def test_skew_schur_theorem(self, t):
        for lam in partitions_up_to(8):
            for mu in sub_partitions(lam):
                assert verschiebung_schur(lam, mu, t) == verschiebung(skew_schur(lam, mu), t)


class TestCoefficients:
    def test_q_coefficients(self):
        q = Poly.var("q")
        f = s(2) + s() * q
        assert render(f) == "s[2] + q*s[]"
        assert f.to_json() == {"basis": "s", "terms": [
            {"part": [], "coef": [[1, "1"]]}, {"part": [2], "coef": [[0, "1"]]}]}
        assert f.subs(q=1) == s(2) + 1

    def test_rational_rendering(self):
        assert render(h(2).to("p")) == "1/2*p[2] + 1/2*p[1,1]"


class TestDegreeGuard:
    def test_cap(self):
        old = get_max_degree()
        try:
            set_max_degree(5)
            with pytest.raises(DegreeLimitError):
                s(3, 3).to("p")
        finally:
            set_max_degree(old)

    def test_default_allows_acceptance_range(self):
        assert get_max_degree() >= 12


def test_p_to_s_is_character_table():
    for n in range(1, 8):
        for lam in partitions_of(n):
            f = s(*lam).to("p")
            for mu in partitions_of(n):
                assert f.coeff(mu) * z_lambda(mu) == chi(lam, mu)


def test_factorial_dimension():
    # <s_lam, p_1^n> = f^lam and sum f^2 = n!
    for n in range(1, 8):
        total = sum(hall(s(*lam), p(*([1] * n))).constant() ** 2 for lam in partitions_of(n))
        assert total == factorial(n)
