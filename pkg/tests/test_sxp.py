import threading
from fractions import Fraction

import pytest

from verschiebung.littlewood import core_quotient, is_t_tileable, sgn_t
from verschiebung.partitions import conjugate, partitions_of, partitions_up_to, sub_partitions, z_lambda
from verschiebung.symfunc import hall, p, plethysm_pt, power_sum_character, s, schur, skew_schur, verschiebung
from verschiebung.sxp import (
    SXPTerm,
    _psi_t,
    a_coeff,
    a_coefficients,
    b_coeff,
    character_table,
    characteristic,
    chi,
    chi_skew,
    class_inner,
    construction_so,
    empty_core_partitions,
    farahat_ch_check,
    farahat_check,
    littlewood_mult_check,
    pair_weight,
    schur_coefficients,
    sxp_schur,
    sxp_wildon,
    universal_sxp,
)
from verschiebung.universal import universal_char


class TestCharacters:
    def test_examples(self):
        for n in range(1, 7):
            assert all(chi((n,), mu) == 1 for mu in partitions_of(n))
        assert chi((1, 1), (2,)) == -1
        assert chi((2, 2), (2, 2)) == 2

    def test_size_mismatch(self):
        with pytest.raises(ValueError):
            chi((2, 1), (2,))
        with pytest.raises(ValueError):
            chi_skew(((2, 1), (1,)), (1,))

    @pytest.mark.parametrize("n", range(1, 9))
    def test_against_power_sum_expansion(self, n):
        for lam in partitions_of(n):
            oracle = power_sum_character(lam)
            for mu in partitions_of(n):
                assert chi(lam, mu) == oracle.get(mu, 0)

    def test_sign_character(self):
        for n in range(1, 9):
            col = (1,) * n
            for mu in partitions_of(n):
                assert chi(col, mu) == (-1) ** (n - len(mu))

    @pytest.mark.parametrize("n", range(1, 11))
    def test_orthogonality(self, n):
        table = character_table(n)
        assert table.column_orthogonality()
        assert table.row_orthogonality()

    def test_table_json(self):
        out = character_table(2).to_json()
        assert out == {"n": 2, "classes": [[2], [1, 1]],
                       "rows": [{"lambda": [2], "values": [1, 1]}, {"lambda": [1, 1], "values": [-1, 1]}]}

    def test_concurrent_tables(self):
        from verschiebung import sxp
        sxp._tables.pop(7, None)
        results = []
        threads = [threading.Thread(target=lambda: results.append(character_table(7).values)) for _ in range(4)]
        for th in threads:
            th.start()
        for th in threads:
            th.join()
        assert all(r == results[0] for r in results)

    def test_skew(self):
        assert chi_skew(((2, 1), (1,)), (2,)) == 0
        assert chi_skew(((3, 1), (2,)), (1, 1)) == 2
        for lam in partitions_up_to(5):
            for mu in partitions_of(sum(lam)):
                assert chi_skew((lam, ()), mu) == chi(lam, mu)
        assert chi_skew(((2,), (1, 1)), ()) == 0

    def test_skew_characteristic(self):
        for lam in partitions_up_to(7):
            for mu in sub_partitions(lam):
                d = sum(lam) - sum(mu)
                f = characteristic(lambda rho: chi_skew((lam, mu), rho), d)
                assert f == skew_schur(lam, mu)

    def test_characteristic_isomorphism(self):
        for n in range(1, 9):
            for lam in partitions_of(n):
                f = schur(lam).to("p")
                for mu in partitions_of(n):
                    assert f.coeff(mu) == Fraction(chi(lam, mu), z_lambda(mu))

    def test_psi_adjoint(self):
        # <phi_t f, g> = <f, psi_t g> on class functions
        for t in (2, 3):
            for m in range(1, 4):
                for lam in partitions_of(t * m):
                    for nu in partitions_of(m):
                        f = lambda mu, lam=lam: chi(lam, mu)
                        g = lambda mu, nu=nu: chi(nu, mu)
                        lhs = class_inner(lambda mu: f(tuple(t * x for x in mu)), g, m)
                        rhs = class_inner(f, _psi_t(g, t), t * m)
                        assert lhs == rhs


class TestLittlewoodMult:
    def test_examples(self):
        assert littlewood_mult_check((2, 2), (1, 1), 2)
        assert chi((2, 2), (2, 2)) == 2
        assert littlewood_mult_check((2,), (1,), 2)
        assert chi((2,), (2,)) == 1

    def test_vanishing(self):
        for m in range(1, 4):
            for lam in partitions_of(3 * m):
                if core_quotient(lam, 3).core:
                    for mu in partitions_of(m):
                        assert chi(lam, tuple(3 * x for x in mu)) == 0

    @pytest.mark.parametrize("t", [2, 3])
    def test_all(self, t):
        for m in range(10 // t + 1):
            for lam in partitions_of(t * m):
                for mu in partitions_of(m):
                    assert littlewood_mult_check(lam, mu, t)

    def test_size_mismatch(self):
        with pytest.raises(ValueError):
            littlewood_mult_check((2, 1), (1,), 2)


class TestFarahat:
    @pytest.mark.parametrize("t", [2, 3])
    def test_values(self, t):
        for lam in partitions_up_to(8):
            for mu in sub_partitions(lam):
                d = sum(lam) - sum(mu)
                if d % t:
                    continue
                for rho in partitions_of(d // t):
                    assert farahat_check(lam, mu, rho, t)

    @pytest.mark.parametrize("t", [2, 3])
    def test_through_ch(self, t):
        for lam in partitions_up_to(8):
            for mu in sub_partitions(lam):
                assert farahat_ch_check(lam, mu, t)


class TestSXP:
    def test_examples(self):
        assert sxp_schur((1,), 2) == [SXPTerm((2,), 1, 1), SXPTerm((1, 1), -1, 1)]
        terms = {(x.nu, x.sign, x.coeff) for x in sxp_schur((1,), 3)}
        assert terms == {((3,), 1, 1), ((2, 1), -1, 1), ((1, 1, 1), 1, 1)}
        assert sxp_schur((1,), 2)[0].to_json() == {"nu": [2], "sign": 1, "coeff": 1}

    def test_empty_core_partitions(self):
        for t in (2, 3):
            for n in range(5):
                brute = sorted((lam for lam in partitions_of(t * n) if not core_quotient(lam, t).core), reverse=True)
                assert list(empty_core_partitions(n, t)) == brute

    @pytest.mark.parametrize("t", [2, 3])
    def test_schur_rule(self, t):
        for lam in partitions_up_to(5):
            oracle = schur_coefficients(plethysm_pt(schur(lam), t))
            got = {x.nu: x.sign * x.coeff for x in sxp_schur(lam, t)}
            assert got == oracle
            assert all(x.sign == sgn_t((x.nu, ()), t) and x.coeff > 0 for x in sxp_schur(lam, t))

    def test_wildon_examples(self):
        assert sxp_wildon((), ((2, 1), ()), 2) == {x.nu: x.sign * x.coeff for x in sxp_schur((2, 1), 2)}
        assert sxp_wildon((1,), ((1,), ()), 2) == schur_coefficients(s(1) * p(2))

    @pytest.mark.parametrize("t", [2, 3])
    def test_wildon_rule(self, t):
        taus = [tau for tau in partitions_up_to(3)]
        for lam in partitions_up_to(4):
            for mu in sub_partitions(lam):
                for tau in taus:
                    oracle = schur_coefficients(schur(tau) * plethysm_pt(skew_schur(lam, mu), t))
                    got = sxp_wildon(tau, (lam, mu), t)
                    assert got == oracle
                    assert all(is_t_tileable((nu, tau), t) for nu in got)

    def test_wildon_outer_five(self):
        for lam in partitions_of(5):
            for mu in ((1,), (2,), (1, 1)):
                if not all(x >= y for x, y in zip(lam + (0,) * 3, mu + (0,) * 3)):
                    continue
                for tau in ((1,), (2,)):
                    oracle = schur_coefficients(schur(tau) * plethysm_pt(skew_schur(lam, mu), 2))
                    assert sxp_wildon(tau, (lam, mu), 2) == oracle


class TestUniversalSXP:
    def test_trivial(self):
        for t in (2, 3, 4):
            assert a_coeff((), (), "so_plus", t) == 1
            assert b_coeff((), (), t) == 1

    def test_b_vanishes_on_nonempty_core(self):
        for t in (2, 3):
            for mu in partitions_up_to(6):
                if core_quotient(mu, t).core:
                    for lam in partitions_up_to(3):
                        assert b_coeff(lam, mu, t) == 0

    def test_b_small_values(self):
        assert b_coeff((1,), (), 2) == 1
        assert b_coeff((1,), (), 3) == 0
        assert b_coeff((1,), (), 4) == 1

    @pytest.mark.parametrize("t", [2, 3])
    @pytest.mark.parametrize("family", ["o", "sp", "so_plus"])
    def test_a_two_paths(self, family, t):
        for lam in partitions_up_to(4 if t == 2 else 3):
            assert a_coefficients(lam, family, t) == a_coefficients(lam, family, t, "elimination")

    @pytest.mark.parametrize("t", [2, 3])
    def test_a_o_equals_so_plus(self, t):
        for lam in partitions_up_to(4):
            assert a_coefficients(lam, "o", t) == a_coefficients(lam, "so_plus", t)

    @pytest.mark.parametrize("t", [2, 3])
    def test_a_duality(self, t):
        for lam in partitions_up_to(4):
            sign = (-1) ** (sum(lam) * (t - 1))
            for nu, c in a_coefficients(lam, "o", t).items():
                assert a_coeff(conjugate(lam), conjugate(nu), "sp", t) * sign == c

    def test_elimination_is_plethysm(self):
        for lam in partitions_up_to(3):
            row = a_coefficients(lam, "so_plus", 2, "elimination")
            back = sum((universal_char("so_plus", nu) * c for nu, c in row.items()), s() * 0)
            assert back == plethysm_pt(universal_char("so_plus", lam), 2)

    @pytest.mark.parametrize("t", [2, 3])
    @pytest.mark.parametrize("family", ["so_plus", "o", "sp"])
    def test_universal_sxp(self, family, t):
        for lam in partitions_up_to(3):
            assert universal_sxp(lam, family, t) == a_coefficients(lam, family, t, "elimination")

    def test_b_matches_signed_a(self):
        for t in (2, 3):
            for lam in partitions_up_to(3):
                for nu, c in a_coefficients(lam, "so_plus", t).items():
                    assert sgn_t((nu, ()), t) * b_coeff(lam, nu, t) == c

    def test_unknown_family(self):
        with pytest.raises(ValueError):
            universal_sxp((1,), "so_minus", 2)


class TestConstruction:
    def test_worked_example(self):
        weights, shape = construction_so((15, 14, 10, 7, 4, 3, 2, 1), 8, 5)
        assert weights == ((0, -1, -1), (0, 0, -1), (3, 1))
        assert str(shape) == "GL3 x GL3 x SO5"
        assert shape.to_json() == {"gl": [3, 3], "so": 5, "text": "GL3 x GL3 x SO5"}

    def test_empty(self):
        for t in (2, 3, 4, 5):
            for n in range(0, 9):
                weights, _ = construction_so((), n, t)
                assert all(all(x == 0 for x in w) for w in weights)

    def test_b_zero_pairs_quotient(self):
        # n divisible by t: gamma^(r) = [lam^(t-r-1), lam^(r)] shifted by c_r
        for t in (2, 3, 4):
            for lam in partitions_up_to(8):
                n = t * ((len(lam) + t - 1) // t + 2)
                cq = core_quotient(lam, t)
                try:
                    weights, shape = construction_so(lam, n, t)
                except ValueError:
                    continue
                for r in range((t - 2) // 2 + 1):
                    m = 2 * (n // t)
                    expected = tuple(x + cq.kappa[r] for x in pair_weight(cq.quotient[t - r - 1], cq.quotient[r], m))
                    assert weights[r] == expected
                assert shape.gl == (2 * (n // t),) * ((t - 2) // 2 + 1)

    def test_pair_weight(self):
        assert pair_weight((2, 1), (3,), 5) == (2, 1, 0, 0, -3)
        with pytest.raises(ValueError):
            pair_weight((1, 1), (1, 1), 3)

    def test_too_long(self):
        with pytest.raises(ValueError):
            construction_so((1, 1, 1), 2, 2)


def test_verschiebung_schur_sign_consistency():
    # hall pairing picks out the SXP coefficients: <s_lam o p_t, s_nu> = <s_lam, phi_t s_nu>
    for t in (2, 3):
        for lam in partitions_up_to(3):
            for x in sxp_schur(lam, t):
                assert hall(schur(lam), verschiebung(schur(x.nu), t)) == x.sign * x.coeff
