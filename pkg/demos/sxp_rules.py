"""Plethysm by power sums: the SXP rule, its skew version and the universal version."""

from verschiebung.symfunc import plethysm_pt, render, schur
from verschiebung.sxp import a_coefficients, b_coeff, construction_so, schur_coefficients, sxp_schur, universal_sxp

if __name__ == "__main__":
    lam, t = (2, 1), 2
    print(f"s_{lam} o p_{t}:")
    for term in sxp_schur(lam, t):
        print(f"  {term.sign * term.coeff:+d} s_{term.nu}")
    assert {x.nu: x.sign * x.coeff for x in sxp_schur(lam, t)} == schur_coefficients(plethysm_pt(schur(lam), t))

    for t in (2, 3):
        print(f"so+_(1) o p_{t} in the so+ basis:", universal_sxp((1,), "so_plus", t))
        assert universal_sxp((1,), "so_plus", t) == a_coefficients((1,), "so_plus", t, "elimination")
    print("b_(1),()(t) for t = 2..5:", [b_coeff((1,), (), t) for t in range(2, 6)])

    weights, shape = construction_so((15, 14, 10, 7, 4, 3, 2, 1), 8, 5)
    print("gamma_8((15,14,10,7,4,3,2,1); 5) =", weights, "on", shape)
