"""Walk through the Littlewood decomposition of a few partitions."""

from verschiebung.littlewood import core_quotient, from_core_quotient, sgn_t, sigma_perm, zasym_witness
from verschiebung.partitions import format_partition, frobenius, is_z_asymmetric


def show(lam, t):
    cq = core_quotient(lam, t)
    quo = ", ".join(format_partition(q) for q in cq.quotient)
    print(f"lam = ({format_partition(lam)}), t = {t}")
    print(f"  core {format_partition(cq.core)}   quotient ({quo})   kappa {cq.kappa}")
    assert from_core_quotient(cq.core, cq.quotient, t) == lam
    if not cq.core:
        print(f"  empty core, sgn_t = {sgn_t((lam, ()), t):+d}")


if __name__ == "__main__":
    show((6, 5, 5, 1), 3)
    show((8, 4, 3, 3, 3, 1, 1), 3)
    show((4, 4, 2, 2), 2)

    perm, sign = sigma_perm((6, 5, 5, 1), 3, 6)
    print("sigma_3((6,5,5,1); 6) =", "".join(map(str, perm)), f"sign {sign:+d}")

    lam = (6, 5, 5, 1)
    print(f"({format_partition(lam)}) = {frobenius(lam)} is 2-asymmetric: {is_z_asymmetric(lam, 2)}")
    w = zasym_witness(lam, 2, 3)
    print("  witness for t = 3:", w.to_json())
