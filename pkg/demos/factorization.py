"""phi_t applied to X_lam(z;q): factored form against the direct computation."""

from verschiebung.symfunc import render, verschiebung
from verschiebung.universal import factor_classical, factor_verschiebung, hamel_king, universal_char


def describe(res):
    if res.vanishes:
        return "vanishes"
    parts = []
    for f in res.factors:
        args = ", ".join("(" + ",".join(map(str, p)) + ")" for p in f.parts)
        if f.kind == "RS":
            parts.append(f"rs[{args}](shift {f.shift}, c {f.c})")
        else:
            parts.append(f"X[{args}](z {f.shift})")
    eps = res.epsilon * res.sign_correction
    return f"{eps} * " + " * ".join(parts) if parts else str(eps)


if __name__ == "__main__":
    for lam, z, t in [((2,), 1, 2), ((3, 2, 1), 2, 3), ((4, 2), 0, 2), ((2, 1), 1, 3), ((3, 1, 1), -2, 2)]:
        res = factor_verschiebung(lam, z, t)
        direct = verschiebung(hamel_king(lam, z), t)
        print(f"phi_{t} X_({','.join(map(str, lam))})({z};q) = {describe(res)}")
        print(f"    = {render(res.expand().to('s'))}")
        assert res.expand() == direct

    print()
    for family in ("so_plus", "o", "sp"):
        lam, t = (3, 1), 2
        res = factor_classical(lam, t, family)
        print(f"phi_{t} {family}_(3,1) = {render(res.expand().to('s'))}")
        assert res.expand() == verschiebung(universal_char(family, lam), t)
