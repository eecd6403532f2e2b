"""Tour of the three rank-2 Euler lattices and the pairing behind them.

Each lattice comes with explicit Chern characters on its ambient Fano
variety; the Gram matrix printed here is recomputed from those via
Hirzebruch-Riemann-Roch, not copied from a table.
"""

from kucalc import KnumClass, euler_form, euler_pairing, gram_from_ch, make_ku_basis


def main():
    for name in ("mu", "kappa", "lambda"):
        basis = make_ku_basis(name)
        print(f"{name} lattice on {basis.model.name}")
        for i, ch in enumerate(basis.basis_ch, 1):
            print(f"  ch({name}_{i}) = {ch}")
        print(f"  Euler matrix (recomputed): {gram_from_ch(basis)}")
        v = KnumClass(basis, (1, 1))
        print(f"  chi(v, v) for v = (1,1): {euler_form(basis, v, v)}")
        print()

    # the same pairing straight from Riemann-Roch on the ambient variety
    mu = make_ku_basis("mu")
    chi = euler_pairing(mu.model, mu.basis_ch[0], mu.basis_ch[1])
    print(f"chi(mu_1, mu_2) via Riemann-Roch on {mu.model.name}: {chi}")


if __name__ == "__main__":
    main()
