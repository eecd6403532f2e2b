"""Follow a K3 sheaf class through the cover pushforward, step by step.

The transport map twists by O(dH), pushes forward along the branch
divisor (Grothendieck-Riemann-Roch) and then mutates through the
exceptional collection; the result lands in the rank-2 lattice of the
cover.  This script prints every intermediate Chern character for one
class, then a summary table over the standard sheaves.
"""

from kucalc.chow import multiply
from kucalc.functor import image_lattice, kernel_lattice, phi_matrix, phi_star, phi_star_ch
from kucalc.grr import ch_line_bundle, divisor_pushforward, make_cover_setup
from kucalc.knum import ch_from_mukai, sheaf_mukai


def trace_one(setup, label):
    w = sheaf_mukai(setup.source, label)
    ch = ch_from_mukai(setup.source, w)
    print(f"start: ch({label}) on {setup.source.name} = {ch}")
    twist = ch_line_bundle(setup.source, setup.twist_d * setup.source.cls("H"))
    ch = multiply(setup.source, ch, twist)
    print(f"after twist by O({setup.twist_d}H): {ch}")
    pushed = divisor_pushforward(setup, ch)
    print(f"after pushforward to {setup.target.name}: {pushed}")
    final = phi_star_ch(setup, w)
    print(f"after mutations: {final}")
    print(f"in the {setup.target_knum_basis.name} basis: {phi_star(setup, w).coords}")
    print()


def main():
    setup = make_cover_setup("qds-line")
    print(f"setup {setup.name}: {setup.source.name} -> {setup.target.name}\n")
    trace_one(setup, "O_L")

    for kind in ("qds", "qds-line", "gm3"):
        s = make_cover_setup(kind)
        labels = ["O", "O(-H)", "O_x", "I_x"]
        if len(s.source.gram) == 2:
            labels.append("O_L")
        row = {lab: phi_star(s, sheaf_mukai(s.source, lab)).coords for lab in labels}
        print(f"{kind}: {row}")

    print()
    pmap = phi_matrix(make_cover_setup("qds-line"))
    print(f"matrix on {pmap.source_labels}: {pmap.matrix}")
    print(f"image lattice: {image_lattice(pmap).hnf_columns}")
    ker = kernel_lattice(pmap)
    print(f"kernel rank {ker.rank}, Gram {ker.gram}, negative definite: {ker.negative_definite}")


if __name__ == "__main__":
    main()
