#!/usr/bin/env python3
"""Weil representation matrices and their defining relations.

Builds the generator matrices S and T on the group algebra of each
discriminant form and verifies S^4 = Id, (ST)^3 = S^2, T^N = Id, and
unitarity to 1e-9.  Also shows that the level is the exact matrix order
of T: one step below it, T^k stays far from the identity.
"""

import numpy as np

from heegnerlab import (
    build_named_lattice,
    build_weil_rep,
    discriminant_group,
    verify_sl2_relations,
)

FAMILIES = [
    ("Lambda_C", ()),
    ("Lambda_GM", ()),
    ("Lambda_HK_prim", (2, 1)),
    ("Lambda_HK_prim", (3, 2)),
    ("Lambda_sharp", ()),
]

for name, params in FAMILIES:
    lat = build_named_lattice(name, *params)
    m = lat.signature[0]
    rep = build_weil_rep(discriminant_group(lat), m)
    print(f"{lat.name}: dim {rep.dim}, weight {rep.weight}, level {rep.level}")
    for check in verify_sl2_relations(rep, tol=1e-9):
        mark = "ok" if check.passed else "FAIL"
        print(f"  {check.relation:<14} max deviation {check.max_deviation:.2e}  {mark}")

print()
print("T eigenvalues for the Gushel-Mukai family (q-values 0, 1/4, 1/4, 1/2):")
rep = build_weil_rep(discriminant_group(build_named_lattice("Lambda_GM")), 20)
print(" ", np.round(np.diagonal(rep.t_matrix), 6))
t3 = np.linalg.matrix_power(rep.t_matrix, 3)
print(f"  |T^3 - Id| = {abs(t3 - np.eye(4)).max():.3f} (level 4 is minimal)")
