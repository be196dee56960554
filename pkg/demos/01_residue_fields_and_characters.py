"""Residue fields, roots of unity, and the Zolotarev sign.

Walks through the exact arithmetic layer: canonical field contexts,
the exponent encoding of mu_n, the power residue character, and the
permutation-sign route to the Legendre symbol.
"""

from resforge import (MuScalar, field_make, mu_dlog, mu_embed,
                      power_residue_char, zolotarev_sign)

# F_7 with its canonical generator (the least primitive root, 3)
k = field_make(7)
print(f"F_{k.q}: generator g = {k.g}")

# mu_2 = {1, -1} sits inside F_7^x; exponents encode powers of zeta_2 = -1
zeta = mu_embed(k, MuScalar(2, 1))
print(f"zeta_2 in F_7 = {zeta}   (that is -1 mod 7)")

# The power residue character x -> x^((q-1)/n).  3 is not a square mod 7:
chi = power_residue_char(k, 3, 2)
print(f"chi_2(3) = {chi}  ->  {mu_embed(k, chi)}")

# Zolotarev: the same value as the sign of multiplication by 3 on F_7.
print("sign(x -> 3x on F_7) =", zolotarev_sign(k, 3))
print("sign(x -> 2x on F_7) =", zolotarev_sign(k, 2), " (2 = 3^2 is a square)")

# The comparison holds across every odd field we can enumerate:
for p in (3, 5, 7, 11, 13):
    c = field_make(p)
    match = all(
        zolotarev_sign(c, a) == (1 if power_residue_char(c, a, 2).exp == 0 else -1)
        for a in range(1, p))
    print(f"p = {p:2}: sign = Euler criterion on all of F_p^x -> {match}")

# Extensions use the canonical defining polynomial; F_9 = F_3[x]/(x^2 + 1).
k9 = field_make(3, 2)
print(f"\nF_9 defined by {k9.poly} over F_3, generator encoding {k9.g}")
cube = power_residue_char(k9, k9.g, 8)
print(f"chi_8(g) = {cube}  (g generates, so the character is faithful)")

# Discrete logs on the n-torsion invert the embedding exactly.
for e in range(8):
    x = mu_embed(k9, MuScalar(8, e))
    assert mu_dlog(k9, x, 8).exp == e
print("mu_embed and mu_dlog are mutually inverse on mu_8 in F_9")
