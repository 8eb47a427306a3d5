#!/usr/bin/env python3
"""Walk through the two exact Eisenstein identities for Heegner classes.

For signature (n, 2) and weight k = 1 + n/2, the coefficient functional
c_m applied to the normalized Eisenstein series E_k has the closed form
2 sigma_{n/2}(m) / zeta(-n/2), and the primitive Heegner class (the
Moebius-inverted combination over square divisors) evaluates to

    (2 m^{n/2} / zeta(-n/2)) * prod_{p | m} (1 + p^{-n/2}),

which is never zero.  Everything below is exact rational arithmetic; the
two sides of each identity are computed by independent routes.
"""

from cyclecones import (
    eisenstein,
    eisenstein_coefficient_identity,
    primitive_eisenstein_identity,
    primitive_heegner_class,
    weight_for_signature,
    zeta_negative,
)

n = 10
k = weight_for_signature(n)
print(f"signature ({n}, 2)  ->  weight k = {k},  zeta(-{n//2}) = {zeta_negative(n//2)}")
print()

series = eisenstein(k, 201)
print(f"E_{k} = 1 " + " ".join(
    f"{'+' if c > 0 else '-'} {abs(c)} q^{i}"
    for i, c in enumerate(series.coefficients[:4]) if i
) + " + ...")
print()

print("coefficient identity, q-expansion vs closed form:")
for m in (1, 2, 6, 12):
    r = eisenstein_coefficient_identity(m, n, series)
    print(f"  m={m:3d}:  c_m(E) = {r.lhs}  closed form = {r.rhs}  equal: {r.equal}")
print()

print("primitive classes as Moebius combinations:")
for m in (4, 36):
    combo = primitive_heegner_class(m, k)
    terms = " ".join(f"{'+' if a > 0 else '-'} c_{i}" for i, a in combo.terms)
    print(f"  P_{m} = {terms}")
print()

print("primitive evaluation vs Euler product (both exact):")
for m in (1, 2, 4, 36, 100):
    r = primitive_eisenstein_identity(m, n, series)
    print(f"  m={m:3d}:  lhs = {r.lhs}  rhs = {r.rhs}  equal: {r.equal}")

print()
print("scan m <= 200 on three signatures:")
for n in (10, 18, 26):
    series = eisenstein(weight_for_signature(n), 201)
    ok = all(
        eisenstein_coefficient_identity(m, n, series).equal
        and primitive_eisenstein_identity(m, n, series).equal
        for m in range(1, 201)
    )
    print(f"  n={n}: all 400 comparisons exactly equal: {ok}")
