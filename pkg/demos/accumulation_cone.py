#!/usr/bin/env python3
"""Truncated accumulation-cone models: span, pointedness, extremal rays.

The cone is generated by the Kähler class together with the primitive
Heegner classes up to a truncation bound, in coordinates dual to the
echelon basis.  Exact LP decides pointedness and extremality; the span
always fills the whole dual space once the truncation passes its
dimension, and the extremal ray set stops moving early, the finite
shadow of polyhedrality.
"""

from cyclecones import (
    accumulation_cone_model,
    dim_mk,
    extremal_rays,
    is_pointed,
    miller_basis,
    pointedness_witness,
    span_dimension,
    weight_for_signature,
)

for n in (10, 34, 66):
    k = weight_for_signature(n)
    basis = miller_basis(k, 201)
    cone = accumulation_cone_model(k, 200, basis)
    half = accumulation_cone_model(k, 100, basis)
    rays = extremal_rays(cone)
    print(f"signature ({n}, 2), weight {k}: dim M_k = {dim_mk(k)}")
    print(f"  generators: {len(cone.generators)} (omega + P_1..P_200)")
    print(f"  span dimension: {span_dimension(cone)}")
    print(f"  pointed: {is_pointed(cone)}")
    print(f"  extremal rays: {len(rays)}, stable from M=100: {rays == extremal_rays(half)}")
    for r in sorted(rays, key=lambda r: r.canonical):
        shown = ", ".join(str(c) if len(str(c)) < 14 else f"{float(c):.4g}"
                          for c in r.canonical)
        print(f"    ({shown})")
    print()

# tiny cone with an exact separating functional
k = 18
cone = accumulation_cone_model(k, 30, miller_basis(k, 32))
y = pointedness_witness(cone)
print(f"weight {k}, M=30: separating functional y = {tuple(map(str, y))}")
print("  <y, g> >= 1 on every generator:",
      all(sum(a * b for a, b in zip(y, g.coords)) >= 1 for g in cone.generators))
