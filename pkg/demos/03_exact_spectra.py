#!/usr/bin/env python3
"""Exact spectra: characteristic polynomials, closed forms, certification.

The adjacency spectra here live in quadratic extensions of the rationals,
so floating point is only used at the very end as a sanity overlay.  The
pipeline is:

    design -> graph -> integer characteristic polynomial
           -> closed-form spectrum claim -> exact verification

Run from the repository root:
    python3 demos/03_exact_spectra.py
"""

from flagspec import (
    char_poly,
    claim_to_polynomial,
    gamma1,
    formula_spectrum_gamma1,
    get_entry,
    incidence_graph,
    formula_spectrum_incidence,
    numeric_spectrum,
    claim_to_text,
    validate_design,
    verify_spectrum,
)

print("== Incidence spectrum of the Fano plane ==")
fano = get_entry("fano-7-3-1").design
inc = incidence_graph(fano)
p = char_poly(inc)
print(f"  char poly: {p}")
claim = formula_spectrum_incidence(validate_design(fano))
print(f"  closed form: {claim_to_text(claim)}")
print(f"  claim expands to the same polynomial: "
      f"{claim_to_polynomial(claim) == p}")
print(f"  exact verification: {verify_spectrum(inc, claim)}")

print()
print("== Gamma_1 spectra of the symmetric designs ==")
for cid in ("biplane-4-3-2", "biplane-7-4-2", "biplane-11-5-2",
            "biplane-16-6-2-D1"):
    design = get_entry(cid).design
    g = gamma1(design).graph
    claim = formula_spectrum_gamma1(validate_design(design))
    print(f"  {cid}: {claim_to_text(claim)}  "
          f"verified={verify_spectrum(g, claim)}")

print()
print("== Conjugate surds straddling an integer eigenvalue ==")
d620 = get_entry("complete-6-20-10-3-4").design
g = gamma1(d620).graph
claim = formula_spectrum_gamma1(validate_design(d620))
print(f"  gamma1 of the 3-subsets design: {claim_to_text(claim)}")
print(f"  verified: {verify_spectrum(g, claim)}")

print()
print("== Numeric overlay ==")
for value, mult in numeric_spectrum(g, tolerance=1e-9):
    print(f"  {value:+.6f}  x{mult}")
