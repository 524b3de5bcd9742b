#!/usr/bin/env python3
"""Construct block designs three ways and put each through the validator.

Walks through:
  * parameter arithmetic (deriving b and r, rejecting impossible tuples),
  * explicit block lists, including a deliberately broken one,
  * difference set development for symmetric designs.

Run from the repository root:
    python3 demos/01_designs_and_validation.py
"""

from flagspec import (
    Design,
    FlagspecError,
    derive_params,
    design_from_difference_set,
    get_entry,
    validate_design,
)


def show(title, params):
    print(f"  {title}: v={params.v} b={params.b} r={params.r} "
          f"k={params.k} lambda={params.lam} "
          f"{'symmetric' if params.is_symmetric else 'non-symmetric'}")


print("== Parameter arithmetic ==")
show("Fano plane", derive_params(7, 3, 1))
show("complete 3-subsets of 6 points", derive_params(6, 3, 4))
try:
    derive_params(6, 4, 3)
except FlagspecError as exc:
    print(f"  (6, 4, 3) is impossible: {exc}")

print()
print("== Explicit block lists ==")
fano = Design(7, [[0, 1, 3], [1, 2, 4], [2, 3, 5], [3, 4, 6],
                  [4, 5, 0], [5, 6, 1], [6, 0, 2]])
show("validated Fano", validate_design(fano))

broken = Design(7, [[0, 1, 3], [1, 2, 4], [2, 3, 5], [3, 4, 6],
                    [4, 5, 0], [5, 6, 1], [6, 0, 4]])
try:
    validate_design(broken)
except FlagspecError as exc:
    print(f"  one wrong point breaks balance: {exc}")

print()
print("== Difference set development ==")
# {1, 2, 4} is the quadratic-residue difference set mod 7
qr_fano = design_from_difference_set(7, [1, 2, 4])
show("from difference set {1,2,4} mod 7", validate_design(qr_fano))

biplane = design_from_difference_set(11, [1, 3, 4, 5, 9])
show("biplane from QR(11)", validate_design(biplane))

print()
print("== The bundled catalog ==")
for cid in ("biplane-4-3-2", "biplane-16-6-2-D1", "complete-6-20-10-3-4"):
    entry = get_entry(cid)
    show(cid, validate_design(entry.design))
