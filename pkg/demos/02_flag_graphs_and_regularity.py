#!/usr/bin/env python3
"""Flag graphs of designs and where they land in the regularity hierarchy.

For each catalog design this script builds the first flag graph (flags
adjacent when they share exactly the point or exactly the block), measures
its local profile (degrees, common-neighbour counts over adjacent and
non-adjacent pairs), classifies it, and compares against the profile the
design parameters predict.  For the biplanes it does the same for the
second flag graph, whose adjacency needs lambda = 2 to make sense.

Run from the repository root:
    python3 demos/02_flag_graphs_and_regularity.py
"""

from flagspec import (
    BIPLANE_IDS,
    CATALOG_IDS,
    NotABiplane,
    check_against_prediction,
    classify,
    gamma1,
    gamma2,
    get_entry,
    predicted_gamma1_profile,
    predicted_gamma2_profile,
    validate_design,
)


def fmt(values):
    return "{" + ", ".join(str(v) for v in sorted(values)) + "}"


print("== Gamma_1 for every catalog design ==")
for cid in CATALOG_IDS:
    design = get_entry(cid).design
    fg = gamma1(design)
    profile = classify(fg.graph)
    prediction = predicted_gamma1_profile(validate_design(design))
    ok = check_against_prediction(profile, prediction)
    print(f"  {cid}: n={fg.graph.n} degrees={fmt(profile.degrees)} "
          f"eta={fmt(profile.eta_set)} mu={fmt(profile.mu_set)} "
          f"-> {profile.classification}"
          f" [{'matches prediction' if ok.passed else 'MISMATCH'}]")

print()
print("== Gamma_2 for the biplanes ==")
for cid in BIPLANE_IDS:
    design = get_entry(cid).design
    fg = gamma2(design)
    profile = classify(fg.graph)
    prediction = predicted_gamma2_profile(validate_design(design))
    ok = check_against_prediction(profile, prediction)
    print(f"  {cid}: n={fg.graph.n} degrees={fmt(profile.degrees)} "
          f"eta={fmt(profile.eta_set)} mu={fmt(profile.mu_set)} "
          f"-> {profile.classification}"
          f" [{'matches prediction' if ok.passed else 'MISMATCH'}]")

print()
print("== Why Gamma_2 needs a biplane ==")
fano = get_entry("fano-7-3-1").design
try:
    gamma2(fano)
except NotABiplane as exc:
    print(f"  gamma2(Fano) raises NotABiplane: {exc}")
