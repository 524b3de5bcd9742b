#!/usr/bin/env python3
"""What the second flag graph falls apart into, biplane by biplane.

Gamma_2 keeps a flag pair adjacent only when the two blocks meet exactly
in the two points that tie the pair together, which is restrictive enough
that the graph usually disconnects.  The pieces are old friends:

  (4, 3, 2)    three 4-cycles
  (7, 4, 2)    the Coxeter graph, connected
  (11, 5, 2)   connected on 55 vertices
  (16, 6, 2)   depends on which of the three designs you take:
               D1 gives six Clebsch graphs, D2 three cospectral isomorphic
               pieces on 32 vertices, D3 a 64 + 32 split

Run from the repository root:
    python3 demos/05_gamma2_components.py
"""

from flagspec import (
    BIPLANE_IDS,
    char_poly,
    classify,
    connected_components,
    gamma2,
    get_entry,
    reference_graph,
    girth,
    is_isomorphic,
    numeric_spectrum,
)


def summarize(cid):
    g = gamma2(get_entry(cid).design).graph
    comps = connected_components(g)
    sizes = [len(c) for c in comps]
    print(f"  {cid}: {len(comps)} component(s), sizes {sizes}")
    return g, comps


print("== Component counts ==")
pieces = {cid: summarize(cid) for cid in BIPLANE_IDS}

print()
print("== The small biplane: three squares ==")
g, comps = pieces["biplane-4-3-2"]
square = g.subgraph(comps[0])
print(f"  girth {girth(square)}, degrees "
      f"{sorted(square.degree(v) for v in range(square.n))}")

print()
print("== (7,4,2): the Coxeter graph ==")
g, comps = pieces["biplane-7-4-2"]
coxeter = reference_graph("coxeter")
print(f"  connected on {g.n} vertices, girth {girth(g)}")
print(f"  isomorphic to the catalog Coxeter graph: "
      f"{is_isomorphic(g, coxeter)}")

print()
print("== D1: six copies of the Clebsch graph ==")
g, comps = pieces["biplane-16-6-2-D1"]
clebsch = reference_graph("clebsch")
print("  every component isomorphic to Clebsch: "
      f"{all(is_isomorphic(g.subgraph(c), clebsch) for c in comps)}")
piece = g.subgraph(comps[0])
profile = classify(piece)
print(f"  component profile: degrees={sorted(profile.degrees)} "
      f"eta={sorted(profile.eta_set)} mu={sorted(profile.mu_set)} "
      f"({profile.classification})")

print()
print("== D2 vs D3: same sizes would be too easy ==")
g2, comps2 = pieces["biplane-16-6-2-D2"]
a, b, c = (g2.subgraph(comp) for comp in comps2)
print(f"  D2 components pairwise isomorphic: "
      f"{is_isomorphic(a, b) and is_isomorphic(b, c)}")
for value, mult in numeric_spectrum(a, tolerance=1e-9):
    print(f"    {value:+.6f}  x{mult}")

g3, comps3 = pieces["biplane-16-6-2-D3"]
big, small = (g3.subgraph(comp) for comp in comps3[::-1])
big, small = (big, small) if big.n > small.n else (small, big)
print(f"  D3 splits {big.n} + {small.n}; char polys of the pieces differ: "
      f"{char_poly(big) != char_poly(small)}")
