"""Generate the frozen catalog data files.

Small designs come from classical cyclic difference sets.  The three
16-point biplanes are found by exhaustive search over all fourteen groups
of order 16: every 6-subset is tested as a (16,6,2) difference set (each
non-identity element covered exactly twice by x*y^-1), every hit is
developed into a design by right translation, and designs are
deduplicated by canonical incidence-graph certificate.  The expected
outcome is exactly three isomorphism classes, told apart by the component
sizes of their gamma2 graphs (six of 16 / three of 32 / one of 64 plus
one of 32), which fixes the D1/D2/D3 ids.

Run from the repository root:  python3 scripts/generate_catalog_data.py
"""

from __future__ import annotations

import json
import sys
from itertools import combinations, product
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from flagspec.designs import (
    Design,
    design_from_difference_set,
    design_to_json,
    incidence_graph,
    validate_design,
)
from flagspec.flag_graphs import gamma2
from flagspec.graphs import connected_components
from flagspec.isomorphism import canonical_form

DATA_DIR = Path(__file__).resolve().parent.parent / "src" / "flagspec" / "data"


# --- the fourteen groups of order 16, as (elements, multiply) ------------

def abelian(orders):
    elements = list(product(*[range(o) for o in orders]))

    def mul(x, y):
        return tuple((a + b) % o for a, b, o in zip(x, y, orders))

    return elements, mul


def affine_mod8(a_values):
    """Maps x -> a*x + b on Z8 with a drawn from a 2-element subgroup of
    units; {1,7} gives D16, {1,3} SD16, {1,5} the modular group M4(2)."""
    elements = [(a, b) for a in a_values for b in range(8)]

    def mul(x, y):
        # composition (x after y): a1*(a2*t + b2) + b1
        return ((x[0] * y[0]) % 8, (x[0] * y[1] + x[1]) % 8)

    return elements, mul


def quaternion16():
    """a^i b^j with a^8 = 1, b^2 = a^4, b a = a^-1 b."""
    elements = [(i, j) for i in range(8) for j in range(2)]

    def mul(x, y):
        i, j = x
        k, l = y
        if j == 0:
            return ((i + k) % 8, l)
        i2, j2 = (i - k) % 8, 1 + l
        if j2 == 2:
            return ((i2 + 4) % 8, 0)
        return (i2, j2)

    return elements, mul


def semidirect_z4_z4():
    """a^i b^j with a^4 = b^4 = 1, b a = a^-1 b."""
    elements = [(i, j) for i in range(4) for j in range(4)]

    def mul(x, y):
        i, j = x
        k, l = y
        k = k if j % 2 == 0 else (-k) % 4
        return ((i + k) % 4, (j + l) % 4)

    return elements, mul


def semidirect_z2z2_z4():
    """(Z2 x Z2) x| Z4, the generator of Z4 swapping the coordinates."""
    elements = [(x, y, j) for x in range(2) for y in range(2) for j in range(4)]

    def mul(p, q):
        x1, y1, j1 = p
        x2, y2, j2 = q
        if j1 % 2:
            x2, y2 = y2, x2
        return ((x1 + x2) % 2, (y1 + y2) % 2, (j1 + j2) % 4)

    return elements, mul


def pauli_group():
    """Central product D4 o Z4: elements i^a X^b Z^c with XZ = -ZX."""
    elements = [(a, b, c) for a in range(4) for b in range(2) for c in range(2)]

    def mul(p, q):
        a1, b1, c1 = p
        a2, b2, c2 = q
        return ((a1 + a2 + 2 * c1 * b2) % 4, (b1 + b2) % 2, (c1 + c2) % 2)

    return elements, mul


def direct_product(g1, g2):
    e1, m1 = g1
    e2, m2 = g2
    elements = [(x, y) for x in e1 for y in e2]

    def mul(p, q):
        return (m1(p[0], q[0]), m2(p[1], q[1]))

    return elements, mul


def dihedral8():
    return affine_mod8_general(4, {1, 3})


def affine_mod8_general(n, a_values):
    elements = [(a, b) for a in sorted(a_values) for b in range(n)]

    def mul(x, y):
        return ((x[0] * y[0]) % n, (x[0] * y[1] + x[1]) % n)

    return elements, mul


def quaternion8():
    """Q8 as i^? no: a^i b^j with a^4 = 1, b^2 = a^2, b a = a^-1 b."""
    elements = [(i, j) for i in range(4) for j in range(2)]

    def mul(x, y):
        i, j = x
        k, l = y
        if j == 0:
            return ((i + k) % 4, l)
        i2, j2 = (i - k) % 4, 1 + l
        if j2 == 2:
            return ((i2 + 2) % 4, 0)
        return (i2, j2)

    return elements, mul


def all_groups_16():
    z2 = abelian((2,))
    return {
        "Z16": abelian((16,)),
        "Z8xZ2": abelian((8, 2)),
        "Z4xZ4": abelian((4, 4)),
        "Z4xZ2xZ2": abelian((4, 2, 2)),
        "Z2^4": abelian((2, 2, 2, 2)),
        "D16": affine_mod8({1, 7}),
        "SD16": affine_mod8({1, 3}),
        "M4(2)": affine_mod8({1, 5}),
        "Q16": quaternion16(),
        "D8xZ2": direct_product(dihedral8(), z2),
        "Q8xZ2": direct_product(quaternion8(), z2),
        "Z4:Z4": semidirect_z4_z4(),
        "(Z2xZ2):Z4": semidirect_z2z2_z4(),
        "D4oZ4": pauli_group(),
    }


def check_group(elements, mul):
    """Identity, inverses, associativity on a sample; closure via table."""
    assert len(set(elements)) == len(elements) == 16
    idx = {e: i for i, e in enumerate(elements)}
    identity = None
    for e in elements:
        if all(mul(e, x) == x and mul(x, e) == x for x in elements):
            identity = e
            break
    assert identity is not None, "no identity"
    inverse = {}
    for x in elements:
        invs = [y for y in elements if mul(x, y) == identity]
        assert len(invs) == 1, f"bad inverse count for {x}"
        inverse[x] = invs[0]
    for x in elements[:6]:
        for y in elements[:6]:
            assert mul(x, y) in idx
            for z in elements[:6]:
                assert mul(mul(x, y), z) == mul(x, mul(y, z)), "not associative"
    return identity, inverse


def difference_sets(elements, mul, identity, inverse, k=6, lam=2):
    """All k-subsets covering every non-identity element exactly lam times
    as x * y^-1."""
    hits = []
    for subset in combinations(elements, k):
        counts: dict = {}
        ok = True
        for x in subset:
            for y in subset:
                if x == y:
                    continue
                d = mul(x, inverse[y])
                counts[d] = counts.get(d, 0) + 1
                if counts[d] > lam:
                    ok = False
                    break
            if not ok:
                break
        if ok and len(counts) == 15:
            assert identity not in counts
            hits.append(subset)
    return hits


def develop(elements, mul, base) -> Design:
    position = {e: i for i, e in enumerate(elements)}
    blocks = [[position[mul(x, g)] for x in base] for g in elements]
    d = Design(len(elements), blocks)
    validate_design(d)
    return d


def incidence_cert(d: Design) -> bytes:
    g = incidence_graph(d)
    return canonical_form(g, [0] * d.v + [1] * d.b).certificate


def find_16_point_biplanes() -> list[tuple[Design, str, tuple]]:
    classes: dict[bytes, tuple[Design, str, tuple]] = {}
    for name, (elements, mul) in all_groups_16().items():
        identity, inverse = check_group(elements, mul)
        hits = difference_sets(elements, mul, identity, inverse)
        seen_here: set[bytes] = set()
        fresh = 0
        for base in hits:
            d = develop(elements, mul, base)
            cert = incidence_cert(d)
            if cert in seen_here:
                continue
            seen_here.add(cert)
            if cert not in classes:
                classes[cert] = (d, name, base)
                fresh += 1
        print(f"{name}: {len(hits)} difference sets, "
              f"{len(seen_here)} classes here, {fresh} new")
    return list(classes.values())


def component_signature(d: Design) -> tuple[int, ...]:
    g2 = gamma2(d)
    return tuple(sorted(len(c) for c in connected_components(g2.graph)))


SIGNATURE_TO_ID = {
    (16, 16, 16, 16, 16, 16): "biplane-16-6-2-D1",
    (32, 32, 32): "biplane-16-6-2-D2",
    (32, 64): "biplane-16-6-2-D3",
}


def write_entry(path: Path, d: Design, entry_id: str, provenance: str):
    obj = design_to_json(d)
    obj["id"] = entry_id
    obj["provenance"] = provenance
    path.write_text(json.dumps(obj, indent=1) + "\n")
    print(f"wrote {path.name}")


def main():
    DATA_DIR.mkdir(parents=True, exist_ok=True)

    write_entry(
        DATA_DIR / "biplane-4-3-2.json",
        Design(4, list(combinations(range(4), 3))),
        "biplane-4-3-2",
        "all 3-subsets of a 4-point set; the unique (4,3,2) biplane",
    )
    write_entry(
        DATA_DIR / "biplane-7-4-2.json",
        design_from_difference_set(7, {0, 3, 5, 6}),
        "biplane-7-4-2",
        "developed from the difference set {0,3,5,6} mod 7 "
        "(complements of the lines of the 7-point plane)",
    )
    write_entry(
        DATA_DIR / "biplane-11-5-2.json",
        design_from_difference_set(11, {1, 3, 4, 5, 9}),
        "biplane-11-5-2",
        "developed from the quadratic residues {1,3,4,5,9} mod 11; "
        "the unique (11,5,2) biplane",
    )
    write_entry(
        DATA_DIR / "fano-7-3-1.json",
        design_from_difference_set(7, {1, 2, 4}),
        "fano-7-3-1",
        "developed from the difference set {1,2,4} mod 7; "
        "the projective plane of order 2",
    )
    write_entry(
        DATA_DIR / "complete-6-20-10-3-4.json",
        Design(6, list(combinations(range(6), 3))),
        "complete-6-20-10-3-4",
        "all 3-subsets of a 6-point set; the repeat-free (6,20,10,3,4) design",
    )

    found = find_16_point_biplanes()
    print(f"{len(found)} isomorphism classes of 16-point biplanes")
    assert len(found) == 3, "expected exactly three classes; widen the search"
    assigned = {}
    for d, group, base in found:
        sig = component_signature(d)
        entry_id = SIGNATURE_TO_ID[sig]
        assert entry_id not in assigned
        assigned[entry_id] = (d, group, base, sig)
    for entry_id in sorted(assigned):
        d, group, base, sig = assigned[entry_id]
        provenance = (
            f"developed from the difference set {sorted(base)} in {group}; "
            f"identified by its gamma2 component sizes {list(sig)}"
        )
        write_entry(DATA_DIR / f"{entry_id}.json", d, entry_id, provenance)


if __name__ == "__main__":
    main()
