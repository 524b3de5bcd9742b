"""Frozen design data and named reference graphs.

Catalog designs live as interchange JSON files under flagspec/data,
generated once by scripts/generate_catalog_data.py and re-validated on
load.  FLAGSPEC_CATALOG_DIR overrides the embedded directory.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from pathlib import Path

from .designs import Design, DesignParams, design_from_json, validate_design
from .errors import UnknownCatalogId, UnknownGraphName
from .flag_graphs import gamma2
from .graphs import Graph, cycle_graph, degree_profile, girth
from .regularity import classify

CATALOG_IDS = (
    "biplane-4-3-2",
    "biplane-7-4-2",
    "biplane-11-5-2",
    "biplane-16-6-2-D1",
    "biplane-16-6-2-D2",
    "biplane-16-6-2-D3",
    "fano-7-3-1",
    "complete-6-20-10-3-4",
)

BIPLANE_IDS = tuple(i for i in CATALOG_IDS if i.startswith("biplane"))

REFERENCE_GRAPH_NAMES = ("clebsch", "coxeter", "cycle-4")


@dataclass(frozen=True)
class CatalogEntry:
    id: str
    params: DesignParams
    design: Design
    provenance: str


@lru_cache(maxsize=None)
def _load_entry(entry_id: str, override: str | None) -> CatalogEntry:
    if override:
        text = (Path(override) / f"{entry_id}.json").read_text()
    else:
        data = resources.files("flagspec").joinpath("data")
        text = data.joinpath(f"{entry_id}.json").read_text()
    raw = json.loads(text)
    design = design_from_json(raw)
    params = validate_design(design)
    return CatalogEntry(entry_id, params, design, raw.get("provenance", ""))


def get_entry(entry_id: str) -> CatalogEntry:
    if entry_id not in CATALOG_IDS:
        raise UnknownCatalogId(f"no catalog entry {entry_id!r}")
    return _load_entry(entry_id, os.environ.get("FLAGSPEC_CATALOG_DIR"))


def get_design(entry_id: str) -> Design:
    return get_entry(entry_id).design


def clebsch_graph() -> Graph:
    """Binary 4-vectors, adjacent when the difference is one of the four
    unit vectors or the all-ones vector; checked to be SRG(16,5,0,2)."""
    connection = (0b0001, 0b0010, 0b0100, 0b1000, 0b1111)
    edges = [
        (x, x ^ c) for x in range(16) for c in connection if x < (x ^ c)
    ]
    g = Graph(16, edges)
    profile = classify(g)
    assert profile.classification == "SRG"
    assert profile.degrees == {5} and profile.eta_set == {0}
    assert profile.mu_set == {2}
    return g


def reference_graph(name: str) -> Graph:
    if name == "clebsch":
        return clebsch_graph()
    if name == "coxeter":
        g = gamma2(get_design("biplane-7-4-2")).graph
        assert g.n == 28 and degree_profile(g) == {3} and girth(g) == 7
        return g
    if name == "cycle-4":
        return cycle_graph(4)
    raise UnknownGraphName(f"no reference graph {name!r}")
