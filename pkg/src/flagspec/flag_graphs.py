"""The two graphs on the flags of a design.

gamma1 joins flags sharing the point or the block; it coincides with the
line graph of the incidence graph.  gamma2, defined for biplanes only,
joins (p, c) and (q, d) exactly when the blocks meet in {p, q}.  Vertex i
of either graph is flags[i]; flags are listed in lexicographic (point,
block_index) order, which makes gamma1 positionally equal to the line
graph of the incidence graph (whose edges sort the same way).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .designs import Design, DesignParams, Flag, validate_design
from .errors import NotABiplane, RepeatedBlock
from .graphs import Graph, graph_to_json


@dataclass(frozen=True)
class FlagGraph:
    graph: Graph
    flags: tuple[Flag, ...]
    params: DesignParams
    variant: str  # "gamma1" or "gamma2"

    def flag_index(self, flag: Flag) -> int:
        return self.flags.index(flag)


def _sorted_flags(d: Design) -> tuple[Flag, ...]:
    flags = [Flag(p, j) for j, blk in enumerate(d.blocks) for p in blk]
    flags.sort()
    return tuple(flags)


def gamma1(d: Design) -> FlagGraph:
    """Flag graph: (p, c) ~ (q, d) iff p = q or c = d (and the flags differ)."""
    params = validate_design(d)
    flags = _sorted_flags(d)
    index = {f: i for i, f in enumerate(flags)}
    edges = []
    by_point: dict[int, list[int]] = {}
    by_block: dict[int, list[int]] = {}
    for f, i in index.items():
        by_point.setdefault(f.point, []).append(i)
        by_block.setdefault(f.block_index, []).append(i)
    for group in list(by_point.values()) + list(by_block.values()):
        edges.extend(combinations(sorted(group), 2))
    return FlagGraph(Graph(len(flags), edges), flags, params, "gamma1")


def gamma2(d: Design) -> FlagGraph:
    """Biplane flag graph: (p, c) ~ (q, d) iff blocks c and d meet in {p, q}.

    Defined only for symmetric designs with lambda = 2, and only without
    repeated blocks (two equal blocks have no two-point intersection to
    speak of), so repeats are rejected even when the design allows them.
    """
    params = validate_design(d)
    if params.lam != 2 or not params.is_symmetric:
        raise NotABiplane(
            f"gamma2 needs a symmetric design with lambda=2, got "
            f"(v,b,r,k,lambda)={params.as_tuple()}"
        )
    block_sets = [frozenset(blk) for blk in d.blocks]
    for j, bs in enumerate(block_sets):
        if bs in block_sets[:j]:
            raise RepeatedBlock(j)
    flags = _sorted_flags(d)
    index = {f: i for i, f in enumerate(flags)}
    edges = []
    for j, l in combinations(range(d.b), 2):
        meet = block_sets[j] & block_sets[l]
        if len(meet) == 2:
            x, y = sorted(meet)
            edges.append((index[Flag(x, j)], index[Flag(y, l)]))
            edges.append((index[Flag(y, j)], index[Flag(x, l)]))
    return FlagGraph(Graph(len(flags), edges), flags, params, "gamma2")


def flag_graph_to_json(fg: FlagGraph) -> dict:
    """Graph interchange object extended with the flag list and parameters."""
    obj = graph_to_json(fg.graph)
    obj["flags"] = [[f.point, f.block_index] for f in fg.flags]
    obj["variant"] = fg.variant
    obj["params"] = {
        "v": fg.params.v,
        "b": fg.params.b,
        "r": fg.params.r,
        "k": fg.params.k,
        "lambda": fg.params.lam,
    }
    return obj
