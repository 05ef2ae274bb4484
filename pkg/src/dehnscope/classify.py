"""Degree of the Dehn function of a Bestvina-Brady group from its defining graph."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import D1Unverified, Disconnected, NotFinitelyPresented
from .flag import SCResult, SCStatus, simply_connected_status
from .graph import SimplicialGraph, empty_graph, join, path_graph
from .reducible import PropertyWitness, has_D3, has_D4, maximal_reducible_subgraphs


@dataclass
class ClassificationReport:
    d1_status: SCResult
    is_tree: bool
    d3: PropertyWitness
    d4: PropertyWitness
    exponent: int | None
    cat0_obstructed: bool
    cones_simply_connected: bool

    def to_dict(self) -> dict:
        def wit(p):
            return {"holds": p.holds,
                    "witness": list(p.witness.vertices) if p.witness else None}
        return {
            "d1_status": self.d1_status.to_dict(),
            "is_tree": self.is_tree,
            "d3": wit(self.d3),
            "d4": wit(self.d4),
            "exponent": self.exponent,
            "cat0_obstructed": self.cat0_obstructed,
            "cones_simply_connected": self.cones_simply_connected,
        }


def dehn_exponent(g: SimplicialGraph, pi1_budget: int | None = None) -> ClassificationReport:
    """Exponent alpha such that the Dehn function of BB(g) is n^alpha.

    Raises NotFinitelyPresented when the flag complex is not simply
    connected and D1Unverified when the pi1 test ran out of budget.
    """
    if not g.is_connected() or len(g) == 0:
        raise Disconnected("classification requires a connected graph")
    status = simply_connected_status(g, pi1_budget)
    tree = g.is_tree()
    sets = maximal_reducible_subgraphs(g)
    d3 = has_D3(g, sets)
    d4 = has_D4(g, sets)
    report = ClassificationReport(status, tree, d3, d4, None, d3.holds, not d3.holds)
    if status.status is SCStatus.REFUTED:
        raise NotFinitelyPresented("flag complex is not simply connected", status)
    if status.status is SCStatus.UNKNOWN:
        raise D1Unverified("simple connectivity not verified within budget", report)
    if d4:
        report.exponent = 4
    elif d3:
        report.exponent = 3
    elif not tree:
        report.exponent = 2
    else:
        report.exponent = 1
    return report


def suspension_of_path(length: int) -> SimplicialGraph:
    """{x,y} joined with a path with `length` edges."""
    if length < 1:
        raise ValueError("path length must be at least 1")
    return join(empty_graph(["x", "y"]), path_graph([f"p{i}" for i in range(length + 1)]))


def classify_suspension_of_path(length: int) -> int:
    return dehn_exponent(suspension_of_path(length)).exponent
