"""End-to-end d-MC enumeration with operation accounting.

For each minimal cut the candidate stream is generated lazily; every
candidate gets exactly one max-flow computation (no incremental reuse
between candidates, which is unsound in general) followed by at most one
residual search per unsaturated arc.  Accepted vectors are merged into a
set because distinct cuts can emit the same d-MC.

The counters exist so the operation-count bounds can be audited: the
number of max-flow calls is bounded by the total closed-form candidate
count across cuts, and the number of residual searches by (arc count) x
(candidates examined).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .candidates import count_candidates, enumerate_candidates
from .cuts import MinCut, is_min_cut
from .errors import ValidationError
from .maxflow import max_flow
from .network import Network, StateVector, saturated_vector
from .verify import verify


@dataclass
class OperationCounters:
    maxflow_calls: int = 0
    candidates_total: int = 0
    candidates_per_cut: list[int] = field(default_factory=list)
    residual_searches: int = 0
    duplicates_removed: int = 0

    def to_dict(self) -> dict:
        return {
            "maxflow_calls": self.maxflow_calls,
            "candidates_total": self.candidates_total,
            "candidates_per_cut": list(self.candidates_per_cut),
            "residual_searches": self.residual_searches,
            "duplicates_removed": self.duplicates_removed,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "OperationCounters":
        return cls(
            maxflow_calls=data["maxflow_calls"],
            candidates_total=data["candidates_total"],
            candidates_per_cut=list(data["candidates_per_cut"]),
            residual_searches=data["residual_searches"],
            duplicates_removed=data["duplicates_removed"],
        )


@dataclass(frozen=True)
class SolveReport:
    """Deduplicated, lexicographically sorted d-MC list plus instrumentation."""

    demand: int
    cut_count: int
    arc_count: int
    max_candidates_per_cut: int
    total_candidate_bound: int
    dmcs: tuple[StateVector, ...]
    counters: OperationCounters
    infeasible_demand: bool
    diagnostic: str | None

    def to_dict(self) -> dict:
        return {
            "demand": self.demand,
            "cut_count": self.cut_count,
            "arc_count": self.arc_count,
            "max_candidates_per_cut": self.max_candidates_per_cut,
            "total_candidate_bound": self.total_candidate_bound,
            "dmcs": [list(v) for v in self.dmcs],
            "counters": self.counters.to_dict(),
            "infeasible_demand": self.infeasible_demand,
            "diagnostic": self.diagnostic,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "SolveReport":
        return cls(
            demand=data["demand"],
            cut_count=data["cut_count"],
            arc_count=data["arc_count"],
            max_candidates_per_cut=data["max_candidates_per_cut"],
            total_candidate_bound=data["total_candidate_bound"],
            dmcs=tuple(tuple(v) for v in data["dmcs"]),
            counters=OperationCounters.from_dict(data["counters"]),
            infeasible_demand=data["infeasible_demand"],
            diagnostic=data["diagnostic"],
        )

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2)

    @classmethod
    def from_json(cls, text: str) -> "SolveReport":
        return cls.from_dict(json.loads(text))


def find_all_dmcs(net: Network, demand: int, cuts: list[MinCut]) -> SolveReport:
    """Enumerate every d-MC of ``net`` at level ``demand`` from the given cut list.

    With the complete minimal-cut list the result is exactly the set of
    d-MCs; with a partial list it is the subset those cuts generate.  The
    run is sequential and fully deterministic, counters included.
    """
    if demand < 0:
        raise ValidationError(f"demand must be nonnegative, got {demand}")
    if not cuts:
        raise ValidationError("cut list is empty")
    for cut in cuts:
        if not is_min_cut(net, cut):
            raise ValidationError(f"{tuple(cut)} is not a minimal cut of this network")

    counters = OperationCounters()
    found: set[StateVector] = set()
    for cut_index, cut in enumerate(cuts):
        generated = 0
        for candidate in enumerate_candidates(net, cut, demand, origin_cut=cut_index):
            generated += 1
            counters.candidates_total += 1
            verdict = verify(net, candidate.vector, demand, counters=counters)
            if verdict.is_dmc:
                if candidate.vector in found:
                    counters.duplicates_removed += 1
                else:
                    found.add(candidate.vector)
        counters.candidates_per_cut.append(generated)

    per_cut_bounds = [count_candidates(net, cut, demand) for cut in cuts]
    # Feasibility diagnostic; this max-flow call is outside the per-candidate
    # accounting, so the audit bounds stay exact.
    capacity_flow = max_flow(net, saturated_vector(net)).value
    infeasible = demand > capacity_flow
    diagnostic = None
    if infeasible:
        diagnostic = (
            f"no {demand}-MC exists: demand {demand} exceeds the max flow "
            f"{capacity_flow} of the fully saturated network"
        )
    return SolveReport(
        demand=demand,
        cut_count=len(cuts),
        arc_count=net.arc_count,
        max_candidates_per_cut=max(per_cut_bounds),
        total_candidate_bound=sum(per_cut_bounds),
        dmcs=tuple(sorted(found)),
        counters=counters,
        infeasible_demand=infeasible,
        diagnostic=diagnostic,
    )


def audit_complexity(report: SolveReport) -> bool:
    """Check the operation counts against their closed-form bounds.

    Max-flow usage must not exceed the summed per-cut candidate counts
    (which in turn cannot exceed cuts x max-per-cut), and residual searches
    must not exceed one per arc per examined candidate.
    """
    c = report.counters
    return (
        c.maxflow_calls <= report.total_candidate_bound
        and report.total_candidate_bound <= report.cut_count * report.max_candidates_per_cut
        and c.residual_searches <= report.arc_count * c.candidates_total
    )
