"""Candidate verification.

A state vector X is a d-MC exactly when W(X) = d and raising any
unsaturated arc by one unit pushes the max flow above d.  ``verify``
implements the sound residual-path form of that test: after a max flow of
value d is in place, arc e is checked by granting it one extra unit of
capacity and searching the residual graph for an augmenting path, which
costs one graph search per arc instead of a fresh max-flow computation.

``verify_flawed`` implements a historically published acceptance test that
drops the W(X) = d hypothesis and takes plain source-sink reachability in
the bumped capacity graph as its evidence.  It is kept as a diagnostic
because it wrongly accepts candidates whose max flow is below the demand;
``dmincut check-flaw`` surfaces the disagreements.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from .maxflow import max_flow, residual_reachable, zero_flow
from .network import Network, StateVector, bump, unsaturated_set

MODE_CORRECTED = "corrected"
MODE_FLAWED = "flawed"


@dataclass(frozen=True)
class Verdict:
    """Outcome of a candidate test.

    ``failing_arc`` is the lowest-indexed unsaturated arc whose unit bump
    failed the test, or None; in corrected mode a rejection with
    ``flow_value != demand`` happened before any arc was examined.
    """

    is_dmc: bool
    flow_value: int
    failing_arc: int | None
    mode: str


def verify(net: Network, state: StateVector, demand: int, counters=None) -> Verdict:
    """Classify ``state`` as d-MC or not at level ``demand`` (sound test).

    Short-circuits on the first failing arc; arcs are examined in
    ascending id order so the reported witness is deterministic.
    """
    net.validate_state(state)
    fs = max_flow(net, state)
    if counters is not None:
        counters.maxflow_calls += 1
    if fs.value != demand:
        return Verdict(is_dmc=False, flow_value=fs.value, failing_arc=None, mode=MODE_CORRECTED)
    for arc_id in sorted(unsaturated_set(net, state)):
        bumped = replace(fs, capacities=bump(net, state, arc_id))
        if counters is not None:
            counters.residual_searches += 1
        if not residual_reachable(bumped):
            return Verdict(is_dmc=False, flow_value=fs.value, failing_arc=arc_id, mode=MODE_CORRECTED)
    return Verdict(is_dmc=True, flow_value=fs.value, failing_arc=None, mode=MODE_CORRECTED)


def verify_flawed(net: Network, state: StateVector, demand: int) -> Verdict:
    """The unsound published test, reproduced verbatim for diagnostics.

    Accepts whenever every unsaturated arc's bumped capacity graph has any
    source-sink path of positive capacities; never consults the demand, so
    candidates with W(state) != demand can be (wrongly) accepted.  The flow
    value is still computed for reporting.
    """
    net.validate_state(state)
    fs = max_flow(net, state)
    for arc_id in sorted(unsaturated_set(net, state)):
        plain = zero_flow(net, bump(net, state, arc_id))
        if not residual_reachable(plain):
            return Verdict(is_dmc=False, flow_value=fs.value, failing_arc=arc_id, mode=MODE_FLAWED)
    return Verdict(is_dmc=True, flow_value=fs.value, failing_arc=None, mode=MODE_FLAWED)
