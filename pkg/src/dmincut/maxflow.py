"""Max-flow engine: blocking-flow computation and residual reachability.

The solver needs three primitives: the max-flow value W(X) of a network
under a capacity state X, the residual graph of a feasible flow, and the
question "can one more unit be sent once d units are in place".  A
blocking-flow (level graph) method is used; adjacency is traversed in
ascending arc-id order, so identical inputs always produce the identical
flow, not merely the same value.

Residual bookkeeping is per arc (slot pair), which makes anti-parallel
arcs work without node-splitting tricks.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, replace

from .errors import ContractError
from .network import Network, StateVector, bump, unsaturated_set

__all__ = ["FlowState", "max_flow", "residual_reachable", "check_one_more_unit", "zero_flow"]


@dataclass(frozen=True)
class FlowState:
    """A feasible integer flow under a specific capacity state.

    ``flows[i]`` is the flow on arc i+1, ``value`` the net outflow of the
    source.  Conservation and capacity feasibility hold by construction for
    states produced by :func:`max_flow`; swapping in a componentwise-larger
    capacity vector (see ``dataclasses.replace``) keeps the flow feasible.
    """

    net: Network
    capacities: StateVector
    flows: tuple[int, ...]
    value: int


def max_flow(net: Network, state: StateVector, limit: int | None = None) -> FlowState:
    """Send as much flow as possible from source to sink under ``state``.

    With ``limit`` set, augmentation stops once the value reaches it, which
    yields a feasible (not necessarily maximal) flow of value
    ``min(limit, W(state))``.
    """
    net.validate_state(state)
    n = net.node_count
    source, sink = net.source, net.sink
    adj = net.out_slots
    to = net.slot_heads
    m = net.arc_count
    residual = [0] * (2 * m)
    for i in range(m):
        residual[2 * i] = state[i]

    total = 0
    infinity = sum(state) + 1
    while limit is None or total < limit:
        # BFS level graph over positive-residual slots.
        level = [-1] * (n + 1)
        level[source] = 0
        queue = deque([source])
        while queue:
            u = queue.popleft()
            for slot in adj[u]:
                v = to[slot]
                if residual[slot] > 0 and level[v] < 0:
                    level[v] = level[u] + 1
                    queue.append(v)
        if level[sink] < 0:
            break

        iters = [0] * (n + 1)

        def push(u: int, amount: int) -> int:
            if u == sink:
                return amount
            while iters[u] < len(adj[u]):
                slot = adj[u][iters[u]]
                v = to[slot]
                if residual[slot] > 0 and level[v] == level[u] + 1:
                    sent = push(v, min(amount, residual[slot]))
                    if sent > 0:
                        residual[slot] -= sent
                        residual[slot ^ 1] += sent
                        return sent
                iters[u] += 1
            level[u] = -1
            return 0

        while True:
            room = infinity if limit is None else limit - total
            if room <= 0:
                break
            sent = push(source, room)
            if sent == 0:
                break
            total += sent

    flows = tuple(residual[2 * i + 1] for i in range(m))
    return FlowState(net=net, capacities=state, flows=flows, value=total)


def zero_flow(net: Network, state: StateVector) -> FlowState:
    """The all-zero flow under ``state`` (value 0)."""
    net.validate_state(state)
    return FlowState(net=net, capacities=state, flows=(0,) * net.arc_count, value=0)


def residual_reachable(fs: FlowState) -> bool:
    """True iff the sink is reachable from the source in the residual graph.

    Forward residual exists where flow is below capacity, backward residual
    where flow is positive.  For a maximal flow this is always False.
    """
    net = fs.net
    adj = net.out_slots
    to = net.slot_heads
    m = net.arc_count
    residual = [0] * (2 * m)
    for i in range(m):
        residual[2 * i] = fs.capacities[i] - fs.flows[i]
        residual[2 * i + 1] = fs.flows[i]
    seen = [False] * (net.node_count + 1)
    seen[net.source] = True
    queue = deque([net.source])
    while queue:
        u = queue.popleft()
        for slot in adj[u]:
            v = to[slot]
            if residual[slot] > 0 and not seen[v]:
                if v == net.sink:
                    return True
                seen[v] = True
                queue.append(v)
    return seen[net.sink]


def check_one_more_unit(net: Network, state: StateVector, demand: int, arc_id: int) -> bool:
    """Decide whether raising arc ``arc_id`` by one unit lifts the max flow above ``demand``.

    Requires W(state) == demand and ``arc_id`` unsaturated; both are
    enforced because dropping the first hypothesis is exactly what makes
    the naive acceptance test unsound.  The check sends ``demand`` units
    under the bumped capacities and asks for a residual augmenting path,
    which is equivalent to W(state + unit) > demand.
    """
    fs = max_flow(net, state)
    if fs.value != demand:
        raise ContractError(
            f"max flow of the state is {fs.value}, not the required {demand}"
        )
    if arc_id not in unsaturated_set(net, state):
        raise ContractError(f"arc {arc_id} is already saturated")
    bumped = replace(fs, capacities=bump(net, state, arc_id))
    return residual_reachable(bumped)
