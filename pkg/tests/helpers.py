"""Shared test utilities: independent brute-force oracles and random instances.

The oracles here deliberately avoid the package's own graph machinery
(beyond the data model) so that agreement is meaningful: reachability and
cut scans are re-implemented from scratch.
"""

from __future__ import annotations

import itertools
import random
from collections import deque
from math import fsum

from dmincut import Arc, EdgeDistribution, Network, state_space_size


def reachable_from_source(net: Network, removed=frozenset(), positive_caps=None):
    """Plain BFS over arcs, skipping removed ids (and zero-capacity arcs if given)."""
    adj = {v: [] for v in range(1, net.node_count + 1)}
    for a in net.arcs:
        if a.index in removed:
            continue
        if positive_caps is not None and positive_caps[a.index - 1] <= 0:
            continue
        adj[a.tail].append(a.head)
    seen = {net.source}
    queue = deque([net.source])
    while queue:
        u = queue.popleft()
        for v in adj[u]:
            if v not in seen:
                seen.add(v)
                queue.append(v)
    return seen


def cut_capacity_minimum(net: Network, state) -> int:
    """Min over all source/sink partitions of the forward capacity across the cut.

    By max-flow-min-cut this equals the max flow; it is the test suite's
    third, structurally different route to W(X).
    """
    others = [v for v in range(1, net.node_count + 1) if v not in (net.source, net.sink)]
    best = None
    for mask in range(1 << len(others)):
        side = {net.source}
        side.update(v for bit, v in enumerate(others) if mask >> bit & 1)
        capacity = sum(
            state[a.index - 1] for a in net.arcs if a.tail in side and a.head not in side
        )
        best = capacity if best is None else min(best, capacity)
    return best


def min_cuts_by_subsets(net: Network):
    """All minimal cuts by filtering every arc subset (independent of cuts.py)."""
    ids = [a.index for a in net.arcs]

    def cuts_st(removed):
        return net.sink not in reachable_from_source(net, frozenset(removed))

    found = []
    for r in range(len(ids) + 1):
        for combo in itertools.combinations(ids, r):
            if cuts_st(combo) and all(not cuts_st(set(combo) - {a}) for a in combo):
                found.append(tuple(sorted(combo)))
    return sorted(found, key=lambda c: (len(c), c))


def box(net: Network):
    return itertools.product(*(range(w + 1) for w in net.max_capacities))


def random_network(
    rng: random.Random,
    max_nodes: int = 6,
    max_arcs: int = 8,
    max_cap: int = 3,
    max_states: int = 50_000,
) -> Network:
    """A random directed network with a structural source-sink path.

    Half the draws seed a source-to-sink backbone path before adding random
    arcs, which yields instances with several minimal cuts; the other half
    are fully random, which keeps degenerate shapes (single arc, dead ends,
    anti-parallel pairs) in the mix.
    """
    while True:
        n = rng.randint(2, max_nodes)
        pairs: list[tuple[int, int]] = []
        if rng.random() < 0.5 and n - 1 <= max_arcs:
            m = rng.randint(n - 1, max_arcs)
            pairs = [(v, v + 1) for v in range(1, n)]
        else:
            m = rng.randint(1, max_arcs)
        while len(pairs) < m:
            tail = rng.randint(1, n)
            head = rng.randint(1, n)
            while head == tail:
                head = rng.randint(1, n)
            pairs.append((tail, head))
        arcs = tuple(
            Arc(index=i + 1, tail=t, head=h, max_capacity=rng.randint(0, max_cap))
            for i, (t, h) in enumerate(pairs)
        )
        net = Network(node_count=n, arcs=arcs, source=1, sink=n)
        if net.sink not in reachable_from_source(net):
            continue
        if state_space_size(net) > max_states:
            continue
        return net


def random_state(rng: random.Random, net: Network):
    return tuple(rng.randint(0, w) for w in net.max_capacities)


def random_distribution(rng: random.Random, net: Network) -> EdgeDistribution:
    pmfs = []
    for w in net.max_capacities:
        weights = [rng.random() + 0.05 for _ in range(w + 1)]
        total = fsum(weights)
        pmfs.append(tuple(x / total for x in weights))
    dist = EdgeDistribution(tuple(pmfs))
    dist.validate(net)
    return dist
