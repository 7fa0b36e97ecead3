"""Minimal source-sink cut sets.

A minimal cut (MC) is an inclusion-minimal set of arcs whose removal
disconnects the source from the sink.  Cuts are structural: capacities play
no role here.  Enumeration walks all node subsets containing the source but
not the sink and keeps the subset-minimal out-arc sets; this is exponential
in the node count and intended for desk-scale networks (n up to ~16).

Cut files are one cut per line: ``cut <id> <arc_id> <arc_id> ...``.
"""

from __future__ import annotations

from collections import deque

from .errors import NetworkParseError, ValidationError
from .network import Network

MinCut = tuple[int, ...]


def _reachable_without(net: Network, removed: frozenset[int]) -> set[int]:
    """Nodes reachable from the source after deleting the arcs in ``removed``."""
    adj: list[list[int]] = [[] for _ in range(net.node_count + 1)]
    for a in net.arcs:
        if a.index not in removed:
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


def is_min_cut(net: Network, arc_ids) -> bool:
    """True iff ``arc_ids`` disconnects source from sink and no proper subset does."""
    cut = frozenset(arc_ids)
    for arc_id in cut:
        if not 1 <= arc_id <= net.arc_count:
            raise ValidationError(f"arc id {arc_id} outside [1, {net.arc_count}]")
    if net.sink in _reachable_without(net, cut):
        return False
    return all(net.sink in _reachable_without(net, cut - {a}) for a in cut)


def enumerate_min_cuts(net: Network) -> list[MinCut]:
    """All minimal source-sink cuts, sorted by size then arc ids.

    Every minimal cut is the out-arc set of some node set containing the
    source, so scanning the 2^(n-2) subsets and keeping the subset-minimal
    candidates is exhaustive.
    """
    if net.sink not in _reachable_without(net, frozenset()):
        raise ValidationError("sink is unreachable from source; the network has no minimal cut")
    others = [v for v in range(1, net.node_count + 1) if v not in (net.source, net.sink)]
    candidates: set[frozenset[int]] = set()
    for mask in range(1 << len(others)):
        side = {net.source}
        side.update(v for bit, v in enumerate(others) if mask >> bit & 1)
        out_arcs = frozenset(a.index for a in net.arcs if a.tail in side and a.head not in side)
        candidates.add(out_arcs)
    minimal = [
        c for c in candidates
        if not any(other < c for other in candidates)
    ]
    return sorted((tuple(sorted(c)) for c in minimal), key=lambda c: (len(c), c))


def parse_cuts(text: str, net: Network) -> list[MinCut]:
    """Parse a cut file; every listed cut must be a valid minimal cut of ``net``.

    The list may be a subset of the network's cuts (a published list, say);
    duplicates are rejected.
    """
    cuts: list[MinCut] = []
    seen: set[MinCut] = set()
    for line_no, tokens in _cut_lines(text):
        if len(tokens) < 3:
            raise NetworkParseError(line_no, "expected 'cut <id> <arc_id> ...'")
        try:
            arc_ids = tuple(sorted(int(t) for t in tokens[2:]))
        except ValueError:
            raise NetworkParseError(line_no, "arc ids must be integers") from None
        if len(set(arc_ids)) != len(arc_ids):
            raise NetworkParseError(line_no, "repeated arc id within a cut")
        if not is_min_cut(net, arc_ids):
            raise ValidationError(f"line {line_no}: {arc_ids} is not a minimal cut")
        if arc_ids in seen:
            raise ValidationError(f"line {line_no}: duplicate cut {arc_ids}")
        seen.add(arc_ids)
        cuts.append(arc_ids)
    if not cuts:
        raise ValidationError("cut file lists no cuts")
    return cuts


def _cut_lines(text: str):
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if tokens[0] != "cut":
            raise NetworkParseError(line_no, f"unknown directive {tokens[0]!r}")
        yield line_no, tokens


def format_cuts(cuts: list[MinCut]) -> str:
    """Render cuts in the cut-file format with 1-based sequence ids."""
    return "\n".join(
        f"cut {k} " + " ".join(str(a) for a in cut) for k, cut in enumerate(cuts, start=1)
    ) + "\n"
