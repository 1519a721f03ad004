"""Bounded, certifying derivation search.

Breadth-first over canonicalized states: rule instances are enumerated in
a fixed order and states visited in FIFO order, so the result is
reproducible and the shallowest derivation is found first (whence
monotonicity in the depth bound).  Multiset-equal graphs have the same
successors up to multiset equality, so one exact representative is
expanded per canonical state and an empty frontier proves exhaustion of
the bounded space.

Insertion and loop contents come from the bounds' vocabulary (by default,
subgraphs of the two endpoint graphs) and intermediate states are capped
in size relative to the endpoints; both bounds make the search incomplete
by design for pathological goals.  Every script found is re-checked
through check_script before being returned.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .calculus import (
    ProofScript,
    RuleInstance,
    System,
    _apply as _apply_fast,
    check_script,
    enumerate_rule_instances,
)
from .errors import BoundsExceededError, DialectError
from .graphs import Graph, canonicalize, equals, node_count, walk_areas, walk_items, well_formed
from .notation import print_graph


@dataclass(frozen=True)
class SearchBounds:
    max_depth: int = 12
    vocabulary: Optional[tuple[Graph, ...]] = None
    max_visited: int = 500_000
    size_slack: int = 0


def default_vocabulary(*endpoints: Graph) -> tuple[Graph, ...]:
    """All non-empty subgraphs of the endpoints: every area's contents and
    every item on its own, deduplicated up to multiset equality."""
    seen: dict[str, Graph] = {}
    for g in endpoints:
        for _, area in walk_areas(g):
            if area.items:
                seen.setdefault(print_graph(canonicalize(area)), area)
        for _, item in walk_items(g):
            single = Graph((item,))
            seen.setdefault(print_graph(canonicalize(single)), single)
    return tuple(seen[key] for key in sorted(seen))


def derive(system: System, start: Graph, goal: Graph,
           bounds: SearchBounds = SearchBounds()) -> Optional[ProofScript]:
    """A script from ``start`` to ``goal`` (multiset-equal), or None if
    there is none within the bounds.  Raises BoundsExceededError when the
    state budget runs out before the bounded space is exhausted."""
    for g in (start, goal):
        bad = well_formed(g, system.dialect)
        if bad:
            raise DialectError(f"{bad[0].reason} at {bad[0].path}")
    vocabulary = bounds.vocabulary
    if vocabulary is None:
        vocabulary = default_vocabulary(start, goal)
    size_cap = node_count(goal) + node_count(start) + bounds.size_slack
    chain = _bfs(system, start, goal, vocabulary, size_cap, bounds)
    if chain is None:
        return None
    script = ProofScript(system, start, tuple((rule, None) for rule in chain))
    report = check_script(script)
    assert report.ok and report.final is not None
    assert equals(report.final, goal)
    return script


def _bfs(system: System, start: Graph, goal: Graph,
         vocabulary: tuple[Graph, ...], size_cap: int,
         bounds: SearchBounds) -> Optional[list[RuleInstance]]:
    goal_key = canonicalize(goal)
    if canonicalize(start) == goal_key:
        return []
    visited = {canonicalize(start)}
    frontier: list[tuple[Graph, list[RuleInstance]]] = [(start, [])]
    budget = bounds.max_visited
    for _ in range(bounds.max_depth):
        next_frontier: list[tuple[Graph, list[RuleInstance]]] = []
        for g, chain in frontier:
            budget -= 1
            if budget < 0:
                raise BoundsExceededError("visited-state budget exhausted")
            for rule in enumerate_rule_instances(system, g, vocabulary):
                nxt = _apply_fast(system, g, rule)
                key = canonicalize(nxt)
                if key == goal_key:
                    return chain + [rule]
                if key in visited or node_count(nxt) > size_cap:
                    continue
                visited.add(key)
                next_frontier.append((nxt, chain + [rule]))
        if not next_frontier:
            return None
        frontier = next_frontier
    return None
