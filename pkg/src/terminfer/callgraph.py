"""Predicate call graph and its strongly connected components.

The SCC order is the modular backbone of the whole analysis: every stage
walks the components callees-first, so results for lower components are
final by the time a component is processed.  Ordering among independent
components is pinned by the lexicographically smallest member, which makes
runs reproducible byte for byte.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass

from .terms import PredId, Program


@dataclass
class CallGraph:
    nodes: set[PredId]
    edges: set[tuple[PredId, PredId]]

    def successors(self, p: PredId) -> list[PredId]:
        return sorted(b for a, b in self.edges if a == p)


@dataclass
class SccOrder:
    """Callees-first list of components; each is a frozenset of predicates."""

    sccs: list[frozenset[PredId]]

    def component_of(self) -> dict[PredId, frozenset[PredId]]:
        return {p: scc for scc in self.sccs for p in scc}

    def is_recursive(self, scc: frozenset[PredId], graph: CallGraph) -> bool:
        if len(scc) > 1:
            return True
        (p,) = scc
        return (p, p) in graph.edges


def build_call_graph(program: Program) -> CallGraph:
    """Edge (caller, callee) iff some clause of caller calls callee.

    Builtins are excluded from the nodes; calls to undefined predicates do
    not contribute edges either (they are assumed to fail).
    """
    nodes = set(program.clauses.keys())
    edges = set()
    for pred, clauses in program.clauses.items():
        for c in clauses:
            for a in c.body:
                if a.pred in nodes:
                    edges.add((pred, a.pred))
    return CallGraph(nodes=nodes, edges=edges)


def scc_order(graph: CallGraph) -> SccOrder:
    """Tarjan components, then a deterministic callees-first topsort."""
    index: dict[PredId, int] = {}
    low: dict[PredId, int] = {}
    on_stack: set[PredId] = set()
    stack: list[PredId] = []
    counter = [0]
    comps: list[frozenset[PredId]] = []
    succ: dict[PredId, list[PredId]] = {n: [] for n in graph.nodes}
    for a, b in graph.edges:
        succ[a].append(b)
    for n in succ:
        succ[n].sort()

    def strongconnect(v: PredId) -> None:
        work = [(v, iter(succ[v]))]
        index[v] = low[v] = counter[0]
        counter[0] += 1
        stack.append(v)
        on_stack.add(v)
        while work:
            node, it = work[-1]
            advanced = False
            for w in it:
                if w not in index:
                    index[w] = low[w] = counter[0]
                    counter[0] += 1
                    stack.append(w)
                    on_stack.add(w)
                    work.append((w, iter(succ[w])))
                    advanced = True
                    break
                if w in on_stack:
                    low[node] = min(low[node], index[w])
            if advanced:
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[node])
            if low[node] == index[node]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack.discard(w)
                    comp.append(w)
                    if w == node:
                        break
                comps.append(frozenset(comp))

    for v in sorted(graph.nodes):
        if v not in index:
            strongconnect(v)

    # Deterministic callees-first order over the component DAG.
    comp_of = {p: i for i, comp in enumerate(comps) for p in comp}
    out_deg = [0] * len(comps)  # edges toward callees not yet emitted
    callers: list[set[int]] = [set() for _ in comps]
    dag_succ: list[set[int]] = [set() for _ in comps]
    for a, b in graph.edges:
        ca, cb = comp_of[a], comp_of[b]
        if ca != cb:
            dag_succ[ca].add(cb)
    for i, targets in enumerate(dag_succ):
        out_deg[i] = len(targets)
        for t in targets:
            callers[t].add(i)

    ready = [(min(comps[i]), i) for i in range(len(comps)) if out_deg[i] == 0]
    heapq.heapify(ready)
    order: list[frozenset[PredId]] = []
    while ready:
        _, i = heapq.heappop(ready)
        order.append(comps[i])
        for c in callers[i]:
            out_deg[c] -= 1
            if out_deg[c] == 0:
                heapq.heappush(ready, (min(comps[c]), c))
    return SccOrder(sccs=order)


def render_sccs(order: SccOrder) -> str:
    lines = []
    for scc in order.sccs:
        lines.append("scc: " + " ".join(str(p) for p in sorted(scc)))
    return "\n".join(lines) + ("\n" if lines else "")
