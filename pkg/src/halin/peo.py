"""Perfect elimination ordering of a treewidth-3 chordal completion.

Two reduction rules shrink a Halin graph to K4 while recording fill
edges. R1 removes the middle of three consecutive cycle vertices under
one center after completing their 4-clique with one fill edge; R2
removes a center left with exactly two cycle children by filling both
toward its third neighbor, which inherits the children. The eliminated
vertices, in order, followed by the K4 residue give a PEO of the graph
plus fills.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import combinations

from .graph import Graph
from .recognition import HalinCertificate, MalformedCertificateError


@dataclass(frozen=True)
class TraceStep:
    """One reduction: rule tag, eliminated vertex, and its 4-clique.

    For R1 the clique reads (p, q, r, s) with q eliminated and pr filled;
    for R2 it reads (p, r, s, t) with s eliminated and pt, rt filled.
    """

    rule: str
    eliminated: int
    clique: tuple[int, int, int, int]


@dataclass
class PeoResult:
    order: list[int]
    fill_edges: set[tuple[int, int]]
    trace: list[TraceStep]


def peo_halin(g: Graph, cert: HalinCertificate) -> PeoResult:
    """Elimination order and fill edges for a chordal completion of g.

    Walks the cycle with a cursor over a doubly linked list, applying R1
    to the first applicable triple from the cursor and R2 to exhausted
    two-vertex fans, until only a K4 remains; its vertices are appended
    in ascending id order.
    """
    _validate(g, cert)
    work = g.copy()
    cyc = cert.cycle_order
    clen = len(cyc)
    nxt = {cyc[i]: cyc[(i + 1) % clen] for i in range(clen)}
    prv = {cyc[i]: cyc[(i - 1) % clen] for i in range(clen)}
    par = {w: cert.parent[w] for w in cyc}
    child_count = Counter(par.values())

    order: list[int] = []
    fills: list[tuple[int, int]] = []
    trace: list[TraceStep] = []
    live = g.n
    cur = cyc[0]
    idle = 0

    def fill(a: int, b: int) -> None:
        if not work.has_edge(a, b):
            work.add_edge(a, b)
            fills.append((a, b) if a < b else (b, a))

    while live > 4:
        q = nxt[cur]
        r = nxt[q]
        s = par[cur]
        if par[q] == s and par[r] == s and clen > 3:
            # R1 on the triple (cur, q, r): eliminate q, fill cur-r.
            fill(cur, r)
            work.remove_vertex(q)
            order.append(q)
            trace.append(TraceStep("R1", q, (cur, q, r, s)))
            nxt[cur] = r
            prv[r] = cur
            del nxt[q], prv[q], par[q]
            child_count[s] -= 1
            clen -= 1
            live -= 1
            idle = 0
        elif par[q] == s and child_count[s] == 2 and work.degree(s) == 3:
            # R2: (cur, q) is the whole fan of s; hand them to s's third
            # neighbor t and eliminate s.
            t = next(z for z in work.neighbors(s) if z != cur and z != q)
            fill(cur, t)
            fill(q, t)
            work.remove_vertex(s)
            order.append(s)
            trace.append(TraceStep("R2", s, (cur, q, s, t)))
            par[cur] = t
            par[q] = t
            child_count[t] += 2
            live -= 1
            idle = 0
        else:
            cur = q
            idle += 1
            if idle > clen + 1:
                raise MalformedCertificateError(
                    "reduction stalled; certificate does not describe a Halin graph"
                )

    tail = sorted(work.vertices())
    for a, b in combinations(tail, 2):
        if not work.has_edge(a, b):
            raise MalformedCertificateError("residue is not a K4")
    order.extend(tail)
    return PeoResult(order, set(fills), trace)


def chordal_completion(g: Graph, result: PeoResult) -> Graph:
    """The graph plus the fill edges recorded by peo_halin."""
    h = g.copy()
    for u, v in result.fill_edges:
        if not h.has_edge(u, v):
            h.add_edge(u, v)
    return h


def verify_peo(filled: Graph, order: list[int]) -> bool:
    """True iff every vertex's later neighbors are pairwise adjacent."""
    vs = set(filled.vertices())
    if len(order) != len(vs) or set(order) != vs:
        raise ValueError("order is not a permutation of the vertex set")
    pos = {v: i for i, v in enumerate(order)}
    for v in order:
        later = [w for w in filled.neighbors(v) if pos[w] > pos[v]]
        for a, b in combinations(later, 2):
            if not filled.has_edge(a, b):
                return False
    return True


def treewidth_from_peo(filled: Graph, order: list[int]) -> int:
    """Max count of later neighbors over the order; 3 for Halin completions."""
    if not verify_peo(filled, order):
        raise ValueError("order is not a perfect elimination ordering")
    pos = {v: i for i, v in enumerate(order)}
    width = 0
    for v in order:
        width = max(width, sum(1 for w in filled.neighbors(v) if pos[w] > pos[v]))
    return width


def replay_trace(g: Graph, trace: list[TraceStep]) -> tuple[list[int], set[tuple[int, int]]]:
    """Re-run a reduction trace on a fresh copy; returns (order, fills).

    Replaying the trace of peo_halin(g, cert) reproduces its order and
    fill_edges exactly.
    """
    work = g.copy()
    order: list[int] = []
    fills: set[tuple[int, int]] = set()

    def fill(a: int, b: int) -> None:
        if not work.has_edge(a, b):
            work.add_edge(a, b)
            fills.add((a, b) if a < b else (b, a))

    for step in trace:
        if step.rule == "R1":
            p, q, r, _s = step.clique
            fill(p, r)
            work.remove_vertex(q)
            order.append(q)
        elif step.rule == "R2":
            p, r, s, t = step.clique
            fill(p, t)
            fill(r, t)
            work.remove_vertex(s)
            order.append(s)
        else:
            raise ValueError(f"unknown rule tag {step.rule!r}")
    order.extend(sorted(work.vertices()))
    return order, fills


def _validate(g: Graph, cert: HalinCertificate) -> None:
    if set(cert.cycle_order) != set(cert.outer):
        raise MalformedCertificateError("cycle_order is not a permutation of outer")
    if len(cert.parent) != g.n - 1 or cert.root in cert.parent:
        raise MalformedCertificateError("parent map must cover all vertices except the root")
    for w in cert.cycle_order:
        if w not in cert.parent:
            raise MalformedCertificateError(f"cycle vertex {w} has no recorded parent")
