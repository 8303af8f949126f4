"""Halin graph recognition, certificate construction, and verification.

Recognition never tests planarity. It repeatedly contracts a fan
(an internal vertex whose neighbors, minus one, form a path of degree-3
vertices) into a single placeholder vertex until the residue is a wheel,
then expands the contraction trace to recover the outer cycle. The
resulting certificate is always re-checked with ``verify_halin``, so a
bad contraction can only cause a rejection, never a wrong acceptance.
"""

from __future__ import annotations

import heapq
from collections import deque
from dataclasses import dataclass

from .graph import Graph

REASON_DISCONNECTED = "disconnected"
REASON_LOW_DEGREE = "vertex_of_degree_below_3"
REASON_STUCK = "reduction_stuck"
REASON_VERIFY_FAILED = "certificate_verification_failed"


class MalformedCertificateError(ValueError):
    """Raised when an operation is handed a certificate that does not fit."""


@dataclass(frozen=True)
class HalinCertificate:
    """Outer cycle plus inner tree of a Halin decomposition.

    ``cycle_order`` lists the outer vertices in cyclic order; ``parent``
    maps every vertex except ``root`` to its tree parent, and the tree
    edges are exactly the non-cycle edges of the graph.
    """

    outer: frozenset[int]
    cycle_order: tuple[int, ...]
    parent: dict[int, int]
    root: int


@dataclass(frozen=True)
class RecognitionResult:
    certificate: HalinCertificate | None
    reason: str | None

    @property
    def is_halin(self) -> bool:
        return self.certificate is not None


def outer_cycle_order(g: Graph, outer: set[int]) -> list[int]:
    """Cyclic order of the outer vertices, or ValueError if they do not
    induce a single chordless cycle.

    Starts at the smallest outer id and walks toward its smaller
    outer-neighbor, so the order is deterministic.
    """
    outer = set(outer)
    if len(outer) < 3:
        raise ValueError("an outer cycle needs at least 3 vertices")
    for w in outer:
        if not g.has_vertex(w):
            raise ValueError(f"outer vertex {w} is not in the graph")
    start = min(outer)
    first = sorted(g.neighbors(start) & outer)
    if len(first) != 2:
        raise ValueError(f"outer vertex {start} has {len(first)} outer neighbors")
    order = [start]
    prev, cur = start, first[0]
    while cur != start:
        order.append(cur)
        if len(order) > len(outer):
            raise ValueError("outer does not induce a single cycle")
        step = (g.neighbors(cur) & outer) - {prev}
        if len(step) != 1:
            raise ValueError(f"outer vertex {cur} has {len(step) + 1} outer neighbors")
        prev, cur = cur, step.pop()
    if len(order) != len(outer):
        raise ValueError("outer does not induce a single cycle")
    return order


def inner_tree(g: Graph, outer: set[int]) -> tuple[dict[int, int], int]:
    """Parent map and root of the inner tree, by BFS over non-cycle edges.

    The root is the smallest inner vertex (the hub, for a wheel). Raises
    MalformedCertificateError when the non-cycle edges fail to form a
    spanning tree.
    """
    outer = set(outer)
    inner = [v for v in g.vertices() if v not in outer]
    if not inner:
        raise MalformedCertificateError("no inner vertex available as tree root")
    root = min(inner)
    cycle_edges = sum(1 for w in outer if g.has_vertex(w) for z in g.neighbors(w) if z in outer) // 2
    if g.num_edges() - cycle_edges != g.n - 1:
        raise MalformedCertificateError("non-cycle edges do not form a spanning tree")
    parent: dict[int, int] = {}
    seen = {root}
    queue = deque([root])
    while queue:
        v = queue.popleft()
        for w in g.neighbors(v):
            if w in seen or (v in outer and w in outer):
                continue
            seen.add(w)
            parent[w] = v
            queue.append(w)
    if len(seen) != g.n:
        raise MalformedCertificateError("non-cycle edges do not span the graph")
    return parent, root


def certificate_from_outer(g: Graph, outer: set[int]) -> HalinCertificate:
    """Build the full certificate for a graph with a known outer set."""
    try:
        order = outer_cycle_order(g, outer)
    except ValueError as exc:
        raise MalformedCertificateError(str(exc)) from None
    parent, root = inner_tree(g, outer)
    return HalinCertificate(frozenset(outer), tuple(order), parent, root)


def verify_halin(g: Graph, outer: set[int]) -> bool:
    """Check that ``outer`` witnesses a Halin decomposition of ``g``.

    True iff (a) the outer vertices induce a single cycle, (b) removing
    the cycle edges leaves a spanning tree, (c) whose leaves are exactly
    the outer vertices, (d) with no inner vertex of tree-degree 2, and
    (e) the leaves of every subtree form a contiguous arc of the cycle,
    i.e. the cycle order is realizable by a planar embedding of the tree.
    """
    outer = set(outer)
    for w in outer:
        if not g.has_vertex(w):
            return False
    try:
        order = outer_cycle_order(g, outer)
    except ValueError:
        return False
    n = g.n
    cyc_len = len(order)
    if g.num_edges() - cyc_len != n - 1:
        return False
    # Outer vertices: 2 cycle neighbors + 1 tree parent. Inner vertices
    # touch no cycle edge, so their tree-degree is their plain degree.
    for w in outer:
        if g.degree(w) != 3:
            return False
    inner = [v for v in g.vertices() if v not in outer]
    if not inner:
        return False
    for v in inner:
        if g.degree(v) < 3:
            return False
    root = min(inner)
    parent: dict[int, int] = {}
    bfs = [root]
    seen = {root}
    for v in bfs:
        for w in g.neighbors(v):
            if w in seen or (v in outer and w in outer):
                continue
            seen.add(w)
            parent[w] = v
            bfs.append(w)
    if len(seen) != n:
        return False

    # Arc-contiguity. Rotate the cycle so it starts at a boundary between
    # two root subtrees; valid arcs then never wrap, and a leaf interval
    # is contiguous iff count == max - min + 1.
    top: dict[int, int] = {root: root}
    for v in bfs[1:]:
        p = parent[v]
        top[v] = v if p == root else top[p]
    boundary = next(
        (i for i in range(cyc_len) if top[order[i]] != top[order[i - 1]]), None
    )
    if boundary is None:
        # Single root subtree: the root would have tree-degree 1.
        return False
    pos = {order[(boundary + j) % cyc_len]: j for j in range(cyc_len)}
    lmin = {}
    lmax = {}
    lcnt = {}
    for v in reversed(bfs):
        if v in outer:
            lmin[v] = lmax[v] = pos[v]
            lcnt[v] = 1
        elif v not in lcnt:
            return False  # inner vertex with no leaf below it
        if v == root:
            continue
        p = parent[v]
        if p in lcnt:
            lmin[p] = min(lmin[p], lmin[v])
            lmax[p] = max(lmax[p], lmax[v])
            lcnt[p] += lcnt[v]
        else:
            lmin[p], lmax[p], lcnt[p] = lmin[v], lmax[v], lcnt[v]
    for v in bfs[1:]:
        if lcnt[v] != lmax[v] - lmin[v] + 1:
            return False
    return True


def recognize(g: Graph) -> RecognitionResult:
    """Decide whether ``g`` is a Halin graph.

    On acceptance the certificate passes ``verify_halin``; on rejection
    the result carries a reason code.
    """
    if not g.is_connected():
        return RecognitionResult(None, REASON_DISCONNECTED)
    for v in g.vertices():
        if g.degree(v) < 3:
            return RecognitionResult(None, REASON_LOW_DEGREE)
    if g.n < 4:
        return RecognitionResult(None, REASON_STUCK)

    work = g.copy()
    orig_bound = work.id_bound
    trace: list[tuple[int, tuple[int, ...]]] = []
    heap = sorted(work.vertices())
    while True:
        fan = None
        while heap:
            v = heapq.heappop(heap)
            if not work.has_vertex(v):
                continue
            fan = _find_fan(work, v)
            if fan is not None:
                center = v
                break
        if fan is None:
            break
        path, hinge, ends_out = fan
        placeholder = work.add_vertex()
        new_nbrs = {hinge} | ends_out
        for w in path:
            work.remove_vertex(w)
        work.remove_vertex(center)
        for w in new_nbrs:
            if work.has_vertex(w):
                work.add_edge(placeholder, w)
        trace.append((placeholder, tuple(path)))
        dirty = {placeholder} | new_nbrs
        for w in list(dirty):
            if work.has_vertex(w):
                dirty |= work.neighbors(w)
        for w in dirty:
            if work.has_vertex(w):
                heapq.heappush(heap, w)

    rims = _wheel_rims(work, orig_bound)
    for rim in rims:
        outer = _expand(rim, trace)
        if verify_halin(g, outer):
            return RecognitionResult(certificate_from_outer(g, outer), None)
    return RecognitionResult(None, REASON_VERIFY_FAILED if rims else REASON_STUCK)


def _find_fan(work: Graph, v: int):
    """Fan pattern centered at v, or None.

    A fan is N(v) minus one hinge vertex forming a path of degree-3
    vertices, each path endpoint having exactly one neighbor outside the
    path and v. Returns (path in order, hinge, endpoint outside-neighbors).
    """
    nbrs = work.neighbors(v)
    if len(nbrs) < 3:
        return None
    non3 = [w for w in nbrs if work.degree(w) != 3]
    if len(non3) > 1:
        return None
    if non3:
        candidates = non3
    else:
        # For a genuine fan the hinge has no neighbor inside N(v).
        candidates = sorted(w for w in nbrs if not (work.neighbors(w) & nbrs))
    for hinge in candidates:
        path_set = nbrs - {hinge}
        if len(path_set) < 2:
            continue
        ends = []
        ok = True
        for w in path_set:
            k = len(work.neighbors(w) & path_set)
            if k == 1:
                ends.append(w)
            elif k != 2:
                ok = False
                break
        if not ok or len(ends) != 2:
            continue
        start = min(ends)
        path = [start]
        seen = {start}
        cur = start
        while True:
            step = [z for z in work.neighbors(cur) & path_set if z not in seen]
            if not step:
                break
            cur = step[0]
            path.append(cur)
            seen.add(cur)
        if len(path) != len(path_set):
            continue
        out_a = work.neighbors(path[0]) - path_set - {v}
        out_b = work.neighbors(path[-1]) - path_set - {v}
        if len(out_a) != 1 or len(out_b) != 1:
            continue
        return path, hinge, out_a | out_b
    return None


def _wheel_rims(work: Graph, orig_bound: int) -> list[set[int]]:
    """Candidate rim sets if the residue is a wheel, else [].

    For K4 every vertex could be the hub, so all four rims are offered,
    original vertices first (placeholders expand to leaves, never hubs).
    """
    live = sorted(work.vertices())
    m = len(live)
    if m < 4:
        return []
    if m == 4:
        if work.num_edges() != 6:
            return []
        hubs = sorted(live, key=lambda v: (v >= orig_bound, v))
        return [set(live) - {h} for h in hubs]
    hubs = [v for v in live if work.degree(v) == m - 1]
    if len(hubs) != 1:
        return []
    hub = hubs[0]
    rim = set(live) - {hub}
    if any(work.degree(v) != 3 for v in rim):
        return []
    # Rim must be a single cycle.
    start = min(rim)
    prev, cur = start, min(work.neighbors(start) & rim)
    count = 1
    while cur != start:
        count += 1
        if count > len(rim):
            return []
        step = (work.neighbors(cur) & rim) - {prev}
        if len(step) != 1:
            return []
        prev, cur = cur, step.pop()
    if count != len(rim):
        return []
    return [rim]


def _expand(outer: set[int], trace: list[tuple[int, tuple[int, ...]]]) -> set[int]:
    """Replace contraction placeholders by the cycle vertices they absorbed."""
    out = set(outer)
    for placeholder, leaves in reversed(trace):
        if placeholder in out:
            out.remove(placeholder)
            out.update(leaves)
    return out
