"""Optimal vertex coloring of Halin graphs.

Three colors always suffice except for even wheels, which need four.
The algorithm 2-colors the inner tree by depth parity and then recolors
part of the cycle; the recoloring pattern depends on the cycle parity
and on which tree colors appear on the cycle (four cases). The final
coloring is re-checked edge by edge, so a wrong pattern fails loudly
instead of returning an improper coloring.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .graph import Graph
from .recognition import HalinCertificate, MalformedCertificateError

C1, C2, C3, C4 = 0, 1, 2, 3


@dataclass(frozen=True)
class FanRun:
    """Maximal run of consecutive cycle vertices sharing one tree parent.

    ``run`` holds cycle positions (indices into cycle_order), in cycle
    order; ``is_fan`` is True when the center has exactly one non-leaf
    tree neighbor (a fan in the strict sense, not just a pseudo-fan).
    """

    center: int
    run: tuple[int, ...]
    is_fan: bool


@dataclass
class ColoringTrace:
    """Filled in by color_halin when passed; records which case fired."""

    case: int | None = None
    odd_run: FanRun | None = None
    runs: list[FanRun] = field(default_factory=list)


def color_tree(cert: HalinCertificate) -> dict[int, int]:
    """2-color every vertex by tree depth parity; the root gets C1.

    Proper on tree edges; conflicts may remain on cycle edges.
    """
    children = _children_map(cert)
    colors = {cert.root: C1}
    queue = deque([cert.root])
    while queue:
        v = queue.popleft()
        c = C2 if colors[v] == C1 else C1
        for w in children.get(v, ()):
            colors[w] = c
            queue.append(w)
    return colors


def is_even_wheel(g: Graph, cert: HalinCertificate) -> bool:
    """True iff the inner tree is a single star hub and n is even."""
    return g.n - len(cert.outer) == 1 and g.n % 2 == 0


def cycle_runs(cert: HalinCertificate) -> list[FanRun]:
    """All maximal same-parent runs around the cycle, in cycle order,
    starting from the first parent boundary (position 0 if none)."""
    cyc = cert.cycle_order
    length = len(cyc)
    pars = [cert.parent[w] for w in cyc]
    children = _children_map(cert)
    start = next((i for i in range(length) if pars[i] != pars[i - 1]), None)
    runs: list[FanRun] = []
    if start is None:
        runs.append(FanRun(pars[0], tuple(range(length)), _is_true_fan(cert, children, pars[0])))
        return runs
    i = start
    covered = 0
    while covered < length:
        run_len = 1
        while pars[(i + run_len) % length] == pars[i] and run_len < length:
            run_len += 1
        positions = tuple((i + t) % length for t in range(run_len))
        center = pars[i]
        runs.append(FanRun(center, positions, _is_true_fan(cert, children, center)))
        covered += run_len
        i = (i + run_len) % length
    return runs


def find_odd_run(cert: HalinCertificate) -> FanRun:
    """An odd-length run for the monochromatic odd-cycle case.

    Prefers a run whose center is a true fan; otherwise returns the
    first odd pseudo-fan. On an odd cycle the run lengths sum to an odd
    number, so an odd run always exists.
    """
    runs = cycle_runs(cert)
    odd = [r for r in runs if len(r.run) % 2 == 1]
    if not odd:
        raise MalformedCertificateError("no odd run: cycle length is even?")
    for r in odd:
        if r.is_fan:
            return r
    return odd[0]


def color_halin(
    g: Graph, cert: HalinCertificate, trace: ColoringTrace | None = None
) -> dict[int, int]:
    """Proper coloring of g with 3 colors, or 4 iff g is an even wheel.

    Case 1: even cycle - every second cycle vertex takes C3.
    Case 2: even wheel - rim alternates C2/C3 and closes with one C4.
    Case 3: odd cycle showing both tree colors - rotate to a C1,C2 pair
        and recolor every second following vertex with C3.
    Case 4: odd cycle all one color - recolor an odd fan or pseudo-fan
        run alternately, give its center C3, and fix the remaining even
        stretch pairwise against the parent colors.
    """
    _validate_certificate(g, cert)
    colors = color_tree(cert)
    cyc = cert.cycle_order
    length = len(cyc)

    if length % 2 == 0:
        case = 1
        for i in range(1, length, 2):
            colors[cyc[i]] = C3
    elif is_even_wheel(g, cert):
        case = 2
        for i in range(length - 1):
            colors[cyc[i]] = C2 if i % 2 == 0 else C3
        colors[cyc[length - 1]] = C4
    else:
        cycle_colors = {colors[w] for w in cyc}
        if len(cycle_colors) == 2:
            case = 3
            _recolor_two_tone_odd_cycle(colors, cyc)
        else:
            case = 4
            run = find_odd_run(cert)
            _recolor_monochrome_odd_cycle(colors, cert, run)
            if trace is not None:
                trace.odd_run = run
                trace.runs = cycle_runs(cert)

    if trace is not None:
        trace.case = case
    _check_proper(g, colors)
    return colors


def _recolor_two_tone_odd_cycle(colors: dict[int, int], cyc: tuple[int, ...]) -> None:
    length = len(cyc)
    anchor = next(
        i
        for i in range(length)
        if colors[cyc[i]] == C1 and colors[cyc[(i + 1) % length]] == C2
    )
    seq = [cyc[(anchor + j) % length] for j in range(length)]
    # Keep seq[0], seq[1] (the C1,C2 pair); then C3 every second vertex.
    colors[seq[2]] = C3
    for j in range(3, length, 2):
        colors[seq[j + 1]] = C3


def _recolor_monochrome_odd_cycle(
    colors: dict[int, int], cert: HalinCertificate, run: FanRun
) -> None:
    cyc = cert.cycle_order
    length = len(cyc)
    tone = colors[cyc[0]]           # the single color on the cycle
    other = C2 if tone == C1 else C1
    seq = [cyc[(run.run[0] + j) % length] for j in range(length)]
    run_len = len(run.run)
    for j in range(run_len):
        colors[seq[j]] = other if j % 2 == 0 else tone
    colors[run.center] = C3
    # Remaining even stretch, pairwise: keep the first of each pair, and
    # recolor the second against its parent (C3 under an untouched
    # parent, the second tree color under the recolored center).
    for j in range(run_len, length, 2):
        colors[seq[j]] = tone
        w = seq[j + 1]
        colors[w] = C3 if colors[cert.parent[w]] == other else other


def _children_map(cert: HalinCertificate) -> dict[int, list[int]]:
    children: dict[int, list[int]] = {}
    for v, p in cert.parent.items():
        children.setdefault(p, []).append(v)
    return children


def _is_true_fan(
    cert: HalinCertificate, children: dict[int, list[int]], center: int
) -> bool:
    tree_nbrs = list(children.get(center, ()))
    if center != cert.root:
        tree_nbrs.append(cert.parent[center])
    return sum(1 for w in tree_nbrs if w not in cert.outer) == 1


def _validate_certificate(g: Graph, cert: HalinCertificate) -> None:
    if not g.has_vertex(cert.root) or cert.root in cert.outer:
        raise MalformedCertificateError("root must be a live inner vertex")
    if set(cert.cycle_order) != set(cert.outer) or len(cert.cycle_order) != len(cert.outer):
        raise MalformedCertificateError("cycle_order is not a permutation of outer")
    if len(cert.cycle_order) < 3:
        raise MalformedCertificateError("outer cycle needs at least 3 vertices")
    if len(cert.parent) != g.n - 1 or cert.root in cert.parent:
        raise MalformedCertificateError("parent map must cover all vertices except the root")


def _check_proper(g: Graph, colors: dict[int, int]) -> None:
    for u, v in g.edges():
        if colors[u] == colors[v]:
            raise RuntimeError(
                f"internal error: improper coloring, edge ({u}, {v}) got color {colors[u]}"
            )
