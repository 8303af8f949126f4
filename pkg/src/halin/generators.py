"""Seeded generators for wheels, necklaces, and random Halin graphs.

Every generator returns ``(graph, outer)`` where ``outer`` is the set of
cycle vertices. Random variants grow an ordered plane tree with no
degree-2 node and close the leaf cycle in depth-first leaf order, which
is planar by construction. Randomness comes from ``random.Random``
(Mersenne Twister) seeded explicitly, so a spec reproduces byte-identical
output.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .graph import Graph

VARIANTS = ("wheel", "necklace", "halin", "halin_cubic")


@dataclass(frozen=True)
class GenSpec:
    """Generator parameters: target vertex count, variant, RNG seed."""

    n: int
    variant: str = "halin"
    seed: int = 0

    def validate(self) -> None:
        if self.variant not in VARIANTS:
            raise ValueError(f"unknown variant {self.variant!r}")
        if self.n < 4:
            raise ValueError("Halin graphs need at least 4 vertices")
        if self.variant in ("halin_cubic", "necklace") and self.n % 2 != 0:
            raise ValueError(f"{self.variant} requires an even vertex count")
        if self.variant == "necklace" and self.n < 6:
            raise ValueError("necklace requires at least 6 vertices (spine length 2)")


def make_wheel(n: int) -> tuple[Graph, set[int]]:
    """Wheel on n vertices: hub n-1 joined to the rim cycle 0..n-2."""
    if n < 4:
        raise ValueError("wheel needs at least 4 vertices")
    g = Graph(n)
    hub = n - 1
    for v in range(n - 1):
        g.add_edge(hub, v)
        g.add_edge(v, (v + 1) % (n - 1))
    return g, set(range(n - 1))


def make_necklace(k: int) -> tuple[Graph, set[int]]:
    """Cubic Halin graph over a caterpillar with spine length k.

    Spine vertices 0..k-1; the spine endpoints carry two leaves each and
    interior spine vertices one, giving 2k+2 vertices in total. Leaves
    get consecutive ids k..2k+1 in planar order, so the cycle joins them
    in id order.
    """
    if k < 2:
        raise ValueError("necklace needs spine length at least 2")
    n = 2 * k + 2
    g = Graph(n)
    for i in range(k - 1):
        g.add_edge(i, i + 1)
    g.add_edge(0, k)            # first leaf, before the spine
    g.add_edge(0, 2 * k + 1)    # last leaf, after the spine
    for i in range(1, k - 1):
        g.add_edge(i, k + i)
    g.add_edge(k - 1, 2 * k - 1)
    g.add_edge(k - 1, 2 * k)
    outer = list(range(k, 2 * k + 2))
    for i, v in enumerate(outer):
        g.add_edge(v, outer[(i + 1) % len(outer)])
    return g, set(outer)


def make_halin(spec: GenSpec) -> tuple[Graph, set[int]]:
    """Random Halin graph with exactly spec.n vertices."""
    if spec.n < 4:
        raise ValueError("Halin graphs need at least 4 vertices")
    rng = random.Random(spec.seed)
    children = _grow_tree(spec.n, rng, cubic=False)
    return _close_cycle(children)


def make_halin_cubic(spec: GenSpec) -> tuple[Graph, set[int]]:
    """Random cubic Halin graph; spec.n must be even."""
    if spec.n < 4:
        raise ValueError("Halin graphs need at least 4 vertices")
    if spec.n % 2 != 0:
        raise ValueError("cubic Halin graphs need an even vertex count")
    rng = random.Random(spec.seed)
    children = _grow_tree(spec.n, rng, cubic=True)
    return _close_cycle(children)


def generate(spec: GenSpec) -> tuple[Graph, set[int]]:
    """Dispatch on spec.variant; wheel and necklace ignore the seed."""
    spec.validate()
    if spec.variant == "wheel":
        return make_wheel(spec.n)
    if spec.variant == "necklace":
        return make_necklace((spec.n - 2) // 2)
    if spec.variant == "halin":
        return make_halin(spec)
    return make_halin_cubic(spec)


def _grow_tree(n: int, rng: random.Random, cubic: bool) -> list[list[int]]:
    """Grow an ordered tree with no degree-2 node by splitting leaves.

    Returns per-vertex ordered child lists. The root starts with 3
    children (4 for n=5 so the budget lands exactly); each split turns a
    leaf into an internal node with 2 children (cubic) or 2-3 children
    (general), never leaving a remainder of 1.
    """
    root_kids = 4 if (not cubic and n == 5) else 3
    children: list[list[int]] = [[]]

    def new_child(parent: int) -> int:
        v = len(children)
        children.append([])
        children[parent].append(v)
        return v

    leaves = [new_child(0) for _ in range(root_kids)]
    count = 1 + root_kids
    while count < n:
        remaining = n - count
        if cubic:
            k = 2
        elif remaining == 3:
            k = 3
        elif remaining in (2, 4):
            k = 2
        else:
            k = 2 if rng.random() < 0.7 else 3
        idx = rng.randrange(len(leaves))
        v = leaves[idx]
        leaves[idx] = leaves[-1]
        leaves.pop()
        leaves.extend(new_child(v) for _ in range(k))
        count += k
    return children


def _close_cycle(children: list[list[int]]) -> tuple[Graph, set[int]]:
    """Build the graph: tree edges plus the cycle in DFS leaf order."""
    g = Graph(len(children))
    for parent, kids in enumerate(children):
        for kid in kids:
            g.add_edge(parent, kid)
    order = []
    stack = [0]
    while stack:
        v = stack.pop()
        if children[v]:
            stack.extend(reversed(children[v]))
        else:
            order.append(v)
    for i, v in enumerate(order):
        g.add_edge(v, order[(i + 1) % len(order)])
    return g, set(order)
