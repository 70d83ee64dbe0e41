"""Example networks and seeded random generators.

The five illustrative networks are reconstructed from their stated
properties (station counts, diameters, line counts, the interchange-
constrained diameter rows, extension and directness). Each is checked
against those numbers when built, so a wrong reconstruction fails loudly.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .core import ColoredGraph, build_graph, is_connected

PAPER_NODE_NAMES: dict[int, tuple[str, ...]] = {
    1: tuple(f"v{i}" for i in range(12)),
    2: tuple(f"v{i}" for i in range(6)),
    3: ("a0", "a1", "a2", "a3", "a4", "b0", "b1", "b2", "b3", "c0", "c1", "c2"),
    4: ("a", "b", "c", "d", "e", "f"),
    5: ("a", "b", "c", "d", "e", "f"),
}


def _chain(segments: list[tuple[str, int]]) -> ColoredGraph:
    edges = []
    node = 0
    for line, count in segments:
        for _ in range(count):
            edges.append((node, node + 1, 1, line))
            node += 1
    return build_graph(node + 1, edges)


def _named(key: int, lines: dict[str, list[str]]) -> ColoredGraph:
    index = {name: i for i, name in enumerate(PAPER_NODE_NAMES[key])}
    edges = []
    for line, stops in lines.items():
        for a, b in zip(stops, stops[1:]):
            edges.append((index[a], index[b], 1, line))
    return build_graph(len(index), edges)


def _raw_network(key: int) -> ColoredGraph:
    if key == 1:
        return _chain([("A", 4), ("B", 4), ("C", 3)])
    if key == 2:
        return _chain([("A", 2), ("B", 2), ("C", 1)])
    if key == 3:
        return _named(3, {
            "A": ["a0", "a1", "a2", "a3", "a4"],
            "B": ["b0", "b1", "a2", "b2", "b3"],
            "C": ["c0", "b2", "c1", "c2"],
        })
    if key == 4:
        return _named(4, {"red": ["a", "b", "e"], "blue": ["b", "c", "f"], "green": ["c", "d"]})
    if key == 5:
        return _named(5, {
            "red": ["a", "b", "c", "d"],
            "blue": ["b", "e"],
            "green": ["c", "f"],
        })
    raise ValueError(f"example networks are numbered 1..5, got {key}")


# Values stated for each network; None where nothing is stated.
SIGNATURES: dict[int, dict] = {
    1: {"n": 12, "lines": 3, "diameter": 11, "di": (4, 8, 11)},
    2: {"n": 6, "lines": 3, "diameter": 5, "di": (2, 4, 5)},
    3: {"n": 12, "lines": 3, "diameter": 5, "di": (4, 5, 5)},
    4: {"n": 6, "lines": 3, "diameter": 3, "total_length": 5,
        "extension": Fraction(5, 3), "directness": Fraction(3, 2), "di": (2, 3, 3)},
    5: {"n": 6, "lines": 3, "diameter": 3, "total_length": 5,
        "extension": Fraction(5, 3), "directness": Fraction(3, 2), "di": (3, 3, 3)},
}


class SignatureMismatch(AssertionError):
    pass


def check_signature(key: int, g: ColoredGraph) -> None:
    from .indicators import full_report

    sig = SIGNATURES[key]
    report = full_report(g, with_dc=False)
    got = {
        "n": report.n,
        "lines": report.line_count,
        "diameter": report.diameter,
        "total_length": report.total_length,
        "extension": report.extension,
        "directness": report.directness,
        "di": tuple(report.di.value(k) for k in range(1, len(sig["di"]) + 1)),
    }
    bad = {name: (want, got[name]) for name, want in sig.items() if got[name] != want}
    if bad:
        raise SignatureMismatch(f"network ({key}) does not match its stated values: {bad}")


@lru_cache(maxsize=None)
def paper_network(key: int) -> ColoredGraph:
    g = _raw_network(key)
    check_signature(key, g)
    return g


@dataclass(frozen=True)
class GeneratorSpec:
    """Parsed generator description, e.g. ``paper:3`` or ``random:3,4,7``."""

    kind: str
    params: tuple[int, ...] = ()

    @classmethod
    def parse(cls, text: str) -> "GeneratorSpec":
        kind, _, rest = text.partition(":")
        try:
            params = tuple(int(x) for x in rest.split(",")) if rest else ()
        except ValueError:
            raise ValueError(f"bad generator parameters in {text!r}") from None
        if kind == "paper":
            if len(params) != 1 or not 1 <= params[0] <= 5:
                raise ValueError("use paper:N with N in 1..5")
        elif kind == "random":
            if len(params) != 3 or params[0] < 1 or params[1] < 2:
                raise ValueError("use random:LINES,NODES_PER_LINE,SEED")
        elif kind == "transit":
            if len(params) != 3 or params[0] < 1 or params[1] < 1:
                raise ValueError("use transit:NODES,LINES,SEED")
        elif kind == "chain":
            if not params or any(p < 1 for p in params):
                raise ValueError("use chain:LEN1,LEN2,... with positive segment lengths")
        else:
            raise ValueError(f"unknown generator {kind!r}")
        return cls(kind, params)

    def build(self) -> ColoredGraph:
        if self.kind == "paper":
            return paper_network(self.params[0])
        if self.kind == "random":
            return random_line_network(*self.params)
        if self.kind == "transit":
            return random_transit_network(*self.params)
        return _chain([(f"L{i + 1}", p) for i, p in enumerate(self.params)])


def _lines_to_graph(node_count: int, lines: list[list[int]]) -> ColoredGraph:
    edges = []
    for i, stops in enumerate(lines):
        name = f"L{i + 1}"
        edges += [(a, b, 1, name) for a, b in zip(stops, stops[1:])]
    return build_graph(node_count, edges)


def random_line_network(
    line_count: int, nodes_per_line: int, seed: int, transfer_prob: float = 0.25
) -> ColoredGraph:
    """Union of ``line_count`` simple paths with ``nodes_per_line`` stops each.

    The first line uses fresh stations. Every later line passes through one
    existing station (which keeps the network connected); each of its other
    stops is an existing station with probability ``transfer_prob`` and a
    fresh one otherwise.
    """
    if line_count < 1 or nodes_per_line < 2:
        raise ValueError("need line_count >= 1 and nodes_per_line >= 2")
    rng = random.Random(seed)
    lines = [list(range(nodes_per_line))]
    count = nodes_per_line
    for _ in range(1, line_count):
        anchor_at = rng.randrange(nodes_per_line)
        stops: list[int] = []
        for pos in range(nodes_per_line):
            unused = [v for v in range(count) if v not in stops]
            if pos == anchor_at or (unused and rng.random() < transfer_prob):
                stops.append(rng.choice(unused))
            else:
                stops.append(count)
                count += 1
        lines.append(stops)
    return _lines_to_graph(count, lines)


def random_transit_network(
    node_count: int, line_count: int, seed: int, extra_transfers: int = 2
) -> ColoredGraph:
    """Line network with exactly ``node_count`` stations.

    Fresh stations are split as evenly as possible between lines. Each line
    after the first is threaded through one existing station plus up to
    ``extra_transfers`` more, inserted at random positions.
    """
    if line_count < 1 or node_count < line_count + 1:
        raise ValueError("need at least one line and more stations than lines")
    rng = random.Random(seed)
    base, rem = divmod(node_count, line_count)
    quotas = [base + (1 if i < rem else 0) for i in range(line_count)]
    lines = [list(range(quotas[0]))]
    count = quotas[0]
    for quota in quotas[1:]:
        existing = rng.sample(range(count), min(count, 1 + rng.randint(0, extra_transfers)))
        stops = list(range(count, count + quota))
        count += quota
        for v in existing:
            stops.insert(rng.randrange(len(stops) + 1), v)
        lines.append(stops)
    g = _lines_to_graph(count, lines)
    assert is_connected(g)
    return g


def random_colored_graph(
    node_count: int, edge_count: int, color_count: int, seed: int
) -> ColoredGraph:
    """Connected random multigraph: a random spanning tree plus extra edges.

    Parallel edges appear when an extra edge repeats a pair with a new color.
    ``edge_count`` below ``node_count - 1`` is raised to that.
    """
    rng = random.Random(seed)
    colors = [f"c{i}" for i in range(color_count)]
    edges: list[tuple[int, int, int, str]] = []
    used: set[tuple[int, int, str]] = set()
    order = list(range(node_count))
    rng.shuffle(order)
    for i in range(1, node_count):
        u, v = order[i], order[rng.randrange(i)]
        c = rng.choice(colors)
        edges.append((u, v, 1, c))
        used.add((min(u, v), max(u, v), c))
    attempts = 0
    while len(edges) < edge_count and node_count > 1 and attempts < 50 * edge_count:
        attempts += 1
        u, v = rng.sample(range(node_count), 2)
        c = rng.choice(colors)
        key = (min(u, v), max(u, v), c)
        if key not in used:
            used.add(key)
            edges.append((u, v, 1, c))
    return build_graph(node_count, edges)
