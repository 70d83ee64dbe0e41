"""Network indicators: diameter, extension, directness and the
interchange-constrained diameter sequence.

Conventions:

* ``di_k`` is the largest *finite* ``k``-budget distance over ordered pairs.
  Pairs that cannot be joined within the budget are left out rather than
  making the value infinite.
* The variance statistic is the population variance of ``di_1..di_L`` where
  ``L`` is the number of lines.
* Directness is ``lines / transfers`` where ``transfers`` is the largest,
  over pairs at diameter distance, of the fewest interchanges on a shortest
  path between them. It is undefined (``None``) when that maximum is 0.
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from decimal import ROUND_HALF_UP, Decimal, localcontext
from fractions import Fraction

from .core import ColoredGraph, Length, as_length, is_connected, line_count, total_length
from .errors import BudgetExceeded, DisconnectedGraph
from .oracle import DEFAULT_BUDGET, INF, brute_source_tables
from .pathfind import lexicographic_sweep, pareto_sweep, staircase_from_labels


def _require_connected(g: ColoredGraph) -> None:
    if not is_connected(g):
        raise DisconnectedGraph("graph is not connected")


def population_variance(values) -> Fraction:
    values = [Fraction(v) for v in values]
    if not values:
        return Fraction(0)
    mean = sum(values) / len(values)
    return sum((v - mean) ** 2 for v in values) / len(values)


def format_decimal(x, places: int = 2) -> str:
    """Round half-up to ``places`` decimals."""
    x = Fraction(x)
    with localcontext() as ctx:
        ctx.prec = 50
        d = Decimal(x.numerator) / Decimal(x.denominator)
    return str(d.quantize(Decimal(1).scaleb(-places), rounding=ROUND_HALF_UP))


def format_exact(x) -> str:
    return str(as_length(x)) if x is not None else "undefined"


@dataclass(frozen=True)
class DiSequence:
    """A constrained-diameter sequence ``k -> value`` for ``k = 1..reported_up_to``.

    ``value(k)`` for larger ``k`` repeats the last entry; the sequence is
    constant from ``saturation`` on. ``None`` means no pair is joined under
    that budget.
    """

    values: tuple[Length | None, ...]
    saturation: int
    variance: Fraction

    @property
    def reported_up_to(self) -> int:
        return len(self.values)

    def value(self, k: int) -> Length | None:
        if k < 1:
            raise ValueError("k must be >= 1")
        return self.values[min(k, len(self.values)) - 1]

    def items(self):
        return list(enumerate(self.values, start=1))


def _make_sequence(values: list, saturation: int, lines: int) -> DiSequence:
    span = max(1, saturation, lines)
    values = list(values[:span]) + [values[-1]] * (span - len(values))
    head = [values[min(k, len(values)) - 1] for k in range(1, lines + 1)]
    variance = population_variance(v for v in head if v is not None)
    return DiSequence(tuple(values), saturation, variance)


def diameter(g: ColoredGraph) -> Length:
    _require_connected(g)
    best = 0
    for s in g.nodes:
        for entry in lexicographic_sweep(g, s):
            if entry[0] > best:
                best = entry[0]
    return best


def extension(g: ColoredGraph) -> Fraction | None:
    """Total length over diameter; ``None`` for a single-node graph."""
    d = diameter(g)
    if d == 0:
        return None
    return Fraction(total_length(g)) / Fraction(d)


def max_diameter_transfers(g: ColoredGraph) -> tuple[Length, int]:
    """``(d, transfers)`` with transfers maximized over pairs at distance ``d``."""
    _require_connected(g)
    d, worst = 0, 0
    for s in g.nodes:
        for length, inter in lexicographic_sweep(g, s):
            if length > d:
                d, worst = length, inter
            elif length == d and inter > worst:
                worst = inter
    return d, worst


def directness(g: ColoredGraph) -> Fraction | None:
    _, transfers = max_diameter_transfers(g)
    if transfers == 0:
        return None
    return Fraction(line_count(g), transfers)


def di_sequence(g: ColoredGraph) -> DiSequence:
    """Interchange-constrained diameters from one Pareto sweep per source."""
    _require_connected(g)
    partial: dict[int, Length] = defaultdict(int)
    final_from: dict[int, Length] = defaultdict(int)
    saturation = 1
    for s in g.nodes:
        labels = pareto_sweep(g, s)
        for t in g.nodes:
            if t == s:
                continue
            steps = [st for st in staircase_from_labels(labels[t]).steps if st[1] != INF]
            last = len(steps) - 1
            for j, (k, d) in enumerate(steps):
                if j == last:
                    if d > final_from[k]:
                        final_from[k] = d
                    if k > saturation:
                        saturation = k
                else:
                    for kk in range(k, steps[j + 1][0]):
                        if d > partial[kk]:
                            partial[kk] = d
    values: list[Length | None] = []
    running = None
    for k in range(1, saturation + 1):
        if k in final_from and (running is None or final_from[k] > running):
            running = final_from[k]
        cands = [x for x in (running, partial.get(k)) if x is not None]
        values.append(max(cands) if cands else None)
    return _make_sequence(values, saturation, line_count(g))


def dc_sequence(g: ColoredGraph, budget=DEFAULT_BUDGET, force: bool = False) -> DiSequence:
    """Color-constrained diameters by exhaustive enumeration (small graphs only)."""
    _require_connected(g)
    lines = line_count(g)
    ks = range(1, max(1, lines) + 1)
    values: list[Length | None] = [None] * len(ks)
    for s in g.nodes:
        for t, table in enumerate(brute_source_tables(g, s, budget, force)):
            if t == s:
                continue
            for j, k in enumerate(ks):
                d = table.color_constrained(k)
                if d != INF and (values[j] is None or d > values[j]):
                    values[j] = d
    saturation = len(values)
    while saturation > 1 and values[saturation - 2] == values[-1]:
        saturation -= 1
    return _make_sequence(values, saturation, lines)


@dataclass(frozen=True)
class IndicatorReport:
    n: int
    m: int
    line_count: int
    total_length: Length
    diameter: Length
    extension: Fraction | None
    max_transfers: int
    directness: Fraction | None
    di: DiSequence
    dc: DiSequence | None = None
    note: str | None = None

    def _num(self, x, exact: bool) -> str:
        if x is None:
            return "undefined"
        if exact or Fraction(x).denominator == 1:
            return format_exact(x)
        return format_decimal(x)

    def to_dict(self, exact: bool = False) -> dict:
        def seq(s: DiSequence | None):
            if s is None:
                return None
            return {
                "values": [None if v is None else self._num(v, True) for v in s.values],
                "saturation": s.saturation,
                "variance": self._num(s.variance, exact),
            }

        return {
            "nodes": self.n,
            "edges": self.m,
            "lines": self.line_count,
            "total_length": self._num(self.total_length, True),
            "diameter": self._num(self.diameter, True),
            "extension": self._num(self.extension, exact),
            "max_transfers": self.max_transfers,
            "directness": self._num(self.directness, exact),
            "di": seq(self.di),
            "dc": seq(self.dc),
            "note": self.note,
        }

    def format_table(self, exact: bool = False) -> str:
        def seq_text(s: DiSequence) -> str:
            return " ".join("-" if v is None else format_exact(v) for v in s.values)

        rows = [
            ("nodes", str(self.n)),
            ("edges", str(self.m)),
            ("lines", str(self.line_count)),
            ("total length", self._num(self.total_length, True)),
            ("diameter", self._num(self.diameter, True)),
            ("extension", self._num(self.extension, exact)),
            ("max transfers", str(self.max_transfers)),
            ("directness", self._num(self.directness, exact)),
            ("di", seq_text(self.di)),
            ("variance", self._num(self.di.variance, exact)),
        ]
        if self.dc is not None:
            rows.append(("dc", seq_text(self.dc)))
            rows.append(("dc variance", self._num(self.dc.variance, exact)))
        if self.note:
            rows.append(("note", self.note))
        width = max(len(name) for name, _ in rows)
        return "\n".join(f"{name:>{width}}: {value}" for name, value in rows) + "\n"

    def format_csv(self, exact: bool = False) -> str:
        d = self.to_dict(exact)
        lines = [f"# {key}: {d[key]}" for key in (
            "nodes", "edges", "lines", "total_length", "diameter",
            "extension", "max_transfers", "directness",
        )]
        lines.append(f"# variance: {d['di']['variance']}")
        lines.append("k,di_k" + (",dc_k" if self.dc is not None else ""))
        span = max(self.di.reported_up_to, self.dc.reported_up_to if self.dc else 0)
        for k in range(1, span + 1):
            v = self.di.value(k)
            row = [str(k), "" if v is None else format_exact(v)]
            if self.dc is not None:
                c = self.dc.value(k)
                row.append("" if c is None else format_exact(c))
            lines.append(",".join(row))
        return "\n".join(lines) + "\n"


def full_report(g: ColoredGraph, budget=DEFAULT_BUDGET, with_dc: bool = True) -> IndicatorReport:
    _require_connected(g)
    d, transfers = max_diameter_transfers(g)
    lines = line_count(g)
    dc = None
    note = None
    if with_dc:
        try:
            dc = dc_sequence(g, budget)
        except BudgetExceeded as exc:
            note = f"dc sequence omitted: {exc}"
    return IndicatorReport(
        n=g.n,
        m=g.m,
        line_count=lines,
        total_length=total_length(g),
        diameter=d,
        extension=None if d == 0 else Fraction(total_length(g)) / Fraction(d),
        max_transfers=transfers,
        directness=None if transfers == 0 else Fraction(lines, transfers),
        di=di_sequence(g),
        dc=dc,
        note=note,
    )
