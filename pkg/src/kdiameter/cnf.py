"""CNF formulas and DIMACS input/output."""
from __future__ import annotations

from dataclasses import dataclass

from .errors import EmptyClause, ParseError


@dataclass(frozen=True)
class CnfFormula:
    """Formula over variables ``1..variable_count``.

    Literals are signed variable indices. Duplicate literals inside a clause
    are collapsed (first occurrence kept); empty clauses are rejected.
    """

    variable_count: int
    clauses: tuple[tuple[int, ...], ...]

    def __init__(self, variable_count: int, clauses):
        if variable_count < 0:
            raise ValueError("variable count must be non-negative")
        cleaned = []
        for j, clause in enumerate(clauses, start=1):
            lits = tuple(dict.fromkeys(int(x) for x in clause))
            if not lits:
                raise EmptyClause(f"clause {j} is empty")
            for lit in lits:
                if lit == 0 or abs(lit) > variable_count:
                    raise ValueError(f"literal {lit} out of range 1..{variable_count}")
            cleaned.append(lits)
        object.__setattr__(self, "variable_count", variable_count)
        object.__setattr__(self, "clauses", tuple(cleaned))

    @property
    def clause_count(self) -> int:
        return len(self.clauses)

    def satisfied_by(self, assignment: dict[int, bool]) -> bool:
        return all(any(assignment[abs(l)] == (l > 0) for l in c) for c in self.clauses)


def literal_name(lit: int) -> str:
    return f"x{lit}" if lit > 0 else f"¬x{-lit}"


def parse_dimacs(text: str) -> CnfFormula:
    header = None
    clauses: list[list[int]] = []
    current: list[int] = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        tokens = line.split()
        if not tokens or tokens[0] == "c" or tokens[0] == "%":
            continue
        if tokens[0] == "p":
            if header is not None:
                raise ParseError("second problem line", lineno)
            if len(tokens) != 4 or tokens[1] != "cnf":
                raise ParseError("expected 'p cnf <vars> <clauses>'", lineno)
            try:
                header = (int(tokens[2]), int(tokens[3]))
            except ValueError:
                raise ParseError("non-integer counts in problem line", lineno) from None
            continue
        if header is None:
            raise ParseError("clause before problem line", lineno)
        for tok in tokens:
            try:
                lit = int(tok)
            except ValueError:
                raise ParseError(f"bad literal {tok!r}", lineno) from None
            if abs(lit) > header[0]:
                raise ParseError(f"literal {lit} exceeds declared {header[0]} variables", lineno)
            if lit == 0:
                if not current:
                    raise ParseError("empty clause", lineno)
                clauses.append(current)
                current = []
            else:
                current.append(lit)
    if header is None:
        raise ParseError("missing 'p cnf' line")
    if current:
        clauses.append(current)
    if len(clauses) != header[1]:
        raise ParseError(f"header declares {header[1]} clauses, found {len(clauses)}")
    return CnfFormula(header[0], clauses)


def format_dimacs(f: CnfFormula) -> str:
    lines = [f"p cnf {f.variable_count} {f.clause_count}"]
    lines += [" ".join(map(str, c)) + " 0" for c in f.clauses]
    return "\n".join(lines) + "\n"
