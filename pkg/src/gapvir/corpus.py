"""The five worked F matrices (p = 3, 4, 5, 4, 12) with their expected verdicts.

Entries that the examples only require to be nonzero are filled with small
distinct primes.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .mois import FMatrix, MoisSpec, linkage_graph, validate_f

ALPHA = Fraction(1, 2)
BETA = Fraction(2, 3)


def complete_row2(f1: tuple, f20) -> tuple[Fraction, ...]:
    """Row 2 of a p = 5 matrix forced by condition (III) from row 1 and f_{2,0}."""
    f10, f11, f12, f13, f14 = map(Fraction, f1)
    f20 = Fraction(f20)
    return (
        f20,
        f12 * f20 / f10,
        f12 * f13 * f20 / (f10 * f11),
        f13 * f14 * f20 / (f10 * f11),
        f14 * f20 / f11,
    )


@dataclass(frozen=True)
class Fixture:
    name: str
    F: FMatrix
    valid: bool
    edges: frozenset | None = None  # expected (from, to) pairs
    strongly_connected: bool | None = None
    witness: dict | None = None  # expected condition (III) witness

    def spec(self, alpha=ALPHA, beta=BETA) -> MoisSpec:
        return MoisSpec(self.F.p, alpha, beta, self.F, strict=self.valid)

    def check(self) -> dict:
        """Re-derive the verdicts and compare with the documented ones."""
        rep = validate_f(self.F)
        out = {"name": self.name, "valid": rep.valid, "expected_valid": self.valid}
        ok = rep.valid == self.valid
        if self.witness is not None:
            got = rep.failures.get("III", {}).get("witness")
            out["witness"] = got
            ok &= got == self.witness
        if self.valid:
            g = linkage_graph(self.F)
            got_edges = {(a, b) for a, b, _ in g.edges}
            out["edges"] = sorted(got_edges)
            out["strongly_connected"] = g.strongly_connected
            if self.edges is not None:
                ok &= got_edges == set(self.edges)
            if self.strongly_connected is not None:
                ok &= g.strongly_connected == self.strongly_connected
        out["ok"] = ok
        return out


def _ex1() -> Fixture:
    F = FMatrix(3, ((2, 3, 5), (0, 0, 0)))
    return Fixture("example1", F, True, frozenset({(0, 1), (1, 2), (2, 0)}), True)


def _ex2() -> Fixture:
    F = FMatrix.from_entries(4, {(2, 0): 3, (2, 2): 7})
    return Fixture("example2", F, True, frozenset({(0, 2), (2, 0)}), True)


def _ex3() -> Fixture:
    f1 = (2, 3, 5, 7, 11)
    F = FMatrix(5, (f1, complete_row2(f1, 13), (0,) * 5, (0,) * 5))
    edges = frozenset({(j, (j + s) % 5) for j in range(5) for s in (1, 2)})
    return Fixture("example3", F, True, edges, True)


def _ex4() -> Fixture:
    F = FMatrix(4, ((1, 2, 3, 4), (5, 0, 6, 0), (0, 0, 0, 0)))
    return Fixture("example4", F, False, witness={"r": 2, "s": 1, "i": 0})


def _ex5() -> Fixture:
    F = FMatrix.from_entries(12, {(8, 0): 2, (8, 4): 3, (8, 8): 5})
    return Fixture("example5", F, True, frozenset({(0, 8), (8, 4), (4, 0)}), True)


def fixtures() -> list[Fixture]:
    return [_ex1(), _ex2(), _ex3(), _ex4(), _ex5()]


def fixture(name: str) -> Fixture:
    for fx in fixtures():
        if fx.name == name:
            return fx
    raise KeyError(name)


def run_corpus() -> tuple[bool, list[dict]]:
    results = [fx.check() for fx in fixtures()]
    return all(r["ok"] for r in results), results
