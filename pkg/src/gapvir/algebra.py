"""The gap-p Virasoro algebra.

Basis ``L_m`` (m in Z) and central ``C_0, ..., C_{p-1}``.  With m, n in pZ and
r, s outside pZ::

    [L_m, L_n] = (n - m) L_{m+n} + delta_{m+n,0} ((m/p)^3 - m/p)/12 C_0
    [L_m, L_r] = r L_{m+r}
    [L_r, L_s] = delta_{r+s,0} r C_{rho(r)}

where ``rho(r) = min(r mod p, -r mod p)`` labels the central element shared by
the residue pair {r, -r} mod p.  Labelling by ``r mod p`` alone is not
antisymmetric once p >= 3 ([L_1, L_-1] and [L_-1, L_1] would land on
different C's), and Jacobi on (L_{-p}, L_1, L_{p-1}) forces
[L_{p-1}, L_{1-p}] = (p-1)[L_1, L_{-1}]; see ``central_label``.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import combinations_with_replacement
from typing import Callable, Iterator, NamedTuple

from .report import Report
from .scalars import InputError, check_p, format_scalar, to_scalar


class Gen(NamedTuple):
    """A basis label: ``Gen("L", m)`` or ``Gen("C", i)``."""

    kind: str
    index: int

    def __str__(self):
        return f"{self.kind}_{self.index}"


def central_label(p: int, r: int) -> int:
    """Index of the central element produced by ``[L_r, L_-r]`` for r not in pZ."""
    a = r % p
    return min(a, (-r) % p)


class AlgebraElement:
    """Sparse element ``sum a_m L_m + sum c_i C_i`` of the gap-p algebra."""

    __slots__ = ("p", "l_part", "c_part")

    def __init__(self, p: int, l_part=None, c_part=None):
        self.p = check_p(p)
        clean = {}
        for m, a in (l_part or {}).items():
            a = to_scalar(a)
            if a:
                clean[int(m)] = a
        self.l_part = clean
        if c_part is None:
            c_part = (0,) * p
        c_part = tuple(to_scalar(c) for c in c_part)
        if len(c_part) != p:
            raise InputError(f"central part must have exactly p={p} entries, got {len(c_part)}")
        self.c_part = c_part

    @classmethod
    def zero(cls, p: int) -> AlgebraElement:
        return cls(p)

    def _same_p(self, other: AlgebraElement) -> None:
        if not isinstance(other, AlgebraElement):
            raise InputError(f"expected an AlgebraElement, got {type(other).__name__}")
        if other.p != self.p:
            raise InputError(f"mismatched gap parameters p={self.p} and p={other.p}")

    def __add__(self, other: AlgebraElement) -> AlgebraElement:
        self._same_p(other)
        l = dict(self.l_part)
        for m, a in other.l_part.items():
            l[m] = l.get(m, 0) + a
        return AlgebraElement(self.p, l, [a + b for a, b in zip(self.c_part, other.c_part)])

    def __neg__(self) -> AlgebraElement:
        return AlgebraElement(self.p, {m: -a for m, a in self.l_part.items()}, [-c for c in self.c_part])

    def __sub__(self, other: AlgebraElement) -> AlgebraElement:
        return self + (-other)

    def __mul__(self, scalar) -> AlgebraElement:
        s = to_scalar(scalar)
        return AlgebraElement(self.p, {m: a * s for m, a in self.l_part.items()}, [c * s for c in self.c_part])

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.p == other.p and self.l_part == other.l_part and self.c_part == other.c_part

    def __hash__(self):
        return hash((self.p, frozenset(self.l_part.items()), self.c_part))

    def is_zero(self) -> bool:
        return not self.l_part and not any(self.c_part)

    def terms(self) -> Iterator[tuple[Gen, Fraction]]:
        for m in sorted(self.l_part):
            yield Gen("L", m), self.l_part[m]
        for i, c in enumerate(self.c_part):
            if c:
                yield Gen("C", i), c

    def __repr__(self):
        parts = [f"{format_scalar(c)}*{g}" for g, c in self.terms()]
        return " + ".join(parts) if parts else "0"


def L(p: int, m: int) -> AlgebraElement:
    return AlgebraElement(p, {m: 1})


def C(p: int, i: int) -> AlgebraElement:
    check_p(p)
    if not 0 <= i < p:
        raise InputError(f"central index must lie in 0..{p - 1}, got {i}")
    c = [0] * p
    c[i] = 1
    return AlgebraElement(p, c_part=c)


def element(p: int, g: Gen) -> AlgebraElement:
    if g.kind == "L":
        return L(p, g.index)
    if g.kind == "C":
        return C(p, g.index)
    raise InputError(f"unknown generator kind {g.kind!r}")


def virasoro_central(p: int, m: int) -> Fraction:
    """Coefficient of C_0 in [L_m, L_-m] for m in pZ."""
    q = Fraction(m // p)
    return (q**3 - q) / 12


@lru_cache(maxsize=1 << 16)
def generator_bracket(p: int, a: Gen, b: Gen) -> AlgebraElement:
    if a.kind == "C" or b.kind == "C":
        return AlgebraElement(p)
    m, n = a.index, b.index
    m_in, n_in = m % p == 0, n % p == 0
    if m_in and n_in:
        c = [0] * p
        if m + n == 0:
            c[0] = virasoro_central(p, m)
        return AlgebraElement(p, {m + n: n - m}, c)
    if m_in:
        return AlgebraElement(p, {m + n: n})
    if n_in:
        return AlgebraElement(p, {m + n: -m})
    c = [0] * p
    if m + n == 0:
        c[central_label(p, m)] = m
    return AlgebraElement(p, {}, c)


BracketRule = Callable[[int, Gen, Gen], AlgebraElement]


def bracket(x: AlgebraElement, y: AlgebraElement, rule: BracketRule = generator_bracket) -> AlgebraElement:
    x._same_p(y)
    p = x.p
    l: dict[int, Fraction] = {}
    c = [Fraction(0)] * p
    for ga, a in x.terms():
        for gb, b in y.terms():
            z = rule(p, ga, gb)
            ab = a * b
            for k, v in z.l_part.items():
                l[k] = l.get(k, 0) + ab * v
            for i, v in enumerate(z.c_part):
                if v:
                    c[i] += ab * v
    return AlgebraElement(p, l, c)


def window_generators(p: int, window: int, central: bool = True) -> list[Gen]:
    gens = [Gen("L", m) for m in range(-window, window + 1)]
    if central:
        gens += [Gen("C", i) for i in range(p)]
    return gens


def check_lie_axioms(p: int, window: int = 12, rule: BracketRule = generator_bracket,
                     stop_after: int | None = None) -> Report:
    """Exhaustively check antisymmetry and Jacobi for generators with |index| <= window.

    Jacobi is checked on unordered triples: the Jacobiator is cyclic by
    construction and flips sign under a transposition once antisymmetry
    holds, so unordered triples plus antisymmetry cover every ordered one.
    """
    check_p(p)
    if window < 1:
        raise InputError("window must be >= 1")
    report = Report("lie-axioms", details={"p": p, "window": window})
    cache: dict = {}

    def br(a, b):
        key = (a, b)
        if key not in cache:
            cache[key] = rule(p, a, b)
        return cache[key]

    def br_elem(g: Gen, z: AlgebraElement) -> AlgebraElement:
        out = AlgebraElement(p)
        for h, c in z.terms():
            out = out + br(g, h) * c
        return out

    def full() -> bool:
        return stop_after is not None and len(report.violations) >= stop_after

    gens = window_generators(p, window)
    for a in gens:
        for b in gens:
            report.checked += 1
            s = br(a, b) + br(b, a)
            if not s.is_zero():
                report.add(axiom="antisymmetry", x=str(a), y=str(b), residual=repr(s))
                if full():
                    return report
    for a, b, c in combinations_with_replacement(gens, 3):
        report.checked += 1
        j = br_elem(a, br(b, c)) + br_elem(b, br(c, a)) + br_elem(c, br(a, b))
        if not j.is_zero():
            report.add(axiom="jacobi", x=str(a), y=str(b), z=str(c), residual=repr(j))
            if full():
                return report
    return report


def vir_bracket(i: int, j: int) -> tuple[dict[int, Fraction], Fraction]:
    """[x_i, x_j] in the Virasoro algebra: (L-part over x_k, coefficient of K_x)."""
    central = Fraction(i**3 - i, 12) if i + j == 0 else Fraction(0)
    l = {i + j: Fraction(j - i)} if j != i else {}
    return l, central


def vir_embedding(p: int, l_part: dict[int, Fraction], k_coeff) -> AlgebraElement:
    """Image of sum a_i x_i + k K_x under x_i -> L_{pi}/p, K_x -> C_0/p^2."""
    c = [Fraction(0)] * p
    c[0] = to_scalar(k_coeff) / p**2
    return AlgebraElement(p, {p * i: Fraction(a) / p for i, a in l_part.items()}, c)


def vir_embedding_check(p: int, window: int = 10) -> Report:
    check_p(p)
    if window < 2:
        raise InputError("window must be >= 2")
    report = Report("vir-embedding", details={"p": p, "window": window})
    for i in range(-window, window + 1):
        xi = vir_embedding(p, {i: 1}, 0)
        for j in range(-window, window + 1):
            report.checked += 1
            lhs = vir_embedding(p, *vir_bracket(i, j))
            rhs = bracket(xi, vir_embedding(p, {j: 1}, 0))
            if lhs != rhs:
                report.add(i=i, j=j, lhs=repr(lhs), rhs=repr(rhs))
    return report
