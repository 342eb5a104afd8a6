"""Verma modules M(lambda) over the gap-p algebra.

Vectors are expanded in the PBW basis L_{-m_1} ... L_{-m_r} v_lambda with
m_1 >= ... >= m_r >= 1, keyed by the tuple ``(m_1, ..., m_r)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .algebra import AlgebraElement, Gen, central_label, element, generator_bracket
from .linalg import nullspace
from .report import Report
from .scalars import InputError, check_p, format_scalar, to_scalar
from .sparse import SparseVector

Monomial = tuple[int, ...]


@dataclass(frozen=True)
class HighestWeight:
    """lambda on the Cartan span{L_0, C_0, ..., C_{p-1}}: h = lambda(L_0), c[i] = lambda(C_i)."""

    p: int
    h: Fraction
    c: tuple[Fraction, ...]

    def __post_init__(self):
        check_p(self.p)
        object.__setattr__(self, "h", to_scalar(self.h))
        c = tuple(to_scalar(x) for x in self.c)
        if len(c) != self.p:
            raise InputError(f"highest weight needs p={self.p} central values, got {len(c)}")
        object.__setattr__(self, "c", c)

    def is_zero(self) -> bool:
        return not self.h and not any(self.c)

    def I_set(self) -> tuple[int, ...]:
        """{1 <= i <= p-1 : lambda(C_i) = 0}."""
        return tuple(i for i in range(1, self.p) if not self.c[i])

    def effective_I_set(self) -> tuple[int, ...]:
        """Residues i whose Heisenberg pair [L_i, L_-i] = i C_rho(i) is killed by lambda."""
        return tuple(i for i in range(1, self.p) if not self.c[central_label(self.p, i)])


def is_monomial(m) -> bool:
    return isinstance(m, tuple) and all(isinstance(x, int) and x >= 1 for x in m) and \
        all(a >= b for a, b in zip(m, m[1:]))


def depth(m: Monomial) -> int:
    return sum(m)


def pbw_basis(n: int) -> list[Monomial]:
    """Partitions of n as non-increasing tuples, in reverse lexicographic order."""
    if n < 0:
        raise InputError("depth must be >= 0")

    def parts(rest: int, cap: int):
        if rest == 0:
            yield ()
            return
        for first in range(min(rest, cap), 0, -1):
            for tail in parts(rest - first, first):
                yield (first,) + tail

    return list(parts(n, n))


def graded_dimension(n: int) -> int:
    return len(pbw_basis(n))


class VermaVector(SparseVector):
    __slots__ = ()

    def _term_str(self, key):
        return "".join(f"L_{{-{m}}}" for m in key) + "v"

    def records(self) -> list[dict]:
        return [{"monomial": list(m), "coeff": format_scalar(self.coords[m])}
                for m in sorted(self.coords, key=lambda m: (-depth(m), tuple(-x for x in m)))]


def vacuum(weight: HighestWeight) -> VermaVector:
    return VermaVector._raw(weight, {(): Fraction(1)})


def monomial_vector(weight: HighestWeight, mono: Monomial) -> VermaVector:
    if not is_monomial(mono):
        raise InputError(f"{mono!r} is not a non-increasing tuple of positive integers")
    return VermaVector._raw(weight, {mono: Fraction(1)})


def _accumulate(out: dict, terms: dict, scale: Fraction) -> None:
    for m, c in terms.items():
        s = out.get(m, 0) + scale * c
        if s:
            out[m] = s
        else:
            out.pop(m, None)


class VermaModule:
    """Straightening engine for one highest weight, with a per-weight cache."""

    def __init__(self, weight: HighestWeight):
        self.weight = weight
        self.p = weight.p
        self._cache: dict[tuple[int, Monomial], dict[Monomial, Fraction]] = {}

    def _scalar(self, g: Gen) -> Fraction:
        if g.kind == "C":
            return self.weight.c[g.index]
        return self.weight.h

    def act_monomial(self, k: int, mono: Monomial) -> dict[Monomial, Fraction]:
        """L_k applied to the basis vector ``mono``; the result must not be mutated."""
        key = (k, mono)
        hit = self._cache.get(key)
        if hit is not None:
            return hit
        if not mono:
            if k > 0:
                res = {}
            elif k == 0:
                res = {(): self.weight.h} if self.weight.h else {}
            else:
                res = {(-k,): Fraction(1)}
        elif k < 0 and -k >= mono[0]:
            res = {(-k,) + mono: Fraction(1)}
        else:
            # L_k L_{-m} T = L_{-m} (L_k T) + [L_k, L_{-m}] T
            m, tail = mono[0], mono[1:]
            res: dict[Monomial, Fraction] = {}
            for t, c in self.act_monomial(k, tail).items():
                _accumulate(res, self.act_monomial(-m, t), c)
            z = generator_bracket(self.p, Gen("L", k), Gen("L", -m))
            for idx, c in z.l_part.items():
                _accumulate(res, self.act_monomial(idx, tail), c)
            central = sum((c * self.weight.c[i] for i, c in enumerate(z.c_part) if c), Fraction(0))
            if central:
                _accumulate(res, {tail: Fraction(1)}, central)
        self._cache[key] = res
        return res

    def act(self, x, v: VermaVector) -> VermaVector:
        if v.parent != self.weight:
            raise InputError("vector has a different highest weight")
        if isinstance(x, Gen):
            x = element(self.p, x)
        if not isinstance(x, AlgebraElement) or x.p != self.p:
            raise InputError(f"cannot act by {x!r} on a p={self.p} Verma module")
        out: dict[Monomial, Fraction] = {}
        for k, a in x.l_part.items():
            for mono, c in v.coords.items():
                _accumulate(out, self.act_monomial(k, mono), a * c)
        central = sum((a * self.weight.c[i] for i, a in enumerate(x.c_part) if a), Fraction(0))
        if central:
            _accumulate(out, v.coords, central)
        return VermaVector._raw(self.weight, out)


@lru_cache(maxsize=64)
def verma_module(weight: HighestWeight) -> VermaModule:
    return VermaModule(weight)


def verma_act(weight: HighestWeight, x, v: VermaVector) -> VermaVector:
    return verma_module(weight).act(x, v)


@dataclass(frozen=True)
class VermaVerdict:
    I_set: tuple[int, ...]
    effective_I_set: tuple[int, ...]
    zero_weight: bool

    @property
    def irreducible(self) -> bool:
        return not self.effective_I_set and not self.zero_weight

    def to_dict(self) -> dict:
        return {
            "I": list(self.I_set),
            "effective_I": list(self.effective_I_set),
            "zero_weight": self.zero_weight,
            "irreducible": self.irreducible,
        }


def verma_verdict(weight: HighestWeight) -> VermaVerdict:
    """Irreducibility of M(lambda).

    ``I_set`` is {i : lambda(C_i) = 0}.  Irreducibility is read off the
    effective set, which looks at the central element each [L_i, L_-i]
    actually produces (C_i and C_{p-i} share one; see ``central_label``).
    The two sets agree whenever lambda(C_i) = lambda(C_{p-i}) for all i.
    """
    return VermaVerdict(weight.I_set(), weight.effective_I_set(), weight.is_zero())


def raising_matrix(weight: HighestWeight, d: int) -> list[list[Fraction]]:
    """Stacked matrices of L_1, ..., L_d from depth d into depths d-1, ..., 0."""
    mod = verma_module(weight)
    cols = pbw_basis(d)
    rows = []
    for k in range(1, d + 1):
        targets = pbw_basis(d - k)
        index = {m: i for i, m in enumerate(targets)}
        block = [[Fraction(0)] * len(cols) for _ in targets]
        for j, mono in enumerate(cols):
            for t, c in mod.act_monomial(k, mono).items():
                block[index[t]][j] = c
        rows.extend(block)
    return rows


def singular_vectors(weight: HighestWeight, d: int) -> list[VermaVector]:
    """Basis of the vectors at depth d killed by every L_k, k >= 1.

    L_k with k > d sends depth d below zero, so k = 1..d suffice.
    """
    if d < 1:
        raise InputError("depth must be >= 1")
    cols = pbw_basis(d)
    kernel = nullspace(raising_matrix(weight, d), len(cols))
    return [VermaVector(weight, zip(cols, vec)) for vec in kernel]


def check_verma_module_axioms(weight: HighestWeight, window: int, max_depth: int) -> Report:
    """[x, y] v = x(y v) - y(x v) for generators with |index| <= window and
    basis vectors of depth <= max_depth."""
    p = weight.p
    mod = verma_module(weight)
    report = Report("verma-module-axioms", details={"window": window, "max_depth": max_depth})
    gens = [Gen("L", k) for k in range(-window, window + 1)] + [Gen("C", i) for i in range(p)]
    basis = [m for n in range(max_depth + 1) for m in pbw_basis(n)]
    for a in gens:
        for b in gens:
            z = generator_bracket(p, a, b)
            for mono in basis:
                report.checked += 1
                v = VermaVector._raw(weight, {mono: Fraction(1)})
                lhs = mod.act(z, v)
                rhs = mod.act(a, mod.act(b, v)) - mod.act(b, mod.act(a, v))
                if lhs != rhs:
                    report.add(x=str(a), y=str(b), monomial=list(mono), lhs=repr(lhs), rhs=repr(rhs))
    return report
