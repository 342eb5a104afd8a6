"""Modules of intermediate series V(alpha, beta, F) over the gap-p algebra.

The module has basis ``v_w`` for w ranging over the residues in o(F) (just
residue 0 when F = 0), with weight alpha + w, and action

    L_m v_w = (alpha + w + m beta) v_{w+m}     m in pZ
    L_s v_w = F[s mod p][w mod p] v_{w+s}      s not in pZ
    C_i v_w = 0

Also here: the Vir-type 𝔤(0)-modules A_j(a), B_j(a), V_j(alpha, beta).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from fractions import Fraction
from typing import Callable, Iterable

from .algebra import AlgebraElement, Gen, bracket, element, generator_bracket
from .report import Report
from .scalars import InputError, check_p, common_denominator, format_scalar, is_integer, to_scalar
from .sparse import SparseVector


# ---------------------------------------------------------------------------
# F matrices


@dataclass(frozen=True)
class FMatrix:
    """(p-1) x p matrix; ``rows[s-1][j]`` is f_{s,j} for 1 <= s <= p-1, 0 <= j <= p-1."""

    p: int
    rows: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        check_p(self.p)
        rows = tuple(tuple(to_scalar(x) for x in row) for row in self.rows)
        if len(rows) != self.p - 1 or any(len(r) != self.p for r in rows):
            shape = f"{len(rows)} x {sorted({len(r) for r in rows})}"
            raise InputError(f"F must be {self.p - 1} x {self.p} for p={self.p}, got {shape}")
        object.__setattr__(self, "rows", rows)

    @classmethod
    def zero(cls, p: int) -> FMatrix:
        return cls(p, tuple((0,) * p for _ in range(p - 1)))

    @classmethod
    def from_entries(cls, p: int, entries: dict[tuple[int, int], object]) -> FMatrix:
        """Build from ``{(s, j): value}``; unlisted entries are zero."""
        rows = [[Fraction(0)] * p for _ in range(p - 1)]
        for (s, j), v in entries.items():
            if not (1 <= s <= p - 1 and 0 <= j <= p - 1):
                raise InputError(f"entry ({s}, {j}) outside a {p - 1} x {p} matrix")
            rows[s - 1][j] = to_scalar(v)
        return cls(p, tuple(map(tuple, rows)))

    def f(self, s: int, j: int) -> Fraction:
        """f_{s mod p, j mod p}; s must not be divisible by p."""
        s %= self.p
        if s == 0:
            raise InputError("row index s must not be divisible by p")
        return self.rows[s - 1][j % self.p]

    @cached_property
    def _support(self) -> tuple[int, ...]:
        return tuple(j for j in range(self.p) if any(row[j] for row in self.rows))

    def support(self) -> tuple[int, ...]:
        """o(F): the columns holding a nonzero entry."""
        return self._support

    def is_zero(self) -> bool:
        return not self.support()

    def shift(self, k: int) -> FMatrix:
        """sigma^k: column j moves to column j + k (mod p)."""
        p = self.p
        return FMatrix(p, tuple(tuple(row[(j - k) % p] for j in range(p)) for row in self.rows))

    def with_entry(self, s: int, j: int, value) -> FMatrix:
        rows = [list(r) for r in self.rows]
        rows[s - 1][j] = to_scalar(value)
        return FMatrix(self.p, tuple(map(tuple, rows)))

    def __repr__(self):
        body = "; ".join(" ".join(format_scalar(x) for x in row) for row in self.rows)
        return f"FMatrix(p={self.p}, [{body}])"


@dataclass
class ValidationReport:
    """Per-condition verdicts for (I)-(III) with the first witness of each failure."""

    p: int
    degenerate: bool = False
    failures: dict[str, dict] = field(default_factory=dict)

    @property
    def valid(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict:
        conds = {}
        for name in ("I", "II", "III"):
            conds[name] = {"ok": name not in self.failures, **self.failures.get(name, {})}
        return {"valid": self.valid, "degenerate_zero_F": self.degenerate, "conditions": conds}


def validate_f(F: FMatrix) -> ValidationReport:
    """Check conditions (I)-(III) on F.

    (III) is scanned over r > s only: the (s, r) instance is the same identity.
    F = 0 is accepted as the single-component module V_0(alpha, beta).
    """
    if not isinstance(F, FMatrix):
        raise InputError("validate_f expects an FMatrix")
    p = F.p
    rep = ValidationReport(p)
    support = F.support()
    if not support:
        rep.degenerate = True
        return rep
    if 0 not in support:
        rep.failures["I"] = {"witness": {"column": 0}, "detail": "column 0 of F is zero"}
    active = set(support)
    for i in range(1, p):
        for j in range(p):
            if F.rows[i - 1][j] and (i + j) % p not in active:
                rep.failures["II"] = {
                    "witness": {"i": i, "j": j},
                    "detail": f"f[{i}][{j}] != 0 but column {(i + j) % p} is zero",
                }
                break
        if "II" in rep.failures:
            break
    for r in range(2, p):
        for s in range(1, r):
            for i in range(p):
                lhs = F.f(r, i + s) * F.f(s, i)
                rhs = F.f(s, i + r) * F.f(r, i)
                if lhs != rhs:
                    rep.failures["III"] = {
                        "witness": {"r": r, "s": s, "i": i},
                        "lhs": format_scalar(lhs),
                        "rhs": format_scalar(rhs),
                    }
                    break
            if "III" in rep.failures:
                break
        if "III" in rep.failures:
            break
    return rep


# ---------------------------------------------------------------------------
# module specs and vectors


@dataclass(frozen=True)
class MoisSpec:
    p: int
    alpha: Fraction
    beta: Fraction
    F: FMatrix
    strict: bool = field(default=True, compare=False, repr=False)

    def __post_init__(self):
        check_p(self.p)
        object.__setattr__(self, "alpha", to_scalar(self.alpha))
        object.__setattr__(self, "beta", to_scalar(self.beta))
        F = self.F
        if not isinstance(F, FMatrix):
            F = FMatrix(self.p, F)
            object.__setattr__(self, "F", F)
        if F.p != self.p:
            raise InputError(f"F built for p={F.p} used in a spec with p={self.p}")
        if self.strict:
            rep = validate_f(F)
            if not rep.valid:
                raise InputError(f"F violates condition(s) {sorted(rep.failures)}: {rep.to_dict()['conditions']}")

    @property
    def residues(self) -> tuple[int, ...]:
        """Residues of the basis indices: o(F), or (0,) when F = 0."""
        return self.F.support() or (0,)

    def in_basis(self, w: int) -> bool:
        return w % self.p in self.residues

    def basis_window(self, window: int) -> list[int]:
        return [w for w in range(-window, window + 1) if self.in_basis(w)]


class WeightVector(SparseVector):
    """Vector in a weight module; key w stands for v_w (weight alpha + w)."""

    __slots__ = ()

    def _term_str(self, key):
        return f"v_{key}"


def basis_vector(module, w: int) -> WeightVector:
    if isinstance(module, MoisSpec) and not module.in_basis(w):
        raise InputError(f"v_{w} is not a basis vector: residue {w % module.p} not in {module.residues}")
    if isinstance(module, VirModule) and w % module.p != module.j:
        raise InputError(f"v_{w} is not a basis vector of {module}")
    return WeightVector._raw(module, {w: Fraction(1)})


def coefficient(spec: MoisSpec, k: int, w: int) -> Fraction:
    """Scalar c with L_k v_w = c v_{w+k}."""
    if k % spec.p == 0:
        return spec.alpha + w + k * spec.beta
    return spec.F.f(k, w)


def _as_element(p: int, x) -> AlgebraElement:
    if isinstance(x, Gen):
        return element(p, x)
    if isinstance(x, AlgebraElement):
        if x.p != p:
            raise InputError(f"generator lives in the p={x.p} algebra, module has p={p}")
        return x
    raise InputError(f"cannot act by {x!r}")


def mois_act(spec: MoisSpec, x, v: WeightVector) -> WeightVector:
    """Act by a generator (``Gen``) or any algebra element on ``v``."""
    if v.parent != spec:
        raise InputError("vector does not belong to this module")
    x = _as_element(spec.p, x)
    out: dict[int, Fraction] = {}
    for k, a in x.l_part.items():
        for w, c in v.coords.items():
            val = a * c * coefficient(spec, k, w)
            if val:
                t = w + k
                s = out.get(t, 0) + val
                if s:
                    out[t] = s
                else:
                    del out[t]
    return WeightVector._raw(spec, out)


def check_module_axioms(spec: MoisSpec, window: int = 30) -> Report:
    """Exhaustively verify [x,y] v_w = x(y v_w) - y(x v_w) on the window.

    Every generator sends a basis vector to a multiple of one basis vector, so
    each case is a scalar identity.  The coefficient table is cleared of
    denominators once, after which the sweep is pure integer arithmetic.
    """
    if window < 1:
        raise InputError("window must be >= 1")
    p, N = spec.p, window
    report = Report("module-axioms", details={"p": p, "window": N})
    lo, hi = -2 * N, 2 * N
    ks = range(lo, hi + 1)
    table = {k: {w: coefficient(spec, k, w) for w in ks} for k in ks}
    D = common_denominator(c for row in table.values() for c in row.values())
    T = {k: {w: int(c * D) for w, c in row.items()} for k, row in table.items()}
    basis = spec.basis_window(N)
    gens = range(-N, N + 1)
    for x in gens:
        Tx = T[x]
        for y in gens:
            Ty = T[y]
            z = generator_bracket(p, Gen("L", x), Gen("L", y))
            terms = list(z.l_part.items())
            if any(k != x + y for k, _ in terms):
                raise AssertionError("bracket broke the gradation")
            cd = common_denominator(c for _, c in terms)
            c_int = int(terms[0][1] * cd) if terms else 0
            Txy = T[x + y]
            for w in basis:
                report.checked += 1
                rhs = Ty[w] * Tx[w + y] - Tx[w] * Ty[w + x]
                lhs = c_int * Txy[w] * D
                if lhs != rhs * cd:
                    report.add(
                        x=f"L_{x}", y=f"L_{y}", w=w,
                        lhs=format_scalar(Fraction(lhs, D * D * cd)),
                        rhs=format_scalar(Fraction(rhs, D * D)),
                    )
    # central generators: C_i kills every basis vector and is central
    for i in range(p):
        ci = element(p, Gen("C", i))
        for w in basis:
            report.checked += 1
            if mois_act(spec, ci, basis_vector(spec, w)):
                report.add(x=f"C_{i}", w=w, lhs="0", rhs="nonzero")
        for y in gens:
            report.checked += 1
            if not generator_bracket(p, Gen("C", i), Gen("L", y)).is_zero():
                report.add(x=f"C_{i}", y=f"L_{y}", lhs="nonzero", rhs="0")
    return report


# ---------------------------------------------------------------------------
# linkage


@dataclass(frozen=True)
class LinkageGraph:
    p: int
    nodes: tuple[int, ...]
    edges: tuple[tuple[int, int, int], ...]  # (j, j', s): L_s maps V_(j) into V_(j')

    def successors(self, j: int) -> list[int]:
        return sorted({b for a, b, _ in self.edges if a == j})

    def reachable(self, start: int, reverse: bool = False) -> set[int]:
        seen = {start}
        todo = deque([start])
        while todo:
            a = todo.popleft()
            for x, y, _ in self.edges:
                src, dst = (y, x) if reverse else (x, y)
                if src == a and dst not in seen:
                    seen.add(dst)
                    todo.append(dst)
        return seen

    def components(self) -> list[tuple[int, ...]]:
        """Strongly connected components, each sorted, listed by smallest node."""
        left = set(self.nodes)
        comps = []
        for n in self.nodes:
            if n not in left:
                continue
            comp = self.reachable(n) & self.reachable(n, reverse=True)
            comps.append(tuple(sorted(comp)))
            left -= comp
        return comps

    @property
    def strongly_connected(self) -> bool:
        return len(self.components()) <= 1

    def to_dict(self) -> dict:
        return {
            "p": self.p,
            "nodes": list(self.nodes),
            "edges": [{"from": a, "to": b, "s": s} for a, b, s in self.edges],
            "strongly_connected": self.strongly_connected,
            "components": [list(c) for c in self.components()],
        }


def linkage_graph(F: FMatrix) -> LinkageGraph:
    p = F.p
    nodes = F.support() or (0,)
    edges = tuple(
        (j, (j + s) % p, s)
        for j in range(p)
        for s in range(1, p)
        if F.rows[s - 1][j]
    )
    return LinkageGraph(p, nodes, edges)


# ---------------------------------------------------------------------------
# reducibility


@dataclass(frozen=True)
class Verdict:
    p: int
    reducible: bool
    reason: str
    kind: str | None = None  # "submodule" / "quotient" (F = 0) or "components"
    excluded_index: int | None = None
    invariant_residues: tuple[int, ...] | None = None

    def invariant_subspace(self) -> Callable[[int], bool] | None:
        """Predicate on basis indices w spanning a proper nonzero submodule."""
        if not self.reducible:
            return None
        e, p, res = self.excluded_index, self.p, self.invariant_residues
        if self.kind == "submodule":
            return lambda w: w != e
        if self.kind == "quotient":
            return lambda w: w == e
        return lambda w: w % p in res

    def to_dict(self) -> dict:
        out = {"reducible": self.reducible, "reason": self.reason}
        if self.kind in ("submodule", "quotient"):
            out["subquotient"] = self.kind
            out["excluded_index"] = self.excluded_index
        if self.invariant_residues is not None:
            out["invariant_residues"] = list(self.invariant_residues)
        return out


def classify_reducibility(spec: MoisSpec) -> Verdict:
    """Decide whether V(alpha, beta, F) is reducible.

    F = 0 follows the V_0(alpha, beta) rule: reducible iff alpha in pZ and
    beta in {0, 1}.  For beta = 1 the submodule is spanned by every v_{pk}
    except v_{-alpha}; for beta = 0 the line C v_{-alpha} is a submodule and
    the quotient by it is the nontrivial subquotient.

    For F != 0 the module is irreducible iff its linkage graph is strongly
    connected: L_{s+pk} acts on a component with the same nonzero scalar for
    every k, so a basis vector generates every component it can reach.
    """
    p = spec.p
    if spec.F.is_zero():
        a, b = spec.alpha, spec.beta
        if is_integer(a) and a.numerator % p == 0 and b in (0, 1):
            e = int(-a)
            if b == 1:
                return Verdict(p, True, "single component, alpha in pZ, beta = 1", "submodule", e)
            return Verdict(p, True, "single component, alpha in pZ, beta = 0", "quotient", e)
        return Verdict(p, False, "single component with alpha not in pZ or beta not in {0, 1}")
    g = linkage_graph(spec.F)
    if g.strongly_connected:
        return Verdict(p, False, f"{len(g.nodes)} components, linkage strongly connected")
    for n in g.nodes:
        closed = g.reachable(n)
        if len(closed) < len(g.nodes):
            return Verdict(p, True, "linkage graph is not strongly connected", "components",
                           invariant_residues=tuple(sorted(closed)))
    raise AssertionError("unreachable: a graph that is not strongly connected has a proper closed set")


# ---------------------------------------------------------------------------
# isomorphism


@dataclass(frozen=True)
class IsoWitness:
    """v_w -> d[w mod p] v'_{w-k}, a weight-preserving isomorphism."""

    k: int
    d: tuple[Fraction, ...]

    def to_dict(self) -> dict:
        return {"k": self.k, "d": [format_scalar(x) for x in self.d]}


def iso_constraints_hold(a: MoisSpec, b: MoisSpec, wit: IsoWitness) -> bool:
    """b.F[s][l-k] == a.F[s][l] d[l+s] / d[l] for all s, l, plus the parameter conditions."""
    p = a.p
    if b.p != p or b.beta != a.beta or b.alpha - a.alpha != wit.k:
        return False
    if len(wit.d) != p or not all(wit.d):
        return False
    if a.F.is_zero() != b.F.is_zero():
        return False
    if a.F.is_zero():
        return wit.k % p == 0
    d = wit.d
    for s in range(1, p):
        for l in range(p):
            if b.F.f(s, l - wit.k) != a.F.f(s, l) * d[(l + s) % p] / d[l]:
                return False
    return True


def iso_test(a: MoisSpec, b: MoisSpec) -> IsoWitness | None:
    """Search for an isomorphism V(a) -> V(b).

    Gauge is fixed to 1 at the smallest residue of each (undirected) linkage
    component and propagated breadth-first; any constraint left over is then
    checked, which covers cycle consistency.
    """
    if a.p != b.p:
        raise InputError("iso_test needs specs with the same p")
    p = a.p
    shift = b.alpha - a.alpha
    if not is_integer(shift) or a.beta != b.beta:
        return None
    k = int(shift)
    d: dict[int, Fraction] = {}
    if not a.F.is_zero():
        adj: dict[int, list[tuple[int, int, bool]]] = {}
        for j, j2, s in linkage_graph(a.F).edges:
            adj.setdefault(j, []).append((j2, s, True))
            adj.setdefault(j2, []).append((j, s, False))
        for root in a.F.support():
            if root in d:
                continue
            d[root] = Fraction(1)
            todo = deque([root])
            while todo:
                n = todo.popleft()
                for m, s, forward in sorted(adj.get(n, [])):
                    if m in d:
                        continue
                    # edge l -> l+s: b.F[s][l-k] = a.F[s][l] d[l+s] / d[l]
                    l = n if forward else m
                    fb = b.F.f(s, l - k)
                    if not fb:
                        return None
                    fa = a.F.f(s, l)
                    d[m] = d[n] * fb / fa if forward else d[n] * fa / fb
                    todo.append(m)
    wit = IsoWitness(k, tuple(d.get(j, Fraction(1)) for j in range(p)))
    return wit if iso_constraints_hold(a, b, wit) else None


def invert_witness(wit: IsoWitness) -> IsoWitness:
    p = len(wit.d)
    return IsoWitness(-wit.k, tuple(1 / wit.d[(l + wit.k) % p] for l in range(p)))


def compose_witnesses(first: IsoWitness, second: IsoWitness) -> IsoWitness:
    """Witness for ``second`` after ``first``."""
    p = len(first.d)
    return IsoWitness(first.k + second.k,
                      tuple(first.d[l] * second.d[(l - first.k) % p] for l in range(p)))


def apply_iso(b: MoisSpec, wit: IsoWitness, v: WeightVector) -> WeightVector:
    p = b.p
    return WeightVector._raw(b, {w - wit.k: c * wit.d[w % p] for w, c in v.coords.items()})


# ---------------------------------------------------------------------------
# 𝔤(0)-modules of type A, B, V


@dataclass(frozen=True)
class VirModule:
    """A_j(a), B_j(a) or V_j(alpha, beta) over 𝔤(0) = span{L_m, C_0 : m in pZ}."""

    p: int
    kind: str
    j: int
    params: tuple[Fraction, ...]

    def __post_init__(self):
        check_p(self.p)
        if self.kind not in ("A", "B", "V"):
            raise InputError(f"module kind must be A, B or V, got {self.kind!r}")
        if not 0 <= self.j < self.p:
            raise InputError(f"residue j must lie in 0..{self.p - 1}")
        params = tuple(to_scalar(x) for x in self.params)
        want = 2 if self.kind == "V" else 1
        if len(params) != want:
            raise InputError(f"{self.kind}-type module takes {want} parameter(s)")
        object.__setattr__(self, "params", params)

    def basis_window(self, window: int) -> list[int]:
        return [w for w in range(-window, window + 1) if w % self.p == self.j]

    def __str__(self):
        return f"{self.kind}_{self.j}({', '.join(map(format_scalar, self.params))})"


def gz_component_act(module: VirModule, m: int, w: int) -> WeightVector:
    """L_m v_w for m in pZ and w = j + pk."""
    p, j = module.p, module.j
    if m % p:
        raise InputError(f"L_{m} is not in 𝔤(0): index must be divisible by p={p}")
    if w % p != j:
        raise InputError(f"v_{w} is not a basis vector of {module}")
    pk = w - j
    if module.kind == "A":
        (a,) = module.params
        c = m + pk if pk else m * (m + a)
        target = w + m
    elif module.kind == "B":
        (a,) = module.params
        if m + pk:
            c, target = Fraction(pk), w + m
        else:
            c, target = -m * (m + a), j
    else:
        alpha, beta = module.params
        c, target = alpha + w + m * beta, w + m
    return WeightVector(module, {target: c})


def vir_module_act(module: VirModule, x, v: WeightVector) -> WeightVector:
    """Linear extension of ``gz_component_act``; C_0 acts as zero."""
    x = _as_element(module.p, x)
    out = WeightVector._raw(module, {})
    for m, a in x.l_part.items():
        for w, c in v.coords.items():
            out = out + gz_component_act(module, m, w) * (a * c)
    return out


# ---------------------------------------------------------------------------
# window submodule probe


def submodule_window_check(module, subspace: Callable[[int], bool], window: int) -> bool:
    """True iff every generator with |index| <= window maps each subspace
    basis vector with |w| <= window back into the subspace."""
    if isinstance(module, MoisSpec):
        gens = range(-window, window + 1)
        basis = [w for w in module.basis_window(window) if subspace(w)]
        for w in basis:
            v = basis_vector(module, w)
            for k in gens:
                if not all(subspace(t) for t in mois_act(module, Gen("L", k), v).coords):
                    return False
        return True
    if isinstance(module, VirModule):
        gens = [m for m in range(-window, window + 1) if m % module.p == 0]
        for w in module.basis_window(window):
            if not subspace(w):
                continue
            for m in gens:
                if not all(subspace(t) for t in gz_component_act(module, m, w).coords):
                    return False
        return True
    raise InputError(f"not a module: {module!r}")


def component_unions(spec: MoisSpec) -> Iterable[tuple[int, ...]]:
    """Every proper nonempty union of components, as residue tuples."""
    res = spec.residues
    n = len(res)
    for mask in range(1, (1 << n) - 1):
        yield tuple(r for i, r in enumerate(res) if mask >> i & 1)


def check_vir_module_axioms(module: VirModule, window: int) -> Report:
    """[L_m, L_n] v = L_m L_n v - L_n L_m v on a window, for m, n in pZ."""
    p = module.p
    report = Report("vir-module-axioms", details={"module": str(module), "window": window})
    gens = [m for m in range(-window, window + 1) if m % p == 0]
    for m in gens:
        for n in gens:
            z = bracket(element(p, Gen("L", m)), element(p, Gen("L", n)))
            for w in module.basis_window(window):
                report.checked += 1
                v = basis_vector(module, w)
                lhs = vir_module_act(module, z, v)
                rhs = vir_module_act(module, Gen("L", m), vir_module_act(module, Gen("L", n), v)) - \
                    vir_module_act(module, Gen("L", n), vir_module_act(module, Gen("L", m), v))
                if lhs != rhs:
                    report.add(m=m, n=n, w=w, lhs=repr(lhs), rhs=repr(rhs))
    return report
