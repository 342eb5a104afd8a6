"""The tensor module 𝔤''⊗M behind the A-cover of a cuspidal module M.

𝔤'' = span{L_s : s not in pZ}; a TensorVector holds sum c L_s ⊗ v_w keyed by
``(s, w)``.  Generators acting on it are ``Gen("L", k)`` (𝔤' acts by
a(L_s⊗w) = [a, L_s]⊗w + L_s⊗aw), ``Gen("t", n)`` for n in pZ (shifting s by
n) and ``Gen("C", i)``, which acts as zero.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb

from .algebra import Gen, generator_bracket
from .mois import MoisSpec, WeightVector, basis_vector, coefficient, mois_act
from .scalars import InputError
from .sparse import SparseVector


class TensorVector(SparseVector):
    __slots__ = ()

    def __init__(self, spec: MoisSpec, terms=()):
        super().__init__(spec, terms)
        for s, w in self.coords:
            if s % spec.p == 0:
                raise InputError(f"L_{s} is not in 𝔤'': index divisible by p={spec.p}")
            if not spec.in_basis(w):
                raise InputError(f"v_{w} is not a basis vector of the module")

    @property
    def spec(self) -> MoisSpec:
        return self.parent

    def _term_str(self, key):
        s, w = key
        return f"(L_{s}⊗v_{w})"


def tensor_act(spec: MoisSpec, g: Gen, T: TensorVector) -> TensorVector:
    if not isinstance(T, TensorVector) or T.parent != spec:
        raise InputError("tensor does not belong to this module")
    p = spec.p
    out: dict[tuple[int, int], Fraction] = {}

    def put(key, val):
        s = out.get(key, 0) + val
        if s:
            out[key] = s
        else:
            out.pop(key, None)

    if g.kind == "t":
        if g.index % p:
            raise InputError(f"t^{g.index} is not in A: exponent must be divisible by p={p}")
        for (s, w), c in T.coords.items():
            put((s + g.index, w), c)
    elif g.kind == "L":
        k = g.index
        for (s, w), c in T.coords.items():
            # central part of [L_k, L_s] acts as zero on M
            for idx, b in generator_bracket(p, g, Gen("L", s)).l_part.items():
                put((idx, w), c * b)
            a = coefficient(spec, k, w)
            if a:
                put((s, w + k), c * a)
    elif g.kind != "C":
        raise InputError(f"cannot act by {g!r} on 𝔤''⊗M")
    return TensorVector._raw(spec, out)


def pi_map(spec: MoisSpec, T: TensorVector) -> WeightVector:
    """L_s ⊗ w -> L_s w."""
    out = WeightVector._raw(spec, {})
    for (s, w), c in T.coords.items():
        out = out + mois_act(spec, Gen("L", s), basis_vector(spec, w)) * c
    return out


def _shifted_image(spec: MoisSpec, T: TensorVector, n: int) -> WeightVector:
    out = WeightVector._raw(spec, {})
    for (s, w), c in T.coords.items():
        out = out + mois_act(spec, Gen("L", s + n), basis_vector(spec, w)) * c
    return out


def j_membership(spec: MoisSpec, T: TensorVector) -> bool:
    """Is sum_s L_{s+n} w_s = 0 for every n in pZ?

    For these modules the scalar by which L_{s+n} acts on v_w depends only on
    residues, so the sum for shift n is the n = 0 sum moved by n; checking
    n = 0 decides it and n = +-p are kept as guards.
    """
    if not isinstance(spec, MoisSpec):
        raise InputError("J membership is only decidable here for MoisSpec modules")
    return all(_shifted_image(spec, T, n).is_zero() for n in (0, spec.p, -spec.p))


def omega_apply(spec: MoisSpec, m: int, n: int, l: int, v: WeightVector) -> WeightVector:
    """sum_{i=0}^{l} (-1)^i binom(l, i) L_{m-in} L_{in} v."""
    p = spec.p
    if m % p or n % p:
        raise InputError(f"omega needs m, n in pZ (p={p}), got m={m}, n={n}")
    if l < 0:
        raise InputError("l must be >= 0")
    out = WeightVector._raw(spec, {})
    for i in range(l + 1):
        coef = (-1) ** i * comb(l, i)
        inner = mois_act(spec, Gen("L", i * n), v)
        out = out + mois_act(spec, Gen("L", m - i * n), inner) * coef
    return out


def omega_min_l(spec: MoisSpec, m: int, n: int, window: int, l_max: int) -> int | None:
    """Smallest l <= l_max with omega_{m,n} killing every v_w, |w| <= window."""
    basis = [basis_vector(spec, w) for w in spec.basis_window(window)]
    for l in range(l_max + 1):
        if all(omega_apply(spec, m, n, l, v).is_zero() for v in basis):
            return l
    return None
