from __future__ import annotations

from fractions import Fraction
from typing import Hashable, Iterable, Mapping

from .scalars import InputError, format_scalar, to_scalar


class SparseVector:
    """Finitely supported vector over Q with a fixed parent object.

    Subclasses only pin down what a key means (a weight index, a PBW
    monomial, a pair ``(s, w)``).  Instances are treated as immutable.
    """

    __slots__ = ("parent", "coords")

    def __init__(self, parent, coords: Mapping[Hashable, object] | Iterable = ()):
        self.parent = parent
        items = coords.items() if isinstance(coords, Mapping) else coords
        clean: dict = {}
        for key, c in items:
            c = to_scalar(c)
            if c:
                clean[key] = clean.get(key, 0) + c
                if not clean[key]:
                    del clean[key]
        self.coords = clean

    @classmethod
    def _raw(cls, parent, coords: dict):
        # coords already normalised: Fraction values, no zeros
        v = cls.__new__(cls)
        v.parent = parent
        v.coords = coords
        return v

    def _check(self, other) -> None:
        if type(other) is not type(self) or other.parent != self.parent:
            raise InputError(f"cannot combine vectors of {self.parent!r} and {getattr(other, 'parent', None)!r}")

    def __add__(self, other):
        self._check(other)
        out = dict(self.coords)
        for k, c in other.coords.items():
            s = out.get(k, 0) + c
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return self._raw(self.parent, out)

    def __neg__(self):
        return self._raw(self.parent, {k: -c for k, c in self.coords.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, scalar):
        scalar = to_scalar(scalar)
        if not scalar:
            return self._raw(self.parent, {})
        return self._raw(self.parent, {k: c * scalar for k, c in self.coords.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return self.parent == other.parent and self.coords == other.coords

    def __hash__(self):
        return hash((type(self).__name__, self.parent, frozenset(self.coords.items())))

    def __bool__(self):
        return bool(self.coords)

    def is_zero(self) -> bool:
        return not self.coords

    def __getitem__(self, key) -> Fraction:
        return self.coords.get(key, Fraction(0))

    def support(self) -> list:
        return sorted(self.coords)

    def _term_str(self, key) -> str:
        return str(key)

    def __repr__(self):
        if not self.coords:
            return f"{type(self).__name__}(0)"
        terms = " + ".join(f"{format_scalar(self.coords[k])}*{self._term_str(k)}" for k in self.support())
        return f"{type(self).__name__}({terms})"
