from fractions import Fraction

import pytest
from sympy.functions.combinatorial.numbers import partition

from gapvir.algebra import AlgebraElement, Gen, L
from gapvir.scalars import InputError
from gapvir.verma import (
    HighestWeight,
    VermaVector,
    check_verma_module_axioms,
    graded_dimension,
    monomial_vector,
    pbw_basis,
    singular_vectors,
    vacuum,
    verma_act,
    verma_verdict,
)

h, c0, c1 = Fraction(7, 3), Fraction(5, 2), Fraction(-4)
LAM2 = HighestWeight(2, h, (c0, c1))


def test_pbw_basis():
    assert pbw_basis(0) == [()]
    assert pbw_basis(4) == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    with pytest.raises(InputError):
        pbw_basis(-1)


def test_graded_dimension_matches_partition_function():
    assert [graded_dimension(n) for n in range(13)] == [int(partition(n)) for n in range(13)]


def test_bracket_actions_p2():
    v = vacuum(LAM2)
    assert verma_act(LAM2, Gen("L", 1), monomial_vector(LAM2, (1,))) == v * c1
    assert verma_act(LAM2, Gen("L", 2), monomial_vector(LAM2, (2,))) == v * (-4 * h)
    assert verma_act(LAM2, Gen("L", 4), monomial_vector(LAM2, (4,))) == v * (-8 * h + c0 / 2)
    assert verma_act(LAM2, Gen("L", 0), monomial_vector(LAM2, (1,))) == monomial_vector(LAM2, (1,)) * (h - 1)


def test_negative_generators_build_pbw_order():
    v = verma_act(LAM2, Gen("L", -1), monomial_vector(LAM2, (3,)))
    # L_-1 L_-3 = L_-3 L_-1 + [L_-1, L_-3] and [L_-1, L_-3] = 0 for p = 2
    assert v == monomial_vector(LAM2, (3, 1))
    w = verma_act(LAM2, Gen("L", -2), monomial_vector(LAM2, (4,)))
    assert w == monomial_vector(LAM2, (4, 2)) - monomial_vector(LAM2, (6,)) * 2


def test_central_elements_act_by_weight():
    lam = HighestWeight(3, 1, (2, 3, 5))
    v = monomial_vector(lam, (2, 1))
    x = AlgebraElement(3, {}, [1, 0, 1])
    assert verma_act(lam, x, v) == v * 7


def test_act_rejects_foreign_vectors():
    other = HighestWeight(2, 0, (1, 1))
    with pytest.raises(InputError):
        verma_act(LAM2, Gen("L", 1), vacuum(other))
    with pytest.raises(InputError):
        verma_act(LAM2, L(3, 1), vacuum(LAM2))
    with pytest.raises(InputError):
        monomial_vector(LAM2, (1, 2))


def test_weight_validation():
    with pytest.raises(InputError):
        HighestWeight(3, 0, (1, 2))
    with pytest.raises(InputError):
        HighestWeight(3, 0.5, (1, 2, 3))


@pytest.mark.parametrize("p", [2, 3])
def test_module_axioms(p):
    lam = HighestWeight(p, Fraction(3, 7), tuple(Fraction(i + 2, 3) for i in range(p)))
    rep = check_verma_module_axioms(lam, 4, 4)
    assert rep.ok, rep.violations[:2]


def test_module_axioms_degenerate_weight():
    assert check_verma_module_axioms(HighestWeight(3, 0, (0, 0, 0)), 3, 4).ok


class TestVerdict:
    def test_generic_irreducible(self):
        v = verma_verdict(HighestWeight(3, 7, (5, 1, 2)))
        assert v.I_set == () and v.irreducible

    def test_c1_zero_reducible(self):
        v = verma_verdict(HighestWeight(3, 7, (5, 0, 2)))
        assert v.I_set == (1,) and not v.irreducible

    def test_zero_weight(self):
        v = verma_verdict(HighestWeight(3, 0, (0, 0, 0)))
        assert v.zero_weight and not v.irreducible

    def test_c2_zero_alone_keeps_module_irreducible(self):
        # [L_2, L_-2] = 2 C_1 for p = 3, so lambda(C_2) never enters
        lam = HighestWeight(3, 7, (5, 1, 0))
        v = verma_verdict(lam)
        assert v.I_set == (2,) and v.effective_I_set == () and v.irreducible
        assert all(not singular_vectors(lam, d) for d in range(1, 5))

    def test_to_dict(self):
        assert verma_verdict(HighestWeight(3, 7, (5, 0, 2))).to_dict() == {
            "I": [1], "effective_I": [1, 2], "zero_weight": False, "irreducible": False}


class TestSingular:
    def test_generic_weight_has_none(self):
        lam = HighestWeight(3, 7, (5, 1, 2))
        assert all(singular_vectors(lam, d) == [] for d in range(1, 7))

    def test_c1_zero_depth1(self):
        lam = HighestWeight(3, Fraction(2, 9), (Fraction(-3, 4), 0, Fraction(11, 5)))
        assert singular_vectors(lam, 1) == [monomial_vector(lam, (1,))]

    def test_zero_weight(self):
        lam = HighestWeight(3, 0, (0, 0, 0))
        assert singular_vectors(lam, 1) == [monomial_vector(lam, (1,))]
        assert [len(singular_vectors(lam, d)) for d in range(1, 5)] == [1, 2, 2, 3]

    def test_vectors_are_killed(self):
        lam = HighestWeight(2, 0, (Fraction(1, 3), 0))
        for d in range(1, 5):
            for v in singular_vectors(lam, d):
                assert all(verma_act(lam, Gen("L", k), v).is_zero() for k in range(1, d + 1))

    def test_depth_must_be_positive(self):
        with pytest.raises(InputError):
            singular_vectors(LAM2, 0)

    def test_records(self):
        v = monomial_vector(LAM2, (2,)) * 3 + monomial_vector(LAM2, (1, 1))
        assert v.records() == [{"monomial": [2], "coeff": "3"}, {"monomial": [1, 1], "coeff": "1"}]
        assert isinstance(v, VermaVector)
