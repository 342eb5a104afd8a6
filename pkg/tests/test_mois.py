import random
from fractions import Fraction

import pytest
from _gen import cocycle_f, random_spec

from gapvir.algebra import C, Gen, L, bracket
from gapvir.corpus import fixture
from gapvir.mois import (
    FMatrix,
    MoisSpec,
    VirModule,
    basis_vector,
    check_module_axioms,
    check_vir_module_axioms,
    gz_component_act,
    mois_act,
    submodule_window_check,
    validate_f,
    vir_module_act,
)
from gapvir.scalars import InputError

F11 = FMatrix(2, (("1", "1"),))


class TestFMatrix:
    def test_shape_checked(self):
        with pytest.raises(InputError):
            FMatrix(3, ((1, 2, 3),))
        with pytest.raises(InputError):
            FMatrix(2, ((1, 2, 3),))

    def test_floats_rejected(self):
        with pytest.raises(InputError):
            FMatrix(2, ((0.5, 1),))

    def test_support_and_index_reduction(self):
        F = FMatrix.from_entries(4, {(2, 0): 3, (2, 2): 7})
        assert F.support() == (0, 2)
        assert F.f(6, -2) == 7
        with pytest.raises(InputError):
            F.f(4, 0)

    def test_shift_has_period_p(self):
        F = fixture("example3").F
        assert F.shift(5) == F
        assert F.shift(2).shift(3) == F
        assert F.shift(1).f(1, 1) == F.f(1, 0)


class TestValidate:
    def test_zero_is_degenerate_valid(self):
        rep = validate_f(FMatrix.zero(3))
        assert rep.valid and rep.degenerate

    def test_condition_I(self):
        rep = validate_f(FMatrix.from_entries(3, {(1, 1): 1}))
        assert "I" in rep.failures

    def test_condition_II(self):
        # f[1][0] hits column 1, which is empty
        rep = validate_f(FMatrix.from_entries(3, {(1, 0): 1}))
        assert set(rep.failures) == {"II"}
        assert rep.failures["II"]["witness"] == {"i": 1, "j": 0}

    def test_condition_III_witness(self):
        rep = validate_f(fixture("example4").F)
        assert set(rep.failures) == {"III"}
        assert rep.failures["III"] == {"witness": {"r": 2, "s": 1, "i": 0}, "lhs": "0", "rhs": "15"}

    def test_report_dict(self):
        d = validate_f(fixture("example1").F).to_dict()
        assert d["valid"] and all(c["ok"] for c in d["conditions"].values())

    @pytest.mark.parametrize("seed", range(20))
    def test_cocycles_are_valid(self, seed):
        rng = random.Random(seed)
        for p in (2, 3, 4, 5, 6, 8):
            assert validate_f(random_spec(p, rng).F).valid

    def test_strict_spec_rejects_invalid(self):
        with pytest.raises(InputError, match="III"):
            MoisSpec(4, 0, 0, fixture("example4").F)
        MoisSpec(4, 0, 0, fixture("example4").F, strict=False)


class TestAction:
    def test_examples(self):
        spec = MoisSpec(2, 0, 1, F11)
        assert mois_act(spec, Gen("L", 2), basis_vector(spec, 3)) == basis_vector(spec, 5) * 5
        assert mois_act(spec, Gen("L", 1), basis_vector(spec, 0)) == basis_vector(spec, 1)
        assert mois_act(spec, Gen("C", 1), basis_vector(spec, 4)).is_zero()

    def test_element_action_is_linear(self):
        spec = fixture("example1").spec()
        v = basis_vector(spec, 2) * 3 + basis_vector(spec, -1)
        x = L(3, 1) * 2 - L(3, 3) + C(3, 0)
        parts = mois_act(spec, Gen("L", 1), v) * 2 - mois_act(spec, Gen("L", 3), v)
        assert mois_act(spec, x, v) == parts

    def test_basis_membership(self):
        spec = MoisSpec(4, 0, 0, FMatrix.from_entries(4, {(2, 0): 3, (2, 2): 7}))
        with pytest.raises(InputError):
            basis_vector(spec, 1)
        assert spec.basis_window(4) == [-4, -2, 0, 2, 4]

    def test_wrong_module_rejected(self):
        a = MoisSpec(2, 0, 1, F11)
        b = MoisSpec(2, 1, 1, F11)
        with pytest.raises(InputError):
            mois_act(a, Gen("L", 1), basis_vector(b, 0))
        with pytest.raises(InputError):
            mois_act(a, L(3, 1), basis_vector(a, 0))

    def test_heisenberg_relation_p2(self):
        c0, c1 = Fraction(3), Fraction(-5, 2)
        spec = MoisSpec(2, Fraction(1, 3), 2, FMatrix(2, ((c0, c1),)))
        v = basis_vector(spec, 0)
        lhs = mois_act(spec, bracket(L(2, 1), L(2, -1)), v)
        rhs = mois_act(spec, Gen("L", 1), mois_act(spec, Gen("L", -1), v)) - \
            mois_act(spec, Gen("L", -1), mois_act(spec, Gen("L", 1), v))
        assert lhs == rhs == basis_vector(spec, 0) * 0


class TestModuleAxioms:
    def test_example1(self):
        rep = check_module_axioms(fixture("example1").spec(), 30)
        assert rep.ok and rep.checked > 3000

    @pytest.mark.parametrize("p", [2, 3, 4, 6])
    def test_random_specs(self, p):
        rng = random.Random(100 + p)
        for _ in range(4):
            spec = random_spec(p, rng)
            assert check_module_axioms(spec, 10).ok, spec

    def test_zero_F(self):
        assert check_module_axioms(MoisSpec(3, 0, 1, FMatrix.zero(3)), 12).ok

    def test_invalid_F_breaks_axioms(self):
        spec = fixture("example4").spec(0, 1)
        rep = check_module_axioms(spec, 6)
        assert not rep.ok
        first = rep.violations[0]
        assert int(first["x"][2:]) % 4 and int(first["y"][2:]) % 4

    def test_perturbed_cocycle_breaks_axioms(self):
        F = cocycle_f(3, 1, {1: Fraction(2), 2: Fraction(3)}, {0: 1, 1: 5, 2: 7})
        bad = F.with_entry(1, 2, F.f(1, 2) + 1)
        assert not validate_f(bad).valid
        assert not check_module_axioms(MoisSpec(3, 0, 0, bad, strict=False), 6).ok

    def test_window_validation(self):
        with pytest.raises(InputError):
            check_module_axioms(fixture("example1").spec(), 0)


class TestVirModules:
    def test_A_example(self):
        a = Fraction(2, 7)
        M = VirModule(2, "A", 0, (a,))
        assert gz_component_act(M, 2, 0) == basis_vector(M, 2) * (2 * (2 + a))

    def test_B_example(self):
        a = Fraction(2, 7)
        M = VirModule(2, "B", 0, (a,))
        assert gz_component_act(M, 2, -2) == basis_vector(M, 0) * (-2 * (2 + a))

    def test_V_example(self):
        al, be = Fraction(1, 3), Fraction(5, 2)
        M = VirModule(2, "V", 0, (al, be))
        assert gz_component_act(M, 2, 0) == basis_vector(M, 2) * (al + 2 * be)

    @pytest.mark.parametrize("kind,params", [("A", (Fraction(3, 2),)), ("B", (Fraction(-1, 3),)),
                                             ("V", (Fraction(1, 2), Fraction(2, 3)))])
    @pytest.mark.parametrize("p,j", [(2, 0), (3, 1), (4, 3)])
    def test_axioms(self, kind, params, p, j):
        assert check_vir_module_axioms(VirModule(p, kind, j, params), 12).ok

    def test_linear_action(self):
        M = VirModule(3, "A", 1, (1,))
        v = basis_vector(M, 1) + basis_vector(M, 4) * 2
        got = vir_module_act(M, L(3, 3) * 2, v)
        assert got == (gz_component_act(M, 3, 1) + gz_component_act(M, 3, 4) * 2) * 2

    def test_bad_inputs(self):
        with pytest.raises(InputError):
            VirModule(2, "Z", 0, (1,))
        with pytest.raises(InputError):
            VirModule(2, "V", 0, (1,))
        with pytest.raises(InputError):
            gz_component_act(VirModule(2, "A", 0, (1,)), 1, 0)
        with pytest.raises(InputError):
            gz_component_act(VirModule(2, "A", 0, (1,)), 2, 1)


class TestSubmoduleWindow:
    def test_A_prime(self):
        M = VirModule(2, "A", 0, (Fraction(3, 5),))
        assert submodule_window_check(M, lambda w: w != 0, 20)
        # the line at 0 is not invariant: L_m v_0 = m(m+a) v_m
        assert not submodule_window_check(M, lambda w: w == 0, 20)

    def test_B_line(self):
        M = VirModule(2, "B", 0, (Fraction(3, 5),))
        assert submodule_window_check(M, lambda w: w == 0, 20)

    def test_V01_mois(self):
        spec = MoisSpec(2, 0, 1, FMatrix.zero(2))
        assert submodule_window_check(spec, lambda w: w != 0, 20)

    def test_example1_component_not_closed(self):
        spec = fixture("example1").spec()
        assert not submodule_window_check(spec, lambda w: w % 3 == 0, 12)

    def test_rejects_non_module(self):
        with pytest.raises(InputError):
            submodule_window_check(object(), lambda w: True, 3)
