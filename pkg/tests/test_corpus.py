import random
from fractions import Fraction
from importlib.resources import files

import pytest

from gapvir.corpus import ALPHA, BETA, complete_row2, fixture, fixtures, run_corpus
from gapvir.mois import FMatrix
from gapvir.serialize import load_json, spec_from_json, spec_to_json


def test_all_fixtures_reproduce():
    ok, results = run_corpus()
    assert ok, [r for r in results if not r["ok"]]


@pytest.mark.parametrize("i", range(1, 6))
def test_data_files_match(i):
    fx = fixtures()[i - 1]
    spec = spec_from_json(load_json(files("gapvir") / "data" / f"ex{i}.json"), strict=False)
    assert spec == fx.spec()
    assert spec_to_json(spec)["alpha"] == str(ALPHA) and spec.beta == BETA


def test_example3_row2():
    assert fixture("example3").F.rows[1] == (13, Fraction(65, 2), Fraction(455, 6), Fraction(1001, 6), Fraction(143, 3))


def test_unknown_fixture():
    with pytest.raises(KeyError):
        fixture("example9")


def test_check_detects_wrong_expectation():
    fx = fixture("example1")
    from dataclasses import replace
    assert not replace(fx, edges=frozenset({(0, 2)})).check()["ok"]
    assert not replace(fx, valid=False).check()["ok"]


@pytest.mark.parametrize("seed", range(10))
def test_completion_is_forced(seed):
    from gapvir.mois import validate_f
    rng = random.Random(seed)
    nz = lambda: Fraction(rng.choice([-1, 1]) * rng.randint(1, 20), rng.randint(1, 7))  # noqa: E731
    f1 = tuple(nz() for _ in range(5))
    row2 = complete_row2(f1, nz())
    F = FMatrix(5, (f1, row2, (0,) * 5, (0,) * 5))
    assert validate_f(F).valid
    for j in range(1, 5):
        bad = F.with_entry(2, j, row2[j] * 2)
        assert "III" in validate_f(bad).failures
