"""Coactions along the built-in quotients: frozen component values,
gradings, derivations, Taylor expansion, coinvariants."""

import random

import pytest

from qhopf.comodule import Coaction, QuotientError, QuotientSpec, default_quotient
from qhopf.elements import Lin, lin_from_pairs
from qhopf.families import build
from qhopf.linalg import Echelon
from qhopf.params import parse_params
from qhopf.scalars import Cyclo


def coaction_of(spec):
    alg = build(parse_params(spec))
    return alg, Coaction(alg, default_quotient(alg))


@pytest.mark.parametrize("n", [1, 2, 3])
def test_skew_laurent_generator_components(n):
    alg, co = coaction_of({"family": "A", "n": n, "q": 1})
    y = alg.basis_el((1, 0))
    assert co.lam(y) == {n: y}
    assert co.rho(y) == {0: y}
    x = alg.basis_el((0, 1))
    assert co.rho(x) == {1: x}
    assert co.lam(x) == {1: x}


def test_skew_laurent_bigrades():
    alg, co = coaction_of({"family": "A", "n": 2, "q": 1})
    for a, b in alg.basis_box(3):
        el = alg.basis_el((a, b))
        assert co.bigrade(el) == {(2 * a + b, b): el}
        assert co.rho_degree((a, b)) == b
        assert co.lam_degree((a, b)) == 2 * a + b


@pytest.mark.parametrize("n", [-2, -1, 0, 1, 2])
def test_strong_grading_window_sweep(n):
    alg, co = coaction_of({"family": "A", "n": 2, "q": 1})
    assert co.strong_grading(n, 3)


def test_coinvariants_of_the_skew_laurent_instance():
    alg, co = coaction_of({"family": "A", "n": 2, "q": 1})
    right = co.right_coinvariants(3)
    assert len(right) == 4
    ech = Echelon()
    for v in right:
        ech.insert(v)
    for a in range(4):
        assert ech.contains(Lin.basis((a, 0), alg.one_scalar()))

    left = co.left_coinvariants(3)
    assert len(left) == 2
    ech = Echelon()
    for v in left:
        ech.insert(v)
    assert ech.contains(alg.one_el())
    assert ech.contains(Lin.basis((1, -2), alg.one_scalar()))


def test_ore_family_rho_components():
    alg, co = coaction_of({"family": "C", "n": 2})
    x = alg.basis_el((0, 1))
    assert co.rho(x) == {0: x, 1: alg.one_el()}
    xx = alg.basis_el((0, 2))
    assert co.rho(xx) == {
        0: xx,
        1: lin_from_pairs([((0, 1), 2)]),
        2: alg.one_el(),
    }
    assert co.delta_r(x) == alg.one_el()


def test_enveloping_derivation_values():
    alg, co = coaction_of({"family": "EnvNonabelian"})
    x = alg.basis_el((0, 1))
    yx = alg.basis_el((1, 1))
    assert co.delta_r(x) == alg.one_el()
    assert co.delta_r(yx) == alg.basis_el((1, 0))
    assert co.delta_l(x) == alg.one_el()


@pytest.mark.parametrize("spec", [{"family": "C", "n": 2}, {"family": "C", "n": 3}])
def test_derivations_commute_and_taylor(spec):
    alg, co = coaction_of(spec)
    for idx in alg.basis_box(2):
        el = alg.basis_el(idx)
        assert co.delta_r(co.delta_l(el)) == co.delta_l(co.delta_r(el))
        assert co.taylor_matches(el)


def test_derivation_is_locally_nilpotent():
    alg, co = coaction_of({"family": "C", "n": 3})
    for a, b in alg.basis_box(2):
        el = alg.basis_el((a, b))
        for _ in range(b + 1):
            el = co.delta_r(el)
        assert el.is_zero()


RANDOM_SPECS = [
    {"family": "GroupZSemiZ"},
    {"family": "EnvNonabelian"},
    {"family": "A", "n": 2, "q": {"order": 3, "power": 1}},
    {"family": "B", "n": 1, "p": [1, 2, 3], "q": {"order": 6, "power": 1}},
    {"family": "C", "n": 3},
]


@pytest.mark.parametrize("spec", RANDOM_SPECS, ids=lambda s: s["family"])
def test_coactions_commute_on_random_elements(spec):
    alg, co = coaction_of(spec)
    box = alg.basis_box(3)
    rng = random.Random(5)
    for _ in range(20):
        el = Lin()
        for _ in range(3):
            el = el + Lin.basis(rng.choice(box), alg.scalar(rng.randint(-4, 4)))
        assert co.coactions_compatible(el)
        assert co.counit_recovers(el)


def test_laurent_box_decomposes():
    alg, co = coaction_of({"family": "B", "n": 1, "p": [1, 2, 3],
                           "q": {"order": 6, "power": 1}})
    for idx in alg.basis_box(2):
        assert co.decomposes(alg.basis_el(idx))


def test_lift_with_nontrivial_twist_has_no_default_quotient():
    alg = build(parse_params({"family": "CLift", "n": 3, "q": {"order": 4, "power": 1}}))
    with pytest.raises(QuotientError):
        default_quotient(alg)


def test_trivial_twist_lift_reuses_the_ore_quotient():
    alg, co = coaction_of({"family": "CLift", "n": 2, "q": 1})
    assert co.spec.kind == "poly"
    assert co.delta_r(alg.basis_el((0, 1))) == alg.one_el()


def test_coaction_rejects_non_algebra_maps():
    alg = build(parse_params({"family": "EnvNonabelian"}))
    one = Cyclo.one(alg.level)
    bad = QuotientSpec("poly", {"y": (one, 1), "x": (one, 1)})
    with pytest.raises(QuotientError):
        Coaction(alg, bad)


def test_quotient_spec_rejects_unknown_kind():
    with pytest.raises(QuotientError):
        QuotientSpec("group", {})
