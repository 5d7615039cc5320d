"""Axiom verification: green on the real families, red on corrupted
structure maps, plus grouplike and skew-primitive searches."""

import pytest

from conftest import grid_specs, spec_label
from qhopf.elements import Lin, lin_from_pairs
from qhopf.families import build
from qhopf.families.family_a import FamilyA
from qhopf.invariants import is_cocommutative
from qhopf.linalg import Echelon
from qhopf.params import parse_params
from qhopf.verify import find_grouplikes, find_skew_primitives, verify_axioms

WINDOW4_SPECS = [
    {"family": "GroupZ2"},
    {"family": "GroupZSemiZ"},
    {"family": "EnvAbelian"},
    {"family": "EnvNonabelian"},
    {"family": "A", "n": 2, "q": {"order": 3, "power": 1}},
    {"family": "A", "n": 1, "q": 2},
    {"family": "A", "n": 0, "q": -1},
    {"family": "C", "n": 2},
    {"family": "C", "n": 4},
    {"family": "CLift", "n": 3, "q": {"order": 4, "power": 1}},
    {"family": "CLift", "n": 2, "q": 1},
]


@pytest.mark.parametrize("spec", WINDOW4_SPECS, ids=spec_label)
def test_axioms_window_4(spec):
    alg = build(parse_params(spec))
    report = verify_axioms(alg, window=4)
    assert report.passed, report.to_json()
    assert report.checked["bialgebra"] == len(alg.basis_box(4)) ** 2


def test_axioms_window_3_carried_basis():
    alg = build(
        parse_params(
            {"family": "B", "n": 1, "p": [1, 2, 3], "q": {"order": 6, "power": 1}}
        )
    )
    report = verify_axioms(alg, window=3)
    assert report.passed, report.to_json()


def test_parallel_scan_matches_serial():
    params = parse_params(
        {"family": "B", "n": 1, "p": [1, 2, 3], "q": {"order": 6, "power": 1}}
    )
    alg = build(params)
    serial = verify_axioms(alg, window=2)
    parallel = verify_axioms(alg, window=2, jobs=3, params=params)
    assert serial.to_json() == parallel.to_json()


class _BrokenCoproduct(FamilyA):
    """Drops nothing but injects a stray tensor term on the generator y."""

    def _coproduct_raw(self, i):
        t = super()._coproduct_raw(i)
        if i == (1, 0):
            return t + Lin.basis(((0, 1), (0, 0)), self.one_scalar())
        return t


class _BrokenProduct(FamilyA):
    """Forgets the commutation scalar, so Delta is no longer an algebra map."""

    def _multiply_raw(self, i, j):
        (a, b), (c, d) = i, j
        return Lin.basis((a + c, b + d), self.one_scalar())


def test_corrupted_coproduct_is_caught():
    params = parse_params({"family": "A", "n": 2, "q": {"order": 3, "power": 1}})
    report = verify_axioms(_BrokenCoproduct(params), window=2)
    assert not report.passed
    axioms_hit = {f.axiom for f in report.failures}
    assert "coassociativity" in axioms_hit or "counit" in axioms_hit


def test_corrupted_product_is_caught():
    params = parse_params({"family": "A", "n": 2, "q": {"order": 3, "power": 1}})
    report = verify_axioms(_BrokenProduct(params), window=2)
    assert not report.passed
    assert any(f.axiom == "bialgebra" for f in report.failures)


def test_max_failures_caps_the_list():
    params = parse_params({"family": "A", "n": 2, "q": {"order": 3, "power": 1}})
    report = verify_axioms(_BrokenProduct(params), window=2, max_failures=3)
    assert len(report.failures) == 3
    assert not report.passed


GROUPLIKE_COUNTS = [
    ({"family": "GroupZ2"}, 25),
    ({"family": "GroupZSemiZ"}, 25),
    ({"family": "EnvAbelian"}, 1),
    ({"family": "EnvNonabelian"}, 1),
    ({"family": "A", "n": 2, "q": {"order": 3, "power": 1}}, 5),
    ({"family": "B", "n": 1, "p": [1, 2, 3], "q": {"order": 6, "power": 1}}, 5),
    ({"family": "C", "n": 3}, 5),
    ({"family": "CLift", "n": 3, "q": {"order": 4, "power": 1}}, 5),
]


@pytest.mark.parametrize("spec,count", GROUPLIKE_COUNTS, ids=lambda v: str(v))
def test_grouplike_counts_at_bound_2(spec, count):
    alg = build(parse_params(spec))
    assert len(find_grouplikes(alg, 2)) == count


@pytest.mark.parametrize(
    "spec", [s for s, _ in GROUPLIKE_COUNTS], ids=lambda s: s["family"]
)
def test_grouplikes_form_a_group(spec):
    alg = build(parse_params(spec))
    small = find_grouplikes(alg, 2)
    large = set(find_grouplikes(alg, 4))
    assert alg.unit_index() in small
    for g in small:
        for h in small:
            prod = alg.multiply_basis(g, h)
            assert len(prod) == 1
            ((idx, c),) = prod.terms.items()
            assert c.is_one() and idx in large
        s_g = alg.antipode_basis(g)
        assert len(s_g) == 1
        ((inv_idx, c),) = s_g.terms.items()
        assert c.is_one() and inv_idx in large
        assert alg.multiply_basis(g, inv_idx) == alg.one_el()


def test_cocommutative_exactly_for_the_known_instances():
    expected_cocommutative = {
        "GroupZ2",
        "GroupZSemiZ",
        "EnvAbelian",
        "EnvNonabelian",
    }
    for spec in grid_specs():
        alg = build(parse_params(spec))
        want = spec["family"] in expected_cocommutative or (
            spec["family"] == "A" and spec["n"] == 0
        )
        assert is_cocommutative(alg, 2) == want, spec


def test_skew_primitive_space_of_the_skew_laurent_family():
    # Delta(y) = y ox 1 + x^2 ox y, so the (x^2, 1) space is
    # span{y, x^2 - 1} inside any window
    alg = build(parse_params({"family": "A", "n": 2, "q": {"order": 3, "power": 1}}))
    basis = find_skew_primitives(alg, (0, 2), (0, 0), window=2)
    assert len(basis) == 2
    ech = Echelon()
    for v in basis:
        ech.insert(v)
    assert ech.contains(lin_from_pairs([((1, 0), 1)], level=3))
    assert ech.contains(lin_from_pairs([((0, 2), 1), ((0, 0), -1)], level=3))


def test_skew_primitives_reject_non_grouplike_corners():
    alg = build(parse_params({"family": "A", "n": 2, "q": {"order": 3, "power": 1}}))
    with pytest.raises(ValueError):
        find_skew_primitives(alg, (1, 0), (0, 0), window=2)
