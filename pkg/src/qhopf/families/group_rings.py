"""Group algebras of the two infinite groups of rank two.

GroupZ2 is the Laurent polynomial ring on two commuting grouplikes.
GroupZSemiZ is the group algebra of <x, y | x y x^-1 = y^-1>; its
monomials y^a x^b multiply by (y^a x^b)(y^c x^d) = y^(a + (-1)^b c)
x^(b+d), and every monomial is grouplike.

Indices are pairs (a, b) for y^a x^b with a, b in Z.
"""

from __future__ import annotations

from qhopf.elements import Lin
from qhopf.families.base import HopfProvider, Presentation
from qhopf.params import GroupZ2Params, GroupZSemiZParams


class _GroupRing(HopfProvider):
    """Shared shape: all basis monomials are grouplike units."""

    def __init__(self, params):
        super().__init__(level=1)
        self.params = params

    def unit_index(self):
        return (0, 0)

    def _coproduct_raw(self, i):
        return Lin.basis((i, i), self.one_scalar())

    def counit_basis(self, i):
        return self.one_scalar()

    def basis_box(self, window):
        w = window
        return [(a, b) for a in range(-w, w + 1) for b in range(-w, w + 1)]

    def unit_monomials(self, bound):
        return self.basis_box(bound)

    def generators(self):
        return [
            ("y", (1, 0)),
            ("y^-1", (-1, 0)),
            ("x", (0, 1)),
            ("x^-1", (0, -1)),
        ]

    def index_factors(self, i):
        a, b = i
        return [("y", a), ("x", b)]

    def _unit_relations(self):
        one = self.one_scalar()
        rels = []
        for g, gi in (("x", "x^-1"), ("y", "y^-1")):
            rels.append([(one, (g, gi)), (-one, ())])
            rels.append([(one, (gi, g)), (-one, ())])
        return rels

    def oracle_letters(self):
        return ("y", "Y", "x", "X")

    def index_to_word(self, i):
        a, b = i
        ys = ("y",) * a if a >= 0 else ("Y",) * (-a)
        xs = ("x",) * b if b >= 0 else ("X",) * (-b)
        return ys + xs

    def word_to_index(self, word):
        a = word.count("y") - word.count("Y")
        b = word.count("x") - word.count("X")
        return (a, b)


class GroupZ2(_GroupRing):
    family_tag = "GroupZ2"

    def __init__(self, params: GroupZ2Params):
        super().__init__(params)

    def _multiply_raw(self, i, j):
        (a, b), (c, d) = i, j
        return Lin.basis((a + c, b + d), self.one_scalar())

    def _antipode_raw(self, i):
        a, b = i
        return Lin.basis((-a, -b), self.one_scalar())

    def presentation(self):
        one = self.one_scalar()
        rels = self._unit_relations()
        rels.append([(one, ("x", "y")), (-one, ("y", "x"))])
        return Presentation(
            gens=("x", "x^-1", "y", "y^-1"),
            counit={g: one for g in ("x", "x^-1", "y", "y^-1")},
            relations=rels,
        )

    def oracle_rules(self):
        one = self.one_scalar()
        eps = [(one, ())]
        rules = [
            (("y", "Y"), eps),
            (("Y", "y"), eps),
            (("x", "X"), eps),
            (("X", "x"), eps),
        ]
        for xl in ("x", "X"):
            for yl in ("y", "Y"):
                rules.append(((xl, yl), [(one, (yl, xl))]))
        return rules


class GroupZSemiZ(_GroupRing):
    family_tag = "GroupZSemiZ"

    def __init__(self, params: GroupZSemiZParams):
        super().__init__(params)

    def _multiply_raw(self, i, j):
        (a, b), (c, d) = i, j
        c = c if b % 2 == 0 else -c
        return Lin.basis((a + c, b + d), self.one_scalar())

    def _antipode_raw(self, i):
        # (y^a x^b)^-1 = x^-b y^-a = y^((-1)^(b+1) a) x^-b
        a, b = i
        a = a if b % 2 == 1 else -a
        return Lin.basis((a, -b), self.one_scalar())

    def presentation(self):
        one = self.one_scalar()
        rels = self._unit_relations()
        rels.append([(one, ("x", "y")), (-one, ("y^-1", "x"))])
        return Presentation(
            gens=("x", "x^-1", "y", "y^-1"),
            counit={g: one for g in ("x", "x^-1", "y", "y^-1")},
            relations=rels,
        )

    def oracle_rules(self):
        one = self.one_scalar()
        eps = [(one, ())]
        flip = {"y": "Y", "Y": "y"}
        rules = [
            (("y", "Y"), eps),
            (("Y", "y"), eps),
            (("x", "X"), eps),
            (("X", "x"), eps),
        ]
        for xl in ("x", "X"):
            for yl in ("y", "Y"):
                rules.append(((xl, yl), [(one, (flip[yl], xl))]))
        return rules
