"""The A family: k<x^(pm 1), y> with x y = q y x.

x is grouplike, y is skew primitive with Delta(y) = y ox 1 + x^n ox y.
Basis monomials are y^a x^b (a >= 0, b in Z) and multiply by

    (y^a x^b)(y^c x^d) = q^(b c) y^(a+c) x^(b+d).

Coproducts of powers of y run through the skew binomial theorem with
ratio q^n, since (x^n ox y)(y ox 1) = q^n (y ox 1)(x^n ox y).
"""

from __future__ import annotations

from qhopf.elements import Lin, lin_from_pairs
from qhopf.families.base import HopfProvider, PowCache, Presentation
from qhopf.params import AParams
from qhopf.qcombinat import skew_binomial_coeffs


class FamilyA(HopfProvider):
    family_tag = "A"

    def __init__(self, params: AParams):
        super().__init__(level=params.q.min_level())
        self.params = params
        self.n = params.n
        self.q = params.q.to_cyclo(self.level)
        self.qpow = PowCache(self.q)
        self._skew_cache: dict[int, list] = {}

    def _skew(self, a: int) -> list:
        hit = self._skew_cache.get(a)
        if hit is None:
            hit = skew_binomial_coeffs(a, self.qpow(self.n))
            self._skew_cache[a] = hit
        return hit

    def unit_index(self):
        return (0, 0)

    def _multiply_raw(self, i, j):
        (a, b), (c, d) = i, j
        return Lin.basis((a + c, b + d), self.qpow(b * c))

    def _coproduct_raw(self, i):
        a, b = i
        coeffs = self._skew(a)
        pairs = [
            (((a - r, self.n * r + b), (r, b)), coeffs[r]) for r in range(a + 1)
        ]
        return lin_from_pairs(pairs, self.level)

    def counit_basis(self, i):
        return self.scalar(1 if i[0] == 0 else 0)

    def _antipode_raw(self, i):
        # S(y^a x^b) = x^(-b) (-x^(-n) y)^a
        a, b = i
        s_y = self.mul(self.basis_el((0, -self.n)), self.basis_el((1, 0))).scale(
            self.scalar(-1)
        )
        out = self.el_pow(s_y, a)
        return self.mul(self.basis_el((0, -b)), out)

    def basis_box(self, window):
        w = window
        return [(a, b) for a in range(w + 1) for b in range(-w, w + 1)]

    def unit_monomials(self, bound):
        return [(0, b) for b in range(-bound, bound + 1)]

    def generators(self):
        return [("y", (1, 0)), ("x", (0, 1)), ("x^-1", (0, -1))]

    def index_factors(self, i):
        a, b = i
        return [("y", a), ("x", b)]

    def presentation(self):
        one = self.one_scalar()
        return Presentation(
            gens=("x", "x^-1", "y"),
            counit={"x": one, "x^-1": one, "y": self.scalar(0)},
            relations=[
                [(one, ("x", "x^-1")), (-one, ())],
                [(one, ("x^-1", "x")), (-one, ())],
                [(one, ("x", "y")), (-self.q, ("y", "x"))],
            ],
        )

    def oracle_letters(self):
        return ("y", "x", "X")

    def oracle_rules(self):
        one = self.one_scalar()
        return [
            (("x", "X"), [(one, ())]),
            (("X", "x"), [(one, ())]),
            (("x", "y"), [(self.q, ("y", "x"))]),
            (("X", "y"), [(self.qpow(-1), ("y", "X"))]),
        ]

    def index_to_word(self, i):
        a, b = i
        xs = ("x",) * b if b >= 0 else ("X",) * (-b)
        return ("y",) * a + xs

    def word_to_index(self, word):
        return (word.count("y"), word.count("x") - word.count("X"))
