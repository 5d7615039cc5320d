"""The C family and its one-parameter lift.

Basis monomials are y^a x^b with a in Z, b >= 0, inside the Ore
extension k[y^(pm 1)][x; sigma, delta] with

    x y = q y x + y^n - y,

i.e. sigma(y) = q y and delta(y) = y^n - y.  C(n) is the case q = 1;
the lift keeps q free (and is isomorphic to A(n-1, q^-1) when q != 1,
which the classification layer knows about).

Hopf structure: y is grouplike, Delta(x) = x ox y^(n-1) + 1 ox x,
eps(x) = 0, S(y) = y^-1, S(x) = -x y^(1-n).

Products are computed by structural recursion on the x-exponent: the
memoized `_move(b, a)` straightens x^b y^a using the sigma-derivation
rule x f(y) = sigma(f) x + delta(f), extended to negative powers via
delta(y^-1) = -q^-1 (y^(n-2) - y^-1).
"""

from __future__ import annotations

from qhopf.elements import Lin, acc, lin_from_pairs
from qhopf.families.base import HopfProvider, PowCache, Presentation
from qhopf.params import CLiftParams, CParams, ScalarSpec
from qhopf.scalars import Cyclo


class FamilyC(HopfProvider):
    def __init__(self, params: CParams | CLiftParams):
        if isinstance(params, CParams):
            q = ScalarSpec.from_rational(1)
            self.family_tag = "C"
        else:
            q = params.q
            self.family_tag = "CLift"
        super().__init__(level=q.min_level())
        self.params = params
        self.n = params.n
        self.q = q.to_cyclo(self.level)
        self.qpow = PowCache(self.q)
        self._delta_cache: dict[int, dict[int, Cyclo]] = {0: {}}
        self._move_cache: dict[tuple[int, int], Lin] = {}
        self._copx_cache: dict[int, Lin] = {}

    # -- Ore data ---------------------------------------------------------

    def _delta(self, c: int) -> dict[int, Cyclo]:
        """delta(y^c) as a Laurent polynomial {exponent: coeff}."""
        hit = self._delta_cache.get(c)
        if hit is not None:
            return hit
        n = self.n
        out: dict[int, Cyclo] = {}
        if c > 0:
            # delta(y^c) = sigma(y) delta(y^(c-1)) + delta(y) y^(c-1)
            for k, v in self._delta(c - 1).items():
                acc(out, k + 1, v * self.q)
            acc(out, n + c - 1, self.one_scalar())
            acc(out, c, -self.one_scalar())
        else:
            # delta(y^c) = sigma(y^-1) delta(y^(c+1)) + delta(y^-1) y^(c+1)
            qinv = self.qpow(-1)
            for k, v in self._delta(c + 1).items():
                acc(out, k - 1, v * qinv)
            acc(out, n - 2 + c + 1, -qinv)
            acc(out, c, qinv)
        self._delta_cache[c] = out
        return out

    def _move(self, b: int, a: int) -> Lin:
        """x^b y^a as a Lin over basis monomials."""
        key = (b, a)
        hit = self._move_cache.get(key)
        if hit is not None:
            return hit
        if b == 0:
            out = Lin.basis((a, 0), self.one_scalar())
        else:
            prev = self._move(b - 1, a)
            terms: dict = {}
            for (c, e), v in prev.terms.items():
                # x (y^c x^e) = q^c y^c x^(e+1) + delta(y^c) x^e
                acc(terms, (c, e + 1), v * self.qpow(c))
                for t, w in self._delta(c).items():
                    acc(terms, (t, e), v * w)
            out = Lin(terms)
        self._move_cache[key] = out
        return out

    # -- structure constants ------------------------------------------------

    def unit_index(self):
        return (0, 0)

    def _multiply_raw(self, i, j):
        (a, b), (c, d) = i, j
        moved = self._move(b, c)
        return moved.map_keys(lambda key: (a + key[0], key[1] + d))

    def _cop_xpow(self, b: int) -> Lin:
        hit = self._copx_cache.get(b)
        if hit is None:
            if b == 0:
                hit = Lin.basis(((0, 0), (0, 0)), self.one_scalar())
            else:
                cop_x = lin_from_pairs(
                    [(((0, 1), (self.n - 1, 0)), 1), (((0, 0), (0, 1)), 1)],
                    self.level,
                )
                hit = self.t2_mul(self._cop_xpow(b - 1), cop_x)
            self._copx_cache[b] = hit
        return hit

    def _coproduct_raw(self, i):
        a, b = i
        return self._cop_xpow(b).map_keys(
            lambda key: ((a + key[0][0], key[0][1]), (a + key[1][0], key[1][1]))
        )

    def counit_basis(self, i):
        return self.scalar(1 if i[1] == 0 else 0)

    def _antipode_raw(self, i):
        # S(y^a x^b) = S(x)^b y^(-a) with S(x) = -x y^(1-n)
        a, b = i
        s_x = self._move(1, 1 - self.n).scale(self.scalar(-1))
        return self.mul(self.el_pow(s_x, b), self.basis_el((-a, 0)))

    # -- enumeration -----------------------------------------------------------

    def basis_box(self, window):
        w = window
        return [(a, b) for a in range(-w, w + 1) for b in range(w + 1)]

    def unit_monomials(self, bound):
        return [(a, 0) for a in range(-bound, bound + 1)]

    def generators(self):
        return [("y", (1, 0)), ("y^-1", (-1, 0)), ("x", (0, 1))]

    def index_factors(self, i):
        a, b = i
        return [("y", a), ("x", b)]

    def presentation(self):
        one = self.one_scalar()
        return Presentation(
            gens=("y", "y^-1", "x"),
            counit={"y": one, "y^-1": one, "x": self.scalar(0)},
            relations=[
                [(one, ("y", "y^-1")), (-one, ())],
                [(one, ("y^-1", "y")), (-one, ())],
                [
                    (one, ("x", "y")),
                    (-self.q, ("y", "x")),
                    (-one, ("y",) * self.n),
                    (one, ("y",)),
                ],
            ],
        )

    # -- rewriting oracle --------------------------------------------------------

    def oracle_letters(self):
        return ("y", "Y", "x")

    def oracle_rules(self):
        one = self.one_scalar()
        qinv = self.qpow(-1)
        n = self.n
        # y^(n-2) needs the inverse letter when n = 1
        low = ("y",) * (n - 2) if n >= 2 else ("Y",) * (2 - n)
        return [
            (("y", "Y"), [(one, ())]),
            (("Y", "y"), [(one, ())]),
            (
                ("x", "y"),
                [(self.q, ("y", "x")), (one, ("y",) * n), (-one, ("y",))],
            ),
            (
                ("x", "Y"),
                [
                    (qinv, ("Y", "x")),
                    (qinv, ("Y",)),
                    (-qinv, low),
                ],
            ),
        ]

    def index_to_word(self, i):
        a, b = i
        ys = ("y",) * a if a >= 0 else ("Y",) * (-a)
        return ys + ("x",) * b

    def word_to_index(self, word):
        return (word.count("y") - word.count("Y"), word.count("x"))
