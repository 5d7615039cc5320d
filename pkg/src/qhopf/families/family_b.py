"""The B family: coupled power subalgebras of a skew Laurent extension.

Inside k[y][x^(pm 1); sigma] with sigma(y) = q y, take the subalgebra
generated by x^(pm 1) and the powers y_i = y^(m_i), where m = p_1...p_s
and m_i = m / p_i.  The defining relations are

    x y_i = q^(m_i) y_i x,    y_i y_j = y_j y_i,    y_i^(p_i) = y_j^(p_j),

x is grouplike and each y_i is skew primitive with
Delta(y_i) = y_i ox 1 + x^(m_i n) ox y_i.

Basis monomials are y^d x^b, keyed by the canonical exponent tuple
d = (d_1, ..., d_s) with d_i < p_i for i >= 2 (d_1 unbounded).  The
total y-degree mu(d) = sum m_i d_i is injective on canonical tuples;
a raw tuple renormalizes by the carry d_i -= p_i, d_1 += p_1, which
preserves mu because m_i p_i = m = m_1 p_1.

The coproduct of a monomial is assembled by tensor multiplication of
the closed forms for Delta(y_i)^(d_i); each of those is a skew
binomial expansion with ratio q^(m_i^2 n), because

    (x^(m_i n) ox y_i)(y_i ox 1) = q^(m_i^2 n) (y_i ox 1)(x^(m_i n) ox y_i).
"""

from __future__ import annotations

from qhopf.elements import Lin, lin_from_pairs
from qhopf.families.base import HopfProvider, PowCache, Presentation
from qhopf.params import BParams
from qhopf.qcombinat import skew_binomial_coeffs


class FamilyB(HopfProvider):
    family_tag = "B"

    def __init__(self, params: BParams):
        ell = params.root_target()
        super().__init__(level=ell)
        self.params = params
        self.n = params.n
        self.ell = ell
        self.s = len(params.p) - 1
        self.pp = params.p[1:]  # (p_1, ..., p_s)
        m = 1
        for x in self.pp:
            m *= x
        self.m = m
        self.mm = tuple(m // x for x in self.pp)  # (m_1, ..., m_s)
        self.q = params.q.to_cyclo(ell)
        self.qpow = PowCache(self.q)
        # skew ratio for Delta(y_i) powers
        self._ratios = tuple(self.qpow(self.mm[i] ** 2 * self.n) for i in range(self.s))
        self._skew_cache: dict[tuple[int, int], list] = {}
        self._ypow_cop_cache: dict[tuple[int, int], Lin] = {}

    # -- index bookkeeping ----------------------------------------------

    def canon(self, d) -> tuple[int, ...]:
        d = list(d)
        for i in range(1, self.s):
            cap = self.pp[i]
            if d[i] >= cap:
                k, d[i] = divmod(d[i], cap)
                d[0] += k * self.pp[0]
        return tuple(d)

    def mu(self, d) -> int:
        return sum(m * e for m, e in zip(self.mm, d))

    def _yi_index(self, i: int, k: int):
        d = [0] * self.s
        d[i] = k
        return (self.canon(d), 0)

    def _x_index(self, e: int):
        return ((0,) * self.s, e)

    def unit_index(self):
        return ((0,) * self.s, 0)

    # -- structure constants ---------------------------------------------

    def _multiply_raw(self, i, j):
        (d1, b1), (d2, b2) = i, j
        coeff = self.qpow(b1 * self.mu(d2))
        dsum = self.canon(x + y for x, y in zip(d1, d2))
        return Lin.basis((dsum, b1 + b2), coeff)

    def _skew(self, i: int, k: int) -> list:
        key = (i, k)
        hit = self._skew_cache.get(key)
        if hit is None:
            hit = skew_binomial_coeffs(k, self._ratios[i])
            self._skew_cache[key] = hit
        return hit

    def _cop_ypow(self, i: int, k: int) -> Lin:
        """Delta(y_i)^k = sum_r (k choose r)_(ratio_i) y_i^(k-r) x^(m_i n r) ox y_i^r."""
        key = (i, k)
        hit = self._ypow_cop_cache.get(key)
        if hit is None:
            coeffs = self._skew(i, k)
            step = self.mm[i] * self.n
            pairs = []
            for r in range(k + 1):
                left = self.multiply_basis(
                    self._yi_index(i, k - r), self._x_index(step * r)
                )
                ((li, lc),) = list(left.terms.items())
                pairs.append(((li, self._yi_index(i, r)), coeffs[r] * lc))
            hit = lin_from_pairs(pairs, self.level)
            self._ypow_cop_cache[key] = hit
        return hit

    def _coproduct_raw(self, i):
        d, b = i
        out = Lin.basis((self._x_index(b), self._x_index(b)), self.one_scalar())
        for pos in range(self.s - 1, -1, -1):
            if d[pos]:
                out = self.t2_mul(self._cop_ypow(pos, d[pos]), out)
        return out

    def counit_basis(self, i):
        d, b = i
        return self.scalar(1 if not any(d) else 0)

    def _antipode_raw(self, i):
        # S(y^d x^b) = x^(-b) S(y_s)^(d_s) ... S(y_1)^(d_1),
        # with S(y_i) = -x^(-m_i n) y_i
        d, b = i
        out = self.basis_el(self._x_index(-b))
        for pos in range(self.s - 1, -1, -1):
            if d[pos]:
                s_y = self.mul(
                    self.basis_el(self._x_index(-self.mm[pos] * self.n)),
                    self.basis_el(self._yi_index(pos, 1)),
                ).scale(self.scalar(-1))
                out = self.mul(out, self.el_pow(s_y, d[pos]))
        return out

    # -- enumeration -------------------------------------------------------

    def basis_box(self, window):
        w = window
        ranges = [range(w + 1)]
        for i in range(1, self.s):
            ranges.append(range(min(w, self.pp[i] - 1) + 1))
        out = []

        def rec(pos, acc):
            if pos == self.s:
                for b in range(-w, w + 1):
                    out.append((tuple(acc), b))
                return
            for v in ranges[pos]:
                rec(pos + 1, acc + [v])

        rec(0, [])
        return sorted(out)

    def unit_monomials(self, bound):
        return [self._x_index(b) for b in range(-bound, bound + 1)]

    def generators(self):
        gens = [(f"y{i + 1}", self._yi_index(i, 1)) for i in range(self.s)]
        gens.append(("x", self._x_index(1)))
        gens.append(("x^-1", self._x_index(-1)))
        return gens

    def index_factors(self, i):
        d, b = i
        out = [(f"y{pos + 1}", d[pos]) for pos in range(self.s)]
        out.append(("x", b))
        return out

    def presentation(self):
        one = self.one_scalar()
        ynames = tuple(f"y{i + 1}" for i in range(self.s))
        gens = ("x", "x^-1") + ynames
        counit = {"x": one, "x^-1": one}
        for yn in ynames:
            counit[yn] = self.scalar(0)
        rels = [
            [(one, ("x", "x^-1")), (-one, ())],
            [(one, ("x^-1", "x")), (-one, ())],
        ]
        for i, yn in enumerate(ynames):
            rels.append([(one, ("x", yn)), (-self.qpow(self.mm[i]), (yn, "x"))])
        for i in range(self.s):
            for j in range(i + 1, self.s):
                rels.append(
                    [(one, (ynames[i], ynames[j])), (-one, (ynames[j], ynames[i]))]
                )
        for i in range(1, self.s):
            rels.append(
                [
                    (one, (ynames[i],) * self.pp[i]),
                    (-one, (ynames[0],) * self.pp[0]),
                ]
            )
        return Presentation(gens=gens, counit=counit, relations=rels)

    # -- rewriting oracle -----------------------------------------------------

    def oracle_letters(self):
        return tuple(f"y{i + 1}" for i in range(self.s)) + ("x", "X")

    def oracle_rules(self):
        one = self.one_scalar()
        ynames = [f"y{i + 1}" for i in range(self.s)]
        rules = [
            (("x", "X"), [(one, ())]),
            (("X", "x"), [(one, ())]),
        ]
        for i, yn in enumerate(ynames):
            rules.append((("x", yn), [(self.qpow(self.mm[i]), (yn, "x"))]))
            rules.append((("X", yn), [(self.qpow(-self.mm[i]), (yn, "X"))]))
        for i in range(self.s):
            for j in range(i + 1, self.s):
                rules.append(
                    ((ynames[j], ynames[i]), [(one, (ynames[i], ynames[j]))])
                )
        for i in range(1, self.s):
            rules.append(
                (
                    (ynames[i],) * self.pp[i],
                    [(one, (ynames[0],) * self.pp[0])],
                )
            )
        return rules

    def index_to_word(self, i):
        d, b = i
        word: tuple[str, ...] = ()
        for pos in range(self.s):
            word += (f"y{pos + 1}",) * d[pos]
        word += ("x",) * b if b >= 0 else ("X",) * (-b)
        return word

    def word_to_index(self, word):
        d = [0] * self.s
        b = 0
        for letter in word:
            if letter == "x":
                b += 1
            elif letter == "X":
                b -= 1
            else:
                d[int(letter[1:]) - 1] += 1
        return (self.canon(d), b)
