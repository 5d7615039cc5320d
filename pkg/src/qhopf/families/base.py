"""Provider interface: a Hopf algebra presented through its basis.

A provider knows one distinguished monomial basis and returns exact
structure constants on basis indices:

    multiply_basis(i, j)   e_i * e_j        as a Lin over indices
    coproduct_basis(i)     Delta(e_i)       as a Lin over index pairs
    counit_basis(i)        eps(e_i)         as a scalar
    antipode_basis(i)      S(e_i)           as a Lin over indices

Everything else (bilinear extension, tensor products, iterated
coproducts) is generic and lives here.  Structure constants are
memoized per instance; all verification windows re-use them.
"""

from __future__ import annotations

from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from fractions import Fraction

from qhopf.elements import Index, Lin, acc
from qhopf.scalars import Cyclo


@dataclass
class Presentation:
    """Generators and defining relations, for tangent-space work.

    Each relation is a linear combination sum_t c_t * w_t == 0 of words
    w_t (tuples of generator names) with scalar coefficients c_t.
    """

    gens: tuple[str, ...]
    counit: dict[str, Cyclo]
    relations: list[list[tuple[Cyclo, tuple[str, ...]]]] = field(default_factory=list)


class PowCache:
    """Memoized integer powers of a fixed nonzero scalar."""

    def __init__(self, base: Cyclo):
        self.base = base
        self._cache: dict[int, Cyclo] = {0: Cyclo.one(base.level), 1: base}

    def __call__(self, e: int) -> Cyclo:
        hit = self._cache.get(e)
        if hit is None:
            hit = self.base**e
            self._cache[e] = hit
        return hit


class HopfProvider(ABC):
    """Base class for family providers."""

    level: int
    family_tag: str
    params: object

    def __init__(self, level: int):
        self.level = level
        self._mul_cache: dict[tuple[Index, Index], Lin] = {}
        self._cop_cache: dict[Index, Lin] = {}
        self._anti_cache: dict[Index, Lin] = {}

    # -- family-specific structure constants ---------------------------

    @abstractmethod
    def unit_index(self) -> Index: ...

    @abstractmethod
    def _multiply_raw(self, i: Index, j: Index) -> Lin: ...

    @abstractmethod
    def _coproduct_raw(self, i: Index) -> Lin: ...

    @abstractmethod
    def counit_basis(self, i: Index) -> Cyclo: ...

    @abstractmethod
    def _antipode_raw(self, i: Index) -> Lin: ...

    @abstractmethod
    def basis_box(self, window: int) -> list[Index]:
        """All basis indices with exponents bounded by the window."""

    @abstractmethod
    def unit_monomials(self, bound: int) -> list[Index]:
        """Monomials in the invertible generators, exponents in [-bound, bound]."""

    @abstractmethod
    def generators(self) -> list[tuple[str, Index]]: ...

    @abstractmethod
    def index_factors(self, i: Index) -> list[tuple[str, int]]:
        """Factor a basis monomial as ordered generator powers."""

    @abstractmethod
    def presentation(self) -> Presentation: ...

    # -- memoized views -------------------------------------------------

    def multiply_basis(self, i: Index, j: Index) -> Lin:
        key = (i, j)
        hit = self._mul_cache.get(key)
        if hit is None:
            hit = self._multiply_raw(i, j)
            self._mul_cache[key] = hit
        return hit

    def coproduct_basis(self, i: Index) -> Lin:
        hit = self._cop_cache.get(i)
        if hit is None:
            hit = self._coproduct_raw(i)
            self._cop_cache[i] = hit
        return hit

    def antipode_basis(self, i: Index) -> Lin:
        hit = self._anti_cache.get(i)
        if hit is None:
            hit = self._antipode_raw(i)
            self._anti_cache[i] = hit
        return hit

    # -- scalars ----------------------------------------------------------

    def scalar(self, value) -> Cyclo:
        if isinstance(value, Cyclo):
            return value
        return Cyclo.from_fraction(Fraction(value), self.level)

    def one_scalar(self) -> Cyclo:
        return Cyclo.one(self.level)

    # -- generic element operations ----------------------------------------

    def one_el(self) -> Lin:
        return Lin.basis(self.unit_index(), self.one_scalar())

    def basis_el(self, i: Index, coeff=1) -> Lin:
        return Lin.basis(i, self.scalar(coeff))

    def generator_el(self, name: str) -> Lin:
        for gname, idx in self.generators():
            if gname == name:
                return self.basis_el(idx)
        raise KeyError(f"no generator named {name!r}")

    def mul(self, a: Lin, b: Lin) -> Lin:
        out: dict[Index, Cyclo] = {}
        for i, c in a.terms.items():
            for j, d in b.terms.items():
                cd = c * d
                for k, s in self.multiply_basis(i, j).terms.items():
                    acc(out, k, s * cd)
        return Lin(out)

    def el_pow(self, a: Lin, k: int) -> Lin:
        if k < 0:
            raise ValueError("element powers need k >= 0")
        out = self.one_el()
        for _ in range(k):
            out = self.mul(out, a)
        return out

    def coproduct(self, el: Lin) -> Lin:
        out: dict = {}
        for i, c in el.terms.items():
            for pair, d in self.coproduct_basis(i).terms.items():
                acc(out, pair, c * d)
        return Lin(out)

    def counit(self, el: Lin) -> Cyclo:
        out = Cyclo.zero(self.level)
        for i, c in el.terms.items():
            e = self.counit_basis(i)
            if not e.is_zero():
                out = out + c * e
        return out

    def antipode(self, el: Lin) -> Lin:
        out: dict[Index, Cyclo] = {}
        for i, c in el.terms.items():
            for k, s in self.antipode_basis(i).terms.items():
                acc(out, k, s * c)
        return Lin(out)

    # -- tensors ------------------------------------------------------------

    def tensor2(self, a: Lin, b: Lin) -> Lin:
        out: dict = {}
        for i, c in a.terms.items():
            for j, d in b.terms.items():
                acc(out, (i, j), c * d)
        return Lin(out)

    def t2_mul(self, s: Lin, t: Lin) -> Lin:
        """Componentwise product of 2-tensors."""
        out: dict = {}
        for (i, j), c in s.terms.items():
            for (k, l), d in t.terms.items():
                cd = c * d
                left = self.multiply_basis(i, k)
                right = self.multiply_basis(j, l)
                for a, ca in left.terms.items():
                    for b, cb in right.terms.items():
                        acc(out, (a, b), ca * cb * cd)
        return Lin(out)

    def t2_pow(self, s: Lin, k: int) -> Lin:
        if k < 0:
            raise ValueError("nonnegative powers only")
        u = self.unit_index()
        out = Lin.basis((u, u), self.one_scalar())
        for _ in range(k):
            out = self.t2_mul(out, s)
        return out

    def t3_mul(self, s: Lin, t: Lin) -> Lin:
        out: dict = {}
        for (i, j, k), c in s.terms.items():
            for (l, m, n), d in t.terms.items():
                cd = c * d
                t1 = self.multiply_basis(i, l)
                t2 = self.multiply_basis(j, m)
                t3 = self.multiply_basis(k, n)
                for a, ca in t1.terms.items():
                    cda = ca * cd
                    for b, cb in t2.terms.items():
                        cdab = cb * cda
                        for e, ce in t3.terms.items():
                            acc(out, (a, b, e), ce * cdab)
        return Lin(out)

    def cop_right(self, t: Lin) -> Lin:
        """(id (x) Delta) applied to a 2-tensor."""
        out: dict = {}
        for (i, j), c in t.terms.items():
            for (k, l), d in self.coproduct_basis(j).terms.items():
                acc(out, (i, k, l), c * d)
        return Lin(out)

    def cop_left(self, t: Lin) -> Lin:
        """(Delta (x) id) applied to a 2-tensor."""
        out: dict = {}
        for (i, j), c in t.terms.items():
            for (k, l), d in self.coproduct_basis(i).terms.items():
                acc(out, (k, l, j), c * d)
        return Lin(out)

    # -- display --------------------------------------------------------------

    def index_str(self, i: Index) -> str:
        bits = []
        for name, e in self.index_factors(i):
            if e == 0:
                continue
            bits.append(name if e == 1 else f"{name}^{e}")
        return "*".join(bits) if bits else "1"

    def el_str(self, el: Lin) -> str:
        return el.describe(self.index_str)

    def __repr__(self) -> str:
        return f"<{type(self).__name__} level={self.level}>"
