"""q-integers, Gaussian binomials, and the skew binomial theorem.

Polynomials in q live in Z[q] here (dense integer tuples, constant
term first); evaluation lands in a cyclotomic field.  The Gaussian
binomial (a choose r)_q is built by the product formula with exact
polynomial division at every step; the q-Pascal recurrence serves as
an independent cross-check in the test suite, not here.

The skew binomial theorem fixes the variable order once and for all:
with vu = q uv,

    (u + v)^a  =  sum_r  (a choose r)_q  u^(a-r) v^r.

Every coproduct power in the family modules goes through
`skew_binomial_coeffs`, so the convention cannot drift between
families.
"""

from __future__ import annotations

from functools import lru_cache

from qhopf.scalars import Cyclo, ScalarError

QPoly = tuple[int, ...]


def qp_trim(p) -> QPoly:
    p = list(p)
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return tuple(p)


def qp_add(a: QPoly, b: QPoly) -> QPoly:
    n = max(len(a), len(b))
    a = list(a) + [0] * (n - len(a))
    b = list(b) + [0] * (n - len(b))
    return qp_trim(x + y for x, y in zip(a, b))


def qp_mul(a: QPoly, b: QPoly) -> QPoly:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return qp_trim(out)


def qp_divexact(a: QPoly, b: QPoly) -> QPoly:
    """Exact division in Z[q]; raises if the division leaves a remainder."""
    b = qp_trim(b)
    rem = list(a)
    if len(rem) < len(b):
        if not any(rem):
            return (0,)
        raise ScalarError("inexact q-polynomial division")
    out = [0] * (len(rem) - len(b) + 1)
    lead = b[-1]
    for i in range(len(out) - 1, -1, -1):
        c = rem[i + len(b) - 1]
        if c % lead:
            raise ScalarError("inexact q-polynomial division")
        c //= lead
        out[i] = c
        if c:
            for j, bj in enumerate(b):
                rem[i + j] -= c * bj
    if any(rem):
        raise ScalarError("inexact q-polynomial division")
    return qp_trim(out)


def qp_eval(p: QPoly, x: Cyclo) -> Cyclo:
    out = Cyclo.zero(x.level)
    for c in reversed(p):
        out = out * x + c
    return out


def q_integer(n: int) -> QPoly:
    """[n]_q = 1 + q + ... + q^(n-1) for n >= 0."""
    if n < 0:
        raise ValueError(f"q-integer needs n >= 0, got {n}")
    if n == 0:
        return (0,)
    return tuple([1] * n)


def q_factorial(n: int) -> QPoly:
    out: QPoly = (1,)
    for i in range(1, n + 1):
        out = qp_mul(out, q_integer(i))
    return out


@lru_cache(maxsize=None)
def gauss_binomial(a: int, r: int) -> QPoly:
    """(a choose r)_q in Z[q], by the product formula with exact division.

    Builds (a-r+i choose i)_q for i = 1..r, so every intermediate
    division is exact in Z[q].
    """
    if a < 0:
        raise ValueError(f"gauss_binomial needs a >= 0, got a={a}")
    if r < 0 or r > a:
        return (0,)
    if r == 0 or r == a:
        return (1,)
    out: QPoly = (1,)
    for i in range(1, r + 1):
        out = qp_divexact(qp_mul(out, q_integer(a - r + i)), q_integer(i))
    return out


def skew_binomial_coeffs(a: int, q: Cyclo) -> list[Cyclo]:
    """[(a choose r)_q evaluated at q, for r = 0..a].

    These are the coefficients of u^(a-r) v^r in (u+v)^a when vu = q uv.
    """
    return [qp_eval(gauss_binomial(a, r), q) for r in range(a + 1)]


def vanishing_criterion(a: int, xi: Cyclo) -> bool:
    """Whether (a choose r)_xi = 0 for every 0 < r < a (a >= 2).

    Computed twice: directly, and via the equivalent condition that xi
    is a primitive a-th root of unity.  The two routes must agree.
    """
    if a < 2:
        raise ValueError(f"criterion needs a >= 2, got {a}")
    direct = all(
        qp_eval(gauss_binomial(a, r), xi).is_zero() for r in range(1, a)
    )
    via_order = xi.order_of_unity() == a
    if direct != via_order:
        raise AssertionError(
            f"vanishing routes disagree at a={a}, xi={xi}: "
            f"direct={direct}, order={via_order}"
        )
    return direct
