"""Hopf axiom verification on finite windows.

Every check here is exact: the window only selects WHICH basis indices
are enumerated, never an approximation.  A failure carries the resolved
residual so reports can show what went wrong where.

The axioms, per basis index e (and index pairs for the bialgebra law):

    coassociativity   (id ox Delta)Delta(e) == (Delta ox id)Delta(e)
    counit            (eps ox id)Delta(e) == e == (id ox eps)Delta(e)
    antipode          m(S ox id)Delta(e) == eps(e) 1 == m(id ox S)Delta(e)
    bialgebra         Delta(e_i e_j) == Delta(e_i) Delta(e_j),
                      eps(e_i e_j) == eps(e_i) eps(e_j)
"""

from __future__ import annotations

from dataclasses import dataclass, field

from qhopf.elements import Lin, acc
from qhopf.families.base import HopfProvider
from qhopf.linalg import kernel_of_map
from qhopf.scalars import Cyclo


@dataclass
class Failure:
    axiom: str
    where: str
    residual: str

    def to_json(self):
        return {"axiom": self.axiom, "where": self.where, "residual": self.residual}


@dataclass
class AxiomReport:
    window: int
    checked: dict[str, int] = field(default_factory=dict)
    failures: list[Failure] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_json(self):
        return {
            "window": self.window,
            "checked": {k: self.checked[k] for k in sorted(self.checked)},
            "failures": [f.to_json() for f in self.failures],
            "passed": self.passed,
        }


def coassociativity_residual(alg: HopfProvider, idx) -> Lin:
    t = alg.coproduct_basis(idx)
    return alg.cop_left(t) - alg.cop_right(t)


def counit_residuals(alg: HopfProvider, idx) -> tuple[Lin, Lin]:
    t = alg.coproduct_basis(idx)
    left: dict = {}
    right: dict = {}
    for (i, j), c in t.terms.items():
        ei = alg.counit_basis(i)
        if not ei.is_zero():
            acc(left, j, c * ei)
        ej = alg.counit_basis(j)
        if not ej.is_zero():
            acc(right, i, c * ej)
    e = Lin.basis(idx, alg.one_scalar())
    return Lin(left) - e, Lin(right) - e


def antipode_residuals(alg: HopfProvider, idx) -> tuple[Lin, Lin]:
    t = alg.coproduct_basis(idx)
    left: dict = {}
    right: dict = {}
    for (i, j), c in t.terms.items():
        for k, v in alg.mul(alg.antipode_basis(i), alg.basis_el(j)).terms.items():
            acc(left, k, c * v)
        for k, v in alg.mul(alg.basis_el(i), alg.antipode_basis(j)).terms.items():
            acc(right, k, c * v)
    target = Lin.basis(alg.unit_index(), alg.counit_basis(idx))
    return Lin(left) - target, Lin(right) - target


def bialgebra_residuals(alg: HopfProvider, i, j) -> tuple[Lin, Cyclo]:
    prod = alg.multiply_basis(i, j)
    lhs = alg.coproduct(prod)
    rhs = alg.t2_mul(alg.coproduct_basis(i), alg.coproduct_basis(j))
    eps = alg.counit(prod) - alg.counit_basis(i) * alg.counit_basis(j)
    return lhs - rhs, eps


def verify_axioms(
    alg: HopfProvider,
    window: int = 3,
    axioms: tuple[str, ...] = ("coassociativity", "counit", "antipode", "bialgebra"),
    max_failures: int = 16,
    jobs: int = 1,
    params=None,
) -> AxiomReport:
    """Run the selected axiom checks over the window box.

    jobs > 1 fans the bialgebra pair grid out over processes; that path
    needs `params` so each worker can rebuild the provider.  Failure
    ordering is deterministic either way.
    """
    report = AxiomReport(window=window)
    box = alg.basis_box(window)
    fail = report.failures

    def note(axiom, where, residual):
        if len(fail) < max_failures:
            fail.append(Failure(axiom, where, residual))

    if "coassociativity" in axioms:
        for idx in box:
            r = coassociativity_residual(alg, idx)
            if not r.is_zero():
                note("coassociativity", alg.index_str(idx), f"{len(r)} residual tensor terms")
        report.checked["coassociativity"] = len(box)

    if "counit" in axioms:
        for idx in box:
            l, r = counit_residuals(alg, idx)
            if not l.is_zero():
                note("counit", alg.index_str(idx), "left: " + alg.el_str(l))
            if not r.is_zero():
                note("counit", alg.index_str(idx), "right: " + alg.el_str(r))
        report.checked["counit"] = len(box)

    if "antipode" in axioms:
        for idx in box:
            l, r = antipode_residuals(alg, idx)
            if not l.is_zero():
                note("antipode", alg.index_str(idx), "left: " + alg.el_str(l))
            if not r.is_zero():
                note("antipode", alg.index_str(idx), "right: " + alg.el_str(r))
        report.checked["antipode"] = len(box)

    if "bialgebra" in axioms:
        pairs = [(i, j) for i in box for j in box]
        if jobs > 1 and params is not None:
            count, tagged = _scan_pairs_parallel(params, window, jobs, len(pairs))
        else:
            count, tagged = _bialgebra_scan(alg, list(enumerate(pairs)))
        for _, axiom, where, residual in sorted(tagged, key=lambda t: t[0]):
            note(axiom, where, residual)
        report.checked["bialgebra"] = count

    return report


def _bialgebra_scan(alg: HopfProvider, tagged_pairs) -> tuple[int, list]:
    out = []
    count = 0
    for pos, (i, j) in tagged_pairs:
        t, eps = bialgebra_residuals(alg, i, j)
        count += 1
        where = f"({alg.index_str(i)}, {alg.index_str(j)})"
        if not t.is_zero():
            out.append((pos, "bialgebra", where, f"{len(t)} residual tensor terms"))
        if not eps.is_zero():
            out.append((pos, "bialgebra", where, f"counit residual {eps}"))
    return count, out


def _pair_worker(args) -> tuple[int, list]:
    from qhopf.families import build
    from qhopf.params import parse_params

    params_json, window, slot, stride = args
    alg = build(parse_params(params_json))
    box = alg.basis_box(window)
    pairs = list(enumerate((i, j) for i in box for j in box))
    return _bialgebra_scan(alg, pairs[slot::stride])


def _scan_pairs_parallel(params, window: int, jobs: int, total: int) -> tuple[int, list]:
    import multiprocessing as mp

    from qhopf.params import params_to_json

    pj = params_to_json(params)
    work = [(pj, window, slot, jobs) for slot in range(jobs)]
    with mp.Pool(jobs) as pool:
        results = pool.map(_pair_worker, work)
    count = sum(c for c, _ in results)
    tagged = [item for _, items in results for item in items]
    return count, tagged


def find_grouplikes(alg: HopfProvider, bound: int = 3) -> list:
    """Grouplike basis monomials among units with exponents within the bound.

    A scalar multiple c*m of a monomial satisfies Delta(g) = g ox g only
    for c = 1, so searching monomials is exhaustive on the unit part.
    """
    out = []
    for m in alg.unit_monomials(bound):
        if not alg.counit_basis(m).is_one():
            continue
        if alg.coproduct_basis(m) == Lin.basis((m, m), alg.one_scalar()):
            out.append(m)
    return sorted(out)


def find_skew_primitives(alg: HopfProvider, g, h, window: int = 3) -> list[Lin]:
    """Basis of {p : Delta(p) = g ox p + p ox h} within the window span.

    g and h must be grouplike basis indices.
    """
    for idx in (g, h):
        if alg.coproduct_basis(idx) != Lin.basis((idx, idx), alg.one_scalar()):
            raise ValueError(f"{alg.index_str(idx)} is not grouplike")
    box = alg.basis_box(window)

    def image(e):
        vec = dict(alg.coproduct_basis(e).terms)
        acc(vec, (g, e), -alg.one_scalar())
        acc(vec, (e, h), -alg.one_scalar())
        return vec

    return [Lin(combo) for combo in kernel_of_map(box, image, alg.level)]
