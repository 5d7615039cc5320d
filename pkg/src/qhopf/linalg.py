"""Exact row reduction over a cyclotomic field.

Vectors are sparse dicts keyed by arbitrary comparable coordinates.
The pivot of a row is its smallest coordinate in the ambient total
order, and inputs are always processed in sorted key order, so ranks,
spans, and kernel bases come out deterministic.
"""

from __future__ import annotations

from qhopf.elements import Lin, acc
from qhopf.scalars import Cyclo


def _as_dict(vec) -> dict:
    return dict(vec.terms) if isinstance(vec, Lin) else dict(vec)


class Echelon:
    """Growing echelon basis of a subspace, with membership tests."""

    def __init__(self):
        self.rows: dict = {}  # pivot coordinate -> normalized sparse row

    @property
    def rank(self) -> int:
        return len(self.rows)

    def residue(self, vec) -> dict:
        """Reduce vec against the stored rows; returns the residue."""
        out = _as_dict(vec)
        while out:
            piv = min(out.keys())
            row = self.rows.get(piv)
            if row is None:
                return out
            c = out[piv]
            for k, v in row.items():
                acc(out, k, -(v * c))
        return out

    def insert(self, vec) -> bool:
        """Add vec to the span. True if it enlarged the space."""
        res = self.residue(vec)
        if not res:
            return False
        piv = min(res.keys())
        inv = res[piv].inv()
        self.rows[piv] = {k: v * inv for k, v in res.items()}
        return True

    def contains(self, vec) -> bool:
        return not self.residue(vec)


def span_rank(vectors) -> int:
    ech = Echelon()
    for v in vectors:
        ech.insert(v)
    return ech.rank


def kernel_of_map(inputs, image_of, level: int) -> list[dict]:
    """Kernel of the linear map e_k -> image_of(k), as combination dicts.

    `inputs` is an iterable of input keys (processed in sorted order);
    `image_of(k)` returns the image vector (Lin or dict) over scalars
    of the given level.  Returns sparse {input_key: coeff} dicts, one
    per linear dependency, each normalized so its smallest input key
    has coefficient 1.
    """
    rows: dict = {}  # pivot -> (row vector, combination)
    kernel: list[dict] = []
    for key in sorted(inputs):
        vec = _as_dict(image_of(key))
        combo = {key: Cyclo.one(level)}
        while vec:
            piv = min(vec.keys())
            hit = rows.get(piv)
            if hit is None:
                break
            row, row_combo = hit
            c = vec[piv]
            for k, v in row.items():
                acc(vec, k, -(v * c))
            for k, v in row_combo.items():
                acc(combo, k, -(v * c))
        if not vec:
            lead = combo[min(combo.keys())]
            if not lead.is_one():
                inv = lead.inv()
                combo = {k: v * inv for k, v in combo.items()}
            kernel.append(combo)
        else:
            piv = min(vec.keys())
            inv = vec[piv].inv()
            rows[piv] = (
                {k: v * inv for k, v in vec.items()},
                {k: v * inv for k, v in combo.items()},
            )
    return kernel
