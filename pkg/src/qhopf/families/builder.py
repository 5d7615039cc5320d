"""Construction entry point: parameters in, provider out."""

from __future__ import annotations

from qhopf.families.base import HopfProvider
from qhopf.families.enveloping import EnvAbelian, EnvNonabelian
from qhopf.families.family_a import FamilyA
from qhopf.families.family_b import FamilyB
from qhopf.families.family_c import FamilyC
from qhopf.families.group_rings import GroupZ2, GroupZSemiZ
from qhopf.params import (
    AParams,
    BParams,
    CLiftParams,
    CParams,
    EnvAbelianParams,
    EnvNonabelianParams,
    FamilyParams,
    GroupZ2Params,
    GroupZSemiZParams,
    ParamError,
)

_BUILDERS = {
    GroupZ2Params: GroupZ2,
    GroupZSemiZParams: GroupZSemiZ,
    EnvAbelianParams: EnvAbelian,
    EnvNonabelianParams: EnvNonabelian,
    AParams: FamilyA,
    BParams: FamilyB,
    CParams: FamilyC,
    CLiftParams: FamilyC,
}


def build(params: FamilyParams) -> HopfProvider:
    ctor = _BUILDERS.get(type(params))
    if ctor is None:
        raise ParamError(f"no builder for {type(params).__name__}")
    return ctor(params)
