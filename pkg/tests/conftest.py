"""Shared instance lists for the test suite."""

from qhopf.params import parse_params

SCALAR_GRID = [1, -1, {"order": 3, "power": 1}, {"order": 5, "power": 1}, 2]

B_SPECS = [
    {"family": "B", "n": 1, "p": [1, 2, 3], "q": {"order": 6, "power": 1}},
    {"family": "B", "n": 2, "p": [1, 2, 3], "q": {"order": 12, "power": 1}},
    {"family": "B", "n": 7, "p": [1, 3, 5], "q": {"order": 105, "power": 1}},
]


def grid_specs():
    """The 32-instance verification grid."""
    specs = [
        {"family": "GroupZ2"},
        {"family": "GroupZSemiZ"},
        {"family": "EnvAbelian"},
        {"family": "EnvNonabelian"},
    ]
    for n in range(4):
        for q in SCALAR_GRID:
            specs.append({"family": "A", "n": n, "q": q})
    specs.extend(B_SPECS)
    for n in range(2, 6):
        specs.append({"family": "C", "n": n})
    specs.append({"family": "CLift", "n": 3, "q": {"order": 4, "power": 1}})
    return specs


def grid_params():
    return [parse_params(s) for s in grid_specs()]


def spec_label(spec):
    from qhopf.params import params_str

    return params_str(parse_params(spec))
