"""Exact computations with 2x2 Kronecker modules over four linear forms.

Modules are nested lists [[f11, f12], [f21, f22]] of linear forms given as
dicts over x, y, z, w. Scalars are ints or strings ("3/4", "-2"). Every
function takes ``field="rational"`` (the default) or ``field="fp:P"``.
"""

from ._kronmod import (
    NeedsExtension,
    alpha,
    beta,
    check,
    classify,
    eta,
    eta_inverse,
    fiber,
    inv,
    normal_form,
    snake,
    stab,
)

__all__ = [
    "NeedsExtension",
    "alpha",
    "beta",
    "check",
    "classify",
    "eta",
    "eta_inverse",
    "fiber",
    "inv",
    "normal_form",
    "snake",
    "stab",
]
