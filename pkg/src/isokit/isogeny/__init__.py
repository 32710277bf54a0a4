"""Isogeny construction, evaluation and composition."""

from isokit.isogeny.core import (
    Classification,
    Isogeny,
    as_isogeny,
    classify,
    compose,
    evaluate,
    frobenius,
    pullback_constant,
)
from isokit.isogeny.general import from_kernel_general
from isokit.isogeny.kohel import kohel
from isokit.isogeny.velu import velu


def from_kernel(E, psi, ell=None, method="kohel"):
    """Isogeny with kernel polynomial psi by the chosen method."""
    if method == "kohel":
        phi = kohel(E, psi)
        if ell is not None and phi.degree != ell:
            from isokit.errors import InconsistentDegree

            raise InconsistentDegree(f"kernel polynomial gives degree {phi.degree}, not {ell}")
        return phi
    if method == "general":
        if ell is None:
            from isokit.curve import two_torsion_polys
            from isokit.poly import gcd_monic

            g = gcd_monic(psi, two_torsion_polys(E)[1].monic())
            ell = 2 * psi.degree - g.degree + 1
        return from_kernel_general(E, psi, ell)
    raise ValueError(f"unknown method {method!r}")


__all__ = [
    "Classification",
    "Isogeny",
    "as_isogeny",
    "classify",
    "compose",
    "evaluate",
    "from_kernel",
    "from_kernel_general",
    "frobenius",
    "kohel",
    "pullback_constant",
    "velu",
]
