"""Local densities of q-Weil polynomials and their Euler product."""

from ._weilden import (
    WeilPolynomial,
    WeildenError,
    archimedean,
    census,
    centralizer_matrix,
    centralizer_order,
    checkpoint_product,
    compare,
    gsp_order,
    load_fixtures,
    local_table,
    nu_ell,
    nu_infinity,
    nu_p,
    partial_product,
    validate,
)

__all__ = [
    "WeilPolynomial",
    "WeildenError",
    "archimedean",
    "census",
    "centralizer_matrix",
    "centralizer_order",
    "checkpoint_product",
    "compare",
    "gsp_order",
    "load_fixtures",
    "local_table",
    "nu_ell",
    "nu_infinity",
    "nu_p",
    "partial_product",
    "validate",
]
__version__ = "0.1.0"
