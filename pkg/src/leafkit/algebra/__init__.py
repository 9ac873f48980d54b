"""Coefficient domains, polynomials, derivations and Hasse-Schmidt derivations."""

from .derivation import Derivation, apply_derivation, apply_derivation_iter
from .domains import GF, QQ, FiniteField, RationalField, parse_domain
from .hasse import DEFAULT_ORDER, HasseSchmidtDerivation, hs_apply, hs_from_derivation
from .orders import DEGREVLEX, LEX, MonomialOrder, block_order
from .poly import Poly, Ring
from .syntax import parse_poly


def poly_arith(a: Poly, b: Poly, op: str) -> Poly:
    """``op`` is one of add, sub, mul."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown operation {op!r}")


__all__ = [
    "DEFAULT_ORDER",
    "DEGREVLEX",
    "Derivation",
    "FiniteField",
    "GF",
    "HasseSchmidtDerivation",
    "LEX",
    "MonomialOrder",
    "Poly",
    "QQ",
    "RationalField",
    "Ring",
    "apply_derivation",
    "apply_derivation_iter",
    "block_order",
    "hs_apply",
    "hs_from_derivation",
    "parse_domain",
    "parse_poly",
    "poly_arith",
]
