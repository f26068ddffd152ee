"""Exact polynomial arithmetic in K[U][X] over the rationals."""

from .division import (
    InexactDivisionError,
    divides,
    exact_div,
    is_reduced,
    pquo,
    prem,
    pseudo_divide,
    sprem,
)
from .factor import (
    FactorSet,
    associates,
    canonical_key,
    content,
    gcd,
    integer_content,
    normalize,
    primitive_part,
    squarefree_decomposition,
    squarefree_part,
    squarefree_primitive_factors,
)
from .poly import (
    Context,
    ContextMismatchError,
    ParameterPoint,
    Polynomial,
    as_rational,
    specialize,
)
from .textio import ParseError, format_polynomial, format_recursive, parse_polynomial


def deg(f: Polynomial, x) -> int:
    return f.degree(x)


def cls(f: Polynomial) -> int:
    return f.cls


def _require_class(f: Polynomial) -> int:
    k = f.cls
    if k == 0:
        raise ValueError(f"{f} has class 0: no main variable")
    return k


def mvar(f: Polynomial) -> str:
    return f.ctx.variables[_require_class(f) - 1]


def mvar_position(f: Polynomial) -> int:
    return f.ctx.var_position(_require_class(f))


def initial(f: Polynomial) -> Polynomial:
    return f.leading_coeff(mvar_position(f))


def rank(f: Polynomial) -> tuple[str, int]:
    """(main variable, leading degree)."""
    v = mvar_position(f)
    return f.ctx.names[v], f.degree(v)


__all__ = [
    "Context", "ContextMismatchError", "FactorSet", "InexactDivisionError", "ParameterPoint",
    "ParseError", "Polynomial", "as_rational", "associates", "canonical_key", "cls", "content",
    "deg", "divides", "exact_div", "format_polynomial", "format_recursive", "gcd", "initial",
    "integer_content", "is_reduced", "mvar", "mvar_position", "normalize", "parse_polynomial",
    "pquo", "prem", "primitive_part", "pseudo_divide", "rank", "specialize", "sprem",
    "squarefree_decomposition", "squarefree_part", "squarefree_primitive_factors",
]
