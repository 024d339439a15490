from ._core import (
    CapExceeded,
    MetricSpace,
    ParseError,
    Surface,
    ValidationError,
    annulus,
    approximate,
    certify,
    connectivity_number,
    cut_jordan,
    cut_nonseparating_arc,
    cut_separating_arc,
    disc,
    gh_exact,
    gh_lower,
    minimal_preboundary,
    mobius,
    sphere,
    torus,
    validate_cactoid,
)

__all__ = [
    "CapExceeded",
    "MetricSpace",
    "ParseError",
    "Surface",
    "ValidationError",
    "annulus",
    "approximate",
    "certify",
    "connectivity_number",
    "cut_jordan",
    "cut_nonseparating_arc",
    "cut_separating_arc",
    "disc",
    "gh_exact",
    "gh_lower",
    "minimal_preboundary",
    "mobius",
    "sphere",
    "torus",
    "validate_cactoid",
]
