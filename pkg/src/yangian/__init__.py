"""Exact symbolic engine and verification suite for the RTT-presented
super Yangian: normal-form rewriting, truncated series, quasideterminants,
the Gauss decomposition, the quantum Berezinian, and identity checks
cross-validated by a numeric evaluation oracle."""

from .algebra import (
    Algebra,
    Element,
    ResourceCapExceeded,
    Shape,
    algebra,
    element_str,
    set_max_terms,
    supercommutator,
)
from .series import BiSeries, Series, bi_check, series_supercommutator, t_series

__all__ = [
    "Algebra",
    "BiSeries",
    "Element",
    "ResourceCapExceeded",
    "Series",
    "Shape",
    "algebra",
    "bi_check",
    "element_str",
    "series_supercommutator",
    "set_max_terms",
    "supercommutator",
    "t_series",
]

__version__ = "0.1.0"
