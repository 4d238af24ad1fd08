"""Buffon triangle and needle simulations of pi."""

from ._core import (
    DegenerateSample,
    UnsupportedConfiguration,
    crossings_per_cast,
    estimate,
    expected_crossings_closed_form,
    expected_crossings_quadrature,
    filename_for_cast,
    make_triangle,
    mean_width_identity,
    render_cast,
    run_batch,
    sample_casts,
)

__all__ = [
    "DegenerateSample",
    "UnsupportedConfiguration",
    "crossings_per_cast",
    "estimate",
    "expected_crossings_closed_form",
    "expected_crossings_quadrature",
    "filename_for_cast",
    "make_triangle",
    "mean_width_identity",
    "render_cast",
    "run_batch",
    "sample_casts",
]
