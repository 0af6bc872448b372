"""Polygonal approximation, self-intersection removal, interior/exterior
classification and separation for closed plane curves."""

from ._jordankit import (
    ClosedCurve,
    ConstructionFailed,
    DegenerateCurve,
    InteriorSubdivision,
    InvalidArgument,
    NotSameFace,
    ParamPolygon,
    SimplePolygon,
    band_radius,
    check_separation,
    classify,
    connect,
    contains,
    distance_to,
    ellipse,
    find_illegal_intersection,
    fourier,
    fuzz,
    grid_path,
    injectivity_gap,
    interior_witness,
    is_simple,
    mesh,
    polyline,
    refine_until,
    render_svg,
    sample,
    satisfies_spacing,
    separating_polygon,
    simplify,
    unit_circle,
    winding_number,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
