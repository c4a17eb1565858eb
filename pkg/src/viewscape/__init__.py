"""Constraint-driven responsive visualization: view selection, landscapes,
breakpoints, and diffs over viewport space."""

from .core import ContentBox, FitResult, Viewport, aspect_ratio, content_aspect_ratio, fit_content
from .data import (
    DataError,
    Dataset,
    GeoFeature,
    GeoFeatureCollection,
    Network,
    ParseError,
    Table,
    load_geo,
    load_network,
    load_table,
)
from .spec import (
    ConstraintKind,
    ConstraintSpec,
    Diagnostic,
    LandscapeRegion,
    ResponsiveSpec,
    SpecError,
    ViewSpec,
    ViewType,
    parse_spec,
    serialize_spec,
    spec_from_dict,
    spec_to_dict,
    validate_spec,
)
from .projection import make_projection, project
from .layouts import LayoutContext, LayoutError, geometry_to_dict, layout_view
from .constraints import (
    ConstraintResult,
    evaluate_constraint,
    overplotting,
    overplotting_brute,
    pair_overlap,
)
from .selector import Selection, SelectionError, select_view
from .landscape import (
    BreakpointSet,
    DiffReport,
    ViewLandscape,
    compute_landscape,
    diff_landscape,
    extract_breakpoints,
    landscape_from_dict,
    landscape_to_dict,
)
from .render import render_landscape
from .jsonio import canonical_json
from . import datasets

__version__ = "0.1.0"

__all__ = [
    "Viewport", "ContentBox", "FitResult", "aspect_ratio", "content_aspect_ratio",
    "fit_content",
    "Dataset", "GeoFeature", "GeoFeatureCollection", "Network", "Table",
    "DataError", "ParseError", "load_geo", "load_network", "load_table",
    "ConstraintKind", "ConstraintSpec", "ViewSpec", "ViewType", "ResponsiveSpec",
    "LandscapeRegion", "SpecError", "Diagnostic", "parse_spec", "spec_from_dict",
    "spec_to_dict", "serialize_spec", "validate_spec",
    "make_projection", "project",
    "LayoutContext", "LayoutError", "layout_view", "geometry_to_dict",
    "ConstraintResult", "evaluate_constraint", "pair_overlap",
    "overplotting", "overplotting_brute",
    "Selection", "SelectionError", "select_view",
    "ViewLandscape", "BreakpointSet", "DiffReport", "compute_landscape",
    "extract_breakpoints", "diff_landscape", "landscape_to_dict", "landscape_from_dict",
    "render_landscape", "canonical_json", "datasets",
]
