"""Parsing and validation of the responsive-visualization spec.

A spec is a JSON document holding an ordered view stack. Each view has a
type, type-specific parameters, and a list of quantified legibility
constraints. The stack order encodes preference: the first view whose
constraints all pass at a given viewport is displayed.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass, field
from typing import Optional

from .data import Dataset, GeoFeatureCollection, Network, Table

SPEC_VERSION = 1


class SpecError(ValueError):
    """Invalid spec document."""


class ConstraintKind(enum.Enum):
    MIN_CIRCLE_RADIUS = "min_circle_radius"
    MIN_AREA_SIZE = "min_area_size"
    MIN_HEX_SIZE = "min_hex_size"
    MIN_SQUARE_SIZE = "min_square_size"
    MIN_MATRIX_LABEL_SIZE = "min_matrix_label_size"
    MIN_ARC_LABEL_SIZE = "min_arc_label_size"
    MAX_OVERPLOTTING = "max_overplotting"
    MAX_ASPECT_RATIO_DIFF = "max_aspect_ratio_diff"
    MIN_ASPECT_RATIO = "min_aspect_ratio"
    MAX_ASPECT_RATIO = "max_aspect_ratio"
    MIN_BAR_COUNT = "min_bar_count"


# camelCase aliases accepted in spec documents
_KIND_ALIASES = {
    "minCircleRadius": ConstraintKind.MIN_CIRCLE_RADIUS,
    "minAreaSize": ConstraintKind.MIN_AREA_SIZE,
    "minHexSize": ConstraintKind.MIN_HEX_SIZE,
    "minSquareSize": ConstraintKind.MIN_SQUARE_SIZE,
    "minAdjacencyMatrixLabelSize": ConstraintKind.MIN_MATRIX_LABEL_SIZE,
    "minArcDiagramLabelSize": ConstraintKind.MIN_ARC_LABEL_SIZE,
    "maxOverplotting": ConstraintKind.MAX_OVERPLOTTING,
    "maxAspectRatioDiff": ConstraintKind.MAX_ASPECT_RATIO_DIFF,
    "minAspectRatio": ConstraintKind.MIN_ASPECT_RATIO,
    "maxAspectRatio": ConstraintKind.MAX_ASPECT_RATIO,
    "minBarCount": ConstraintKind.MIN_BAR_COUNT,
}

# element-size kinds: threshold in px, more space can only help
SIZE_KINDS = frozenset({
    ConstraintKind.MIN_CIRCLE_RADIUS,
    ConstraintKind.MIN_AREA_SIZE,
    ConstraintKind.MIN_HEX_SIZE,
    ConstraintKind.MIN_SQUARE_SIZE,
    ConstraintKind.MIN_MATRIX_LABEL_SIZE,
    ConstraintKind.MIN_ARC_LABEL_SIZE,
})

ASPECT_KINDS = frozenset({
    ConstraintKind.MAX_ASPECT_RATIO_DIFF,
    ConstraintKind.MIN_ASPECT_RATIO,
    ConstraintKind.MAX_ASPECT_RATIO,
})


def kind_is_monotone(kind: ConstraintKind) -> bool:
    """True when growing the viewport in both dimensions can never flip the
    constraint from passing to failing (enables the landscape fast path)."""
    return kind not in ASPECT_KINDS


class ViewType(enum.Enum):
    CIRCLE_MAP = "circle_map"
    DORLING_CARTOGRAM = "dorling_cartogram"
    CHOROPLETH = "choropleth"
    HEX_MAP = "hex_map"
    WAFFLE_CHART = "waffle_chart"
    BAR_CHART = "bar_chart"
    SCATTERPLOT = "scatterplot"
    HEATMAP = "heatmap"
    ADJACENCY_MATRIX = "adjacency_matrix"
    ARC_DIAGRAM = "arc_diagram"
    NODE_LINK = "node_link"


GEO_VIEWS = frozenset({ViewType.CIRCLE_MAP, ViewType.DORLING_CARTOGRAM, ViewType.CHOROPLETH,
                       ViewType.HEX_MAP, ViewType.WAFFLE_CHART})
NETWORK_VIEWS = frozenset({ViewType.ADJACENCY_MATRIX, ViewType.ARC_DIAGRAM, ViewType.NODE_LINK})
TABLE_VIEWS = frozenset({ViewType.BAR_CHART, ViewType.SCATTERPLOT, ViewType.HEATMAP})

# which constraint kinds may be attached to which view types
APPLICABILITY: dict[ConstraintKind, frozenset] = {
    ConstraintKind.MIN_CIRCLE_RADIUS: frozenset({ViewType.CIRCLE_MAP, ViewType.DORLING_CARTOGRAM}),
    ConstraintKind.MIN_AREA_SIZE: frozenset({ViewType.CHOROPLETH}),
    ConstraintKind.MIN_HEX_SIZE: frozenset({ViewType.HEX_MAP}),
    ConstraintKind.MIN_SQUARE_SIZE: frozenset({ViewType.WAFFLE_CHART}),
    ConstraintKind.MIN_MATRIX_LABEL_SIZE: frozenset({ViewType.ADJACENCY_MATRIX}),
    ConstraintKind.MIN_ARC_LABEL_SIZE: frozenset({ViewType.ARC_DIAGRAM}),
    ConstraintKind.MAX_OVERPLOTTING: frozenset({ViewType.SCATTERPLOT}),
    ConstraintKind.MAX_ASPECT_RATIO_DIFF: frozenset({
        ViewType.CIRCLE_MAP, ViewType.DORLING_CARTOGRAM, ViewType.CHOROPLETH,
        ViewType.HEX_MAP, ViewType.ADJACENCY_MATRIX}),
    ConstraintKind.MIN_ASPECT_RATIO: frozenset(ViewType),
    ConstraintKind.MAX_ASPECT_RATIO: frozenset(ViewType),
    ConstraintKind.MIN_BAR_COUNT: frozenset({ViewType.BAR_CHART}),
}

# required / optional parameter keys per view type
_PARAM_SCHEMA: dict[ViewType, tuple[set, set]] = {
    ViewType.CIRCLE_MAP: ({"projection", "value_field", "circle_scale"}, {"category_field"}),
    ViewType.DORLING_CARTOGRAM: ({"projection", "value_field", "circle_scale"},
                                 {"category_field", "seed", "max_iterations"}),
    ViewType.CHOROPLETH: ({"projection"}, {"category_field", "value_field"}),
    ViewType.HEX_MAP: (set(), {"category_field"}),
    ViewType.WAFFLE_CHART: ({"category_field", "orientation"}, {"group_field", "group_order", "gap"}),
    ViewType.BAR_CHART: ({"value_field", "label_field", "orientation"}, {"min_pitch", "category_field"}),
    ViewType.SCATTERPLOT: ({"x_field", "y_field"}, {"mark_radius", "margin"}),
    ViewType.HEATMAP: ({"x_field", "y_field", "bins"}, set()),
    ViewType.ADJACENCY_MATRIX: (set(), {"label_gutter"}),
    ViewType.ARC_DIAGRAM: (set(), {"label_gutter"}),
    ViewType.NODE_LINK: (set(), {"seed", "iterations"}),
}


@dataclass(frozen=True)
class ConstraintSpec:
    kind: ConstraintKind
    threshold: float
    allowed_failure_fraction: float = 0.0

    def __post_init__(self):
        if self.kind == ConstraintKind.MAX_OVERPLOTTING:
            if not (0 < self.threshold <= 1):
                raise SpecError(f"{self.kind.value}: threshold must be in (0, 1], got {self.threshold}")
        elif self.threshold <= 0:
            raise SpecError(f"{self.kind.value}: threshold must be positive, got {self.threshold}")
        if not (0 <= self.allowed_failure_fraction < 1):
            raise SpecError(f"allowed_failure_fraction must be in [0, 1), got {self.allowed_failure_fraction}")

    @property
    def monotone_in_size(self) -> bool:
        return kind_is_monotone(self.kind)


@dataclass(frozen=True)
class ViewSpec:
    id: str
    view_type: ViewType
    params: dict
    constraints: tuple[ConstraintSpec, ...] = ()

    def __hash__(self):
        return hash((self.id, self.view_type))

    def param(self, key, default=None):
        return self.params.get(key, default)


@dataclass(frozen=True)
class LandscapeRegion:
    w_min: float = 0.0
    w_max: float = 1600.0
    h_min: float = 0.0
    h_max: float = 1000.0
    step: float = 4.0

    def __post_init__(self):
        if self.w_max <= self.w_min or self.h_max <= self.h_min:
            raise SpecError("landscape region must have positive extent")
        if self.step < 1:
            raise SpecError(f"landscape step must be >= 1, got {self.step}")


@dataclass(frozen=True)
class ResponsiveSpec:
    views: tuple[ViewSpec, ...]
    dataset_ref: Optional[str] = None
    landscape_region: LandscapeRegion = field(default_factory=LandscapeRegion)

    def view(self, view_id: str) -> ViewSpec:
        for v in self.views:
            if v.id == view_id:
                return v
        raise KeyError(view_id)


def _resolve_kind(name: str) -> ConstraintKind:
    if name in _KIND_ALIASES:
        return _KIND_ALIASES[name]
    try:
        return ConstraintKind(name)
    except ValueError:
        valid = sorted(k.value for k in ConstraintKind)
        raise SpecError(f"unknown constraint kind {name!r}; valid kinds: {valid}") from None


def _resolve_view_type(name: str) -> ViewType:
    try:
        return ViewType(name)
    except ValueError:
        valid = sorted(t.value for t in ViewType)
        raise SpecError(f"unknown view type {name!r}; valid types: {valid}") from None


def parse_spec(text) -> ResponsiveSpec:
    """Parse a spec JSON document into a validated ResponsiveSpec."""
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise SpecError(f"spec JSON syntax error at line {e.lineno}, column {e.colno}: {e.msg}") from e
    return spec_from_dict(doc)


def spec_from_dict(doc: dict) -> ResponsiveSpec:
    if not isinstance(doc, dict):
        raise SpecError("spec document must be a JSON object")
    raw_views = doc.get("views", [])
    if not raw_views:
        raise SpecError("view stack is empty: a spec needs at least one view")

    views = []
    seen = set()
    for rv in raw_views:
        vid = rv.get("id")
        if not vid:
            raise SpecError("every view needs a non-empty id")
        if vid in seen:
            raise SpecError(f"duplicate view id {vid!r}")
        seen.add(vid)
        vtype = _resolve_view_type(rv.get("type", ""))
        params = dict(rv.get("params", {}))
        required, optional = _PARAM_SCHEMA[vtype]
        missing = required - params.keys()
        if missing:
            raise SpecError(f"view {vid!r} ({vtype.value}): missing required params {sorted(missing)}")
        unknown = params.keys() - required - optional
        if unknown:
            raise SpecError(f"view {vid!r} ({vtype.value}): unknown params {sorted(unknown)}")
        constraints = tuple(
            ConstraintSpec(
                kind=_resolve_kind(rc["kind"]),
                threshold=float(rc["threshold"]),
                allowed_failure_fraction=float(rc.get("allowed_failure_fraction", 0.0)),
            )
            for rc in rv.get("constraints", [])
        )
        views.append(ViewSpec(id=vid, view_type=vtype, params=params, constraints=constraints))

    region_doc = doc.get("landscape_region")
    region = LandscapeRegion(**region_doc) if region_doc else LandscapeRegion()
    return ResponsiveSpec(views=tuple(views), dataset_ref=doc.get("dataset_ref"),
                          landscape_region=region)


def spec_to_dict(spec: ResponsiveSpec) -> dict:
    doc = {
        "spec_version": SPEC_VERSION,
        "views": [
            {
                "id": v.id,
                "type": v.view_type.value,
                "params": dict(v.params),
                "constraints": [
                    {"kind": c.kind.value, "threshold": c.threshold,
                     **({"allowed_failure_fraction": c.allowed_failure_fraction}
                        if c.allowed_failure_fraction else {})}
                    for c in v.constraints
                ],
            }
            for v in spec.views
        ],
        "landscape_region": {
            "w_min": spec.landscape_region.w_min, "w_max": spec.landscape_region.w_max,
            "h_min": spec.landscape_region.h_min, "h_max": spec.landscape_region.h_max,
            "step": spec.landscape_region.step,
        },
    }
    if spec.dataset_ref is not None:
        doc["dataset_ref"] = spec.dataset_ref
    return doc


def serialize_spec(spec: ResponsiveSpec) -> str:
    return json.dumps(spec_to_dict(spec), indent=2)


@dataclass(frozen=True)
class Diagnostic:
    severity: str  # "error" | "warning"
    view_id: str
    message: str


def _dataset_fields(data: Dataset):
    if isinstance(data, GeoFeatureCollection):
        names = set()
        for f in data.features:
            names.update(f.properties.keys())
        return names
    if isinstance(data, Table):
        return {name for name, _ in data.columns}
    return set()


def validate_spec(spec: ResponsiveSpec, data: Dataset) -> list[Diagnostic]:
    """Cross-check a parsed spec against a dataset.

    Returns an empty list when every view's params reference existing
    dataset fields, the view types match the dataset kind, and every
    constraint kind is applicable to its view type.
    """
    diags = []
    fields = _dataset_fields(data)
    for v in spec.views:
        if isinstance(data, GeoFeatureCollection) and v.view_type not in GEO_VIEWS:
            if v.view_type in TABLE_VIEWS and v.view_type == ViewType.BAR_CHART:
                pass  # bar charts can draw from geo feature properties
            else:
                diags.append(Diagnostic("error", v.id,
                                        f"view type {v.view_type.value} does not apply to geographic data"))
                continue
        if isinstance(data, Network) and v.view_type not in NETWORK_VIEWS:
            diags.append(Diagnostic("error", v.id,
                                    f"view type {v.view_type.value} does not apply to network data"))
            continue
        if isinstance(data, Table) and v.view_type not in TABLE_VIEWS:
            diags.append(Diagnostic("error", v.id,
                                    f"view type {v.view_type.value} does not apply to tabular data"))
            continue

        for key in ("value_field", "category_field", "group_field", "label_field",
                    "x_field", "y_field"):
            name = v.params.get(key)
            if name is not None and name not in fields:
                diags.append(Diagnostic("error", v.id,
                                        f"{key} {name!r} not present in dataset"))
        if v.view_type == ViewType.HEX_MAP and isinstance(data, GeoFeatureCollection) \
                and data.hex_coords is None:
            diags.append(Diagnostic("error", v.id, "hex_map requires hex grid coordinates"))

        for c in v.constraints:
            if v.view_type not in APPLICABILITY[c.kind]:
                diags.append(Diagnostic("error", v.id,
                                        f"constraint {c.kind.value} is not applicable to "
                                        f"view type {v.view_type.value}"))
    return diags
