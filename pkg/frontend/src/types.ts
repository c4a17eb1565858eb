// Response shapes of the viewscape HTTP API. The playground renders these
// verbatim; it never computes constraints or layouts itself.

export interface ConstraintReport {
    view: string;
    constraint: string;
    measured: number;
    threshold: number;
    passed: boolean;
}

export interface SelectionResponse {
    view: string;
    fallback: boolean;
    results: ConstraintReport[];
}

export interface CircleGeometry {
    type: "circle_map" | "dorling_cartogram";
    circles: { id: string; x: number; y: number; r: number; category?: string }[];
}

export interface ChoroplethGeometry {
    type: "choropleth";
    features: { id: string; rings: [number, number][][]; category?: string }[];
}

export interface GridGeometry {
    type: "hex_map" | "waffle_chart";
    cell_width: number;
    orientation?: string;
    cells: { id: string; x: number; y: number; category?: string }[];
}

export interface BarGeometry {
    type: "bar_chart";
    orientation: "vertical" | "horizontal";
    pitch: number;
    shown: number;
    total: number;
    bars: { label: string; value: number; length: number }[];
}

export interface ScatterGeometry {
    type: "scatterplot";
    radius: number;
    dropped: number;
    marks: [number, number][];
}

export interface HeatmapGeometry {
    type: "heatmap";
    cell_width: number;
    cell_height: number;
    counts: number[][];
}

export interface MatrixGeometry {
    type: "adjacency_matrix";
    cell_size: number;
    gutter: number;
    order: string[];
    cells: [number, number, number][];
}

export interface ArcGeometry {
    type: "arc_diagram";
    pitch: number;
    gutter: number;
    nodes: { id: string; x: number }[];
    arcs: [number, number, number][];
}

export interface NodeLinkGeometry {
    type: "node_link";
    seed: number;
    nodes: { id: string; x: number; y: number }[];
    links: [number, number, number][];
}

export type LayoutGeometry =
    | CircleGeometry
    | ChoroplethGeometry
    | GridGeometry
    | BarGeometry
    | ScatterGeometry
    | HeatmapGeometry
    | MatrixGeometry
    | ArcGeometry
    | NodeLinkGeometry;

export interface LandscapeResponse {
    region: { w_min: number; w_max: number; h_min: number; h_max: number };
    step: number;
    labels: string[];
    rows: [number, number][][]; // per height row: run-length [label index, run length]
    provenance: { spec_hash: string; dataset_hash: string };
}

export interface ConstraintDoc {
    kind: string;
    threshold: number;
    [param: string]: unknown;
}

export interface ViewDoc {
    id: string;
    type: string;
    params: Record<string, unknown>;
    constraints: ConstraintDoc[];
}

export interface SpecDoc {
    spec_version: number;
    views: ViewDoc[];
    dataset_ref?: string;
    landscape_region?: {
        w_min: number; w_max: number; h_min: number; h_max: number; step: number;
    };
}

export interface Diagnostic {
    severity: "error" | "warning";
    view: string | null;
    message: string;
}

export interface MetaResponse {
    generation: number;
    spec_hash: string;
    dataset_hash: string;
    dataset: Record<string, unknown> & { kind: string };
    views: { id: string; type: string }[];
    landscape_region: SpecDoc["landscape_region"];
    spec: SpecDoc;
}

export interface SpecAccepted {
    generation: number;
    spec_hash: string;
}

export interface SpecRejected {
    error: string;
    diagnostics?: Diagnostic[];
}
