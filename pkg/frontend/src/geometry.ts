// Render layout geometry JSON into an SVG element. Pure presentation: every
// coordinate comes from the service, so what the panel shows is exactly what
// the engine computed.

import { categoryColor } from "./palette";
import type { LayoutGeometry } from "./types";

const SVG_NS = "http://www.w3.org/2000/svg";

function el<K extends keyof SVGElementTagNameMap>(
    parent: Element,
    tag: K,
    attrs: Record<string, string | number>,
): SVGElementTagNameMap[K] {
    const node = parent.ownerDocument!.createElementNS(SVG_NS, tag);
    for (const [key, value] of Object.entries(attrs)) {
        node.setAttribute(key, String(value));
    }
    parent.appendChild(node);
    return node;
}

export function renderGeometry(
    svg: SVGSVGElement,
    geom: LayoutGeometry,
    width: number,
    height: number,
): void {
    svg.setAttribute("viewBox", `0 0 ${width} ${height}`);
    svg.setAttribute("data-view-type", geom.type);
    while (svg.firstChild) {
        svg.removeChild(svg.firstChild);
    }
    const colors = new Map<string, string>();

    switch (geom.type) {
        case "circle_map":
        case "dorling_cartogram":
            for (const c of geom.circles) {
                el(svg, "circle", {
                    cx: c.x, cy: c.y, r: Math.max(c.r, 0.25),
                    fill: categoryColor(c.category, colors),
                    "fill-opacity": 0.85, "data-id": c.id,
                });
            }
            break;

        case "choropleth":
            for (const f of geom.features) {
                const d = f.rings
                    .map((ring) => "M" + ring.map(([x, y]) => `${x},${y}`).join("L") + "Z")
                    .join("");
                el(svg, "path", {
                    d, fill: categoryColor(f.category, colors),
                    stroke: "#ffffff", "stroke-width": 0.5, "data-id": f.id,
                });
            }
            break;

        case "hex_map": {
            const rx = geom.cell_width / 2;
            const ry = geom.cell_width / Math.sqrt(3);
            for (const c of geom.cells) {
                const points = [
                    [0, -ry], [rx, -ry / 2], [rx, ry / 2],
                    [0, ry], [-rx, ry / 2], [-rx, -ry / 2],
                ]
                    .map(([dx, dy]) => `${c.x + dx},${c.y + dy}`)
                    .join(" ");
                el(svg, "polygon", {
                    points, fill: categoryColor(c.category, colors),
                    stroke: "#ffffff", "stroke-width": 0.5, "data-id": c.id,
                });
            }
            break;
        }

        case "waffle_chart": {
            const side = geom.cell_width;
            for (const c of geom.cells) {
                el(svg, "rect", {
                    x: c.x, y: c.y, width: side, height: side,
                    fill: categoryColor(c.category, colors),
                    stroke: "#ffffff", "stroke-width": 0.5, "data-id": c.id,
                });
            }
            break;
        }

        case "bar_chart": {
            const thickness = geom.pitch * 0.8;
            geom.bars.forEach((bar, k) => {
                const along = k * geom.pitch + (geom.pitch - thickness) / 2;
                if (geom.orientation === "vertical") {
                    el(svg, "rect", {
                        x: along, y: height - bar.length,
                        width: thickness, height: bar.length,
                        fill: "#4c78a8", "data-label": bar.label,
                    });
                } else {
                    el(svg, "rect", {
                        x: 0, y: along, width: bar.length, height: thickness,
                        fill: "#4c78a8", "data-label": bar.label,
                    });
                }
            });
            break;
        }

        case "scatterplot":
            for (const [x, y] of geom.marks) {
                el(svg, "circle", {
                    cx: x, cy: y, r: geom.radius,
                    fill: "#4c78a8", "fill-opacity": 0.6,
                });
            }
            break;

        case "heatmap": {
            let max = 0;
            for (const row of geom.counts) {
                for (const v of row) {
                    max = Math.max(max, v);
                }
            }
            geom.counts.forEach((row, j) => {
                row.forEach((count, i) => {
                    el(svg, "rect", {
                        x: i * geom.cell_width,
                        y: height - (j + 1) * geom.cell_height,
                        width: geom.cell_width, height: geom.cell_height,
                        fill: "#377eb8",
                        "fill-opacity": max > 0 ? count / max : 0,
                    });
                });
            });
            break;
        }

        case "adjacency_matrix":
            for (const [i, j] of geom.cells) {
                el(svg, "rect", {
                    x: geom.gutter + i * geom.cell_size,
                    y: geom.gutter + j * geom.cell_size,
                    width: geom.cell_size, height: geom.cell_size,
                    fill: "#333333",
                });
            }
            break;

        case "arc_diagram": {
            const baseline = height - 20;
            for (const [i, j] of geom.arcs) {
                const x0 = geom.nodes[i].x;
                const x1 = geom.nodes[j].x;
                const r = Math.abs(x1 - x0) / 2;
                el(svg, "path", {
                    d: `M${x0},${baseline} A${r},${r} 0 0 1 ${x1},${baseline}`,
                    fill: "none", stroke: "#888888", "stroke-opacity": 0.6,
                });
            }
            for (const node of geom.nodes) {
                el(svg, "circle", {
                    cx: node.x, cy: baseline, r: 2.5,
                    fill: "#333333", "data-id": node.id,
                });
            }
            break;
        }

        case "node_link":
            for (const [i, j] of geom.links) {
                el(svg, "line", {
                    x1: geom.nodes[i].x, y1: geom.nodes[i].y,
                    x2: geom.nodes[j].x, y2: geom.nodes[j].y,
                    stroke: "#bbbbbb",
                });
            }
            for (const node of geom.nodes) {
                el(svg, "circle", {
                    cx: node.x, cy: node.y, r: 3,
                    fill: "#4c78a8", "data-id": node.id,
                });
            }
            break;
    }
}
