// Landscape minimap: the service's landscape raster as a clickable overlay,
// with a crosshair cursor at the viewport panel's current size. Clicking a
// cell sets the viewport to that (w, h).

import type { ApiClient } from "./apiClient";
import { decodeLandscape, labelAt, type LandscapeGrid } from "./landscape";
import { labelColors } from "./palette";

const SVG_NS = "http://www.w3.org/2000/svg";

export interface MinimapOptions {
    /** landscape sampling step requested from the service */
    step?: number;
    /** on-screen pixels per landscape cell */
    cellPx?: number;
    onPick?: (w: number, h: number) => void;
}

export class Minimap {
    readonly element: HTMLElement;
    private readonly svg: SVGSVGElement;
    private grid: LandscapeGrid | null = null;
    private cursor: { w: number; h: number } | null = null;
    private readonly cellPx: number;
    private readonly step: number | undefined;
    private readonly onPick: ((w: number, h: number) => void) | undefined;

    constructor(
        private readonly client: ApiClient,
        root: HTMLElement,
        options: MinimapOptions = {},
    ) {
        this.cellPx = options.cellPx ?? 2;
        this.step = options.step;
        this.onPick = options.onPick;
        const doc = root.ownerDocument;
        this.element = doc.createElement("div");
        this.element.className = "landscape-minimap";
        this.svg = doc.createElementNS(SVG_NS, "svg");
        this.svg.addEventListener("click", (ev) => this.pick(ev as MouseEvent));
        this.element.appendChild(this.svg);
        root.appendChild(this.element);
    }

    get visible(): boolean {
        return !this.element.hidden;
    }

    toggle(show?: boolean): void {
        this.element.hidden = show === undefined ? !this.element.hidden : !show;
    }

    /** The decoded grid, for consistency checks against the viewport panel. */
    get landscape(): LandscapeGrid | null {
        return this.grid;
    }

    labelAtCursor(): string | null {
        if (!this.grid || !this.cursor) {
            return null;
        }
        return labelAt(this.grid, this.cursor.w, this.cursor.h);
    }

    async refresh(): Promise<void> {
        const doc = await this.client.landscape(this.step);
        this.grid = decodeLandscape(doc);
        this.redraw();
    }

    /** Move the crosshair to viewport (w, h); called on every panel resize. */
    setCursor(w: number, h: number): void {
        this.cursor = { w, h };
        this.redraw();
    }

    private redraw(): void {
        const grid = this.grid;
        if (!grid) {
            return;
        }
        const svg = this.svg;
        while (svg.firstChild) {
            svg.removeChild(svg.firstChild);
        }
        const widthPx = grid.nx * this.cellPx;
        const heightPx = grid.ny * this.cellPx;
        svg.setAttribute("width", String(widthPx));
        svg.setAttribute("height", String(heightPx));
        svg.setAttribute("viewBox", `0 0 ${widthPx} ${heightPx}`);
        const colors = labelColors(grid.labels);
        const doc = svg.ownerDocument!;

        // one rect per run keeps the node count manageable (height axis points up)
        for (let j = 0; j < grid.ny; j++) {
            let i = 0;
            while (i < grid.nx) {
                const value = grid.cells[j * grid.nx + i];
                let end = i + 1;
                while (end < grid.nx && grid.cells[j * grid.nx + end] === value) {
                    end += 1;
                }
                const rect = doc.createElementNS(SVG_NS, "rect");
                rect.setAttribute("x", String(i * this.cellPx));
                rect.setAttribute("y", String((grid.ny - 1 - j) * this.cellPx));
                rect.setAttribute("width", String((end - i) * this.cellPx));
                rect.setAttribute("height", String(this.cellPx));
                rect.setAttribute("fill", colors[value]);
                svg.appendChild(rect);
                i = end;
            }
        }

        if (this.cursor) {
            const cx = ((this.cursor.w - grid.wMin) / grid.step) * this.cellPx;
            const cy = heightPx - ((this.cursor.h - grid.hMin) / grid.step) * this.cellPx;
            for (const [x1, y1, x2, y2] of [
                [cx, 0, cx, heightPx],
                [0, cy, widthPx, cy],
            ]) {
                const line = doc.createElementNS(SVG_NS, "line");
                line.setAttribute("x1", String(x1));
                line.setAttribute("y1", String(y1));
                line.setAttribute("x2", String(x2));
                line.setAttribute("y2", String(y2));
                line.setAttribute("stroke", "#000000");
                line.setAttribute("class", "cursor");
                svg.appendChild(line);
            }
        }
    }

    /** Convert a click back to viewport coordinates (cell center). */
    private pick(ev: MouseEvent): void {
        const grid = this.grid;
        if (!grid || !this.onPick) {
            return;
        }
        const rect = (this.svg as unknown as Element).getBoundingClientRect();
        const px = ev.clientX - rect.left;
        const py = ev.clientY - rect.top;
        const i = Math.min(Math.max(Math.floor(px / this.cellPx), 0), grid.nx - 1);
        const jTop = Math.min(Math.max(Math.floor(py / this.cellPx), 0), grid.ny - 1);
        const j = grid.ny - 1 - jTop;
        const w = grid.wMin + (i + 0.5) * grid.step;
        const h = grid.hMin + (j + 0.5) * grid.step;
        this.onPick(w, h);
    }
}
