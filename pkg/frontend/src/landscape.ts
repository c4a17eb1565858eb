// Client-side decoding of landscape JSON: expand the run-length rows into a
// dense grid and answer "which view wins at (w, h)?" queries for the minimap
// and for cross-checking the viewport panel.

import type { LandscapeResponse } from "./types";

export interface LandscapeGrid {
    nx: number;
    ny: number;
    wMin: number;
    hMin: number;
    step: number;
    labels: string[];
    /** row-major, index = j * nx + i (j indexes height, i width) */
    cells: Int16Array;
    generationTag: string; // provenance spec hash, used to spot stale grids
}

export function decodeLandscape(doc: LandscapeResponse): LandscapeGrid {
    const ny = doc.rows.length;
    const nx = doc.rows[0].reduce((acc, [, len]) => acc + len, 0);
    const cells = new Int16Array(nx * ny);
    for (let j = 0; j < ny; j++) {
        let i = 0;
        for (const [value, length] of doc.rows[j]) {
            cells.fill(value, j * nx + i, j * nx + i + length);
            i += length;
        }
        if (i !== nx) {
            throw new Error(`row ${j} decodes to ${i} cells, expected ${nx}`);
        }
    }
    return {
        nx,
        ny,
        wMin: doc.region.w_min,
        hMin: doc.region.h_min,
        step: doc.step,
        labels: doc.labels,
        cells,
        generationTag: doc.provenance.spec_hash,
    };
}

/** Grid indices of the cell containing viewport (w, h), clamped to the grid. */
export function cellIndex(grid: LandscapeGrid, w: number, h: number): [number, number] {
    const clamp = (v: number, hi: number) => Math.min(Math.max(v, 0), hi);
    const i = clamp(Math.floor((w - grid.wMin) / grid.step), grid.nx - 1);
    const j = clamp(Math.floor((h - grid.hMin) / grid.step), grid.ny - 1);
    return [i, j];
}

/** The winning view's label at viewport (w, h) according to the landscape. */
export function labelAt(grid: LandscapeGrid, w: number, h: number): string {
    const [i, j] = cellIndex(grid, w, h);
    return grid.labels[grid.cells[j * grid.nx + i]];
}

/** Fraction of the sampled region each label occupies. */
export function areaShares(grid: LandscapeGrid): Map<string, number> {
    const counts = new Map<string, number>();
    for (const value of grid.cells) {
        const label = grid.labels[value];
        counts.set(label, (counts.get(label) ?? 0) + 1);
    }
    const total = grid.cells.length;
    const shares = new Map<string, number>();
    for (const [label, count] of counts) {
        shares.set(label, count / total);
    }
    return shares;
}
