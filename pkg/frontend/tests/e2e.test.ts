// End-to-end checks against a live service instance spawned for this file.
// The playground must agree with the landscape JSON at the same (w, h) cells
// and reflect constraint edits in refetched landscapes.

import { spawn, type ChildProcess } from "node:child_process";
import { fileURLToPath } from "node:url";
import { dirname, join } from "node:path";
import { afterAll, beforeAll, describe, expect, it } from "vitest";

import { createPlayground, type Playground } from "../src/app";
import { areaShares, labelAt, type LandscapeGrid } from "../src/landscape";

const HERE = dirname(fileURLToPath(import.meta.url));
const ASSETS = join(HERE, "..", "..", "src", "viewscape", "assets");
const PORT = 8471;
const BASE = `http://127.0.0.1:${PORT}`;
const STEP = 16;

let service: ChildProcess;
let pg: Playground;

async function waitForService(): Promise<void> {
    for (let attempt = 0; attempt < 300; attempt++) {
        try {
            const res = await fetch(`${BASE}/api/meta`);
            if (res.ok) {
                return;
            }
        } catch {
            // not up yet
        }
        await new Promise((resolve) => setTimeout(resolve, 200));
    }
    throw new Error("service did not come up");
}

beforeAll(async () => {
    service = spawn("viewscape", [
        "serve",
        "--spec", join(ASSETS, "spec_population.json"),
        "--data", join(ASSETS, "world_population.geojson"),
        "--port", String(PORT),
    ], { stdio: "ignore" });
    await waitForService();
    const root = document.createElement("div");
    document.body.appendChild(root);
    pg = createPlayground(root, BASE, { landscapeStep: STEP });
    await pg.ready;
});

afterAll(() => {
    service?.kill();
});

function grid(): LandscapeGrid {
    const g = pg.minimap.landscape;
    if (!g) {
        throw new Error("landscape not loaded");
    }
    return g;
}

/** (w, h) of a cell's sampled corner, exactly what the landscape rasterized. */
function cellCorner(g: LandscapeGrid, i: number, j: number): [number, number] {
    return [g.wMin + i * g.step, g.hMin + j * g.step];
}

function labelOf(g: LandscapeGrid, i: number, j: number): string {
    return g.labels[g.cells[j * g.nx + i]];
}

/** Find a vertical neighbor pair (same w) straddling the a/b boundary. */
function findBoundaryPair(g: LandscapeGrid, a: string, b: string): [number, number] {
    for (let i = 1; i < g.nx; i++) {
        for (let j = 1; j < g.ny - 1; j++) {
            if (labelOf(g, i, j) === b && labelOf(g, i, j + 1) === a) {
                return [i, j];
            }
        }
    }
    throw new Error(`no ${a}/${b} boundary found`);
}

function drag(dx: number, dy: number): void {
    const handle = pg.panel.element.querySelector(".resize-handle")!;
    handle.dispatchEvent(new MouseEvent("pointerdown", {
        bubbles: true, clientX: 0, clientY: 0,
    }));
    document.dispatchEvent(new MouseEvent("pointermove", {
        bubbles: true, clientX: dx, clientY: dy,
    }));
    document.dispatchEvent(new MouseEvent("pointerup", { bubbles: true }));
}

describe("playground against the live service", () => {
    it("dragging across the circle-map/Dorling boundary flips the view where the landscape predicts", async () => {
        const g = grid();
        const [i, j] = findBoundaryPair(g, "circle_map", "dorling");
        const [wBelow, hBelow] = cellCorner(g, i, j);     // dorling side
        const [wAbove, hAbove] = cellCorner(g, i, j + 1); // circle-map side

        pg.panel.setSize(wAbove, hAbove);
        await pg.panel.settled();
        expect(pg.panel.currentView).toBe("circle_map");
        expect(pg.panel.currentView).toBe(labelAt(g, wAbove, hAbove));

        // drag the bottom-right handle up by one landscape cell
        drag(wBelow - wAbove, hBelow - hAbove);
        await pg.panel.settled();
        expect(pg.panel.currentView).toBe("dorling");
        expect(pg.panel.currentView).toBe(labelAt(g, wBelow, hBelow));
        expect(pg.panel.size).toEqual({ width: wBelow, height: hBelow });
    });

    it("keeps the minimap cursor on the panel's size and honors click-to-set", async () => {
        const g = grid();
        // a cell well inside the bar-chart band: short and wide
        const i = Math.floor(g.nx * 0.6);
        const j = 2;
        const [w, h] = cellCorner(g, i, j);

        // clicking the minimap at that cell resizes the panel to the cell center
        const cellPx = 2;
        pg.minimap.toggle(true);
        const svg = pg.minimap.element.querySelector("svg")!;
        svg.dispatchEvent(new MouseEvent("click", {
            bubbles: true,
            clientX: (i + 0.5) * cellPx,
            clientY: (g.ny - 1 - j + 0.5) * cellPx,
        }));
        await pg.panel.settled();

        const size = pg.panel.size;
        expect(size.width).toBe(Math.round(w + g.step / 2));
        expect(size.height).toBe(Math.round(h + g.step / 2));
        // cursor tracks the panel, and the panel shows what the cursor's cell says
        expect(pg.minimap.labelAtCursor()).toBe(labelOf(g, i, j));
        expect(pg.panel.currentView).toBe(labelOf(g, i, j));
    });

    it("raising min circle radius 2 -> 4 shrinks the circle-map region", async () => {
        const before = areaShares(grid()).get("circle_map") ?? 0;
        expect(before).toBeGreaterThan(0);
        const generationBefore = pg.editor.currentGeneration;

        await pg.editor.setThreshold(0, 0, 4);
        expect(pg.editor.currentGeneration).toBe(generationBefore + 1);
        await pg.minimap.refresh();

        const after = areaShares(grid()).get("circle_map") ?? 0;
        expect(after).toBeLessThan(before);

        // restore so later tests (and reruns) see the shipped spec
        await pg.editor.setThreshold(0, 0, 2);
        await pg.minimap.refresh();
        expect(areaShares(grid()).get("circle_map")).toBeCloseTo(before, 10);
    });

    it("rejects invalid edits inline without touching the active spec", async () => {
        const generationBefore = pg.editor.currentGeneration;
        await pg.editor.setThreshold(0, 0, -1);
        expect(pg.editor.errorText(0, 0)).toMatch(/threshold must be positive/);
        expect(pg.editor.input(0, 0).value).toBe("2");
        expect(pg.editor.currentGeneration).toBe(generationBefore);
        const meta = await pg.client.meta();
        expect(meta.generation).toBe(generationBefore);
    });

    it("shows a connection banner when the service is unreachable", async () => {
        const { createPlayground: create } = await import("../src/app");
        const root = document.createElement("div");
        document.body.appendChild(root);
        const dead = create(root, `http://127.0.0.1:${PORT + 1}`);
        await dead.ready.catch(() => undefined);
        dead.panel.setSize(400, 300);
        await dead.panel.settled();
        expect(dead.panel.offline).toBe(true);
    });
});
