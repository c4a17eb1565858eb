import { describe, expect, it } from "vitest";

import { areaShares, cellIndex, decodeLandscape, labelAt } from "../src/landscape";
import type { LandscapeResponse } from "../src/types";

const DOC: LandscapeResponse = {
    region: { w_min: 0, w_max: 40, h_min: 0, h_max: 30 },
    step: 10,
    labels: ["map", "bars", "(fallback)"],
    rows: [
        [[2, 1], [1, 3]],
        [[1, 4]],
        [[0, 2], [1, 2]],
    ],
    provenance: { spec_hash: "abc", dataset_hash: "def" },
};

describe("decodeLandscape", () => {
    it("expands run-length rows into a dense grid", () => {
        const grid = decodeLandscape(DOC);
        expect(grid.nx).toBe(4);
        expect(grid.ny).toBe(3);
        expect(Array.from(grid.cells)).toEqual([2, 1, 1, 1, 1, 1, 1, 1, 0, 0, 1, 1]);
    });

    it("rejects rows whose runs do not cover the grid width", () => {
        const broken = { ...DOC, rows: [[[0, 4]], [[0, 3]], [[0, 4]]] as never };
        expect(() => decodeLandscape(broken)).toThrow(/row 1/);
    });
});

describe("labelAt", () => {
    const grid = decodeLandscape(DOC);

    it("samples the cell containing (w, h)", () => {
        expect(labelAt(grid, 5, 5)).toBe("(fallback)");
        expect(labelAt(grid, 15, 5)).toBe("bars");
        expect(labelAt(grid, 5, 25)).toBe("map");
        expect(labelAt(grid, 35, 25)).toBe("bars");
    });

    it("clamps out-of-region queries to the nearest cell", () => {
        expect(labelAt(grid, -100, -100)).toBe("(fallback)");
        expect(labelAt(grid, 1e6, 1e6)).toBe("bars");
    });

    it("uses the min corner convention: the boundary cell belongs upward", () => {
        expect(cellIndex(grid, 10, 0)).toEqual([1, 0]);
        expect(cellIndex(grid, 9.999, 0)).toEqual([0, 0]);
    });
});

describe("areaShares", () => {
    it("sums to one over the decoded grid", () => {
        const shares = areaShares(decodeLandscape(DOC));
        expect(shares.get("map")).toBeCloseTo(2 / 12);
        expect(shares.get("bars")).toBeCloseTo(9 / 12);
        expect(shares.get("(fallback)")).toBeCloseTo(1 / 12);
        let total = 0;
        for (const share of shares.values()) {
            total += share;
        }
        expect(total).toBeCloseTo(1);
    });
});
