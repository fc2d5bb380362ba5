import { readFileSync } from "fs";
import { join } from "path";

import { describe, expect, it } from "vitest";

import { MissingColumnError, parseCsv } from "../src/csv";
import {
    binnedDifferenceRibbon,
    scatterByDivergence,
    scorePanels,
} from "../src/figures";

const FIXTURES = join(__dirname, "fixtures");

function fixture(name: string) {
    return {
        table: parseCsv(readFileSync(join(FIXTURES, name), "utf-8")),
        file: name,
    };
}

const count = (svg: string, needle: RegExp) => (svg.match(needle) ?? []).length;

describe("scatter-by-divergence", () => {
    it("draws one marker per record, split by class", () => {
        const input = fixture("sweep_a2_g2.csv");
        const divergent = input.table.rows.filter(
            row => row[input.table.header.indexOf("divergent")] === "true",
        ).length;
        const svg = scatterByDivergence([input]);
        expect(svg).toContain("<svg");
        // one circle per divergent record plus the legend swatch
        expect(count(svg, /<circle /g)).toBe(divergent + 1);
        // one square per non-divergent record plus legend, frame and background
        expect(count(svg, /<rect /g)).toBe(input.table.rows.length - divergent + 3);
    });

    it("renders axes plus a note when there are no rows", () => {
        const empty = { table: parseCsv("label,mean_motivation,divergent,mga\n"), file: "e.csv" };
        const svg = scatterByDivergence([empty]);
        expect(svg).toContain("no data");
        expect(svg).toContain("<rect");
    });

    it("names a missing column", () => {
        const broken = { table: parseCsv("label,mga\nAB,1.00\n"), file: "broken.csv" };
        expect(() => scatterByDivergence([broken])).toThrowError(MissingColumnError);
        expect(() => scatterByDivergence([broken])).toThrowError(/'mean_motivation'/);
    });
});

describe("binned-difference-ribbon", () => {
    it("omits bins without a difference", () => {
        const input = fixture("bins_a2_g2.csv");
        const diffIndex = input.table.header.indexOf("diff");
        const present = input.table.rows.filter(row => row[diffIndex] !== "").length;
        expect(present).toBeGreaterThan(0);
        expect(present).toBeLessThan(input.table.rows.length);
        const svg = binnedDifferenceRibbon([input]);
        expect(count(svg, /<circle /g)).toBe(present);
        expect(svg).toContain("<polyline");
        expect(svg).toContain("<polygon");
    });

    it("renders a no-data annotation for a header-only file", () => {
        const empty = { table: parseCsv("bin_low,bin_high,top_div,top_nondiv,diff,ribbon\n"), file: "e.csv" };
        expect(binnedDifferenceRibbon([empty])).toContain("no data");
    });

    it("names a missing column", () => {
        const broken = { table: parseCsv("bin_low,bin_high\n"), file: "b.csv" };
        expect(() => binnedDifferenceRibbon([broken])).toThrowError(/'diff'/);
    });
});

describe("score-panels", () => {
    it("draws four titled panels from several sweeps", () => {
        const svg = scorePanels([fixture("sweep_a2_g2.csv"), fixture("sweep_a2_g1.csv")]);
        for (const title of ["MGA score", "ALL score", "VL score", "DD score"]) {
            expect(svg).toContain(title);
        }
        expect(count(svg, /<rect [^>]*stroke="#333"/g)).toBe(4);
    });

    it("needs every score column", () => {
        const broken = { table: parseCsv("mean_motivation,divergent,mga\n"), file: "b.csv" };
        expect(() => scorePanels([broken])).toThrowError(/'all'/);
    });
});
