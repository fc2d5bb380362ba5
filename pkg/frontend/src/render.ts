/** FigureRequest handling: read CSVs, render SVG, optionally rasterize. */

import { readFileSync, writeFileSync } from "fs";

import { Resvg } from "@resvg/resvg-js";

import { Table, parseCsv } from "./csv";
import { binnedDifferenceRibbon, scatterByDivergence, scorePanels } from "./figures";

export type FigureKind =
    | "scatter-by-divergence"
    | "binned-difference-ribbon"
    | "score-panels";

export const FIGURE_KINDS: FigureKind[] = [
    "scatter-by-divergence",
    "binned-difference-ribbon",
    "score-panels",
];

export interface FigureRequest {
    kind: FigureKind;
    inputs: string[];
    output: string;
    format: "svg" | "png";
}

export function renderSvg(kind: FigureKind, tables: { table: Table; file: string }[]): string {
    switch (kind) {
        case "scatter-by-divergence": return scatterByDivergence(tables);
        case "binned-difference-ribbon": return binnedDifferenceRibbon(tables);
        case "score-panels": return scorePanels(tables);
    }
}

export function render(request: FigureRequest): void {
    if (request.inputs.length === 0) throw new Error("at least one input CSV is required");
    const tables = request.inputs.map(file => ({
        table: parseCsv(readFileSync(file, "utf-8")),
        file,
    }));
    const svg = renderSvg(request.kind, tables);
    if (request.format === "svg") {
        writeFileSync(request.output, svg);
        return;
    }
    const png = new Resvg(svg, { background: "white" }).render().asPng();
    writeFileSync(request.output, png);
}
