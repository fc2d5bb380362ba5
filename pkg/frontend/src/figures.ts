/** The three figure kinds rendered from sweep / bins CSV tables.
 *
 * Rendering consumes the two-decimal display columns only; exact `p/q`
 * columns are for analysis, not plotting.  Divergent groups draw as filled
 * orange circles, non-divergent groups as open blue squares.
 */

import { Table, cellNumber, requireColumns } from "./csv";
import {
    circleMarker,
    extentOf,
    makeFrame,
    noDataAnnotation,
    squareMarker,
    svgDocument,
} from "./svg";

export const DIVERGENT_COLOR = "#e66100";
export const NON_DIVERGENT_COLOR = "#1f77b4";

interface ScorePoint {
    meanMotivation: number;
    divergent: boolean;
    scores: Record<string, number | null>;
}

const SCORE_COLUMNS = ["mga", "all", "dd", "vl"];

function readScorePoints(tables: { table: Table; file: string }[]): ScorePoint[] {
    const points: ScorePoint[] = [];
    for (const { table, file } of tables) {
        const at = requireColumns(
            table, ["mean_motivation", "divergent", ...SCORE_COLUMNS], file,
        );
        for (const row of table.rows) {
            const meanMotivation = cellNumber(row[at.mean_motivation]);
            if (meanMotivation === null) continue;
            const scores: Record<string, number | null> = {};
            for (const name of SCORE_COLUMNS) scores[name] = cellNumber(row[at[name]]);
            points.push({
                meanMotivation,
                divergent: row[at.divergent] === "true",
                scores,
            });
        }
    }
    return points;
}

function scatterInto(
    left: number, top: number, width: number, height: number,
    points: ScorePoint[], score: string, title: string,
): string {
    const usable = points.filter(p => p.scores[score] !== null);
    const xDomain = extentOf(usable.map(p => p.meanMotivation));
    const yDomain = extentOf(usable.map(p => p.scores[score] as number), { min: 0, max: 1 });
    const { frame, markup } = makeFrame(
        left, top, width, height, xDomain, yDomain,
        "mean motivation", `${title} score`, title,
    );
    const parts = [markup];
    if (usable.length === 0) {
        parts.push(noDataAnnotation(frame));
        return parts.join("\n");
    }
    for (const point of usable) {
        const px = frame.x.apply(point.meanMotivation);
        const py = frame.y.apply(point.scores[score] as number);
        parts.push(point.divergent
            ? circleMarker(px, py, DIVERGENT_COLOR)
            : squareMarker(px, py, NON_DIVERGENT_COLOR));
    }
    return parts.join("\n");
}

/** MGA against mean motivation, divergent and non-divergent point classes. */
export function scatterByDivergence(tables: { table: Table; file: string }[]): string {
    const points = tables.flatMap(({ table, file }) => {
        const at = requireColumns(table, ["mean_motivation", "divergent", "mga"], file);
        return table.rows.flatMap(row => {
            const meanMotivation = cellNumber(row[at.mean_motivation]);
            const mga = cellNumber(row[at.mga]);
            if (meanMotivation === null || mga === null) return [];
            return [{ meanMotivation, mga, divergent: row[at.divergent] === "true" }];
        });
    });
    const xDomain = extentOf(points.map(p => p.meanMotivation));
    const yDomain = extentOf(points.map(p => p.mga), { min: 0, max: 1 });
    const { frame, markup } = makeFrame(
        60, 30, 420, 320, xDomain, yDomain, "mean motivation", "MGA score",
        "goal achievement by group divergence",
    );
    const parts = [markup];
    if (points.length === 0) {
        parts.push(noDataAnnotation(frame));
    } else {
        for (const point of points) {
            const px = frame.x.apply(point.meanMotivation);
            const py = frame.y.apply(point.mga);
            parts.push(point.divergent
                ? circleMarker(px, py, DIVERGENT_COLOR)
                : squareMarker(px, py, NON_DIVERGENT_COLOR));
        }
        parts.push(
            `<circle cx="342" cy="44" r="3" fill="${DIVERGENT_COLOR}"/>`,
            `<text x="350" y="48" font-size="11">divergent</text>`,
            `<rect x="339.4" y="57.4" width="5.2" height="5.2" fill="none" stroke="${NON_DIVERGENT_COLOR}"/>`,
            `<text x="350" y="64" font-size="11">non-divergent</text>`,
        );
    }
    return svgDocument(540, 400, parts.join("\n"));
}

/** Top-divergent minus top-non-divergent MGA per bin, with a MAD-sum ribbon. */
export function binnedDifferenceRibbon(tables: { table: Table; file: string }[]): string {
    interface BinPoint { mid: number; diff: number; ribbon: number }
    const points: BinPoint[] = [];
    for (const { table, file } of tables) {
        const at = requireColumns(table, ["bin_low", "bin_high", "diff", "ribbon"], file);
        for (const row of table.rows) {
            const low = cellNumber(row[at.bin_low]);
            const high = cellNumber(row[at.bin_high]);
            const diff = cellNumber(row[at.diff]);
            if (low === null || high === null || diff === null) continue;
            points.push({
                mid: (low + high) / 2,
                diff,
                ribbon: cellNumber(row[at.ribbon]) ?? 0,
            });
        }
    }
    points.sort((a, b) => a.mid - b.mid);
    const xDomain = extentOf(points.map(p => p.mid));
    const yDomain = extentOf(
        points.flatMap(p => [p.diff - p.ribbon / 2, p.diff + p.ribbon / 2]),
        { min: -1, max: 1 },
    );
    if (yDomain.min > 0) yDomain.min = -0.05;
    if (yDomain.max < 0) yDomain.max = 0.05;
    const { frame, markup } = makeFrame(
        60, 30, 420, 320, xDomain, yDomain,
        "mean motivation (bin midpoint)", "top divergent MGA - top non-divergent MGA",
        "edge of the best divergent group",
    );
    const parts = [markup];
    if (points.length === 0) {
        parts.push(noDataAnnotation(frame));
        return svgDocument(540, 400, parts.join("\n"));
    }
    const px = (p: BinPoint) => frame.x.apply(p.mid);
    if (points.length > 1) {
        const upper = points.map(p => `${px(p).toFixed(2)},${frame.y.apply(p.diff + p.ribbon / 2).toFixed(2)}`);
        const lower = [...points].reverse().map(
            p => `${px(p).toFixed(2)},${frame.y.apply(p.diff - p.ribbon / 2).toFixed(2)}`,
        );
        parts.push(`<polygon points="${upper.join(" ")} ${lower.join(" ")}" fill="${DIVERGENT_COLOR}" fill-opacity="0.25"/>`);
        const line = points.map(p => `${px(p).toFixed(2)},${frame.y.apply(p.diff).toFixed(2)}`);
        parts.push(`<polyline points="${line.join(" ")}" fill="none" stroke="${DIVERGENT_COLOR}" stroke-width="1.5"/>`);
    }
    const zero = frame.y.apply(0);
    parts.push(`<line x1="${frame.left}" y1="${zero.toFixed(2)}" x2="${frame.left + frame.width}" y2="${zero.toFixed(2)}" stroke="#999" stroke-dasharray="4 3"/>`);
    for (const p of points) {
        parts.push(circleMarker(px(p), frame.y.apply(p.diff), DIVERGENT_COLOR));
    }
    return svgDocument(540, 400, parts.join("\n"));
}

/** Four scatter panels: MGA and ALL on top, VL and DD below. */
export function scorePanels(tables: { table: Table; file: string }[]): string {
    const points = readScorePoints(tables);
    const panels: [string, string][] = [
        ["mga", "MGA"], ["all", "ALL"], ["vl", "VL"], ["dd", "DD"],
    ];
    const parts: string[] = [];
    const panelWidth = 330;
    const panelHeight = 240;
    panels.forEach(([score, title], index) => {
        const column = index % 2;
        const rowIndex = Math.floor(index / 2);
        parts.push(scatterInto(
            60 + column * (panelWidth + 80),
            40 + rowIndex * (panelHeight + 80),
            panelWidth, panelHeight, points, score, title,
        ));
    });
    return svgDocument(880, 680, parts.join("\n"));
}
