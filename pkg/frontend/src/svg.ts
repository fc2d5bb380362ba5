/** Hand-rolled SVG primitives: scales, axes, markers. No DOM needed. */

export interface Extent {
    min: number;
    max: number;
}

export function extentOf(values: number[], fallback: Extent = { min: 0, max: 1 }): Extent {
    if (values.length === 0) return fallback;
    let min = Math.min(...values);
    let max = Math.max(...values);
    if (min === max) { min -= 0.5; max += 0.5; }
    const pad = (max - min) * 0.05;
    return { min: min - pad, max: max + pad };
}

export class LinearScale {
    constructor(readonly domain: Extent, readonly range: Extent) {}

    apply(x: number): number {
        const t = (x - this.domain.min) / (this.domain.max - this.domain.min);
        return this.range.min + t * (this.range.max - this.range.min);
    }

    ticks(count = 5): number[] {
        const span = this.domain.max - this.domain.min;
        const rawStep = span / count;
        const power = Math.pow(10, Math.floor(Math.log10(rawStep)));
        const step = [1, 2, 5, 10].map(m => m * power)
            .find(s => span / s <= count) ?? power * 10;
        const start = Math.ceil(this.domain.min / step) * step;
        const out: number[] = [];
        for (let v = start; v <= this.domain.max + 1e-9; v += step) {
            out.push(Number(v.toFixed(10)));
        }
        return out;
    }
}

export function escapeText(text: string): string {
    return text.replace(/&/g, "&amp;").replace(/</g, "&lt;").replace(/>/g, "&gt;");
}

const fmt = (x: number) => Number(x.toFixed(2)).toString();

export interface Frame {
    left: number;
    top: number;
    width: number;
    height: number;
    x: LinearScale;
    y: LinearScale;
}

/** Plot frame with box, ticks and axis labels; returns SVG fragments. */
export function makeFrame(
    left: number, top: number, width: number, height: number,
    xDomain: Extent, yDomain: Extent, xLabel: string, yLabel: string,
    title = "",
): { frame: Frame; markup: string } {
    const x = new LinearScale(xDomain, { min: left, max: left + width });
    const y = new LinearScale(yDomain, { min: top + height, max: top });
    const parts: string[] = [];
    parts.push(`<rect x="${left}" y="${top}" width="${width}" height="${height}" fill="white" stroke="#333"/>`);
    for (const tick of x.ticks()) {
        const px = x.apply(tick);
        parts.push(`<line x1="${fmt(px)}" y1="${top + height}" x2="${fmt(px)}" y2="${top + height + 4}" stroke="#333"/>`);
        parts.push(`<text x="${fmt(px)}" y="${top + height + 16}" font-size="10" text-anchor="middle">${fmt(tick)}</text>`);
    }
    for (const tick of y.ticks()) {
        const py = y.apply(tick);
        parts.push(`<line x1="${left - 4}" y1="${fmt(py)}" x2="${left}" y2="${fmt(py)}" stroke="#333"/>`);
        parts.push(`<text x="${left - 7}" y="${fmt(py + 3)}" font-size="10" text-anchor="end">${fmt(tick)}</text>`);
    }
    parts.push(`<text x="${left + width / 2}" y="${top + height + 32}" font-size="12" text-anchor="middle">${escapeText(xLabel)}</text>`);
    parts.push(`<text x="${left - 38}" y="${top + height / 2}" font-size="12" text-anchor="middle" transform="rotate(-90 ${left - 38} ${top + height / 2})">${escapeText(yLabel)}</text>`);
    if (title) {
        parts.push(`<text x="${left + width / 2}" y="${top - 8}" font-size="13" font-weight="bold" text-anchor="middle">${escapeText(title)}</text>`);
    }
    return {
        frame: { left, top, width, height, x, y },
        markup: parts.join("\n"),
    };
}

/** Filled circle: the divergent-group marker. */
export function circleMarker(px: number, py: number, color: string): string {
    return `<circle cx="${fmt(px)}" cy="${fmt(py)}" r="3" fill="${color}" fill-opacity="0.7"/>`;
}

/** Open square: the non-divergent-group marker. */
export function squareMarker(px: number, py: number, color: string): string {
    return `<rect x="${fmt(px - 2.6)}" y="${fmt(py - 2.6)}" width="5.2" height="5.2" fill="none" stroke="${color}" stroke-opacity="0.8"/>`;
}

export function noDataAnnotation(frame: Frame): string {
    const cx = frame.left + frame.width / 2;
    const cy = frame.top + frame.height / 2;
    return `<text x="${cx}" y="${cy}" font-size="14" fill="#777" text-anchor="middle">no data</text>`;
}

export function svgDocument(width: number, height: number, body: string): string {
    return (
        `<svg xmlns="http://www.w3.org/2000/svg" width="${width}" height="${height}" ` +
        `viewBox="0 0 ${width} ${height}" font-family="sans-serif">\n` +
        `<rect width="${width}" height="${height}" fill="white"/>\n` +
        body +
        "\n</svg>\n"
    );
}
