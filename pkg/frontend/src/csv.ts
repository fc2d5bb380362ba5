/** Small CSV reader for the sweep/bins schemas (quoted fields supported). */

export interface Table {
    header: string[];
    rows: string[][];
}

export class MissingColumnError extends Error {
    readonly column: string;
    readonly file: string;

    constructor(column: string, file: string) {
        super(`missing column '${column}' in ${file}`);
        this.column = column;
        this.file = file;
    }
}

/** Parse CSV text: comma separators, double-quote quoting, LF records. */
export function parseCsv(text: string): Table {
    const records: string[][] = [];
    let field = "";
    let record: string[] = [];
    let quoted = false;
    let i = 0;
    const push = () => { record.push(field); field = ""; };
    const endRecord = () => { push(); records.push(record); record = []; };
    while (i < text.length) {
        const ch = text[i];
        if (quoted) {
            if (ch === '"') {
                if (text[i + 1] === '"') { field += '"'; i += 2; continue; }
                quoted = false; i++; continue;
            }
            field += ch; i++; continue;
        }
        if (ch === '"') { quoted = true; i++; continue; }
        if (ch === ",") { push(); i++; continue; }
        if (ch === "\n") { endRecord(); i++; continue; }
        if (ch === "\r") { i++; continue; }
        field += ch; i++;
    }
    if (field.length > 0 || record.length > 0) endRecord();
    if (records.length === 0) return { header: [], rows: [] };
    return { header: records[0], rows: records.slice(1) };
}

/** Index of each named column; throws MissingColumnError naming the first gap. */
export function requireColumns(
    table: Table, names: string[], file: string,
): Record<string, number> {
    const indices: Record<string, number> = {};
    for (const name of names) {
        const index = table.header.indexOf(name);
        if (index < 0) throw new MissingColumnError(name, file);
        indices[name] = index;
    }
    return indices;
}

/** Display-column cell to number; empty cells become null. */
export function cellNumber(cell: string): number | null {
    if (cell.trim() === "") return null;
    const value = Number(cell);
    return Number.isFinite(value) ? value : null;
}
