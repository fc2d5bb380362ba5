/** Command line for the figure renderer.
 *
 * Usage:
 *   node dist/cli.js --kind scatter-by-divergence --input sweep.csv --output fig1.svg
 *   node dist/cli.js --kind binned-difference-ribbon --input bins.csv --output fig2.png
 *   node dist/cli.js --kind score-panels --input s1.csv --input s2.csv --output fig3.svg
 *
 * Exit codes: 0 ok, 1 data error (e.g. a missing column, named in the
 * message), 2 usage error.
 */

import { MissingColumnError } from "./csv";
import { FIGURE_KINDS, FigureKind, FigureRequest, render } from "./render";

const HELP = `render goalgames sweep CSVs as figures

options:
  --kind <kind>      one of: ${FIGURE_KINDS.join(", ")}
  --input <path>     input CSV (repeatable; score-panels accepts several)
  --output <path>    output image path
  --format <svg|png> image format (default: from the output extension)
  --help             this text

scatter-by-divergence and score-panels read sweep CSVs (columns
mean_motivation, divergent, mga[, all, dd, vl]); binned-difference-ribbon
reads the bins CSV (bin_low, bin_high, diff, ribbon).  Bins without a
diff value are omitted from the line.  Divergent groups draw as filled
orange circles, non-divergent groups as open blue squares.`;

export function parseArgs(argv: string[]): FigureRequest {
    let kind: string | undefined;
    const inputs: string[] = [];
    let output: string | undefined;
    let format: string | undefined;
    for (let i = 0; i < argv.length; i++) {
        const flag = argv[i];
        const next = () => {
            const value = argv[++i];
            if (value === undefined) throw new UsageError(`${flag} needs a value`);
            return value;
        };
        switch (flag) {
            case "--kind": kind = next(); break;
            case "--input": inputs.push(next()); break;
            case "--output": output = next(); break;
            case "--format": format = next(); break;
            case "--help": throw new HelpRequested();
            default: throw new UsageError(`unknown option ${flag}`);
        }
    }
    if (!kind || !(FIGURE_KINDS as string[]).includes(kind)) {
        throw new UsageError(`--kind must be one of: ${FIGURE_KINDS.join(", ")}`);
    }
    if (inputs.length === 0) throw new UsageError("--input is required");
    if (!output) throw new UsageError("--output is required");
    if (format === undefined) {
        format = output.toLowerCase().endsWith(".png") ? "png" : "svg";
    }
    if (format !== "svg" && format !== "png") {
        throw new UsageError("--format must be svg or png");
    }
    return { kind: kind as FigureKind, inputs, output, format };
}

export class UsageError extends Error {}
export class HelpRequested extends Error {}

export function main(argv: string[]): number {
    let request: FigureRequest;
    try {
        request = parseArgs(argv);
    } catch (error) {
        if (error instanceof HelpRequested) {
            console.log(HELP);
            return 0;
        }
        console.error(`error: ${(error as Error).message}`);
        return 2;
    }
    try {
        render(request);
    } catch (error) {
        if (error instanceof MissingColumnError) {
            console.error(`error: ${error.message}`);
        } else {
            console.error(`error: ${(error as Error).message}`);
        }
        return 1;
    }
    return 0;
}

if (typeof require !== "undefined" && require.main === module) {
    process.exit(main(process.argv.slice(2)));
}
