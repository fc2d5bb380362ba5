import { mkdtempSync, readFileSync, statSync, writeFileSync } from "fs";
import { tmpdir } from "os";
import { join } from "path";

import { describe, expect, it } from "vitest";

import { main, parseArgs, UsageError } from "../src/cli";
import { render } from "../src/render";

const FIXTURES = join(__dirname, "fixtures");
const SWEEP = join(FIXTURES, "sweep_a2_g2.csv");
const BINS = join(FIXTURES, "bins_a2_g2.csv");

const PNG_MAGIC = Buffer.from([0x89, 0x50, 0x4e, 0x47, 0x0d, 0x0a, 0x1a, 0x0a]);

function tempDir() {
    return mkdtempSync(join(tmpdir(), "figures-"));
}

describe("render", () => {
    it("writes a non-empty SVG", () => {
        const out = join(tempDir(), "fig1.svg");
        render({ kind: "scatter-by-divergence", inputs: [SWEEP], output: out, format: "svg" });
        expect(statSync(out).size).toBeGreaterThan(0);
        expect(readFileSync(out, "utf-8")).toContain("</svg>");
    });

    it("writes a real PNG", () => {
        const out = join(tempDir(), "fig2.png");
        render({ kind: "binned-difference-ribbon", inputs: [BINS], output: out, format: "png" });
        const bytes = readFileSync(out);
        expect(bytes.length).toBeGreaterThan(PNG_MAGIC.length);
        expect(bytes.subarray(0, 8).equals(PNG_MAGIC)).toBe(true);
    });
});

describe("cli", () => {
    it("parses a full invocation", () => {
        const request = parseArgs([
            "--kind", "score-panels", "--input", "a.csv", "--input", "b.csv",
            "--output", "out.png",
        ]);
        expect(request.inputs).toEqual(["a.csv", "b.csv"]);
        expect(request.format).toBe("png");
    });

    it("rejects unknown flags", () => {
        expect(() => parseArgs(["--bogus"])).toThrowError(UsageError);
    });

    it("renders end to end with exit 0", () => {
        const out = join(tempDir(), "fig.svg");
        const code = main([
            "--kind", "scatter-by-divergence", "--input", SWEEP, "--output", out,
        ]);
        expect(code).toBe(0);
        expect(statSync(out).size).toBeGreaterThan(0);
    });

    it("exits 1 naming the column on a broken CSV", () => {
        const dir = tempDir();
        const broken = join(dir, "broken.csv");
        writeFileSync(broken, "label,mga\nAB,1.00\n");
        const errors: string[] = [];
        const original = console.error;
        console.error = (msg: string) => { errors.push(String(msg)); };
        try {
            const code = main([
                "--kind", "scatter-by-divergence", "--input", broken,
                "--output", join(dir, "x.svg"),
            ]);
            expect(code).toBe(1);
        } finally {
            console.error = original;
        }
        expect(errors.join("\n")).toContain("'mean_motivation'");
        expect(errors.join("\n")).toContain("broken.csv");
    });

    it("exits 2 on usage errors", () => {
        const original = console.error;
        console.error = () => undefined;
        try {
            expect(main(["--kind", "nope"])).toBe(2);
            expect(main([])).toBe(2);
        } finally {
            console.error = original;
        }
    });
});
