/**
 * Thin bindings over the qbafx command-line interface.
 *
 * Every call shells out to the installed Python package with `--json` and
 * returns the parsed payload; no argumentation logic lives on this side.
 * Errors reported by the core carry its stable error code (for example
 * "DanglingEdge") on the thrown {@link CoreError}.
 */

import { execFileSync } from "node:child_process";
import { mkdtempSync, rmSync, writeFileSync } from "node:fs";
import { tmpdir } from "node:os";
import { join } from "node:path";

export type Strength = number | string;
export type FinalStrength = number | string | null;
export type Edge = [string, string];

export interface QbafDoc {
  arguments: { id: string; strength?: Strength }[];
  attacks: Edge[];
  supports: Edge[];
}

export type ExplanationKind = "ssi" | "csi" | "nsi";

export interface ExplainOptions {
  /** Semantics name; "stable" routes the query through the `aa` subcommand. */
  semantics?: string;
  /** Reversal class: "acyclic" (default for numeric semantics) or "all". */
  class?: "acyclic" | "all";
  mode?: "strict" | "weak";
  epsilon?: number;
  /** Use the definition-literal enumeration instead of the pruned search. */
  oracle?: boolean;
}

export class CoreError extends Error {
  constructor(
    readonly code: string,
    message: string,
  ) {
    super(message);
    this.name = "CoreError";
  }
}

const PYTHON = process.env.QBAFX_PYTHON ?? "python3";

export function runCli(args: string[]): unknown {
  let stdout: string;
  try {
    stdout = execFileSync(PYTHON, ["-m", "qbafx", ...args, "--json"], {
      encoding: "utf8",
    });
  } catch (err) {
    const stderr = String((err as { stderr?: unknown }).stderr ?? "");
    try {
      const payload = JSON.parse(stderr.trim()) as {
        error: { code: string; message: string };
      };
      throw new CoreError(payload.error.code, payload.error.message);
    } catch (inner) {
      if (inner instanceof CoreError) throw inner;
      throw new CoreError("Error", stderr.trim() || String(err));
    }
  }
  return JSON.parse(stdout);
}

function withTempFile<T>(name: string, contents: unknown, fn: (path: string) => T): T {
  const dir = mkdtempSync(join(tmpdir(), "qbafx-"));
  const path = join(dir, name);
  writeFileSync(path, JSON.stringify(contents));
  try {
    return fn(path);
  } finally {
    rmSync(dir, { recursive: true, force: true });
  }
}

/**
 * Assemble a graph document from parallel pieces.  Strengths may be
 * omitted per argument (attack-only frameworks); validation happens on the
 * core side when the document is used.
 */
export function constructQbaf(
  args: string[],
  strengths: Record<string, Strength>,
  attacks: Edge[] = [],
  supports: Edge[] = [],
): QbafDoc {
  return {
    arguments: [...args].sort().map((id) =>
      id in strengths ? { id, strength: strengths[id] } : { id },
    ),
    attacks: [...attacks].sort(),
    supports: [...supports].sort(),
  };
}

/** Final strengths under a named semantics; undefined strengths are null. */
export function evaluate(
  qbaf: QbafDoc,
  semantics: string,
): Record<string, FinalStrength> {
  return withTempFile("graph.json", qbaf, (path) => {
    const payload = runCli(["evaluate", path, "--semantics", semantics]) as {
      strengths: Record<string, FinalStrength>;
    };
    return payload.strengths;
  });
}

/**
 * Minimal explanation sets for the topics' strength-order change, as
 * sorted lists of argument names (cardinality first, then lexicographic).
 */
export function explain(
  before: QbafDoc,
  after: QbafDoc,
  x: string,
  y: string,
  kind: ExplanationKind,
  options: ExplainOptions = {},
): string[][] {
  const semantics = options.semantics ?? "naive-sum";
  const stable = semantics === "stable";
  const scenario: Record<string, unknown> = {
    before,
    after,
    topics: [x, y],
    class: options.class ?? (stable ? "all" : "acyclic"),
    mode: options.mode ?? "strict",
  };
  if (!stable) {
    scenario.semantics = semantics;
    if (options.epsilon !== undefined) scenario.epsilon = options.epsilon;
  }
  return withTempFile("scenario.json", scenario, (path) => {
    const argv = [stable ? "aa" : "explain", path, "--kind", kind];
    if (options.oracle) argv.push("--oracle");
    const payload = runCli(argv) as Record<ExplanationKind, string[][]>;
    return payload[kind];
  });
}
