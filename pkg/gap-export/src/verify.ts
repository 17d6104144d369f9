// Value-level diff between an interchange document and a dump.

import { convert } from "./convert.js";
import { parseDump } from "./dump.js";

export interface Mismatch {
  where: string;
  expected: string;
  actual: string;
}

const canon = (s: string) => s.replace(/\s+/g, "");

export function verify(jsonText: string, dumpText: string): Mismatch[] {
  const fromDump = convert(parseDump(dumpText, () => undefined));
  const doc = JSON.parse(jsonText);
  const out: Mismatch[] = [];
  const push = (where: string, expected: unknown, actual: unknown) =>
    out.push({ where, expected: String(expected), actual: String(actual) });

  if (doc.group !== fromDump.group) push("group", fromDump.group, doc.group);
  const classesByName = new Map(
    (doc.classes ?? []).map((c: any) => [c.name, c]));
  for (const want of fromDump.classes) {
    const got: any = classesByName.get(want.name);
    if (!got) {
      push(`class ${want.name}`, "present", "missing");
      continue;
    }
    if (got.order !== want.order) {
      push(`class ${want.name}, order`, want.order, got.order);
    }
    if (want.size !== undefined && got.size !== want.size) {
      push(`class ${want.name}, size`, want.size, got.size);
    }
    for (const [p, target] of Object.entries(want.powermap ?? {})) {
      const actual = got.powermap?.[p];
      if (actual !== target) {
        push(`class ${want.name}, powermap ${p}`, target, actual);
      }
    }
  }

  const charsById = new Map((doc.characters ?? []).map((c: any) => [c.id, c]));
  for (const want of fromDump.characters) {
    const got: any = charsById.get(want.id);
    if (!got) {
      push(`character ${want.id}`, "present", "missing");
      continue;
    }
    if (got.degree !== want.degree) {
      push(`character ${want.id}, degree`, want.degree, got.degree);
    }
    if (JSON.stringify(got.kind) !== JSON.stringify(want.kind)) {
      push(`character ${want.id}, kind`, JSON.stringify(want.kind),
           JSON.stringify(got.kind));
    }
    for (const [cls, value] of Object.entries(want.values)) {
      const actual = got.values?.[cls];
      if (actual === undefined || canon(actual) !== canon(value)) {
        push(`character ${want.id}, class ${cls}`, value, actual ?? "missing");
      }
    }
    for (const cls of Object.keys(got.values ?? {})) {
      if (!(cls in want.values)) {
        push(`character ${want.id}, class ${cls}`, "absent", got.values[cls]);
      }
    }
  }
  for (const id of charsById.keys()) {
    if (!fromDump.characters.some((c) => c.id === id)) {
      push(`character ${id}`, "absent", "present");
    }
  }
  return out;
}

export function renderMismatches(mismatches: Mismatch[]): string {
  return mismatches
    .map((m) => `${m.where}: expected ${m.expected}, found ${m.actual}`)
    .join("\n");
}
