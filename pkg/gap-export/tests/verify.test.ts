import assert from "node:assert/strict";
import { readFileSync } from "node:fs";
import path from "node:path";
import { test } from "node:test";
import { fileURLToPath } from "node:url";

import { convert, serializeTable } from "../src/convert.js";
import { parseDump } from "../src/dump.js";
import { renderMismatches, verify } from "../src/verify.js";

const PKG = path.resolve(path.dirname(fileURLToPath(import.meta.url)), "..", "..");
const fixture = (name: string) =>
  readFileSync(path.join(PKG, "fixtures", name), "utf-8");

const a5dump = fixture("a5.dump.txt");
const a5json = serializeTable(convert(parseDump(a5dump, () => undefined)));

test("a matched pair has an empty diff", () => {
  assert.deepEqual(verify(a5json, a5dump), []);
});

test("one perturbed value yields a one-line diff naming character and class", () => {
  const doc = JSON.parse(a5json);
  doc.characters[3].values["3a"] = "2";  // chi4 on 3a, was 1
  const mismatches = verify(JSON.stringify(doc), a5dump);
  assert.equal(mismatches.length, 1);
  const line = renderMismatches(mismatches);
  assert.match(line, /chi4/);
  assert.match(line, /3a/);
});

test("a missing character is reported by id", () => {
  const doc = JSON.parse(a5json);
  doc.characters = doc.characters.filter((c: any) => c.id !== "chi5");
  const mismatches = verify(JSON.stringify(doc), a5dump);
  assert.ok(mismatches.some(
    (m) => m.where === "character chi5" && m.actual === "missing"));
});

test("whitespace differences in values are tolerated", () => {
  const spaced = a5json.replace("-E(5)^2-E(5)^3", "-E(5)^2 - E(5)^3");
  assert.deepEqual(verify(spaced, a5dump), []);
});

test("an extra character in the document is reported", () => {
  const doc = JSON.parse(a5json);
  doc.characters.push({ id: "chi9", kind: "ordinary", degree: 1,
                        values: { "1a": "1" } });
  const mismatches = verify(JSON.stringify(doc), a5dump);
  assert.ok(mismatches.some((m) => m.where === "character chi9"));
});
