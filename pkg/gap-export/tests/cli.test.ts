import assert from "node:assert/strict";
import { spawnSync } from "node:child_process";
import { mkdtempSync, readFileSync, writeFileSync } from "node:fs";
import { tmpdir } from "node:os";
import path from "node:path";
import { test } from "node:test";
import { fileURLToPath } from "node:url";

const PKG = path.resolve(path.dirname(fileURLToPath(import.meta.url)), "..", "..");
const CLI = path.join(PKG, "dist", "src", "cli.js");
const fixture = (name: string) => path.join(PKG, "fixtures", name);

function run(args: string[]) {
  const res = spawnSync("node", [CLI, ...args], { encoding: "utf-8" });
  return { status: res.status, out: res.stdout, err: res.stderr };
}

test("convert writes the document to a file", () => {
  const dir = mkdtempSync(path.join(tmpdir(), "gap-export-cli-"));
  const out = path.join(dir, "a5.json");
  const res = run(["convert", fixture("a5.dump.txt"), "-o", out]);
  assert.equal(res.status, 0, res.err);
  const doc = JSON.parse(readFileSync(out, "utf-8"));
  assert.equal(doc.group, "A5");
});

test("convert is bit-stable for a fixed input", () => {
  const first = run(["convert", fixture("d8.dump.txt")]);
  const second = run(["convert", fixture("d8.dump.txt")]);
  assert.equal(first.status, 0);
  assert.equal(first.out, second.out);
});

test("grammar errors exit nonzero and name the offending block", () => {
  const dir = mkdtempSync(path.join(tmpdir(), "gap-export-cli-"));
  const bad = path.join(dir, "bad.dump.txt");
  const text = readFileSync(fixture("s3.dump.txt"), "utf-8")
    .split("\n").filter((l) => !l.startsWith("%% PowerMap")).join("\n");
  writeFileSync(bad, text);
  const res = run(["convert", bad]);
  assert.equal(res.status, 1);
  assert.match(res.err, /PowerMap/);
});

test("verify exits zero on a matched pair and one on a mismatch", () => {
  const dir = mkdtempSync(path.join(tmpdir(), "gap-export-cli-"));
  const out = path.join(dir, "s3.json");
  assert.equal(run(["convert", fixture("s3.dump.txt"), "-o", out]).status, 0);
  assert.equal(run(["verify", out, fixture("s3.dump.txt")]).status, 0);
  const doc = JSON.parse(readFileSync(out, "utf-8"));
  doc.characters[2].values["2a"] = "5";
  writeFileSync(out, JSON.stringify(doc));
  const res = run(["verify", out, fixture("s3.dump.txt")]);
  assert.equal(res.status, 1);
  assert.match(res.err, /chi3.*2a/);
});

test("unknown commands print usage and exit 2", () => {
  assert.equal(run(["frobnicate"]).status, 2);
});
