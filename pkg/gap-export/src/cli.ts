#!/usr/bin/env node
// gap-export convert <dump> [-o <json>]
// gap-export verify <json> <dump>

import { readFileSync, writeFileSync } from "node:fs";
import process from "node:process";

import { convert, serializeTable } from "./convert.js";
import { DumpError, parseDump } from "./dump.js";
import { renderMismatches, verify } from "./verify.js";

function usage(): number {
  console.error(
    "usage: gap-export convert <dump> [-o <json>]\n" +
    "       gap-export verify <json> <dump>");
  return 2;
}

export function main(argv: string[]): number {
  const [command, ...rest] = argv;
  try {
    if (command === "convert") {
      const outIndex = rest.indexOf("-o");
      let outPath: string | undefined;
      if (outIndex >= 0) {
        outPath = rest[outIndex + 1];
        if (!outPath) return usage();
        rest.splice(outIndex, 2);
      }
      if (rest.length !== 1) return usage();
      const record = parseDump(readFileSync(rest[0], "utf-8"));
      const text = serializeTable(convert(record));
      if (outPath) {
        writeFileSync(outPath, text);
      } else {
        process.stdout.write(text);
      }
      return 0;
    }
    if (command === "verify") {
      if (rest.length !== 2) return usage();
      const mismatches = verify(
        readFileSync(rest[0], "utf-8"), readFileSync(rest[1], "utf-8"));
      if (mismatches.length) {
        console.error(renderMismatches(mismatches));
        return 1;
      }
      return 0;
    }
    return usage();
  } catch (err) {
    if (err instanceof DumpError) {
      console.error(`error: ${err.message}`);
      return 1;
    }
    if (err instanceof Error && "code" in err) {
      console.error(`error: ${err.message}`);
      return 1;
    }
    throw err;
  }
}

process.exit(main(process.argv.slice(2)));
