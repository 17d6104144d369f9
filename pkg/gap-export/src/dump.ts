// Parser for the frozen `%% Key := value` dump snapshot format.
// See docs/dump-format.md for the grammar.

export interface DumpRecord {
  groupName: string;
  orderFactored: [number, number][];
  exponentFactored: [number, number][];
  classNames: string[];
  classOrders: number[];
  classSizes: number[] | null;
  powerMaps: Map<number, number[]>; // prime -> 1-based image class indices
  ordinary: string[][]; // rows of values over all classes
  brauer: Map<number, string[][]>; // prime -> rows over the p-regular classes
  unparsed: string[]; // unrecognized block keys, reported but kept
}

export class DumpError extends Error {
  constructor(message: string, readonly block?: string) {
    super(block ? `${block}: ${message}` : message);
    this.name = "DumpError";
  }
}

interface Block {
  key: string;
  body: string;
  line: number;
}

function splitBlocks(text: string): Block[] {
  const blocks: Block[] = [];
  const lines = text.split(/\r?\n/);
  let current: Block | null = null;
  lines.forEach((line, i) => {
    if (line.startsWith("%%")) {
      if (current) blocks.push(current);
      const m = /^%%\s*([A-Za-z]+(?:\[\d+\])?)\s*:=\s*(.*)$/.exec(line);
      if (!m) {
        throw new DumpError(`malformed block header at line ${i + 1}: ${line}`);
      }
      current = { key: m[1], body: m[2], line: i + 1 };
    } else if (current) {
      current.body += "\n" + line;
    } else if (line.trim() !== "") {
      throw new DumpError(`content before the first block at line ${i + 1}`);
    }
  });
  if (current) blocks.push(current);
  return blocks;
}

// -- GAP-style value readers --------------------------------------------------

function stripOuterBrackets(body: string, block: string): string {
  const s = body.trim().replace(/;$/, "").trim();
  if (!s.startsWith("[") || !s.endsWith("]")) {
    throw new DumpError("expected a [...] list", block);
  }
  return s.slice(1, -1);
}

/** Split a bracketed list body on top-level commas. */
function splitTop(body: string, block: string): string[] {
  const out: string[] = [];
  let depth = 0;
  let cur = "";
  let inString = false;
  for (const ch of body) {
    if (inString) {
      cur += ch;
      if (ch === '"') inString = false;
      continue;
    }
    if (ch === '"') {
      inString = true;
      cur += ch;
    } else if (ch === "[") {
      depth += 1;
      cur += ch;
    } else if (ch === "]") {
      depth -= 1;
      if (depth < 0) throw new DumpError("unbalanced brackets", block);
      cur += ch;
    } else if (ch === "," && depth === 0) {
      out.push(cur);
      cur = "";
    } else {
      cur += ch;
    }
  }
  if (depth !== 0) throw new DumpError("unbalanced brackets", block);
  if (cur.trim() !== "") out.push(cur);
  return out.map((s) => s.trim());
}

function readIntList(body: string, block: string): number[] {
  return splitTop(stripOuterBrackets(body, block), block).map((tok) => {
    if (!/^-?\d+$/.test(tok)) {
      throw new DumpError(`expected an integer, found ${JSON.stringify(tok)}`, block);
    }
    return parseInt(tok, 10);
  });
}

function readStringList(body: string, block: string): string[] {
  return splitTop(stripOuterBrackets(body, block), block).map((tok) => {
    const m = /^"([^"]*)"$/.exec(tok);
    if (!m) throw new DumpError(`expected a quoted string, found ${tok}`, block);
    return m[1];
  });
}

function readPairList(body: string, block: string): [number, number][] {
  return splitTop(stripOuterBrackets(body, block), block).map((tok) => {
    const pair = readIntList(tok, block);
    if (pair.length !== 2) throw new DumpError(`expected [p, e] pairs`, block);
    return [pair[0], pair[1]] as [number, number];
  });
}

const CYC_VALUE = /^-?\d*\*?(?:E\(\d+\)(?:\^-?\d+)?)?(?:[+-]\d*\*?(?:E\(\d+\)(?:\^-?\d+)?)?)*$/;

function readValueRows(body: string, block: string): string[][] {
  return splitTop(stripOuterBrackets(body, block), block).map((row) =>
    splitTop(stripOuterBrackets(row, block), block).map((tok) => {
      const value = tok.replace(/\s+/g, "");
      if (value === "" || !CYC_VALUE.test(value)) {
        throw new DumpError(`bad character value ${JSON.stringify(tok)}`, block);
      }
      return value;
    })
  );
}

// -- assembly -----------------------------------------------------------------

export function parseDump(text: string, warn?: (msg: string) => void): DumpRecord {
  const blocks = splitBlocks(text);
  const byKey = new Map<string, Block>();
  const powerMaps = new Map<number, number[]>();
  const brauer = new Map<number, string[][]>();
  const unparsed: string[] = [];

  for (const block of blocks) {
    const indexed = /^([A-Za-z]+)\[(\d+)\]$/.exec(block.key);
    if (indexed) {
      const [, name, arg] = indexed;
      const p = parseInt(arg, 10);
      if (name === "PowerMap") {
        powerMaps.set(p, readIntList(block.body, block.key));
      } else if (name === "BrauerTable") {
        brauer.set(p, readValueRows(block.body, block.key));
      } else {
        unparsed.push(block.key);
      }
    } else if (
      ["GroupName", "OrderFactored", "ExponentFactored", "ClassNames",
       "OrdersClassRepresentatives", "SizesConjugacyClasses", "Irr"].includes(block.key)
    ) {
      if (byKey.has(block.key)) {
        throw new DumpError("block appears twice", block.key);
      }
      byKey.set(block.key, block);
    } else {
      unparsed.push(block.key);
    }
  }
  for (const key of unparsed) {
    (warn ?? ((m) => console.error(m)))(`warning: unrecognized block ${key}`);
  }

  const need = (key: string): Block => {
    const block = byKey.get(key);
    if (!block) throw new DumpError("required block is missing", key);
    return block;
  };

  const nameBlock = need("GroupName");
  const nameMatch = /^"([^"]*)"\s*;?\s*$/.exec(nameBlock.body.trim());
  if (!nameMatch) throw new DumpError("expected a quoted name", "GroupName");

  const record: DumpRecord = {
    groupName: nameMatch[1],
    orderFactored: readPairList(need("OrderFactored").body, "OrderFactored"),
    exponentFactored: readPairList(need("ExponentFactored").body, "ExponentFactored"),
    classNames: readStringList(need("ClassNames").body, "ClassNames"),
    classOrders: readIntList(
      need("OrdersClassRepresentatives").body, "OrdersClassRepresentatives"),
    classSizes: byKey.has("SizesConjugacyClasses")
      ? readIntList(byKey.get("SizesConjugacyClasses")!.body, "SizesConjugacyClasses")
      : null,
    powerMaps,
    ordinary: readValueRows(need("Irr").body, "Irr"),
    brauer,
    unparsed,
  };

  const n = record.classNames.length;
  if (record.classOrders.length !== n) {
    throw new DumpError("length differs from ClassNames", "OrdersClassRepresentatives");
  }
  if (record.classSizes && record.classSizes.length !== n) {
    throw new DumpError("length differs from ClassNames", "SizesConjugacyClasses");
  }
  if (powerMaps.size === 0) {
    throw new DumpError("required block is missing", "PowerMap");
  }
  for (const [p, images] of powerMaps) {
    if (images.length !== n) {
      throw new DumpError("length differs from ClassNames", `PowerMap[${p}]`);
    }
    for (const index of images) {
      if (index < 1 || index > n) {
        throw new DumpError(`class index ${index} out of range`, `PowerMap[${p}]`);
      }
    }
  }
  record.ordinary.forEach((row, i) => {
    if (row.length !== n) {
      throw new DumpError(`row ${i + 1} has ${row.length} values, expected ${n}`, "Irr");
    }
  });
  for (const [p, rows] of brauer) {
    const regular = record.classOrders.filter((o) => o % p !== 0).length;
    rows.forEach((row, i) => {
      if (row.length !== regular) {
        throw new DumpError(
          `row ${i + 1} has ${row.length} values, expected ${regular} (p-regular classes)`,
          `BrauerTable[${p}]`);
      }
    });
  }
  return record;
}
