// DumpRecord -> interchange JSON document, in the exact canonical
// serialization the solver package writes (2-space indent, fixed key order).

import { DumpError, DumpRecord } from "./dump.js";

interface ClassDoc {
  name: string;
  order: number;
  size?: number;
  powermap?: Record<string, string>;
}

interface CharacterDoc {
  id: string;
  kind: "ordinary" | { brauer: number };
  degree: number;
  values: Record<string, string>;
}

export interface TableDoc {
  group: string;
  order_factored: number[][];
  exponent_factored: number[][];
  classes: ClassDoc[];
  characters: CharacterDoc[];
}

function degreeOf(row: string[], id: string): number {
  if (!/^-?\d+$/.test(row[0])) {
    throw new DumpError(`identity value ${row[0]} is not an integer`, id);
  }
  return parseInt(row[0], 10);
}

export function convert(record: DumpRecord): TableDoc {
  const names = record.classNames;
  const classes: ClassDoc[] = names.map((name, i) => {
    const doc: ClassDoc = { name, order: record.classOrders[i] };
    if (record.classSizes) doc.size = record.classSizes[i];
    const pm: Record<string, string> = {};
    for (const p of [...record.powerMaps.keys()].sort((a, b) => a - b)) {
      pm[String(p)] = names[record.powerMaps.get(p)![i] - 1];
    }
    if (Object.keys(pm).length) doc.powermap = pm;
    return doc;
  });

  const characters: CharacterDoc[] = record.ordinary.map((row, i) => {
    const id = `chi${i + 1}`;
    const values: Record<string, string> = {};
    names.forEach((name, j) => {
      values[name] = row[j];
    });
    return { id, kind: "ordinary", degree: degreeOf(row, id), values };
  });

  for (const p of [...record.brauer.keys()].sort((a, b) => a - b)) {
    const regular = names.filter((_, i) => record.classOrders[i] % p !== 0);
    record.brauer.get(p)!.forEach((row, i) => {
      const id = `chi${i + 1}_mod${p}`;
      const values: Record<string, string> = {};
      regular.forEach((name, j) => {
        values[name] = row[j];
      });
      characters.push({ id, kind: { brauer: p }, degree: degreeOf(row, id), values });
    });
  }

  return {
    group: record.groupName,
    order_factored: record.orderFactored.map(([p, e]) => [p, e]),
    exponent_factored: record.exponentFactored.map(([p, e]) => [p, e]),
    classes,
    characters,
  };
}

/** Canonical text form: matches the solver package's serializer byte for byte. */
export function serializeTable(doc: TableDoc): string {
  return JSON.stringify(doc, null, 2) + "\n";
}

/** Re-serialize any interchange document with canonical key order, dropping
 * free-text annotation keys. */
export function normalize(text: string): string {
  const raw = JSON.parse(text);
  const doc: TableDoc = {
    group: raw.group,
    order_factored: raw.order_factored,
    exponent_factored: raw.exponent_factored,
    classes: raw.classes.map((c: any) => {
      const out: ClassDoc = { name: c.name, order: c.order };
      if (c.size !== undefined) out.size = c.size;
      if (c.powermap !== undefined) out.powermap = c.powermap;
      return out;
    }),
    characters: raw.characters.map((chi: any) => ({
      id: chi.id,
      kind: chi.kind,
      degree: chi.degree,
      values: chi.values,
    })),
  };
  return serializeTable(doc);
}
