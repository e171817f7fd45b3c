import { renameSync, writeFileSync } from 'fs';

import { loadResultCsv, ResultRow, SchemaError } from './csv.js';
import { renderFigure } from './figure.js';

function usage(): void {
  console.error('usage: plot <results.csv> [more.csv ...] --out <figure.svg>');
}

export function main(argv: string[]): number {
  const csvPaths: string[] = [];
  let outPath: string | null = null;
  for (let i = 0; i < argv.length; i++) {
    const arg = argv[i];
    if (arg === '--out') {
      outPath = argv[++i] ?? null;
    } else if (arg.startsWith('-')) {
      console.error(`error: unknown flag '${arg}'`);
      usage();
      return 1;
    } else {
      csvPaths.push(arg);
    }
  }
  if (csvPaths.length === 0 || !outPath) {
    usage();
    return 1;
  }
  if (!outPath.endsWith('.svg')) {
    console.error(`error: output must be an .svg file, got '${outPath}'`);
    return 1;
  }

  const rows: ResultRow[] = [];
  for (const path of csvPaths) {
    try {
      rows.push(...loadResultCsv(path));
    } catch (err) {
      if (err instanceof SchemaError) {
        console.error(`error: ${err.message}`);
        return 1;
      }
      console.error(`error: cannot read ${path}: ${(err as Error).message}`);
      return 1;
    }
  }

  const svg = renderFigure(rows);
  const tmp = `${outPath}.tmp`;
  writeFileSync(tmp, svg);
  renameSync(tmp, outPath);
  console.log(`wrote ${outPath} (${rows.length} rows)`);
  return 0;
}

process.exitCode = main(process.argv.slice(2));
