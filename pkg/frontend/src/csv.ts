import { readFileSync } from 'fs';

export const EXPECTED_COLUMNS = [
  'code', 'interleaver', 'channel', 'n', 'k', 'design_snr_db',
  'interleaver_seed', 'master_seed', 'snr_db', 'trials', 'block_errors', 'bler',
] as const;

export interface ResultRow {
  /** "awgn" | "diversity" | "outage" */
  code: string;
  interleaver: string;
  channel: string;
  /** block length; 0 for outage reference rows */
  n: number;
  k: number;
  snrDb: number;
  trials: number;
  blockErrors: number;
  bler: number;
}

export class SchemaError extends Error {
  readonly column: string;
  constructor(source: string, column: string, detail: string) {
    super(`${source}: bad column '${column}' (${detail})`);
    this.column = column;
  }
}

export function parseResultCsv(text: string, source: string): ResultRow[] {
  const lines = text.split('\n').filter((l) => l.trim().length > 0);
  if (lines.length === 0) {
    throw new SchemaError(source, EXPECTED_COLUMNS[0], 'empty file');
  }
  const header = lines[0].split(',');
  for (let i = 0; i < EXPECTED_COLUMNS.length; i++) {
    if (header[i] !== EXPECTED_COLUMNS[i]) {
      throw new SchemaError(source, EXPECTED_COLUMNS[i],
        `expected at position ${i}, found '${header[i] ?? 'nothing'}'`);
    }
  }
  if (header.length > EXPECTED_COLUMNS.length) {
    throw new SchemaError(source, header[EXPECTED_COLUMNS.length], 'unexpected column');
  }

  const num = (row: string[], line: number, col: string, idx: number): number => {
    const v = Number(row[idx]);
    if (row[idx] === undefined || row[idx] === '' || Number.isNaN(v)) {
      throw new SchemaError(source, col, `non-numeric value '${row[idx]}' on line ${line}`);
    }
    return v;
  };

  const rows: ResultRow[] = [];
  for (let i = 1; i < lines.length; i++) {
    const parts = lines[i].split(',');
    if (parts.length !== EXPECTED_COLUMNS.length) {
      throw new SchemaError(source, EXPECTED_COLUMNS[Math.min(parts.length, 11)],
        `line ${i + 1} has ${parts.length} fields`);
    }
    rows.push({
      code: parts[0],
      interleaver: parts[1],
      channel: parts[2],
      n: num(parts, i + 1, 'n', 3),
      k: num(parts, i + 1, 'k', 4),
      snrDb: num(parts, i + 1, 'snr_db', 8),
      trials: num(parts, i + 1, 'trials', 9),
      blockErrors: num(parts, i + 1, 'block_errors', 10),
      bler: num(parts, i + 1, 'bler', 11),
    });
  }
  return rows;
}

export function loadResultCsv(path: string): ResultRow[] {
  return parseResultCsv(readFileSync(path, 'utf8'), path);
}
