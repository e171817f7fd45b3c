import { execFileSync } from 'child_process';
import { mkdtempSync, readFileSync, writeFileSync, readdirSync } from 'fs';
import { tmpdir } from 'os';
import { join, dirname } from 'path';
import { fileURLToPath } from 'url';

import { describe, expect, it } from 'vitest';

import { parseResultCsv, SchemaError } from '../src/csv.js';
import { groupCurves, renderFigure } from '../src/figure.js';

const HERE = dirname(fileURLToPath(import.meta.url));
const FIXTURES = join(HERE, 'fixtures');
const HEADER =
  'code,interleaver,channel,n,k,design_snr_db,interleaver_seed,master_seed,snr_db,trials,block_errors,bler';

function row(over: Partial<Record<string, string | number>> = {}): string {
  const base: Record<string, string | number> = {
    code: 'awgn', interleaver: 'uniform', channel: 'awgn', n: 256, k: 128,
    design_snr_db: 0.15, interleaver_seed: 0, master_seed: 0,
    snr_db: 1.0, trials: 1000, block_errors: 10, bler: 0.01,
  };
  Object.assign(base, over);
  return HEADER.split(',').map((c) => String(base[c])).join(',');
}

describe('csv parsing', () => {
  it('parses well-formed rows', () => {
    const rows = parseResultCsv([HEADER, row(), row({ snr_db: 2.0 })].join('\n'), 't');
    expect(rows).toHaveLength(2);
    expect(rows[1].snrDb).toBe(2.0);
    expect(rows[0].bler).toBeCloseTo(0.01);
  });

  it('names the first bad header column', () => {
    const bad = HEADER.replace('design_snr_db', 'design_snr');
    expect(() => parseResultCsv([bad, row()].join('\n'), 't'))
      .toThrowError(/bad column 'design_snr_db'/);
  });

  it('rejects extra columns by name', () => {
    expect(() => parseResultCsv([`${HEADER},extra`, `${row()},1`].join('\n'), 't'))
      .toThrowError(/bad column 'extra'/);
  });

  it('rejects non-numeric cells naming the column', () => {
    const line = row({ bler: 'oops' });
    expect(() => parseResultCsv([HEADER, line].join('\n'), 't'))
      .toThrowError(SchemaError);
    expect(() => parseResultCsv([HEADER, line].join('\n'), 't'))
      .toThrowError(/bad column 'bler'/);
  });
});

describe('grouping', () => {
  it('one curve per (code, interleaver, channel, n); outage separate', () => {
    const rows = parseResultCsv([
      HEADER,
      row({ snr_db: 1 }),
      row({ snr_db: 2 }),
      row({ code: 'diversity', interleaver: 'diversity' }),
      row({ code: 'outage', interleaver: '-', n: 0, k: 0 }),
    ].join('\n'), 't');
    const { panels, outage } = groupCurves(rows);
    expect([...panels.keys()]).toEqual([256]);
    expect(panels.get(256)).toHaveLength(2);
    expect(panels.get(256)![0].points).toHaveLength(2);
    expect(outage).toHaveLength(1);
    expect(outage[0].label).toBe('outage (awgn)');
  });

  it('mixed block lengths produce one panel per N', () => {
    const rows = parseResultCsv([
      HEADER, row({ n: 256 }), row({ n: 1024, snr_db: 2 }),
    ].join('\n'), 't');
    const svg = renderFigure(rows);
    expect([...svg.matchAll(/class="panel"/g)]).toHaveLength(2);
    expect(svg).toContain('N = 256');
    expect(svg).toContain('N = 1024');
  });
});

describe('rendering', () => {
  it('zero BLER becomes a censored marker, never log(0)', () => {
    const rows = parseResultCsv([
      HEADER, row({ snr_db: 1, bler: 0.01 }), row({ snr_db: 2, bler: 0.0, block_errors: 0 }),
    ].join('\n'), 't');
    const svg = renderFigure(rows);
    expect(svg).toContain('class="censored"');
    expect(svg).not.toMatch(/NaN|Infinity/);
  });

  it('outage curves are dashed and overlaid on code panels', () => {
    const rows = parseResultCsv([
      HEADER,
      row({ snr_db: 1 }),
      row({ code: 'outage', interleaver: '-', n: 0, k: 0, snr_db: 1, bler: 0.05 }),
    ].join('\n'), 't');
    const svg = renderFigure(rows);
    expect([...svg.matchAll(/class="panel"/g)]).toHaveLength(1);
    expect(svg).toContain('stroke-dasharray="6 4"');
  });

  it('is deterministic', () => {
    const rows = parseResultCsv([HEADER, row(), row({ snr_db: 3 })].join('\n'), 't');
    expect(renderFigure(rows)).toBe(renderFigure(rows));
  });
});

describe('fixture set: fading comparison with outage overlay', () => {
  const fixturePaths = readdirSync(FIXTURES).filter((f) => f.endsWith('.csv'))
    .sort().map((f) => join(FIXTURES, f));

  it('renders the full comparison into a single figure', () => {
    const rows = fixturePaths.flatMap((p) => parseResultCsv(readFileSync(p, 'utf8'), p));
    const svg = renderFigure(rows);
    expect([...svg.matchAll(/<svg /g)]).toHaveLength(1);
    expect([...svg.matchAll(/class="panel"/g)]).toHaveLength(1); // all N=256
    expect(svg).toContain('stroke-dasharray="6 4"');             // outage overlay
    expect(svg).toContain('class="censored"');                   // zero-BLER rows
    expect(svg).toContain('diversity+diversity');
    expect(svg).toContain('awgn+uniform');
    expect(renderFigure(rows)).toBe(svg);
  });

  it('cli renders the same set end to end, twice, byte-identical', () => {
    const dir = mkdtempSync(join(tmpdir(), 'plots-'));
    const outA = join(dir, 'a.svg');
    const outB = join(dir, 'b.svg');
    const script = join(HERE, '..', 'dist', 'plot.js');
    execFileSync('node', [script, ...fixturePaths, '--out', outA]);
    execFileSync('node', [script, ...fixturePaths, '--out', outB]);
    const a = readFileSync(outA, 'utf8');
    expect(a).toBe(readFileSync(outB, 'utf8'));
    expect(a).toContain('stroke-dasharray');
  });

  it('cli fails with the bad column named and writes nothing', () => {
    const dir = mkdtempSync(join(tmpdir(), 'plots-'));
    const bad = join(dir, 'bad.csv');
    writeFileSync(bad, [HEADER.replace(',bler', ',blerr'), row()].join('\n'));
    const out = join(dir, 'fig.svg');
    const script = join(HERE, '..', 'dist', 'plot.js');
    let code = 0;
    let stderr = '';
    try {
      execFileSync('node', [script, bad, '--out', out]);
    } catch (err: any) {
      code = err.status;
      stderr = String(err.stderr);
    }
    expect(code).toBe(1);
    expect(stderr).toContain("bad column 'bler'");
    expect(readdirSync(dir)).toEqual(['bad.csv']);
  });

  it('cli rejects unknown flags and missing --out', () => {
    const script = join(HERE, '..', 'dist', 'plot.js');
    for (const args of [[fixturePaths[0]], ['--wat', fixturePaths[0], '--out', 'x.svg']]) {
      let code = 0;
      try {
        execFileSync('node', [script, ...args], { stdio: 'pipe' });
      } catch (err: any) {
        code = err.status;
      }
      expect(code).toBe(1);
    }
  });
});
