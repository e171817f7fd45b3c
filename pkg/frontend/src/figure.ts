import { ResultRow } from './csv.js';

export interface Curve {
  label: string;
  isOutage: boolean;
  points: { snrDb: number; bler: number; trials: number }[];
}

const PALETTE = ['#1f77b4', '#d62728', '#2ca02c', '#9467bd', '#ff7f0e', '#8c564b'];
const OUTAGE_COLOR = '#555555';

const PLOT_W = 560;
const PLOT_H = 300;
const MARGIN = { left: 70, right: 20, top: 34, bottom: 48 };
const PANEL_GAP = 34;

const fmt = (v: number) => v.toFixed(2);

/** Group rows into curves: one per (code, interleaver, channel, n). */
export function groupCurves(rows: ResultRow[]): { panels: Map<number, Curve[]>; outage: Curve[] } {
  const byKey = new Map<string, { row0: ResultRow; points: Curve['points'] }>();
  for (const r of rows) {
    const key = `${r.code}|${r.interleaver}|${r.channel}|${r.n}`;
    if (!byKey.has(key)) byKey.set(key, { row0: r, points: [] });
    byKey.get(key)!.points.push({ snrDb: r.snrDb, bler: r.bler, trials: r.trials });
  }
  const panels = new Map<number, Curve[]>();
  const outage: Curve[] = [];
  const keys = [...byKey.keys()].sort();
  for (const key of keys) {
    const { row0, points } = byKey.get(key)!;
    points.sort((a, b) => a.snrDb - b.snrDb);
    const curve: Curve = {
      label: row0.code === 'outage' ? `outage (${row0.channel})` : `${row0.code}+${row0.interleaver}`,
      isOutage: row0.code === 'outage',
      points,
    };
    if (curve.isOutage) {
      outage.push(curve);
    } else {
      if (!panels.has(row0.n)) panels.set(row0.n, []);
      panels.get(row0.n)!.push(curve);
    }
  }
  return { panels, outage };
}

function niceTicks(lo: number, hi: number, target = 6): number[] {
  const span = hi - lo || 1;
  const raw = span / target;
  const mag = Math.pow(10, Math.floor(Math.log10(raw)));
  let step = mag;
  for (const m of [1, 2, 5, 10]) {
    if (m * mag >= raw) { step = m * mag; break; }
  }
  const ticks: number[] = [];
  for (let t = Math.ceil(lo / step) * step; t <= hi + 1e-9; t += step) {
    ticks.push(Number(t.toFixed(6)));
  }
  return ticks;
}

function renderPanel(
  title: string, curves: Curve[], overlay: Curve[], yOffset: number, parts: string[],
): void {
  const all = [...curves, ...overlay];
  const xs = all.flatMap((c) => c.points.map((p) => p.snrDb));
  const positive = all.flatMap((c) => c.points.filter((p) => p.bler > 0).map((p) => p.bler));
  const xLo = Math.min(...xs);
  const xHi = Math.max(...xs);
  const yLoDec = positive.length ? Math.floor(Math.log10(Math.min(...positive))) : -4;
  const yHiDec = positive.length ? Math.ceil(Math.log10(Math.max(...positive))) : 0;
  const loDec = Math.min(yLoDec, yHiDec - 1);

  const x = (v: number) =>
    MARGIN.left + ((v - xLo) / (xHi - xLo || 1)) * PLOT_W;
  const y = (bler: number) =>
    yOffset + MARGIN.top + ((yHiDec - Math.log10(bler)) / (yHiDec - loDec)) * PLOT_H;
  const bottom = yOffset + MARGIN.top + PLOT_H;

  parts.push(`<g class="panel">`);
  parts.push(`<text x="${fmt(MARGIN.left + PLOT_W / 2)}" y="${fmt(yOffset + 18)}" ` +
    `text-anchor="middle" font-size="14" font-weight="bold">${title}</text>`);
  parts.push(`<rect x="${fmt(MARGIN.left)}" y="${fmt(yOffset + MARGIN.top)}" ` +
    `width="${PLOT_W}" height="${PLOT_H}" fill="none" stroke="#000"/>`);

  for (let d = yHiDec; d >= loDec; d--) {
    const yy = y(Math.pow(10, d));
    parts.push(`<line x1="${fmt(MARGIN.left)}" y1="${fmt(yy)}" x2="${fmt(MARGIN.left + PLOT_W)}" ` +
      `y2="${fmt(yy)}" stroke="#ddd"/>`);
    parts.push(`<text x="${fmt(MARGIN.left - 6)}" y="${fmt(yy + 4)}" text-anchor="end" ` +
      `font-size="11">1e${d}</text>`);
  }
  for (const t of niceTicks(xLo, xHi)) {
    const xx = x(t);
    parts.push(`<line x1="${fmt(xx)}" y1="${fmt(bottom)}" x2="${fmt(xx)}" y2="${fmt(bottom + 5)}" ` +
      `stroke="#000"/>`);
    parts.push(`<text x="${fmt(xx)}" y="${fmt(bottom + 18)}" text-anchor="middle" ` +
      `font-size="11">${t}</text>`);
  }
  parts.push(`<text x="${fmt(MARGIN.left + PLOT_W / 2)}" y="${fmt(bottom + 36)}" ` +
    `text-anchor="middle" font-size="12">Es/N0 (dB)</text>`);
  parts.push(`<text x="18" y="${fmt(yOffset + MARGIN.top + PLOT_H / 2)}" text-anchor="middle" ` +
    `font-size="12" transform="rotate(-90 18 ${fmt(yOffset + MARGIN.top + PLOT_H / 2)})">BLER</text>`);

  let colorIdx = 0;
  const legend: { label: string; color: string; dashed: boolean }[] = [];
  for (const curve of [...curves, ...overlay]) {
    const color = curve.isOutage ? OUTAGE_COLOR : PALETTE[colorIdx++ % PALETTE.length];
    const dash = curve.isOutage ? ' stroke-dasharray="6 4"' : '';
    const drawn = curve.points.filter((p) => p.bler > 0);
    const censored = curve.points.filter((p) => p.bler === 0);
    if (drawn.length > 0) {
      const pts = drawn.map((p) => `${fmt(x(p.snrDb))},${fmt(y(p.bler))}`).join(' ');
      parts.push(`<polyline points="${pts}" fill="none" stroke="${color}" stroke-width="1.8"${dash}/>`);
      for (const p of drawn) {
        parts.push(`<circle cx="${fmt(x(p.snrDb))}" cy="${fmt(y(p.bler))}" r="2.6" fill="${color}"/>`);
      }
    }
    for (const p of censored) {
      // zero measured BLER: censored marker (down arrow at the floor), not log(0)
      const cx = x(p.snrDb);
      parts.push(`<path class="censored" d="M ${fmt(cx - 5)} ${fmt(bottom - 12)} ` +
        `L ${fmt(cx + 5)} ${fmt(bottom - 12)} L ${fmt(cx)} ${fmt(bottom - 2)} Z" fill="${color}"/>`);
    }
    legend.push({ label: curve.label, color, dashed: curve.isOutage });
  }

  const lx = MARGIN.left + PLOT_W - 220;
  let ly = yOffset + MARGIN.top + 12;
  for (const item of legend) {
    const dash = item.dashed ? ' stroke-dasharray="6 4"' : '';
    parts.push(`<line x1="${fmt(lx)}" y1="${fmt(ly)}" x2="${fmt(lx + 26)}" y2="${fmt(ly)}" ` +
      `stroke="${item.color}" stroke-width="1.8"${dash}/>`);
    parts.push(`<text x="${fmt(lx + 32)}" y="${fmt(ly + 4)}" font-size="11">${item.label}</text>`);
    ly += 16;
  }
  parts.push(`</g>`);
}

/** Render one SVG figure: a log-y BLER panel per block length, outage overlaid. */
export function renderFigure(rows: ResultRow[]): string {
  const { panels, outage } = groupCurves(rows);
  const ns = [...panels.keys()].sort((a, b) => a - b);
  if (ns.length === 0 && outage.length === 0) {
    throw new Error('no data rows to plot');
  }
  const panelList = ns.length > 0 ? ns : [0];
  const panelHeight = MARGIN.top + PLOT_H + MARGIN.bottom;
  const width = MARGIN.left + PLOT_W + MARGIN.right;
  const height = panelList.length * (panelHeight + PANEL_GAP) - PANEL_GAP;
  const parts: string[] = [];
  parts.push(`<svg xmlns="http://www.w3.org/2000/svg" width="${width}" height="${height}" ` +
    `viewBox="0 0 ${width} ${height}" font-family="Helvetica, Arial, sans-serif">`);
  parts.push(`<rect width="${width}" height="${height}" fill="#fff"/>`);
  panelList.forEach((n, i) => {
    const curves = panels.get(n) ?? [];
    const title = n > 0 ? `N = ${n}` : 'outage';
    renderPanel(title, curves, outage, i * (panelHeight + PANEL_GAP), parts);
  });
  parts.push(`</svg>`);
  return parts.join('\n') + '\n';
}
