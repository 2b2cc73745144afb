/** Perceptually uniform colormap for the density channel. */

// Viridis anchors at deciles; linear RGB interpolation in between is
// plenty for dot coloring.
const ANCHORS: ReadonlyArray<readonly [number, number, number]> = [
  [0x44, 0x01, 0x54],
  [0x48, 0x28, 0x78],
  [0x3e, 0x4a, 0x89],
  [0x31, 0x68, 0x8e],
  [0x26, 0x82, 0x8e],
  [0x1f, 0x9e, 0x89],
  [0x35, 0xb7, 0x79],
  [0x6e, 0xce, 0x58],
  [0xb5, 0xde, 0x2b],
  [0xfd, 0xe7, 0x25],
];

function clamp01(t: number): number {
  return Math.min(1, Math.max(0, t));
}

/** Viridis color for t in [0, 1], as a #rrggbb string. */
export function viridis(t: number): string {
  const scaled = clamp01(t) * (ANCHORS.length - 1);
  const lo = Math.floor(scaled);
  const hi = Math.min(lo + 1, ANCHORS.length - 1);
  const frac = scaled - lo;
  const channels = ANCHORS[lo].map((a, i) =>
    Math.round(a + (ANCHORS[hi][i] - a) * frac),
  );
  return '#' + channels.map((c) => c.toString(16).padStart(2, '0')).join('');
}

/** Map a density through the configured colormap window. */
export function densityColor(
  density: number,
  lo: number,
  hi: number,
): string {
  if (hi <= lo) return viridis(1);
  return viridis((density - lo) / (hi - lo));
}
