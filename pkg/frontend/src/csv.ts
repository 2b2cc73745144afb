/** Parsing for the profile CSVs emitted by the bipeel CLI. */

export interface ProfileRow {
  nodeId: number;
  parentId: number | null;
  kind: string;
  k: number;
  uSize: number;
  vSize: number;
  edges: number;
  density: number;
}

export const EXPECTED_COLUMNS = [
  'node_id',
  'parent_id',
  'kind',
  'k',
  'u_size',
  'v_size',
  'edges',
  'density',
] as const;

/**
 * Parse one profile CSV. The header must carry exactly the expected
 * columns; anything else raises with a diagnostic naming the offending
 * columns so schema drift is obvious.
 */
export function parseProfileCsv(text: string): ProfileRow[] {
  const lines = text.split(/\r?\n/).filter((line) => line.trim().length > 0);
  if (lines.length === 0) {
    throw new Error('profile CSV is empty (no header row)');
  }
  const header = lines[0].split(',').map((col) => col.trim());
  const expected = [...EXPECTED_COLUMNS];
  const missing = expected.filter((col) => !header.includes(col));
  const extra = header.filter((col) => !(expected as string[]).includes(col));
  if (missing.length > 0 || extra.length > 0) {
    const parts: string[] = [];
    if (missing.length > 0) parts.push(`missing columns: ${missing.join(', ')}`);
    if (extra.length > 0) parts.push(`unexpected columns: ${extra.join(', ')}`);
    throw new Error(`profile CSV schema mismatch; ${parts.join('; ')}`);
  }
  const index = new Map(header.map((col, i) => [col, i]));
  const rows: ProfileRow[] = [];
  for (const line of lines.slice(1)) {
    const cells = line.split(',');
    const cell = (name: string): string => cells[index.get(name)!] ?? '';
    rows.push({
      nodeId: Number(cell('node_id')),
      parentId: cell('parent_id') === '' ? null : Number(cell('parent_id')),
      kind: cell('kind'),
      k: Number(cell('k')),
      uSize: Number(cell('u_size')),
      vSize: Number(cell('v_size')),
      edges: Number(cell('edges')),
      density: Number(cell('density')),
    });
  }
  return rows;
}
