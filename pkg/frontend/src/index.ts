export { parseProfileCsv, EXPECTED_COLUMNS } from './csv.js';
export type { ProfileRow } from './csv.js';
export { viridis, densityColor } from './colormap.js';
export { renderProfilePanels, DEFAULT_SPEC } from './render.js';
export type { Panel, PanelReport, PlotSpec, RenderResult } from './render.js';
export { run } from './cli.js';
