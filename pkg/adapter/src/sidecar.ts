/**
 * Prediction sidecar JSON, the wire format the evaluator ingests:
 * {"method": ..., "space": "depth"|"inverse_depth", "files": {scene_id: path}}
 */

import { writeFileSync } from 'fs';

export type Space = 'depth' | 'inverse_depth';

export function writeSidecar(
  path: string,
  method: string,
  space: Space,
  files: Record<string, string>,
): void {
  const sorted: Record<string, string> = {};
  for (const key of Object.keys(files).sort()) sorted[key] = files[key];
  const doc = { files: sorted, method, space };
  writeFileSync(path, JSON.stringify(doc, null, 2) + '\n');
}
