/** Reader for the dataset's JSONL manifest (header line + scene records). */

import { readFileSync } from 'fs';
import { join } from 'path';

export interface SceneRecord {
  scene_id: string;
  camera: { width: number; height: number; focal: number; cx: number; cy: number };
  objects: unknown[];
  files: { rgb: string; depth: string; mask: string };
  digests: Record<string, string>;
}

export interface Manifest {
  datasetDir: string;
  datasetId: string;
  records: SceneRecord[];
}

export function readManifest(datasetDir: string): Manifest {
  const path = join(datasetDir, 'manifest.jsonl');
  let text: string;
  try {
    text = readFileSync(path, 'utf-8');
  } catch {
    throw new Error(`manifest not found: ${path}`);
  }
  const lines = text.split('\n').filter((l) => l.trim().length > 0);
  if (lines.length === 0) throw new Error(`empty manifest: ${path}`);
  const header = JSON.parse(lines[0]);
  if (header.kind !== 'sizecue-dataset') {
    throw new Error(`${path}: not a sizecue-dataset manifest (kind ${header.kind})`);
  }
  const records = lines.slice(1).map((l) => JSON.parse(l) as SceneRecord);
  for (const rec of records) {
    if (!rec.scene_id || !rec.files?.rgb) {
      throw new Error(`${path}: scene record missing scene_id or rgb path`);
    }
  }
  return { datasetDir, datasetId: header.dataset_id, records };
}
