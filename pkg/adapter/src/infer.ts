/**
 * The adapter loop: dataset RGB in, one PFM per scene + a sidecar out.
 *
 * Deliberately dumb: each model's published preprocessing (resize,
 * normalization) is applied verbatim, the raw output map is written at the
 * model's native output resolution, and no alignment, masking, or
 * rescaling happens here — evaluation semantics live in the harness.
 */

import { mkdirSync } from 'fs';
import { join, resolve, sep } from 'path';
import * as ort from 'onnxruntime-node';

import { readRgbPng, resizeRgb, toNormalizedChw } from './image';
import { readManifest } from './manifest';
import { getModelSpec, ModelSpec, resolveCheckpoint } from './models';
import { writePfm } from './pfm';
import { writeSidecar } from './sidecar';

export interface AdapterConfig {
  model: string;
  dataset: string;
  out: string;
  device?: 'cpu' | 'cuda';
  /** pre-downloaded / converted checkpoint path, skips the registry source */
  checkpoint?: string;
  cacheDir?: string;
  limit?: number;
}

export interface AdapterRun {
  sidecarPath: string;
  written: string[];
  skipped: { sceneId: string; error: string }[];
}

function outputToMap(output: ort.Tensor): { width: number; height: number; data: Float32Array } {
  const dims = output.dims.filter((d) => d !== 1);
  if (dims.length !== 2) {
    throw new Error(`expected a single-channel 2D output, got dims [${output.dims.join(', ')}]`);
  }
  const [height, width] = dims;
  const raw = output.data as Float32Array;
  const data = new Float32Array(raw.length);
  for (let i = 0; i < raw.length; i++) {
    const v = raw[i];
    if (!Number.isFinite(v)) throw new Error(`non-finite model output at index ${i}`);
    data[i] = v < 0 ? 0 : v; // tiny negatives would violate the PFM contract
  }
  return { width, height, data };
}

export async function runAdapter(config: AdapterConfig): Promise<AdapterRun> {
  const spec: ModelSpec = getModelSpec(config.model);
  const manifest = readManifest(config.dataset);

  const datasetRoot = resolve(config.dataset) + sep;
  const outRoot = resolve(config.out);
  if ((outRoot + sep).startsWith(datasetRoot)) {
    throw new Error(`output dir ${config.out} is inside the dataset; the dataset is read-only`);
  }
  mkdirSync(outRoot, { recursive: true });

  const checkpoint = await resolveCheckpoint(spec, config.checkpoint, config.cacheDir);
  const providers = config.device === 'cuda' ? ['cuda', 'cpu'] : ['cpu'];
  const session = await ort.InferenceSession.create(checkpoint, {
    executionProviders: providers as never,
  });
  const inputName = session.inputNames[0];
  const outputName = session.outputNames[0];

  const records = config.limit ? manifest.records.slice(0, config.limit) : manifest.records;
  const files: Record<string, string> = {};
  const written: string[] = [];
  const skipped: { sceneId: string; error: string }[] = [];

  for (const record of records) {
    try {
      const rgb = readRgbPng(join(config.dataset, record.files.rgb));
      const resized = resizeRgb(rgb, spec.inputWidth, spec.inputHeight, spec.interpolation);
      const chw = toNormalizedChw(resized, spec.mean, spec.std);
      const input = new ort.Tensor('float32', chw, [1, 3, spec.inputHeight, spec.inputWidth]);
      const outputs = await session.run({ [inputName]: input });
      const map = outputToMap(outputs[outputName]);
      const fileName = `${record.scene_id}.pfm`;
      writePfm(join(outRoot, fileName), map);
      files[record.scene_id] = fileName;
      written.push(record.scene_id);
    } catch (err) {
      skipped.push({
        sceneId: record.scene_id,
        error: err instanceof Error ? err.message : String(err),
      });
    }
  }

  const sidecarPath = join(outRoot, 'sidecar.json');
  writeSidecar(sidecarPath, spec.name, spec.space, files);
  return { sidecarPath, written, skipped };
}
