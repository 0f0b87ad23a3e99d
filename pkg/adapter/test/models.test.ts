import { mkdtempSync, writeFileSync } from 'fs';
import { tmpdir } from 'os';
import { join } from 'path';
import { describe, expect, it } from 'vitest';

import { MODELS, getModelSpec, resolveCheckpoint } from '../src/models';

describe('model registry', () => {
  it('covers all published selectors', () => {
    for (const name of [
      'midas-large',
      'midas-hybrid',
      'midas-small',
      'monodepth2-mono-640x192',
      'densedepth-nyu',
      'densedepth-kitti',
    ]) {
      expect(MODELS[name], name).toBeDefined();
      expect(MODELS[name].source).toMatch(/^https:/);
    }
  });

  it('fixes the space per model family', () => {
    expect(MODELS['midas-large'].space).toBe('inverse_depth');
    expect(MODELS['midas-hybrid'].space).toBe('inverse_depth');
    expect(MODELS['midas-small'].space).toBe('inverse_depth');
    expect(MODELS['monodepth2-mono-640x192'].space).toBe('depth');
    expect(MODELS['densedepth-nyu'].space).toBe('depth');
    expect(MODELS['densedepth-kitti'].space).toBe('depth');
  });

  it('rejects unknown selectors with the known list', () => {
    expect(() => getModelSpec('midas-xxl')).toThrow(/known: .*midas-small/);
  });

  it('uses an explicit checkpoint override as-is', async () => {
    const dir = mkdtempSync(join(tmpdir(), 'ckpt-'));
    const path = join(dir, 'model.onnx');
    writeFileSync(path, 'stub');
    await expect(resolveCheckpoint(MODELS['midas-small'], path)).resolves.toBe(path);
  });

  it('fails loudly when the override is missing', async () => {
    await expect(
      resolveCheckpoint(MODELS['midas-small'], '/nonexistent/model.onnx'),
    ).rejects.toThrow(/nonexistent/);
  });

  it('test model demands an explicit checkpoint', async () => {
    await expect(resolveCheckpoint(MODELS['test-blur'])).rejects.toThrow(/--checkpoint/);
  });

  it('non-onnx publications fail with the source recorded', async () => {
    await expect(resolveCheckpoint(MODELS['densedepth-nyu'])).rejects.toThrow(
      /densedepth\/nyu\.h5.*keras-h5/s,
    );
  });

  it('download failures record the attempted source', async () => {
    const dir = mkdtempSync(join(tmpdir(), 'cache-'));
    const spec = {
      ...MODELS['midas-small'],
      name: 'unreachable',
      source: 'https://host.invalid/model.onnx',
    };
    await expect(resolveCheckpoint(spec, undefined, dir)).rejects.toThrow(
      /https:\/\/host\.invalid\/model\.onnx/,
    );
  });
});
