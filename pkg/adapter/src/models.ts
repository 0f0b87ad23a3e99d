/**
 * Model registry: every selector names a published pretrained checkpoint,
 * its native output space, and the preprocessing its release calls for.
 *
 * Only ONNX checkpoints can execute in this Node runtime. Selectors whose
 * published weights ship in another format still resolve (so the attempted
 * source is always on record) but fail loudly at load time; an ONNX
 * conversion can be supplied with --checkpoint.
 *
 * Checkpoint sources drift over time. Every failure message carries the
 * exact URL that was attempted.
 */

import { createWriteStream, existsSync, mkdirSync, renameSync } from 'fs';
import { get as httpsGet } from 'https';
import { homedir } from 'os';
import { basename, join } from 'path';

import type { Interpolation } from './image';
import type { Space } from './sidecar';

export interface ModelSpec {
  name: string;
  space: Space;
  /** published checkpoint location; 'local' = test model, --checkpoint only */
  source: string;
  format: 'onnx' | 'pytorch-zip' | 'keras-h5';
  inputWidth: number;
  inputHeight: number;
  interpolation: Interpolation;
  mean: readonly [number, number, number];
  std: readonly [number, number, number];
  note?: string;
}

const IMAGENET_MEAN = [0.485, 0.456, 0.406] as const;
const IMAGENET_STD = [0.229, 0.224, 0.225] as const;

export const MODELS: Record<string, ModelSpec> = {
  'midas-large': {
    name: 'midas-large',
    space: 'inverse_depth',
    source: 'https://github.com/isl-org/MiDaS/releases/download/v2_1/model-f6b98070.onnx',
    format: 'onnx',
    inputWidth: 384,
    inputHeight: 384,
    interpolation: 'bicubic',
    mean: IMAGENET_MEAN,
    std: IMAGENET_STD,
  },
  'midas-hybrid': {
    name: 'midas-hybrid',
    space: 'inverse_depth',
    source: 'https://huggingface.co/Xenova/dpt-hybrid-midas/resolve/main/onnx/model.onnx',
    format: 'onnx',
    inputWidth: 384,
    inputHeight: 384,
    interpolation: 'bilinear',
    mean: [0.5, 0.5, 0.5],
    std: [0.5, 0.5, 0.5],
    note: 'community ONNX export of the official DPT-Hybrid weights',
  },
  'midas-small': {
    name: 'midas-small',
    space: 'inverse_depth',
    source: 'https://github.com/isl-org/MiDaS/releases/download/v2_1/model-small.onnx',
    format: 'onnx',
    inputWidth: 256,
    inputHeight: 256,
    interpolation: 'bicubic',
    mean: IMAGENET_MEAN,
    std: IMAGENET_STD,
  },
  'monodepth2-mono-640x192': {
    name: 'monodepth2-mono-640x192',
    space: 'depth',
    source: 'https://storage.googleapis.com/niantic-research/monodepth2/mono_640x192.zip',
    format: 'pytorch-zip',
    inputWidth: 640,
    inputHeight: 192,
    interpolation: 'bilinear',
    mean: [0, 0, 0],
    std: [1, 1, 1],
    note: 'published as PyTorch weights; supply an ONNX export via --checkpoint',
  },
  'densedepth-nyu': {
    name: 'densedepth-nyu',
    space: 'depth',
    source: 'https://s3-eu-west-1.amazonaws.com/densedepth/nyu.h5',
    format: 'keras-h5',
    inputWidth: 640,
    inputHeight: 480,
    interpolation: 'bilinear',
    mean: [0, 0, 0],
    std: [1, 1, 1],
    note: 'published as Keras weights; supply an ONNX export via --checkpoint',
  },
  'densedepth-kitti': {
    name: 'densedepth-kitti',
    space: 'depth',
    source: 'https://s3-eu-west-1.amazonaws.com/densedepth/kitti.h5',
    format: 'keras-h5',
    inputWidth: 1280,
    inputHeight: 384,
    interpolation: 'bilinear',
    mean: [0, 0, 0],
    std: [1, 1, 1],
    note: 'published as Keras weights; supply an ONNX export via --checkpoint',
  },
  // synthetic smoke-test model (box blur of inverted luminance); not a
  // published checkpoint, only usable with an explicit --checkpoint path
  'test-blur': {
    name: 'test-blur',
    space: 'inverse_depth',
    source: 'local',
    format: 'onnx',
    inputWidth: 256,
    inputHeight: 256,
    interpolation: 'bilinear',
    mean: [0, 0, 0],
    std: [1, 1, 1],
    note: 'synthetic test model, requires --checkpoint',
  },
};

export function getModelSpec(selector: string): ModelSpec {
  const spec = MODELS[selector];
  if (!spec) {
    throw new Error(
      `unknown model selector '${selector}'; known: ${Object.keys(MODELS).join(', ')}`,
    );
  }
  return spec;
}

function download(url: string, dest: string, redirects = 5): Promise<void> {
  return new Promise((resolve, reject) => {
    const req = httpsGet(url, (res) => {
      if (res.statusCode && res.statusCode >= 300 && res.statusCode < 400 && res.headers.location) {
        res.resume();
        if (redirects === 0) return reject(new Error(`too many redirects from ${url}`));
        return download(res.headers.location, dest, redirects - 1).then(resolve, reject);
      }
      if (res.statusCode !== 200) {
        res.resume();
        return reject(new Error(`HTTP ${res.statusCode} from ${url}`));
      }
      const tmp = dest + '.part';
      const out = createWriteStream(tmp);
      res.pipe(out);
      out.on('finish', () => {
        out.close(() => {
          renameSync(tmp, dest);
          resolve();
        });
      });
      out.on('error', reject);
    });
    req.on('error', reject);
  });
}

export function defaultCacheDir(): string {
  return join(homedir(), '.cache', 'sizecue-adapter');
}

/**
 * Returns a local path to the model's ONNX file: the explicit override, a
 * cached download, or a fresh download of the published source. Anything
 * that cannot be satisfied fails with the attempted source in the message.
 */
export async function resolveCheckpoint(
  spec: ModelSpec,
  checkpointOverride?: string,
  cacheDir: string = defaultCacheDir(),
): Promise<string> {
  if (checkpointOverride) {
    if (!existsSync(checkpointOverride)) {
      throw new Error(`checkpoint override not found: ${checkpointOverride}`);
    }
    return checkpointOverride;
  }
  if (spec.source === 'local') {
    throw new Error(
      `model '${spec.name}' is a local test model and needs an explicit --checkpoint path`,
    );
  }
  if (spec.format !== 'onnx') {
    throw new Error(
      `model '${spec.name}' is published at ${spec.source} as ${spec.format}, ` +
        'which this adapter cannot execute; provide an ONNX conversion via --checkpoint',
    );
  }
  mkdirSync(cacheDir, { recursive: true });
  const cached = join(cacheDir, `${spec.name}-${basename(new URL(spec.source).pathname)}`);
  if (existsSync(cached)) return cached;
  try {
    await download(spec.source, cached);
  } catch (err) {
    throw new Error(
      `failed to download checkpoint for '${spec.name}' from ${spec.source}: ` +
        `${err instanceof Error ? err.message : String(err)}`,
    );
  }
  return cached;
}
