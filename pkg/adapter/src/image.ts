/** RGB PNG loading and the resize kernels the model recipes call for. */

import { readFileSync } from 'fs';
import { PNG } from 'pngjs';

export interface RgbImage {
  width: number;
  height: number;
  /** row-major RGB triples in [0, 1], length = width * height * 3 */
  data: Float32Array;
}

export function readRgbPng(path: string): RgbImage {
  const png = PNG.sync.read(readFileSync(path));
  const n = png.width * png.height;
  const data = new Float32Array(n * 3);
  for (let i = 0; i < n; i++) {
    data[i * 3] = png.data[i * 4] / 255;
    data[i * 3 + 1] = png.data[i * 4 + 1] / 255;
    data[i * 3 + 2] = png.data[i * 4 + 2] / 255;
  }
  return { width: png.width, height: png.height, data };
}

export type Interpolation = 'bilinear' | 'bicubic';

function cubicWeight(t: number): number {
  // Keys kernel with a = -0.75 (what cv2.INTER_CUBIC uses)
  const a = -0.75;
  const at = Math.abs(t);
  if (at <= 1) return (a + 2) * at ** 3 - (a + 3) * at ** 2 + 1;
  if (at < 2) return a * at ** 3 - 5 * a * at ** 2 + 8 * a * at - 4 * a;
  return 0;
}

export function resizeRgb(
  img: RgbImage,
  outWidth: number,
  outHeight: number,
  interpolation: Interpolation,
): RgbImage {
  const { width, height, data } = img;
  const out = new Float32Array(outWidth * outHeight * 3);
  const sx = width / outWidth;
  const sy = height / outHeight;
  const clamp = (v: number, lo: number, hi: number) => Math.min(Math.max(v, lo), hi);

  for (let oy = 0; oy < outHeight; oy++) {
    const fy = (oy + 0.5) * sy - 0.5;
    for (let ox = 0; ox < outWidth; ox++) {
      const fx = (ox + 0.5) * sx - 0.5;
      for (let c = 0; c < 3; c++) {
        let value: number;
        if (interpolation === 'bilinear') {
          const x0 = clamp(Math.floor(fx), 0, width - 1);
          const y0 = clamp(Math.floor(fy), 0, height - 1);
          const x1 = clamp(x0 + 1, 0, width - 1);
          const y1 = clamp(y0 + 1, 0, height - 1);
          const tx = clamp(fx - x0, 0, 1);
          const ty = clamp(fy - y0, 0, 1);
          const p00 = data[(y0 * width + x0) * 3 + c];
          const p01 = data[(y0 * width + x1) * 3 + c];
          const p10 = data[(y1 * width + x0) * 3 + c];
          const p11 = data[(y1 * width + x1) * 3 + c];
          value =
            p00 * (1 - tx) * (1 - ty) +
            p01 * tx * (1 - ty) +
            p10 * (1 - tx) * ty +
            p11 * tx * ty;
        } else {
          const xi = Math.floor(fx);
          const yi = Math.floor(fy);
          value = 0;
          let wsum = 0;
          for (let dy = -1; dy <= 2; dy++) {
            const wy = cubicWeight(fy - (yi + dy));
            if (wy === 0) continue;
            const yy = clamp(yi + dy, 0, height - 1);
            for (let dx = -1; dx <= 2; dx++) {
              const wx = cubicWeight(fx - (xi + dx));
              if (wx === 0) continue;
              const xx = clamp(xi + dx, 0, width - 1);
              value += wy * wx * data[(yy * width + xx) * 3 + c];
              wsum += wy * wx;
            }
          }
          value /= wsum;
        }
        out[(oy * outWidth + ox) * 3 + c] = value;
      }
    }
  }
  return { width: outWidth, height: outHeight, data: out };
}

/** (x - mean) / std per channel, then repack to NCHW for the model input. */
export function toNormalizedChw(
  img: RgbImage,
  mean: readonly [number, number, number],
  std: readonly [number, number, number],
): Float32Array {
  const n = img.width * img.height;
  const out = new Float32Array(3 * n);
  for (let i = 0; i < n; i++) {
    for (let c = 0; c < 3; c++) {
      out[c * n + i] = (img.data[i * 3 + c] - mean[c]) / std[c];
    }
  }
  return out;
}
