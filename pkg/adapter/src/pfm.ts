/**
 * Grayscale PFM encoding, matching the harness byte-for-byte:
 * header "Pf\n<W> <H>\n-1.0\n", then little-endian float32 rows stored
 * bottom-up. The evaluator reads these files with a strict parser, so the
 * writer refuses anything (NaN, Inf, negatives) the harness would reject.
 */

import { readFileSync, writeFileSync } from 'fs';

export interface FloatMap {
  width: number;
  height: number;
  /** row-major, top-down, length = width * height */
  data: Float32Array;
}

export function encodePfm(map: FloatMap): Buffer {
  const { width, height, data } = map;
  if (data.length !== width * height) {
    throw new Error(`pfm: data length ${data.length} != ${width}x${height}`);
  }
  for (let i = 0; i < data.length; i++) {
    const v = data[i];
    if (!Number.isFinite(v)) throw new Error(`pfm: non-finite value at index ${i}`);
    if (v < 0) throw new Error(`pfm: negative value ${v} at index ${i}`);
  }
  const header = Buffer.from(`Pf\n${width} ${height}\n-1.0\n`, 'ascii');
  const payload = Buffer.alloc(width * height * 4);
  for (let y = 0; y < height; y++) {
    const srcRow = height - 1 - y; // bottom-up
    for (let x = 0; x < width; x++) {
      payload.writeFloatLE(data[srcRow * width + x], (y * width + x) * 4);
    }
  }
  return Buffer.concat([header, payload]);
}

export function writePfm(path: string, map: FloatMap): void {
  writeFileSync(path, encodePfm(map));
}

export function readPfm(path: string): FloatMap {
  const raw = readFileSync(path);
  const text = raw.subarray(0, 64).toString('ascii');
  const m = /^Pf\n(\d+) (\d+)\n(-?[\d.eE+-]+)\n/.exec(text);
  if (!m) throw new Error(`pfm: malformed header in ${path}`);
  const width = parseInt(m[1], 10);
  const height = parseInt(m[2], 10);
  if (parseFloat(m[3]) >= 0) throw new Error(`pfm: big-endian scale in ${path}`);
  const offset = m[0].length;
  const expected = width * height * 4;
  if (raw.length - offset !== expected) {
    throw new Error(
      `pfm: payload is ${raw.length - offset} bytes, expected ${expected} in ${path}`,
    );
  }
  const data = new Float32Array(width * height);
  for (let y = 0; y < height; y++) {
    const dstRow = height - 1 - y;
    for (let x = 0; x < width; x++) {
      data[dstRow * width + x] = raw.readFloatLE(offset + (y * width + x) * 4);
    }
  }
  return { width, height, data };
}
