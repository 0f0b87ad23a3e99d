export { encodePfm, readPfm, writePfm, type FloatMap } from './pfm';
export { readManifest, type Manifest, type SceneRecord } from './manifest';
export { writeSidecar, type Space } from './sidecar';
export { readRgbPng, resizeRgb, toNormalizedChw, type RgbImage } from './image';
export { MODELS, getModelSpec, resolveCheckpoint, type ModelSpec } from './models';
export { runAdapter, type AdapterConfig, type AdapterRun } from './infer';
