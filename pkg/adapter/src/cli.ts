#!/usr/bin/env node
/**
 * sizecue-adapter --model midas-small --dataset data/ --out preds/midas-small/
 *
 * Exit code 0 only if every scene produced a prediction; any skipped scene
 * is reported and makes the run exit 1.
 */

import yargs from 'yargs';
import { hideBin } from 'yargs/helpers';

import { runAdapter } from './infer';
import { MODELS } from './models';

async function main(): Promise<number> {
  const argv = await yargs(hideBin(process.argv))
    .option('model', {
      type: 'string',
      demandOption: true,
      choices: Object.keys(MODELS),
      describe: 'model selector',
    })
    .option('dataset', { type: 'string', demandOption: true, describe: 'generated dataset dir' })
    .option('out', { type: 'string', demandOption: true, describe: 'output dir for PFMs + sidecar' })
    .option('device', { type: 'string', choices: ['cpu', 'cuda'] as const, default: 'cpu' })
    .option('checkpoint', { type: 'string', describe: 'local checkpoint path (skips download)' })
    .option('cache-dir', { type: 'string', describe: 'checkpoint cache dir' })
    .option('limit', { type: 'number', describe: 'process only the first N scenes' })
    .strict()
    .parse();

  const run = await runAdapter({
    model: argv.model,
    dataset: argv.dataset,
    out: argv.out,
    device: argv.device as 'cpu' | 'cuda',
    checkpoint: argv.checkpoint,
    cacheDir: argv['cache-dir'],
    limit: argv.limit,
  });

  console.log(`${run.written.length} predictions -> ${run.sidecarPath}`);
  for (const s of run.skipped) {
    console.error(`skipped ${s.sceneId}: ${s.error}`);
  }
  return run.skipped.length > 0 ? 1 : 0;
}

main().then(
  (code) => process.exit(code),
  (err) => {
    console.error(`error: ${err instanceof Error ? err.message : err}`);
    process.exit(1);
  },
);
