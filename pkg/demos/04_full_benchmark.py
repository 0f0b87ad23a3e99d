"""The whole pipeline: dataset -> predictions -> evaluation -> bar chart.

Stands in two fake "methods" for real model adapters:
  * sharp-disparity: accurate inverse-depth with mild noise (it "sees" the
    relative-size cue)
  * cue-blind: predicts a generic disparity ramp that ignores the objects
    entirely, so both cylinders come out at about the same depth

The cue-blind method is the interesting one: the near (large) object
dominates plain per-pixel metrics, so it scores decently anyway; balancing
the objects exposes that it got the far one completely wrong.

Their prediction sidecars use the same wire format a real adapter writes,
so this is exactly the path externally produced predictions take.
"""

from pathlib import Path

import numpy as np

from sizecue import (
    SweepConfig,
    aggregate,
    evaluate_scene_files,
    generate_dataset,
    read_manifest,
    read_pfm,
    read_sidecar,
    render_report,
    write_pfm,
    write_sidecar,
)

root = Path(__file__).parent / "out" / "benchmark"
ds = root / "dataset"

config = SweepConfig(distance_grid=tuple(np.linspace(2.5, 14.0, 8)), seed=7)
generate_dataset(config, ds, jobs=2)
_, records = read_manifest(ds)
print(f"dataset: {len(records)} scenes")

rng = np.random.default_rng(123)
methods = {
    "sharp-disparity": "inverse_depth",
    "cue-blind": "inverse_depth",
}
for method, space in methods.items():
    mdir = root / "preds" / method
    mdir.mkdir(parents=True, exist_ok=True)
    files = {}
    for rec in records:
        gt = read_pfm(ds / rec["files"]["depth"]).astype(np.float64)
        on = gt > 0
        if method == "sharp-disparity":
            pred = np.zeros_like(gt)
            pred[on] = 1.0 / gt[on] + rng.normal(0, 0.01, size=int(on.sum()))
        else:
            # generic disparity ramp, blind to the objects in the frame
            rows = np.arange(gt.shape[0], dtype=np.float64)[:, None]
            pred = 0.25 - 0.0004 * (rows - 128.0) + rng.normal(0, 0.01, gt.shape)
        pred = np.clip(pred, 1e-4, None)
        files[rec["scene_id"]] = f"{rec['scene_id']}.pfm"
        write_pfm(pred, mdir / files[rec["scene_id"]])
    write_sidecar(mdir / "sidecar.json", method, space, files)

results = []
for method in methods:
    for pred_rec in read_sidecar(root / "preds" / method / "sidecar.json"):
        manifest_rec = next(r for r in records if r["scene_id"] == pred_rec.scene_id)
        results.append(
            evaluate_scene_files(
                ds, manifest_rec, pred_rec.file, pred_rec.space, method
            )
        )

summaries = aggregate(results)
for name, s in summaries.items():
    print(f"{name:>16}: delta1 plain {s.plain.delta1:.3f} / "
          f"balanced {s.balanced.delta1:.3f}  "
          f"abs_rel plain {s.plain.abs_rel:.4f}")

paths = render_report(summaries, root / "report")
print("report written:", ", ".join(p.name for p in paths))
