"""Miniature end-to-end run: corpus -> two branches -> fused verdicts.

Numbers from a corpus this small are noise; the point is the moving
parts. Takes about a minute. Run from the repo root:

    python3 demos/05_train_and_fuse.py
"""

import numpy as np

from dfdet.attention2d import build_attention2d, export_attention_map
from dfdet.augment import AugPolicy
from dfdet.ensemble import EnsembleConfig, fit_and_evaluate
from dfdet.optim import TrainConfig
from dfdet.synthvid import ArtifactConfig, generate_corpus
from dfdet.training import load_split, train
from dfdet.zoo3d import build_3d

OUT = "demos/out/corpus_e2e"

man = generate_corpus(
    8, 16, ArtifactConfig(), seed=3, out_dir=OUT,
    split_counts={"train": (4, 8), "val": (2, 4), "test": (2, 4)},
    n_frames=12,
)
print(f"corpus: {len(man.rows)} videos")

policy = AugPolicy().off()
policy.p_hflip = 0.5

m2 = build_attention2d(seed=1)
_, hist = train(
    m2, man, "2d",
    TrainConfig(lr=1e-3, batch_size=16, epochs=3, seed=1, balanced=True,
                frames_per_video=3),
    policy=policy,
)
print("2d history:")
for row in hist:
    print(f"  epoch {row['epoch']}: train_logloss={row['train_logloss']:.4f} "
          f"val_logloss={row['val_logloss']:.4f} val_auc={row['val_auc']:.4f}")

m3 = build_3d("r2p1d_lite", seed=1)
train(
    m3, man, "3d",
    TrainConfig(lr=1e-3, batch_size=8, epochs=2, seed=1, balanced=True, clip_len=8),
    policy=policy,
)
print("3d branch trained (r2p1d_lite, 2 epochs)")

ev, used = fit_and_evaluate(
    man, m2, [m3], EnsembleConfig(weight_fit="adaptive"),
    frames_per_video=3, clip_len=8,
)
print(f"\nfitted weights: w3d={used.w3d:.2f} w2d={used.w2d:.2f}")
for name, rep in ev.reports.items():
    print(f"  {name:>12}: auc={rep.auc:.3f} logloss={rep.logloss:.3f}")

print("\nper-video verdicts (test split):")
for v in ev.verdicts.rows:
    print(f"  {v.video_id:>10} p2d={v.p2d:.3f} p3d={v.p3d:.3f} "
          f"fused={v.fused:.3f} label={v.label} pred={v.pred}")

# Where does the 2D model look? Export its attention gate for one test fake.
fakes = load_split(man, "test", "2d", out_size=64, frames_per_video=1)
fake = next(v for v in fakes if v.label == 1)
export_attention_map(m2, fake.crops[0], "demos/out/attention.pgm")
print("\nwrote demos/out/attention.pgm (P2 text PGM, bright = attended)")
