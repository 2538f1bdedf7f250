"""Frame transforms and CutMix, the two training-time augmentations.

Run from the repo root:  python3 demos/03_augmentation.py
"""

import numpy as np

from dfdet.augment import AugPolicy, augment_clip, augment_frame, cutmix

rng = np.random.default_rng(42)

# A policy holds per-transform probabilities and magnitudes. augment_frame
# samples a plan from the rng, applies it, then normalizes to [-1, 1].
frame = rng.uniform(0, 1, size=(64, 64, 3)).astype(np.float32)
policy = AugPolicy()
out = augment_frame(frame, policy, rng)
print(f"augment_frame: {frame.shape} {frame.dtype} -> {out.shape} {out.dtype}")
print(f"  value range {out.min():.3f} .. {out.max():.3f} (normalized)")

# .off() zeroes every probability; with normalize the result is exactly
# the rescaled input. Useful as the deterministic evaluation path.
plain = augment_frame(frame, AugPolicy().off(), rng)
print(f"  off() policy is rescaling only: max|diff| = "
      f"{np.abs(plain - (frame - 0.5) / 0.5).max():.1e}")

# Clips share one sampled plan across frames so temporal patterns survive.
clip = rng.uniform(0, 1, size=(8, 32, 32, 3)).astype(np.float32)
aug = augment_clip(clip, policy, rng)
print(f"augment_clip: {clip.shape} -> {aug.shape} (one plan for all frames)")

# CutMix pastes one box from a donor batch into a recipient batch and
# mixes the labels by the surviving-area ratio lambda. The same box is
# used in every frame of a clip, so temporal signals stay coherent.
rec = rng.uniform(-0.5, 0.5, size=(2, 3, 8, 32, 32)).astype(np.float32)
don = rng.uniform(-0.5, 0.5, size=(2, 3, 8, 32, 32)).astype(np.float32)
labels_r = np.array([0.0, 1.0])
labels_d = np.array([1.0, 0.0])
mixed, mixed_labels, res = cutmix(rec, don, labels_r, labels_d, rng)
x, y, w, h = res.box
print(f"cutmix: box x={x} y={y} w={w} h={h}  lambda={res.lam:.4f}")
print(f"  exact area ratio: 1 - {w}*{h}/(32*32) = {1 - w * h / 1024:.4f}")
print(f"  mixed labels: {np.round(mixed_labels, 4)}")
changed = (mixed != rec).any(axis=(1, 2))
print(f"  pixels taken from donor per clip: {changed.sum(axis=(-2, -1))}"
      f" (= {w}*{h} box each)")
