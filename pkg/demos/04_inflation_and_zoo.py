"""The 3D model zoo and 2D -> 3D weight inflation.

Run from the repo root:  python3 demos/04_inflation_and_zoo.py
"""

import numpy as np

from dfdet.attention2d import preprocess_faces
from dfdet.zoo3d import (
    ARCH_KINDS,
    build_3d,
    build_inception2d_lite,
    inflate_2d_to_3d,
    inflate_inception,
)

rng = np.random.default_rng(3)

# Four clip classifiers share one interface: forward_clip / score on
# (N, 3, T, S, S) input.
clip = rng.uniform(-1, 1, size=(2, 3, 8, 64, 64)).astype(np.float32)
for kind in ARCH_KINDS:
    model = build_3d(kind, seed=1)
    n = sum(int(np.prod(t.data.shape)) for _, t in model.named_params())
    scores = model.score(clip)
    print(f"{kind:>12}: {n:>7} params  scores {np.round(scores.ravel(), 3)}")

# Inflation turns a (C_out, C_in, kh, kw) kernel into (C_out, C_in, kt, kh, kw)
# by temporal replication divided by kt, so summing over time recovers the
# original response on constant-in-time input.
w2d = rng.standard_normal((4, 2, 3, 3)).astype(np.float32)
w3d = inflate_2d_to_3d(w2d, kt=3)
print(f"\ninflate_2d_to_3d: {w2d.shape} -> {w3d.shape}")
print(f"  temporal sum equals the 2D kernel: "
      f"max|diff| = {np.abs(w3d.sum(axis=2) - w2d).max():.2e}")

# A whole 2D inception net inflates into a clip model that agrees with its
# twin on "boring" videos (the same frame repeated T times).
twin2d = build_inception2d_lite(seed=5)
inflated = inflate_inception(twin2d, kt=3, seed=5)
face = rng.integers(0, 256, size=(1, 64, 64, 3), dtype=np.uint8)
x2d = preprocess_faces(face)
s2d = float(twin2d.score(x2d).ravel()[0])
boring = np.repeat(x2d[:, :, None, :, :], 8, axis=2)
s3d = float(inflated.score(boring).ravel()[0])
print(f"\nboring-video check: 2D score {s2d:+.6f} "
      f"vs inflated 3D {s3d:+.6f} (diff {abs(s2d - s3d):.1e})")
