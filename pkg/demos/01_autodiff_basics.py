"""A tour of the tensor engine: tapes, kernels, and a finite-difference check.

Run from the repo root:  python3 demos/01_autodiff_basics.py
"""

import numpy as np

from dfdet.convops import conv2d
from dfdet.tensor import GradientTape, Tensor, dense, relu, sum_all

rng = np.random.default_rng(0)

# Every differentiable value lives in a Tensor. Gradients only flow while
# a GradientTape is open; backward() fills .grad on everything upstream.
w = Tensor(rng.standard_normal((3, 2)))
x = Tensor(rng.standard_normal((4, 3)))
with GradientTape() as tape:
    y = sum_all(relu(dense(x, w)))
    tape.backward(y)
print("loss:", float(y.data))
print("dL/dw:\n", w.grad)

# The same tape machinery drives the convolution kernels. Compare the
# analytic gradient of one weight coordinate against central differences.
x = Tensor(rng.standard_normal((1, 2, 6, 6)))
w = Tensor(rng.standard_normal((3, 2, 3, 3)))
with GradientTape() as tape:
    loss = sum_all(conv2d(x, w, stride=1, padding=1))
    tape.backward(loss)

step = 1e-4
orig = w.data[0, 0, 0, 0]


def loss_at(v):
    w.data[0, 0, 0, 0] = v
    out = float(sum_all(conv2d(x, w, stride=1, padding=1)).data)
    w.data[0, 0, 0, 0] = orig
    return out


numeric = (loss_at(orig + step) - loss_at(orig - step)) / (2 * step)
analytic = w.grad[0, 0, 0, 0]
print(f"conv2d dL/dw[0,0,0,0]: analytic={analytic:.8f} numeric={numeric:.8f}")
print(f"relative error: {abs(analytic - numeric) / abs(numeric):.2e}")
