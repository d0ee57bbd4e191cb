"""Compare the compiled patch kernels against the pure-numpy fallback.

Runs im2col/col2im over the shapes a 64px training step actually hits and
reports per-call times plus an end-to-end training-step comparison
(SHRELIGHT_KERNELS=numpy selects the fallback at import time, so the
end-to-end numbers come from subprocesses).

Usage: python3 benchmarks/bench_kernels.py
"""
import os
import subprocess
import sys
import time

import numpy as np

sys.path.insert(0, os.path.join(os.path.dirname(__file__), os.pardir, "src"))

from shrelight.kernels import _numpy  # noqa: E402

try:
    from shrelight.kernels import _fast
except ImportError:
    _fast = None

# (n, c, h, w, k, stride, pad) pairs seen in one desk-config forward pass
SHAPES = [
    (1, 3, 64, 64, 3, 1, 1),
    (1, 16, 64, 64, 3, 2, 1),
    (1, 48, 64, 64, 3, 1, 1),
    (1, 32, 32, 32, 3, 2, 1),
    (1, 96, 32, 32, 3, 1, 1),
    (1, 64, 16, 16, 3, 2, 1),
    (1, 128, 16, 16, 3, 1, 1),
    (1, 64, 4, 4, 3, 1, 1),
]

STEP_SNIPPET = r"""
import time
import numpy as np
from shrelight import kernels
from shrelight import model as M
from shrelight.augment import analytic_proximity
from shrelight.config import ModelConfig
from shrelight.image import ColorSpace, ImageTensor
from shrelight.optim import Adam

cfg = ModelConfig()
net = M.RelightModel(cfg, seed=0)
rng = np.random.default_rng(0)
img = ImageTensor(rng.uniform(0, 1, size=(64, 64, 3)), ColorSpace.RGB)
prox = analytic_proximity(64, 64, 32, 32, 24)
light = M.sample_light(rng)
opt = Adam(net.named_parameters(), lr=1e-3)

def step():
    loss, _ = M.total_loss(net, img, light, prox, rng)
    loss.backward(); opt.step(); net.zero_grad()

step()
t0 = time.perf_counter()
for _ in range(5):
    step()
print(f"{kernels.BACKEND} backend: {(time.perf_counter() - t0) / 5:.3f} s/step")
"""


def bench(impl, name):
    rng = np.random.default_rng(0)
    total = 0.0
    print(f"-- {name} --")
    for n, c, h, w, k, s, p in SHAPES:
        x = rng.normal(size=(n, c, h, w)).astype(np.float32)
        cols = impl.im2col(x, k, s, p)
        reps = 50
        t0 = time.perf_counter()
        for _ in range(reps):
            impl.im2col(x, k, s, p)
        fwd = (time.perf_counter() - t0) / reps
        t0 = time.perf_counter()
        for _ in range(reps):
            impl.col2im(cols, x.shape, k, s, p)
        bwd = (time.perf_counter() - t0) / reps
        total += fwd + bwd
        print(f"  c={c:3d} {h}x{w} stride={s}: im2col {fwd * 1e6:7.1f} us, "
              f"col2im {bwd * 1e6:7.1f} us")
    print(f"  shape-suite total: {total * 1e3:.2f} ms")
    return total


def main():
    t_numpy = bench(_numpy, "numpy fallback")
    if _fast is None:
        print("compiled backend unavailable; build with pip install -e .")
        return
    t_fast = bench(_fast, "cython")
    print(f"kernel speedup: {t_numpy / t_fast:.2f}x")
    print("-- end-to-end training step --")
    for backend in ("", "numpy"):
        env = dict(os.environ, SHRELIGHT_KERNELS=backend)
        subprocess.run([sys.executable, "-c", STEP_SNIPPET], env=env, check=True)


if __name__ == "__main__":
    main()
