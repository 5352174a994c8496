"""Compare the jitted and pure-numpy convolution/pooling kernels.

Runs each implementation on the same inputs, checks agreement, and prints a
timing table.  The first jitted call includes compilation; a warmup pass is
timed out of band.
"""

import time

import numpy as np

from rashomon import kernels
from rashomon.rng import normal, stream


def timeit(fn, *args, repeats=5):
    best = np.inf
    result = None
    for _ in range(repeats):
        start = time.perf_counter()
        result = fn(*args)
        best = min(best, time.perf_counter() - start)
    return best, result


def main():
    if not kernels._HAVE_NUMBA:
        print("numba unavailable; nothing to compare")
        return
    gen = stream(0, "init")
    x = normal(gen, (32, 28, 28, 8))
    kernel = normal(gen, (3, 3, 8, 16)) * 0.1
    bias = normal(gen, (16,)) * 0.1
    grad = normal(gen, (32, 28, 28, 16))

    cases = [
        ("conv2d_forward", (x, kernel, bias, 1, 1),
         kernels.conv2d_forward_numpy, kernels.conv2d_forward_numba),
        ("conv2d_backward", (x, kernel, 1, 1, grad),
         kernels.conv2d_backward_numpy, kernels.conv2d_backward_numba),
    ]
    pooled, idx = kernels.maxpool_forward_numpy(x, 2)
    cases += [
        ("maxpool_forward", (x, 2),
         kernels.maxpool_forward_numpy, kernels.maxpool_forward_numba),
        ("maxpool_backward", (pooled, idx, x.shape, 2),
         kernels.maxpool_backward_numpy, kernels.maxpool_backward_numba),
    ]

    print(f"{'kernel':<18} {'numpy (ms)':>12} {'numba (ms)':>12} {'speedup':>9}  agree")
    for name, args, numpy_fn, numba_fn in cases:
        numba_fn(*args)  # compile outside the timed region
        t_np, r_np = timeit(numpy_fn, *args)
        t_nb, r_nb = timeit(numba_fn, *args)
        flat = lambda r: np.concatenate([np.ravel(np.asarray(p, dtype=float)) for p in (r if isinstance(r, tuple) else (r,))])
        agree = np.allclose(flat(r_np), flat(r_nb), atol=1e-10)
        print(f"{name:<18} {t_np * 1e3:>12.2f} {t_nb * 1e3:>12.2f} {t_np / t_nb:>8.1f}x  {agree}")


if __name__ == "__main__":
    main()
