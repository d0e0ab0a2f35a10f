"""Time the compiled kernels against the pure-Python fallback.

    python3 benchmarks/bench_kernels.py [--repeat N]

Also times a full symbol workload under both backends by running it in a
subprocess with ``CCSYMBOL_PURE_PYTHON`` set and unset.
"""

from __future__ import annotations

import argparse
import os
import random
import subprocess
import sys
import timeit

from ccsymbol._kernels import _slow

try:
    from ccsymbol._kernels import _fast
except ImportError:
    _fast = None

WORKLOAD = """
import random, time
from ccsymbol import cc_symbol, parse_ring_spec
from ccsymbol.sampling import sample_profile
rng = random.Random(0)
start = time.perf_counter()
for spec in ("Z/27", "F5[e]/e^3"):
    ring = parse_ring_spec(spec)
    for _ in range(300):
        f, g = sample_profile(ring, "anyGamma", rng), sample_profile(ring, "anyGamma", rng)
        cc_symbol(f, g)
print(time.perf_counter() - start)
"""


def _kernel_cases():
    rng = random.Random(1)
    m = 3**3
    a = [rng.randrange(m) for _ in range(200)]
    b = [rng.randrange(m) for _ in range(200)]
    c = [1] + [rng.randrange(m) for _ in range(200)]
    ta = [tuple(rng.randrange(5) for _ in range(3)) for _ in range(100)]
    tb = [tuple(rng.randrange(5) for _ in range(3)) for _ in range(100)]
    tc = [(1, 0, 0)] + ta[1:]
    return {
        "conv_mod n=200": lambda k: k.conv_mod(a, b, 400, m),
        "pos_params_mod K=200": lambda k: k.pos_params_mod(c, 200, m),
        "conv_trunc_mod n=100 nu=3": lambda k: k.conv_trunc_mod(ta, tb, 200, 5, 3),
        "pos_params_trunc_mod K=100 nu=3": lambda k: k.pos_params_trunc_mod(tc, 100, 5, 3),
    }


def _workload(pure: bool) -> float:
    env = dict(os.environ)
    if pure:
        env["CCSYMBOL_PURE_PYTHON"] = "1"
    else:
        env.pop("CCSYMBOL_PURE_PYTHON", None)
    out = subprocess.run([sys.executable, "-c", WORKLOAD], env=env, capture_output=True, text=True, check=True)
    return float(out.stdout)


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=20)
    args = parser.parse_args()
    if _fast is None:
        print("compiled kernels are not built; nothing to compare")
        return
    print(f"{'kernel':34s} {'python (ms)':>12s} {'cython (ms)':>12s} {'speedup':>8s}")
    for name, fn in _kernel_cases().items():
        slow = min(timeit.repeat(lambda: fn(_slow), number=1, repeat=args.repeat)) * 1e3
        fast = min(timeit.repeat(lambda: fn(_fast), number=1, repeat=args.repeat)) * 1e3
        print(f"{name:34s} {slow:12.3f} {fast:12.3f} {slow / fast:7.1f}x")
    slow, fast = _workload(True), _workload(False)
    print(f"{'symbol workload (600 pairs)':34s} {slow * 1e3:12.1f} {fast * 1e3:12.1f} {slow / fast:7.1f}x")


if __name__ == "__main__":
    main()
