"""Time a catalog sweep under each rational backend.

    python3 benchmarks/bench_backends.py [--N 2..5] [--samples 3]

Each backend runs in its own interpreter because the backend is chosen at import.
"""

from __future__ import annotations

import argparse
import os
import subprocess
import sys
import tempfile
import time
from pathlib import Path


def run(backend: str, N: str, samples: int) -> tuple[float, int]:
    env = dict(os.environ)
    env["ASKEY_SCALAR_BACKEND"] = backend
    with tempfile.TemporaryDirectory() as tmp:
        cmd = [sys.executable, "-m", "askey_contiguity.cli", "sweep", "--all", "--N", N, "--samples", str(samples),
               "--quiet", "-o", str(Path(tmp) / "report.json")]
        start = time.perf_counter()
        code = subprocess.run(cmd, env=env, stdout=subprocess.DEVNULL).returncode
        return time.perf_counter() - start, code


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--N", default="2..5")
    ap.add_argument("--samples", type=int, default=3)
    args = ap.parse_args()
    for backend in ("gmpy2", "fraction"):
        seconds, code = run(backend, args.N, args.samples)
        print(f"{backend:9s} {seconds:7.2f} s  exit {code}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
