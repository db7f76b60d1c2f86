"""Time the per-prime verification pipeline at a few sweep sizes."""

import argparse
import time
from dataclasses import dataclass, field

from lambda_norms.verify import verify_theorems


@dataclass
class TimingConfig:
    sizes: list[int] = field(default_factory=lambda: [250, 500, 1000, 2000])
    jobs: int = 1


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--sizes", type=int, nargs="+", default=TimingConfig().sizes)
    ap.add_argument("--jobs", type=int, default=1)
    cfg = TimingConfig(**vars(ap.parse_args(argv)))

    print(f"{'p_max':>6} {'primes':>7} {'seconds':>8} passed")
    for n in cfg.sizes:
        start = time.perf_counter()
        report = verify_theorems(n, jobs=cfg.jobs)
        elapsed = time.perf_counter() - start
        print(f"{n:>6} {len(report.results):>7} {elapsed:>8.2f} {report.all_passed}")


if __name__ == "__main__":
    main()
