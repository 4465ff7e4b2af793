"""Soundness sweep: run the pipeline on many planted instances and re-check
every certificate.  Prints a tally of outcome kinds and routes.

    python3 scripts/fuzz_soundness.py --cases 2000 --max-k 9 --seed 1
"""

import argparse
import json
import random
import time
from collections import Counter
from dataclasses import asdict, dataclass

from webextract.certify import verify_certificate
from webextract.extraction import ExtractionParams, main_extract
from webextract.web_model import plant_subdivision, profile


@dataclass
class SweepConfig:
    cases: int = 1000
    max_k: int = 9
    max_len: int = 3
    noise: tuple = (0.0, 0.05, 0.15)
    max_s: int = 5
    max_t: int = 4
    mode: str = "exact"
    budget: int | None = None
    seed: int = 0


def sweep(cfg: SweepConfig) -> dict:
    rng = random.Random(cfg.seed)
    tally = Counter()
    failures = []
    start = time.perf_counter()
    for i in range(cfg.cases):
        k = rng.randint(1, cfg.max_k)
        lo = rng.randint(1, cfg.max_len)
        hi = rng.randint(lo, cfg.max_len)
        noise = rng.choice(cfg.noise)
        g, web = plant_subdivision(k, (lo, hi), noise, seed=cfg.seed * 100003 + i)
        params = ExtractionParams(
            r=profile(web).r_value, s=rng.randint(1, cfg.max_s), t=rng.randint(1, cfg.max_t),
            search_mode=cfg.mode, budget=cfg.budget,
        )
        cert = main_extract(g, web, params)
        tally[f"{cert.kind}/{cert.route}"] += 1
        if cert.conclusive:
            verdict = verify_certificate(g, web, cert)
            if not verdict.ok:
                failures.append({"case": i, "k": k, "clause": verdict.clause})
    return {
        "config": asdict(cfg),
        "seconds": round(time.perf_counter() - start, 3),
        "outcomes": dict(sorted(tally.items())),
        "failures": failures,
    }


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--cases", type=int, default=1000)
    ap.add_argument("--max-k", type=int, default=9)
    ap.add_argument("--mode", choices=("exact", "constructive"), default="exact")
    ap.add_argument("--budget", type=int)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    cfg = SweepConfig(cases=args.cases, max_k=args.max_k, mode=args.mode, budget=args.budget, seed=args.seed)
    report = sweep(cfg)
    print(json.dumps(report, indent=1))
    raise SystemExit(1 if report["failures"] else 0)


if __name__ == "__main__":
    main()
