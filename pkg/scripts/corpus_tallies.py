"""Per-size tallies over the enumerated corpus.

    python3 scripts/corpus_tallies.py --max-size 6 --jobs 4
"""

from __future__ import annotations

import argparse
import json
import time
from dataclasses import asdict, dataclass

from reslat.search import MAX_SIZE, Corpus, build_corpus, verify_corpus


@dataclass
class TallyConfig:
    max_size: int = 5
    jobs: int = 1
    as_json: bool = False


def run(cfg: TallyConfig) -> list[dict]:
    rows = []
    for n in range(2, cfg.max_size + 1):
        start = time.perf_counter()
        corpus = build_corpus(n, jobs=cfg.jobs, min_size=n)
        result = verify_corpus(Corpus(corpus.algebras, n), jobs=cfg.jobs)
        rows.append({"size": n, "lattices": corpus.lattice_counts[n], **result.tallies,
                     "seconds": round(time.perf_counter() - start, 2)})
    return rows


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--max-size", type=int, default=TallyConfig.max_size, choices=range(2, MAX_SIZE + 1))
    p.add_argument("--jobs", type=int, default=TallyConfig.jobs)
    p.add_argument("--json", dest="as_json", action="store_true")
    cfg = TallyConfig(**vars(p.parse_args()))
    rows = run(cfg)
    if cfg.as_json:
        print(json.dumps({"config": asdict(cfg), "rows": rows}, indent=2))
        return
    cols = ["size", "lattices", "total", "dnl", "prelinear", "divisible", "mv",
            "neg_image_not_subuniverse", "failures", "seconds"]
    print("  ".join(cols))
    for row in rows:
        print("  ".join(str(row[c]).rjust(len(c)) for c in cols))


if __name__ == "__main__":
    main()
