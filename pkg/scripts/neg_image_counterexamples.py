"""List algebras whose negation image is not closed under the operations.

For each one, print the image, its closure and the first closure violation.

    python3 scripts/neg_image_counterexamples.py --max-size 5
"""

from __future__ import annotations

import argparse
from dataclasses import dataclass

from reslat.formats import render_algebra
from reslat.search import MAX_SIZE, build_corpus
from reslat.subuniverse import closure, closure_violations, neg_fixed


@dataclass
class ScanConfig:
    max_size: int = 5
    jobs: int = 1
    show_tables: bool = False


def tokens(rl, ids) -> str:
    return "{" + ",".join(rl.elements[i] for i in ids) + "}"


def scan(cfg: ScanConfig):
    corpus = build_corpus(cfg.max_size, jobs=cfg.jobs)
    for rl in corpus:
        image = neg_fixed(rl)
        bad = closure_violations(rl, image)
        if bad:
            yield rl, image, bad


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--max-size", type=int, default=ScanConfig.max_size, choices=range(2, MAX_SIZE + 1))
    p.add_argument("--jobs", type=int, default=ScanConfig.jobs)
    p.add_argument("--show-tables", action="store_true")
    cfg = ScanConfig(**vars(p.parse_args()))
    count = 0
    for rl, image, bad in scan(cfg):
        count += 1
        op, x, y = bad[0]
        z = {"join": rl.join, "meet": rl.meet, "otimes": rl.otimes, "arrow": rl.arrow}[op][x][y]
        print(f"{rl.name}: image {tokens(rl, image)} closure {tokens(rl, closure(rl, image))}; "
              f"{op}({rl.elements[x]},{rl.elements[y]}) = {rl.elements[z]}")
        if cfg.show_tables:
            print(render_algebra(rl))
    print(f"{count} algebra(s) up to size {cfg.max_size}")


if __name__ == "__main__":
    main()
