"""Wall-clock cost of the class pipelines on the corpus germs.

For each germ: graph limit plus Lagrangian specialisation, then the Euler
relation at the origin and at two seeded smooth points.

    python3 scripts/timings.py [--seed N] [--germs A1 E8 ...]
"""
import argparse
import random
import time

from singcycles.charclass import graph_limit_cycle, lagrangian_specialisation
from singcycles.constructible import check_euler_relation
from singcycles.idealeng.generic import GenericityPolicy, use_policy
from singcycles.polycore import ring
from singcycles.singlocal import jacobian_ideal

from corpus_table import CORPUS


def smooth_points(f, rng, count=2):
    J = jacobian_ideal(f)
    pts = []
    while len(pts) < count:
        p = (rng.randint(-3, 3), rng.randint(-3, 3))
        if p not in pts and any(g.evaluate(p) for g in J.generators):
            pts.append(p)
    return pts


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--germs", nargs="*", default=list(CORPUS))
    args = ap.parse_args()
    R = ring("x y")
    rng = random.Random(args.seed)
    print(f"{'germ':<6}{'limits s':>10}{'euler s':>10}  ok")
    with use_policy(GenericityPolicy(seed=args.seed)):
        for name in args.germs:
            f = R(CORPUS[name])
            t0 = time.perf_counter()
            graph_limit_cycle(f)
            lagrangian_specialisation(f)
            t1 = time.perf_counter()
            rep = check_euler_relation(f, [(0, 0)] + smooth_points(f, rng))
            t2 = time.perf_counter()
            print(f"{name:<6}{t1 - t0:>10.2f}{t2 - t1:>10.2f}  {rep.passed}")


if __name__ == "__main__":
    main()
