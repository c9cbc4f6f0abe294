"""Invariants of the hypersurface corpus at the origin.

Prints the Milnor number from the Milnor algebra and from the Segre integral
over Sigma_f, the Milnor-fibre Euler characteristic from the total transform,
the literal Bl_Y M fibre integral (a diagnostic that only agrees for the
node), and the graph-limit classes.

    python3 scripts/corpus_table.py [--seed N]
"""
import argparse

from singcycles.charclass import blowup_fibre_integral, chi_at_point, graph_limit_cycle, mu_at_point
from singcycles.idealeng.generic import GenericityPolicy, use_policy
from singcycles.polycore import ring
from singcycles.singlocal import milnor_number_hypersurface

CORPUS = {
    "A1": "x^2 + y^2", "A2": "x^3 + y^2", "A3": "x^4 + y^2", "A4": "x^5 + y^2",
    "D4": "x^2*y - y^3", "E6": "x^3 + y^4", "E8": "x^3 + y^5", "node": "x*y",
}


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    R = ring("x y")
    head = f"{'germ':<6}{'mu(alg)':>8}{'mu(seg)':>8}{'chi':>6}{'int Bl':>8}{'dominant':>12}{'residual':>12}"
    print(head)
    with use_policy(GenericityPolicy(seed=args.seed)):
        for name, text in CORPUS.items():
            f = R(text)
            g = graph_limit_cycle(f)
            print(f"{name:<6}{milnor_number_hypersurface(f):>8}{mu_at_point(f):>8}"
                  f"{chi_at_point(f):>6}{blowup_fibre_integral(f):>8}"
                  f"{str(g.dominant.coefficients):>12}{str(g.residual.coefficients):>12}")


if __name__ == "__main__":
    main()
