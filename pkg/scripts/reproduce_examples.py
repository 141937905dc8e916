"""Print the worked Fibonacci and Jacobsthal examples end to end.

    python3 scripts/reproduce_examples.py [--n 6]
"""
import argparse
from dataclasses import dataclass

from riordan_tph.btransform import transform_gathered
from riordan_tph.factorization import (hankel_ldu, hankel_transform, jfraction, tph_ldu,
                                       tph_matrix)
from riordan_tph.orthopoly import coeff_array, recurrence_from_jfraction
from riordan_tph.sequences import fibonacci_seq, from_list, jacobsthal_seq


@dataclass
class Config:
    n: int = 6
    terms: int = 11


def show(title, m):
    print(f"{title}:")
    for row in m.rows:
        print("  " + " ".join(f"{str(v):>5}" for v in row))


def run_example(name, seq, cfg: Config):
    a = seq(2 * max(cfg.n, cfg.terms) + 4)
    b = from_list(transform_gathered(a, 2 * max(cfg.n, cfg.terms) + 2))
    print(f"== {name} ==")
    print("image:", ", ".join(str(v) for v in b.terms[: cfg.terms]))
    print("Hankel transform:", ", ".join(str(v) for v in hankel_transform(b, cfg.n)))
    show("A", tph_matrix(a, cfg.n))
    h = hankel_ldu(a, cfg.n)
    show("𝓛", h.L)
    print("D:", ", ".join(str(v) for v in h.D))
    show("L^-1 𝓛", tph_ldu(a, cfg.n).L)
    j = jfraction(b.gf(), cfg.n)
    print("alphas:", ", ".join(str(v) for v in j.alphas))
    print("betas:", ", ".join(str(v) for v in j.betas))
    show("orthogonal polynomial coefficients", coeff_array(recurrence_from_jfraction(j), cfg.n))
    print()


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--n", type=int, default=Config.n)
    p.add_argument("--terms", type=int, default=Config.terms)
    cfg = Config(**vars(p.parse_args()))
    run_example("Fibonacci", fibonacci_seq, cfg)
    run_example("Jacobsthal", jacobsthal_seq, cfg)


if __name__ == "__main__":
    main()
