"""Seeded random monomial ideal corpora for property tests and benchmarks."""

import random
from dataclasses import dataclass

from .monomials import MonomialIdeal
from .constructions import quasitransverse


@dataclass
class CorpusConfig:
    count: int = 200
    seed: int = 0
    max_vars: int = 6
    max_gens: int = 4
    max_exp: int = 2
    squarefree: bool = False


def random_ideal(rng, n, max_gens, max_exp, squarefree=False):
    """A proper nonzero monomial ideal with the given bounds."""
    while True:
        gens = []
        for _ in range(rng.randint(1, max_gens)):
            if squarefree:
                size = rng.randint(1, max(2, min(3, n)))
                picks = rng.sample(range(n), size)
                g = tuple(1 if j in picks else 0 for j in range(n))
            else:
                g = tuple(rng.choice([0, 0, 1, 1, max_exp]) for _ in range(n))
            if any(g):
                gens.append(g)
        if not gens:
            continue
        I = MonomialIdeal.make(n, gens)
        if not I.is_unit and not I.is_zero:
            return I


def ideal_pairs(config):
    """Deterministic stream of (I, J) pairs sharing a variable count."""
    rng = random.Random(config.seed)
    out = []
    for _ in range(config.count):
        n = rng.randint(2, config.max_vars)
        I = random_ideal(rng, n, config.max_gens, config.max_exp, config.squarefree)
        J = random_ideal(rng, n, config.max_gens, config.max_exp, config.squarefree)
        out.append((I, J))
    return out


def quasitransverse_squarefree_pairs(count, seed, max_vars=6, max_gens=3,
                                     max_tries=10000):
    """Seeded squarefree quasitransverse pairs; raises if too rare."""
    rng = random.Random(seed)
    out = []
    tries = 0
    while len(out) < count:
        tries += 1
        if tries > max_tries:
            raise RuntimeError("could not find %d quasitransverse pairs" % count)
        n = rng.randint(4, max_vars)
        I = random_ideal(rng, n, max_gens, 1, squarefree=True)
        J = random_ideal(rng, n, max_gens, 1, squarefree=True)
        ok, _ = quasitransverse([I, J])
        if ok:
            out.append((I, J))
    return out
