"""Random braid word search for a family knot, Burau-filtered.

Usage: find_words6.py [family] [m] [seed]

Draws random words with small writhe (the targets are ribbon knots, so
signature 0), filters by the reduced-Burau Alexander polynomial, and
confirms hits with the Seifert pipeline before reporting.
"""

import random
import sys

sys.path.insert(0, "../src")

from burau_search import (
    TARGETS,
    alexander_from_burau,
    burau_gens,
    is_knot_perm,
    normalize,
    perm_of,
    verify,
)


def search(key, seed):
    target = normalize(dict(TARGETS[key].coeffs))
    rng = random.Random(seed)
    gens = {n: burau_gens(n) for n in (3, 4, 5, 6)}
    tries = 0
    while True:
        n = rng.choice((3, 4, 4, 5, 5, 6))
        letters = [g for i in range(1, n) for g in (i, -i)]
        word = [rng.choice(letters) for _ in range(rng.randint(8, 22))]
        if abs(sum(1 if g > 0 else -1 for g in word)) > 3:
            continue
        if not is_knot_perm(perm_of(word, n)):
            continue
        tries += 1
        if normalize(alexander_from_burau(word, n, gens[n])) != target:
            if tries % 200000 == 0:
                print("tries", tries, flush=True)
            continue
        if verify(word, n, TARGETS[key]):
            print(key, "->", (word, n), flush=True)
            return word, n


if __name__ == "__main__":
    family = sys.argv[1] if len(sys.argv) > 1 else "ATilde"
    m = int(sys.argv[2]) if len(sys.argv) > 2 else 3
    seed = int(sys.argv[3]) if len(sys.argv) > 3 else 1
    search((family, m), seed)
