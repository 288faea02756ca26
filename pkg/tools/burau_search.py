"""Structured braid word search via the reduced Burau representation.

Enumerates block words sigma_1^{a1} sigma_2^{b1} ... on 3 strands and
random block words on 4 strands, computing the Alexander polynomial
exactly from det(Burau - I) * (1 - t) / (1 - t^n).  Candidates are
re-verified with the Seifert pipeline before being reported.
"""

import itertools
import random
import sys

sys.path.insert(0, "../src")

from corkatlas.laurent import LaurentPoly
from corkatlas.linkdiag import alexander, braid_closure


def _sum_terms(pairs):
    p = LaurentPoly({})
    for k, c in pairs:
        p = p + LaurentPoly.term(k, c)
    return p


def closed_form_K(m):
    a = abs(m)
    return _sum_terms([(a + 1, 1), (a, -1), (1, -1), (0, 3), (-1, -1), (-a, -1), (-a - 1, 1)])


def closed_form_Kt(m):
    a = abs(m)
    return _sum_terms([(a, -1), (a - 1, 1), (1, -1), (0, 3), (-1, -1), (-a + 1, 1), (-a, -1)])


TARGETS = {}
for _m in (1, 2, 3):
    TARGETS[("A", _m)] = closed_form_K(_m)
    TARGETS[("ATilde", _m)] = closed_form_Kt(_m)


# polynomials as dicts exponent -> coeff

def pmul(p, q):
    out = {}
    for a, c in p.items():
        for b, d in q.items():
            k = a + b
            out[k] = out.get(k, 0) + c * d
    return {k: v for k, v in out.items() if v}


def padd(p, q):
    out = dict(p)
    for k, v in q.items():
        out[k] = out.get(k, 0) + v
        if not out[k]:
            del out[k]
    return out


def pneg(p):
    return {k: -v for k, v in p.items()}


def mat_mul(A, B):
    n = len(A)
    return [[
        sum_polys([pmul(A[i][k], B[k][j]) for k in range(n)])
        for j in range(n)] for i in range(n)]


def sum_polys(ps):
    out = {}
    for p in ps:
        out = padd(out, p)
    return out


def burau_gens(n):
    """Reduced Burau matrices (size n-1) for sigma_i and inverses."""
    t = {1: 1}
    tinv = {-1: 1}
    one = {0: 1}
    gens = {}
    for i in range(1, n):
        M = [[one if r == c else {} for c in range(n - 1)] for r in range(n - 1)]
        Mi = [[one if r == c else {} for c in range(n - 1)] for r in range(n - 1)]
        r = i - 1
        M[r][r] = pneg(t)
        Mi[r][r] = pneg(tinv)
        if r > 0:
            M[r][r - 1] = t
            Mi[r][r - 1] = one
        if r < n - 2:
            M[r][r + 1] = one
            Mi[r][r + 1] = tinv
        gens[i] = M
        gens[-i] = Mi
    return gens


def det_poly(M):
    n = len(M)
    if n == 1:
        return M[0][0]
    if n == 2:
        return padd(pmul(M[0][0], M[1][1]), pneg(pmul(M[0][1], M[1][0])))
    out = {}
    sign = 1
    for j in range(n):
        minor = [row[:j] + row[j + 1:] for row in M[1:]]
        term = pmul(M[0][j], det_poly(minor))
        out = padd(out, term if sign > 0 else pneg(term))
        sign = -sign
    return out


def alexander_from_burau(word, n, gens):
    M = None
    for g in word:
        M = gens[g] if M is None else mat_mul(M, gens[g])
    if M is None:
        return None
    k = n - 1
    A = [[padd(M[i][j], pneg({0: 1}) if i == j else {}) for j in range(k)] for i in range(k)]
    num = pmul(det_poly(A), padd({0: 1}, pneg({1: 1})))  # * (1 - t)
    # divide by 1 - t^n (exact when the closure is a knot)
    num = dict(num)
    q = {}
    while num:
        k0 = min(num)
        c = num[k0]
        q[k0] = q.get(k0, 0) + c
        for e, d in ((k0, 1), (k0 + n, -1)):
            num[e] = num.get(e, 0) - c * d
            if not num[e]:
                del num[e]
    return q


def normalize(p):
    """Center and sign-fix a symmetric Laurent dict for comparison."""
    if not p:
        return None
    lo, hi = min(p), max(p)
    if (lo + hi) % 2:
        return None
    shift = -(lo + hi) // 2
    out = {k + shift: v for k, v in p.items()}
    # fix sign so the value at t = 1 is positive
    if sum(out.values()) < 0:
        out = {k: -v for k, v in out.items()}
    return out


def perm_of(word, n):
    p = list(range(n))
    for g in word:
        i = abs(g) - 1
        p[i], p[i + 1] = p[i + 1], p[i]
    return p


def is_knot_perm(p):
    n = len(p)
    seen = {0}
    x = p[0]
    while x not in seen:
        seen.add(x)
        x = p[x]
    return len(seen) == n


def verify(word, n, target):
    d = braid_closure(list(word), strands=n)
    if not d.is_knot():
        return False
    return alexander(d) == target


def targets_normalized():
    return {key: normalize(dict(poly.coeffs)) for key, poly in TARGETS.items()}


def structured_3braid(max_blocks=7, max_exp=4, max_len=20):
    gens = burau_gens(3)
    want = targets_normalized()
    found = {}
    exps = [e for e in range(-max_exp, max_exp + 1) if e]
    tried = 0
    for blocks in range(2, max_blocks + 1):
        print("blocks", blocks, flush=True)
        for vec in itertools.product(exps, repeat=blocks):
            if sum(abs(e) for e in vec) > max_len:
                continue
            word = []
            for i, e in enumerate(vec):
                g = 1 if i % 2 == 0 else 2
                word += [g if e > 0 else -g] * abs(e)
            if not is_knot_perm(perm_of(word, 3)):
                continue
            tried += 1
            p = normalize(alexander_from_burau(word, 3, gens))
            for key, tgt in want.items():
                if key in found or p != tgt:
                    continue
                if verify(word, 3, TARGETS[key]):
                    found[key] = (word, 3)
                    print(key, "->", (word, 3), flush=True)
        if len(found) == len(want):
            break
    print("tried", tried, "found", found, flush=True)
    return found


def random_4braid(tries=2000000, max_len=22, seed=7):
    gens = burau_gens(4)
    want = targets_normalized()
    found = {}
    rng = random.Random(seed)
    letters = [1, -1, 2, -2, 3, -3]
    for i in range(tries):
        word = [rng.choice(letters) for _ in range(rng.randint(8, max_len))]
        if abs(sum(1 if g > 0 else -1 for g in word)) > 3:
            continue
        if not is_knot_perm(perm_of(word, 4)):
            continue
        p = normalize(alexander_from_burau(word, 4, gens))
        for key, tgt in want.items():
            if key in found or p != tgt:
                continue
            if verify(word, 4, TARGETS[key]):
                found[key] = (word, 4)
                print(key, "->", (word, 4), flush=True)
        if len(found) == len(want):
            break
        if i % 100000 == 0:
            print("tries", i, flush=True)
    return found


if __name__ == "__main__":
    found = structured_3braid()
    missing = set(TARGETS) - set(found)
    if missing:
        print("still missing", missing, "- trying 4-braids", flush=True)
        random_4braid()
