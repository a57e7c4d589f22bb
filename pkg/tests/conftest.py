"""Shared test helpers: random tuple generators and an independent
monomial-matrix multiplication oracle."""

import random

from crg import GroupParams, WreathElement, factorization
from crg.reflections import enumerate_reflections


def random_reflection_tuple(rng: random.Random, params: GroupParams, length: int):
    refs = enumerate_reflections(params)
    return factorization([rng.choice(refs) for _ in range(length)], params)


def random_cover_element(rng: random.Random, n: int, span: int = 5) -> WreathElement:
    params = GroupParams(None, 1, n)
    perm = list(range(1, n + 1))
    rng.shuffle(perm)
    weights = [rng.randint(-span, span) for _ in range(n)]
    return WreathElement.create(perm, weights, params)


# -- monomial-matrix oracle ----------------------------------------------
#
# An element [w; a] of G(d,e,n) corresponds to the matrix whose k-th column
# has the single entry omega^(a_k) in row w(k), omega = exp(2*pi*i/d).
# Entries are kept as exponents (None = zero entry), so the check is exact.

def to_matrix(x: WreathElement):
    n = x.params.n
    mat = [[None] * n for _ in range(n)]
    for k in range(n):
        mat[x.perm[k] - 1][k] = x.weights[k]
    return mat


def matrix_multiply(a, b, d: int):
    n = len(a)
    out = [[None] * n for _ in range(n)]
    for i in range(n):
        for k in range(n):
            acc = None
            for j in range(n):
                if a[i][j] is None or b[j][k] is None:
                    continue
                term = (a[i][j] + b[j][k]) % d
                assert acc is None, "monomial product has colliding entries"
                acc = term
            out[i][k] = acc
    return out
