"""Numba-compiled versions of the modular group-algebra kernels."""

import numpy as np
from numba import njit


@njit(cache=True)
def linear_factor_step(A, a, table, p):
    G, D = A.shape
    out = np.empty_like(A)
    for g in range(G):
        h = table[g]
        for d in range(D):
            v = (a * A[g, d] - A[h, d]) % p
            if d > 0:
                v = (v - A[g, d - 1]) % p
            out[g, d] = v
    return out


@njit(cache=True)
def convolve_right(A, weights, tables, p):
    G, D = A.shape
    out = np.zeros_like(A)
    for s in range(weights.shape[0]):
        w = weights[s]
        for g in range(G):
            h = tables[s, g]
            for d in range(D):
                out[g, d] = (out[g, d] + w * A[h, d]) % p
    return out
