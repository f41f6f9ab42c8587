"""Pure numpy versions of the modular group-algebra kernels."""

import numpy as np


def linear_factor_step(A, a, table, p):
    """Right-multiply by (a - z - tau) where ``table[g]`` indexes g*tau.

    ``A[g, d]`` is the coefficient of permutation g times z**d, reduced mod p.
    """
    out = (A * a) % p
    out[:, 1:] -= A[:, :-1]
    out -= A[table]
    out %= p
    return out


def convolve_right(A, weights, tables, p):
    """out[g] = sum_s weights[s] * A[tables[s, g]] mod p."""
    out = np.zeros_like(A)
    for s in range(weights.shape[0]):
        out += (A[tables[s]] * weights[s]) % p
        out %= p
    return out
