"""Dense indexing of S_K in lexicographic order of image sequences."""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations

import numpy as np


class PermIndex:
    """All permutations of 0..K-1 as rows of an array, with fast code lookup."""

    def __init__(self, K: int):
        self.K = K
        self.perms = np.array(list(permutations(range(K))), dtype=np.int64).reshape(-1, K)
        self.weights = K ** np.arange(K - 1, -1, -1, dtype=np.int64)
        self.codes = self.perms @ self.weights  # increasing, since rows are lex sorted

    @property
    def size(self) -> int:
        return self.perms.shape[0]

    def index_rows(self, rows: np.ndarray) -> np.ndarray:
        return np.searchsorted(self.codes, rows @ self.weights)

    def index(self, perm) -> int:
        return int(self.index_rows(np.asarray(perm, dtype=np.int64)[None, :])[0])

    def right_table(self, s) -> np.ndarray:
        """table[g] = index of g*s (apply s first)."""
        return self.index_rows(self.perms[:, np.asarray(s, dtype=np.int64)])


@lru_cache(maxsize=None)
def perm_index(K: int) -> PermIndex:
    return PermIndex(K)


def primes_below(limit: int, count: int) -> list[int]:
    """The ``count`` largest primes below ``limit`` by trial division."""
    out = []
    c = limit - 1
    while len(out) < count and c > 2:
        if c % 2 and all(c % d for d in range(3, int(c**0.5) + 1, 2)):
            out.append(c)
        c -= 1
    return out
