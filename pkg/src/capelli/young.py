"""Young diagrams, tableaux, contents, symmetrizers, characters and dimensions."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import permutations as _iter_perms
from itertools import product
from math import factorial, prod
from typing import Iterator

from .symgroup import GroupAlgebraElement, Permutation, all_permutations, ga_mul


class YoungDiagram(tuple):
    """Partition stored as its weakly decreasing positive parts."""

    __slots__ = ()

    def __new__(cls, parts=()):
        parts = tuple(int(p) for p in parts)
        if any(p <= 0 for p in parts):
            raise ValueError(f"parts must be positive: {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"parts must be weakly decreasing: {parts}")
        return super().__new__(cls, parts)

    @classmethod
    def parse(cls, s: str) -> "YoungDiagram":
        s = s.strip().strip("()[]")
        if not s:
            return cls(())
        return cls(int(x) for x in s.replace(" ", "").split(",") if x)

    @property
    def n(self) -> int:
        return sum(self)

    @property
    def parts(self) -> tuple[int, ...]:
        return tuple(self)

    def conjugate(self) -> "YoungDiagram":
        if not self:
            return YoungDiagram(())
        return YoungDiagram(sum(1 for p in self if p > s) for s in range(self[0]))

    def boxes(self) -> list[tuple[int, int]]:
        """Boxes as (row, column), 1-based, row by row."""
        return [(r + 1, c + 1) for r, p in enumerate(self) for c in range(p)]

    def part(self, i: int) -> int:
        """The i-th part, 1-based, zero past the end."""
        return self[i - 1] if i <= len(self) else 0

    def __str__(self) -> str:
        return ",".join(map(str, self))

    def __repr__(self) -> str:
        return f"YoungDiagram({tuple(self)})"


def as_diagram(lam) -> YoungDiagram:
    if isinstance(lam, YoungDiagram):
        return lam
    if isinstance(lam, str):
        return YoungDiagram.parse(lam)
    return YoungDiagram(lam)


def partitions(n: int, max_part: int | None = None) -> Iterator[YoungDiagram]:
    """All partitions of n in reverse lexicographic order."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield YoungDiagram(())
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, first):
            yield YoungDiagram((first,) + tuple(rest))


def rank(lam) -> int:
    lam = as_diagram(lam)
    return sum(1 for i, p in enumerate(lam, start=1) if p >= i)


def contains(lam, mu) -> bool:
    """True when the diagram of ``lam`` fits inside that of ``mu``."""
    lam, mu = as_diagram(lam), as_diagram(mu)
    if len(lam) > len(mu):
        return False
    return all(a <= b for a, b in zip(lam, mu))


class StandardTableau:
    """Bijective filling of a diagram by 1..n, increasing along rows and columns."""

    __slots__ = ("shape", "rows")

    def __init__(self, rows):
        rows = tuple(tuple(r) for r in rows if len(r))
        self.shape = YoungDiagram(len(r) for r in rows)
        self.rows = rows
        n = self.shape.n
        if sorted(x for r in rows for x in r) != list(range(1, n + 1)):
            raise ValueError("entries must be 1..n")
        for r in rows:
            if any(a >= b for a, b in zip(r, r[1:])):
                raise ValueError("rows must increase")
        for i in range(1, len(rows)):
            if any(rows[i][c] <= rows[i - 1][c] for c in range(len(rows[i]))):
                raise ValueError("columns must increase")

    def columns(self) -> list[tuple[int, ...]]:
        conj = self.shape.conjugate()
        return [tuple(self.rows[r][c] for r in range(h)) for c, h in enumerate(conj)]

    def position(self, k: int) -> tuple[int, int]:
        """(row, column) of entry k, 1-based."""
        for r, row in enumerate(self.rows):
            if k in row:
                return r + 1, row.index(k) + 1
        raise KeyError(k)

    def reading(self) -> list[int]:
        """Entries read row by row, top to bottom."""
        return [x for r in self.rows for x in r]

    def __eq__(self, other) -> bool:
        return isinstance(other, StandardTableau) and self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __repr__(self) -> str:
        return "StandardTableau(" + " / ".join(" ".join(map(str, r)) for r in self.rows) + ")"


@lru_cache(maxsize=None)
def column_tableau(lam) -> StandardTableau:
    """Fill the columns left to right, each from top to bottom."""
    lam = as_diagram(lam)
    rows = [[0] * p for p in lam]
    k = 1
    for c, h in enumerate(lam.conjugate()):
        for r in range(h):
            rows[r][c] = k
            k += 1
    return StandardTableau(rows)


@lru_cache(maxsize=None)
def row_tableau(lam) -> StandardTableau:
    """Fill the rows top to bottom, each from left to right."""
    lam = as_diagram(lam)
    rows, k = [], 1
    for p in lam:
        rows.append(list(range(k, k + p)))
        k += p
    return StandardTableau(rows)


@lru_cache(maxsize=None)
def contents(lam) -> tuple[int, ...]:
    """c_k = column - row of the box holding k in the column tableau."""
    lam = as_diagram(lam)
    T = column_tableau(lam)
    out = [0] * lam.n
    for r, row in enumerate(T.rows):
        for c, k in enumerate(row):
            out[k - 1] = c - r
    return tuple(out)


@lru_cache(maxsize=None)
def row_indices(lam) -> tuple[int, ...]:
    """Row (1-based) of the box holding k in the column tableau."""
    lam = as_diagram(lam)
    out = [0] * lam.n
    for r, row in enumerate(column_tableau(lam).rows):
        for k in row:
            out[k - 1] = r + 1
    return tuple(out)


def standard_tableaux(lam) -> Iterator[StandardTableau]:
    """Enumerate standard tableaux by placing n, n-1, ... into removable corners."""
    lam = as_diagram(lam)
    n = lam.n

    def rec(shape: list[int], k: int, rows: list[list[int]]):
        if k == 0:
            yield StandardTableau([list(reversed(r)) for r in rows])
            return
        for i, p in enumerate(shape):
            if p and (i + 1 == len(shape) or shape[i + 1] < p):
                shape[i] -= 1
                rows[i].append(k)
                yield from rec(shape, k - 1, rows)
                rows[i].pop()
                shape[i] += 1

    yield from rec(list(lam), n, [[] for _ in lam])


@lru_cache(maxsize=None)
def dimension_enumerated(lam) -> int:
    return sum(1 for _ in standard_tableaux(lam))


@lru_cache(maxsize=None)
def hook_lengths(lam) -> tuple[int, ...]:
    lam = as_diagram(lam)
    conj = lam.conjugate()
    return tuple(lam[r] - c + conj[c] - r - 1 for r in range(len(lam)) for c in range(lam[r]))


@lru_cache(maxsize=None)
def dimension_hook(lam) -> int:
    lam = as_diagram(lam)
    return factorial(lam.n) // prod(hook_lengths(lam))


@lru_cache(maxsize=None)
def dimension(lam) -> int:
    """Number of standard tableaux, cross-checked against the hook length formula."""
    lam = as_diagram(lam)
    d = dimension_enumerated(lam)
    h = dimension_hook(lam)
    if d != h:
        raise AssertionError(f"dimension mismatch for {lam}: enumeration {d}, hooks {h}")
    return d


def _group_of_blocks(blocks: list[tuple[int, ...]], n: int, signed: bool) -> GroupAlgebraElement:
    """Sum (signed if asked) over permutations preserving each block (1-based points)."""
    blocks = [b for b in blocks if len(b) > 1]
    terms = {}
    choices = [list(_iter_perms(b)) for b in blocks]
    for pick in product(*choices):
        img = list(range(n))
        for b, imgs in zip(blocks, pick):
            for src, dst in zip(b, imgs):
                img[src - 1] = dst - 1
        p = Permutation(img)
        terms[p] = p.sign() if signed else 1
    if not blocks:
        terms = {Permutation.identity(n): 1}
    return GroupAlgebraElement._raw(n, {p: Fraction(c) for p, c in terms.items()})


@lru_cache(maxsize=None)
def row_symmetrizer(lam) -> GroupAlgebraElement:
    lam = as_diagram(lam)
    return _group_of_blocks(list(column_tableau(lam).rows), lam.n, signed=False)


@lru_cache(maxsize=None)
def column_antisymmetrizer(lam) -> GroupAlgebraElement:
    lam = as_diagram(lam)
    return _group_of_blocks(column_tableau(lam).columns(), lam.n, signed=True)


@lru_cache(maxsize=None)
def qp_product(lam) -> GroupAlgebraElement:
    """Q_lambda * P_lambda; every product of a column and a row permutation is distinct."""
    lam = as_diagram(lam)
    P, Q = row_symmetrizer(lam), column_antisymmetrizer(lam)
    terms = {}
    for q, s in Q.terms.items():
        for p in P.terms:
            terms[q * p] = s
    return GroupAlgebraElement._raw(lam.n, terms)


@lru_cache(maxsize=None)
def qpq_product(lam) -> GroupAlgebraElement:
    """Q_lambda * P_lambda * Q_lambda with integer coefficients."""
    lam = as_diagram(lam)
    return ga_mul(qp_product(lam), column_antisymmetrizer(lam))


def column_factorial_product(lam) -> int:
    return prod(factorial(h) for h in as_diagram(lam).conjugate())


@lru_cache(maxsize=None)
def phi_lambda(lam) -> GroupAlgebraElement:
    lam = as_diagram(lam)
    return qpq_product(lam) / column_factorial_product(lam)


def symmetrizers(lam) -> tuple[GroupAlgebraElement, GroupAlgebraElement, GroupAlgebraElement]:
    """(P_lambda, Q_lambda, Phi_lambda) for the column tableau of ``lam``."""
    lam = as_diagram(lam)
    return row_symmetrizer(lam), column_antisymmetrizer(lam), phi_lambda(lam)


@lru_cache(maxsize=None)
def idempotent(lam) -> GroupAlgebraElement:
    """(dim / n!) * Phi_lambda, a primitive idempotent."""
    lam = as_diagram(lam)
    return phi_lambda(lam) * Fraction(dimension(lam), factorial(lam.n))


def y_coefficients(lam) -> dict[Permutation, Fraction]:
    return dict(idempotent(lam).terms)


def _beta_character(beta: tuple[int, ...], cycle_type: tuple[int, ...]) -> int:
    if not cycle_type:
        return 1
    r, rest = cycle_type[0], cycle_type[1:]
    bset = set(beta)
    total = 0
    for b in beta:
        nb = b - r
        if nb < 0 or nb in bset:
            continue
        height = sum(1 for x in beta if nb < x < b)
        new_beta = tuple(sorted((bset - {b}) | {nb}, reverse=True))
        total += (-1) ** height * _beta_character(new_beta, rest)
    return total


@lru_cache(maxsize=None)
def character_mn(lam, cycle_type: tuple[int, ...]) -> int:
    """Murnaghan-Nakayama rule on beta-sets."""
    lam = as_diagram(lam)
    k = len(lam)
    beta = tuple(lam[i] + (k - 1 - i) for i in range(k))
    return _beta_character(beta, tuple(sorted(cycle_type, reverse=True)))


@lru_cache(maxsize=None)
def _class_sums_of_phi(lam) -> dict[tuple[int, ...], tuple[Fraction, int]]:
    lam = as_diagram(lam)
    phi = phi_lambda(lam)
    sums: dict[tuple[int, ...], list] = {}
    for p in all_permutations(lam.n):
        ct = p.cycle_type()
        entry = sums.setdefault(ct, [Fraction(0), 0])
        entry[0] += phi.coefficient(p)
        entry[1] += 1
    return {k: (v[0], v[1]) for k, v in sums.items()}


def character_from_symmetrizer(lam, cycle_type: tuple[int, ...]) -> Fraction:
    """chi(g) = dim / |C_g| * (sum of Phi_lambda coefficients over the class of g)."""
    lam = as_diagram(lam)
    if not lam:
        return Fraction(1)
    s, size = _class_sums_of_phi(lam)[tuple(cycle_type)]
    return Fraction(dimension(lam)) * s / size


def character(lam, sigma: Permutation) -> int:
    lam = as_diagram(lam)
    if len(sigma) != lam.n:
        raise ValueError(f"permutation of degree {len(sigma)} for a diagram with {lam.n} boxes")
    return character_mn(lam, sigma.cycle_type())


def semistandard_tableaux(lam, N: int) -> Iterator[tuple[tuple[int, ...], ...]]:
    """Fillings by 1..N weakly increasing along rows, strictly down columns."""
    lam = as_diagram(lam)
    boxes = lam.boxes()
    filling: dict[tuple[int, int], int] = {}

    def rec(idx: int):
        if idx == len(boxes):
            yield tuple(tuple(filling[(r + 1, c + 1)] for c in range(p)) for r, p in enumerate(lam))
            return
        r, c = boxes[idx]
        lo = 1
        if c > 1:
            lo = max(lo, filling[(r, c - 1)])
        if r > 1:
            lo = max(lo, filling[(r - 1, c)] + 1)
        for v in range(lo, N + 1):
            filling[(r, c)] = v
            yield from rec(idx + 1)
        filling.pop((r, c), None)

    yield from rec(0)


@lru_cache(maxsize=None)
def ssyt_count_enumerated(lam, N: int) -> int:
    return sum(1 for _ in semistandard_tableaux(lam, N))


@lru_cache(maxsize=None)
def ssyt_count_hook_content(lam, N: int) -> int:
    lam = as_diagram(lam)
    num = prod(N + c - r for r, c in ((r, c) for r in range(len(lam)) for c in range(lam[r])))
    return num // prod(hook_lengths(lam)) if num > 0 else 0


def gl_dimension(lam, N: int) -> int:
    """Dimension of the irreducible gl_N-module of highest weight ``lam``."""
    a = ssyt_count_enumerated(lam, N)
    b = ssyt_count_hook_content(lam, N)
    if a != b:
        raise AssertionError(f"SSYT count mismatch for {lam}, N={N}: {a} vs {b}")
    return a
