"""Matrices on the n-fold tensor power of C^N with entries in a coefficient algebra.

Basis vectors of (C^N)^{(x)n} are multi-indices (I_1, ..., I_n), stored as
integers in base N with I_1 most significant and 0-based digits.  The
permutation s acts by moving the tensor factor in position k to position
s(k), so e_I goes to e_J with J[s(k)] = I[k]; this is a homomorphism for the
right-to-left composition of :mod:`capelli.symgroup`.

The matrix E has (r, c) entry the generator E_cr of U(gl_N); E_k is its copy
acting in tensor position k.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial, prod
from typing import Any, Callable, Iterable

import numpy as np

from .exact import MPoly, PolyOver, RationalFunction, UniPoly, encode_scalar
from .symgroup import GroupAlgebraElement, Permutation, embed_shift
from .ugl import UglElement
from .young import (
    as_diagram,
    column_factorial_product,
    contents,
    dimension,
    idempotent,
    qpq_product,
)


def index_digits(code: int, N: int, n: int) -> tuple[int, ...]:
    out = [0] * n
    for k in range(n - 1, -1, -1):
        code, out[k] = divmod(code, N)
    return tuple(out)


def index_code(digits: Iterable[int], N: int) -> int:
    c = 0
    for d in digits:
        c = c * N + d
    return c


def _add_entry(row: dict, key: int, val: Any) -> None:
    if key in row:
        s = row[key] + val
        if s:
            row[key] = s
        else:
            del row[key]
    elif val:
        row[key] = val


class TensorMatrix:
    """Sparse N^n x N^n matrix: ``rows[I][J]`` holds the nonzero entries."""

    __slots__ = ("N", "n", "rows")

    def __init__(self, N: int, n: int, rows: dict[int, dict[int, Any]] | None = None):
        self.N = N
        self.n = n
        self.rows: dict[int, dict[int, Any]] = {}
        D = N**n
        for i, row in (rows or {}).items():
            clean = {}
            for j, v in row.items():
                if not (0 <= i < D and 0 <= j < D):
                    raise IndexError(f"index ({i}, {j}) out of range for dimension {D}")
                if v:
                    clean[j] = v
            if clean:
                self.rows[i] = clean

    @classmethod
    def _raw(cls, N: int, n: int, rows: dict) -> "TensorMatrix":
        m = object.__new__(cls)
        m.N, m.n, m.rows = N, n, rows
        return m

    @property
    def dim(self) -> int:
        return self.N**self.n

    @classmethod
    def identity(cls, N: int, n: int, one: Any = Fraction(1)) -> "TensorMatrix":
        return cls._raw(N, n, {i: {i: one} for i in range(N**n)})

    @classmethod
    def zero(cls, N: int, n: int) -> "TensorMatrix":
        return cls._raw(N, n, {})

    def entry(self, i: int, j: int) -> Any:
        return self.rows.get(i, {}).get(j, 0)

    def __bool__(self) -> bool:
        return bool(self.rows)

    def is_zero(self) -> bool:
        return not self.rows

    def _check(self, other: "TensorMatrix") -> None:
        if (self.N, self.n) != (other.N, other.n):
            raise ValueError("shape mismatch")

    def __add__(self, other: "TensorMatrix") -> "TensorMatrix":
        self._check(other)
        rows = {i: dict(r) for i, r in self.rows.items()}
        for i, r in other.rows.items():
            tgt = rows.setdefault(i, {})
            for j, v in r.items():
                _add_entry(tgt, j, v)
            if not tgt:
                del rows[i]
        return TensorMatrix._raw(self.N, self.n, rows)

    def __neg__(self) -> "TensorMatrix":
        return self.map_entries(lambda v: -v)

    def __sub__(self, other: "TensorMatrix") -> "TensorMatrix":
        return self + (-other)

    def map_entries(self, f: Callable[[Any], Any]) -> "TensorMatrix":
        rows = {}
        for i, r in self.rows.items():
            nr = {}
            for j, v in r.items():
                w = f(v)
                if w:
                    nr[j] = w
            if nr:
                rows[i] = nr
        return TensorMatrix._raw(self.N, self.n, rows)

    def scale(self, c: Any) -> "TensorMatrix":
        return self.map_entries(lambda v: c * v)

    def __matmul__(self, other: "TensorMatrix") -> "TensorMatrix":
        self._check(other)
        rows = {}
        for i, r in self.rows.items():
            acc: dict[int, Any] = {}
            for j, a in r.items():
                orow = other.rows.get(j)
                if not orow:
                    continue
                for k, b in orow.items():
                    _add_entry(acc, k, a * b)
            if acc:
                rows[i] = acc
        return TensorMatrix._raw(self.N, self.n, rows)

    __mul__ = __matmul__

    def trace(self, zero: Any = 0) -> Any:
        acc = zero
        for i, r in self.rows.items():
            if i in r:
                acc = acc + r[i]
        return acc

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, TensorMatrix):
            return NotImplemented
        if (self.N, self.n) != (other.N, other.n) or self.rows.keys() != other.rows.keys():
            return False
        for i, r in self.rows.items():
            o = other.rows[i]
            if r.keys() != o.keys() or any(r[j] != o[j] for j in r):
                return False
        return True

    __hash__ = None  # type: ignore[assignment]

    def to_dense(self) -> np.ndarray:
        """Dense object array (for rational entries)."""
        D = self.dim
        out = np.full((D, D), Fraction(0), dtype=object)
        for i, r in self.rows.items():
            for j, v in r.items():
                out[i, j] = v
        return out

    def to_json(self) -> list[dict]:
        out = []
        for i in sorted(self.rows):
            for j in sorted(self.rows[i]):
                out.append(
                    {
                        "row": [d + 1 for d in index_digits(i, self.N, self.n)],
                        "col": [d + 1 for d in index_digits(j, self.N, self.n)],
                        "entry": encode_scalar(self.rows[i][j]),
                    }
                )
        return out

    def __repr__(self) -> str:
        nnz = sum(len(r) for r in self.rows.values())
        return f"TensorMatrix(N={self.N}, n={self.n}, nonzeros={nnz})"


def _permuted_code(code: int, s: Permutation, N: int) -> int:
    I = index_digits(code, N, len(s))
    J = [0] * len(s)
    for k, target in enumerate(s):
        J[target] = I[k]
    return index_code(J, N)


def perm_to_matrix(x: GroupAlgebraElement, N: int) -> TensorMatrix:
    """Linear extension of s -> P_s, the permutation of tensor factors."""
    n = x.degree
    rows: dict[int, dict[int, Any]] = {}
    for s, c in x.terms.items():
        for i in range(N**n):
            j = _permuted_code(i, s, N)
            _add_entry(rows.setdefault(j, {}), i, c)
    rows = {i: r for i, r in rows.items() if r}
    return TensorMatrix._raw(N, n, rows)


@lru_cache(maxsize=None)
def F_lambda(lam, N: int) -> TensorMatrix:
    """Image of the primitive idempotent (dim/n!) Phi_lambda."""
    return perm_to_matrix(idempotent(as_diagram(lam)), N)


def e_matrix_generator(N: int, r: int, c: int) -> UglElement:
    """Entry (r, c) of E, 0-based: the generator E_{c+1, r+1}."""
    return UglElement.generator(N, c + 1, r + 1)


def _lift_to_poly(M: TensorMatrix, N: int, var: str) -> TensorMatrix:
    return M.map_entries(lambda v: PolyOver({0: UglElement.one(N, v)}, var))


def _times_local_factor(M: TensorMatrix, k: int, e_sign: int, shift: PolyOver) -> TensorMatrix:
    """M * (e_sign * E_k + shift), with E_k acting in position k (0-based)."""
    N, n = M.N, M.n
    weight = N ** (n - 1 - k)
    rows = {}
    for i, r in M.rows.items():
        acc: dict[int, Any] = {}
        for j, a in r.items():
            jk = (j // weight) % N
            base = j - jk * weight
            for kk in range(N):
                g = UglElement.generator(N, kk + 1, jk + 1)
                if e_sign != 1:
                    g = g.scale(e_sign)
                _add_entry(acc, base + kk * weight, a * g)
            _add_entry(acc, j, a * shift)
        if acc:
            rows[i] = acc
    return TensorMatrix._raw(N, n, rows)


@dataclass
class CapelliMatrix:
    matrix: TensorMatrix
    degenerate: bool
    N: int
    shape: tuple[int, ...]


@lru_cache(maxsize=None)
def capelli_matrix_polynomial(lam, N: int) -> CapelliMatrix:
    """F_lambda (x) 1 times (E_1 + z - c_1) ... (E_n + z - c_n), entries in U(gl_N)[z]."""
    lam = as_diagram(lam)
    n = lam.n
    F = F_lambda(lam, N)
    if F.is_zero():
        return CapelliMatrix(TensorMatrix.zero(N, n), True, N, tuple(lam))
    M = _lift_to_poly(F, N, "z")
    c = contents(lam)
    one = UglElement.one(N)
    for k in range(n):
        shift = PolyOver({0: one.scale(-c[k]), 1: one}, "z")
        M = _times_local_factor(M, k, 1, shift)
    return CapelliMatrix(M, False, N, tuple(lam))


def _ugl_poly_zero(var: str) -> PolyOver:
    return PolyOver({}, var)


def e_lambda_poly(lam, N: int) -> PolyOver:
    """tr (x) id of the Capelli matrix polynomial: a polynomial in z over U(gl_N)."""
    cm = capelli_matrix_polynomial(as_diagram(lam), N)
    return cm.matrix.trace(_ugl_poly_zero("z"))


def _eval_ugl_poly(p: PolyOver, at: Any, N: int) -> UglElement:
    acc = UglElement.zero(N)
    at = Fraction(at)
    for k, c in p.coeffs.items():
        acc = acc + c.scale(at**k)
    return acc


def e_lambda(lam, N: int, at: Any = 0) -> UglElement:
    return _eval_ugl_poly(e_lambda_poly(lam, N), at, N)


def e_lambda_coefficients(lam, N: int) -> list[UglElement]:
    """z-coefficients of e_lambda(z), lowest degree first, up to degree n."""
    p = e_lambda_poly(lam, N)
    n = as_diagram(lam).n
    return [p.coeffs.get(k, UglElement.zero(N)) for k in range(n + 1)]


# Quantum determinant ----------------------------------------------------


@dataclass
class QuantumDeterminant:
    N: int
    coefficients: list[UglElement]  # D_1, ..., D_N in D(u) = 1 + sum_m D_m u^-m
    cleared: PolyOver  # P(u) = D(u) * u (u - 1) ... (u - N + 1)
    matrix: TensorMatrix  # F_N (x) 1 times (u - E_1)(u - 1 - E_2)...(u - N + 1 - E_N)
    antisymmetrizer: TensorMatrix


@lru_cache(maxsize=None)
def quantum_determinant_data(N: int) -> QuantumDeterminant:
    col = tuple([1] * N)
    F = F_lambda(col, N)
    M = _lift_to_poly(F, N, "u")
    one = UglElement.one(N)
    for k in range(N):
        shift = PolyOver({0: one.scale(-k), 1: one}, "u")
        M = _times_local_factor(M, k, -1, shift)
    P = M.trace(_ugl_poly_zero("u"))
    q = UniPoly.constant(1, "u")
    for k in range(N):
        q = q * UniPoly((-k, 1), "u")
    # P(u) = sum_j p_j u^(N-j); q(u) = sum_j q_j u^(N-j); D_j = p_j - sum_{l>=1} q_l D_{j-l}
    p_j = [P.coeffs.get(N - j, UglElement.zero(N)) for j in range(N + 1)]
    q_j = [q.coeffs[N - j] if N - j < len(q.coeffs) else Fraction(0) for j in range(N + 1)]
    D = [p_j[0]]
    for j in range(1, N + 1):
        acc = p_j[j]
        for l in range(1, j + 1):
            acc = acc - D[j - l].scale(q_j[l])
        D.append(acc)
    return QuantumDeterminant(N, D[1:], P, M, F)


def quantum_determinant(N: int) -> list[UglElement]:
    return quantum_determinant_data(N).coefficients


def verify_qdet_divisibility(N: int) -> bool:
    """The cleared matrix equals F_N (x) P(u) entry by entry."""
    data = quantum_determinant_data(N)
    F = data.antisymmetrizer
    P = data.cleared
    expected = F.map_entries(lambda f: P * UglElement.one(N, f))
    return data.matrix == expected and data.cleared.coefficient(N) == UglElement.one(N)


# Yang-Baxter relation under evaluation ------------------------------------


def verify_rtt_evaluation(N: int) -> bool:
    """((u-v) - P)(u - E_1)(v - E_2) = (v - E_2)(u - E_1)((u-v) - P) over U(gl_N)[u, v]."""
    vars_ = ("u", "v")
    one = UglElement.one(N)
    zero_key = (0, 0)
    u = MPoly({(1, 0): one}, vars_)
    v = MPoly({(0, 1): one}, vars_)

    def const(c) -> MPoly:
        return MPoly({zero_key: UglElement.one(N, c)}, vars_)

    def gen(r: int, c: int) -> MPoly:
        return MPoly({zero_key: e_matrix_generator(N, r, c)}, vars_)

    swap = perm_to_matrix(GroupAlgebraElement.transposition(2, 1, 2), N)
    R = TensorMatrix.identity(N, 2, u - v) - swap.map_entries(const)

    def T(k: int, x: MPoly) -> TensorMatrix:
        weight = N ** (1 - k)
        rows: dict[int, dict[int, Any]] = {}
        for i in range(N * N):
            row: dict[int, Any] = {i: x}
            ik = (i // weight) % N
            base = i - ik * weight
            for jk in range(N):
                _add_entry(row, base + jk * weight, -gen(ik, jk))
            rows[i] = row
        return TensorMatrix(N, 2, rows)

    T1, T2 = T(0, u), T(1, v)
    return (R @ T1) @ T2 == (T2 @ T1) @ R


# Dense integer machinery for permutation-only identities ----------------


def _digit_array(N: int, n: int) -> np.ndarray:
    D = N**n
    codes = np.arange(D, dtype=np.int64)
    out = np.zeros((D, n), dtype=np.int64)
    for k in range(n - 1, -1, -1):
        out[:, k] = codes % N
        codes //= N
    return out


def _codes(digits: np.ndarray, N: int) -> np.ndarray:
    w = N ** np.arange(digits.shape[1] - 1, -1, -1, dtype=np.int64)
    return digits @ w


def perm_target_indices(s: Permutation, N: int) -> np.ndarray:
    """target[i] = j with P_s e_i = e_j."""
    n = len(s)
    I = _digit_array(N, n)
    J = np.empty_like(I)
    J[:, list(s)] = I
    return _codes(J, N)


def perm_to_dense(x: GroupAlgebraElement, N: int, dtype=np.int64) -> np.ndarray:
    D = N**x.degree
    out = np.zeros((D, D), dtype=dtype)
    cols = np.arange(D)
    for s, c in x.terms.items():
        tgt = perm_target_indices(s, N)
        out[tgt, cols] += c if dtype is object else int(c)
    return out


def _transposition_targets(N: int, n: int, i: int, j: int) -> np.ndarray:
    s = Permutation.transposition(n, i, j)
    return perm_target_indices(s, N)


def verify_projector_product(lam, N: int) -> bool:
    """(1 - sum_k P_{1,k+1}/u)(1 (x) F) = prod_k (1 - P_{1,k+1}/(u - c_k))(1 (x) F).

    Both sides are multiplied by u prod (u - c_k), which turns them into
    integer matrix polynomials.  F is replaced by an integer multiple.
    """
    lam = as_diagram(lam)
    n = lam.n
    if len(lam) > N:
        raise ValueError(f"{lam} has more than {N} rows")
    K = n + 1
    c = contents(lam)
    F = perm_to_dense(embed_shift(qpq_product(lam), 1, K), N)
    D = F.shape[0]
    swaps = [_transposition_targets(N, K, 1, k + 1) for k in range(1, n + 1)]
    deg = n + 2
    # right side, built from the right: B <- (u - c_k - P_{1,k+1}) B for k = n..1
    B = np.zeros((deg, D, D), dtype=np.int64)
    B[0] = F
    for k in range(n, 0, -1):
        Pk = swaps[k - 1]
        new = -c[k - 1] * B
        new[1:] += B[:-1]
        new[:, Pk, :] -= B  # P acting on rows
        B = new
    rhs = np.zeros_like(B)
    rhs[1:] = B[:-1]
    # left side: (u - sum_k P_{1,k+1}) F times prod (u - c_k)
    L = np.zeros((deg, D, D), dtype=np.int64)
    L[1] = F
    for Pk in swaps:
        L[0][Pk, :] -= F
    for k in range(n):
        new = -c[k] * L
        new[1:] += L[:-1]
        L = new
    return bool(np.array_equal(L, rhs))


# Vanishing ----------------------------------------------------------------


@lru_cache(maxsize=None)
def _pi_generator(N: int, m: int, i: int, j: int) -> np.ndarray:
    """sum over positions of the matrix unit e_ij (1-based) on (C^N)^{(x)m}."""
    D = N**m
    out = np.zeros((D, D), dtype=np.int64)
    dig = _digit_array(N, m)
    for k in range(m):
        src = np.nonzero(dig[:, k] == j - 1)[0]
        tgt_dig = dig[src].copy()
        tgt_dig[:, k] = i - 1
        out[_codes(tgt_dig, N), src] += 1
    return out


def _pi_monomial(N: int, m: int, mono: tuple) -> np.ndarray:
    D = N**m
    out = np.eye(D, dtype=np.int64)
    for i, j in mono:
        out = out @ _pi_generator(N, m, i, j)
    return out


def pi_representation(x: UglElement, m: int) -> np.ndarray:
    """Image of x acting diagonally on (C^N)^{(x)m}, as a Fraction object array."""
    N = x.N
    D = N**m
    out = np.full((D, D), Fraction(0), dtype=object)
    for mono, c in x.terms.items():
        out = out + _pi_monomial(N, m, mono).astype(object) * c
    return out


def verify_vanishing(lam, mu, N: int) -> bool:
    """Every entry of E_lambda(0), pushed through F_mu pi_mu( . ) F_mu, vanishes."""
    lam, mu = as_diagram(lam), as_diagram(mu)
    if mu.n >= lam.n:
        raise ValueError("need |mu| < |lambda|")
    if len(mu) > N:
        raise ValueError(f"{mu} has more than {N} rows")
    m = mu.n
    Fm = perm_to_dense(qpq_product(mu), N).astype(object)
    M = capelli_matrix_polynomial(lam, N).matrix
    for r in M.rows.values():
        for v in r.values():
            val = _eval_ugl_poly(v, 0, N)
            if not val:
                continue
            X = Fm.dot(pi_representation(val, m)).dot(Fm)
            if any(e != 0 for e in X.flat):
                return False
    return True


# Two-diagram matrix function -----------------------------------------------


@dataclass
class RLambdaMu:
    N: int
    lam: tuple[int, ...]
    mu: tuple[int, ...]
    numerator: np.ndarray  # [degree, row, col], integer coefficients of z^degree
    offsets: list[int]  # denominator is prod(a - z)
    scale: Fraction

    def pole_order(self) -> int:
        s = sum(1 for a in self.offsets if a == 0)
        nz = [d for d in range(self.numerator.shape[0]) if np.any(self.numerator[d] != 0)]
        if not nz:
            return 0
        return max(0, s - nz[0])

    def matrix(self) -> TensorMatrix:
        den = UniPoly.constant(1, "z")
        for a in self.offsets:
            den = den * UniPoly((a, -1), "z")
        D = self.numerator.shape[1]
        rows: dict[int, dict[int, Any]] = {}
        for i in range(D):
            for j in range(D):
                col = self.numerator[:, i, j]
                if not np.any(col != 0):
                    continue
                num = UniPoly([Fraction(int(x)) * self.scale for x in col], "z")
                rows.setdefault(i, {})[j] = RationalFunction(num, den)
        return TensorMatrix._raw(self.N, sum(self.lam) + sum(self.mu), rows)


def r_lambda_mu(lam, mu, N: int) -> RLambdaMu:
    """(F_lam (x) 1) prod_{(k,l)} R_{k,l+n}(c_k, d_l + z) (1 (x) F_mu), lexicographic pairs.

    R_{k,l+n}(c_k, d_l + z) = (a - z - P)/(a - z) with a = c_k - d_l; the
    numerator is accumulated as an integer matrix polynomial in z.
    """
    lam, mu = as_diagram(lam), as_diagram(mu)
    if len(lam) > N or len(mu) > N:
        raise ValueError(f"diagrams need at most {N} rows")
    n, m = lam.n, mu.n
    K = n + m
    c, d = contents(lam), contents(mu)
    pairs = [(k, l + n, c[k - 1] - d[l - 1]) for k in range(1, n + 1) for l in range(1, m + 1)]
    qpq_l = embed_shift(qpq_product(lam), 0, K)
    qpq_r = embed_shift(qpq_product(mu), n, K)
    l1 = lambda x: sum(abs(int(v)) for v in x.terms.values())  # noqa: E731
    bound = l1(qpq_l) * l1(qpq_r) * prod(abs(a) + 2 for _, _, a in pairs) * N ** (2 * K)
    dtype = np.int64 if bound < 2**62 else object
    B = perm_to_dense(qpq_l, N, dtype)[None, :, :]
    if dtype is object:
        B = B.astype(object)
    deg = len(pairs) + 1
    A = np.zeros((deg,) + B.shape[1:], dtype=B.dtype)
    A[0] = B[0]
    for k, ln, a in pairs:
        tgt = _transposition_targets(N, K, k, ln)
        new = a * A
        new[1:] -= A[:-1]
        new[:, :, tgt] -= A  # right multiplication by P permutes columns
        A = new
    Fr = perm_to_dense(qpq_r, N, dtype)
    A = np.einsum("dij,jk->dik", A, Fr) if dtype is np.int64 else np.array([x.dot(Fr) for x in A])
    scale = Fraction(dimension(lam), factorial(n) * column_factorial_product(lam)) * Fraction(
        dimension(mu), factorial(m) * column_factorial_product(mu)
    )
    return RLambdaMu(N, tuple(lam), tuple(mu), A, [a for _, _, a in pairs], scale)


def trace_F(lam, N: int) -> Fraction:
    return F_lambda(as_diagram(lam), N).trace(Fraction(0))
