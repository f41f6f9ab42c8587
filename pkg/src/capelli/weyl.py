"""Differential operators with polynomial coefficients on the N x M matrix space.

Variables x_ia (1 <= i <= N, 1 <= a <= M) and derivations d_ia.  A normal
ordered monomial is x^alpha d^beta with all x's on the left; exponents are
flat row-major tuples of length N*M.
"""

from __future__ import annotations

import random
from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import comb, factorial
from typing import Any, Iterable, Mapping

from .exact import format_rational, parse_rational
from .symgroup import Permutation, all_permutations
from .tensormat import e_lambda
from .ugl import UglElement, ugl_mul
from .young import as_diagram, character, contents, y_coefficients

Exponents = tuple[int, ...]
WeylKey = tuple[Exponents, Exponents]


def _add_into(res: dict, key, c) -> None:
    if not c:
        return
    v = res.get(key, 0) + c
    if v:
        res[key] = v
    else:
        res.pop(key, None)


class WeylElement:
    """Sparse map (x exponents, d exponents) -> rational coefficient."""

    __slots__ = ("N", "M", "terms")

    def __init__(self, N: int, M: int, terms: Mapping[WeylKey, Any] | None = None):
        self.N, self.M = N, M
        self.terms: dict[WeylKey, Fraction] = {}
        L = N * M
        for (xe, de), c in (terms or {}).items():
            xe, de = tuple(xe), tuple(de)
            if len(xe) != L or len(de) != L or min(xe + de, default=0) < 0:
                raise ValueError("exponent grid does not match the N x M shape")
            _add_into(self.terms, (xe, de), Fraction(c))

    @classmethod
    def _raw(cls, N: int, M: int, terms: dict) -> "WeylElement":
        w = object.__new__(cls)
        w.N, w.M, w.terms = N, M, terms
        return w

    @classmethod
    def one(cls, N: int, M: int, c: Any = 1) -> "WeylElement":
        z = (0,) * (N * M)
        return cls._raw(N, M, {(z, z): Fraction(c)} if c else {})

    @classmethod
    def zero(cls, N: int, M: int) -> "WeylElement":
        return cls._raw(N, M, {})

    def _pos(self, i: int, a: int) -> int:
        if not (1 <= i <= self.N and 1 <= a <= self.M):
            raise ValueError(f"variable ({i}, {a}) outside {self.N} x {self.M}")
        return (i - 1) * self.M + (a - 1)

    @classmethod
    def x(cls, N: int, M: int, i: int, a: int) -> "WeylElement":
        e = [0] * (N * M)
        e[cls._raw(N, M, {})._pos(i, a)] = 1
        return cls._raw(N, M, {(tuple(e), (0,) * (N * M)): Fraction(1)})

    @classmethod
    def d(cls, N: int, M: int, i: int, a: int) -> "WeylElement":
        e = [0] * (N * M)
        e[cls._raw(N, M, {})._pos(i, a)] = 1
        return cls._raw(N, M, {((0,) * (N * M), tuple(e)): Fraction(1)})

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def _lift(self, other: Any) -> "WeylElement":
        if isinstance(other, WeylElement):
            if (other.N, other.M) != (self.N, self.M):
                raise ValueError("shape mismatch")
            return other
        return WeylElement.one(self.N, self.M, other)

    def __add__(self, other: Any) -> "WeylElement":
        other = self._lift(other)
        res = dict(self.terms)
        for k, c in other.terms.items():
            _add_into(res, k, c)
        return WeylElement._raw(self.N, self.M, res)

    __radd__ = __add__

    def __neg__(self) -> "WeylElement":
        return WeylElement._raw(self.N, self.M, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other: Any) -> "WeylElement":
        return self + (-self._lift(other))

    def __rsub__(self, other: Any) -> "WeylElement":
        return self._lift(other) - self

    def scale(self, c: Any) -> "WeylElement":
        if not c:
            return WeylElement.zero(self.N, self.M)
        return WeylElement._raw(self.N, self.M, {k: v * c for k, v in self.terms.items()})

    def __mul__(self, other: Any) -> "WeylElement":
        if isinstance(other, WeylElement):
            return weyl_mul(self, other)
        return self.scale(other)

    def __rmul__(self, other: Any) -> "WeylElement":
        return self.scale(other)

    def __eq__(self, other: Any) -> bool:
        if isinstance(other, WeylElement):
            return (self.N, self.M) == (other.N, other.M) and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == WeylElement.one(self.N, self.M, other)
        return NotImplemented

    __hash__ = None  # type: ignore[assignment]

    def degrees(self) -> set[tuple[int, int]]:
        """Set of (total x-degree, total d-degree) over the monomials."""
        return {(sum(xe), sum(de)) for xe, de in self.terms}

    def sorted_terms(self) -> list[tuple[WeylKey, Fraction]]:
        return sorted(self.terms.items())

    def to_json(self) -> list[dict]:
        return [{"x": list(xe), "d": list(de), "coeff": format_rational(c)} for (xe, de), c in self.sorted_terms()]

    @classmethod
    def from_json(cls, N: int, M: int, data: list[dict]) -> "WeylElement":
        return cls(N, M, {(tuple(t["x"]), tuple(t["d"])): parse_rational(t["coeff"]) for t in data})

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for (xe, de), c in self.sorted_terms():
            word = []
            for pos, e in enumerate(xe):
                if e:
                    i, a = divmod(pos, self.M)
                    word.append(f"x{i + 1}{a + 1}" + (f"^{e}" if e > 1 else ""))
            for pos, e in enumerate(de):
                if e:
                    i, a = divmod(pos, self.M)
                    word.append(f"d{i + 1}{a + 1}" + (f"^{e}" if e > 1 else ""))
            w = "*".join(word)
            if not w:
                parts.append(format_rational(c))
            elif c == 1:
                parts.append(w)
            else:
                parts.append(f"{format_rational(c)}*{w}")
        return " + ".join(parts)


@lru_cache(maxsize=None)
def _reorder_one(beta: int, gamma: int) -> tuple[tuple[int, int], ...]:
    """d^beta x^gamma = sum_k coeff_k x^(gamma-k) d^(beta-k): returns (k, coeff_k)."""
    return tuple((k, comb(beta, k) * comb(gamma, k) * factorial(k)) for k in range(min(beta, gamma) + 1))


@lru_cache(maxsize=100_000)
def _mono_mul(a: WeylKey, b: WeylKey) -> tuple[tuple[WeylKey, int], ...]:
    (xa, da), (xb, db) = a, b
    L = len(xa)
    if not any(da[p] and xb[p] for p in range(L)):
        return (((tuple(p + q for p, q in zip(xa, xb)), tuple(p + q for p, q in zip(da, db))), 1),)
    per_var = []
    for p in range(L):
        if da[p] and xb[p]:
            per_var.append(_reorder_one(da[p], xb[p]))
        else:
            per_var.append(((0, 1),))
    out = []
    for choice in product(*per_var):
        c = 1
        xe, de = [], []
        for p, (k, ck) in enumerate(choice):
            c *= ck
            xe.append(xa[p] + xb[p] - k)
            de.append(da[p] - k + db[p])
        out.append(((tuple(xe), tuple(de)), c))
    return tuple(out)


def weyl_mul(a: WeylElement, b: WeylElement) -> WeylElement:
    if (a.N, a.M) != (b.N, b.M):
        raise ValueError("shape mismatch")
    res: dict[WeylKey, Fraction] = {}
    for ka, ca in a.terms.items():
        for kb, cb in b.terms.items():
            c = ca * cb
            for k, m in _mono_mul(ka, kb):
                _add_into(res, k, c * m)
    return WeylElement._raw(a.N, a.M, res)


def commutator(a: WeylElement, b: WeylElement) -> WeylElement:
    return weyl_mul(a, b) - weyl_mul(b, a)


def _xd(N: int, M: int, i: int, a: int, j: int, b: int) -> WeylKey:
    """Key of x_ia d_jb."""
    L = N * M
    xe, de = [0] * L, [0] * L
    xe[(i - 1) * M + (a - 1)] = 1
    de[(j - 1) * M + (b - 1)] = 1
    return tuple(xe), tuple(de)


@lru_cache(maxsize=None)
def gl_action(side: str, i: int, j: int, N: int, M: int) -> WeylElement:
    """E_ij of gl_N acts as sum_b x_ib d_jb; E_ab of gl_M acts as sum_j x_ja d_jb."""
    terms: dict[WeylKey, Fraction] = {}
    if side == "glN":
        if not (1 <= i <= N and 1 <= j <= N):
            raise ValueError(f"E_{i}{j} outside gl_{N}")
        for b in range(1, M + 1):
            terms[_xd(N, M, i, b, j, b)] = Fraction(1)
    elif side == "glM":
        if not (1 <= i <= M and 1 <= j <= M):
            raise ValueError(f"E_{i}{j} outside gl_{M}")
        for k in range(1, N + 1):
            terms[_xd(N, M, k, i, k, j)] = Fraction(1)
    else:
        raise ValueError(f"side must be 'glN' or 'glM', got {side!r}")
    return WeylElement._raw(N, M, terms)


@lru_cache(maxsize=None)
def _monomial_image(mono: tuple, N: int, M: int) -> WeylElement:
    if not mono:
        return WeylElement.one(N, M)
    head = _monomial_image(mono[:-1], N, M)
    i, j = mono[-1]
    return weyl_mul(head, gl_action("glN", i, j, N, M))


def ugl_to_weyl(x: UglElement, M: int) -> WeylElement:
    """Extend E_ij -> sum_b x_ib d_jb multiplicatively to U(gl_N)."""
    N = x.N
    res: dict[WeylKey, Fraction] = {}
    for mono, c in x.terms.items():
        for k, v in _monomial_image(mono, N, M).terms.items():
            _add_into(res, k, c * v)
    return WeylElement._raw(N, M, res)


def _index_vectors(N: int, n: int) -> list[tuple[int, ...]]:
    return list(product(range(N), repeat=n))


def c_lambda(lam, N: int, M: int) -> WeylElement:
    """(1/n!) sum_s chi(s) sum_{i,a} x_{i_1 a_1}...x_{i_n a_n} d_{i_s(1) a_1}...d_{i_s(n) a_n}."""
    lam = as_diagram(lam)
    n = lam.n
    if n == 0:
        return WeylElement.one(N, M)
    L = N * M
    res: dict[WeylKey, Fraction] = {}
    inv_fact = Fraction(1, factorial(n))
    I_vecs, A_vecs = _index_vectors(N, n), _index_vectors(M, n)
    for s in all_permutations(n):
        chi = character(lam, s)
        if not chi:
            continue
        c = inv_fact * chi
        for I in I_vecs:
            Is = [I[s[k]] for k in range(n)]
            for A in A_vecs:
                xe, de = [0] * L, [0] * L
                for k in range(n):
                    xe[I[k] * M + A[k]] += 1
                    de[Is[k] * M + A[k]] += 1
                _add_into(res, (tuple(xe), tuple(de)), c)
    return WeylElement._raw(N, M, res)


def capelli_product(lam, N: int, M: int, inverse: bool = False, constants_per_column: bool = False) -> WeylElement:
    """sum_s y_s sum_i prod_k (sum_a x_{i_k a} d_{i_s(k) a} - c_k [i_k = i_s(k)]), ordered left to right.

    The column index a is summed inside each factor, so the content term
    enters once per factor.  ``constants_per_column`` instead sums the whole
    product over a_1..a_n, content terms included; the two readings agree
    only for M = 1.  ``inverse`` swaps y_s for y_{s^-1}.
    """
    lam = as_diagram(lam)
    n = lam.n
    if n == 0:
        return WeylElement.one(N, M)
    c = contents(lam)
    ys = y_coefficients(lam)
    L = N * M
    zero = (0,) * L
    res: dict[WeylKey, Fraction] = {}
    I_vecs = _index_vectors(N, n)
    col_choices = _index_vectors(M, n) if constants_per_column else [None]
    for s, y in sorted(ys.items()):
        if inverse:
            y = ys.get(s.inverse(), 0)
            if not y:
                continue
        for I in I_vecs:
            Is = [I[s[k]] for k in range(n)]
            for A in col_choices:
                cur: dict[WeylKey, Fraction] = {(zero, zero): Fraction(1)}
                for k in range(n):
                    cols = range(M) if A is None else (A[k],)
                    fac: dict[WeylKey, Fraction] = {
                        _xd(N, M, I[k] + 1, a + 1, Is[k] + 1, a + 1): Fraction(1) for a in cols
                    }
                    if I[k] == Is[k] and c[k]:
                        fac[(zero, zero)] = Fraction(-c[k])
                    nxt: dict[WeylKey, Fraction] = {}
                    for k1, v1 in cur.items():
                        for k2, v2 in fac.items():
                            for kk, m in _mono_mul(k1, k2):
                                _add_into(nxt, kk, v1 * v2 * m)
                    cur = nxt
                for kk, v in cur.items():
                    _add_into(res, kk, y * v)
    return WeylElement._raw(N, M, res)


def capelli_image(lam, N: int, M: int) -> WeylElement:
    """Image of e_lambda under the gl_N action."""
    return ugl_to_weyl(e_lambda(as_diagram(lam), N, 0), M)


def verify_capelli_identity(lam, N: int, M: int, report: dict | None = None) -> bool:
    """Image of e_lambda, the character-weighted operator and the ordered product all agree."""
    c1 = c_lambda(lam, N, M)
    img = capelli_image(lam, N, M)
    prod_ = capelli_product(lam, N, M)
    ok_image = img == c1
    ok_product = prod_ == c1
    if report is not None:
        report.update(image_matches=ok_image, product_matches=ok_product, operator=c1)
    return ok_image and ok_product


def verify_invariance(op: WeylElement) -> bool:
    """[op, g] = 0 for every generator g of gl_N and gl_M."""
    N, M = op.N, op.M
    for i in range(1, N + 1):
        for j in range(1, N + 1):
            if commutator(op, gl_action("glN", i, j, N, M)):
                return False
    for a in range(1, M + 1):
        for b in range(1, M + 1):
            if commutator(op, gl_action("glM", a, b, N, M)):
                return False
    return True


class Polynomial:
    """Polynomial in the x_ia: map exponent tuple -> rational."""

    __slots__ = ("N", "M", "terms")

    def __init__(self, N: int, M: int, terms: Mapping[Exponents, Any] | None = None):
        self.N, self.M = N, M
        self.terms: dict[Exponents, Fraction] = {}
        for e, c in (terms or {}).items():
            _add_into(self.terms, tuple(e), Fraction(c))

    @classmethod
    def monomial(cls, N: int, M: int, exps: Iterable[int], c: Any = 1) -> "Polynomial":
        return cls(N, M, {tuple(exps): c})

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return (self.N, self.M) == (other.N, other.M) and self.terms == other.terms

    __hash__ = None  # type: ignore[assignment]

    def scale(self, c: Any) -> "Polynomial":
        return Polynomial(self.N, self.M, {e: v * c for e, v in self.terms.items()})

    def __repr__(self) -> str:
        return repr(self.terms)


def apply(op: WeylElement, f: Polynomial) -> Polynomial:
    """Apply the differential operator to a polynomial."""
    if (op.N, op.M) != (f.N, f.M):
        raise ValueError("shape mismatch")
    res: dict[Exponents, Fraction] = {}
    for (xe, de), c in op.terms.items():
        for ge, v in f.terms.items():
            coeff = 1
            out = []
            for p in range(len(ge)):
                if de[p] > ge[p]:
                    coeff = 0
                    break
                coeff *= factorial(ge[p]) // factorial(ge[p] - de[p])
                out.append(ge[p] - de[p] + xe[p])
            if coeff:
                _add_into(res, tuple(out), c * v * coeff)
    return Polynomial(op.N, op.M, res)


def all_monomials(N: int, M: int, degree: int) -> list[Exponents]:
    """Exponent tuples of total degree ``degree``."""
    L = N * M
    out = []

    def rec(pos: int, left: int, cur: list[int]):
        if pos == L - 1:
            out.append(tuple(cur + [left]))
            return
        for e in range(left, -1, -1):
            rec(pos + 1, left - e, cur + [e])

    if L == 0:
        return [()] if degree == 0 else []
    rec(0, degree, [])
    return out


def random_ugl_element(N: int, rng: random.Random, terms: int = 3, max_degree: int = 2) -> UglElement:
    """A few PBW monomials of degree at most ``max_degree`` with small rational coefficients."""
    gens = [(i, j) for i in range(1, N + 1) for j in range(1, N + 1)]
    out: dict = {}
    for _ in range(terms):
        mono = tuple(sorted(rng.choice(gens) for _ in range(rng.randint(0, max_degree))))
        out[mono] = out.get(mono, 0) + Fraction(rng.randint(-5, 5), rng.randint(1, 4))
    return UglElement(N, out)


def verify_homomorphism(N: int, M: int, samples: int = 5, seed: int = 0) -> bool:
    """ugl_to_weyl(a b) = ugl_to_weyl(a) ugl_to_weyl(b) on random pairs."""
    rng = random.Random(seed)
    for _ in range(samples):
        a, b = random_ugl_element(N, rng), random_ugl_element(N, rng)
        if ugl_to_weyl(ugl_mul(a, b), M) != weyl_mul(ugl_to_weyl(a, M), ugl_to_weyl(b, M)):
            return False
    return True
