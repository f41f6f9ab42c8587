"""The universal enveloping algebra U(gl_N) in PBW normal form.

A generator E_ij is the pair ``(i, j)`` (1-based).  A PBW monomial is a
tuple of generators sorted lexicographically, with repetition.  Products are
normal-ordered with [E_ij, E_kl] = delta_jk E_il - delta_li E_kj.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import groupby
from typing import Any, Iterable, Mapping

from .exact import format_rational, parse_rational

Generator = tuple[int, int]
Monomial = tuple[Generator, ...]

DEFAULT_DEGREE_CAP = 12


class DegreeCapExceeded(ValueError):
    pass


def commutator_generators(a: Generator, b: Generator) -> dict[Generator, int]:
    """[E_a, E_b] as a combination of generators."""
    (i, j), (k, l) = a, b
    out: dict[Generator, int] = {}
    if j == k:
        out[(i, l)] = out.get((i, l), 0) + 1
    if l == i:
        out[(k, j)] = out.get((k, j), 0) - 1
    return {g: c for g, c in out.items() if c}


def _add_into(res: dict, key, c) -> None:
    if not c:
        return
    v = res.get(key, 0) + c
    if v:
        res[key] = v
    else:
        res.pop(key, None)


@lru_cache(maxsize=200_000)
def _mono_times_gen(m: Monomial, g: Generator) -> tuple[tuple[Monomial, int], ...]:
    """Normal form of (sorted monomial m) * g, with integer coefficients."""
    if not m or m[-1] <= g:
        return ((m + (g,), 1),)
    rest, a = m[:-1], m[-1]
    res: dict[Monomial, int] = {}
    # rest * a * g = rest * g * a + rest * [a, g]
    for r, c in _mono_times_gen(rest, g):
        for r2, c2 in _mono_times_gen(r, a):
            _add_into(res, r2, c * c2)
    for h, c in commutator_generators(a, g).items():
        for r, c2 in _mono_times_gen(rest, h):
            _add_into(res, r, c * c2)
    return tuple(res.items())


@lru_cache(maxsize=200_000)
def _mono_times_mono(a: Monomial, b: Monomial) -> tuple[tuple[Monomial, int], ...]:
    cur: dict[Monomial, int] = {a: 1}
    for g in b:
        nxt: dict[Monomial, int] = {}
        for m, c in cur.items():
            for r, c2 in _mono_times_gen(m, g):
                _add_into(nxt, r, c * c2)
        cur = nxt
    return tuple(cur.items())


class UglElement:
    """Sparse combination of PBW monomials with rational coefficients."""

    __slots__ = ("N", "terms")

    def __init__(self, N: int, terms: Mapping[Monomial, Any] | None = None):
        self.N = N
        self.terms: dict[Monomial, Fraction] = {}
        for m, c in (terms or {}).items():
            m = tuple(sorted(tuple(g) for g in m))
            for i, j in m:
                if not (1 <= i <= N and 1 <= j <= N):
                    raise ValueError(f"generator E_{i}{j} outside gl_{N}")
            _add_into(self.terms, m, Fraction(c))

    @classmethod
    def _raw(cls, N: int, terms: dict) -> "UglElement":
        x = object.__new__(cls)
        x.N = N
        x.terms = terms
        return x

    @classmethod
    def one(cls, N: int, c: Any = 1) -> "UglElement":
        return cls._raw(N, {(): Fraction(c)} if c else {})

    @classmethod
    def zero(cls, N: int) -> "UglElement":
        return cls._raw(N, {})

    @classmethod
    def generator(cls, N: int, i: int, j: int) -> "UglElement":
        if not (1 <= i <= N and 1 <= j <= N):
            raise ValueError(f"generator E_{i}{j} outside gl_{N}")
        return cls._raw(N, {((i, j),): Fraction(1)})

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    @property
    def degree(self) -> int:
        return max((len(m) for m in self.terms), default=-1)

    def constant_term(self) -> Fraction:
        return self.terms.get((), Fraction(0))

    def _lift(self, other: Any) -> "UglElement":
        if isinstance(other, UglElement):
            if other.N != self.N:
                raise ValueError(f"gl_{self.N} vs gl_{other.N}")
            return other
        return UglElement.one(self.N, other)

    def __add__(self, other: Any) -> "UglElement":
        other = self._lift(other)
        res = dict(self.terms)
        for m, c in other.terms.items():
            _add_into(res, m, c)
        return UglElement._raw(self.N, res)

    __radd__ = __add__

    def __neg__(self) -> "UglElement":
        return UglElement._raw(self.N, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other: Any) -> "UglElement":
        return self + (-self._lift(other))

    def __rsub__(self, other: Any) -> "UglElement":
        return self._lift(other) - self

    def scale(self, c: Any) -> "UglElement":
        if not c:
            return UglElement.zero(self.N)
        return UglElement._raw(self.N, {m: v * c for m, v in self.terms.items()})

    def __mul__(self, other: Any) -> "UglElement":
        if isinstance(other, UglElement):
            return ugl_mul(self, other)
        return self.scale(other)

    def __rmul__(self, other: Any) -> "UglElement":
        return self.scale(other)

    def __eq__(self, other: Any) -> bool:
        if isinstance(other, UglElement):
            return self.N == other.N and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self.terms == ({(): Fraction(other)} if other else {})
        return NotImplemented

    __hash__ = None  # type: ignore[assignment]

    def sorted_terms(self) -> list[tuple[Monomial, Fraction]]:
        return sorted(self.terms.items(), key=lambda kv: (len(kv[0]), kv[0]))

    def to_json(self) -> list[dict]:
        return [{"monomial": monomial_to_json(m), "coeff": format_rational(c)} for m, c in self.sorted_terms()]

    @classmethod
    def from_json(cls, N: int, data: list[dict]) -> "UglElement":
        return cls(N, {monomial_from_json(t["monomial"]): parse_rational(t["coeff"]) for t in data})

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for m, c in self.sorted_terms():
            word = "*".join(
                f"E{i}{j}" + (f"^{e}" if e > 1 else "") for i, j, e in monomial_to_json(m)
            )
            if not word:
                parts.append(format_rational(c))
            elif c == 1:
                parts.append(word)
            else:
                parts.append(f"{format_rational(c)}*{word}")
        return " + ".join(parts)


def monomial_to_json(m: Monomial) -> list[list[int]]:
    return [[i, j, len(list(grp))] for (i, j), grp in groupby(m)]


def monomial_from_json(data: Iterable[Iterable[int]]) -> Monomial:
    out: list[Generator] = []
    for i, j, e in data:
        out.extend([(i, j)] * e)
    return tuple(sorted(out))


def ugl_mul(a: UglElement, b: UglElement, degree_cap: int = DEFAULT_DEGREE_CAP) -> UglElement:
    if a.N != b.N:
        raise ValueError(f"gl_{a.N} vs gl_{b.N}")
    if a.degree + b.degree > degree_cap:
        raise DegreeCapExceeded(f"product degree {a.degree + b.degree} exceeds cap {degree_cap}")
    res: dict[Monomial, Fraction] = {}
    for m1, c1 in a.terms.items():
        for m2, c2 in b.terms.items():
            c = c1 * c2
            for r, k in _mono_times_mono(m1, m2):
                _add_into(res, r, c * k)
    return UglElement._raw(a.N, res)


def generators(N: int) -> list[UglElement]:
    return [UglElement.generator(N, i, j) for i in range(1, N + 1) for j in range(1, N + 1)]


def commutator(a: UglElement, b: UglElement) -> UglElement:
    return ugl_mul(a, b) - ugl_mul(b, a)


def is_central(x: UglElement) -> bool:
    return all(not commutator(x, g) for g in generators(x.N))


def casimir(N: int) -> UglElement:
    """sum_{i,j} E_ij E_ji."""
    out = UglElement.zero(N)
    for i in range(1, N + 1):
        for j in range(1, N + 1):
            out = out + ugl_mul(UglElement.generator(N, i, j), UglElement.generator(N, j, i))
    return out


def trace_element(N: int) -> UglElement:
    """sum_i E_ii."""
    return UglElement(N, {((i, i),): 1 for i in range(1, N + 1)})
