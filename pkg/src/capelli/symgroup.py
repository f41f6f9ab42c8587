"""Permutations and the group algebra of S_n over an exact commutative ring.

Permutations store 0-based images internally; user-facing constructors and
JSON use 1-based images.  Composition is right-to-left:
``(s * t)(k) = s(t(k))``.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import permutations as _iter_perms
from typing import Any, Callable, Iterable, Iterator, Mapping

from .exact import decode_scalar, encode_scalar


class Permutation(tuple):
    """Bijection of {0..n-1} stored as its image sequence."""

    __slots__ = ()

    def __new__(cls, images: Iterable[int]):
        return super().__new__(cls, images)

    @classmethod
    def checked(cls, images: Iterable[int]) -> "Permutation":
        p = cls(images)
        if sorted(p) != list(range(len(p))):
            raise ValueError(f"{tuple(p)} is not a permutation of 0..{len(p) - 1}")
        return p

    @classmethod
    def from_one_based(cls, images: Iterable[int]) -> "Permutation":
        return cls.checked(i - 1 for i in images)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(range(n))

    @classmethod
    def transposition(cls, n: int, i: int, j: int) -> "Permutation":
        """The transposition of the 1-based points ``i`` and ``j``."""
        if not (1 <= i <= n and 1 <= j <= n) or i == j:
            raise ValueError(f"bad transposition ({i} {j}) in S_{n}")
        img = list(range(n))
        img[i - 1], img[j - 1] = j - 1, i - 1
        return cls(img)

    @classmethod
    def from_cycles(cls, n: int, cycles: Iterable[Iterable[int]]) -> "Permutation":
        """Build from 1-based disjoint cycles, e.g. ``[(1, 2, 3)]`` maps 1->2->3->1."""
        img = list(range(n))
        for cyc in cycles:
            c = [k - 1 for k in cyc]
            for a, b in zip(c, c[1:] + c[:1]):
                img[a] = b
        return cls.checked(img)

    @property
    def degree(self) -> int:
        return len(self)

    def one_based(self) -> list[int]:
        return [k + 1 for k in self]

    def __mul__(self, other: "Permutation") -> "Permutation":  # type: ignore[override]
        if not isinstance(other, Permutation):
            return NotImplemented
        if len(other) != len(self):
            raise ValueError("degree mismatch")
        return Permutation(self[k] for k in other)

    def __rmul__(self, other):  # type: ignore[override]
        return NotImplemented

    def __call__(self, k: int) -> int:
        return self[k]

    def inverse(self) -> "Permutation":
        inv = [0] * len(self)
        for i, k in enumerate(self):
            inv[k] = i
        return Permutation(inv)

    def is_identity(self) -> bool:
        return all(i == k for i, k in enumerate(self))

    def cycles(self) -> list[tuple[int, ...]]:
        """Disjoint cycles (0-based), fixed points included."""
        seen = [False] * len(self)
        out = []
        for s in range(len(self)):
            if seen[s]:
                continue
            cyc = []
            k = s
            while not seen[k]:
                seen[k] = True
                cyc.append(k)
                k = self[k]
            out.append(tuple(cyc))
        return out

    def cycle_type(self) -> tuple[int, ...]:
        return tuple(sorted((len(c) for c in self.cycles()), reverse=True))

    def sign(self) -> int:
        return -1 if (len(self) - len(self.cycles())) % 2 else 1

    def shifted(self, offset: int, new_degree: int) -> "Permutation":
        if offset < 0 or offset + len(self) > new_degree:
            raise ValueError(f"cannot embed S_{len(self)} at offset {offset} into S_{new_degree}")
        img = list(range(new_degree))
        for i, k in enumerate(self):
            img[i + offset] = k + offset
        return Permutation(img)

    def __repr__(self) -> str:
        cyc = [c for c in self.cycles() if len(c) > 1]
        if not cyc:
            return "e"
        return "".join("(" + " ".join(str(k + 1) for k in c) + ")" for c in cyc)


def all_permutations(n: int) -> Iterator[Permutation]:
    """All of S_n in lexicographic order of image sequences."""
    for p in _iter_perms(range(n)):
        yield Permutation(p)


def _zero_like(c: Any) -> Any:
    return c * 0


class GroupAlgebraElement:
    """Sparse element of C[S_n]: a map Permutation -> coefficient with no zeros."""

    __slots__ = ("degree", "terms")

    def __init__(self, degree: int, terms: Mapping[Permutation, Any] | None = None):
        self.degree = degree
        self.terms: dict[Permutation, Any] = {}
        if terms:
            for p, c in terms.items():
                if len(p) != degree:
                    raise ValueError(f"permutation {p!r} has degree {len(p)}, expected {degree}")
                if c:
                    self.terms[Permutation(p)] = c

    @classmethod
    def _raw(cls, degree: int, terms: dict) -> "GroupAlgebraElement":
        x = object.__new__(cls)
        x.degree = degree
        x.terms = terms
        return x

    @classmethod
    def zero(cls, n: int) -> "GroupAlgebraElement":
        return cls._raw(n, {})

    @classmethod
    def one(cls, n: int, coeff: Any = 1) -> "GroupAlgebraElement":
        return cls._raw(n, {Permutation.identity(n): coeff} if coeff else {})

    @classmethod
    def basis(cls, p: Permutation, coeff: Any = 1) -> "GroupAlgebraElement":
        return cls._raw(len(p), {p: coeff} if coeff else {})

    @classmethod
    def transposition(cls, n: int, i: int, j: int, coeff: Any = 1) -> "GroupAlgebraElement":
        return cls.basis(Permutation.transposition(n, i, j), coeff)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __len__(self) -> int:
        return len(self.terms)

    def coefficient(self, p: Permutation) -> Any:
        return self.terms.get(p, 0)

    def identity_coefficient(self) -> Any:
        return self.terms.get(Permutation.identity(self.degree), 0)

    def _check(self, other: "GroupAlgebraElement") -> None:
        if self.degree != other.degree:
            raise ValueError(f"degree mismatch: S_{self.degree} vs S_{other.degree}")

    def __add__(self, other: Any) -> "GroupAlgebraElement":
        if not isinstance(other, GroupAlgebraElement):
            if other == 0:
                return self
            other = GroupAlgebraElement.one(self.degree, other)
        self._check(other)
        res = dict(self.terms)
        _accumulate(res, other.terms.items())
        return GroupAlgebraElement._raw(self.degree, res)

    __radd__ = __add__

    def __neg__(self) -> "GroupAlgebraElement":
        return GroupAlgebraElement._raw(self.degree, {p: -c for p, c in self.terms.items()})

    def __sub__(self, other: Any) -> "GroupAlgebraElement":
        if not isinstance(other, GroupAlgebraElement):
            other = GroupAlgebraElement.one(self.degree, other)
        return self + (-other)

    def __rsub__(self, other: Any) -> "GroupAlgebraElement":
        return (-self) + other

    def scale(self, c: Any) -> "GroupAlgebraElement":
        if not c:
            return GroupAlgebraElement.zero(self.degree)
        res = {}
        for p, a in self.terms.items():
            v = a * c
            if v:
                res[p] = v
        return GroupAlgebraElement._raw(self.degree, res)

    def __mul__(self, other: Any) -> "GroupAlgebraElement":
        if isinstance(other, GroupAlgebraElement):
            return ga_mul(self, other)
        return self.scale(other)

    def __rmul__(self, other: Any) -> "GroupAlgebraElement":
        return self.scale(other)

    def __truediv__(self, c: Any) -> "GroupAlgebraElement":
        if isinstance(c, int):
            c = Fraction(c)
        return self.scale(1 / c)

    def __eq__(self, other: Any) -> bool:
        if isinstance(other, GroupAlgebraElement):
            if self.degree != other.degree or self.terms.keys() != other.terms.keys():
                return False
            return all(self.terms[p] == other.terms[p] for p in self.terms)
        if other == 0:
            return not self.terms
        return NotImplemented

    __hash__ = None  # type: ignore[assignment]

    def map_coeffs(self, f: Callable[[Any], Any]) -> "GroupAlgebraElement":
        res = {}
        for p, c in self.terms.items():
            v = f(c)
            if v:
                res[p] = v
        return GroupAlgebraElement._raw(self.degree, res)

    def mul_transposition_right(self, i: int, j: int) -> "GroupAlgebraElement":
        """``self * (i j)`` by relabelling, 1-based points."""
        a, b = i - 1, j - 1
        res = {}
        for p, c in self.terms.items():
            q = list(p)
            q[a], q[b] = q[b], q[a]
            res[Permutation(q)] = c
        return GroupAlgebraElement._raw(self.degree, res)

    def mul_transposition_left(self, i: int, j: int) -> "GroupAlgebraElement":
        """``(i j) * self``, 1-based points."""
        a, b = i - 1, j - 1
        res = {}
        for p, c in self.terms.items():
            q = [b if k == a else a if k == b else k for k in p]
            res[Permutation(q)] = c
        return GroupAlgebraElement._raw(self.degree, res)

    def sorted_terms(self) -> list[tuple[Permutation, Any]]:
        return sorted(self.terms.items(), key=lambda kv: tuple(kv[0]))

    def to_json(self) -> list[dict]:
        return [{"perm": p.one_based(), "coeff": encode_scalar(c)} for p, c in self.sorted_terms()]

    @classmethod
    def from_json(cls, data: list[dict], degree: int | None = None, var: str = "t") -> "GroupAlgebraElement":
        terms = {}
        for item in data:
            p = Permutation.from_one_based(item["perm"])
            terms[p] = decode_scalar(item["coeff"], var)
        if degree is None:
            if not terms:
                raise ValueError("degree required for an empty element")
            degree = len(next(iter(terms)))
        return cls(degree, terms)

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for p, c in self.sorted_terms():
            parts.append(f"{c}*{p!r}" if c != 1 else repr(p))
        return " + ".join(parts)


def _accumulate(res: dict, items: Iterable[tuple[Permutation, Any]]) -> None:
    for p, c in items:
        if p in res:
            s = res[p] + c
            if s:
                res[p] = s
            else:
                del res[p]
        elif c:
            res[p] = c


def ga_mul(a: GroupAlgebraElement, b: GroupAlgebraElement) -> GroupAlgebraElement:
    """Convolution product; permutations compose right-to-left."""
    a._check(b)
    res: dict[Permutation, Any] = {}
    bt = list(b.terms.items())
    for p, x in a.terms.items():
        for q, y in bt:
            r = Permutation(p[k] for k in q)
            c = x * y
            if r in res:
                s = res[r] + c
                if s:
                    res[r] = s
                else:
                    del res[r]
            elif c:
                res[r] = c
    return GroupAlgebraElement._raw(a.degree, res)


def alpha(a: GroupAlgebraElement) -> GroupAlgebraElement:
    """The antiautomorphism sending each permutation to its inverse."""
    return GroupAlgebraElement._raw(a.degree, {p.inverse(): c for p, c in a.terms.items()})


def embed_shift(a: GroupAlgebraElement, offset: int, new_degree: int) -> GroupAlgebraElement:
    """Move the action of S_n onto the points offset+1..offset+n of S_{new_degree}."""
    if offset < 0 or offset + a.degree > new_degree:
        raise ValueError(f"cannot embed S_{a.degree} at offset {offset} into S_{new_degree}")
    return GroupAlgebraElement._raw(
        new_degree, {p.shifted(offset, new_degree): c for p, c in a.terms.items()}
    )


def sign(p: Permutation) -> int:
    return p.sign()
