"""Exact scalars, univariate polynomials and reduced rational functions.

Scalars are :class:`fractions.Fraction`.  Polynomials carry a variable tag
(one of ``t, z, u, v, w``); arithmetic between different tags raises
:class:`VariableMismatch` so that parameters of unrelated computations are
never silently combined.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational as _RationalABC
from typing import Any, Callable, Iterable, Sequence

Rational = Fraction

VARIABLES = ("t", "z", "u", "v", "w")

_ZERO = Fraction(0)
_ONE = Fraction(1)


class PoleError(ArithmeticError):
    """A rational function was evaluated at one of its poles."""

    def __init__(self, order: int, point: Any = None):
        self.order = order
        self.point = point
        super().__init__(f"pole of order {order} at {point}")


class VariableMismatch(TypeError):
    pass


def as_rational(x: Any) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, _RationalABC)):
        return Fraction(x)
    if isinstance(x, str):
        return parse_rational(x)
    raise TypeError(f"cannot interpret {x!r} as an exact rational")


def format_rational(q: Any) -> str:
    q = as_rational(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def parse_rational(s: str) -> Fraction:
    s = s.strip()
    if "/" in s:
        p, q = s.split("/", 1)
        return Fraction(int(p), int(q))
    return Fraction(int(s))


def _is_scalar(x: Any) -> bool:
    return isinstance(x, (int, Fraction)) and not isinstance(x, bool)


def _strip(coeffs: list) -> tuple:
    n = len(coeffs)
    while n and not coeffs[n - 1]:
        n -= 1
    return tuple(coeffs[:n])


class UniPoly:
    """Polynomial over Q in one tagged variable, coefficients lowest degree first."""

    __slots__ = ("coeffs", "var")

    def __init__(self, coeffs: Iterable[Any] = (), var: str = "t"):
        if var not in VARIABLES:
            raise ValueError(f"unknown variable tag {var!r}")
        self.var = var
        self.coeffs = _strip([as_rational(c) for c in coeffs])

    @classmethod
    def _raw(cls, coeffs: tuple, var: str) -> "UniPoly":
        p = object.__new__(cls)
        p.coeffs = coeffs
        p.var = var
        return p

    @classmethod
    def constant(cls, c: Any, var: str = "t") -> "UniPoly":
        return cls((c,), var)

    @classmethod
    def variable(cls, var: str = "t") -> "UniPoly":
        return cls((0, 1), var)

    @classmethod
    def affine(cls, a: Any, b: Any, var: str = "t") -> "UniPoly":
        """The polynomial ``a + b*var``."""
        return cls((a, b), var)

    @property
    def degree(self) -> int:
        """Degree; the zero polynomial has degree -1."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    @property
    def lead(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else _ZERO

    def _check(self, other: "UniPoly") -> None:
        if other.var != self.var:
            raise VariableMismatch(f"cannot combine polynomials in {self.var} and {other.var}")

    def _coerce(self, other: Any) -> "UniPoly":
        if isinstance(other, UniPoly):
            self._check(other)
            return other
        if _is_scalar(other):
            return UniPoly._raw(_strip([Fraction(other)]), self.var)
        return NotImplemented

    def __add__(self, other: Any) -> "UniPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        res = list(a)
        for i, c in enumerate(b):
            res[i] += c
        return UniPoly._raw(_strip(res), self.var)

    __radd__ = __add__

    def __neg__(self) -> "UniPoly":
        return UniPoly._raw(tuple(-c for c in self.coeffs), self.var)

    def __sub__(self, other: Any) -> "UniPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other: Any) -> "UniPoly":
        return (-self) + other

    def __mul__(self, other: Any) -> "UniPoly":
        if _is_scalar(other):
            if not other:
                return UniPoly._raw((), self.var)
            return UniPoly._raw(tuple(c * other for c in self.coeffs), self.var)
        if not isinstance(other, UniPoly):
            return NotImplemented
        self._check(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return UniPoly._raw((), self.var)
        if len(b) == 1:
            s = b[0]
            return UniPoly._raw(tuple(c * s for c in a), self.var)
        if len(a) == 1:
            s = a[0]
            return UniPoly._raw(tuple(c * s for c in b), self.var)
        res = [_ZERO] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    res[i + j] += x * y
        return UniPoly._raw(_strip(res), self.var)

    __rmul__ = __mul__

    def __eq__(self, other: Any) -> bool:
        if isinstance(other, UniPoly):
            return self.var == other.var and self.coeffs == other.coeffs
        if _is_scalar(other):
            return self.coeffs == _strip([Fraction(other)])
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.var, self.coeffs))

    def __divmod__(self, other: "UniPoly") -> tuple["UniPoly", "UniPoly"]:
        self._check(other)
        if not other.coeffs:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        db = other.degree
        inv_lead = 1 / other.lead
        if len(rem) <= db:
            return UniPoly._raw((), self.var), self
        quot = [_ZERO] * (len(rem) - db)
        bc = other.coeffs
        for k in range(len(rem) - 1, db - 1, -1):
            c = rem[k]
            if not c:
                continue
            q = c * inv_lead
            quot[k - db] = q
            off = k - db
            for i in range(db + 1):
                rem[off + i] -= q * bc[i]
        return UniPoly._raw(_strip(quot), self.var), UniPoly._raw(_strip(rem[:db]), self.var)

    def __floordiv__(self, other: "UniPoly") -> "UniPoly":
        return divmod(self, other)[0]

    def __mod__(self, other: "UniPoly") -> "UniPoly":
        return divmod(self, other)[1]

    def monic(self) -> "UniPoly":
        if not self.coeffs or self.coeffs[-1] == 1:
            return self
        inv = 1 / self.coeffs[-1]
        return UniPoly._raw(tuple(c * inv for c in self.coeffs), self.var)

    def __call__(self, x: Any) -> Any:
        acc: Any = _ZERO
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def valuation_at(self, p: Any) -> float:
        """Multiplicity of the root ``p``; ``inf`` for the zero polynomial."""
        if not self.coeffs:
            return float("inf")
        p = as_rational(p)
        coeffs = list(self.coeffs)
        k = 0
        while True:
            # synthetic division by (x - p)
            n = len(coeffs) - 1
            if n < 1:
                return k
            q = [_ZERO] * n
            acc = coeffs[n]
            q[n - 1] = acc
            for i in range(n - 1, 0, -1):
                acc = coeffs[i] + acc * p
                q[i - 1] = acc
            r = coeffs[0] + acc * p
            if r:
                return k
            coeffs = q
            k += 1

    def derivative(self) -> "UniPoly":
        return UniPoly._raw(_strip([c * i for i, c in enumerate(self.coeffs)][1:]), self.var)

    def to_json(self) -> list[str]:
        return [format_rational(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, data: Sequence[str], var: str = "t") -> "UniPoly":
        return cls([parse_rational(s) if isinstance(s, str) else s for s in data], var)

    def __repr__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            if i == 0:
                parts.append(format_rational(c))
            else:
                mono = self.var if i == 1 else f"{self.var}^{i}"
                if c == 1:
                    parts.append(mono)
                elif c == -1:
                    parts.append("-" + mono)
                else:
                    parts.append(f"{format_rational(c)}*{mono}")
        return " + ".join(reversed(parts)).replace("+ -", "- ")


def poly_gcd(a: UniPoly, b: UniPoly) -> UniPoly:
    """Monic gcd by the Euclidean algorithm, normalizing every remainder."""
    a._check(b)
    if not a.coeffs:
        return b.monic()
    if not b.coeffs:
        return a.monic()
    if len(a.coeffs) == 1 or len(b.coeffs) == 1:
        return UniPoly._raw((_ONE,), a.var)
    if a.degree < b.degree:
        a, b = b, a
    a, b = a.monic(), b.monic()
    while b.coeffs:
        r = (a % b).monic()
        a, b = b, r
        if len(a.coeffs) == 1:
            return UniPoly._raw((_ONE,), a.var)
    return a


class RationalFunction:
    """Reduced quotient ``num/den`` with ``den`` monic and coprime to ``num``."""

    __slots__ = ("num", "den")

    def __init__(self, num: Any, den: Any = None, var: str | None = None):
        if not isinstance(num, UniPoly):
            num = UniPoly.constant(num, var or (den.var if isinstance(den, UniPoly) else "t"))
        if den is None:
            den = UniPoly._raw((_ONE,), num.var)
        elif not isinstance(den, UniPoly):
            den = UniPoly.constant(den, num.var)
        num._check(den)
        if not den.coeffs:
            raise ZeroDivisionError("rational function with zero denominator")
        if not num.coeffs:
            self.num, self.den = num, UniPoly._raw((_ONE,), num.var)
            return
        g = poly_gcd(num, den)
        if g.degree > 0:
            num, den = num // g, den // g
        lc = den.lead
        if lc != 1:
            inv = 1 / lc
            num, den = num * inv, den * inv
        self.num, self.den = num, den

    @classmethod
    def _raw(cls, num: UniPoly, den: UniPoly) -> "RationalFunction":
        f = object.__new__(cls)
        f.num = num
        f.den = den
        return f

    @classmethod
    def constant(cls, c: Any, var: str = "t") -> "RationalFunction":
        return cls._raw(UniPoly.constant(c, var), UniPoly._raw((_ONE,), var))

    @classmethod
    def variable(cls, var: str = "t") -> "RationalFunction":
        return cls._raw(UniPoly.variable(var), UniPoly._raw((_ONE,), var))

    @classmethod
    def inverse_affine(cls, a: Any, b: Any, var: str = "t") -> "RationalFunction":
        """``1/(a + b*var)``."""
        a, b = as_rational(a), as_rational(b)
        if not b:
            if not a:
                raise ZeroDivisionError("1/0")
            return cls.constant(1 / a, var)
        return cls._raw(UniPoly._raw((1 / b,), var), UniPoly._raw((a / b, _ONE), var))

    @property
    def var(self) -> str:
        return self.num.var

    def is_zero(self) -> bool:
        return not self.num.coeffs

    def __bool__(self) -> bool:
        return bool(self.num.coeffs)

    def is_polynomial(self) -> bool:
        return len(self.den.coeffs) == 1

    def is_constant(self) -> bool:
        return len(self.den.coeffs) == 1 and len(self.num.coeffs) <= 1

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self!r} is not constant")
        return self.num.coeffs[0] if self.num.coeffs else _ZERO

    def _coerce(self, other: Any) -> "RationalFunction":
        if isinstance(other, RationalFunction):
            self.num._check(other.num)
            return other
        if isinstance(other, UniPoly):
            self.num._check(other)
            return RationalFunction._raw(other, UniPoly._raw((_ONE,), self.var))
        if _is_scalar(other):
            return RationalFunction.constant(other, self.var)
        return NotImplemented

    def __add__(self, other: Any) -> "RationalFunction":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.num, self.den
        c, d = other.num, other.den
        if not a.coeffs:
            return other
        if not c.coeffs:
            return self
        if len(b.coeffs) == 1:
            # den == 1: a + c/d = (a*d + c)/d, already coprime
            return RationalFunction._raw(a * d + c, d)
        if len(d.coeffs) == 1:
            return RationalFunction._raw(a + c * b, b)
        if b == d:
            t = a + c
            if not t.coeffs:
                return RationalFunction._raw(t, UniPoly._raw((_ONE,), self.var))
            g = poly_gcd(t, b)
            if g.degree > 0:
                return RationalFunction._raw(t // g, b // g)
            return RationalFunction._raw(t, b)
        g = poly_gcd(b, d)
        if g.degree > 0:
            b1, d1 = b // g, d // g
            t = a * d1 + c * b1
            if not t.coeffs:
                return RationalFunction._raw(t, UniPoly._raw((_ONE,), self.var))
            g2 = poly_gcd(t, g)
            if g2.degree > 0:
                return RationalFunction._raw(t // g2, b1 * (d // g2))
            return RationalFunction._raw(t, b1 * d)
        t = a * d + c * b
        if not t.coeffs:
            return RationalFunction._raw(t, UniPoly._raw((_ONE,), self.var))
        return RationalFunction._raw(t, b * d)

    __radd__ = __add__

    def __neg__(self) -> "RationalFunction":
        return RationalFunction._raw(-self.num, self.den)

    def __sub__(self, other: Any) -> "RationalFunction":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other: Any) -> "RationalFunction":
        return (-self) + other

    def __mul__(self, other: Any) -> "RationalFunction":
        if _is_scalar(other):
            if not other:
                return RationalFunction.constant(0, self.var)
            return RationalFunction._raw(self.num * other, self.den)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.num, self.den
        c, d = other.num, other.den
        if not a.coeffs or not c.coeffs:
            return RationalFunction.constant(0, self.var)
        g1 = poly_gcd(a, d)
        g2 = poly_gcd(c, b)
        if g1.degree > 0:
            a, d = a // g1, d // g1
        if g2.degree > 0:
            c, b = c // g2, b // g2
        num, den = a * c, b * d
        lc = den.lead
        if lc != 1:
            num, den = num * (1 / lc), den * (1 / lc)
        return RationalFunction._raw(num, den)

    __rmul__ = __mul__

    def inverse(self) -> "RationalFunction":
        if not self.num.coeffs:
            raise ZeroDivisionError("inverse of the zero function")
        lc = self.num.lead
        return RationalFunction._raw(self.den * (1 / lc), self.num * (1 / lc))

    def __truediv__(self, other: Any) -> "RationalFunction":
        if _is_scalar(other):
            if not other:
                raise ZeroDivisionError("division by zero")
            return RationalFunction._raw(self.num * (1 / Fraction(other)), self.den)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other: Any) -> "RationalFunction":
        return self.inverse() * other

    def __eq__(self, other: Any) -> bool:
        if isinstance(other, RationalFunction):
            return self.num == other.num and self.den == other.den
        if isinstance(other, UniPoly):
            return self.den.degree == 0 and self.num == other
        if _is_scalar(other):
            return self.den.degree == 0 and self.num == other
        return NotImplemented

    def __hash__(self) -> int:
        if self.is_constant():
            return hash(self.constant_value())
        return hash((self.num, self.den))

    def valuation_at(self, p: Any) -> float:
        """``ord_p(num) - ord_p(den)``; ``inf`` for the zero function."""
        if not self.num.coeffs:
            return float("inf")
        return self.num.valuation_at(p) - self.den.valuation_at(p)

    def pole_order_at(self, p: Any) -> int:
        return max(0, -self.valuation_at(p))

    def limit_at(self, p: Any) -> Fraction:
        v = self.valuation_at(p)
        if v < 0:
            raise PoleError(-v, p)
        p = as_rational(p)
        return self.num(p) / self.den(p)

    def __call__(self, x: Any) -> Any:
        return self.num(x) / self.den(x)

    def to_json(self) -> dict:
        return {"num": self.num.to_json(), "den": self.den.to_json()}

    @classmethod
    def from_json(cls, data: dict, var: str = "t") -> "RationalFunction":
        return cls(UniPoly.from_json(data["num"], var), UniPoly.from_json(data["den"], var))

    def __repr__(self) -> str:
        if self.is_polynomial():
            return repr(self.num)
        return f"({self.num!r})/({self.den!r})"


def ratfunc_arith(a: RationalFunction, b: RationalFunction, op: str) -> RationalFunction:
    ops: dict[str, Callable[[Any, Any], RationalFunction]] = {
        "+": lambda x, y: x + y,
        "-": lambda x, y: x - y,
        "−": lambda x, y: x - y,
        "*": lambda x, y: x * y,
        "×": lambda x, y: x * y,
        "/": lambda x, y: x / y,
        "÷": lambda x, y: x / y,
    }
    if op not in ops:
        raise ValueError(f"unknown operation {op!r}")
    return ops[op](a, b)


def valuation_at(f: RationalFunction, p: Any) -> float:
    return f.valuation_at(p)


def limit_at(f: RationalFunction, p: Any) -> Fraction:
    return f.limit_at(p)


def encode_scalar(c: Any) -> Any:
    """JSON encoding of a coefficient: ``"p/q"`` strings or ``{"num", "den"}`` objects."""
    if isinstance(c, RationalFunction):
        if c.is_constant():
            return format_rational(c.constant_value())
        return c.to_json()
    if isinstance(c, UniPoly):
        return {"num": c.to_json(), "den": ["1"]}
    if hasattr(c, "to_json"):
        return c.to_json()
    return format_rational(c)


def decode_scalar(data: Any, var: str = "t") -> Any:
    if isinstance(data, dict):
        return RationalFunction.from_json(data, var)
    if isinstance(data, str):
        return parse_rational(data)
    return as_rational(data)


class PolyOver:
    """Polynomial in a central variable with coefficients in an arbitrary ring.

    Coefficients only need ``+``, ``-``, ``*`` (with each other and with
    rational scalars) and truthiness for zero.  Products keep the factor
    order, so noncommutative coefficient rings are fine.
    """

    __slots__ = ("coeffs", "var")

    def __init__(self, coeffs: dict[int, Any] | Sequence[Any] | None = None, var: str = "z"):
        if var not in VARIABLES:
            raise ValueError(f"unknown variable tag {var!r}")
        self.var = var
        if coeffs is None:
            coeffs = {}
        if not isinstance(coeffs, dict):
            coeffs = dict(enumerate(coeffs))
        self.coeffs = {k: c for k, c in coeffs.items() if c}

    @classmethod
    def _raw(cls, coeffs: dict[int, Any], var: str) -> "PolyOver":
        p = object.__new__(cls)
        p.coeffs = coeffs
        p.var = var
        return p

    @classmethod
    def variable(cls, var: str = "z") -> "PolyOver":
        return cls({1: _ONE}, var)

    @property
    def degree(self) -> int:
        return max(self.coeffs, default=-1)

    def coefficient(self, k: int) -> Any:
        return self.coeffs.get(k, _ZERO)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def is_zero(self) -> bool:
        return not self.coeffs

    def _coerce(self, other: Any) -> "PolyOver":
        if isinstance(other, PolyOver):
            if other.var != self.var:
                raise VariableMismatch(f"cannot combine polynomials in {self.var} and {other.var}")
            return other
        return PolyOver._raw({0: other} if other else {}, self.var)

    def __add__(self, other: Any) -> "PolyOver":
        other = self._coerce(other)
        res = dict(self.coeffs)
        for k, c in other.coeffs.items():
            if k in res:
                s = res[k] + c
                if s:
                    res[k] = s
                else:
                    del res[k]
            else:
                res[k] = c
        return PolyOver._raw(res, self.var)

    def __radd__(self, other: Any) -> "PolyOver":
        return self._coerce(other) + self

    def __neg__(self) -> "PolyOver":
        return PolyOver._raw({k: -c for k, c in self.coeffs.items()}, self.var)

    def __sub__(self, other: Any) -> "PolyOver":
        return self + (-self._coerce(other))

    def __rsub__(self, other: Any) -> "PolyOver":
        return self._coerce(other) + (-self)

    def __mul__(self, other: Any) -> "PolyOver":
        other = self._coerce(other)
        res: dict[int, Any] = {}
        for i, a in self.coeffs.items():
            for j, b in other.coeffs.items():
                c = a * b
                if not c:
                    continue
                k = i + j
                if k in res:
                    s = res[k] + c
                    if s:
                        res[k] = s
                    else:
                        del res[k]
                else:
                    res[k] = c
        return PolyOver._raw(res, self.var)

    def __rmul__(self, other: Any) -> "PolyOver":
        return self._coerce(other) * self

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, PolyOver):
            other = PolyOver._raw({0: other} if other else {}, self.var)
        if other.var != self.var or self.coeffs.keys() != other.coeffs.keys():
            return False
        return all(self.coeffs[k] == other.coeffs[k] for k in self.coeffs)

    __hash__ = None  # type: ignore[assignment]

    def __call__(self, x: Any) -> Any:
        x = as_rational(x)
        acc: Any = _ZERO
        for k, c in self.coeffs.items():
            acc = acc + c * (x**k)
        return acc

    def map_coeffs(self, f: Callable[[Any], Any]) -> "PolyOver":
        return PolyOver({k: f(c) for k, c in self.coeffs.items()}, self.var)

    def to_json(self) -> dict:
        return {str(k): encode_scalar(c) for k, c in sorted(self.coeffs.items())}

    def __repr__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for k in sorted(self.coeffs, reverse=True):
            mono = "" if k == 0 else (self.var if k == 1 else f"{self.var}^{k}")
            terms.append(f"({self.coeffs[k]!r}){'*' + mono if mono else ''}")
        return " + ".join(terms)


class MPoly:
    """Polynomial in several commuting central variables over an arbitrary ring.

    Keys are exponent tuples aligned with ``vars``.  Coefficients follow the
    same rules as :class:`PolyOver`.
    """

    __slots__ = ("coeffs", "vars")

    def __init__(self, coeffs: dict[tuple[int, ...], Any] | None = None, vars: tuple[str, ...] = ("u", "v")):
        for v in vars:
            if v not in VARIABLES:
                raise ValueError(f"unknown variable tag {v!r}")
        self.vars = tuple(vars)
        self.coeffs = {tuple(k): c for k, c in (coeffs or {}).items() if c}

    @classmethod
    def _raw(cls, coeffs: dict, vars: tuple[str, ...]) -> "MPoly":
        p = object.__new__(cls)
        p.coeffs = coeffs
        p.vars = vars
        return p

    @classmethod
    def variable(cls, name: str, vars: tuple[str, ...], one: Any = _ONE) -> "MPoly":
        k = tuple(1 if v == name else 0 for v in vars)
        return cls({k: one}, vars)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def _coerce(self, other: Any) -> "MPoly":
        if isinstance(other, MPoly):
            if other.vars != self.vars:
                raise VariableMismatch(f"{self.vars} vs {other.vars}")
            return other
        zero = (0,) * len(self.vars)
        return MPoly._raw({zero: other} if other else {}, self.vars)

    def __add__(self, other: Any) -> "MPoly":
        other = self._coerce(other)
        res = dict(self.coeffs)
        for k, c in other.coeffs.items():
            if k in res:
                s = res[k] + c
                if s:
                    res[k] = s
                else:
                    del res[k]
            else:
                res[k] = c
        return MPoly._raw(res, self.vars)

    def __radd__(self, other: Any) -> "MPoly":
        return self._coerce(other) + self

    def __neg__(self) -> "MPoly":
        return MPoly._raw({k: -c for k, c in self.coeffs.items()}, self.vars)

    def __sub__(self, other: Any) -> "MPoly":
        return self + (-self._coerce(other))

    def __rsub__(self, other: Any) -> "MPoly":
        return self._coerce(other) + (-self)

    def __mul__(self, other: Any) -> "MPoly":
        other = self._coerce(other)
        res: dict = {}
        for k1, a in self.coeffs.items():
            for k2, b in other.coeffs.items():
                c = a * b
                if not c:
                    continue
                k = tuple(x + y for x, y in zip(k1, k2))
                if k in res:
                    s = res[k] + c
                    if s:
                        res[k] = s
                    else:
                        del res[k]
                else:
                    res[k] = c
        return MPoly._raw(res, self.vars)

    def __rmul__(self, other: Any) -> "MPoly":
        return self._coerce(other) * self

    def __eq__(self, other: Any) -> bool:
        other = self._coerce(other)
        if self.coeffs.keys() != other.coeffs.keys():
            return False
        return all(self.coeffs[k] == other.coeffs[k] for k in self.coeffs)

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for k in sorted(self.coeffs, reverse=True):
            mono = "*".join(f"{v}^{e}" if e > 1 else v for v, e in zip(self.vars, k) if e)
            terms.append(f"({self.coeffs[k]!r})" + (f"*{mono}" if mono else ""))
        return " + ".join(terms)
