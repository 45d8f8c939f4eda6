"""Sparse exact-integer polynomials in (x, y) and in one variable.

Coefficients are Python ints, so nothing overflows.  Both classes are
immutable and keep only nonzero coefficients.
"""

from __future__ import annotations

from typing import Iterable, Mapping

from .errors import PreconditionError


def _clean(terms: Mapping) -> dict:
    return {k: c for k, c in terms.items() if c}


def _term(coef: int, factors: list[str]) -> tuple[str, str]:
    """Render one term as (sign, body) with unit coefficients elided."""
    sign = "-" if coef < 0 else "+"
    a = abs(coef)
    if not factors:
        return sign, str(a)
    body = "*".join(factors)
    return sign, body if a == 1 else f"{a}*{body}"


def _join(parts: list[tuple[str, str]]) -> str:
    if not parts:
        return "0"
    sign, body = parts[0]
    out = ("-" if sign == "-" else "") + body
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


def _power(var: str, k: int) -> list[str]:
    if k == 0:
        return []
    return [var] if k == 1 else [f"{var}^{k}"]


class BiPoly:
    """Polynomial in x and y; ``terms`` maps (i, j) to the coefficient of x^i y^j."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[tuple[int, int], int] | None = None):
        self._terms = _clean(terms or {})
        self._hash = None

    @classmethod
    def const(cls, c: int) -> BiPoly:
        return cls({(0, 0): c})

    @classmethod
    def x(cls) -> BiPoly:
        return cls({(1, 0): 1})

    @classmethod
    def y(cls) -> BiPoly:
        return cls({(0, 1): 1})

    @property
    def terms(self) -> dict[tuple[int, int], int]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def coefficient(self, i: int, j: int) -> int:
        return self._terms.get((i, j), 0)

    def is_zero(self) -> bool:
        return not self._terms

    def degree_x(self) -> int:
        return max((i for i, _ in self._terms), default=-1)

    def degree_y(self) -> int:
        return max((j for _, j in self._terms), default=-1)

    def __add__(self, other: BiPoly | int) -> BiPoly:
        other = _as_bi(other)
        out = dict(self._terms)
        for k, c in other._terms.items():
            out[k] = out.get(k, 0) + c
        return BiPoly(out)

    __radd__ = __add__

    def __neg__(self) -> BiPoly:
        return BiPoly({k: -c for k, c in self._terms.items()})

    def __sub__(self, other: BiPoly | int) -> BiPoly:
        return self + (-_as_bi(other))

    def __rsub__(self, other: int) -> BiPoly:
        return _as_bi(other) - self

    def __mul__(self, other: BiPoly | int) -> BiPoly:
        other = _as_bi(other)
        out: dict[tuple[int, int], int] = {}
        for (i1, j1), c1 in self._terms.items():
            for (i2, j2), c2 in other._terms.items():
                k = (i1 + i2, j1 + j2)
                out[k] = out.get(k, 0) + c1 * c2
        return BiPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> BiPoly:
        result = BiPoly.const(1)
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = BiPoly.const(other)
        if not isinstance(other, BiPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __call__(self, x: int, y: int) -> int:
        return sum(c * x**i * y**j for (i, j), c in self._terms.items())

    def swap(self) -> BiPoly:
        """T(y, x)."""
        return BiPoly({(j, i): c for (i, j), c in self._terms.items()})

    def __str__(self) -> str:
        return canonical_string(self)

    def __repr__(self) -> str:
        return f"BiPoly({canonical_string(self)!r})"

    def to_json(self) -> list[dict]:
        return [{"i": i, "j": j, "c": str(c)} for (i, j), c in sorted(self._terms.items(), key=_order_key)]

    @classmethod
    def from_json(cls, data: Iterable[Mapping]) -> BiPoly:
        return cls({(int(t["i"]), int(t["j"])): int(t["c"]) for t in data})


def _as_bi(p) -> BiPoly:
    if isinstance(p, BiPoly):
        return p
    if isinstance(p, int):
        return BiPoly.const(p)
    raise TypeError(f"cannot combine BiPoly with {type(p).__name__}")


def _order_key(item):
    (i, j), _ = item
    return (j, i)


def canonical_string(p: BiPoly) -> str:
    """Deterministic rendering, terms ordered by y-degree then x-degree."""
    parts = [_term(c, _power("x", i) + _power("y", j)) for (i, j), c in sorted(p.items(), key=_order_key)]
    return _join(parts)


class UniPoly:
    """Polynomial in one named variable; ``terms`` maps exponent to coefficient."""

    __slots__ = ("_terms", "var")

    def __init__(self, terms: Mapping[int, int] | None = None, var: str = "lam"):
        self._terms = _clean(terms or {})
        self.var = var

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[int], var: str = "lam") -> UniPoly:
        """Build from ascending coefficients c0, c1, ..."""
        return cls(dict(enumerate(coeffs)), var)

    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def coefficient(self, k: int) -> int:
        return self._terms.get(k, 0)

    def degree(self) -> int:
        return max(self._terms, default=-1)

    def low_degree(self) -> int:
        return min(self._terms, default=-1)

    def is_zero(self) -> bool:
        return not self._terms

    def coeffs(self) -> list[int]:
        """Ascending dense coefficient list (empty for zero)."""
        return [self._terms.get(k, 0) for k in range(self.degree() + 1)]

    def __add__(self, other: UniPoly | int) -> UniPoly:
        other = self._coerce(other)
        out = dict(self._terms)
        for k, c in other._terms.items():
            out[k] = out.get(k, 0) + c
        return UniPoly(out, self.var)

    __radd__ = __add__

    def __neg__(self) -> UniPoly:
        return UniPoly({k: -c for k, c in self._terms.items()}, self.var)

    def __sub__(self, other: UniPoly | int) -> UniPoly:
        return self + (-self._coerce(other))

    def __mul__(self, other: UniPoly | int) -> UniPoly:
        other = self._coerce(other)
        out: dict[int, int] = {}
        for a, c1 in self._terms.items():
            for b, c2 in other._terms.items():
                out[a + b] = out.get(a + b, 0) + c1 * c2
        return UniPoly(out, self.var)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> UniPoly:
        result = UniPoly({0: 1}, self.var)
        for _ in range(k):
            result = result * self
        return result

    def _coerce(self, other) -> UniPoly:
        if isinstance(other, UniPoly):
            return other
        if isinstance(other, int):
            return UniPoly({0: other}, self.var)
        raise TypeError(f"cannot combine UniPoly with {type(other).__name__}")

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = UniPoly({0: other})
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __call__(self, value: int) -> int:
        return sum(c * value**k for k, c in self._terms.items())

    def __str__(self) -> str:
        parts = [_term(c, _power(self.var, k)) for k, c in sorted(self._terms.items(), reverse=True)]
        return _join(parts)

    def __repr__(self) -> str:
        return f"UniPoly({str(self)!r})"

    def to_json(self) -> list[dict]:
        return [{"k": k, "c": str(c)} for k, c in sorted(self._terms.items())]


def substitute_affine(p: BiPoly, alpha: int, beta: int, gamma: int, delta: int, var: str = "lam") -> UniPoly:
    """Compose ``p`` with x -> alpha*v + beta and y -> gamma*v + delta."""
    xs = UniPoly({1: alpha, 0: beta}, var)
    ys = UniPoly({1: gamma, 0: delta}, var)
    xpow: dict[int, UniPoly] = {}
    ypow: dict[int, UniPoly] = {}
    out = UniPoly({}, var)
    for (i, j), c in p.items():
        if i not in xpow:
            xpow[i] = xs**i
        if j not in ypow:
            ypow[j] = ys**j
        out = out + xpow[i] * ypow[j] * c
    return out


def substitute_laurent_t(p: BiPoly, sign: int, shift: int, var: str = "t") -> UniPoly:
    """``sign * t^shift * p(-t, -1/t)`` as an ordinary polynomial in t.

    Raises PreconditionError if a negative power of t survives.
    """
    out: dict[int, int] = {}
    for (i, j), c in p.items():
        k = i - j + shift
        term = c if (i + j) % 2 == 0 else -c
        out[k] = out.get(k, 0) + sign * term
    out = _clean(out)
    neg = [k for k in out if k < 0]
    if neg:
        raise PreconditionError(f"negative power t^{min(neg)} remains after substitution")
    return UniPoly(out, var)
