"""
Truncated Laurent series over the rationals.

A series is a finite sum of terms ``c * x^a y^b t1^p t2^q`` with ``c`` a
:class:`fractions.Fraction`, Laurent exponents ``(a, b)`` in Z^2 and
deformation exponents ``(p, q) >= 0``.  Everything of total t-degree
``p + q`` above the series order is discarded.

Example
-------
>>> f = Series.from_terms({((-1, 0), (1, 0)): 1}, order=3) + 1
>>> str(log1p(f))
't1*x^-1 - 1/2*t1^2*x^-2 + 1/3*t1^3*x^-3'
"""
from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Iterable, Iterator, Mapping, NamedTuple, Union

Scalar = Union[int, Fraction]

# internal key layout: (a, b, p, q) for x^a y^b t1^p t2^q
Key = tuple[int, int, int, int]


class Monomial(NamedTuple):
    """x^z[0] y^z[1] t1^t[0] t2^t[1]."""

    z: tuple[int, int]
    t: tuple[int, int] = (0, 0)

    @property
    def degree(self) -> int:
        return self.t[0] + self.t[1]

    @property
    def key(self) -> Key:
        return (self.z[0], self.z[1], self.t[0], self.t[1])

    @classmethod
    def from_key(cls, key: Key) -> "Monomial":
        return cls((key[0], key[1]), (key[2], key[3]))


def _sort_key(key: Key):
    a, b, p, q = key
    return (p + q, p, q, a, b)


def _as_key(m) -> Key:
    if isinstance(m, Monomial):
        return m.key
    if len(m) == 2:
        z, t = m
        return (z[0], z[1], t[0], t[1])
    return tuple(m)


class Series:
    """Immutable truncated series; see the module docstring.

    Terms are stored sparsely with no zero coefficients; iteration follows the
    canonical order (total t-degree, then ``(p, q, a, b)`` lexicographically).
    """

    __slots__ = ("order", "_terms", "_hash")

    def __init__(self, terms: Mapping[Key, Scalar] | None = None, order: int = 0):
        if order < 0:
            raise ValueError(f"order must be non-negative, got {order}")
        clean: dict[Key, Fraction] = {}
        for key, c in (terms or {}).items():
            a, b, p, q = key
            if p < 0 or q < 0:
                raise ValueError(f"negative t-exponent in {key}")
            if p + q > order or c == 0:
                continue
            clean[(int(a), int(b), int(p), int(q))] = Fraction(c)
        self.order = order
        self._terms = dict(sorted(clean.items(), key=lambda kv: _sort_key(kv[0])))
        self._hash = None

    # -- construction -------------------------------------------------------

    @classmethod
    def from_terms(cls, terms: Mapping, order: int) -> "Series":
        """Build from a map whose keys are :class:`Monomial` or ``((a, b), (p, q))``."""
        acc: dict[Key, Fraction] = {}
        for m, c in terms.items():
            k = _as_key(m)
            acc[k] = acc.get(k, Fraction(0)) + Fraction(c)
        return cls(acc, order)

    @classmethod
    def constant(cls, c: Scalar, order: int) -> "Series":
        return cls({(0, 0, 0, 0): c}, order)

    @classmethod
    def one(cls, order: int) -> "Series":
        return cls.constant(1, order)

    @classmethod
    def zero(cls, order: int) -> "Series":
        return cls({}, order)

    @classmethod
    def monomial(cls, z=(0, 0), t=(0, 0), c: Scalar = 1, order: int = 0) -> "Series":
        return cls({(z[0], z[1], t[0], t[1]): c}, order)

    # -- access -------------------------------------------------------------

    @property
    def terms(self) -> dict[Monomial, Fraction]:
        return {Monomial.from_key(k): c for k, c in self._terms.items()}

    def items(self) -> Iterator[tuple[Key, Fraction]]:
        return iter(self._terms.items())

    def __iter__(self):
        return iter(self.terms.items())

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    @property
    def constant_term(self) -> Fraction:
        return self._terms.get((0, 0, 0, 0), Fraction(0))

    def coefficient(self, m) -> Fraction:
        return coefficient(self, m)

    def truncate(self, order: int) -> "Series":
        return Series(self._terms, min(order, self.order))

    def with_order(self, order: int) -> "Series":
        """Re-declare the order; raising it is only sound for exact polynomials."""
        return Series(self._terms, order)

    def min_degree(self) -> int | None:
        """Smallest total t-degree among the non-constant terms."""
        degs = [p + q for (a, b, p, q) in self._terms if (a, b, p, q) != (0, 0, 0, 0)]
        return min(degs) if degs else None

    def homogeneous(self, degree: int) -> "Series":
        """The part of total t-degree exactly ``degree``."""
        return Series({k: c for k, c in self._terms.items() if k[2] + k[3] == degree},
                      self.order)

    def is_unit(self) -> bool:
        """Constant term 1 and every other term inside the ideal (t1, t2)."""
        if self.constant_term != 1:
            return False
        return all(k[2] + k[3] > 0 for k in self._terms if k != (0, 0, 0, 0))

    # -- arithmetic ---------------------------------------------------------

    def _coerce(self, other) -> "Series":
        if isinstance(other, Series):
            return other
        if isinstance(other, (int, Fraction)):
            return Series.constant(other, self.order)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return add(self, other)

    __radd__ = __add__

    def __neg__(self) -> "Series":
        return Series({k: -c for k, c in self._terms.items()}, self.order)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return add(self, -other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return add(other, -self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Series({k: c * other for k, c in self._terms.items()}, self.order)
        if not isinstance(other, Series):
            return NotImplemented
        return mul(self, other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (1 / Fraction(other))
        return NotImplemented

    def __pow__(self, k: int) -> "Series":
        return int_pow(self, k)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Series.constant(other, self.order)
        if not isinstance(other, Series):
            return NotImplemented
        n = min(self.order, other.order)
        return self.truncate(n)._terms == other.truncate(n)._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.order, tuple(self._terms.items())))
        return self._hash

    def __repr__(self) -> str:
        return f"Series({str(self)!r}, order={self.order})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for (a, b, p, q), c in self._terms.items():
            factors = []
            for name, e in (("t1", p), ("t2", q), ("x", a), ("y", b)):
                if e == 1:
                    factors.append(name)
                elif e:
                    factors.append(f"{name}^{e}")
            mono = "*".join(factors)
            mag = abs(c)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    # -- serialization ------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "order": self.order,
            "terms": [
                {"c": str(c), "z": [a, b], "t": [p, q]}
                for (a, b, p, q), c in self._terms.items()
            ],
        }

    @classmethod
    def from_json(cls, obj: Mapping) -> "Series":
        order = int(obj["order"])
        acc: dict[Key, Fraction] = {}
        for term in obj["terms"]:
            a, b = term["z"]
            p, q = term.get("t", (0, 0))
            k = (int(a), int(b), int(p), int(q))
            acc[k] = acc.get(k, Fraction(0)) + Fraction(term["c"])
        return cls(acc, order)


def add(f: Series, g: Series) -> Series:
    order = min(f.order, g.order)
    acc = dict(f._terms)
    for k, c in g._terms.items():
        acc[k] = acc.get(k, 0) + c
    return Series(acc, order)


def mul(f: Series, g: Series) -> Series:
    order = min(f.order, g.order)
    if len(f) > len(g):
        f, g = g, f
    gterms = list(g._terms.items())  # sorted by total t-degree
    acc: dict[Key, Fraction] = {}
    for (a1, b1, p1, q1), c1 in f._terms.items():
        room = order - p1 - q1
        if room < 0:
            continue
        for (a2, b2, p2, q2), c2 in gterms:
            if p2 + q2 > room:
                break
            k = (a1 + a2, b1 + b2, p1 + p2, q1 + q2)
            acc[k] = acc.get(k, 0) + c1 * c2
    return Series(acc, order)


def _nilpotent_part(f: Series, what: str) -> Series:
    u = f - f.constant_term
    if any(k[2] + k[3] == 0 for k, _ in u.items()):
        raise ValueError(f"{what}: non-constant terms must lie in the ideal (t1, t2)")
    return u


def _powers_sum(u: Series, coeffs) -> Series:
    """sum_k coeffs(k) * u^k for k = 0..order, where u has no t-degree-0 part."""
    order = u.order
    total = Series.constant(coeffs(0), order)
    power = Series.one(order)
    for k in range(1, order + 1):
        power = mul(power, u)
        if not power:
            break
        ck = coeffs(k)
        if ck:
            total = add(total, power * ck)
    return total


def log1p(f: Series) -> Series:
    """log(f) for a unit series ``f`` (constant term 1)."""
    if f.constant_term != 1:
        raise ValueError(f"log1p requires constant term 1, got {f.constant_term}")
    u = _nilpotent_part(f, "log1p")
    return _powers_sum(u, lambda k: Fraction((-1) ** (k - 1), k) if k else 0)


def exp(f: Series) -> Series:
    if f.constant_term != 0:
        raise ValueError(f"exp requires constant term 0, got {f.constant_term}")
    u = _nilpotent_part(f, "exp")
    return _powers_sum(u, lambda k: Fraction(1, factorial(k)))


def inverse(f: Series) -> Series:
    """Multiplicative inverse of a unit series via the geometric series."""
    if f.constant_term != 1:
        raise ValueError(f"inverse requires constant term 1, got {f.constant_term}")
    u = _nilpotent_part(f, "inverse")
    return _powers_sum(u, lambda k: (-1) ** k)


def int_pow(f: Series, k: int) -> Series:
    if k < 0:
        return int_pow(inverse(f), -k)
    result = Series.one(f.order)
    base = f
    while k:
        if k & 1:
            result = mul(result, base)
        k >>= 1
        if k:
            base = mul(base, base)
    return result


def coefficient(f: Series, m) -> Fraction:
    key = _as_key(m)
    if key[2] + key[3] > f.order:
        raise ValueError(
            f"monomial of t-degree {key[2] + key[3]} is beyond the series order {f.order}"
        )
    return f._terms.get(key, Fraction(0))


def specialize_t(f: Series) -> Series:
    """Set t1 = t2 = t; the single parameter is stored in the t1 slot."""
    acc: dict[Key, Fraction] = {}
    for (a, b, p, q), c in f.items():
        k = (a, b, p + q, 0)
        acc[k] = acc.get(k, 0) + c
    return Series(acc, f.order)


def series_sum(items: Iterable[Series], order: int) -> Series:
    acc: dict[Key, Fraction] = {}
    for s in items:
        for k, c in s.items():
            acc[k] = acc.get(k, 0) + c
    return Series(acc, order)
