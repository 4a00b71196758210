"""Exact Gaussian-rational scalars and Laurent polynomials in one variable t."""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Iterable, Mapping, Union

Number = Union[int, Fraction, "GaussianRational"]


class GaussianRational:
    """A complex number re + i*im with rational parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        if isinstance(re, GaussianRational):
            if im:
                raise TypeError("imaginary part given twice")
            self.re, self.im = re.re, re.im
            return
        if isinstance(re, complex):
            raise TypeError("floating-point complex values are not exact")
        self.re = Fraction(re)
        self.im = Fraction(im)

    @classmethod
    def coerce(cls, x) -> "GaussianRational":
        if isinstance(x, GaussianRational):
            return x
        if isinstance(x, (int, Rational)):
            return cls(x)
        if isinstance(x, str):
            return cls.parse(x)
        raise TypeError(f"cannot coerce {x!r} to GaussianRational")

    @classmethod
    def parse(cls, text: str) -> "GaussianRational":
        """Inverse of ``str``: accepts forms like '3', '-1/2', '2i', '1/3 - 4/5 i'."""
        s = text.replace(" ", "")
        if not s:
            raise ValueError("empty scalar")
        if not s.endswith("i"):
            return cls(Fraction(s))
        body = s[:-1]
        # split at the last sign that is not leading and not after '/'
        cut = -1
        for k in range(len(body) - 1, 0, -1):
            if body[k] in "+-" and body[k - 1] != "/":
                cut = k
                break
        if cut == -1:
            re_txt, im_txt = "0", body
        else:
            re_txt, im_txt = body[:cut], body[cut:]
        if im_txt in ("", "+"):
            im_txt = "1"
        elif im_txt == "-":
            im_txt = "-1"
        return cls(Fraction(re_txt), Fraction(im_txt))

    def __add__(self, other):
        o = _coerce_or_none(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = _coerce_or_none(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = _coerce_or_none(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = _coerce_or_none(other)
        if o is None:
            return NotImplemented
        if not o.im:
            return GaussianRational(self.re * o.re, self.im * o.re)
        return GaussianRational(self.re * o.re - self.im * o.im,
                                self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = _coerce_or_none(other)
        if o is None:
            return NotImplemented
        n = o.re * o.re + o.im * o.im
        if n == 0:
            raise ZeroDivisionError("division by zero Gaussian rational")
        return self * GaussianRational(o.re / n, -o.im / n)

    def __rtruediv__(self, other):
        o = _coerce_or_none(other)
        if o is None:
            return NotImplemented
        return o / self

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __pos__(self):
        return self

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def norm(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def is_real(self) -> bool:
        return self.im == 0

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        o = _coerce_or_none(other)
        if o is None:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    def __repr__(self):
        return f"GaussianRational({self})"

    def __str__(self):
        if not self.im:
            return str(self.re)
        if not self.re:
            return f"{self.im} i"
        sign = "-" if self.im < 0 else "+"
        return f"{self.re} {sign} {abs(self.im)} i"


def _coerce_or_none(x):
    if isinstance(x, GaussianRational):
        return x
    if isinstance(x, (int, Rational)):
        return GaussianRational(x)
    return None


ZERO = GaussianRational(0)
ONE = GaussianRational(1)
I = GaussianRational(0, 1)


class LaurentScalar:
    """Finite sum of c_n t^n with Gaussian-rational c_n; zero terms are never stored."""

    __slots__ = ("_c", "_hash")

    def __init__(self, coeffs: Mapping[int, Number] | None = None):
        c = {}
        if coeffs:
            for n, v in coeffs.items():
                g = GaussianRational.coerce(v)
                if g:
                    c[int(n)] = g
        self._c = c
        self._hash = None

    @classmethod
    def _raw(cls, c: dict) -> "LaurentScalar":
        obj = cls.__new__(cls)
        obj._c = c
        obj._hash = None
        return obj

    @classmethod
    def const(cls, value: Number) -> "LaurentScalar":
        return cls({0: value})

    @classmethod
    def monomial(cls, degree: int, value: Number = 1) -> "LaurentScalar":
        return cls({degree: value})

    @property
    def coeffs(self) -> dict:
        return dict(self._c)

    def items(self):
        return sorted(self._c.items())

    def coeff(self, n: int) -> GaussianRational:
        return self._c.get(n, ZERO)

    def degrees(self) -> list[int]:
        return sorted(self._c)

    def min_degree(self):
        return min(self._c) if self._c else None

    def max_degree(self):
        return max(self._c) if self._c else None

    def is_zero(self) -> bool:
        return not self._c

    def __bool__(self):
        return bool(self._c)

    def __add__(self, other):
        o = _laurent_or_none(other)
        if o is None:
            return NotImplemented
        if not o._c:
            return self
        if not self._c:
            return o
        c = dict(self._c)
        for n, v in o._c.items():
            s = c.get(n)
            s = v if s is None else s + v
            if s:
                c[n] = s
            else:
                c.pop(n, None)
        return LaurentScalar._raw(c)

    __radd__ = __add__

    def __neg__(self):
        return LaurentScalar._raw({n: -v for n, v in self._c.items()})

    def __sub__(self, other):
        o = _laurent_or_none(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = _laurent_or_none(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        if isinstance(other, LaurentScalar):
            return laurent_mul(self, other)
        g = _coerce_or_none(other)
        if g is None:
            return NotImplemented
        return self.scale(g)

    __rmul__ = __mul__

    def scale(self, g: Number) -> "LaurentScalar":
        g = GaussianRational.coerce(g)
        if not g:
            return LaurentScalar._raw({})
        return LaurentScalar._raw({n: v * g for n, v in self._c.items()})

    def shift(self, k: int) -> "LaurentScalar":
        """Multiply by t^k."""
        return LaurentScalar._raw({n + k: v for n, v in self._c.items()})

    def __eq__(self, other):
        o = _laurent_or_none(other)
        if o is None:
            return NotImplemented
        return self._c == o._c

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._c.items()))
        return self._hash

    def __repr__(self):
        return f"LaurentScalar({self})"

    def __str__(self):
        if not self._c:
            return "0"
        parts = []
        for n, v in sorted(self._c.items()):
            coeff = str(v)
            if v.re and v.im:
                coeff = f"({coeff})"
            if n == 0:
                parts.append(coeff)
            elif v == ONE:
                parts.append(f"t^{n}")
            elif v == -ONE:
                parts.append(f"-t^{n}")
            else:
                parts.append(f"{coeff} t^{n}")
        return " + ".join(parts).replace("+ -", "- ")

    def to_json(self) -> dict:
        return {str(n): str(v) for n, v in sorted(self._c.items())}

    @classmethod
    def from_json(cls, data: Mapping[str, str]) -> "LaurentScalar":
        return cls({int(k): GaussianRational.parse(v) for k, v in data.items()})


def _laurent_or_none(x):
    if isinstance(x, LaurentScalar):
        return x
    g = _coerce_or_none(x)
    if g is None:
        return None
    return LaurentScalar._raw({0: g} if g else {})


def laurent_mul(p: LaurentScalar, q: LaurentScalar) -> LaurentScalar:
    if not p._c or not q._c:
        return LaurentScalar._raw({})
    out: dict = {}
    for a, x in p._c.items():
        for b, y in q._c.items():
            k = a + b
            s = out.get(k)
            out[k] = x * y if s is None else s + x * y
    return LaurentScalar._raw({k: v for k, v in out.items() if v})


def laurent_derivative(p: LaurentScalar) -> LaurentScalar:
    return LaurentScalar._raw({n - 1: v * n for n, v in p._c.items() if n != 0})


def residue(p: LaurentScalar) -> GaussianRational:
    return p.coeff(-1)


def substitute_sign(p: LaurentScalar, u: int) -> LaurentScalar:
    """p(t) -> p(u t) for u = +1 or -1."""
    if u not in (1, -1):
        raise ValueError("u must be +1 or -1")
    if u == 1:
        return p
    return LaurentScalar._raw({n: (-v if n % 2 else v) for n, v in p._c.items()})


def conjugate_bar(p: LaurentScalar, invert_t: bool = False) -> LaurentScalar:
    sgn = -1 if invert_t else 1
    return LaurentScalar._raw({sgn * n: v.conjugate() for n, v in p._c.items()})


def laurent_sum(items: Iterable[LaurentScalar]) -> LaurentScalar:
    out: dict = {}
    for p in items:
        for n, v in p._c.items():
            s = out.get(n)
            out[n] = v if s is None else s + v
    return LaurentScalar._raw({k: v for k, v in out.items() if v})
