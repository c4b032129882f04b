"""Exact scalar, polynomial and rational-function arithmetic.

Scalars are :class:`fractions.Fraction`.  Polynomials carry a variable name;
two variables are used in this package, ``alpha`` (the operator parameter)
and ``k`` (a summation index).  ``k`` sits above ``alpha``: a polynomial in
``k`` may have coefficients that are rational functions of ``alpha``, never
the other way round.
"""

from fractions import Fraction

__all__ = [
    "ALPHA", "ALPHA_VAR", "K", "K_VAR", "Poly", "RatFun",
    "alpha_poly", "as_scalar", "format_rational", "is_symbolic",
    "kratfun_shift", "parse_rational", "poly_eval", "poly_gcd", "ratfun_equal",
]

ALPHA_VAR = "alpha"
K_VAR = "k"
_RANK = {ALPHA_VAR: 0, K_VAR: 1}


def parse_rational(text):
    """Parse ``"p/q"``, ``"n"`` or an int into a Fraction.

    Decimal strings such as ``"0.5"`` are refused so that every value has an
    unambiguous exact meaning.
    """
    if isinstance(text, Fraction):
        return text
    if isinstance(text, int) and not isinstance(text, bool):
        return Fraction(text)
    if not isinstance(text, str):
        raise TypeError(f"cannot read {text!r} as a rational")
    s = text.strip()
    if not s or any(ch in s for ch in ".eE"):
        raise ValueError(f"not an exact rational: {text!r}")
    try:
        return Fraction(s)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not an exact rational: {text!r}") from exc


def format_rational(q):
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def _rank(x):
    if isinstance(x, (Poly, RatFun)):
        return _RANK[x.var]
    return -1


def _reflect(self, other, name):
    # Python skips reflected dunders between operands of the same class, so
    # an operand living in a higher variable has to be asked explicitly.
    if type(other) is type(self) and _rank(other) > _RANK[self.var]:
        return getattr(other, name)(self)
    return NotImplemented


def _coeff(x, var):
    """Coerce ``x`` into a coefficient for a polynomial in ``var``."""
    if isinstance(x, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (Poly, RatFun)) and _RANK[x.var] < _RANK[var]:
        return x if isinstance(x, RatFun) else RatFun(x)
    raise TypeError(f"{x!r} is not a coefficient for a polynomial in {var}")


class Poly:
    """Dense univariate polynomial, coefficients stored constant term first."""

    __slots__ = ("coeffs", "var")

    def __init__(self, coeffs=(), var=ALPHA_VAR):
        cs = [_coeff(c, var) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)
        self.var = var

    @classmethod
    def constant(cls, c, var=ALPHA_VAR):
        return cls((c,), var)

    @classmethod
    def x(cls, var=ALPHA_VAR):
        return cls((0, 1), var)

    @property
    def degree(self):
        return len(self.coeffs) - 1

    @property
    def lc(self):
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self):
        return not self.coeffs

    def _lift(self, other):
        if isinstance(other, Poly) and other.var == self.var:
            return other
        if _rank(other) < _RANK[self.var]:
            return Poly((other,), self.var)
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return _reflect(self, other, "__radd__")
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Poly(out, self.var)

    __radd__ = __add__

    def __neg__(self):
        return Poly([-c for c in self.coeffs], self.var)

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return _reflect(self, other, "__rsub__")
        return self + (-o)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return _reflect(self, other, "__sub__")
        return o + (-self)

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return _reflect(self, other, "__rmul__")
        if not self.coeffs or not o.coeffs:
            return Poly((), self.var)
        out = [Fraction(0)] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(o.coeffs):
                out[i + j] = out[i + j] + a * b
        return Poly(out, self.var)

    __rmul__ = __mul__

    def __pow__(self, e):
        if not isinstance(e, int) or e < 0:
            raise ValueError("polynomial powers must be nonnegative integers")
        out = Poly((1,), self.var)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __divmod__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        if o.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = len(rem) - len(o.coeffs)
        if dq < 0:
            return Poly((), self.var), self
        inv = 1 / o.lc
        quot = [Fraction(0)] * (dq + 1)
        for s in range(dq, -1, -1):
            c = rem[s + len(o.coeffs) - 1] * inv
            quot[s] = c
            if c == 0:
                continue
            for t, b in enumerate(o.coeffs):
                rem[s + t] = rem[s + t] - c * b
        return Poly(quot, self.var), Poly(rem[: len(o.coeffs) - 1], self.var)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exquo(self, other):
        """Exact quotient; raises ArithmeticError on a nonzero remainder."""
        q, r = divmod(self, other)
        if not r.is_zero():
            raise ArithmeticError(f"{other} does not divide {self}")
        return q

    def __truediv__(self, other):
        if isinstance(other, Poly) and other.var == self.var:
            return RatFun(self, other)
        if _rank(other) < _RANK[self.var]:
            inv = 1 / _coeff(other, self.var)
            return Poly([c * inv for c in self.coeffs], self.var)
        return NotImplemented

    def __rtruediv__(self, other):
        if _rank(other) < _RANK[self.var]:
            return RatFun(Poly((other,), self.var), self)
        return NotImplemented

    def __call__(self, x):
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def shift(self, h=1):
        """Return ``p(var + h)``."""
        return self(Poly((h, 1), self.var)) if self.coeffs else self

    def derivative(self):
        return Poly([i * c for i, c in enumerate(self.coeffs)][1:], self.var)

    def monic(self):
        if self.is_zero():
            return self
        return self / self.lc

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.var == other.var and self.coeffs == other.coeffs
        if isinstance(other, RatFun) and other.var == self.var:
            return NotImplemented
        try:
            c = _coeff(other, self.var)
        except TypeError:
            return NotImplemented
        if self.degree <= 0:
            return self.lc == c
        return False

    def __hash__(self):
        if self.degree <= 0:
            return hash(self.lc)
        return hash((self.var, self.coeffs))

    def __bool__(self):
        return bool(self.coeffs)

    def to_json(self):
        return [format_rational(c) for c in self.coeffs]

    def __repr__(self):
        return f"Poly({list(self.coeffs)!r}, var={self.var!r})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            cs = f"({c})" if isinstance(c, RatFun) else str(c)
            if i == 0:
                terms.append(cs)
                continue
            mono = self.var if i == 1 else f"{self.var}^{i}"
            terms.append(mono if c == 1 else f"-{mono}" if c == -1 else f"{cs}*{mono}")
        return " + ".join(terms).replace("+ -", "- ")


def poly_gcd(a, b):
    """Monic gcd by the Euclidean algorithm over the coefficient field."""
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


class RatFun:
    """Quotient of two polynomials in one variable, kept gcd-reduced with a
    monic denominator."""

    __slots__ = ("num", "den", "var")

    def __init__(self, num, den=1, var=None):
        if var is None:
            var = next((p.var for p in (num, den) if isinstance(p, (Poly, RatFun))), ALPHA_VAR)
        if any(isinstance(p, RatFun) and p.var == var for p in (num, den)):
            q = _as_ratfun(num, var) / _as_ratfun(den, var)
            self.num, self.den, self.var = q.num, q.den, var
            return
        num = num if isinstance(num, Poly) and num.var == var else Poly((num,), var)
        den = den if isinstance(den, Poly) and den.var == var else Poly((den,), var)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero():
            den = Poly((1,), var)
        elif den.degree > 0:
            g = poly_gcd(num, den)
            if g.degree > 0:
                num, den = num.exquo(g), den.exquo(g)
        lc = den.lc
        if lc != 1:
            num, den = num / lc, den / lc
        self.num, self.den, self.var = num, den, var

    def _lift(self, other):
        if isinstance(other, RatFun):
            return other if other.var == self.var else (
                RatFun(Poly((other,), self.var)) if _RANK[other.var] < _RANK[self.var] else None)
        if isinstance(other, Poly) and other.var == self.var:
            return RatFun(other)
        if _rank(other) < _RANK[self.var]:
            return RatFun(Poly((other,), self.var))
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return _reflect(self, other, "__radd__")
        if self.den == o.den:
            return RatFun(self.num + o.num, self.den)
        return RatFun(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        r = object.__new__(RatFun)
        r.num, r.den, r.var = -self.num, self.den, self.var
        return r

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return _reflect(self, other, "__rsub__")
        return self + (-o)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return _reflect(self, other, "__sub__")
        return o + (-self)

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return _reflect(self, other, "__rmul__")
        return RatFun(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._lift(other)
        if o is None:
            return _reflect(self, other, "__rtruediv__")
        if o.num.is_zero():
            raise ZeroDivisionError("division by the zero rational function")
        return RatFun(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is None:
            return _reflect(self, other, "__truediv__")
        return o / self

    def __pow__(self, e):
        if not isinstance(e, int):
            raise ValueError("integer exponents only")
        if e < 0:
            return RatFun(self.den ** -e, self.num ** -e)
        return RatFun(self.num ** e, self.den ** e)

    def __call__(self, x):
        d = self.den(x)
        if d == 0:
            raise ZeroDivisionError(f"{self} has a pole at {x}")
        return self.num(x) / d

    def shift(self, h=1):
        return RatFun(self.num.shift(h), self.den.shift(h))

    def is_constant(self):
        return self.num.degree <= 0 and self.den.degree == 0

    def constant_value(self):
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return self.num.lc

    def __eq__(self, other):
        o = self._lift(other) if not isinstance(other, bool) else None
        if o is None:
            return _reflect(self, other, "__eq__")
        return self.num * o.den == o.num * self.den

    def __hash__(self):
        if self.is_constant():
            return hash(self.num.lc)
        return hash((self.var, self.num.coeffs, self.den.coeffs))

    def __bool__(self):
        return not self.num.is_zero()

    def __repr__(self):
        return f"RatFun({self.num!r}, {self.den!r})"

    def __str__(self):
        if self.den.degree == 0:
            return str(self.num)
        return f"({self.num})/({self.den})"


def _as_ratfun(x, var):
    if isinstance(x, RatFun) and x.var == var:
        return x
    return RatFun(x if isinstance(x, Poly) and x.var == var else Poly((x,), var))


ALPHA = RatFun(Poly.x(ALPHA_VAR))
K = RatFun(Poly.x(K_VAR))


def alpha_poly(*coeffs):
    """Polynomial in alpha from coefficients, constant term first."""
    return Poly(coeffs, ALPHA_VAR)


def is_symbolic(x):
    return isinstance(x, (Poly, RatFun))


def as_scalar(x):
    """Normalize user input (int, str, Fraction) to a Fraction; symbolic
    values pass through unchanged."""
    if is_symbolic(x):
        return x
    return parse_rational(x)


def poly_eval(p, a):
    return p(a)


def ratfun_equal(f, g):
    return f.num * g.den == g.num * f.den


def kratfun_shift(f):
    return f.shift(1)
