"""Exact scalars: the rationals, prime fields F_p and cyclotomic fields Q(zeta_n).

Every coordinate in the package is a :class:`FieldElement`.  Cyclotomic
elements are coefficient vectors in the power basis ``1, z, ..., z^(d-1)``
with ``d = phi(n)``, always reduced modulo the n-th cyclotomic polynomial,
so equality of payloads is equality in the field.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cache
from numbers import Rational

from .errors import DivisionByZero, NonInvertibleDenominator, SpecMismatch

Poly = tuple  # tuple of Fractions, lowest degree first, no trailing zeros


def is_prime(p: int) -> bool:
    """Deterministic Miller-Rabin for p < 3.3e24, which covers every use here."""
    if p < 2:
        return False
    small = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
    for q in small:
        if p % q == 0:
            return p == q
    d, s = p - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in small:
        x = pow(a, d, p)
        if x in (1, p - 1):
            continue
        for _ in range(s - 1):
            x = x * x % p
            if x == p - 1:
                break
        else:
            return False
    return True


def totient(n: int) -> int:
    result, m, q = n, n, 2
    while q * q <= m:
        if m % q == 0:
            while m % q == 0:
                m //= q
            result -= result // q
        q += 1
    if m > 1:
        result -= result // m
    return result


# --- polynomial helpers over Q -------------------------------------------------

def _trim(c) -> Poly:
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def poly_mul(a: Poly, b: Poly) -> Poly:
    if not a or not b:
        return ()
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim(out)


def poly_sub(a: Poly, b: Poly) -> Poly:
    n = max(len(a), len(b))
    return _trim((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n))


def poly_divmod(a: Poly, b: Poly) -> tuple[Poly, Poly]:
    """Euclidean division in Q[x]; ``b`` must be nonzero."""
    if not b:
        raise DivisionByZero("polynomial division by zero")
    rem = [Fraction(x) for x in a]
    quot = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    lead = b[-1]
    for shift in range(len(a) - len(b), -1, -1):
        coef = rem[shift + len(b) - 1] / lead
        if coef:
            quot[shift] = coef
            for i, y in enumerate(b):
                rem[shift + i] -= coef * y
    return _trim(quot), _trim(rem)


@cache
def cyclotomic_poly(n: int) -> Poly:
    """The n-th cyclotomic polynomial as a coefficient tuple, lowest degree first.

    Computed by exact division of ``x^n - 1`` by ``Phi_d`` for every proper
    divisor ``d`` of ``n``.

    >>> cyclotomic_poly(4)
    (Fraction(1, 1), Fraction(0, 1), Fraction(1, 1))
    """
    if n < 1:
        raise ValueError("cyclotomic index must be positive")
    num: Poly = (Fraction(-1),) + (Fraction(0),) * (n - 1) + (Fraction(1),)
    for d in range(1, n):
        if n % d == 0:
            num, rem = poly_divmod(num, cyclotomic_poly(d))
            assert not rem
    return num


@cache
def _reduction_table(n: int) -> tuple[Poly, ...]:
    """``x^k mod Phi_n`` as dense length-d vectors for ``0 <= k < 2d - 1``."""
    phi = cyclotomic_poly(n)
    d = len(phi) - 1
    rows = []
    for k in range(max(2 * d - 1, 1)):
        mono = (Fraction(0),) * k + (Fraction(1),)
        _, r = poly_divmod(mono, phi)
        rows.append(_dense(r, d))
    return tuple(rows)


def _dense(p: Poly, d: int) -> tuple:
    return tuple(p[i] if i < len(p) else Fraction(0) for i in range(d))


def _reduce(coeffs, n: int) -> tuple:
    """Reduce an arbitrary-length coefficient list modulo Phi_n."""
    phi = cyclotomic_poly(n)
    d = len(phi) - 1
    if len(coeffs) <= d:
        return _dense(tuple(Fraction(c) for c in coeffs), d)
    table = _reduction_table(n)
    if len(coeffs) > len(table):
        _, r = poly_divmod(tuple(Fraction(c) for c in coeffs), phi)
        return _dense(r, d)
    out = [Fraction(0)] * d
    for k, c in enumerate(coeffs):
        if c:
            row = table[k]
            for i in range(d):
                if row[i]:
                    out[i] += c * row[i]
    return tuple(out)


def _poly_inverse_mod(a: Poly, n: int) -> tuple:
    """Inverse of a nonzero residue modulo the irreducible Phi_n (extended Euclid)."""
    phi = cyclotomic_poly(n)
    r0, r1 = phi, _trim(a)
    s0, s1 = (), (Fraction(1),)
    while len(r1) > 1:
        q, r = poly_divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, poly_sub(s0, poly_mul(q, s1))
    if not r1:
        raise DivisionByZero("element is not invertible")
    c = r1[0]
    return _reduce(tuple(x / c for x in s1), n)


# --- field specs ---------------------------------------------------------------

@dataclass(frozen=True)
class FieldSpec:
    """Which field a scalar lives in.

    ``kind`` is ``"Q"``, ``"Fp"`` or ``"cyclotomic"``; ``modulus`` is ``p`` or ``n``.
    Use :func:`Rationals`, :func:`PrimeField` and :func:`Cyclotomic` to build one.
    """

    kind: str
    modulus: int = 0

    def __post_init__(self):
        if self.kind == "Q":
            object.__setattr__(self, "modulus", 0)
        elif self.kind == "Fp":
            if not is_prime(self.modulus):
                raise ValueError(f"{self.modulus} is not prime")
        elif self.kind == "cyclotomic":
            if self.modulus < 1:
                raise ValueError("cyclotomic index must be positive")
        else:
            raise ValueError(f"unknown field kind {self.kind!r}")

    @property
    def degree(self) -> int:
        return totient(self.modulus) if self.kind == "cyclotomic" else 1

    @property
    def characteristic(self) -> int:
        return self.modulus if self.kind == "Fp" else 0

    def __call__(self, value) -> FieldElement:
        """Coerce an int, Fraction, string or FieldElement into this field."""
        if isinstance(value, FieldElement):
            if value.spec != self:
                raise SpecMismatch(f"{value.spec} element used in {self}")
            return value
        if isinstance(value, str):
            value = Fraction(value)
        if not isinstance(value, Rational):
            raise TypeError(f"cannot embed {type(value).__name__} into {self}")
        return embed_rational(Fraction(value), self)

    def zero(self) -> FieldElement:
        return self(0)

    def one(self) -> FieldElement:
        return self(1)

    def zeta(self) -> FieldElement:
        if self.kind != "cyclotomic":
            raise ValueError(f"{self} has no distinguished root of unity")
        return zeta_combination(self.modulus, [(1, Fraction(1))])

    def __str__(self):
        if self.kind == "Q":
            return "Q"
        if self.kind == "Fp":
            return f"F_{self.modulus}"
        return f"Q(zeta_{self.modulus})"


def Rationals() -> FieldSpec:
    return FieldSpec("Q")


def PrimeField(p: int) -> FieldSpec:
    return FieldSpec("Fp", p)


def Cyclotomic(n: int) -> FieldSpec:
    return FieldSpec("cyclotomic", n)


QQ = Rationals()


# --- elements ------------------------------------------------------------------

class FieldElement:
    """An immutable exact scalar.

    The payload ``value`` is a :class:`~fractions.Fraction` over Q, an ``int``
    residue in ``[0, p)`` over F_p, and a tuple of ``phi(n)`` Fractions over
    Q(zeta_n).  Arithmetic with plain ints and Fractions coerces them into the
    element's field.
    """

    __slots__ = ("spec", "value")

    def __init__(self, spec: FieldSpec, value):
        object.__setattr__(self, "spec", spec)
        object.__setattr__(self, "value", value)

    def __setattr__(self, name, value):
        raise AttributeError("FieldElement is immutable")

    # coercion
    def _other(self, other) -> FieldElement | None:
        if isinstance(other, FieldElement):
            if other.spec != self.spec:
                raise SpecMismatch(f"cannot combine {self.spec} with {other.spec}")
            return other
        if isinstance(other, Rational):
            return embed_rational(Fraction(other), self.spec)
        return None

    def is_zero(self) -> bool:
        if self.spec.kind == "cyclotomic":
            return not any(self.value)
        return self.value == 0

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        try:
            o = self._other(other)
        except (SpecMismatch, NonInvertibleDenominator):
            return False
        if o is None:
            return NotImplemented
        return self.value == o.value

    def __hash__(self):
        return hash((self.spec, self.value))

    def __neg__(self):
        s = self.spec
        if s.kind == "Q":
            return FieldElement(s, -self.value)
        if s.kind == "Fp":
            return FieldElement(s, -self.value % s.modulus)
        return FieldElement(s, tuple(-c for c in self.value))

    def __add__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        s = self.spec
        if s.kind == "Q":
            return FieldElement(s, self.value + o.value)
        if s.kind == "Fp":
            return FieldElement(s, (self.value + o.value) % s.modulus)
        return FieldElement(s, tuple(a + b for a, b in zip(self.value, o.value)))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        s = self.spec
        if s.kind == "Q":
            return FieldElement(s, self.value * o.value)
        if s.kind == "Fp":
            return FieldElement(s, self.value * o.value % s.modulus)
        a, b = self.value, o.value
        prod = [Fraction(0)] * (2 * len(a) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] += x * y
        return FieldElement(s, _reduce(prod, s.modulus))

    __rmul__ = __mul__

    def inverse(self) -> FieldElement:
        if self.is_zero():
            raise DivisionByZero(f"division by zero in {self.spec}")
        s = self.spec
        if s.kind == "Q":
            return FieldElement(s, 1 / self.value)
        if s.kind == "Fp":
            return FieldElement(s, pow(self.value, -1, s.modulus))
        return FieldElement(s, _poly_inverse_mod(self.value, s.modulus))

    def __truediv__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result, base = self.spec.one(), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def conjugate(self) -> FieldElement:
        """Complex conjugate under the embedding ``zeta_n -> exp(2*pi*i/n)``.

        Only defined for characteristic zero.
        """
        s = self.spec
        if s.kind == "Fp":
            raise ValueError("complex conjugation is undefined over F_p")
        if s.kind == "Q":
            return self
        n = s.modulus
        return zeta_combination(n, [(-k, c) for k, c in enumerate(self.value) if c])

    def is_real(self) -> bool:
        """True iff the element is real under the standard complex embedding."""
        if self.spec.kind == "Fp":
            return False
        return self == self.conjugate()

    def sort_key(self):
        if self.spec.kind == "cyclotomic":
            return self.value
        return (self.value,)

    def to_text(self):
        """Encode as a ``"num/den"`` string (or a list of them over Q(zeta_n))."""
        if self.spec.kind == "cyclotomic":
            return [_frac_text(c) for c in self.value]
        if self.spec.kind == "Fp":
            return str(self.value)
        return _frac_text(self.value)

    def __str__(self):
        if self.spec.kind != "cyclotomic":
            return str(self.value)
        terms = []
        for k, c in enumerate(self.value):
            if not c:
                continue
            mono = "" if k == 0 else ("z" if k == 1 else f"z^{k}")
            if not mono:
                terms.append(str(c))
            elif c == 1:
                terms.append(mono)
            elif c == -1:
                terms.append("-" + mono)
            else:
                terms.append(f"{c}*{mono}")
        return " + ".join(terms).replace("+ -", "- ") if terms else "0"

    def __repr__(self):
        return f"FieldElement({self.spec}, {self})"


def _frac_text(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def embed_rational(q, spec: FieldSpec) -> FieldElement:
    """Canonical image of a rational number in ``spec``."""
    q = Fraction(q)
    if spec.kind == "Q":
        return FieldElement(spec, q)
    if spec.kind == "Fp":
        p = spec.modulus
        if q.denominator % p == 0:
            raise NonInvertibleDenominator(f"{q} has no image in F_{p}")
        return FieldElement(spec, q.numerator * pow(q.denominator, -1, p) % p)
    d = spec.degree
    return FieldElement(spec, (q,) + (Fraction(0),) * (d - 1))


def zeta_combination(n: int, terms) -> FieldElement:
    """``sum(coeff * zeta_n**exponent)`` reduced into Q(zeta_n).

    Exponents may be negative or exceed ``n``; they are taken modulo ``n``.
    """
    coeffs = [Fraction(0)] * n
    for e, c in terms:
        coeffs[e % n] += Fraction(c)
    return FieldElement(Cyclotomic(n), _reduce(_trim(coeffs), n))


def field_arith(a: FieldElement, b: FieldElement, op: str) -> FieldElement:
    """Functional form of ``a <op> b`` for op in add, sub, mul, div."""
    if a.spec != b.spec:
        raise SpecMismatch(f"cannot combine {a.spec} with {b.spec}")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown operation {op!r}")


def from_payload(spec: FieldSpec, payload) -> FieldElement:
    """Decode the text encoding produced by :meth:`FieldElement.to_text`."""
    if spec.kind == "cyclotomic":
        if isinstance(payload, (str, int)):
            return spec(Fraction(payload))
        coeffs = [Fraction(str(c)) for c in payload]
        if len(coeffs) != spec.degree:
            raise ValueError(f"expected {spec.degree} coefficients for {spec}, got {len(coeffs)}")
        return FieldElement(spec, _reduce(coeffs, spec.modulus))
    if spec.kind == "Fp":
        return spec(Fraction(str(payload)))
    return spec(Fraction(str(payload)))


def cos_pi(k: int, m: int) -> FieldElement:
    """cos(pi*k/m) inside Q(zeta_{4m})."""
    n = 4 * m
    return zeta_combination(n, [(2 * k, Fraction(1, 2)), (-2 * k, Fraction(1, 2))])


def sin_pi(k: int, m: int) -> FieldElement:
    """sin(pi*k/m) inside Q(zeta_{4m}), using i = zeta^m and 1/i = zeta^{3m}."""
    n = 4 * m
    return zeta_combination(n, [(2 * k + 3 * m, Fraction(1, 2)), (-2 * k + 3 * m, Fraction(-1, 2))])

