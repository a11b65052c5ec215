"""Exact scalars: rational phases and cyclotomic field elements.

Every coefficient in the package is a :class:`CycScalar`, an element of
some cyclotomic field Q(zeta_N) stored exactly in the power basis of
Q[x]/Phi_N(x) with `Fraction` coordinates.  Equality is therefore exact;
no floating point is used anywhere in a computation.

Pure roots of unity keep a compact "phase" representation (a reduced
rational p/q meaning e^{2 pi i p/q}); products of phases stay phases,
which keeps the hot loops of the axiom checkers cheap.  Any mixed
operation falls back to the power-basis representation at the lcm of the
two conductors.
"""

from __future__ import annotations

import cmath
from fractions import Fraction
from math import gcd

from .errors import InvalidInput

__all__ = [
    "Phase",
    "CycScalar",
    "root_of_unity",
    "cyc_arith",
    "euler_phi",
    "cyclotomic_poly",
    "parse_scalar",
    "format_scalar",
]


def euler_phi(n: int) -> int:
    """Euler totient of a positive integer."""
    if n <= 0:
        raise InvalidInput(f"totient of non-positive integer {n}")
    result = n
    p, m = 2, n
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


_CYCLO_CACHE: dict[int, tuple[int, ...]] = {}


def cyclotomic_poly(n: int) -> tuple[int, ...]:
    """Integer coefficients of the n-th cyclotomic polynomial, low degree first."""
    if n in _CYCLO_CACHE:
        return _CYCLO_CACHE[n]
    # x^n - 1 divided by the product of Phi_d for proper divisors d of n.
    num = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            den = cyclotomic_poly(d)
            num = _poly_div_exact(num, list(den))
    poly = tuple(num)
    _CYCLO_CACHE[n] = poly
    return poly


def _poly_div_exact(num: list[int], den: list[int]) -> list[int]:
    """Exact division of integer polynomials (low degree first), den monic."""
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for k in range(len(out) - 1, -1, -1):
        coeff = num[k + len(den) - 1]
        out[k] = coeff
        if coeff:
            for i, d in enumerate(den):
                num[k + i] -= coeff * d
    if any(num[: len(den) - 1]):
        raise ArithmeticError("non-exact polynomial division")
    return out


_POWER_CACHE: dict[int, list[tuple[Fraction, ...]]] = {}


def _power_table(n: int) -> list[tuple[Fraction, ...]]:
    """x^k mod Phi_n as coefficient tuples, for k = 0 .. 2n."""
    if n in _POWER_CACHE:
        return _POWER_CACHE[n]
    deg = euler_phi(n)
    phi = cyclotomic_poly(n)
    # Phi_n is monic: x^deg = -sum_{i<deg} phi[i] x^i.
    table: list[tuple[Fraction, ...]] = []
    cur = [Fraction(0)] * deg
    cur[0] = Fraction(1)
    table.append(tuple(cur))
    for _ in range(2 * n):
        top = cur[deg - 1]
        nxt = [Fraction(0)] * deg
        for i in range(deg - 1):
            nxt[i + 1] = cur[i]
        if top:
            for i in range(deg):
                nxt[i] -= top * phi[i]
        cur = nxt
        table.append(tuple(cur))
    _POWER_CACHE[n] = table
    return table


def _reduce_poly(coeffs: list[Fraction], n: int) -> tuple[Fraction, ...]:
    """Reduce a polynomial in zeta_n (low degree first) into the power basis."""
    deg = euler_phi(n)
    out = [Fraction(0)] * deg
    table = None
    for k, a in enumerate(coeffs):
        if not a:
            continue
        if k < deg:
            out[k] += a
        else:
            if table is None:
                table = _power_table(n)
            row = table[k]
            for i in range(deg):
                if row[i]:
                    out[i] += a * row[i]
    return tuple(out)


class Phase:
    """An element of Q/Z written additively; p/q stands for e^{2 pi i p/q}."""

    __slots__ = ("value",)

    def __init__(self, p, q: int | None = None):
        if q is not None:
            if q == 0:
                raise InvalidInput("phase with zero denominator")
            value = Fraction(p, q)
        else:
            value = Fraction(p)
        self.value = value % 1

    @property
    def numerator(self) -> int:
        return self.value.numerator

    @property
    def denominator(self) -> int:
        return self.value.denominator

    def __add__(self, other: "Phase") -> "Phase":
        return Phase(self.value + other.value)

    def __sub__(self, other: "Phase") -> "Phase":
        return Phase(self.value - other.value)

    def __neg__(self) -> "Phase":
        return Phase(-self.value)

    def __mul__(self, n: int) -> "Phase":
        if not isinstance(n, int):
            return NotImplemented
        return Phase(n * self.value)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        return isinstance(other, Phase) and self.value == other.value

    def __hash__(self) -> int:
        return hash(("Phase", self.value))

    def is_zero(self) -> bool:
        return self.value == 0

    def scalar(self) -> "CycScalar":
        """The corresponding root of unity as a CycScalar."""
        return root_of_unity(self.value.numerator, self.value.denominator)

    def __str__(self) -> str:
        return f"{self.value.numerator}/{self.value.denominator}"

    def __repr__(self) -> str:
        return f"Phase({self.value.numerator}/{self.value.denominator})"

    @staticmethod
    def parse(text: str) -> "Phase":
        try:
            if "/" in text:
                p, q = text.split("/")
                return Phase(int(p), int(q))
            return Phase(int(text))
        except (ValueError, ZeroDivisionError) as exc:
            raise InvalidInput(f"bad phase string {text!r}") from exc


class CycScalar:
    """An exact element of a cyclotomic field.

    Internally either a pure phase (``_phase`` is a reduced Fraction mod 1
    and the value is the root of unity e^{2 pi i _phase}) or a coefficient
    vector ``_coeffs`` of length phi(_n) in the power basis of Q(zeta_n).
    Values are immutable and safe to share between threads.
    """

    __slots__ = ("_phase", "_n", "_coeffs")

    def __init__(self, *, phase: Fraction | None = None,
                 conductor: int | None = None,
                 coeffs: tuple[Fraction, ...] | None = None):
        if phase is not None:
            self._phase = phase % 1
            self._n = None
            self._coeffs = None
        else:
            assert conductor is not None and coeffs is not None
            assert len(coeffs) == euler_phi(conductor)
            self._phase = None
            self._n = conductor
            self._coeffs = coeffs

    # -- constructors --------------------------------------------------

    @staticmethod
    def zero() -> "CycScalar":
        return _ZERO

    @staticmethod
    def one() -> "CycScalar":
        return _ONE

    @staticmethod
    def from_rational(r) -> "CycScalar":
        r = Fraction(r)
        if r == 1:
            return _ONE
        return CycScalar(conductor=1, coeffs=(r,))

    @property
    def conductor(self) -> int:
        if self._phase is not None:
            return self._phase.denominator
        return self._n

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        """Power-basis coordinates at this value's own conductor."""
        return self._lift(self.conductor)

    def is_phase(self) -> bool:
        return self._phase is not None

    def phase_value(self) -> Fraction:
        if self._phase is None:
            raise InvalidInput("not stored as a pure phase")
        return self._phase

    # -- representation plumbing ---------------------------------------

    def _lift(self, n: int) -> tuple[Fraction, ...]:
        """Coefficients of this value inside Q(zeta_n); conductor must divide n."""
        if self._phase is not None:
            p, q = self._phase.numerator, self._phase.denominator
            assert n % q == 0
            e = p * (n // q)
            deg = euler_phi(n)
            if e < deg:
                out = [Fraction(0)] * deg
                out[e] = Fraction(1)
                return tuple(out)
            return _power_table(n)[e]
        m = self._n
        assert n % m == 0
        if n == m:
            return self._coeffs
        step = n // m
        poly = [Fraction(0)] * ((len(self._coeffs) - 1) * step + 1)
        for i, a in enumerate(self._coeffs):
            if a:
                poly[i * step] = a
        return _reduce_poly(poly, n)

    def _common(self, other: "CycScalar") -> tuple[int, tuple, tuple]:
        n = self.conductor * other.conductor // gcd(self.conductor, other.conductor)
        return n, self._lift(n), other._lift(n)

    # -- arithmetic -----------------------------------------------------

    def __add__(self, other) -> "CycScalar":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        n, a, b = self._common(other)
        return _make(n, tuple(x + y for x, y in zip(a, b)))

    __radd__ = __add__

    def __neg__(self) -> "CycScalar":
        if self._phase is not None:
            # -zeta^k = e^{i pi} zeta^k
            return CycScalar(phase=self._phase + Fraction(1, 2))
        return CycScalar(conductor=self._n, coeffs=tuple(-c for c in self._coeffs))

    def __sub__(self, other) -> "CycScalar":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __mul__(self, other) -> "CycScalar":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self._phase is not None and other._phase is not None:
            return CycScalar(phase=self._phase + other._phase)
        if self.is_zero() or other.is_zero():
            return _ZERO
        n, a, b = self._common(other)
        la, lb = len(a), len(b)
        conv = [Fraction(0)] * (la + lb - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        conv[i + j] += x * y
        return _make(n, _reduce_poly(conv, n))

    __rmul__ = __mul__

    def inv(self) -> "CycScalar":
        """Multiplicative inverse; raises ZeroDivisionError on zero."""
        if self._phase is not None:
            return CycScalar(phase=-self._phase)
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero cyclotomic scalar")
        n = self._n
        if n == 1:
            return CycScalar.from_rational(1 / self._coeffs[0])
        # Extended Euclid for self (as polynomial) against Phi_n.
        phi = [Fraction(c) for c in cyclotomic_poly(n)]
        a = list(self._coeffs)
        s_a, s_b = [Fraction(1)], [Fraction(0)]
        b = phi
        while True:
            b = _poly_trim(b)
            a = _poly_trim(a)
            if len(a) == 1 and a[0] == 0:
                raise ZeroDivisionError("inverse of zero cyclotomic scalar")
            if len(a) == 1:
                inv_lead = 1 / a[0]
                return _make(n, _reduce_poly([c * inv_lead for c in s_a], n))
            q, r = _poly_divmod(b, a)
            s_b = _poly_sub(s_b, _poly_mul(q, s_a))
            a, b = r, a
            s_a, s_b = s_b, s_a

    def __truediv__(self, other) -> "CycScalar":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inv()

    def __pow__(self, k: int) -> "CycScalar":
        if self._phase is not None:
            return CycScalar(phase=self._phase * k)
        if k < 0:
            return self.inv() ** (-k)
        result = _ONE
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def conj(self) -> "CycScalar":
        """Galois conjugation zeta_N -> zeta_N^{-1} (complex conjugation)."""
        if self._phase is not None:
            return CycScalar(phase=-self._phase)
        n = self._n
        if n == 1:
            return self
        poly = [Fraction(0)] * n
        for i, a in enumerate(self._coeffs):
            if a:
                poly[(n - i) % n] += a
        return _make(n, _reduce_poly(poly, n))

    # -- predicates ------------------------------------------------------

    def is_zero(self) -> bool:
        if self._phase is not None:
            return False
        return all(c == 0 for c in self._coeffs)

    def is_one(self) -> bool:
        return self == _ONE

    def __eq__(self, other) -> bool:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self._phase is not None and other._phase is not None:
            return self._phase == other._phase
        n, a, b = self._common(other)
        return a == b

    __hash__ = None  # cross-conductor equality makes hashing a trap

    def __complex__(self) -> complex:
        if self._phase is not None:
            return cmath.exp(2j * cmath.pi * float(self._phase))
        z = cmath.exp(2j * cmath.pi / self._n)
        return sum(float(c) * z ** i for i, c in enumerate(self._coeffs))

    def __repr__(self) -> str:
        return f"CycScalar({format_scalar(self)})"


def _poly_trim(p: list[Fraction]) -> list[Fraction]:
    k = len(p)
    while k > 1 and p[k - 1] == 0:
        k -= 1
    return p[:k]


def _poly_sub(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    out = [Fraction(0)] * max(len(a), len(b))
    for i, x in enumerate(a):
        out[i] += x
    for i, x in enumerate(b):
        out[i] -= x
    return out


def _poly_mul(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return out


def _poly_divmod(num: list[Fraction], den: list[Fraction]):
    num = list(num)
    dd = len(den) - 1
    if len(num) - 1 < dd:
        return [Fraction(0)], num
    q = [Fraction(0)] * (len(num) - dd)
    for k in range(len(q) - 1, -1, -1):
        c = num[k + dd] / den[dd]
        q[k] = c
        if c:
            for i, d in enumerate(den):
                num[k + i] -= c * d
    return q, _poly_trim(num[:dd] or [Fraction(0)])


def _make(n: int, coeffs: tuple[Fraction, ...]) -> CycScalar:
    return CycScalar(conductor=n, coeffs=tuple(coeffs))


def _coerce(x) -> CycScalar:
    if isinstance(x, CycScalar):
        return x
    if isinstance(x, (int, Fraction)):
        return CycScalar.from_rational(x)
    return NotImplemented


_ZERO = CycScalar(conductor=1, coeffs=(Fraction(0),))
_ONE = CycScalar(phase=Fraction(0))


def root_of_unity(p: int, q: int) -> CycScalar:
    """The root of unity zeta_q^p = e^{2 pi i p/q}, as an exact scalar."""
    if q < 1:
        raise InvalidInput(f"root_of_unity needs a positive order, got {q}")
    return CycScalar(phase=Fraction(p, q))


def cyc_arith(a: CycScalar, b: CycScalar | None, op: str):
    """Small dispatcher over the scalar field operations.

    ``op`` is one of add, mul, inv, conj, eq; inv and conj ignore ``b``.
    """
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    if op == "inv":
        return a.inv()
    if op == "conj":
        return a.conj()
    if op == "eq":
        return a == b
    raise InvalidInput(f"unknown scalar operation {op!r}")


# -- string grammar -----------------------------------------------------
#
# Pure phases print as "p/q" (meaning e^{2 pi i p/q}); anything else as
# "cyc(N):c0,c1,..." with rational coordinates in the power basis.


def format_scalar(x: CycScalar) -> str:
    if x.is_phase():
        v = x.phase_value()
        return f"{v.numerator}/{v.denominator}"
    body = ",".join(_format_fraction(c) for c in x.coeffs)
    return f"cyc({x.conductor}):{body}"


def _format_fraction(c: Fraction) -> str:
    if c.denominator == 1:
        return str(c.numerator)
    return f"{c.numerator}/{c.denominator}"


def parse_scalar(text: str) -> CycScalar:
    text = text.strip()
    try:
        if text.startswith("cyc("):
            head, body = text.split(":", 1)
            n = int(head[4:-1])
            coeffs = tuple(Fraction(part) for part in body.split(","))
            if len(coeffs) != euler_phi(n):
                raise InvalidInput(
                    f"expected {euler_phi(n)} coefficients for conductor {n}")
            return CycScalar(conductor=n, coeffs=coeffs)
        if "/" in text:
            p, q = text.split("/")
            return root_of_unity(int(p), int(q))
        # Bare integers are rationals, not phases.
        return CycScalar.from_rational(int(text))
    except (ValueError, ZeroDivisionError) as exc:
        raise InvalidInput(f"bad scalar string {text!r}") from exc
