"""
Exact Laurent polynomials in a formal half-power of q, over the integers.

The coefficient ring for everything else in this package: Kazhdan-Lusztig
polynomials, Hecke algebra coordinates, graded symmetric function
coefficients.  Exponents are stored internally as integer multiples of 1/2,
so ``q`` itself sits at internal exponent 2 and ``q**(1/2)`` at exponent 1.
Coefficients are plain Python ints, so arithmetic never overflows.

>>> q = LaurentQ.q()
>>> print((1 + q) * (1 + q))
1 + 2*q + q^2
>>> print(LaurentQ.q_half(-1) + LaurentQ.q_half(1))
q^(-1/2) + q^(1/2)
>>> print((LaurentQ.q_half(-1) + LaurentQ.q_half(1)) * LaurentQ.q_half(1))
1 + q
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


class LaurentQ:
    """Sparse Laurent polynomial in q^(1/2) with exact coefficients.

    Coefficients are Python ints; the ring also tolerates exact Fractions
    (needed only when converting symmetric functions into the power-sum
    basis, which is a Q-basis, not a Z-basis), normalizing any integral
    Fraction back to int.  Everything the recursions produce stays integer.

    Immutable; canonical form (no zero coefficients) is enforced on
    construction, so equality and hashing are structural.
    """

    __slots__ = ("_c",)

    def __init__(self, coeffs=None):
        # coeffs maps *half-exponents* (int, counting powers of q^(1/2))
        # to nonzero coefficients
        c = {}
        if coeffs:
            for k, v in coeffs.items():
                if isinstance(v, Fraction) and v.denominator == 1:
                    v = int(v)
                if v:
                    c[int(k)] = v
        self._c = c

    # -- constructors ----------------------------------------------------

    @classmethod
    def zero(cls) -> "LaurentQ":
        return cls()

    @classmethod
    def one(cls) -> "LaurentQ":
        return cls({0: 1})

    @classmethod
    def integer(cls, c: int) -> "LaurentQ":
        return cls({0: c})

    @classmethod
    def q(cls, power: int = 1) -> "LaurentQ":
        """q raised to an integer power."""
        return cls({2 * power: 1})

    @classmethod
    def q_half(cls, half_power: int) -> "LaurentQ":
        """q raised to half_power/2."""
        return cls({half_power: 1})

    @classmethod
    def from_poly_coeffs(cls, coeffs) -> "LaurentQ":
        """Polynomial in q from a coefficient sequence, ascending from q^0."""
        return cls({2 * k: c for k, c in enumerate(coeffs)})

    # -- ring structure ---------------------------------------------------

    @staticmethod
    def _coerce(other):
        if isinstance(other, LaurentQ):
            return other
        if isinstance(other, (int, Fraction)):
            return LaurentQ({0: other})
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        c = dict(self._c)
        for k, v in other._c.items():
            c[k] = c.get(k, 0) + v
        return LaurentQ(c)

    __radd__ = __add__

    def __neg__(self):
        return LaurentQ({k: -v for k, v in self._c.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self._c, other._c
        if len(a) > len(b):
            a, b = b, a
        c = {}
        for k1, v1 in a.items():
            for k2, v2 in b.items():
                k = k1 + k2
                c[k] = c.get(k, 0) + v1 * v2
        return LaurentQ(c)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            # only unit monomials are invertible in this ring
            if len(self._c) != 1:
                raise ValueError("can only invert monomials")
            ((k, v),) = self._c.items()
            if v * v != 1:
                raise ValueError("can only invert unit monomials")
            return LaurentQ({k * n: v ** (n & 1)})
        result = LaurentQ.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._c == other._c

    def __hash__(self):
        return hash(frozenset(self._c.items()))

    def __bool__(self):
        return bool(self._c)

    # -- the bar involution -----------------------------------------------

    def bar(self) -> "LaurentQ":
        """The involution sending q^(1/2) to q^(-1/2)."""
        return LaurentQ({-k: v for k, v in self._c.items()})

    # -- inspection ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self._c

    def min_half_exponent(self):
        return min(self._c) if self._c else None

    def max_half_exponent(self):
        return max(self._c) if self._c else None

    def coefficient(self, half_exponent: int) -> int:
        return self._c.get(half_exponent, 0)

    def coefficient_q(self, power: int) -> int:
        """Coefficient of q**power (integer power)."""
        return self._c.get(2 * power, 0)

    def items(self):
        """(half_exponent, coefficient) pairs, sorted by exponent."""
        return sorted(self._c.items())

    def is_integer_powers(self) -> bool:
        return all(k % 2 == 0 for k in self._c)

    def at_q1(self) -> int:
        """Specialize q^(1/2) := 1."""
        return sum(self._c.values())

    def evaluate(self, q0) -> Fraction:
        """Exact value at q = q0; requires integer powers of q."""
        if not self.is_integer_powers():
            raise ValueError("half powers of q do not evaluate to a rational")
        q0 = Fraction(q0)
        return sum((Fraction(v) * q0 ** (k // 2) for k, v in self._c.items()),
                   Fraction(0))

    def shift(self, half_power: int) -> "LaurentQ":
        """Multiply by q^(half_power/2)."""
        return LaurentQ({k + half_power: v for k, v in self._c.items()})

    # -- polynomial shape reports -----------------------------------------

    def props(self) -> "PolyProps":
        """Degree bounds, nonnegativity, palindromicity, unimodality.

        The coefficient vector is read along the arithmetic progression of
        the support: step 1 in q (not q^(1/2)) when every exponent has the
        same parity, so that 1 + q counts as palindromic and unimodal.
        Zero is vacuously all three.
        """
        if not self._c:
            return PolyProps(None, None, True, True, True)
        lo, hi = min(self._c), max(self._c)
        step = 2 if all((k - lo) % 2 == 0 for k in self._c) else 1
        vec = [self._c.get(k, 0) for k in range(lo, hi + 1, step)]
        nonneg = all(v >= 0 for v in vec)
        palindromic = vec == vec[::-1]
        peak = vec.index(max(vec))
        rising = all(vec[i] <= vec[i + 1] for i in range(peak))
        falling = all(vec[i] >= vec[i + 1] for i in range(peak, len(vec) - 1))
        return PolyProps(lo, hi, nonneg, palindromic, rising and falling)

    # -- serialization -------------------------------------------------------

    def __str__(self):
        if not self._c:
            return "0"
        parts = []
        for k, v in self.items():
            if k == 0:
                term = str(abs(v))
            else:
                if k % 2 == 0:
                    e = k // 2
                    head = "q" if e == 1 else f"q^{e}" if e > 0 else f"q^({e})"
                else:
                    head = f"q^({k}/2)"
                term = head if abs(v) == 1 else f"{abs(v)}*{head}"
            if not parts:
                parts.append(term if v > 0 else f"-{term}")
            else:
                parts.append(f"+ {term}" if v > 0 else f"- {term}")
        return " ".join(parts)

    def __repr__(self):
        return f"LaurentQ({self._c!r})"

    def latex(self) -> str:
        if not self._c:
            return "0"
        parts = []
        for k, v in self.items():
            if k == 0:
                term = str(abs(v))
            else:
                num = f"q^{{{k // 2}}}" if k % 2 == 0 else f"q^{{{k}/2}}"
                num = "q" if k == 2 else num
                term = num if abs(v) == 1 else f"{abs(v)}{num}"
            if not parts:
                parts.append(term if v > 0 else f"-{term}")
            else:
                parts.append(f"+ {term}" if v > 0 else f"- {term}")
        return " ".join(parts)

    def to_json(self) -> dict:
        """Exponent -> coefficient map; keys are reduced fractions.

        Fraction coefficients serialize as 'num/den' strings.
        """
        out = {}
        for k, v in self.items():
            key = str(k // 2) if k % 2 == 0 else f"{k}/2"
            out[key] = v if isinstance(v, int) else str(v)
        return out

    @classmethod
    def from_json(cls, data: dict) -> "LaurentQ":
        c = {}
        for key, v in data.items():
            if isinstance(v, str):
                v = Fraction(v)
            if "/" in key:
                num, den = key.split("/")
                if int(den) != 2:
                    raise ValueError(f"bad exponent {key!r}")
                c[int(num)] = v
            else:
                c[2 * int(key)] = v
        return cls(c)

    @classmethod
    def parse(cls, text: str) -> "LaurentQ":
        """Inverse of str(); accepts e.g. '1 + q', '2*q^2 - q^(-1/2)'."""
        text = text.strip()
        if text == "0":
            return cls.zero()
        out = {}
        # normalize into signed terms
        text = text.replace("- ", "+ -").replace("+ ", "+")
        if text.startswith("-"):
            text = "-" + text[1:].lstrip()
        terms = [t.strip() for t in text.split("+") if t.strip()]
        for term in terms:
            sign = 1
            if term.startswith("-"):
                sign = -1
                term = term[1:].strip()
            if "*" in term:
                coeff_s, head = term.split("*")
                coeff = Fraction(coeff_s)
            elif term.startswith("q"):
                coeff, head = 1, term
            else:
                coeff, head = Fraction(term), None
            if head is None:
                k = 0
            elif head == "q":
                k = 2
            else:
                exp = head[2:]  # strip 'q^'
                exp = exp.strip("()")
                if "/" in exp:
                    num, den = exp.split("/")
                    if int(den) != 2:
                        raise ValueError(f"bad exponent in {term!r}")
                    k = int(num)
                else:
                    k = 2 * int(exp)
            out[k] = out.get(k, 0) + sign * coeff
        return cls(out)


@dataclass(frozen=True)
class PolyProps:
    """Shape report for a Laurent polynomial; exponents in half units."""
    min_half_exponent: int | None
    max_half_exponent: int | None
    nonnegative: bool
    palindromic: bool
    unimodal: bool


ZERO = LaurentQ.zero()
ONE = LaurentQ.one()
Q = LaurentQ.q()
ONE_PLUS_Q = ONE + Q


def q_integer(k: int) -> LaurentQ:
    """The q-integer [k]_q = 1 + q + ... + q^(k-1)."""
    return LaurentQ({2 * i: 1 for i in range(k)})


def q_factorial(k: int) -> LaurentQ:
    """[k]!_q = [1]_q [2]_q ... [k]_q."""
    out = LaurentQ.one()
    for i in range(1, k + 1):
        out = out * q_integer(i)
    return out
