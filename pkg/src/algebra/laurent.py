"""
Laurent polynomials over F2 - кольцо коэффициентов F2[t, t^-1].

Многочлен хранится как множество показателей с ненулевым коэффициентом.
Внутри арифметика идёт через битовые маски Python int (carry-less умножение
и деление столбиком), снаружи значение неизменяемо и хешируемо.
"""

import re
from dataclasses import dataclass
from typing import FrozenSet, Iterable, Tuple

from ..errors import UsageError


def _clmul(a: int, b: int) -> int:
    """Умножение многочленов над F2, закодированных битами"""
    result = 0
    while b:
        if b & 1:
            result ^= a
        a <<= 1
        b >>= 1
    return result


def _poly_divmod(a: int, b: int) -> Tuple[int, int]:
    """Деление столбиком в F2[t]; b != 0"""
    quotient = 0
    db = b.bit_length()
    while a and a.bit_length() >= db:
        shift = a.bit_length() - db
        quotient ^= 1 << shift
        a ^= b << shift
    return quotient, a


@dataclass(frozen=True)
class LaurentPoly:
    """Элемент F2[t, t^-1]; support - показатели с коэффициентом 1"""

    support: FrozenSet[int] = frozenset()

    # ------------------------------------------------------------
    # Конструкторы
    # ------------------------------------------------------------

    @classmethod
    def from_exponents(cls, exponents: Iterable[int]) -> "LaurentPoly":
        """Повторяющиеся показатели сокращаются по модулю 2"""
        support = set()
        for e in exponents:
            support ^= {int(e)}
        return cls(frozenset(support))

    @classmethod
    def monomial(cls, exponent: int = 0) -> "LaurentPoly":
        return cls(frozenset({exponent}))

    @classmethod
    def _from_bits(cls, low: int, bits: int) -> "LaurentPoly":
        support = []
        k = 0
        while bits:
            if bits & 1:
                support.append(low + k)
            bits >>= 1
            k += 1
        return cls(frozenset(support))

    def _to_bits(self) -> Tuple[int, int]:
        low = self.low
        bits = 0
        for e in self.support:
            bits |= 1 << (e - low)
        return low, bits

    @classmethod
    def parse(cls, text: str) -> "LaurentPoly":
        """
        Разбирает строки вида "1+t^2", "t^-1+t", "0".
        Коэффициент 1 - единственный ненулевой в F2, знак "-" равен "+".
        """
        cleaned = text.replace(" ", "").replace("−", "-").replace("-t", "+t")
        if cleaned in ("", "0"):
            return cls()
        exponents = []
        for term in filter(None, re.split(r"\+(?![^()]*\))", cleaned)):
            term = term.strip("()")
            if term == "1":
                exponents.append(0)
                continue
            match = re.fullmatch(r"t(?:\^\(?(-?\d+)\)?)?", term)
            if match is None:
                raise UsageError(f"cannot parse Laurent term '{term}' in '{text}'")
            exponents.append(int(match.group(1)) if match.group(1) else 1)
        return cls.from_exponents(exponents)

    # ------------------------------------------------------------
    # Свойства
    # ------------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.support

    def __bool__(self) -> bool:
        return bool(self.support)

    def is_unit(self) -> bool:
        """Единицы кольца - ровно мономы t^k"""
        return len(self.support) == 1

    @property
    def low(self) -> int:
        return min(self.support) if self.support else 0

    @property
    def high(self) -> int:
        return max(self.support) if self.support else 0

    @property
    def width(self) -> int:
        """Евклидова норма: max - min показатель"""
        return self.high - self.low if self.support else -1

    # ------------------------------------------------------------
    # Арифметика
    # ------------------------------------------------------------

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        return LaurentPoly(self.support ^ other.support)

    __sub__ = __add__

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        if not self.support or not other.support:
            return ZERO
        low_a, bits_a = self._to_bits()
        low_b, bits_b = other._to_bits()
        return LaurentPoly._from_bits(low_a + low_b, _clmul(bits_a, bits_b))

    def shift(self, k: int) -> "LaurentPoly":
        """Умножение на t^k"""
        return LaurentPoly(frozenset(e + k for e in self.support))

    def normalized(self) -> "LaurentPoly":
        """Сдвиг к нулевому младшему показателю (ассоциированный элемент)"""
        return self.shift(-self.low) if self.support else self

    def unit_inverse(self) -> "LaurentPoly":
        if not self.is_unit():
            raise ArithmeticError(f"{self} is not a unit of F2[t,t^-1]")
        return LaurentPoly.monomial(-self.low)

    def __divmod__(self, other: "LaurentPoly") -> Tuple["LaurentPoly", "LaurentPoly"]:
        """
        Деление с остатком: self = q * other + r, где r = 0
        или width(r) < width(other).
        """
        if not other.support:
            raise ZeroDivisionError("division by zero Laurent polynomial")
        if not self.support:
            return ZERO, ZERO
        low_a, bits_a = self._to_bits()
        low_b, bits_b = other._to_bits()
        q_bits, r_bits = _poly_divmod(bits_a, bits_b)
        return LaurentPoly._from_bits(low_a - low_b, q_bits), LaurentPoly._from_bits(low_a, r_bits)

    def __floordiv__(self, other: "LaurentPoly") -> "LaurentPoly":
        return divmod(self, other)[0]

    def __mod__(self, other: "LaurentPoly") -> "LaurentPoly":
        return divmod(self, other)[1]

    def divides(self, other: "LaurentPoly") -> bool:
        """self | other"""
        if not self.support:
            return not other.support
        return not (other % self).support

    def gcd(self, other: "LaurentPoly") -> "LaurentPoly":
        a, b = self, other
        while b.support:
            a, b = b, a % b
        return a.normalized()

    def evaluate_at_one(self) -> int:
        """Подстановка t = 1: чётность числа мономов"""
        return len(self.support) % 2

    # ------------------------------------------------------------
    # Представление
    # ------------------------------------------------------------

    def exponents(self) -> Tuple[int, ...]:
        return tuple(sorted(self.support))

    def __str__(self) -> str:
        if not self.support:
            return "0"
        terms = []
        for e in sorted(self.support):
            if e == 0:
                terms.append("1")
            elif e == 1:
                terms.append("t")
            else:
                terms.append(f"t^{e}")
        return "+".join(terms)

    def __repr__(self) -> str:
        return f"LaurentPoly({self})"


ZERO = LaurentPoly()
ONE = LaurentPoly.monomial(0)
T = LaurentPoly.monomial(1)
ONE_PLUS_T = ONE + T
