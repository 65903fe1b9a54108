"""Base fields and their scalars.

Scalars are plain Python values: `fractions.Fraction` over the rationals and
`int` residues in `[0, p)` over a prime field. `FieldSpec` owns the arithmetic
normalization so polynomial and matrix code stays field-agnostic.
"""

import re
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Union

from lcreg.errors import FieldError

Scalar = Union[Fraction, int]

MAX_MODULUS = 2**31

CHAR_P_CAVEAT = "char-p: Lefschetz theorems assume char 0"

_PRIME_FIELD_PATTERN = re.compile(r"^\s*(?:GF|F|Z/)?\(?\s*(\d+)\s*\)?\s*$", re.IGNORECASE)


class FieldKind(str, Enum):
    """Enum defining the supported base fields."""

    rationals = "QQ"
    prime = "GF"


def is_prime(p: int) -> bool:
    """Checks primality by trial division (moduli stay below 2^31).

    Examples:
        >>> is_prime(32003)
        True
        >>> is_prime(32001)
        False
    """
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2

    divisor = 3
    while divisor * divisor <= p:
        if p % divisor == 0:
            return False
        divisor += 2

    return True


@dataclass(frozen=True)
class FieldSpec:
    kind: FieldKind = FieldKind.rationals
    modulus: int | None = None

    def __post_init__(self):
        if self.kind == FieldKind.rationals:
            if self.modulus is not None:
                raise FieldError("the rational field carries no modulus")
            return

        if self.modulus is None:
            raise FieldError("a prime field needs a modulus")
        if not 2 < self.modulus < MAX_MODULUS:
            raise FieldError(f"modulus must satisfy 2 < p < 2^31, got {self.modulus}")
        if not is_prime(self.modulus):
            raise FieldError(f"modulus {self.modulus} is not prime")

    @classmethod
    def rationals(cls) -> "FieldSpec":
        return cls(FieldKind.rationals)

    @classmethod
    def prime(cls, modulus: int) -> "FieldSpec":
        return cls(FieldKind.prime, modulus)

    @classmethod
    def parse(cls, text: str) -> "FieldSpec":
        """Reads a field from its command-line spelling.

        Accepts `QQ`, `Q` or `rational(s)` for the rationals and `GF(p)`, `Fp`-style
        or a bare prime `p` for a prime field.

        Examples:
            >>> FieldSpec.parse("QQ").label
            'QQ'
            >>> FieldSpec.parse("GF(32003)").label
            'GF(32003)'
            >>> FieldSpec.parse("7").modulus
            7
        """
        normalized = text.strip().lower()
        if normalized in {"q", "qq", "rational", "rationals"}:
            return cls.rationals()

        match = _PRIME_FIELD_PATTERN.match(text)
        if match is None:
            raise FieldError(f"unknown field {text!r}; use QQ or GF(p)")

        return cls.prime(int(match.group(1)))

    @property
    def is_rational(self) -> bool:
        return self.kind == FieldKind.rationals

    @property
    def characteristic(self) -> int:
        return 0 if self.modulus is None else self.modulus

    @property
    def label(self) -> str:
        return "QQ" if self.is_rational else f"GF({self.modulus})"

    @property
    def caveat(self) -> str | None:
        """Report caveat attached to every result computed over this field."""
        return None if self.is_rational else CHAR_P_CAVEAT

    def __str__(self) -> str:
        return self.label

    # arithmetic -------------------------------------------------------------

    def reduce(self, value: Scalar) -> Scalar:
        """Brings the result of raw Python arithmetic back into canonical form."""
        if self.modulus is None:
            return value if isinstance(value, Fraction) else Fraction(value)
        return value % self.modulus

    def element(self, value: int | Fraction) -> Scalar:
        """Maps an integer or rational number into the field.

        Examples:
            >>> FieldSpec.prime(7).element(Fraction(1, 2))
            4
            >>> FieldSpec.rationals().element(3)
            Fraction(3, 1)
        """
        if self.modulus is None:
            return Fraction(value)

        value = Fraction(value)
        if value.denominator % self.modulus == 0:
            raise FieldError(f"{value} has no image in {self.label}")

        return (value.numerator * pow(value.denominator, -1, self.modulus)) % self.modulus

    def inverse(self, value: Scalar) -> Scalar:
        if value == 0:
            raise ZeroDivisionError("zero has no inverse")
        if self.modulus is None:
            return 1 / Fraction(value)
        return pow(value, -1, self.modulus)

    def zero(self) -> Scalar:
        return self.reduce(0)

    def one(self) -> Scalar:
        return self.reduce(1)

    def format(self, value: Scalar) -> str:
        """Prints a scalar; rationals as `a` or `a/b`, residues as integers."""
        if isinstance(value, Fraction) and value.denominator == 1:
            return str(value.numerator)
        return str(value)
