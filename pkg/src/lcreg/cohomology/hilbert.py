from dataclasses import dataclass


@dataclass(frozen=True)
class HilbertFunction:
    """Per-degree K-dimensions of a graded P_0-module, scanned from `start` upward.

    For a finite-length module the scan stopped at the first zero; `values`
    holds the dimensions up to the last nonzero one and every later degree is
    zero. Otherwise `values` covers the window `start..cap`.

    Attributes:
        start (int): Degree of `values[0]`.
        values (tuple[int, ...]): Dimensions in consecutive degrees.
        finite_length (bool): Whether all degrees after the window vanish.
    """

    values: tuple[int, ...]
    finite_length: bool
    start: int = 0

    @classmethod
    def from_scan(cls, values: list[int], finite_length: bool, start: int = 0):
        """Trims trailing zeros of a finite-length scan.

        Examples:
            >>> HilbertFunction.from_scan([2, 1, 0], True).values
            (2, 1)
        """
        values = list(values)
        if finite_length:
            while values and values[-1] == 0:
                values.pop()
        return cls(values=tuple(values), finite_length=finite_length, start=start)

    @property
    def end(self) -> int:
        """Last degree covered by `values`."""
        return self.start + len(self.values) - 1

    def value(self, degree: int) -> int:
        """Dimension in `degree`.

        Raises:
            ValueError: If `degree` is past the window of a module that is not of finite length.
        """  # noqa: E501
        if degree < self.start:
            return 0
        if degree > self.end:
            if self.finite_length:
                return 0
            raise ValueError(f"degree {degree} lies beyond the computed window ending at {self.end}")
        return self.values[degree - self.start]

    @property
    def regularity(self) -> int | None:
        """Last degree with a nonzero value; `None` when not of finite length or zero."""
        if not self.finite_length:
            return None
        nonzero = [self.start + i for i, value in enumerate(self.values) if value]
        return nonzero[-1] if nonzero else None

    @property
    def length(self) -> int | None:
        return sum(self.values) if self.finite_length else None

    def dominates(self, other: "HilbertFunction") -> int | None:
        """Compares coefficientwise on the union of both windows.

        Returns:
            The first degree where `self` is smaller than `other`, or `None` when
            `self >= other` everywhere the comparison is defined.

        Examples:
            >>> HilbertFunction((3, 2, 1), True).dominates(HilbertFunction((2, 1), True))
            >>> HilbertFunction((1,), True).dominates(HilbertFunction((2, 1), True))
            0
        """
        low = min(self.start, other.start)
        high = max(self.end, other.end)
        if not self.finite_length:
            high = min(high, self.end)
        if not other.finite_length:
            high = min(high, other.end)

        for degree in range(low, high + 1):
            if self.value(degree) < other.value(degree):
                return degree
        return None

    def series(self) -> str:
        """Hilbert series as a polynomial in `t` (truncated when not of finite length)."""
        terms = []
        for offset, value in enumerate(self.values):
            if not value:
                continue
            degree = self.start + offset
            power = "" if degree == 0 else ("t" if degree == 1 else f"t^{degree}")
            terms.append(f"{value}*{power}" if power and value != 1 else (power or str(value)))
        text = " + ".join(terms) if terms else "0"
        return text if self.finite_length else f"{text} + ..."
