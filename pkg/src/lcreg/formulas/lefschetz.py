"""Closed forms for the hypersurfaces f = (sum_i lambda_i x_i y_i)^r with m = n.

With `k = -n - j`:

    reg H^n(R)_j     = k + r - 1
    reg H^{n-1}(R)_j = k + r + 1
    dim H^n(R)_{j,i} = C(n+i-1, i) C(-j-1, k)                                   for i < r
                     = C(n+i-1, i) C(-j-1, k) - C(n+i-r-1, i-r) C(-j+r-1, k+r)  for r <= i <= k+r-1
                     = 0                                                          for i > k+r-1
"""  # noqa: E501

from math import comb

from lcreg.errors import ParameterError


def check_parameters(n: int, r: int, j: int):
    if n < 2:
        raise ParameterError(f"need n >= 2, got n={n}")
    if r < 1:
        raise ParameterError(f"need r >= 1, got r={r}")
    if j > -n:
        raise ParameterError(f"need j <= -n = {-n}, got j={j}")


def lefschetz_regularity(n: int, r: int, j: int) -> int:
    """Regularity of H^n(R)_j.

    Examples:
        >>> lefschetz_regularity(2, 1, -3), lefschetz_regularity(2, 1, -2), lefschetz_regularity(3, 2, -5)
        (1, 0, 3)
    """  # noqa: E501
    check_parameters(n, r, j)
    return -n - j + r - 1


def lefschetz_hilbert(n: int, r: int, j: int, i: int) -> int:
    """Dimension of H^n(R)_j in x-degree `i`.

    Examples:
        >>> [lefschetz_hilbert(2, 1, -3, i) for i in range(3)]
        [2, 1, 0]
        >>> [lefschetz_hilbert(2, 2, -3, i) for i in range(4)]
        [2, 4, 2, 0]
    """
    check_parameters(n, r, j)
    k = -n - j
    if i < 0 or i > k + r - 1:
        return 0

    value = comb(n + i - 1, i) * comb(-j - 1, k)
    if i >= r:
        value -= comb(n + i - r - 1, i - r) * comb(-j + r - 1, k + r)

    return value


def sub_regularity(n: int, r: int, j: int) -> int:
    """Regularity of H^{n-1}(R)_j, equal to its first nonzero degree.

    Examples:
        >>> sub_regularity(2, 1, -3), sub_regularity(2, 2, -3), sub_regularity(3, 1, -3)
        (3, 4, 1)
    """
    check_parameters(n, r, j)
    return -n - j + r + 1
