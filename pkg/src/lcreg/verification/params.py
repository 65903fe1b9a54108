from dataclasses import dataclass

from lcreg.algebra.field import FieldSpec
from lcreg.checks import Check
from lcreg.cohomology.components import CohomologyReport
from lcreg.errors import ParameterError
from lcreg.presentation.presentation import Presentation
from lcreg.verify_config import VerifyConfig


@dataclass(frozen=True)
class SuiteParams:
    """Grid of a verification run, with command-line overrides.

    Attributes:
        config (VerifyConfig): Grids read from `verify.toml` or the defaults.
        seed (int): Seed of the pseudo-random instances.
        n (int | None): Restricts every grid to this number of y-variables.
        r (int | None): Restricts the Lefschetz grid to this power.
        j_range (tuple[int, int] | None): Replaces the j window of every grid (clipped to `j <= -n`).
        lambdas (tuple[int, ...] | None): Coefficients of the Lefschetz form.
        field (FieldSpec): Field of the deterministic suites.
    """  # noqa: E501

    config: VerifyConfig
    seed: int = 0
    n: int | None = None
    r: int | None = None
    j_range: tuple[int, int] | None = None
    lambdas: tuple[int, ...] | None = None
    field: FieldSpec = FieldSpec.rationals()

    def n_values(self, grid_values: list[int]) -> list[int]:
        return [self.n] if self.n is not None else list(grid_values)

    def j_values(self, n: int, depth: int) -> list[int]:
        """`-n-depth..-n`, or the override range clipped to `j <= -n`.

        Examples:
            >>> from lcreg.verify_config import VerifyConfig
            >>> params = SuiteParams(VerifyConfig.create_default())
            >>> params.j_values(2, 3)
            [-5, -4, -3, -2]
            >>> SuiteParams(VerifyConfig.create_default(), j_range=(-4, -1)).j_values(2, 3)
            [-4, -3, -2]
        """
        if self.j_range is None:
            return list(range(-n - depth, -n + 1))

        lo, hi = self.j_range
        return [j for j in range(lo, hi + 1) if j <= -n]

    def lefschetz_lambdas(self, n: int) -> tuple[int, ...] | None:
        """Coefficients of `sum lambda_i x_i y_i`; `None` for all ones."""
        lambdas = self.lambdas
        if lambdas is None and self.config.lefschetz.lambdas:
            lambdas = tuple(self.config.lefschetz.lambdas)
        if lambdas is None:
            return None

        if len(lambdas) != n:
            raise ParameterError(f"expected {n} lambda values for n={n}, got {len(lambdas)}")
        if any(value == 0 for value in lambdas):
            raise ParameterError(f"lambda values must be nonzero, got {list(lambdas)}")

        return tuple(lambdas)


def ledger_check(report: CohomologyReport, presentation: Presentation) -> Check:
    violations = report.ledger_violations(presentation)
    detail = (
        f"sub - cols + rows - top = 0 in degrees 0..{len(report.ledger) - 1}"
        if not violations
        else f"violated in degrees {violations}"
    )
    return Check(f"exactness ledger j={report.j}", not violations, detail)
