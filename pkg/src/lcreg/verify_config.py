from dataclasses import asdict, dataclass
from pathlib import Path
from typing import List

import tomli
import tomli_w
from dacite import from_dict


@dataclass(frozen=True)
class LefschetzGrid:
    n_values: List[int]
    r_values: List[int]
    j_depth: int
    lambdas: List[int]


@dataclass(frozen=True)
class RandomGrid:
    instances: int
    prime: int
    n_values: List[int]
    bidegrees: List[List[int]]
    j_depth: int
    attempts: int


@dataclass(frozen=True)
class MacaulayGrid:
    n_values: List[int]
    j_depth: int


@dataclass(frozen=True)
class BoundsGrid:
    generic_n: int
    generic_d: int
    generic_j_lo: int
    lefschetz_n: int
    lefschetz_j_lo: int


@dataclass(frozen=True)
class DualityGrid:
    n: int
    generic_d: int
    j_depth: int
    degree_window: int


@dataclass(frozen=True)
class VerifyConfig:
    """Desk-scale grids of the verification suites.

    An empty `lambdas` list stands for `(1, ..., 1)`.
    """

    cap: int
    lefschetz: LefschetzGrid
    monotonicity: RandomGrid
    macaulay: MacaulayGrid
    bounds: BoundsGrid
    duality: DualityGrid

    @classmethod
    def from_toml(
        cls,
        path: Path,
    ) -> "VerifyConfig":
        with open(path, "rb") as f:
            settings_dict = tomli.load(f)

        return from_dict(VerifyConfig, settings_dict)

    def to_toml(
        self,
        path: Path,
    ) -> None:
        base_config = asdict(self)

        with open(path, "wb") as f:
            tomli_w.dump(base_config, f)

    def to_dict(self) -> dict:
        return asdict(self)

    @classmethod
    def create_default(cls):
        lefschetz = LefschetzGrid(
            n_values=[2, 3],
            r_values=[1, 2, 3],
            j_depth=5,
            lambdas=[],
        )

        monotonicity = RandomGrid(
            instances=20,
            prime=32003,
            n_values=[2, 3],
            bidegrees=[[1, 1], [2, 1]],
            j_depth=4,
            attempts=20,
        )

        macaulay = MacaulayGrid(
            n_values=[2, 3],
            j_depth=3,
        )

        bounds = BoundsGrid(
            generic_n=2,
            generic_d=2,
            generic_j_lo=-6,
            lefschetz_n=2,
            lefschetz_j_lo=-5,
        )

        duality = DualityGrid(
            n=2,
            generic_d=2,
            j_depth=2,
            degree_window=3,
        )

        return VerifyConfig(
            cap=60,
            lefschetz=lefschetz,
            monotonicity=monotonicity,
            macaulay=macaulay,
            bounds=bounds,
            duality=duality,
        )
