"""Reports emitted by the CLI, as JSON or CSV.

The JSON form sorts its keys and keeps wall-clock timings under `timing`, so
two runs of the same configuration differ only there.
"""

import hashlib
import io
import json
from dataclasses import dataclass, field
from typing import Any

import pandas as pd

from lcreg.checks import Check, all_passed
from lcreg.cohomology.components import CohomologyReport
from lcreg.cohomology.hilbert import HilbertFunction

CSV_COLUMNS = ["config-hash", "instance", "j", "regularity", "length", "hilbert", "verdict"]


@dataclass(frozen=True)
class ResultEntry:
    """Values and verdicts for one j of one instance.

    Attributes:
        j (int): Component index.
        instance (str): Label of the polynomial or grid point the entry belongs to.
        hilbert (tuple[int, ...]): Hilbert function of H^n(R)_j from degree 0.
        regularity (int | None): Regularity of H^n(R)_j.
        length (int | None): Total dimension of H^n(R)_j.
        sub_first_nonzero (int | None): First nonzero degree of H^{n-1}(R)_j.
        sub_window (tuple[int, int] | None): Degrees searched for `sub_first_nonzero`; when it is
            `None` the JSON form flags `sub_beyond_window`.
        checks (tuple[Check, ...]): Verdicts.
        extra (dict[str, Any]): Command-specific values (ideals, Betti numbers, ...).
    """  # noqa: E501

    j: int
    instance: str = ""
    hilbert: tuple[int, ...] = ()
    regularity: int | None = None
    length: int | None = None
    sub_first_nonzero: int | None = None
    sub_window: tuple[int, int] | None = None
    checks: tuple[Check, ...] = ()
    extra: dict[str, Any] = field(default_factory=dict)

    @classmethod
    def from_hilbert(
        cls,
        j: int,
        hilbert: HilbertFunction,
        instance: str = "",
        sub_first_nonzero: int | None = None,
        checks: tuple[Check, ...] | list[Check] = (),
        extra: dict[str, Any] | None = None,
        sub_window: tuple[int, int] | None = None,
    ) -> "ResultEntry":
        return cls(
            j=j,
            instance=instance,
            hilbert=hilbert.values,
            regularity=hilbert.regularity,
            length=hilbert.length,
            sub_first_nonzero=sub_first_nonzero,
            sub_window=sub_window,
            checks=tuple(checks),
            extra=dict(extra or {}),
        )

    @classmethod
    def from_report(
        cls,
        report: CohomologyReport,
        instance: str = "",
        checks: tuple[Check, ...] | list[Check] = (),
        extra: dict[str, Any] | None = None,
    ) -> "ResultEntry":
        return cls.from_hilbert(
            report.j,
            report.top,
            instance=instance,
            sub_first_nonzero=report.first_nonzero_sub,
            checks=checks,
            extra=extra,
            sub_window=(report.sub.start, report.sub.end),
        )

    @property
    def passed(self) -> bool:
        return all_passed(list(self.checks))

    def to_dict(self) -> dict[str, Any]:
        data = {
            "j": self.j,
            "instance": self.instance,
            "hilbert": list(self.hilbert),
            "regularity": self.regularity,
            "length": self.length,
            "sub_first_nonzero": self.sub_first_nonzero,
            "checks": [check.to_dict() for check in self.checks],
        }
        if self.sub_window is not None:
            data["sub_window"] = list(self.sub_window)
            data["sub_beyond_window"] = self.sub_first_nonzero is None
        data.update(self.extra)
        return data


@dataclass
class Report:
    config: dict[str, Any]
    results: list[ResultEntry] = field(default_factory=list)
    caveats: list[str] = field(default_factory=list)
    timing: dict[str, float] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(entry.passed for entry in self.results)

    @property
    def failures(self) -> list[tuple[ResultEntry, Check]]:
        return [
            (entry, check)
            for entry in self.results
            for check in entry.checks
            if not check.passed
        ]

    @property
    def config_hash(self) -> str:
        """First 12 hex digits of the SHA-256 of the canonical config echo.

        Examples:
            >>> Report(config={"a": 1}).config_hash == Report(config={"a": 1}).config_hash
            True
        """
        canonical = json.dumps(self.config, sort_keys=True, separators=(",", ":"))
        return hashlib.sha256(canonical.encode()).hexdigest()[:12]

    def to_dict(self, include_timing: bool = True) -> dict[str, Any]:
        data = {
            "config": self.config,
            "results": [entry.to_dict() for entry in self.results],
            "caveats": sorted(set(self.caveats)),
        }
        if include_timing:
            data["timing"] = self.timing
        return data

    def to_json(self, include_timing: bool = True) -> str:
        return json.dumps(self.to_dict(include_timing), sort_keys=True, indent=2)

    def to_dataframe(self) -> pd.DataFrame:
        """One row per result entry, with the columns of `CSV_COLUMNS`."""
        rows = [
            {
                "config-hash": self.config_hash,
                "instance": entry.instance,
                "j": entry.j,
                "regularity": entry.regularity,
                "length": entry.length,
                "hilbert": ";".join(str(value) for value in entry.hilbert),
                "verdict": "pass" if entry.passed else "fail",
            }
            for entry in self.results
        ]
        df = pd.DataFrame(rows, columns=CSV_COLUMNS)
        df["regularity"] = df["regularity"].astype("Int64")
        df["length"] = df["length"].astype("Int64")
        return df

    def to_csv(self) -> str:
        buffer = io.StringIO()
        self.to_dataframe().to_csv(buffer, index=False)
        return buffer.getvalue()
