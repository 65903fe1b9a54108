from dataclasses import dataclass


@dataclass(frozen=True)
class Check:
    """One verdict of a verification step.

    Attributes:
        name (str): Short identifier, e.g. `regularity` or `monotonicity j=-4/-3`.
        passed (bool): Whether the compared quantities agree.
        detail (str): Human-readable comparison, e.g. `oracle 3 == formula 3`.
    """

    name: str
    passed: bool
    detail: str = ""

    def to_dict(self) -> dict:
        return {"name": self.name, "pass": self.passed, "detail": self.detail}


def compare(name: str, oracle, formula) -> Check:
    """Equality check between an oracle value and a closed-form value."""
    passed = oracle == formula
    relation = "==" if passed else "!="
    return Check(name=name, passed=passed, detail=f"oracle {oracle} {relation} formula {formula}")


def all_passed(checks: list[Check]) -> bool:
    return all(check.passed for check in checks)
