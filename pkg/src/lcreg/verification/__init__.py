from .params import SuiteParams
from .suites import Suite, verify_suite

__all__ = (
    "SuiteParams",
    "Suite",
    "verify_suite",
)
