from .checks import SCHEMA, SWEEPS, CheckReport, check

__all__ = ["SCHEMA", "SWEEPS", "CheckReport", "check"]
