import os

from dotenv import find_dotenv, load_dotenv

load_dotenv(find_dotenv(usecwd=True), override=False)


def _read_threads(raw: str | None) -> int:
    if raw is None or raw.strip() == "":
        return 1

    try:
        threads = int(raw)
    except ValueError:
        raise RuntimeError(
            f"LCREG_THREADS must be a positive integer, got {raw!r}"
        ) from None

    if threads < 1:
        raise RuntimeError(f"LCREG_THREADS must be a positive integer, got {raw!r}")

    return threads


LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")


def _read_log_level(raw: str | None) -> str:
    level = (raw or "WARNING").strip().upper()
    if level not in LOG_LEVELS:
        raise RuntimeError(f"LCREG_LOG_LEVEL must be one of {', '.join(LOG_LEVELS)}, got {raw!r}")
    return level


LCREG_THREADS = _read_threads(os.environ.get("LCREG_THREADS"))
LCREG_LOG_LEVEL = _read_log_level(os.environ.get("LCREG_LOG_LEVEL"))
