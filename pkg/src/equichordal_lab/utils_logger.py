"""Provide centralized logging for the equichordal laboratory.

Every solver, checker and map routine logs through the single Loguru
logger configured here, so long symbolic runs and iteration sweeps leave
the same trail on the console and in a rotating log file.

Module Information:
    - Filename: utils_logger.py
    - Module: utils_logger
    - Location: src/equichordal_lab/

Key Concepts:
    - One configuration per process (idempotent init)
    - Log levels: DEBUG for per-order and per-iteration detail, INFO for milestones
    - File-based log persistence with rotation and retention
    - Project root discovery for predictable default paths
"""

import pathlib
import sys

from loguru import logger

_is_configured: bool = False
_log_file_path: pathlib.Path | None = None

LOG_FORMAT: str = "{time:YYYY-MM-DD HH:mm}:{level:<7} AT {file}:{line}: {message}"
DEFAULT_LOG_FILE_NAME: str = "equichordal.log"


ROOT_MARKERS: tuple[str, ...] = ("pyproject.toml", ".git")


def find_project_root(start: pathlib.Path | None = None) -> pathlib.Path:
    """Nearest directory at or above ``start`` holding one of ROOT_MARKERS.

    An installed package has no such ancestor; its own directory is used then.
    """
    origin = (start or pathlib.Path(__file__)).resolve()
    candidates = (d for d in (origin, *origin.parents) if any((d / m).exists() for m in ROOT_MARKERS))
    return next(candidates, origin.parent)


project_root = find_project_root()
DEFAULT_LOG_DIR: pathlib.Path = project_root / "logs"


def get_log_file_path() -> pathlib.Path:
    """Active log file once init_logger has run; the default location before that."""
    return _log_file_path or DEFAULT_LOG_DIR / DEFAULT_LOG_FILE_NAME


def init_logger(
    level: str = "INFO",
    *,
    log_dir: str | pathlib.Path = DEFAULT_LOG_DIR,
    log_file_name: str = DEFAULT_LOG_FILE_NAME,
) -> pathlib.Path:
    """Initialize the logger and return the log file path.

    The first call in a process installs a stderr sink and a rotating file
    sink; later calls leave the sinks alone and return the active file.

    Args:
        level: Logging level (e.g., "INFO", "DEBUG").
        log_dir: Directory where the log file will be written.
        log_file_name: File name for the log file.

    Returns:
        pathlib.Path: The resolved path to the log file.
    """
    global _is_configured, _log_file_path
    if _is_configured and _log_file_path is not None:
        return _log_file_path

    log_folder = pathlib.Path(log_dir).expanduser().resolve()
    log_folder.mkdir(parents=True, exist_ok=True)
    log_file = log_folder / log_file_name

    try:
        logger.remove()
        logger.add(sys.stderr, level=level, format=LOG_FORMAT)
        logger.add(
            log_file,
            level=level,
            enqueue=True,
            backtrace=True,
            diagnose=False,
            rotation="10 MB",
            retention="7 days",
            encoding="utf-8",
            format=LOG_FORMAT,
        )
        logger.info(f"Logging to file: {log_file}")
        _is_configured = True
        _log_file_path = log_file
    except Exception as e:
        logger.error(f"Error configuring logger to write to file: {e}")

    return log_file


def main() -> int:
    """Configure logging once and report where the log file lives."""
    log_file = init_logger()
    logger.info(f"View the log output at {log_file}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())

__all__ = ["find_project_root", "get_log_file_path", "init_logger", "logger", "project_root"]
