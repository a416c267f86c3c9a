"""Configuration and path management for the EcaSeq toolkit"""
import os
from pathlib import Path


def _default_base_path() -> Path:
    """Resolve the default base directory

    ECASEQ_HOME wins, then LOCALAPPDATA (Windows), then the user's home directory.
    """
    override = os.getenv("ECASEQ_HOME")
    if override:
        return Path(override)
    local_appdata = os.getenv("LOCALAPPDATA")
    if local_appdata:
        return Path(local_appdata) / "EcaSeq"
    return Path.home() / ".ecaseq"


class EcaSeqPaths:
    """Handles path management for logs and exported artifacts"""

    def __init__(self, base_path: Path | str | None = None, create: bool = True):
        self._base_path: Path = Path(base_path) if base_path is not None else _default_base_path()
        self._logs_path: Path = self._base_path / "Logs"
        self._exports_path: Path = self._base_path / "Exports"

        if create:
            self.ensure_all_directories()

    #region Property getters and setters
    @property
    def base_path(self) -> Path:
        """Get the base directory path"""
        return self._base_path

    @property
    def logs_path(self) -> Path:
        """Get the logs directory path"""
        return self._logs_path

    @logs_path.setter
    def logs_path(self, path: Path | str) -> None:
        """Set the logs directory path"""
        self._logs_path = Path(path)
        self.ensure_directory(self._logs_path)

    @property
    def exports_path(self) -> Path:
        """Get the directory where classification tables and diagrams are written"""
        return self._exports_path

    @exports_path.setter
    def exports_path(self, path: Path | str) -> None:
        """Set the exports directory path"""
        self._exports_path = Path(path)
        self.ensure_directory(self._exports_path)
    #endregion

    def ensure_directory(self, path: Path) -> None:
        """Ensure a directory exists, creating it if necessary

        Args:
            path: The directory path to ensure exists
        """
        try:
            path.mkdir(parents=True, exist_ok=True)
        except Exception as e:
            raise OSError(f"Failed to create directory {path}: {str(e)}") from e

    def ensure_all_directories(self) -> None:
        """Ensure all required directories exist"""
        for path in [
            self.base_path,
            self.logs_path,
            self.exports_path,
        ]:
            self.ensure_directory(path)

    def reset_to_defaults(self) -> None:
        """Reset all paths to their default values and ensure directories exist"""
        self._base_path = _default_base_path()
        self._logs_path = self._base_path / "Logs"
        self._exports_path = self._base_path / "Exports"
        self.ensure_all_directories()
