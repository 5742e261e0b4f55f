class FasaError(Exception):
    """Base class for all toolkit errors."""


class ConfigError(FasaError):
    """Invalid configuration (bad thresholds, conflicting flags)."""


class IngestError(FasaError):
    """Transcript or hypothesis input could not be loaded."""


class BackendError(FasaError):
    """External ASR backend command failed."""

    def __init__(self, message, exit_code=None, stderr=None):
        super().__init__(message)
        self.exit_code = exit_code
        self.stderr = stderr


class AudioError(FasaError):
    """Bad audio data or clip span."""
