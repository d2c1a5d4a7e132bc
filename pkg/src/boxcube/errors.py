class BoxCubeError(Exception):
    pass


class InvalidArgument(BoxCubeError, ValueError):
    pass


class SizeLimitExceeded(BoxCubeError, RuntimeError):
    """Raised by the brute-force routines when n is above the configured limit."""


class FormatError(BoxCubeError, ValueError):
    """A representation or graph file could not be parsed.

    ``where`` names the offending field (e.g. ``intervals['3']``) or line.
    """

    def __init__(self, message, where=None):
        self.where = where
        super().__init__(f"{where}: {message}" if where else message)
