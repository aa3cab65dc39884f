"""Exception taxonomy shared across the package."""


class CubewalkError(Exception):
    """Base class for all package errors."""


class UsageError(CubewalkError):
    """Inputs outside a function's domain (unknown letters, wrong family)."""


class PreconditionError(CubewalkError):
    """A documented operation precondition was violated."""


class ResourceCapError(CubewalkError):
    """A resource cap (ball radius, trials x steps) was exceeded without override."""


class ConfigError(CubewalkError):
    """Malformed experiment configuration; maps to CLI exit code 2."""


class ProxyInstability(CubewalkError):
    """Boundary-proxy too shallow: retry with a deeper proxy."""
