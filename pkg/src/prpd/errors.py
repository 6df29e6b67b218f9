"""Exception types shared across the package."""


class PrpdError(Exception):
    """Base class for every error raised by this package."""


class InputError(PrpdError):
    """Malformed external input: edge lists, OFF meshes, manifests, diagram files."""


class DomainError(PrpdError):
    """Structurally valid input outside an operation's domain (empty graph, bad config, ...)."""
