class CoreException(Exception):
    """Base exception for all klein-pilot exceptions."""

    pass
