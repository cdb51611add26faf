"""Exception types shared across the package."""


class CanonlabError(Exception):
    """Base class for canonlab-specific failures."""


class SizeCapError(CanonlabError, ValueError):
    """An enumeration was refused because it exceeds the configured size cap."""


class PosetFormatError(CanonlabError, ValueError):
    """A poset description is malformed: bad schema, cyclic or redundant covers."""
