"""Exception taxonomy shared by all tabdyn modules.

Every failure mode that callers are expected to distinguish gets its own
class; all of them derive from TabdynError so blanket handling stays easy.
"""


class TabdynError(Exception):
    """Base class for all tabdyn errors."""


class NotWeaklyDecreasing(TabdynError, ValueError):
    """Row lengths increase somewhere, so they do not form a partition."""


class NonPositiveRow(TabdynError, ValueError):
    """A row length is zero or negative."""


class NotACover(TabdynError, ValueError):
    """Two diagrams do not differ by exactly one added box."""


class DuplicateEntry(TabdynError, ValueError):
    """An insertion value collides with one already present."""


class EmptyInput(TabdynError, ValueError):
    """An operation that needs at least one input value got none."""


class EmptyTableau(TabdynError, ValueError):
    """An operation that needs a nonempty tableau got the empty one."""


class EmptyTrace(TabdynError, ValueError):
    """A growth trace with no steps was supplied."""


class EmptySample(TabdynError, ValueError):
    """An empirical sample with no observations was supplied."""


class NTooLarge(TabdynError, ValueError):
    """Exact enumeration was requested beyond its supported size."""


class WindowTooSmall(TabdynError, ValueError):
    """A particle window does not cover the support of the diagram."""


class DomainError(TabdynError, ValueError):
    """A numeric argument lies outside the function's domain."""


class Exhausted(TabdynError, ValueError):
    """Too few entries remain to continue an iterated operation."""


class IoError(TabdynError, OSError):
    """Reading or writing an artifact file failed."""


class UnknownKey(TabdynError, ValueError):
    """A configuration file contains a key that is not recognized."""


class MalformedLine(TabdynError, ValueError):
    """A configuration line is not of the form key=value with a valid value."""
